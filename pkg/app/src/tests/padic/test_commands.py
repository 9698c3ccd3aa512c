import json
from io import StringIO

import pytest
from django.core.management import CommandError, call_command


def _run(*args) -> str:
    out = StringIO()
    call_command(*args, stdout=out, stderr=StringIO())
    return out.getvalue()


# ── gamma ──


def test_gamma_value():
    data = json.loads(_run("gamma", "--p", "5", "--x", "3", "--precision", "2").splitlines()[0])

    assert data == {"kind": "gamma", "p": 5, "x": "3", "precision": 2, "value": 23, "ms": data["ms"]}


def test_gamma_identities():
    data = json.loads(_run("gamma", "--p", "5", "--precision", "2", "--identities").splitlines()[0])

    assert data["kind"] == "gamma-identities"
    assert data["pass"] is True


@pytest.mark.parametrize(
    ("args", "message"),
    [
        (("--p", "6"), "6 is not a prime"),
        (("--p", "5", "--precision", "0"), "precision must be positive"),
        (("--p", "5", "--x", "1/5"), "has 5 in its denominator"),
        (("--p", "5", "--x", "one"), "invalid point 'one'"),
        (("--p", "2"), "unsupported for p = 2"),
    ],
)
def test_gamma_errors(args, message):
    with pytest.raises(CommandError, match=message) as exc_info:
        _run("gamma", *args)

    assert exc_info.value.returncode == 2


# ── dwork ──


def test_dwork_passes():
    output = _run("dwork", "--family", "H", "--p", "3", "--r", "2")
    data = json.loads(output.splitlines()[0])

    assert data["pass"] is True
    assert data["zdeg"] == 26
    assert "H: congruent modulo 3^2 up to z^26" in output


@pytest.mark.parametrize(
    ("args", "message"),
    [
        (("--family", "H", "--p", "4"), "4 is not a prime"),
        (("--family", "H", "--p", "3", "--r", "0"), "r must be positive"),
        (("--family", "nope", "--p", "3"), "Unknown summand family"),
        (("--family", "H", "--p", "2"), "has 2 in its denominator"),
    ],
)
def test_dwork_errors(args, message):
    with pytest.raises(CommandError, match=message) as exc_info:
        _run("dwork", *args)

    assert exc_info.value.returncode == 2
