"""Sweep configuration files.

A config is plain ``key = value`` text. ``#`` starts a comment, blank lines are ignored, and each key may
appear once. Integer lists are comma separated and accept inclusive ranges ``a..b``; ``statements`` and
``dwork_families`` are comma-separated names. See ``sweeps/README.md`` for every key.
"""

from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from apps.padic.base import PGrid
from apps.statements.base import QGrid
from apps.statements.exceptions import UnknownStatementError
from apps.summand.exceptions import UnknownFamilyError
from apps.summand.families import get_classical

from .exceptions import SweepConfigError
from .lookup import resolve

INT_LISTS = ("n", "d", "m", "k", "p", "dwork_p", "gamma_p")
NAME_LISTS = ("statements", "dwork_families")


def _int_list(text: str) -> list[int]:
    values: list[int] = []
    for item in filter(None, (part.strip() for part in text.split(","))):
        start, sep, stop = item.partition("..")
        if sep:
            values.extend(range(int(start), int(stop) + 1))
        else:
            values.append(int(item))
    return values


def _name_list(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


class SweepConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    statements: list[str] = ["all-proven"]
    n: list[int] = []
    r_max: int = Field(1, ge=1)
    d: list[int] = [1, 2]
    m: list[int] = [1, 2, 3]
    k: list[int] = list(range(7))
    p: list[int] = []
    p_r_max: int = Field(1, ge=1)
    engine: Literal["local", "dense", "both"] = "local"
    budget: int | None = Field(None, ge=1)
    jobs: int | None = Field(None, ge=1)
    out: str = "sweep"
    dwork_families: list[str] = []
    dwork_p: list[int] = []
    dwork_r_max: int = Field(1, ge=1)
    gamma_p: list[int] = []
    gamma_precision: int = Field(2, ge=1)

    @field_validator(*INT_LISTS, mode="before")
    @classmethod
    def _split_ints(cls, value: object) -> object:
        return _int_list(value) if isinstance(value, str) else value

    @field_validator(*NAME_LISTS, mode="before")
    @classmethod
    def _split_names(cls, value: object) -> object:
        return _name_list(value) if isinstance(value, str) else value

    @model_validator(mode="after")
    def _names_exist(self) -> Self:
        try:
            resolve(self.statements)
            for family in self.dwork_families:
                get_classical(family)
        except (UnknownStatementError, UnknownFamilyError) as exc:
            raise ValueError(str(exc)) from exc
        return self

    def q_grid(self) -> QGrid:
        return QGrid(n=tuple(self.n), r_max=self.r_max, d=tuple(self.d), m=tuple(self.m), k=tuple(self.k))

    def p_grid(self) -> PGrid:
        return PGrid(p=tuple(self.p), r_max=self.p_r_max, d=tuple(self.d), m=tuple(self.m))


def parse_pairs(text: str, source: str = "<config>") -> dict[str, str]:
    pairs: dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or not key:
            raise SweepConfigError(source, f"line {number}: expected 'key = value', got {raw.strip()!r}")
        if key in pairs:
            raise SweepConfigError(source, f"line {number}: duplicate key {key!r}")
        pairs[key] = value.strip()
    return pairs


def load_sweep(text: str, source: str = "<config>") -> SweepConfig:
    """Parse and validate a sweep config; every problem surfaces as ``SweepConfigError``."""
    try:
        return SweepConfig.model_validate(parse_pairs(text, source))
    except ValidationError as exc:
        problems = "; ".join(f"{'.'.join(map(str, e['loc'])) or 'config'}: {e['msg']}" for e in exc.errors())
        raise SweepConfigError(source, problems) from exc
