import abc
from collections.abc import Iterable, Iterator
from dataclasses import asdict, dataclass
from enum import StrEnum
from itertools import product
from typing import ClassVar

from apps.polyring.modulus import CyclotomicModulus

from .exceptions import MalformedInstanceError, ParameterConstraintError
from .expressions import Side


class Status(StrEnum):
    PROVEN = "PROVEN"
    CONJECTURE = "CONJECTURE"


@dataclass(frozen=True, slots=True)
class QParams:
    n: int
    r: int = 1
    d: int = 1
    m: int = 1
    s: int | None = None
    k: int | None = None

    def as_dict(self) -> dict[str, int]:
        return {key: value for key, value in asdict(self).items() if value is not None}

    def __str__(self) -> str:
        return ", ".join(f"{key}={value}" for key, value in self.as_dict().items())


@dataclass(frozen=True, slots=True)
class QGrid:
    """Desk grid a sweep expands per statement; only the axes a statement uses are iterated."""

    n: tuple[int, ...]
    r_max: int = 1
    d: tuple[int, ...] = (1, 2)
    m: tuple[int, ...] = (1, 2, 3)
    k: tuple[int, ...] = tuple(range(7))


class CongruenceStatement(abc.ABC):
    """A q-congruence ``LHS ≡ RHS (mod ∏ Φ_N^e)`` with its hypotheses.

    Attributes:
        id: Catalog id, e.g. ``Q-MAIN1``.
        status: PROVEN statements gate exit codes, CONJECTURE statements are only reported.
        label: Short description printed by the catalog listing.
        constraint: Human-readable hypothesis on the parameters.
        modulus_text: Human-readable modulus formula.
        parameters: Which of ``n, r, d, m, s, k`` the statement uses.
        residue: ``(a, b)`` requiring ``n ≡ a (mod b)``, or ``None`` for any ``n > 1``.
    """

    id: ClassVar[str]
    status: ClassVar[Status]
    label: ClassVar[str]
    constraint: ClassVar[str]
    modulus_text: ClassVar[str]
    parameters: ClassVar[tuple[str, ...]] = ("n",)
    residue: ClassVar[tuple[int, int] | None] = None

    def admits(self, params: QParams) -> bool:
        if params.n < 2:
            return False
        if self.residue is not None and params.n % self.residue[1] != self.residue[0]:
            return False
        if params.r < 1 or params.m < 1 or params.d not in (1, 2):
            return False
        if "s" in self.parameters and (params.s is None or not 1 <= params.s < params.r):
            return False
        return "k" not in self.parameters or (params.k is not None and params.k >= 0)

    def check_constraint(self, params: QParams) -> None:
        if not self.admits(params):
            raise ParameterConstraintError(self.id, params, self.constraint)

    @abc.abstractmethod
    def modulus(self, params: QParams) -> CyclotomicModulus: ...

    @abc.abstractmethod
    def lhs(self, params: QParams) -> Side: ...

    @abc.abstractmethod
    def rhs(self, params: QParams) -> Side: ...

    def notes(self, params: QParams) -> list[str]:
        return []

    def modulus_of(self, params: QParams) -> CyclotomicModulus:
        self.check_constraint(params)
        return self.modulus(params)

    def build(self, params: QParams) -> tuple[Side, Side]:
        self.check_constraint(params)
        return self.lhs(params), self.rhs(params)

    def instances(self, grid: QGrid) -> Iterator[QParams]:
        """Admissible parameter points of ``grid``, in a deterministic order."""
        uses = set(self.parameters)
        rs = range(1, grid.r_max + 1) if "r" in uses else (1,)
        ds = grid.d if "d" in uses else (1,)
        ms = grid.m if "m" in uses else (1,)
        ks: Iterable[int | None] = grid.k if "k" in uses else (None,)
        for n, r, d, m, k in product(grid.n, rs, ds, ms, ks):
            ss: Iterable[int | None] = range(1, r) if "s" in uses else (None,)
            for s in ss:
                params = QParams(n=n, r=r, d=d, m=m, s=s, k=k)
                if self.admits(params):
                    yield params


def integral(statement_id: str, numerator: int, denominator: int, what: str) -> int:
    """``numerator / denominator`` when it is an integer, else a malformed-instance error."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise MalformedInstanceError(statement_id, f"{what} = {numerator}/{denominator} is not an integer")
    return quotient
