import abc
from collections.abc import Iterator
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import product
from math import prod
from typing import ClassVar

from django.conf import settings
from sympy import isprime

from apps.statements.base import Status
from apps.statements.exceptions import ParameterConstraintError
from apps.summand.evaluation import sum_classical
from apps.summand.families import get_classical


@dataclass(frozen=True, slots=True)
class PParams:
    p: int
    r: int = 1
    d: int = 1
    m: int = 1

    def as_dict(self) -> dict[str, int]:
        return asdict(self)

    def __str__(self) -> str:
        return ", ".join(f"{key}={value}" for key, value in self.as_dict().items())


@dataclass(frozen=True, slots=True)
class PGrid:
    p: tuple[int, ...]
    r_max: int = 1
    d: tuple[int, ...] = (1, 2)
    m: tuple[int, ...] = (1, 2, 3)


@dataclass(frozen=True, slots=True)
class Target:
    """A modulus ``p^exponent``; informational targets are recorded but never gate."""

    exponent: int
    informational: bool = False


@dataclass(frozen=True, slots=True)
class Sides:
    """``lhs ≡ rhs`` with ``rhs`` multiplied by ``−Γ_p(1/4)⁴`` when ``gamma`` is set."""

    lhs: Fraction
    rhs: Fraction
    gamma: bool = False


def truncated(family: str, upper: int) -> Fraction:
    """``Σ_{k=0}^{upper}`` of a classical family, exact; empty for ``upper < 0``."""
    return sum_classical(get_classical(family), 0, upper)


def rising(a: Fraction, count: int) -> Fraction:
    """The rising factorial ``(a)_count``."""
    return prod((a + j for j in range(count)), start=Fraction(1))


class SuperStatement(abc.ABC):
    """A classical supercongruence ``LHS ≡ RHS (mod p^e)`` over the rationals.

    Attributes:
        id: Catalog id, e.g. ``P-H2``.
        status: PROVEN statements gate exit codes, CONJECTURE statements are only reported.
        label: Short description printed by the catalog listing.
        constraint: Human-readable hypothesis on the prime.
        modulus_text: Human-readable modulus, informational strengths in brackets.
        parameters: Which of ``p, r, d, m`` the statement uses.
        residue: ``(a, b)`` requiring ``p ≡ a (mod b)``, or ``None``.
        min_prime: Smallest admissible prime.
        min_r: Smallest admissible ``r``.
    """

    id: ClassVar[str]
    status: ClassVar[Status] = Status.PROVEN
    label: ClassVar[str]
    constraint: ClassVar[str]
    modulus_text: ClassVar[str]
    parameters: ClassVar[tuple[str, ...]] = ("p", "r")
    residue: ClassVar[tuple[int, int] | None] = None
    min_prime: ClassVar[int] = 3
    min_r: ClassVar[int] = 1

    def truncation(self, params: PParams) -> int:
        """Length of the longest truncated sum, compared against ``QDWORK_MAX_TRUNCATION``."""
        return params.p**params.r

    def admits(self, params: PParams) -> bool:
        p = params.p
        if p < self.min_prime or not isprime(p):
            return False
        if self.residue is not None and p % self.residue[1] != self.residue[0]:
            return False
        if params.r < self.min_r or params.m < 1 or params.d not in (1, 2):
            return False
        return self.truncation(params) <= settings.QDWORK_MAX_TRUNCATION

    def check_constraint(self, params: PParams) -> None:
        if not self.admits(params):
            raise ParameterConstraintError(self.id, params, self.constraint)

    @abc.abstractmethod
    def targets(self, params: PParams) -> list[Target]: ...

    @abc.abstractmethod
    def sides(self, params: PParams) -> Sides: ...

    def notes(self, params: PParams) -> list[str]:
        return []

    def evaluate(self, params: PParams) -> Sides:
        self.check_constraint(params)
        return self.sides(params)

    def instances(self, grid: PGrid) -> Iterator[PParams]:
        uses = set(self.parameters)
        rs = range(1, grid.r_max + 1) if "r" in uses else (1,)
        ds = grid.d if "d" in uses else (1,)
        ms = grid.m if "m" in uses else (1,)
        for p, r, d, m in product(grid.p, rs, ds, ms):
            params = PParams(p=p, r=r, d=d, m=m)
            if self.admits(params):
                yield params
