"""Both sides of a congruence as sums of products of atoms, evaluable densely or at one Φ_N.

Each atom answers four questions: its exact rational function, its localized image at a given working
exponent, the worst Φ_N-valuation of any denominator it meets, and a bound on ``deg num + deg den``.
"""

from __future__ import annotations

import abc
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from operator import mul

from apps.localring.rings import divides_binomial
from apps.localring.values import (
    LocalValue,
    local_constant,
    local_monomial,
    local_pochhammer,
    local_q_integer,
    pochhammer_valuation,
)
from apps.polyring.ratpoly import RatPoly
from apps.qcomb.qseries import PochFactorSpec, q_integer, q_pochhammer
from apps.summand.evaluation import degree_bound, denominator_valuation, sum_classical, sum_local, sum_q
from apps.summand.specs import ClassicalTermSpec, QSummandSpec


class Atom(abc.ABC):
    @abc.abstractmethod
    def dense(self) -> RatPoly: ...

    @abc.abstractmethod
    def local(self, index: int, working: int) -> LocalValue: ...

    def denominator_valuation(self, index: int) -> int:
        return 0

    def degree(self) -> int:
        return 0


@dataclass(frozen=True)
class Constant(Atom):
    value: Fraction

    def dense(self) -> RatPoly:
        return RatPoly.of(self.value)

    def local(self, index: int, working: int) -> LocalValue:
        return local_constant(self.value, index, working)

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Monomial(Atom):
    exponent: int

    def dense(self) -> RatPoly:
        return RatPoly.monomial(self.exponent)

    def local(self, index: int, working: int) -> LocalValue:
        return local_monomial(self.exponent, index, working)

    def degree(self) -> int:
        return abs(self.exponent)

    def __str__(self) -> str:
        return f"q^{self.exponent}"


@dataclass(frozen=True)
class QInt(Atom):
    """``[n]_{q^base}``."""

    n: int
    base: int = 1

    def dense(self) -> RatPoly:
        return RatPoly(q_integer(self.n, self.base))

    def local(self, index: int, working: int) -> LocalValue:
        return local_q_integer(self.n, self.base, index, working)

    def denominator_valuation(self, index: int) -> int:
        return 1 if divides_binomial(1, self.base, index) else 0

    def degree(self) -> int:
        return self.base * (self.n - 1)

    def __str__(self) -> str:
        return f"[{self.n}]" if self.base == 1 else f"[{self.n}]_q^{self.base}"


@dataclass(frozen=True)
class Poch(Atom):
    """``(sign·q^a; q^c)_count^e``."""

    spec: PochFactorSpec
    count: int

    def dense(self) -> RatPoly:
        return q_pochhammer(self.spec, self.count)

    def local(self, index: int, working: int) -> LocalValue:
        return local_pochhammer(self.spec, self.count, index, working)

    def denominator_valuation(self, index: int) -> int:
        return max(0, -pochhammer_valuation(self.spec, self.count, index))

    def degree(self) -> int:
        return abs(self.spec.exponent) * sum(self.spec.exponents(0, self.count))

    def __str__(self) -> str:
        s = self.spec
        base = f"{'-' if s.sign < 0 else ''}q^{s.offset}"
        power = "" if s.exponent == 1 else f"^{s.exponent}"
        return f"({base};q^{s.step})_{self.count}{power}"


@dataclass(frozen=True)
class QSum(Atom):
    """``Σ_{k=lower}^{upper}`` of a q-family at ``q^scale``; localized with absolute precision ``working − B``."""

    spec: QSummandSpec
    upper: int
    scale: int = 1
    lower: int = 0

    def dense(self) -> RatPoly:
        return sum_q(self.spec, self.lower, self.upper, self.scale)

    def local(self, index: int, working: int) -> LocalValue:
        return sum_local(self.spec, self.lower, self.upper, self.scale, index, working)

    def denominator_valuation(self, index: int) -> int:
        return denominator_valuation(self.spec, self.upper, self.scale, index)

    def degree(self) -> int:
        return degree_bound(self.spec, self.upper, self.scale)

    def __str__(self) -> str:
        scale = "" if self.scale == 1 else f"(q^{self.scale})"
        return f"Σ_{{k={self.lower}}}^{{{self.upper}}} {self.spec.name}{scale}"


@dataclass(frozen=True)
class ClassicalSum(Atom):
    """``Σ_{k=lower}^{upper}`` of a classical family, a rational constant."""

    spec: ClassicalTermSpec
    upper: int
    lower: int = 0

    @property
    def value(self) -> Fraction:
        return sum_classical(self.spec, self.lower, self.upper)

    def dense(self) -> RatPoly:
        return RatPoly.of(self.value)

    def local(self, index: int, working: int) -> LocalValue:
        return local_constant(self.value, index, working)

    def __str__(self) -> str:
        return f"Σ_{{k={self.lower}}}^{{{self.upper}}} {self.spec.name}"


@dataclass(frozen=True)
class Term:
    factors: tuple[Atom, ...]

    def dense(self) -> RatPoly:
        return reduce(mul, (f.dense() for f in self.factors), RatPoly.of(1))

    def local(self, index: int, working: int) -> LocalValue:
        value = local_constant(1, index, working)
        for factor in self.factors:
            value = value * factor.local(index, working)
        return value

    def denominator_valuation(self, index: int) -> int:
        return sum(f.denominator_valuation(index) for f in self.factors)

    def degree(self) -> int:
        return sum(f.degree() for f in self.factors)

    def __str__(self) -> str:
        return "·".join(str(f) for f in self.factors) or "1"


@dataclass(frozen=True)
class Side:
    """A sum of terms; the empty side is zero."""

    terms: tuple[Term, ...] = ()

    @classmethod
    def of(cls, *factors: Atom) -> Side:
        return cls((Term(factors),))

    @classmethod
    def zero(cls) -> Side:
        return cls(())

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def dense(self) -> RatPoly:
        return sum((t.dense() for t in self.terms), RatPoly.of(0))

    def local(self, index: int, working: int) -> LocalValue:
        if not self.terms:
            return LocalValue.zero(index, working)
        first, *rest = self.terms
        value = first.local(index, working)
        for term in rest:
            value = value + term.local(index, working)
        return value

    def degree(self) -> int:
        return sum(t.degree() for t in self.terms)

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self.terms) or "0"
