from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .cyclotomic import cyclotomic
from .exceptions import InvalidModulusError
from .intpoly import IntPoly


@dataclass(frozen=True, slots=True)
class CyclotomicModulus:
    """Product ∏ Φ_N^e with strictly increasing indices N ≥ 2 and exponents e ≥ 1."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        factors = tuple((int(n), int(e)) for n, e in self.factors)
        object.__setattr__(self, "factors", factors)
        if not factors:
            raise InvalidModulusError(factors, "at least one factor is required")
        indices = [n for n, _ in factors]
        if any(n < 2 for n in indices):
            raise InvalidModulusError(factors, "indices must be at least 2")
        if any(e < 1 for _, e in factors):
            raise InvalidModulusError(factors, "exponents must be positive")
        if any(a >= b for a, b in zip(indices, indices[1:], strict=False)):
            raise InvalidModulusError(factors, "indices must be strictly increasing")

    @classmethod
    def collect(cls, pairs: Iterable[tuple[int, int]]) -> CyclotomicModulus:
        """Merge repeated indices by adding exponents, then sort."""
        merged: dict[int, int] = {}
        for n, e in pairs:
            merged[n] = merged.get(n, 0) + e
        return cls(tuple(sorted(merged.items())))

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def describe(self) -> str:
        return "·".join(f"Φ_{n}" if e == 1 else f"Φ_{n}^{e}" for n, e in self.factors)

    def polynomial(self) -> IntPoly:
        result = IntPoly.one()
        for n, e in self.factors:
            result = result * cyclotomic(n) ** e
        return result
