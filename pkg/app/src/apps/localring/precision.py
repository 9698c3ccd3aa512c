from collections.abc import Iterable
from itertools import chain
from typing import Protocol


class DenominatorValued(Protocol):
    def denominator_valuation(self, index: int) -> int:
        """Largest Φ_N-valuation of any denominator met while evaluating, counted without arithmetic."""
        ...


def precision_plan(lhs: Iterable[DenominatorValued], rhs: Iterable[DenominatorValued], index: int, exponent: int) -> int:
    """Working exponent ``w = e + B`` so that both sides come out correct modulo Φ_N^e.

    ``B`` is the worst denominator valuation among the terms of either side.
    """
    deficit = max((term.denominator_valuation(index) for term in chain(lhs, rhs)), default=0)
    return exponent + max(deficit, 0)
