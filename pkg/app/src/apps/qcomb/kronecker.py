from sympy.ntheory import jacobi_symbol


def kronecker(a: int, b: int) -> int:
    """Kronecker symbol ``(a/b)`` for all integers, including even, zero and negative ``b``."""
    if b == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if b < 0:
        b = -b
        if a < 0:
            result = -result
    twos = (b & -b).bit_length() - 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 and a % 8 in (3, 5):
            result = -result
        b >>= twos
    if b == 1:
        return result
    return result * jacobi_symbol(a % b, b)
