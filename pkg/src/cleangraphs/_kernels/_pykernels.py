"""Pure-Python scan kernels (fallback backend).

Deliberately written as plain loops so they double as the reference
implementation the compiled backend is tested against.
"""

from math import gcd


def count_square_roots_of_one(n: int) -> int:
    """Number of u in [1, n) with u*u = 1 (mod n)."""
    if n < 1:
        raise ValueError("modulus must be positive")
    count = 0
    for u in range(1, n):
        if u * u % n == 1:
            count += 1
    return count


def square_roots_of_one(n: int) -> list[int]:
    """Ascending list of u in [1, n) with u*u = 1 (mod n)."""
    if n < 1:
        raise ValueError("modulus must be positive")
    return [u for u in range(1, n) if u * u % n == 1]


def count_units(n: int) -> int:
    """Number of u in [1, n) coprime to n (Euler phi by direct scan)."""
    if n < 1:
        raise ValueError("modulus must be positive")
    count = 0
    for u in range(1, n):
        if gcd(u, n) == 1:
            count += 1
    return count
