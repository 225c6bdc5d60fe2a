# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels. Same contracts as ``_pykernels``."""

MAX_MODULUS = 2 ** 31  # u*u must stay below 2**63


cdef inline long long _gcd(long long a, long long b) noexcept nogil:
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef long long _check(n) except -1:
    cdef long long m = n
    if m < 1:
        raise ValueError("modulus must be positive")
    if m >= MAX_MODULUS:
        raise OverflowError("modulus too large for compiled kernel")
    return m


def count_square_roots_of_one(n):
    """Number of u in [1, n) with u*u = 1 (mod n)."""
    cdef long long m = _check(n)
    cdef long long u, count = 0
    with nogil:
        for u in range(1, m):
            if u * u % m == 1:
                count += 1
    return count


def square_roots_of_one(n):
    """Ascending list of u in [1, n) with u*u = 1 (mod n)."""
    cdef long long m = _check(n)
    cdef long long u
    out = []
    for u in range(1, m):
        if u * u % m == 1:
            out.append(u)
    return out


def count_units(n):
    """Number of u in [1, n) coprime to n (Euler phi by direct scan)."""
    cdef long long m = _check(n)
    cdef long long u, count = 0
    with nogil:
        for u in range(1, m):
            if _gcd(u, m) == 1:
                count += 1
    return count
