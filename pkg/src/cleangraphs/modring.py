"""Exact arithmetic and structural enumeration for the ring Z_n.

Everything downstream (graph constructions, witnesses, sweeps) is driven
by four facts about Z_n: its prime factorization, its idempotents, its
units, and the split of the units into the self-inverse ones and
inverse-paired couples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd


def is_prime(p: int) -> bool:
    """Trial-division primality test (desk scale)."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class ModRing:
    """The ring Z_n with its factorization and CRT structure cached.

    ``factorization`` lists (prime, exponent) with strictly increasing
    primes; ``prime_power_moduli`` are the corresponding p_i**n_i whose
    product is ``modulus``.
    """

    modulus: int
    factorization: tuple[tuple[int, int], ...]
    prime_power_moduli: tuple[int, ...]
    # CRT basis: _crt_basis[i] = 1 mod prime_power_moduli[i], 0 mod the others
    _crt_basis: tuple[int, ...] = field(repr=False, default=())

    @property
    def num_primes(self) -> int:
        return len(self.factorization)

    def __str__(self) -> str:
        parts = " * ".join(
            str(p) if e == 1 else f"{p}^{e}" for p, e in self.factorization
        )
        return f"Z_{self.modulus} ({parts})"

    # -- element predicates ------------------------------------------------

    def _check_element(self, a: int) -> None:
        if not 0 <= a < self.modulus:
            raise ValueError(f"{a} is not an element of Z_{self.modulus}")

    def is_idempotent(self, a: int) -> bool:
        self._check_element(a)
        return a * a % self.modulus == a

    def is_unit(self, a: int) -> bool:
        self._check_element(a)
        return gcd(a, self.modulus) == 1

    # -- CRT ----------------------------------------------------------------

    def crt_decompose(self, a: int) -> tuple[int, ...]:
        """Residues of a modulo each prime power, in factor order."""
        self._check_element(a)
        return tuple(a % q for q in self.prime_power_moduli)

    def crt_compose(self, residues: tuple[int, ...]) -> int:
        """Inverse of :meth:`crt_decompose`."""
        if len(residues) != len(self.prime_power_moduli):
            raise ValueError("wrong number of residues")
        for r, q in zip(residues, self.prime_power_moduli):
            if not 0 <= r < q:
                raise ValueError(f"residue {r} out of range for modulus {q}")
        return sum(r * b for r, b in zip(residues, self._crt_basis)) % self.modulus

    def support(self, e: int) -> int:
        """Bitmask of coordinates where the idempotent e is 1 (mod p_i^n_i)."""
        mask = 0
        for i, q in enumerate(self.prime_power_moduli):
            if e % q == 1:
                mask |= 1 << i
        return mask

    # -- enumeration ----------------------------------------------------------

    def idempotents(self) -> tuple[int, ...]:
        """All e with e*e = e (mod n), ascending.

        Built through the CRT: an idempotent is 0 or 1 in every
        coordinate, so there are exactly 2**k of them.
        """
        values = []
        for mask in range(1 << self.num_primes):
            residues = tuple(
                1 if mask >> i & 1 else 0 for i in range(self.num_primes)
            )
            values.append(self.crt_compose(residues))
        return tuple(sorted(values))

    def nonzero_idempotents(self) -> tuple[int, ...]:
        return tuple(e for e in self.idempotents() if e != 0)

    def nontrivial_idempotents(self) -> tuple[int, ...]:
        return tuple(e for e in self.idempotents() if e not in (0, 1))

    def units(self) -> tuple[int, ...]:
        """All u coprime to n, ascending, enumerated coordinate-wise."""
        coords: list[tuple[int, ...]] = [()]
        for (p, _), q in zip(self.factorization, self.prime_power_moduli):
            local = [r for r in range(q) if r % p != 0]
            coords = [c + (r,) for c in coords for r in local]
        return tuple(sorted(self.crt_compose(c) for c in coords))

    def unit_count(self) -> int:
        """Euler phi from the factorization."""
        return reduce(
            lambda acc, pe: acc * (pe[0] ** pe[1] - pe[0] ** (pe[1] - 1)),
            self.factorization,
            1,
        )

    def inverse(self, u: int) -> int:
        return pow(u, -1, self.modulus)

    def annihilating_idempotent_count(self, e: int) -> int:
        """Number of nonzero idempotents f with e*f = 0 (mod n).

        e*f = 0 exactly when the supports of e and f are disjoint, so f
        ranges over the nonempty subsets of the coordinates where e is 0.
        """
        if not self.is_idempotent(e):
            raise ValueError(f"{e} is not idempotent mod {self.modulus}")
        mask = self.support(e)
        zero_coords = self.num_primes - bin(mask).count("1")
        return (1 << zero_coords) - 1

    def clean_decompositions(self, a: int) -> list[tuple[int, int]]:
        """All (e, u) with e idempotent, u a unit, e + u = a (mod n)."""
        self._check_element(a)
        out = []
        for e in self.idempotents():
            u = (a - e) % self.modulus
            if gcd(u, self.modulus) == 1:
                out.append((e, u))
        return out

    def unit_partition(self) -> UnitPartition:
        return unit_partition(self)


@dataclass(frozen=True)
class UnitPartition:
    """Units of Z_n split into self-inverse ones and inverse-paired couples.

    ``ordered_units()`` lays them out as u_1..u_k with the t self-inverse
    units first and the tail arranged so that u_i * u_{k+t+1-i} = 1 for
    every i in [t+1, k].  Every isomorphism witness indexes units through
    this layout.
    """

    modulus: int
    self_inverse: tuple[int, ...]
    paired: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.self_inverse)

    @property
    def k(self) -> int:
        return len(self.self_inverse) + len(self.paired)

    def ordered_units(self) -> tuple[int, ...]:
        return self.self_inverse + self.paired

    def mirror(self, i: int) -> int:
        """Partner index of the 1-based unit index i under the pairing."""
        if i <= self.t:
            return i
        return self.k + self.t + 1 - i

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """The inverse couples (u, u^-1) in layout order."""
        half = len(self.paired) // 2
        return tuple(
            (self.paired[j], self.paired[len(self.paired) - 1 - j])
            for j in range(half)
        )


def factorize(n: int) -> ModRing:
    """Factor n by trial division and build the ring Z_n."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    m = n
    factors: list[tuple[int, int]] = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))

    prime_powers = tuple(p**e for p, e in factors)
    basis = []
    for q in prime_powers:
        rest = n // q
        basis.append(rest * pow(rest, -1, q) % n)
    return ModRing(n, tuple(factors), prime_powers, tuple(basis))


def self_inverse_closed_form(p: int, n: int) -> tuple[int, ...]:
    """Solutions of a*a = 1 (mod p**n) in closed form.

    {1, p^n - 1} for odd p; {1, 2^(n-1)-1, 2^(n-1)+1, 2^n-1} for p = 2
    with n >= 3.  The moduli 2 and 4 fall outside both shapes and are
    tabulated explicitly.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("exponent must be >= 1")
    q = p**n
    if q == 2:
        return (1,)
    if q == 4:
        return (1, 3)
    if p == 2:
        return tuple(sorted({1, q // 2 - 1, q // 2 + 1, q - 1}))
    return (1, q - 1)


def unit_partition(ring: ModRing) -> UnitPartition:
    """Split U(Z_n), pairing the non-self-inverse units deterministically.

    The tail is filled greedily: the smallest unplaced element of the
    non-self-inverse part takes the lowest free front slot and its
    inverse takes the matching slot from the back, which realizes
    u_i * u_{k+t+1-i} = 1 while keeping the layout reproducible.
    """
    n = ring.modulus
    units = ring.units()
    self_inverse = tuple(u for u in units if u * u % n == 1)
    rest = [u for u in units if u * u % n != 1]

    front: list[int] = []
    back: list[int] = []
    remaining = set(rest)
    for u in rest:
        if u not in remaining:
            continue
        v = pow(u, -1, n)
        remaining.discard(u)
        remaining.discard(v)
        front.append(u)
        back.append(v)
    paired = tuple(front) + tuple(reversed(back))
    return UnitPartition(n, self_inverse, paired)
