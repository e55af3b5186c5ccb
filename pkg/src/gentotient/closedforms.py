"""Closed-form counts of maximal-order elements, independent of enumeration.

Nothing in this module multiplies group elements.  The formulas work from
integer parameters alone, so each one can be cross-checked against the
enumeration oracle in :mod:`gentotient.core`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .numtheory import euler_phi, factorize, is_prime


# ---------------------------------------------------------------------------
# integer partitions / cycle types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    """Multiset of positive integers, stored as a nonincreasing tuple."""

    parts: tuple

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError(f"parts must be nonincreasing: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def lcm(self) -> int:
        out = 1
        for p in set(self.parts):
            out = math.lcm(out, p)
        return out

    def is_even(self) -> bool:
        """Parity of a permutation with this cycle type (1-cycles included)."""
        return (self.n - len(self.parts)) % 2 == 0


def _partition_tuples(n: int, max_part: int = None) -> Iterator[tuple]:
    """Partitions of n as nonincreasing tuples, reverse-lexicographic order.

    Streamed, never materialized; p(40) = 37338 keeps this comfortable.
    """
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in _partition_tuples(n - first, first):
            yield (first,) + rest


def partitions(n: int) -> Iterator[Partition]:
    """Stream the partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    return (Partition(t) for t in _partition_tuples(n))


def _cycle_type_count(n_factorial: int, parts: tuple) -> int:
    """Permutations of S_n with the given cycle type: n! / prod k^(m_k) m_k!."""
    centralizer = 1
    mult: dict[int, int] = {}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    for k, m in mult.items():
        centralizer *= k**m * math.factorial(m)
    return n_factorial // centralizer


@lru_cache(maxsize=None)
def symmetric_order_spectrum(n: int) -> dict[int, int]:
    """Element count per order in S_n, summed over cycle types."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    nf = math.factorial(n)
    out: dict[int, int] = {}
    for parts in _partition_tuples(n):
        d = 1
        for p in set(parts):
            d = math.lcm(d, p)
        out[d] = out.get(d, 0) + _cycle_type_count(nf, parts)
    return out


@lru_cache(maxsize=None)
def alternating_order_spectrum(n: int) -> dict[int, int]:
    """Element count per order in A_n (even cycle types only)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    nf = math.factorial(n)
    out: dict[int, int] = {}
    for parts in _partition_tuples(n):
        if (n - len(parts)) % 2 != 0:
            continue
        d = 1
        for p in set(parts):
            d = math.lcm(d, p)
        out[d] = out.get(d, 0) + _cycle_type_count(nf, parts)
    return out


def count_order_symmetric(n: int, m: int) -> int:
    """Number of permutations in S_n of order exactly m."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    return symmetric_order_spectrum(n).get(m, 0)


def count_order_alternating(n: int, m: int) -> int:
    """Number of even permutations in A_n of order exactly m."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    return alternating_order_spectrum(n).get(m, 0)


def exp_symmetric(n: int) -> int:
    """Exponent of S_n: lcm(1, 2, ..., n)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return math.lcm(*range(1, n + 1))


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def exp_alternating(n: int) -> int:
    """Exponent of A_n.

    Odd parts agree with exp(S_n); the 2-part drops by one exactly when
    n is a power of two or one more than a power of two.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    e = exp_symmetric(n)
    if _is_power_of_two(n) or _is_power_of_two(n - 1):
        return e // 2
    return e


def phi_symmetric(n: int) -> int:
    """Maximal-order element count in S_n; 0 for every n >= 3."""
    return count_order_symmetric(n, exp_symmetric(n))


def phi_alternating(n: int) -> int:
    """Maximal-order element count in A_n; 0 for every n >= 4."""
    return count_order_alternating(n, exp_alternating(n))


# ---------------------------------------------------------------------------
# abelian, hamiltonian and dihedral formulas
# ---------------------------------------------------------------------------


def phi_abelian_p(p: int, alphas: Sequence[int]) -> int:
    """Maximal-order element count in Z_(p^a1) x ... x Z_(p^ar), a1 <= ... <= ar.

    With s the first position where the maximal exponent begins, the count is
    |G| * (1 - 1/p^(r-s+1)): an element attains order p^(ar) exactly when at
    least one of the r-s+1 top coordinates is a unit.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    alphas = list(alphas)
    if not alphas:
        raise ValueError("empty exponent list")
    if alphas != sorted(alphas) or alphas[0] < 1:
        raise ValueError(f"exponents must be nondecreasing positive: {alphas}")
    r = len(alphas)
    s = alphas.index(alphas[-1]) + 1  # 1-based start of the top block
    size = p ** sum(alphas)
    top = p ** (r - s + 1)
    return size // top * (top - 1)


def phi_abelian(primary_type: Sequence[tuple[int, Sequence[int]]]) -> int:
    """Maximal-order element count of an abelian group, one factor per prime."""
    out = 1
    seen = set()
    for p, alphas in primary_type:
        if p in seen:
            raise ValueError(f"prime {p} listed twice")
        seen.add(p)
        out *= phi_abelian_p(p, sorted(alphas))
    return out


def phi_hamiltonian(n: int, odd_type: Sequence[tuple[int, Sequence[int]]]) -> int:
    """Maximal-order element count of Q_8 x Z_2^n x A: 3 * 2^(n+1) * phi(A)."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    phi_a = phi_abelian(odd_type) if odd_type else 1
    for p, _ in odd_type:
        if p == 2:
            raise ValueError("A must have odd order")
    return 3 * 2 ** (n + 1) * phi_a


def phi_dihedral(n: int) -> int:
    """Maximal-order element count of the dihedral group of order 2n.

    For n >= 3 the rotation subgroup is the unique cyclic subgroup of order n
    and everything outside it is an involution, giving 0 for odd n and phi(n)
    for even n.  n = 2 is the Klein four-group, where all three involutions
    attain the exponent.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n == 2:
        return 3
    if n % 2 == 1:
        return 0
    return euler_phi(n)


def exp_dihedral(n: int) -> int:
    """Exponent of the dihedral group of order 2n: 2n for odd n, n for even."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return 2 * n if n % 2 == 1 else n


# ---------------------------------------------------------------------------
# metacyclic formulas (power-formula based, no group arithmetic)
# ---------------------------------------------------------------------------


def _validate_metacyclic(m: int, n: int, s: int, r: int) -> tuple[int, int, int, int]:
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got ({m}, {n})")
    s %= m
    r %= m
    if math.gcd(m, r) != 1:
        raise ValueError(f"need gcd(m, r) = 1, got gcd({m}, {r})")
    if pow(r, n, m) != 1 % m:
        raise ValueError(f"need r^n = 1 mod m: {r}^{n} != 1 mod {m}")
    if (s * (r - 1)) % m != 0:
        raise ValueError(f"need s(r-1) = 0 mod m: ({m}, {n}, {s}, {r}) rejected")
    return m, n, s, r


def metacyclic_exponent(m: int, n: int, s: int, r: int) -> int:
    """Exponent of <a, b | a^m = 1, b^n = a^s, b^-1 a b = a^r>.

    b has order m*n/gcd(m, s), and the exponent is lcm(o(a), o(b)) =
    (m/gcd(m, s)) * lcm(gcd(m, s), n).  The split case s = 0 reduces to
    lcm(m, n) since gcd(m, 0) = m.
    """
    m, n, s, r = _validate_metacyclic(m, n, s, r)
    g = math.gcd(m, s)
    return (m // g) * math.lcm(g, n)


def metacyclic_order_profile(m: int, n: int, s: int, r: int) -> dict[int, int]:
    """Element count per order from the normal-form power formula.

    For x = b^i a^j with u = n/gcd(i, n) and q = i/gcd(i, n):
    x^u = a^(s*q + j*(1 + r^i + ... + r^(i(u-1)))), so
    o(x) = u * m / gcd(m, s*q + j*S) with S the geometric sum mod m.
    Pure integer arithmetic; no group elements are multiplied.
    """
    m, n, s, r = _validate_metacyclic(m, n, s, r)
    counts: dict[int, int] = {}
    for i in range(n):
        g = math.gcd(i, n)
        u = n // g
        q = i // g
        ri = pow(r, i, m) if m > 1 else 0
        total, term = 0, 1 % m
        for _ in range(u):
            total = (total + term) % m
            term = (term * ri) % m
        w = (s * q) % m
        for _ in range(m):
            d = u * (m // math.gcd(m, w))
            counts[d] = counts.get(d, 0) + 1
            w = (w + total) % m
    return counts


def metacyclic_attains_exponent(m: int, n: int, s: int, r: int) -> bool:
    """True when some normal-form element has order equal to the exponent."""
    profile = metacyclic_order_profile(m, n, s, r)
    exp = 1
    for d in profile:
        exp = math.lcm(exp, d)
    return exp in profile


def metacyclic_divisibility_criterion(m: int, n: int, s: int, r: int) -> bool:
    """The divisibility test n | gcd(m, s); split case reads n | m.

    Sufficient for exponent attainment: it forces exp(G) = m, attained by a.
    Not necessary in general, e.g. (m, n, s, r) = (8, 4, 2, 5) where b itself
    has order 16 = exp(G) while gcd(8, 2) = 2 is not divisible by 4.
    """
    m, n, s, r = _validate_metacyclic(m, n, s, r)
    return math.gcd(m, s) % n == 0


# ---------------------------------------------------------------------------
# helpers used by sweeps
# ---------------------------------------------------------------------------


def abelian_types_up_to(bound: int):
    """Every abelian primary type with group order <= bound, deterministically.

    Yields (order, type) pairs; the trivial group is skipped.
    """
    for n in range(2, bound + 1):
        per_prime = []
        for p, a in sorted(factorize(n).items()):
            per_prime.append((p, [list(t) for t in _partition_tuples(a)]))
        combos = [[]]
        for p, parts_list in per_prime:
            combos = [
                c + [(p, sorted(parts))] for c in combos for parts in parts_list
            ]
        for combo in combos:
            yield n, combo


def valid_metacyclic_presentations(max_m: int, max_n: int):
    """All (m, n, s, r) accepted by the metacyclic constructor, in order."""
    for m in range(1, max_m + 1):
        rs = [r for r in range(m) if math.gcd(m, r) == 1]
        for n in range(1, max_n + 1):
            for r in rs:
                if pow(r, n, m) != 1 % m:
                    continue
                step = m // math.gcd(m, (r - 1) % m)
                for s in range(0, m, step):
                    yield m, n, s, r
