"""Finite-group realizations with a uniform element interface.

Each group exposes canonical hashable element payloads, exact arithmetic,
exhaustive enumeration, and an order spectrum (map from element order to the
number of elements of that order).  The generalized totient of a group is the
spectrum count at the group exponent.

Enumeration is the oracle that every closed formula in
:mod:`gentotient.closedforms` gets checked against, so the element-by-element
paths here deliberately avoid those formulas.  Structural shortcuts exist only
where the spectrum of a large group is assembled from exhaustively computed
pieces: direct products combine factor spectra by lcm-convolution, and
symmetric/alternating groups delegate to the cycle-type engine.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass
from itertools import permutations as _permutations
from itertools import product as _iproduct
from typing import Iterator, Optional, Sequence

import numpy as np

from .numtheory import (
    divisors,
    euler_phi,
    euler_phi_from_factorization,
    factorial_factorization,
    factorize,
    is_prime,
)

DEFAULT_MAX_ELEMENTS = 20_000_000
MAX_ELEMENTS_ENV = "GENTOTIENT_MAX_ELEMENTS"

PERMUTATION_ENUM_LIMIT = 10  # S_n / A_n element streams only up to here
PARTITION_ENGINE_LIMIT = 40  # S_n / A_n spectra via cycle types up to here
CAYLEY_TABLE_LIMIT = 512     # full associativity check is O(n^3)


class GroupError(Exception):
    """Base class for errors raised by group operations."""


class RealizationError(GroupError):
    """Element payload does not match the group's realization."""


class ResourceLimitError(GroupError):
    """Requested computation exceeds a configured cap."""


class IntegrityError(GroupError):
    """Internal consistency check failed (bad table, size mismatch, ...)."""


def enumeration_cap() -> int:
    """Current element-enumeration cap; override with GENTOTIENT_MAX_ELEMENTS."""
    raw = os.environ.get(MAX_ELEMENTS_ENV)
    if raw is None:
        return DEFAULT_MAX_ELEMENTS
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{MAX_ELEMENTS_ENV} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{MAX_ELEMENTS_ENV} must be positive, got {value}")
    return value


def _require_enumerable(group: "Group") -> None:
    cap = enumeration_cap()
    if group.order > cap:
        raise ResourceLimitError(
            f"|{group.name}| = {group.order} exceeds the enumeration cap of "
            f"{cap} elements (set {MAX_ELEMENTS_ENV} to raise it)"
        )


@dataclass(frozen=True)
class OrderSpectrum:
    """Exact map from element order to the count of elements of that order."""

    entries: dict
    group_order: int

    def __post_init__(self):
        self.check()

    def check(self) -> None:
        """Sanity constraints every genuine spectrum satisfies."""
        entries = self.entries
        if sum(entries.values()) != self.group_order:
            raise IntegrityError(
                f"spectrum counts sum to {sum(entries.values())}, "
                f"expected |G| = {self.group_order}"
            )
        if entries.get(1) != 1:
            raise IntegrityError("spectrum must contain exactly one identity")
        for d, count in entries.items():
            if d < 1 or count < 0:
                raise IntegrityError(f"bad spectrum entry {d}: {count}")
            if count % euler_phi(d) != 0:
                raise IntegrityError(
                    f"count {count} at order {d} is not a multiple of phi({d})"
                )
            for e in divisors(d):
                if e not in entries:
                    raise IntegrityError(
                        f"order {d} present but its divisor {e} is missing"
                    )

    def exponent(self) -> int:
        out = 1
        for d in self.entries:
            out = math.lcm(out, d)
        return out

    def phi(self) -> int:
        """Count of elements whose order equals the exponent (0 if unattained)."""
        return self.entries.get(self.exponent(), 0)

    def orders(self) -> list[int]:
        return sorted(self.entries)

    def count(self, d: int) -> int:
        return self.entries.get(d, 0)


def lcm_convolve(a: OrderSpectrum, b: OrderSpectrum) -> OrderSpectrum:
    """Spectrum of a direct product from its factor spectra.

    N_d(G1 x G2) = sum over pairs (e, f) with lcm(e, f) = d of N_e * N_f.
    """
    out: dict[int, int] = {}
    for d1, c1 in a.entries.items():
        for d2, c2 in b.entries.items():
            d = math.lcm(d1, d2)
            out[d] = out.get(d, 0) + c1 * c2
    return OrderSpectrum(out, a.group_order * b.group_order)


@dataclass(frozen=True)
class PhiReport:
    """Bundle of the quantities read off a group's order spectrum."""

    order: int
    exponent: int
    phi_g: int
    k: int                      # cyclic subgroups of maximal order
    pi_e: tuple                 # sorted element orders
    in_class_c: bool            # exponent attained by some element
    phi_of_order: int
    phi_of_exp: int
    eq_order_flag: bool         # phi(G) == phi(|G|)
    eq_exp_flag: bool           # k == 1, i.e. phi(G) == phi(exp G) nontrivially

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "exponent": self.exponent,
            "phi": self.phi_g,
            "k": self.k,
            "element_orders": list(self.pi_e),
            "in_class_c": self.in_class_c,
            "phi_of_order": self.phi_of_order,
            "phi_of_exponent": self.phi_of_exp,
            "phi_equals_phi_of_order": self.eq_order_flag,
            "phi_equals_phi_of_exponent": self.eq_exp_flag,
        }


class Group:
    """Base class: immutable finite group with canonical element payloads."""

    kind = "group"

    def __init__(self, order: int, name: str):
        self.order = order
        self.name = name
        self._spectrum: Optional[OrderSpectrum] = None

    # -- realization interface -------------------------------------------

    def identity(self):
        raise NotImplementedError

    def multiply(self, x, y):
        raise NotImplementedError

    def validate_element(self, x) -> None:
        raise NotImplementedError

    def elements(self) -> Iterator:
        raise NotImplementedError

    def is_abelian(self) -> bool:
        raise NotImplementedError

    def key(self) -> tuple:
        """Canonical construction key, used for deterministic ordering."""
        raise NotImplementedError

    def order_factorization(self) -> dict[int, int]:
        return factorize(self.order)

    # -- generic machinery -------------------------------------------------

    def power(self, x, k: int):
        """x^k for k >= 0 by binary exponentiation."""
        if k < 0:
            raise ValueError("negative powers not supported; invert explicitly")
        acc = self.identity()
        base = x
        while k:
            if k & 1:
                acc = self.multiply(acc, base)
            base = self.multiply(base, base)
            k >>= 1
        return acc

    def inverse(self, x):
        return self.power(x, self.element_order(x) - 1)

    def element_order(self, x) -> int:
        """Least t >= 1 with x^t = identity.

        Default: start from the annihilating exponent |G| and strip prime
        factors while the corresponding power still hits the identity.
        """
        t = self.order
        e = self.identity()
        for p in self.order_factorization():
            while t % p == 0 and self.power(x, t // p) == e:
                t //= p
        return t

    def spectrum(self) -> OrderSpectrum:
        if self._spectrum is None:
            self._spectrum = self._compute_spectrum()
        return self._spectrum

    def _compute_spectrum(self) -> OrderSpectrum:
        return spectrum_by_enumeration(self)

    def __repr__(self):
        return f"<{self.kind} {self.name} of order {self.order}>"


# ---------------------------------------------------------------------------
# realizations
# ---------------------------------------------------------------------------


def _cyclic_order_counts(n: int) -> dict[int, int]:
    # order of residue a in Z_n is n / gcd(a, n); evaluated for every residue
    residues = np.arange(n, dtype=np.int64)
    orders = n // np.gcd(residues, n)
    values, counts = np.unique(orders, return_counts=True)
    return {int(d): int(c) for d, c in zip(values, counts)}


class CyclicGroup(Group):
    """Z_n with additive residues 0..n-1."""

    kind = "cyclic"

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"cyclic group order must be >= 1, got {n}")
        super().__init__(n, f"Z{n}")
        self.n = n

    def identity(self):
        return 0

    def multiply(self, x, y):
        return (x + y) % self.n

    def validate_element(self, x):
        if not isinstance(x, int) or not 0 <= x < self.n:
            raise RealizationError(f"{x!r} is not a residue mod {self.n}")

    def elements(self):
        _require_enumerable(self)
        return iter(range(self.n))

    def element_order(self, x):
        return self.n // math.gcd(x, self.n)

    def is_abelian(self):
        return True

    def key(self):
        return ("cyclic", self.n)

    def _compute_spectrum(self):
        _require_enumerable(self)
        return OrderSpectrum(_cyclic_order_counts(self.n), self.n)


class AbelianGroup(Group):
    """Direct sum of cyclic groups of prime-power order, as residue tuples."""

    kind = "abelian"

    def __init__(self, primary_type: Sequence[tuple[int, Sequence[int]]], kind=None, name=None):
        if not primary_type:
            raise ValueError("abelian type must name at least one cyclic factor")
        normalized = []
        seen = set()
        for p, alphas in sorted(primary_type):
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            if p in seen:
                raise ValueError(f"prime {p} listed twice")
            seen.add(p)
            alphas = tuple(sorted(int(a) for a in alphas))
            if not alphas or alphas[0] < 1:
                raise ValueError(f"exponents for prime {p} must be positive")
            normalized.append((p, alphas))
        self.primary_type = tuple(normalized)
        self.moduli = tuple(p**a for p, alphas in self.primary_type for a in alphas)
        order = math.prod(self.moduli)
        if name is None:
            name = "x".join(f"Z{m}" for m in self.moduli)
        super().__init__(order, name)
        if kind is not None:
            self.kind = kind

    def identity(self):
        return (0,) * len(self.moduli)

    def multiply(self, x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def validate_element(self, x):
        if (
            not isinstance(x, tuple)
            or len(x) != len(self.moduli)
            or any(not isinstance(a, int) or not 0 <= a < m for a, m in zip(x, self.moduli))
        ):
            raise RealizationError(f"{x!r} is not a residue tuple for moduli {self.moduli}")

    def elements(self):
        _require_enumerable(self)
        return _iproduct(*[range(m) for m in self.moduli])

    def element_order(self, x):
        out = 1
        for a, m in zip(x, self.moduli):
            out = math.lcm(out, m // math.gcd(a, m))
        return out

    def is_abelian(self):
        return True

    def key(self):
        return ("abelian", self.primary_type)

    def _compute_spectrum(self):
        # still exhaustive: the order of every single element is evaluated,
        # just in vectorized batches
        _require_enumerable(self)
        acc = np.ones(1, dtype=np.int64)
        for m in self.moduli:
            residues = np.arange(m, dtype=np.int64)
            ords = m // np.gcd(residues, m)
            acc = np.lcm.outer(acc, ords).ravel()
        values, counts = np.unique(acc, return_counts=True)
        return OrderSpectrum({int(d): int(c) for d, c in zip(values, counts)}, self.order)


class MetacyclicGroup(Group):
    """Group <a, b | a^m = 1, b^n = a^s, b^-1 a b = a^r> in normal form.

    Elements are pairs (i, j) standing for b^i a^j with 0 <= i < n,
    0 <= j < m.  Consistency of the presentation (and associativity of the
    normal-form product) needs gcd(m, r) = 1, r^n = 1 mod m and
    s*(r - 1) = 0 mod m; the constructor rejects anything else.
    """

    kind = "metacyclic"

    def __init__(self, m: int, n: int, s: int, r: int, kind=None, name=None):
        if m < 1 or n < 1:
            raise ValueError(f"metacyclic m, n must be >= 1, got ({m}, {n})")
        s %= m
        r %= m
        if math.gcd(m, r) != 1:
            raise ValueError(f"metacyclic needs gcd(m, r) = 1, got gcd({m}, {r})")
        if pow(r, n, m) != 1 % m:
            raise ValueError(f"metacyclic needs r^n = 1 mod m: {r}^{n} != 1 mod {m}")
        if (s * (r - 1)) % m != 0:
            raise ValueError(
                f"metacyclic needs s(r-1) = 0 mod m for associativity: "
                f"({m}, {n}, {s}, {r}) rejected"
            )
        super().__init__(m * n, name or f"MC({m},{n},{s},{r})")
        if kind is not None:
            self.kind = kind
        self.m, self.n, self.s, self.r = m, n, s, r
        self._rpow = tuple(pow(r, k, m) for k in range(n))
        self._order_cache: dict = {}

    def identity(self):
        return (0, 0)

    def multiply(self, x, y):
        i, j = x
        k, l = y
        t = i + k
        if t >= self.n:
            return (t - self.n, (j * self._rpow[k] + l + self.s) % self.m)
        return (t, (j * self._rpow[k] + l) % self.m)

    def validate_element(self, x):
        if (
            not isinstance(x, tuple)
            or len(x) != 2
            or not isinstance(x[0], int)
            or not isinstance(x[1], int)
            or not 0 <= x[0] < self.n
            or not 0 <= x[1] < self.m
        ):
            raise RealizationError(
                f"{x!r} is not a normal-form pair for MC({self.m},{self.n},{self.s},{self.r})"
            )

    def elements(self):
        _require_enumerable(self)
        return ((i, j) for i in range(self.n) for j in range(self.m))

    def element_order(self, x):
        cached = self._order_cache.get(x)
        if cached is None:
            cached = super().element_order(x)
            self._order_cache[x] = cached
        return cached

    def is_abelian(self):
        return self.m <= 1 or self.r == 1

    def key(self):
        return ("metacyclic", self.m, self.n, self.s, self.r)


class PGroupP(Group):
    """Nonabelian semidirect product Z_p^(n-1) : Z_q via a power automorphism.

    The Z_q generator scales each vector coordinate by t, the least integer
    above 1 of multiplicative order q mod p.  Elements are (vector, c).
    """

    kind = "p-group-P"

    def __init__(self, p: int, q: int, n: int):
        if not is_prime(p) or p <= 2:
            raise ValueError(f"p must be an odd prime, got {p}")
        if not is_prime(q):
            raise ValueError(f"q must be prime, got {q}")
        if (p - 1) % q != 0:
            raise ValueError(f"q must divide p - 1: {q} does not divide {p - 1}")
        if n < 2:
            raise ValueError(f"n must be >= 2, got {n}")
        t = next(t for t in range(2, p) if pow(t, q, p) == 1 and t % p != 1)
        super().__init__(p ** (n - 1) * q, f"P({p},{q},{n})")
        self.p, self.q, self.n, self.t = p, q, n, t
        self.dim = n - 1
        self._tpow = tuple(pow(t, c, p) for c in range(q))

    def identity(self):
        return ((0,) * self.dim, 0)

    def multiply(self, x, y):
        v, c = x
        w, d = y
        tc = self._tpow[c]
        return (tuple((a + tc * b) % self.p for a, b in zip(v, w)), (c + d) % self.q)

    def validate_element(self, x):
        ok = (
            isinstance(x, tuple)
            and len(x) == 2
            and isinstance(x[0], tuple)
            and len(x[0]) == self.dim
            and all(isinstance(a, int) and 0 <= a < self.p for a in x[0])
            and isinstance(x[1], int)
            and 0 <= x[1] < self.q
        )
        if not ok:
            raise RealizationError(f"{x!r} is not a (vector, c) pair for {self.name}")

    def elements(self):
        _require_enumerable(self)
        return (
            (v, c)
            for c in range(self.q)
            for v in _iproduct(*[range(self.p)] * self.dim)
        )

    def is_abelian(self):
        return False

    def key(self):
        return ("p-group-P", self.p, self.q, self.n)


def _perm_order(images: tuple) -> int:
    n = len(images)
    seen = [False] * n
    out = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = images[i]
            length += 1
        out = math.lcm(out, length)
    return out


def _perm_is_even(images: tuple) -> bool:
    n = len(images)
    seen = [False] * n
    cycles = 0
    for start in range(n):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = images[i]
    return (n - cycles) % 2 == 0


class _PermutationBase(Group):
    """Shared arithmetic for groups whose elements are image tuples."""

    def __init__(self, degree: int, order: int, name: str):
        super().__init__(order, name)
        self.degree = degree

    def identity(self):
        return tuple(range(self.degree))

    def multiply(self, x, y):
        # compose: apply y first, then x
        return tuple(x[y[i]] for i in range(self.degree))

    def validate_element(self, x):
        if (
            not isinstance(x, tuple)
            or len(x) != self.degree
            or sorted(x) != list(range(self.degree))
        ):
            raise RealizationError(f"{x!r} is not a permutation of {self.degree} points")

    def element_order(self, x):
        return _perm_order(x)


class SymmetricGroup(_PermutationBase):
    kind = "symmetric"

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"symmetric group needs n >= 1, got {n}")
        super().__init__(n, math.factorial(n), f"S{n}")
        self.n = n

    def elements(self):
        if self.n > PERMUTATION_ENUM_LIMIT:
            raise ResourceLimitError(
                f"element enumeration of S_n is capped at n = {PERMUTATION_ENUM_LIMIT}; "
                f"got n = {self.n}"
            )
        _require_enumerable(self)
        return _permutations(range(self.n))

    def is_abelian(self):
        return self.n <= 2

    def key(self):
        return ("symmetric", self.n)

    def order_factorization(self):
        return dict(factorial_factorization(self.n))

    def _compute_spectrum(self):
        from .closedforms import symmetric_order_spectrum

        if self.n > PARTITION_ENGINE_LIMIT:
            raise ResourceLimitError(
                f"cycle-type spectra of S_n are capped at n = {PARTITION_ENGINE_LIMIT}"
            )
        return OrderSpectrum(symmetric_order_spectrum(self.n), self.order)


class AlternatingGroup(_PermutationBase):
    kind = "alternating"

    def __init__(self, n: int):
        if n < 2:
            raise ValueError(f"alternating group needs n >= 2, got {n}")
        super().__init__(n, math.factorial(n) // 2, f"A{n}")
        self.n = n

    def elements(self):
        if self.n > PERMUTATION_ENUM_LIMIT:
            raise ResourceLimitError(
                f"element enumeration of A_n is capped at n = {PERMUTATION_ENUM_LIMIT}; "
                f"got n = {self.n}"
            )
        _require_enumerable(self)
        return (p for p in _permutations(range(self.n)) if _perm_is_even(p))

    def validate_element(self, x):
        super().validate_element(x)
        if not _perm_is_even(x):
            raise RealizationError(f"{x!r} is an odd permutation")

    def is_abelian(self):
        return self.n <= 3

    def key(self):
        return ("alternating", self.n)

    def order_factorization(self):
        out = dict(factorial_factorization(self.n))
        if out.get(2, 0) == 1:
            del out[2]
        elif 2 in out:
            out[2] -= 1
        return out

    def _compute_spectrum(self):
        from .closedforms import alternating_order_spectrum

        if self.n > PARTITION_ENGINE_LIMIT:
            raise ResourceLimitError(
                f"cycle-type spectra of A_n are capped at n = {PARTITION_ENGINE_LIMIT}"
            )
        return OrderSpectrum(alternating_order_spectrum(self.n), self.order)


class PermutationClosureGroup(_PermutationBase):
    """Group generated by explicit permutations, enumerated by BFS closure."""

    kind = "permutation-closure"

    def __init__(self, generators, expected_order: Optional[int] = None,
                 kind=None, name=None):
        gens = [tuple(g) for g in generators]
        if not gens:
            raise ValueError("at least one generator required")
        degree = len(gens[0])
        for g in gens:
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise IntegrityError(f"{g!r} is not a permutation of 0..{degree - 1}")
        self.generators = tuple(gens)
        self._closure: Optional[list] = None
        self._expected_order = expected_order
        if expected_order is None:
            # closure is the only way to learn the order
            self._closure = self._compute_closure(degree, enumeration_cap())
            order = len(self._closure)
        else:
            order = expected_order
        super().__init__(degree, order, name or f"<{len(gens)} gens on {degree} points>")
        if kind is not None:
            self.kind = kind

    def _compute_closure(self, degree: int, cap: int) -> list:
        identity = tuple(range(degree))
        seen = {identity}
        ordered = [identity]
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = tuple(x[g[i]] for i in range(degree))
                    if y not in seen:
                        seen.add(y)
                        ordered.append(y)
                        nxt.append(y)
                        if len(seen) > cap:
                            raise ResourceLimitError(
                                f"generator closure exceeded the enumeration cap of "
                                f"{cap} elements (set {MAX_ELEMENTS_ENV} to raise it)"
                            )
            frontier = nxt
        return ordered

    def closure(self) -> list:
        if self._closure is None:
            self._closure = self._compute_closure(self.degree, enumeration_cap())
            if self._expected_order is not None and len(self._closure) != self._expected_order:
                raise IntegrityError(
                    f"closure of {self.name} has {len(self._closure)} elements, "
                    f"declared order is {self._expected_order}"
                )
        return self._closure

    def elements(self):
        _require_enumerable(self)
        return iter(self.closure())

    def is_abelian(self):
        return all(
            self.multiply(a, b) == self.multiply(b, a)
            for a in self.generators
            for b in self.generators
        )

    def key(self):
        return ("permutation-closure", self.generators)


class DirectProductGroup(Group):
    """Direct product; elements are tuples of factor payloads."""

    kind = "direct-product"

    def __init__(self, factors: Sequence[Group], kind=None, name=None):
        factors = list(factors)
        if not factors:
            raise ValueError("direct product needs at least one factor")
        order = math.prod(f.order for f in factors)
        super().__init__(order, name or "x".join(f.name for f in factors))
        if kind is not None:
            self.kind = kind
        self.factors = tuple(factors)

    def identity(self):
        return tuple(f.identity() for f in self.factors)

    def multiply(self, x, y):
        return tuple(f.multiply(a, b) for f, a, b in zip(self.factors, x, y))

    def validate_element(self, x):
        if not isinstance(x, tuple) or len(x) != len(self.factors):
            raise RealizationError(f"{x!r} is not a {len(self.factors)}-component tuple")
        for f, a in zip(self.factors, x):
            f.validate_element(a)

    def elements(self):
        _require_enumerable(self)
        return _iproduct(*[f.elements() for f in self.factors])

    def element_order(self, x):
        out = 1
        for f, a in zip(self.factors, x):
            out = math.lcm(out, f.element_order(a))
        return out

    def is_abelian(self):
        return all(f.is_abelian() for f in self.factors)

    def key(self):
        return ("direct-product", tuple(f.key() for f in self.factors))

    def order_factorization(self):
        out: dict[int, int] = {}
        for f in self.factors:
            for p, a in f.order_factorization().items():
                out[p] = out.get(p, 0) + a
        return out

    def _compute_spectrum(self):
        spec = self.factors[0].spectrum()
        for f in self.factors[1:]:
            spec = lcm_convolve(spec, f.spectrum())
        return spec


class CayleyTableGroup(Group):
    """Group given by an explicit multiplication table over indices 0..n-1.

    Index 0 must be the identity.  The table is fully validated on import:
    shape, Latin-square property, identity row/column, and associativity.
    """

    kind = "cayley-table"

    def __init__(self, table: Sequence[Sequence[int]], name: str = "table-group"):
        n = len(table)
        if n < 1:
            raise IntegrityError("empty table")
        if n > CAYLEY_TABLE_LIMIT:
            raise IntegrityError(
                f"table side {n} exceeds the validation limit of {CAYLEY_TABLE_LIMIT}"
            )
        rows = []
        for i, row in enumerate(table):
            row = list(row)
            if len(row) != n:
                raise IntegrityError(f"row {i} has length {len(row)}, expected {n}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise IntegrityError(f"entry at row {i}, column {j} is {v!r}")
            rows.append(row)
        full = set(range(n))
        for i in range(n):
            if set(rows[i]) != full:
                raise IntegrityError(f"row {i} is not a permutation (Latin square fails)")
            if {rows[j][i] for j in range(n)} != full:
                raise IntegrityError(f"column {i} is not a permutation (Latin square fails)")
        for j in range(n):
            if rows[0][j] != j:
                raise IntegrityError(f"index 0 is not a left identity at column {j}")
            if rows[j][0] != j:
                raise IntegrityError(f"index 0 is not a right identity at row {j}")
        self._check_associativity(rows, n)
        super().__init__(n, name)
        self.table = rows

    @staticmethod
    def _check_associativity(rows, n):
        arr = np.array(rows, dtype=np.int64)
        for i in range(n):
            # (i*j)*k vs i*(j*k) for all j, k at once
            left = arr[arr[i, :], :]
            right = arr[i, :][arr]
            if not np.array_equal(left, right):
                j, k = np.argwhere(left != right)[0]
                raise IntegrityError(
                    f"associativity fails at ({i}*{j})*{k} != {i}*({j}*{k})"
                )

    def identity(self):
        return 0

    def multiply(self, x, y):
        return self.table[x][y]

    def validate_element(self, x):
        if not isinstance(x, int) or not 0 <= x < self.order:
            raise RealizationError(f"{x!r} is not a table index below {self.order}")

    def elements(self):
        _require_enumerable(self)
        return iter(range(self.order))

    def element_order(self, x):
        t, y = 1, x
        while y != 0:
            y = self.table[y][x]
            t += 1
        return t

    def is_abelian(self):
        return all(
            self.table[i][j] == self.table[j][i]
            for i in range(self.order)
            for j in range(i)
        )

    def key(self):
        return ("cayley-table", tuple(tuple(r) for r in self.table))


# ---------------------------------------------------------------------------
# operations on groups
# ---------------------------------------------------------------------------


def multiply(group: Group, x, y):
    """Product of two canonical elements (validates payload shapes)."""
    group.validate_element(x)
    group.validate_element(y)
    return group.multiply(x, y)


def order(group: Group, x) -> int:
    """Order of an element (validates payload shape)."""
    group.validate_element(x)
    return group.element_order(x)


def enumerate_elements(group: Group) -> Iterator:
    """Stream every element exactly once (subject to the enumeration cap)."""
    return group.elements()


def spectrum_by_enumeration(group: Group) -> OrderSpectrum:
    """Brute-force spectrum: walk the element stream and count orders.

    This is the oracle path; it never consults structural shortcuts.
    """
    _require_enumerable(group)
    counts: Counter = Counter()
    total = 0
    for x in group.elements():
        counts[group.element_order(x)] += 1
        total += 1
    if total != group.order:
        raise IntegrityError(
            f"enumeration of {group.name} yielded {total} elements, "
            f"declared order is {group.order}"
        )
    return OrderSpectrum(dict(counts), group.order)


def order_spectrum(group: Group) -> OrderSpectrum:
    """Exact spectrum, via the cheapest exact route for the realization."""
    return group.spectrum()


def exponent(group: Group) -> int:
    """lcm of all element orders."""
    return group.spectrum().exponent()


def phi(group: Group) -> int:
    """Number of elements whose order equals the group exponent."""
    return group.spectrum().phi()


def cyclic_count_max(group: Group) -> int:
    """Number of cyclic subgroups of maximal (exponent) order.

    phi(G) splits into classes of size phi(exp G), one per cyclic subgroup of
    that order, so the division must be exact.
    """
    spec = group.spectrum()
    phi_g = spec.phi()
    phi_exp = euler_phi(spec.exponent())
    k, rem = divmod(phi_g, phi_exp)
    if rem:
        raise IntegrityError(
            f"phi({group.name}) = {phi_g} is not divisible by "
            f"phi(exp) = {phi_exp}; the spectrum is corrupt"
        )
    return k


def commuting_witness(group: Group) -> Optional[list]:
    """Pairwise-commuting elements realizing the prime-power parts of exp(G).

    Returns a list [a_1, ..., a_k] with o(a_i) = p_i^b_i (the full prime-power
    decomposition of the exponent) and a_i a_j = a_j a_i, or None when no such
    tuple exists.  The product of a witness has order exp(G), so a witness
    exists exactly when the exponent is attained.
    """
    _require_enumerable(group)
    by_order: dict[int, list] = {}
    exp = 1
    for x in group.elements():
        d = group.element_order(x)
        exp = math.lcm(exp, d)
        by_order.setdefault(d, []).append(x)
    targets = sorted(p**a for p, a in factorize(exp).items())
    if not targets:
        return []
    buckets = [by_order[t] for t in targets]
    # search smallest candidate sets first; remember where each target goes
    search_order = sorted(range(len(targets)), key=lambda i: len(buckets[i]))
    chosen: list = [None] * len(targets)

    def backtrack(depth: int) -> bool:
        if depth == len(search_order):
            return True
        slot = search_order[depth]
        for cand in buckets[slot]:
            ok = True
            for earlier in search_order[:depth]:
                other = chosen[earlier]
                if group.multiply(cand, other) != group.multiply(other, cand):
                    ok = False
                    break
            if ok:
                chosen[slot] = cand
                if backtrack(depth + 1):
                    return True
                chosen[slot] = None
        return False

    if backtrack(0):
        return list(chosen)
    return None


def report(group: Group) -> PhiReport:
    """Assemble every spectrum-derived quantity for a group."""
    spec = group.spectrum()
    exp = spec.exponent()
    phi_g = spec.phi()
    phi_exp = euler_phi(exp)
    k, rem = divmod(phi_g, phi_exp)
    if rem:
        raise IntegrityError(f"phi is not a multiple of phi(exp) for {group.name}")
    phi_order = euler_phi_from_factorization(group.order_factorization())
    return PhiReport(
        order=group.order,
        exponent=exp,
        phi_g=phi_g,
        k=k,
        pi_e=tuple(spec.orders()),
        in_class_c=phi_g != 0,
        phi_of_order=phi_order,
        phi_of_exp=phi_exp,
        eq_order_flag=phi_g == phi_order,
        eq_exp_flag=k == 1,
    )
