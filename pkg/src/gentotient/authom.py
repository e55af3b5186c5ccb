"""Brute-force counting of automorphisms and homomorphisms of small groups.

The counter backtracks over candidate images of a greedily chosen generating
set.  Each partial assignment is extended to the generated subgroup by
right-multiplication closure; every product x * g of a mapped element with a
mapped generator is checked on the way, which is enough to certify the full
homomorphism property once the closure stabilizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .core import (
    AbelianGroup,
    CyclicGroup,
    Group,
    IntegrityError,
    ResourceLimitError,
    report,
)
from .numtheory import euler_phi

AUT_ORDER_CAP = 256      # largest |G| the counters will materialize
AUT_GENERATOR_CAP = 4    # refuse greedy generating sets larger than this
AUT_SEARCH_CAP = 1_200_000  # refuse candidate-image products larger than this


class MaterializedGroup:
    """Index-based multiplication table for fast search."""

    def __init__(self, group: Group, cap: int = AUT_ORDER_CAP):
        if group.order > cap:
            raise ResourceLimitError(
                f"|{group.name}| = {group.order} exceeds the search cap of {cap}"
            )
        self.group = group
        self.elements = list(group.elements())
        n = len(self.elements)
        if n != group.order:
            raise IntegrityError(
                f"enumeration of {group.name} yielded {n} elements, "
                f"declared order is {group.order}"
            )
        index = {x: i for i, x in enumerate(self.elements)}
        mul = group.multiply
        self.table = [
            [index[mul(x, y)] for y in self.elements] for x in self.elements
        ]
        self.identity = index[group.identity()]
        self.n = n
        # orders by iterated multiplication over the table
        orders = []
        e = self.identity
        for i in range(n):
            t, y = 1, i
            while y != e:
                y = self.table[y][i]
                t += 1
            orders.append(t)
        self.orders = orders
        buckets: dict[int, list[int]] = {}
        for i, o in enumerate(orders):
            buckets.setdefault(o, []).append(i)
        self.order_buckets = buckets


def _closure_ids(table, gens, identity) -> list[int]:
    sub = [identity]
    seen = {identity}
    idx = 0
    while idx < len(sub):
        x = sub[idx]
        idx += 1
        for g in gens:
            y = table[x][g]
            if y not in seen:
                seen.add(y)
                sub.append(y)
    return sub


def greedy_generators(mat: MaterializedGroup) -> list[int]:
    """Generating set grown by repeatedly taking a maximal-order element
    outside the closure so far (smallest index on ties)."""
    gens: list[int] = []
    closure = {mat.identity}
    while len(closure) < mat.n:
        best = -1
        best_order = 0
        for i in range(mat.n):
            if i not in closure and mat.orders[i] > best_order:
                best, best_order = i, mat.orders[i]
        gens.append(best)
        closure = set(_closure_ids(mat.table, gens, mat.identity))
    return gens


@dataclass(frozen=True)
class GeneratorPresentation:
    """A group together with a generating set (closure equals the group)."""

    group: Group
    generators: tuple


def generator_presentation(group: Group) -> GeneratorPresentation:
    mat = MaterializedGroup(group)
    gens = greedy_generators(mat)
    return GeneratorPresentation(group, tuple(mat.elements[g] for g in gens))


def _count_morphisms(src: MaterializedGroup, dst: MaterializedGroup,
                     gens: list[int], candidates: list[list[int]],
                     injective: bool) -> int:
    space = math.prod(len(c) for c in candidates) if candidates else 1
    if space > AUT_SEARCH_CAP:
        raise ResourceLimitError(
            f"candidate image space of size {space} exceeds the search cap of "
            f"{AUT_SEARCH_CAP}"
        )
    stable = src.table
    dtable = dst.table
    img = [-1] * src.n
    img[src.identity] = dst.identity
    used = bytearray(dst.n)
    used[dst.identity] = 1
    sub = [src.identity]
    assigned: list[int] = []

    def extend(new_gen: int, new_img: int) -> bool:
        img[new_gen] = new_img
        if injective:
            used[new_img] = 1
        start = len(sub)
        sub.append(new_gen)
        # previously closed elements only need expansion by the new generator
        for pos in range(start):
            x = sub[pos]
            y = stable[x][new_gen]
            iy = dtable[img[x]][new_img]
            t = img[y]
            if t == -1:
                if injective:
                    if used[iy]:
                        return False
                    used[iy] = 1
                img[y] = iy
                sub.append(y)
            elif t != iy:
                return False
        # fresh elements need expansion by every assigned generator
        idx = start
        while idx < len(sub):
            x = sub[idx]
            ix = img[x]
            for g in assigned:
                y = stable[x][g]
                iy = dtable[ix][img[g]]
                t = img[y]
                if t == -1:
                    if injective:
                        if used[iy]:
                            return False
                        used[iy] = 1
                    img[y] = iy
                    sub.append(y)
                elif t != iy:
                    return False
            idx += 1
        return True

    count = 0

    def place(depth: int) -> None:
        nonlocal count
        if depth == len(gens):
            count += 1
            return
        g = gens[depth]
        for h in candidates[depth]:
            if injective and used[h]:
                continue
            mark = len(sub)
            assigned.append(g)
            ok = extend(g, h)
            if ok:
                place(depth + 1)
            for x in sub[mark:]:
                if injective:
                    used[img[x]] = 0
                img[x] = -1
            del sub[mark:]
            assigned.pop()

    place(0)
    return count


def aut_count(group: Group) -> int:
    """Exact size of the automorphism group, by generator-image backtracking.

    Abelian groups of multi-prime order factor as a direct product of their
    coprime primary parts, and automorphisms respect that splitting, so each
    part is counted separately (still by backtracking).
    """
    if isinstance(group, AbelianGroup) and len(group.primary_type) > 1:
        out = 1
        for p, alphas in group.primary_type:
            out *= aut_count(AbelianGroup([(p, alphas)]))
        return out
    mat = MaterializedGroup(group)
    gens = greedy_generators(mat)
    if len(gens) > AUT_GENERATOR_CAP:
        raise ResourceLimitError(
            f"{group.name} needs {len(gens)} generators; the automorphism "
            f"counter refuses beyond {AUT_GENERATOR_CAP}"
        )
    candidates = [list(mat.order_buckets[mat.orders[g]]) for g in gens]
    return _count_morphisms(mat, mat, gens, candidates, injective=True)


def hom_count(source: Group, target: Group) -> int:
    """Number of multiplication-preserving maps source -> target."""
    src = MaterializedGroup(source)
    dst = MaterializedGroup(target)
    gens = greedy_generators(src)
    if len(gens) > AUT_GENERATOR_CAP:
        raise ResourceLimitError(
            f"{source.name} needs {len(gens)} generators; the homomorphism "
            f"counter refuses beyond {AUT_GENERATOR_CAP}"
        )
    candidates = [
        [j for j in range(dst.n) if src.orders[g] % dst.orders[j] == 0]
        for g in gens
    ]
    return _count_morphisms(src, dst, gens, candidates, injective=False)


def center_size(group: Group) -> int:
    """Size of the center, by commutation against a generating set."""
    mat = MaterializedGroup(group)
    gens = greedy_generators(mat)
    return sum(
        1
        for i in range(mat.n)
        if all(mat.table[i][g] == mat.table[g][i] for g in gens)
    )


def aut_product_formula(g1: Group, g2: Group) -> int:
    """|Aut(G1 x G2)| = |Aut(G1)| * |Aut(G2)| * |Hom(G2, G1)|.

    Requires G1 cyclic and G2 with trivial center; both hypotheses are
    checked (the center by enumeration).
    """
    if not isinstance(g1, CyclicGroup):
        raise ValueError(f"first factor must be cyclic, got {g1.name}")
    if center_size(g2) != 1:
        raise ValueError(
            f"second factor must have trivial center; Z({g2.name}) is nontrivial"
        )
    return aut_count(g1) * aut_count(g2) * hom_count(g2, g1)


@dataclass(frozen=True)
class PhiOrderMatch:
    """Both sides of: phi(G) = phi(|G|) iff k = |G| / exp(G)."""

    phi_g: int
    phi_order: int
    k: int
    ratio: int
    holds: bool


def phi_order_match_check(group: Group) -> PhiOrderMatch:
    """Evaluate phi(G) = phi(|G|) and k = |G|/exp(G) independently.

    The two conditions are equivalent; computing both and comparing guards
    the whole pipeline.
    """
    rep = report(group)
    lhs = rep.phi_g == rep.phi_of_order
    ratio = group.order // rep.exponent
    rhs = rep.k == ratio
    if lhs != rhs:
        raise IntegrityError(
            f"equivalence broken for {group.name}: phi-match={lhs}, k-match={rhs}"
        )
    return PhiOrderMatch(rep.phi_g, rep.phi_of_order, rep.k, ratio, lhs)


def phi_exp_match_check(group: Group) -> bool:
    """True iff G has a unique cyclic subgroup of maximal order (k = 1).

    Equivalent to phi(G) = phi(exp G); both forms are computed and compared.
    """
    rep = report(group)
    lhs = rep.k == 1
    rhs = rep.phi_g == rep.phi_of_exp and rep.phi_g != 0
    if lhs != rhs:
        raise IntegrityError(f"k = 1 equivalence broken for {group.name}")
    return lhs


@dataclass(frozen=True)
class PhiAutScreen:
    """Screen for phi(G) > |Aut(G)| candidates.

    Any group beating the bound must satisfy |G| >= exp(G)^2, so the cheap
    necessary condition runs first and Aut is only counted when it might
    matter (or is supplied externally).
    """

    phi_g: int
    aut: Optional[int]
    cond_i: bool
    is_counterexample: Optional[bool]


def phi_aut_screen(group: Group, aut_override: Optional[int] = None) -> PhiAutScreen:
    rep = report(group)
    cond_i = group.order >= rep.exponent**2
    if not cond_i:
        return PhiAutScreen(rep.phi_g, None, False, False)
    aut = aut_override
    if aut is None:
        try:
            aut = aut_count(group)
        except ResourceLimitError:
            return PhiAutScreen(rep.phi_g, None, True, None)
    return PhiAutScreen(rep.phi_g, aut, True, rep.phi_g > aut)


def aut_count_matches_classical(n: int) -> bool:
    """|Aut(Z_n)| agrees with the classical totient."""
    return aut_count(CyclicGroup(n)) == euler_phi(n)
