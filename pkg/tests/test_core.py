"""Element arithmetic, enumeration, and spectrum invariants."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import gentotient as gt
from gentotient import families as fam
from gentotient.core import (
    CayleyTableGroup,
    IntegrityError,
    OrderSpectrum,
    RealizationError,
    ResourceLimitError,
    lcm_convolve,
    spectrum_by_enumeration,
)
from gentotient.closedforms import valid_metacyclic_presentations
from gentotient.numtheory import euler_phi, factorize


def small_catalog():
    return [
        fam.cyclic(1),
        fam.cyclic(12),
        fam.elementary_abelian(2, 3),
        fam.abelian([(2, [1, 2]), (3, [1])]),
        fam.dihedral(8),
        fam.dihedral(10),
        fam.generalized_quaternion(16),
        fam.quasidihedral(16),
        fam.metacyclic(8, 4, 2, 5),
        fam.p_group_P(3, 2, 3),
        fam.symmetric(4),
        fam.alternating(4),
        fam.hamiltonian(1, fam.cyclic(3)),
        fam.direct_product([fam.cyclic(6), fam.symmetric(3)]),
    ]


# -- multiplication -----------------------------------------------------------


def test_metacyclic_relations_d8():
    d8 = fam.metacyclic(4, 2, 0, 3)
    a, b = (0, 1), (1, 0)
    # a*b = b*a^3 in the dihedral presentation
    assert d8.multiply(a, b) == (1, 3)
    assert d8.multiply(b, a) == (1, 1)


def test_q8_squares_to_central_element():
    q8 = fam.metacyclic(4, 2, 2, 3)
    assert q8.multiply((1, 0), (1, 0)) == (0, 2)


@pytest.mark.parametrize("group", small_catalog(), ids=lambda g: g.name)
def test_identity_law(group):
    e = group.identity()
    for i, x in enumerate(group.elements()):
        assert group.multiply(e, x) == x
        assert group.multiply(x, e) == x
        if i > 40:
            break


@pytest.mark.parametrize("group", small_catalog(), ids=lambda g: g.name)
def test_inverses_exist(group):
    e = group.identity()
    for i, x in enumerate(group.elements()):
        assert group.multiply(x, group.inverse(x)) == e
        if i > 40:
            break


def test_multiply_validates_payload():
    q8 = fam.generalized_quaternion(8)
    with pytest.raises(RealizationError):
        gt.multiply(q8, (0, 1), (1, 2, 0))
    with pytest.raises(RealizationError):
        gt.order(fam.cyclic(5), 7)
    with pytest.raises(RealizationError):
        gt.order(fam.symmetric(3), (0, 0, 1))


# -- element order ------------------------------------------------------------


def test_order_cyclic_gcd_formula():
    assert gt.order(fam.cyclic(12), 8) == 3


def test_order_identity():
    for group in (fam.cyclic(7), fam.symmetric(4), fam.dihedral(12)):
        assert gt.order(group, group.identity()) == 1


def test_order_permutation_vs_iterated_multiplication():
    s5 = fam.symmetric(5)
    x = (1, 2, 0, 4, 3)  # a 3-cycle next to a transposition
    assert gt.order(s5, x) == 6
    y, t = x, 1
    while y != s5.identity():
        y = s5.multiply(y, x)
        t += 1
    assert t == 6


def test_metacyclic_order_of_b():
    # o(b) = m*n / gcd(m, s) in the normal-form presentation
    from gentotient.closedforms import valid_metacyclic_presentations

    for m, n, s, r in valid_metacyclic_presentations(12, 6):
        if n == 1:
            continue
        g = fam.metacyclic(m, n, s, r)
        assert g.element_order((1, 0)) == m * n // math.gcd(m, s)


# -- enumeration --------------------------------------------------------------


def test_enumerate_trivial():
    assert list(fam.cyclic(1).elements()) == [0]


def test_enumerate_q8_grid():
    q8 = fam.metacyclic(4, 2, 2, 3)
    elems = list(q8.elements())
    assert len(elems) == 8
    assert len(set(elems)) == 8


def test_enumerate_m11():
    m11 = fam.mathieu11()
    assert len(m11.closure()) == 7920


@pytest.mark.parametrize("group", small_catalog(), ids=lambda g: g.name)
def test_enumeration_matches_declared_order(group):
    assert sum(1 for _ in group.elements()) == group.order


def test_enumeration_cap_on_large_symmetric():
    with pytest.raises(ResourceLimitError):
        list(fam.symmetric(11).elements())


def test_enumeration_cap_env_override(monkeypatch):
    monkeypatch.setenv("GENTOTIENT_MAX_ELEMENTS", "10")
    with pytest.raises(ResourceLimitError) as err:
        spectrum_by_enumeration(fam.cyclic(50))
    assert "10" in str(err.value)
    monkeypatch.setenv("GENTOTIENT_MAX_ELEMENTS", "not-a-number")
    with pytest.raises(ValueError):
        spectrum_by_enumeration(fam.cyclic(50))


# -- spectra ------------------------------------------------------------------


def test_spectrum_q8():
    assert fam.generalized_quaternion(8).spectrum().entries == {1: 1, 2: 1, 4: 6}


def test_spectrum_z2():
    assert fam.cyclic(2).spectrum().entries == {1: 1, 2: 1}


def test_spectrum_z6_s3_by_convolution_and_enumeration():
    prod = fam.direct_product([fam.cyclic(6), fam.symmetric(3)])
    expected = {1: 1, 2: 7, 3: 8, 6: 20}
    assert prod.spectrum().entries == expected
    assert spectrum_by_enumeration(prod).entries == expected


@pytest.mark.parametrize("group", small_catalog(), ids=lambda g: g.name)
def test_spectrum_invariants(group):
    spec = group.spectrum()
    assert sum(spec.entries.values()) == group.order
    assert spec.entries[1] == 1
    exp = spec.exponent()
    assert group.order % exp == 0
    for d, count in spec.entries.items():
        assert exp % d == 0
        assert count % euler_phi(d) == 0
        for e in range(1, d + 1):
            if d % e == 0:
                assert e in spec.entries
    # phi factorizes through the number of maximal cyclic subgroups
    assert spec.phi() == euler_phi(exp) * gt.cyclic_count_max(group)


def test_direct_product_convolution_matches_enumeration_pairwise():
    members = [
        fam.cyclic(8),
        fam.cyclic(15),
        fam.elementary_abelian(2, 2),
        fam.dihedral(8),
        fam.dihedral(10),
        fam.generalized_quaternion(8),
        fam.p_group_P(3, 2, 2),
        fam.symmetric(4),
        fam.alternating(4),
        fam.metacyclic(9, 3, 0, 4),
        fam.symmetric(5),
        fam.cyclic(100),
    ]
    checked = 0
    for i, g1 in enumerate(members):
        for g2 in members[i:]:
            if g1.order * g2.order > 100_000:
                continue
            prod = fam.direct_product([g1, g2])
            assert prod.spectrum().entries == spectrum_by_enumeration(prod).entries
            checked += 1
    assert checked > 70


def test_spectrum_rejects_corrupt_counts():
    with pytest.raises(IntegrityError):
        OrderSpectrum({1: 1, 4: 2}, 3)  # divisor 2 missing
    with pytest.raises(IntegrityError):
        OrderSpectrum({1: 2, 2: 1}, 3)  # two identities
    with pytest.raises(IntegrityError):
        OrderSpectrum({1: 1, 3: 3}, 4)  # 3 not a multiple of phi(3)


def test_lcm_convolve_commutes():
    a = fam.dihedral(12).spectrum()
    b = fam.cyclic(9).spectrum()
    assert lcm_convolve(a, b).entries == lcm_convolve(b, a).entries


# -- exponent and phi ---------------------------------------------------------

def test_exponent_dihedral_piecewise():
    for n in range(2, 13):
        expected = 2 * n if n % 2 == 1 else n
        assert gt.exponent(fam.dihedral(2 * n)) == expected


def test_exponent_trivial():
    assert gt.exponent(fam.cyclic(1)) == 1


def test_exponent_hamiltonian_two_part():
    for n in range(0, 4):
        assert gt.exponent(fam.hamiltonian(n, fam.cyclic(1))) == 4


def test_phi_examples():
    assert gt.phi(fam.dihedral(8)) == 2
    for n in range(1, 7):
        assert gt.phi(fam.elementary_abelian(2, n)) == 2**n - 1
    assert gt.phi(fam.direct_product([fam.cyclic(6), fam.symmetric(3)])) == 20
    assert gt.phi(fam.symmetric(4)) == 0


def test_cyclic_count_max_examples():
    assert gt.cyclic_count_max(fam.direct_product([fam.cyclic(3), fam.symmetric(3)])) == 3
    assert gt.cyclic_count_max(fam.cyclic(360)) == 1
    assert gt.cyclic_count_max(fam.elementary_abelian(2, 3)) == 7


# -- commuting witness --------------------------------------------------------


def test_commuting_witness_s3_has_none():
    assert gt.commuting_witness(fam.symmetric(3)) is None


def test_commuting_witness_cyclic():
    for n in (1, 2, 12, 30):
        witness = gt.commuting_witness(fam.cyclic(n))
        assert witness is not None
        targets = sorted(p**a for p, a in factorize(gt.exponent(fam.cyclic(n))).items())
        assert [fam.cyclic(n).element_order(x) for x in witness] == targets


def test_commuting_witness_d12():
    d12 = fam.dihedral(12)
    witness = gt.commuting_witness(d12)
    assert witness is not None
    orders = sorted(d12.element_order(x) for x in witness)
    assert orders == [2, 3]
    a, b = witness
    assert d12.multiply(a, b) == d12.multiply(b, a)


# -- report -------------------------------------------------------------------


def test_report_q8():
    rep = gt.report(fam.generalized_quaternion(8))
    assert (rep.order, rep.exponent, rep.phi_g, rep.k) == (8, 4, 6, 3)
    assert rep.in_class_c and not rep.eq_order_flag and not rep.eq_exp_flag
    assert rep.phi_of_order == 4


def test_report_trivial():
    rep = gt.report(fam.cyclic(1))
    assert (rep.order, rep.exponent, rep.phi_g, rep.k) == (1, 1, 1, 1)
    assert rep.in_class_c and rep.eq_order_flag and rep.eq_exp_flag


def test_report_d10():
    rep = gt.report(fam.dihedral(10))
    assert (rep.order, rep.exponent, rep.phi_g, rep.k) == (10, 10, 0, 0)
    assert not rep.in_class_c
    assert rep.phi_of_order == 4
    assert not rep.eq_order_flag


def test_report_huge_symmetric_order_factorization():
    # |S_30| has no small-trial-division route; the factorial shortcut must kick in
    rep = gt.report(fam.symmetric(30))
    assert rep.phi_g == 0
    assert rep.order == math.factorial(30)


# -- cayley tables ------------------------------------------------------------


def q8_table():
    from gentotient.authom import MaterializedGroup

    return MaterializedGroup(fam.generalized_quaternion(8)).table


def test_cayley_table_group_roundtrip():
    group = CayleyTableGroup(q8_table(), name="q8-table")
    assert group.spectrum().entries == {1: 1, 2: 1, 4: 6}
    assert not group.is_abelian()


def test_cayley_table_rejects_broken_latin_square():
    table = [row[:] for row in q8_table()]
    table[3][4] = table[3][5]
    with pytest.raises(IntegrityError):
        CayleyTableGroup(table)


def test_cayley_table_rejects_nonassociative_loop():
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 3, 4, 0, 1],
        [3, 4, 1, 2, 0],
        [4, 2, 0, 1, 3],
    ]
    with pytest.raises(IntegrityError) as err:
        CayleyTableGroup(loop)
    assert "associativity" in str(err.value)


def test_cayley_table_trivial():
    assert CayleyTableGroup([[0]]).spectrum().entries == {1: 1}


# -- property-based checks ----------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(list(valid_metacyclic_presentations(10, 5))), st.data())
def test_metacyclic_associativity(params, data):
    g = fam.metacyclic(*params)
    elems = list(g.elements())
    pick = st.sampled_from(elems)
    x, y, z = data.draw(pick), data.draw(pick), data.draw(pick)
    assert g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from([(2, 1), (2, 2), (3, 1), (3, 2), (5, 1), (7, 1)]),
                min_size=1, max_size=3, unique_by=lambda t: t[0]))
def test_abelian_vectorized_spectrum_matches_plain_enumeration(picks):
    ptype = [(p, [a]) for p, a in picks]
    g = fam.abelian(ptype)
    assert g.spectrum().entries == spectrum_by_enumeration(g).entries
