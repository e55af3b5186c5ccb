"""Class-C predicates, the prime equation solver, and the catalog sweep."""

import pytest

import gentotient as gt
from gentotient import classc
from gentotient import families as fam
from gentotient.core import commuting_witness, spectrum_by_enumeration


def test_in_class_c_examples():
    assert classc.in_class_c(fam.dihedral(12))
    assert not classc.in_class_c(fam.symmetric(3))
    # nilpotent groups always attain their exponent
    for g in (fam.generalized_quaternion(16), fam.abelian([(2, [1, 2]), (3, [2])]),
              fam.elementary_abelian(5, 2), fam.hamiltonian(2, fam.cyclic(9))):
        assert classc.in_class_c(g)


def test_sublattice_check_examples():
    assert classc.sublattice_check(fam.cyclic(12))
    assert not classc.sublattice_check(fam.symmetric(3))
    assert not classc.sublattice_check(fam.alternating(4))


def test_triple_equivalence_on_catalog():
    for group in classc.standard_catalog(600):
        member = classc.in_class_c(group)
        assert classc.sublattice_check(group) == member, group.name
        assert (commuting_witness(group) is not None) == member, group.name


def test_metacyclic_in_c_examples():
    for m in range(2, 26):
        assert classc.metacyclic_in_c(m, 2, 0, m - 1) == (m % 2 == 0)
    assert classc.metacyclic_in_c(4, 2, 2, 3)       # quaternion presentation
    assert not classc.metacyclic_in_c(5, 2, 0, 4)   # pentagon symmetries


def test_metacyclic_in_c_matches_oracle():
    from gentotient.closedforms import valid_metacyclic_presentations

    for m, n, s, r in valid_metacyclic_presentations(10, 5):
        oracle = spectrum_by_enumeration(fam.metacyclic(m, n, s, r)).phi() != 0
        assert classc.metacyclic_in_c(m, n, s, r) == oracle


def test_embed_in_c():
    s3 = fam.symmetric(3)
    embedded = classc.embed_in_c(s3)
    assert embedded.order == 36
    assert gt.phi(embedded) == 20
    assert classc.in_class_c(embedded)

    z5 = fam.cyclic(5)
    assert classc.embed_in_c(z5).order == 25
    assert classc.in_class_c(classc.embed_in_c(z5))

    a5 = fam.alternating(5)
    big = classc.embed_in_c(a5)  # nonsolvable member of class C
    assert big.order == 30 * 60
    assert classc.in_class_c(big)


def test_solve_phi_eq_prime_two():
    sol = classc.solve_phi_eq_prime(2)
    assert sol.kind == "five-groups"
    assert [g.name for g in sol.specs] == ["Z3", "Z4", "Z6", "D8", "D12"]
    assert [g.order for g in sol.specs] == [3, 4, 6, 8, 12]
    for g in sol.specs:
        assert spectrum_by_enumeration(g).phi() == 2


def test_solve_phi_eq_prime_mersenne_and_empty():
    sol3 = classc.solve_phi_eq_prime(3)
    assert sol3.kind == "single-elementary-abelian"
    assert sol3.specs[0].order == 4 and spectrum_by_enumeration(sol3.specs[0]).phi() == 3
    sol7 = classc.solve_phi_eq_prime(7)
    assert sol7.specs[0].order == 8
    assert classc.solve_phi_eq_prime(5).kind == "empty"
    assert classc.solve_phi_eq_prime(11).kind == "empty"
    assert classc.solve_phi_eq_prime(13).kind == "empty"
    with pytest.raises(ValueError):
        classc.solve_phi_eq_prime(4)


def test_solution_sets_are_pairwise_distinguished():
    specs = classc.solve_phi_eq_prime(2).specs
    fingerprints = {
        (g.order, tuple(sorted(g.spectrum().entries.items()))) for g in specs
    }
    assert len(fingerprints) == len(specs)


def test_catalog_scan_target_two():
    hits = classc.catalog_scan(2, 16)
    assert [(g.name, g.order) for g in hits] == [
        ("Z3", 3), ("Z4", 4), ("Z6", 6), ("D8", 8), ("D12", 12)
    ]


def test_catalog_scan_target_one():
    assert [g.name for g in classc.catalog_scan(1, 4)] == ["Z1", "Z2"]


def test_catalog_scan_target_six():
    names = {g.name for g in classc.catalog_scan(6, 20)}
    assert {"Q8", "Z7", "Z9", "Z14", "Z18"} <= names


def test_catalog_scan_is_deterministic():
    first = [(g.name, g.order) for g in classc.catalog_scan(2, 30)]
    second = [(g.name, g.order) for g in classc.catalog_scan(2, 30)]
    assert first == second


def test_class_c_closed_under_products():
    members = [g for g in classc.standard_catalog(150) if classc.in_class_c(g)]
    assert members
    for i, g1 in enumerate(members):
        for g2 in members[i:]:
            if g1.order * g2.order <= 10_000:
                assert classc.in_class_c(fam.direct_product([g1, g2]))


def test_class_c_not_closed_under_subgroups_or_quotients():
    # the order-12 dihedral group is in C yet contains (and maps onto) a
    # copy of the symmetric group on three letters, which is not
    assert classc.in_class_c(fam.dihedral(12))
    assert not classc.in_class_c(fam.symmetric(3))
    d12 = fam.dihedral(12)
    spec = d12.spectrum()
    assert spec.count(2) >= 3 and spec.count(3) == 2  # S3's spectrum embeds


def test_scan_families_is_cached_and_bounded():
    groups = classc.scan_families(40)
    assert groups is classc.scan_families(40)
    assert all(g.order <= 40 for g in groups)
    names = {g.name for g in groups}
    assert {"Z1", "D8", "Q8", "SD16", "S4", "A4", "P(3,2,2)"} <= names
