import pytest

from bicanonical.beauville import is_free
from bicanonical.fermat import (FERMAT_GENUS, FERMAT_GROUP, BiMonomial, RatioVector,
                                all_bimonomials, builtin_ratio_identities,
                                combination_vector, fermat_fixed_elements,
                                fermat_psi, fermat_report, field_lattice_contains,
                                invariant_monomials, monomial_ratio,
                                product_action_weight, ratio_lattice,
                                residual_character, residual_kernel,
                                verify_ratio_identity, verify_weight_derivation,
                                weight, x1_5_over_z1_5, x5_over_z5)

# the nine invariant monomials, as (i, j, alpha, beta)
EXPECTED_INVARIANTS = {
    (4, 0, 0, 1),  # x^4 y1 z1^3
    (0, 3, 0, 2),  # y^3 z y1^2 z1^2
    (1, 1, 0, 3),  # x y z^2 y1^3 z1
    (2, 1, 1, 0),  # x^2 y z x1 z1^3
    (0, 0, 1, 3),  # z^4 x1 y1^3
    (1, 0, 2, 0),  # x z^3 x1^2 z1^2
    (3, 1, 2, 2),  # x^3 y x1^2 y1^2
    (0, 4, 3, 0),  # y^4 x1^3 z1
    (1, 2, 3, 1),  # x y^2 z x1^3 y1
}


def test_monomial_enumeration():
    assert len(all_bimonomials()) == 225
    with pytest.raises(ValueError):
        BiMonomial(5, 0, 0, 0)
    with pytest.raises(ValueError):
        BiMonomial(0, 0, 3, 2)
    assert BiMonomial(4, 0, 0, 1).exponents() == (4, 0, 0, 0, 1, 3)
    assert str(BiMonomial(4, 0, 0, 1)) == "x^4*y1*z1^3"


def test_weight_examples():
    m = BiMonomial(4, 0, 0, 1)    # x^4 y1 z1^3
    assert weight(1, 0, m) == 0
    assert weight(0, 1, m) == 0   # 3 + 0 + 0 + 2 = 5
    assert weight(0, 0, m) == 0
    z4 = BiMonomial(0, 0, 1, 3)   # z^4 x1 y1^3
    assert weight(1, 0, z4) == 0  # 2 + 0 + 1 - 3 = 0
    excluded = BiMonomial(4, 0, 4, 0)  # x^4 x1^4
    assert weight(1, 0, excluded) == 0
    assert weight(0, 1, excluded) == 2


def test_invariant_monomials_exactly_the_nine():
    ms = invariant_monomials()
    assert len(ms) == 9
    assert {(m.i, m.j, m.alpha, m.beta) for m in ms} == EXPECTED_INVARIANTS
    assert (4, 0, 4, 0) not in {(m.i, m.j, m.alpha, m.beta) for m in ms}


def test_every_invariant_has_weight_zero_for_all_elements():
    ms = invariant_monomials()
    invariant_set = {(m.i, m.j, m.alpha, m.beta) for m in ms}
    for m in all_bimonomials():
        weights = {weight(a, b, m) for a in range(5) for b in range(5)}
        if (m.i, m.j, m.alpha, m.beta) in invariant_set:
            assert weights == {0}
        else:
            assert weights != {0}


def test_weight_formula_derivation():
    assert verify_weight_derivation()


def test_riemann_roch_count():
    # 9 = chi + K^2 of the quotient surface
    assert len(invariant_monomials()) == 1 + 8
    assert FERMAT_GENUS == 6


def test_ratio_identities():
    identities = builtin_ratio_identities()
    assert [name for name, _, _ in identities] == ["x^5/z^5", "x1^5/z1^5"]
    for _, target, combo in identities:
        assert verify_ratio_identity(target, combo)
    # altering any single power breaks the identity
    for _, target, combo in identities:
        for k in range(len(combo)):
            altered = [(m, p + 1) if idx == k else (m, p)
                       for idx, (m, p) in enumerate(combo)]
            assert not verify_ratio_identity(target, altered)


def test_ratio_vector_invariants():
    with pytest.raises(ValueError):
        RatioVector((1, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        RatioVector.of(w=1)
    v = RatioVector.of(x=5, z=-5)
    assert v.exponents == (5, 0, -5, 0, 0, 0)


def test_combination_vector_matches_manual_expansion():
    ms = {str(m): m for m in invariant_monomials()}
    combo = [(ms["x^3*y*x1^2*y1^2"], 1), (ms["x^4*y1*z1^3"], 1),
             (ms["x^2*y*z*x1*z1^3"], -1), (ms["z^4*x1*y1^3"], -1)]
    assert combination_vector(combo) == (5, 0, -5, 0, 0, 0)


def test_field_lattice_membership():
    gens = ratio_lattice()
    assert len(gens) == 8
    assert field_lattice_contains(x5_over_z5(), gens)
    assert field_lattice_contains(x1_5_over_z1_5(), gens)
    # x/y is not even invariant under the graph action (weight a - b), so it
    # cannot lie in the lattice of invariant-monomial ratios
    assert not field_lattice_contains(RatioVector.of(x=1, y=-1), gens)


def test_ratio_lattice_base_independence():
    ms = invariant_monomials()
    for base_index in (0, 3, 8):
        reordered = ms[base_index:] + ms[:base_index]
        gens = ratio_lattice(reordered)
        assert field_lattice_contains(x5_over_z5(), gens)
        assert not field_lattice_contains(RatioVector.of(x=1, y=-1), gens)


def test_residual_characters_are_additive():
    for m in invariant_monomials():
        lam = residual_character(m)
        for g in FERMAT_GROUP.elements():
            direct = product_action_weight((0, 0), g.coords, m.i, m.j, m.alpha, m.beta)
            assert lam.pairing(g) == direct


def test_residual_kernel():
    assert residual_kernel().order == 1
    single = invariant_monomials()[:1]
    assert residual_kernel(single).order == 25
    ms = invariant_monomials()
    for base_index in (0, 4, 8):
        assert residual_kernel(ms[base_index:] + ms[:base_index]).order == 1


def test_fixed_elements_and_freeness():
    fixed = fermat_fixed_elements()
    assert len(fixed) == 12
    expected = {(a, 0) for a in range(1, 5)} | {(0, b) for b in range(1, 5)} \
        | {(a, a) for a in range(1, 5)}
    assert {g.coords for g in fixed} == expected
    free, witness = is_free(fermat_psi(), fixed, fixed)
    assert free and witness is None


def test_fermat_report():
    report = fermat_report()
    assert report.invariants.as_tuple() == (8, 1, 0, 0)
    assert report.action_free
    assert len(report.monomials) == 9
    assert report.weight_identity
    assert all(ok for _, ok in report.ratio_checks)
    assert all(ok for _, ok in report.lattice_memberships)
    assert report.kernel.is_trivial()
    assert report.verdict.birational


def test_monomial_ratio():
    ms = invariant_monomials()
    r = monomial_ratio(ms[0], ms[0])
    assert r.exponents == (0, 0, 0, 0, 0, 0)
