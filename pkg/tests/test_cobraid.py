from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracle
from homsmash.catalog import catalog_action, catalog_forms, catalog_kz2, catalog_taft_twisted
from homsmash.cobraid import (
    BilinearForm,
    CobraidingData,
    assemble_sigma,
    check_cobraiding,
    check_cobraiding_data,
    check_D_conditions,
    check_D_prime_conditions,
    check_skew_pairing,
    convolution_inverse_candidate,
    counit_pairing,
    decompose_sigma,
)
from homsmash.exactlin import LinMap, identity, swap, tensor
from homsmash.homcore import HomHopfAlgebra
from homsmash.smash import ConditionFailed, TwistMap, build_r_smash, build_smash

KS = [1, 2, -1, Fraction(3, 2)]


def setup(k):
    act = catalog_action(k)
    H, K = act.carrier, act.acting
    return H, K, act, build_smash(H, K, act), catalog_forms(k)


def test_catalog_form_tables():
    d = catalog_forms(2)
    assert d.phi.matrix()[1][1] == -1  # phi(g, a)
    assert d.psi.matrix()[1][3] == 0  # psi(a, gx)
    assert d.upsilon(1, 1) == -1
    assert d.tau(1, 1) == -1 and all(d.tau(i, j) == 0 for i in range(4) for j in range(4) if 2 in (i, j) or 3 in (i, j))


@pytest.mark.parametrize("k", KS)
def test_component_forms_pass(k):
    H, K, _, _, d = setup(k)
    assert check_cobraiding(K, d.upsilon).ok
    assert check_cobraiding(H, d.tau).ok
    assert check_skew_pairing(H, K, d.phi).ok
    assert check_skew_pairing(K, H, d.psi).ok
    assert oracle.cobraiding_ok(K, d.upsilon.matrix())
    assert oracle.cobraiding_ok(H, d.tau.matrix())


def test_all_ones_form_on_kz2_is_a_cobraiding():
    K = catalog_kz2()
    ones = BilinearForm.from_matrix([[1, 1], [1, 1]])
    assert ones == counit_pairing(K, K)
    assert check_cobraiding(K, ones).ok


def test_broken_upsilon():
    K = catalog_kz2()
    ups = BilinearForm.from_matrix([[1, 1], [1, 2]])
    rep = check_cobraiding(K, ups)
    assert rep["CHA2"].witness_names == ("a", "a", "a")
    assert rep["CHA4"].passed  # commutative and cocommutative
    assert not oracle.cobraiding_ok(K, ups.matrix())


def test_counit_pairings_are_skew_pairings():
    H, K = catalog_taft_twisted(2), catalog_kz2()
    for A, B in ((H, K), (K, H), (H, H), (K, K)):
        assert check_skew_pairing(A, B, counit_pairing(A, B)).ok


def test_convolution_inverse_candidates():
    H, K, _, _, d = setup(2)
    cand, rep = convolution_inverse_candidate(H, K, d.phi)
    assert rep.ok and cand == d.phi
    cand, rep = convolution_inverse_candidate(K, K, d.upsilon)
    assert rep.ok and cand == d.upsilon
    eps = counit_pairing(H, K)
    cand, rep = convolution_inverse_candidate(H, K, eps)
    assert rep.ok and cand == eps
    for name, (L, R) in (("tau", (H, H)), ("psi", (K, H))):
        assert convolution_inverse_candidate(L, R, getattr(d, name))[1].ok


@pytest.mark.parametrize("k", KS)
def test_d_conditions_both_routes(k):
    H, K, act, S, d = setup(k)
    plain = check_D_conditions(H, K, S.twist, d)
    primed = check_D_prime_conditions(H, K, act, d)
    assert plain.ok and primed.ok
    assert plain.names() == ["D%d" % i for i in range(1, 7)]
    assert primed.names() == ["D%d'" % i for i in range(1, 7)]


def test_flipped_psi_breaks_a_d_condition():
    H, K, act, S, d = setup(2)
    bad = replace(d, psi=BilinearForm.from_matrix([[1, 1, 0, 0], [1, 1, 0, 0]]))
    # the modified psi is still a skew pairing, so only the compatibility fails
    assert check_skew_pairing(K, H, bad.psi).ok
    primed = check_D_prime_conditions(H, K, act, bad)
    plain = check_D_conditions(H, K, S.twist, bad)
    assert [c.name for c in primed.failures] == ["D5'"]
    assert primed["D5'"].witness_names == ("a", "x")
    assert [c.name for c in plain.failures] == ["D5"]
    assert primed["D2'"].passed
    with pytest.raises(ConditionFailed, match="D5"):
        assemble_sigma(H, K, bad, T=S.twist)


def test_one_dimensional_factor():
    k1 = HomHopfAlgebra.from_maps(("1",), identity(1), identity(1), identity(1), identity(1), identity(1), identity(1))
    K = catalog_kz2()
    T = TwistMap(K, k1, swap(2, 1))
    d = CobraidingData(counit_pairing(k1, k1), catalog_forms(2).upsilon, counit_pairing(k1, K), counit_pairing(K, k1))
    assert check_D_conditions(k1, K, T, d).ok
    S = build_r_smash(k1, K, T)
    sigma = assemble_sigma(k1, K, d, T=T)
    assert sigma.matrix() == d.upsilon.matrix()
    assert check_cobraiding(S.underlying, sigma).ok


@pytest.mark.parametrize("k", KS)
def test_sigma_matches_brute_force(k):
    H, K, _, S, d = setup(k)
    sigma = assemble_sigma(H, K, d, T=S.twist)
    want = oracle.sigma_table(H, K, d.tau.matrix(), d.upsilon.matrix(), d.phi.matrix(), d.psi.matrix())
    assert sigma.matrix() == want
    assert oracle.cobraiding_ok(S.underlying, want)


def test_sigma_unit_row_is_counit():
    H, K, _, S, d = setup(2)
    sigma = assemble_sigma(H, K, d, T=S.twist)
    assert sigma.matrix()[0] == S.counit.entries()[0]
    assert [r[0] for r in sigma.matrix()] == S.counit.entries()[0]


@pytest.mark.parametrize("k", KS)
def test_decomposition_properties(k):
    H, K, _, S, d = setup(k)
    sigma = assemble_sigma(H, K, d, T=S.twist)
    back = decompose_sigma(S, sigma)
    assert back == d
    assert check_cobraiding_data(H, K, S.twist, back).ok
    # unit identities: every form against a unit is the counit
    for f, L, R in ((back.tau, H, H), (back.upsilon, K, K), (back.phi, H, K), (back.psi, K, H)):
        assert (f.map @ tensor(L.unit, identity(R.dim))) == R.counit
        assert (f.map @ tensor(identity(L.dim), R.unit)) == L.counit
        # invariance under the structure maps
        assert f.precompose(L.alpha, R.alpha) == f
    assert assemble_sigma(H, K, back, T=S.twist) == sigma


def test_decompose_trivial_cobraiding():
    # the counit pairing needs a commutative algebra to satisfy CHA4
    K = catalog_kz2()
    S = build_r_smash(K, K, TwistMap(K, K, swap(2, 2)))
    eps = counit_pairing(S, S)
    d = decompose_sigma(S, eps)
    assert d == CobraidingData(*(counit_pairing(K, K),) * 4)
    assert assemble_sigma(K, K, d, T=S.twist) == eps
    H = catalog_taft_twisted(2)
    P = build_r_smash(H, K, TwistMap(K, H, tensor(H.alpha, K.alpha) @ swap(2, 4)))
    assert not check_cobraiding(P.underlying, counit_pairing(P, P)).ok


def test_decompose_rejects_non_cobraiding():
    H, K, _, S, d = setup(2)
    junk = BilinearForm(8, 8, LinMap.row([1] * 64))
    with pytest.raises(ConditionFailed):
        decompose_sigma(S, junk)


_d2 = catalog_forms(2)
REFERENCE_SIGMA = oracle.sigma_table(
    catalog_taft_twisted(2), catalog_kz2(), _d2.tau.matrix(), _d2.upsilon.matrix(), _d2.phi.matrix(), _d2.psi.matrix()
)


@settings(max_examples=15, deadline=None)
@given(st.fractions(min_value=-4, max_value=4, max_denominator=4).filter(lambda q: q != 0))
def test_sigma_independent_of_k(k):
    H, K, _, S, d = setup(k)
    sigma = assemble_sigma(H, K, d, T=S.twist)
    assert sigma.matrix() == REFERENCE_SIGMA
    assert check_cobraiding(S.underlying, sigma).ok

