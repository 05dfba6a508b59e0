import pytest

from jordandouble import algebras
from jordandouble import hopf as hp


@pytest.mark.parametrize("name", ["um", "H", "Hstar"])
def test_hopf_axioms_hold_on_finite_presets(name):
    checks = hp.check_hopf_axioms(hp.hopf(name), samples=300)
    assert all(c.status == hp.PASS for c in checks), [c for c in checks if c.status != hp.PASS]


@pytest.mark.slow
def test_hopf_axioms_hold_on_the_double():
    checks = hp.check_hopf_axioms(hp.hopf("DH"), samples=200)
    assert all(c.status == hp.PASS for c in checks), [c for c in checks if c.status != hp.PASS]


def test_antipode_is_involutive_on_u_m():
    assert hp.antipode_power_check(hp.hopf("um"), 2) == (True, None)


@pytest.mark.parametrize("name", ["H", "DH"])
def test_antipode_square_is_conjugation_by_g(name):
    assert hp.antipode_power_check(hp.hopf(name), 2, conj_by="g") == (True, None)


@pytest.mark.parametrize("name,witness", [("H", "x2"), ("Hstar", "w2"), ("DH", "x2")])
def test_antipode_has_order_four(name, witness):
    A = hp.hopf(name)
    assert hp.antipode_power_check(A, 4) == (True, None)
    ok, w = hp.antipode_power_check(A, 2)
    assert not ok and w == witness


def test_conjugation_needs_an_invertible_generator():
    with pytest.raises(ValueError, match="not invertible"):
        hp.antipode_power_check(hp.hopf("Hstar"), 2, conj_by="gamma")


def test_counit_and_coproduct_of_generators():
    H = hp.hopf("H")
    S = H.system
    assert hp.counit(S.elem("g"), H) == 1
    assert hp.counit(S.elem("x1"), H) == 0
    delta = hp.coproduct(S.elem("g"), H)
    assert hp.t_format(S, delta) == "g (x) g"


def test_exact_sequence_through_u_m():
    D, um = algebras.build("DH"), algebras.build("um")
    K = algebras.subalgebra_basis(D, [D.elem(s) for s in ("x1", "x21", "g", "w1", "w21")])
    checks, ker_dim = hp.exact_sequence_check(K, D, hp.hopf("DH"), um, hp.hopf("um"), hp.named_map("pi_u"))
    assert ker_dim == 992
    assert all(c.status == hp.PASS for c in checks), [c for c in checks if c.status != hp.PASS]


def test_double_is_unimodular():
    left, right, same = hp.integral_spaces(algebras.build("DH"), hp.hopf("DH"))
    assert len(left) == len(right) == 1 and same


def test_integral_of_group_algebra_of_order_two():
    A, H = hp.group_algebra_c2()
    left, right, same = hp.integral_spaces(A, H)
    assert same and [A.format(v) for v in left] == ["1 + g"]


def test_adjoint_stability_detects_a_non_normal_span():
    A = algebras.build("H")
    ok, w = hp.adjoint_stable(hp.hopf("H"), A, [A.elem("x2")])
    assert not ok and w == "ad(x1)(x2) = x21"


def test_adjoint_stability_of_the_whole_algebra():
    A = algebras.build("um")
    assert hp.adjoint_stable(hp.hopf("um"), A, [1 << i for i in range(A.dim)]) == (True, None)


@pytest.mark.parametrize(
    "h,k,value",
    [("x1", "w2", 1), ("x1", "w1", 0), ("1", "w2", 0), ("g", "zeta", 1), ("g^-1", "zeta", 1), ("g", "zeta^2", 1), ("g^2", "zeta", 0)],
)
def test_skew_pairing_values(h, k, value):
    tau = hp._default_tau()
    assert hp.skew_pairing(tau.Hs.elem(h), tau.Ks.elem(k)) == value


def test_skew_pairing_axioms():
    checks = hp.check_pairing_axioms(samples=200)
    assert all(c.status == hp.PASS for c in checks), [c for c in checks if c.status != hp.PASS]


def test_dtilde_checks_pass():
    checks = hp.dtilde_checks(samples=200)
    assert all(c.status in (hp.PASS, hp.BOUNDED) for c in checks), [c for c in checks if c.status == hp.FAIL]


@pytest.mark.slow
def test_diagram_checks_pass():
    checks = hp.diagram_checks()
    assert all(c.status in (hp.PASS, hp.BOUNDED) for c in checks), [c for c in checks if c.status == hp.FAIL]


def test_status_of():
    assert hp.status_of(True) == hp.PASS
    assert hp.status_of(False) == hp.FAIL
    assert hp.status_of(True, bounded=True) == hp.BOUNDED
