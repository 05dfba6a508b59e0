import pytest
from hypothesis import given, settings, strategies as st

from jordandouble import reptheory as rt
from jordandouble import zoo
from jordandouble.exactmath import cached_field

# Coefficient sequences (kappa, mu, nu over i = 1..d) of the smallest member
# of each family, read off the coefficient table by hand.
SMALLEST = {
    "U1": ([1, 1, 1, 0, 0], [0, 0, 1, 1, 1], [0, 1, 0, 1, 0]),
    "U2": ([1, 1, 0, 1, 1, 1, 0], [0, 1, 1, 1, 0, 1, 1], [1, 0, 1, 0, 1, 0, 1]),
    "U3": ([1, 1, 1, 0, 1, 1, 0], [0, 1, 1, 0, 1, 1, 1], [1, 0, 1, 0, 1, 0, 1]),
    "U4": ([0, 1, 1, 1, 0], [0, 1, 1, 1, 0], [0, 1, 0, 1, 0]),
    "Vfam1": ([1, 1, 1, 0], [0, 0, 1, 1], [0, 1, 0, 1]),
    "Vfam2": ([1, 1, 0, 0], [0, 1, 1, 1], [1, 0, 1, 0]),
    "Wfam1": ([1, 1, 1, 0], [0, 1, 1, 0], [1, 0, 1, 0]),
    "Wfam2": ([0, 1, 1, 0], [0, 1, 1, 1], [0, 1, 0, 1]),
    "Aband": ([1, 1, 1, 0], [0, 0, 1, 1], [0, 1, 0, 1]),
    "Bband": ([1, 1, 1, 0], [0, 1, 1, 0], [1, 0, 1, 0]),
}


@pytest.mark.parametrize("family", sorted(SMALLEST))
def test_coefficient_table_of_smallest_members(family):
    d = zoo.StringBandSpec(family).dim
    k, m, n = SMALLEST[family]
    assert [zoo.kappa(family, i, d) for i in range(1, d + 1)] == k
    assert [zoo.mu(family, i, d) for i in range(1, d + 1)] == m
    assert [zoo.nu(family, i) for i in range(1, d + 1)] == n


def test_band_xi_only_at_residue_one():
    d = 12
    assert [i for i in range(1, d + 1) if zoo.xi("Aband", i, d)] == [1, 5, 9]
    assert [i for i in range(1, d + 1) if zoo.xi("Bband", i, d)] == [1, 5, 9]
    assert zoo.xi("U1", 1, 9) == 0


def test_family_count_and_labels():
    assert len(zoo.STRING_FAMILIES) == 8 and len(zoo.BAND_FAMILIES) == 2
    assert zoo.StringBandSpec("U1", r=2).label == "U1,2"
    assert zoo.StringBandSpec("Vfam1", t=0).label == "V1,0"
    assert zoo.StringBandSpec("Aband", n=2, lam=3).label == "A[3],2"
    assert zoo.StringBandSpec("Vext", theta=1, lam=0, mu=1).label == "V[1,0,1]"


def test_u1_example():
    X = zoo.make_module("U1", r=1)
    assert X.dim == 5
    assert not any(X.action["a"].mul_vec(X.field.row_unit(4)))  # a z5 = 0


def test_band_example_has_the_lambda_arrow():
    F = cached_field(2)
    X = zoo.make_module("Aband", F, n=2, lam=2)
    b = X.action["b"].to_lists()
    assert b[3][0] == 2 and b[7][4] == 2  # b z1 = lam z4 and b z5 = lam z8 + z4


@pytest.mark.parametrize("kwargs", [{"family": "Aband", "lam": 0}, {"family": "U1", "r": 0}, {"family": "Vfam1", "t": -1}, {"family": "nope"}])
def test_parameter_errors(kwargs):
    with pytest.raises(zoo.ParameterError):
        zoo.StringBandSpec(**kwargs)


@given(st.sampled_from(zoo.STRING_FAMILIES + zoo.BAND_FAMILIES), st.integers(1, 5), st.integers(0, 4), st.integers(1, 15))
@settings(max_examples=60, deadline=None)
def test_every_member_is_a_module_without_jordan_block_two(family, r, t, lam):
    F = cached_field(4)
    spec = zoo.StringBandSpec(family, r=r, t=t, n=r, lam=lam)
    X = zoo.make_module(spec, F)
    assert X.dim == spec.dim
    assert rt.check_representation(X) == []
    assert 2 not in rt.jordan_type(X.action["a"])
    assert 2 not in rt.jordan_type(X.action["b"])


@pytest.mark.parametrize("family", sorted(zoo.DUALITY_TABLE))
def test_duality_partners(family):
    F = cached_field(2)
    spec = zoo.StringBandSpec(family, r=1, t=1, n=1, lam=2)
    partner = zoo.dual_partner(spec)
    assert zoo.DUALITY_TABLE[family] == partner.family
    X = zoo.make_module(spec, F)
    assert rt.isomorphism(zoo.make_module(partner, F), rt.dual_module(X), indecomposable=True).isomorphic


def test_dual_partner_is_an_involution():
    for family in zoo.DUALITY_TABLE:
        spec = zoo.StringBandSpec(family, r=2, t=1, n=1, lam=3)
        assert zoo.dual_partner(zoo.dual_partner(spec)) == spec


def test_small_classification_sweep():
    report = zoo.verify_classification(1, 1, cached_field(2))
    assert report.ok, report


def test_biserial_witnesses():
    for name in ("M", "N"):
        assert all(zoo.biserial_witness(name).values())


def test_pullback_to_double():
    X = zoo.pullback_to_double(zoo.make_module("V1"))
    assert X.dim == 3 and rt.check_representation(X) == []
    assert rt.is_indecomposable(X)


def test_chevalley_twist_over_gf4():
    res = zoo.chevalley_twist_check(cached_field(2), 2)
    assert len(res) == 3
    assert all(v["theta"] and v["theta_inverse"] for v in res.values())


# -- walks, strings and bands ------------------------------------------------


def test_walk_parsing_and_inverse():
    w = zoo.walk("alpha1 alpha2^-1 alpha1")
    assert w.format() == "alpha1 alpha2^-1 alpha1"
    assert w.inverse().format() == "alpha1^-1 alpha2 alpha1^-1"
    assert w.inverse().inverse() == w


def test_string_examples():
    assert zoo.is_string(zoo.walk("alpha1 alpha2^-1 alpha1"))
    assert not zoo.is_string(zoo.walk("alpha1 beta2 alpha1 alpha2^-1"))
    assert not zoo.is_string(zoo.walk("alpha1 beta1"))


def test_strings_of_length_at_most_one():
    got = sorted(w.format() for w in zoo.enumerate_strings(1))
    arrows = ["alpha1", "alpha2", "beta1", "beta2"]
    assert got == sorted(["e0", "e1"] + arrows + [a + "^-1" for a in arrows])


@pytest.mark.parametrize("L", range(0, 11))
def test_enumeration_matches_the_families(L):
    assert set(zoo.enumerate_strings(L)) == zoo.string_families(L)


def test_enumeration_is_bounded():
    with pytest.raises(rt.ResourceError):
        zoo.enumerate_strings(zoo.MAX_WALK_LEN + 1)


def test_exactly_two_bands():
    keys = {zoo.band_key(b) for b in zoo.enumerate_bands(8)}
    assert keys == {zoo.band_key(zoo.walk("alpha1 alpha2^-1")), zoo.band_key(zoo.walk("beta1 beta2^-1"))}
    assert zoo.is_band(zoo.walk("alpha2^-1 alpha1"))
    assert not zoo.is_band(zoo.walk("alpha1 alpha2^-1 alpha1 alpha2^-1"))


def test_dump_module_golden():
    text = zoo.dump_module(zoo.make_module("U1", r=1))
    assert text.splitlines()[0] == 'digraph "U1,1" {'
    assert "  z2 [filled];" in text and "  z1 [hollow];" in text
    assert "  z5 -> z4 [b];" in text
    assert "z4 -> z5" not in text
