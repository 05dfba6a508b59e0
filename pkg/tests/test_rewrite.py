import pytest
from hypothesis import given, settings, strategies as st

from jordandouble.rewrite import (
    PRESETS,
    RewriteError,
    complete,
    enumerate_basis,
    get_system,
    parse_presentation,
)

LIE_TEXT = """name lie3
gen x natural
gen y natural
gen z natural
rel y x = x y + z
rel z x = x z + x
rel z y = y z{extra}
"""


def test_jacobi_failure_is_reported():
    S, report = complete(parse_presentation(LIE_TEXT.format(extra="")))
    assert not report.confluent
    assert report.unresolved


def test_consistent_lie_presentation_is_confluent():
    S, report = complete(parse_presentation(LIE_TEXT.format(extra=" + y")))
    assert report.confluent and not report.unresolved


def test_unknown_directive():
    with pytest.raises(RewriteError, match="unknown directive"):
        parse_presentation("frobnicate x")


def test_relation_needs_equals():
    with pytest.raises(RewriteError, match="="):
        parse_presentation("name t\ngen x natural\nrel x x")


def test_unknown_preset():
    with pytest.raises(RewriteError, match="unknown preset"):
        get_system("nope")


@pytest.mark.parametrize("name", [p for p in PRESETS])
def test_presets_are_confluent(name):
    _, report = complete(name)
    assert report.confluent, report.unresolved or report.failed_relations


def test_um_straightening():
    S = get_system("um")
    assert S.format(S.elem("b a")) == "c + a b"
    assert S.format(S.elem("a^4")) == "0"
    assert S.format(S.elem("c^2")) == "c"
    assert S.format(S.elem("c a")) == "a + a c"
    assert S.is_finite and len(S.enumerate_basis()) == 32


def test_laurent_generator_cancels():
    D = get_system("Dtilde")
    assert D.format(D.elem("g g^-1")) == "1"
    assert D.format(D.elem("g^-1 g")) == "1"
    assert not D.is_finite


def test_quiver_normal_forms():
    Q = get_system("quiverQI")
    assert Q.normal_form("alpha1 beta1") == {}
    assert Q.normal_form("alpha1 beta2 alpha1") == {}
    assert Q.normal_form("alpha1 beta2") != {}
    assert Q.normal_form("alpha1 beta2") == Q.normal_form("alpha2 beta1")


def test_dump_basis_of_basic_algebra_is_stable():
    S = get_system("basic")
    assert [str(b) for b in enumerate_basis(S)] == ["e0", "e1", "ae0", "a3e1", "b3e0", "be1", "a3b3e0", "abe1"]


def _mono_strategy(S, bound):
    pool = S.enumerate_basis(bound) if not S.is_finite else S.enumerate_basis()
    return st.sampled_from(pool)


@pytest.mark.parametrize("name,bound", [("um", None), ("H", None), ("DH", None), ("UG", 3), ("Dtilde", 2)])
def test_multiplication_is_associative(name, bound):
    S = get_system(name)

    @given(_mono_strategy(S, bound), _mono_strategy(S, bound), _mono_strategy(S, bound))
    @settings(max_examples=60, deadline=None)
    def check(x, y, z):
        X, Y, Z = S.monomial(x), S.monomial(y), S.monomial(z)
        assert (X * Y) * Z == X * (Y * Z)

    check()


@given(st.lists(st.sampled_from(["a", "b", "c"]), min_size=1, max_size=6))
@settings(max_examples=100, deadline=None)
def test_um_words_reduce_consistently(word):
    S = get_system("um")
    whole = S.elem(" ".join(word))
    prod = S.one()
    for w in word:
        prod = prod * S.gen(w)
    assert whole == prod
