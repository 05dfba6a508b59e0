import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from jordandouble import reptheory as rt
from jordandouble import zoo
from jordandouble.exactmath import Matrix, cached_field, invert

F2 = cached_field(1)


def _nilpotent_from_blocks(F, sizes):
    n = sum(sizes)
    rows = [[0] * n for _ in range(n)]
    start = 0
    for s in sizes:
        for i in range(s - 1):
            rows[start + i + 1][start + i] = 1
        start += s
    return Matrix.from_lists(F, rows)


@given(st.lists(st.integers(1, 5), min_size=1, max_size=4))
@settings(max_examples=80, deadline=None)
def test_jordan_type_recovers_block_sizes(sizes):
    N = _nilpotent_from_blocks(F2, sizes)
    assert rt.jordan_type(N) == sorted(sizes, reverse=True)


def test_jordan_type_is_invariant_under_conjugation():
    F = cached_field(4)
    rng = random.Random(3)
    N = _nilpotent_from_blocks(F, [3, 2, 2, 1])
    while True:
        P = Matrix.from_lists(F, [[F.random(rng) for _ in range(8)] for _ in range(8)])
        if P.rank() == 8:
            break
    assert rt.jordan_type(P @ N @ invert(P)) == [3, 2, 2, 1]


def test_simples_of_u_m():
    V0, V1 = rt.classify_simples("um")
    assert (V0.dim, V1.dim) == (1, 3)
    assert rt.is_simple(V1) and rt.is_isomorphic(V1, zoo.make_module("V1"))
    assert rt.jordan_type(V1.action["a"]) == [3]


def test_simple_classification_of_u_m_counts_factors():
    sc = rt.simple_classification("um")
    assert [s.dim for s in sc.simples] == [1, 3]
    assert sc.factor_counts == [8, 8]
    assert sum(c * s.dim for c, s in zip(sc.factor_counts, sc.simples)) == 32


def test_two_dimensional_representations_are_trivial():
    valid, nonzero = rt.small_um_representations(2)
    assert valid == 1 and nonzero == 0


def test_ext_table():
    V0, V1 = rt.classify_simples("um")
    table = [rt.ext1("um", S, T) for S, T in itertools.product((V0, V1), repeat=2)]
    assert table == [0, 2, 2, 0]


def test_projective_covers():
    P = rt.projective_covers()
    assert P["V0"].dim == P["V1"].dim == 8
    assert rt.is_isomorphic(P["V0"], zoo.make_module("M"))
    assert rt.is_isomorphic(P["V1"], zoo.make_module("N"))


@pytest.mark.parametrize(
    "name,factors,radical",
    [("M", ["V0", "V1", "V1", "V0"], [8, 7, 1, 0]), ("N", ["V1", "V0", "V0", "V1"], [8, 5, 3, 0])],
)
def test_composition_series_of_projectives(name, factors, radical):
    s = rt.module_series(zoo.make_module(name))
    assert s.factors == factors
    assert s.radical == radical
    assert not rt.is_uniserial(zoo.make_module(name))


def test_radical_series_of_a_string_module_is_loewy():
    X = zoo.make_module("U1", r=1)
    s = rt.module_series(X)
    assert s.radical[0] == X.dim and s.radical[-1] == 0
    assert s.socle[0] == 0 and s.socle[-1] == X.dim


def test_algebra_radical_of_u_m():
    J = rt.radical_of_algebra("um")
    assert len(J) == 32 - 1 - 9


def test_duals():
    V0, V1 = rt.classify_simples("um")
    assert rt.is_isomorphic(rt.dual_module(V1), V1)
    X = zoo.make_module("U1", r=1)
    D = rt.dual_module(X)
    assert rt.check_representation(D) == []
    assert rt.is_isomorphic(D, zoo.make_module("U4", r=1))
    assert rt.is_isomorphic(rt.dual_module(D), X)
    assert rt.is_isomorphic(rt.dual_module(X, use_inverse_antipode=True), D)


def test_chevalley_involution():
    S = zoo.make_module("V1").algebra
    theta = rt.chevalley_theta()
    assert rt.inverse_automorphism(S, theta) == theta


def test_direct_sums_are_decomposable_by_either_method():
    F = cached_field(4)
    A = zoo.make_module("Aband", F, n=1, lam=2)
    exhaustive = rt.is_indecomposable(rt.direct_sum(A, A))
    A2 = zoo.make_module("Aband", F, n=2, lam=2)
    structural = rt.is_indecomposable(rt.direct_sum(A2, A))
    assert not exhaustive and not structural
    assert rt.is_indecomposable(A2)


def test_local_end_isomorphism_agrees_with_the_general_test():
    F = cached_field(2)
    X = zoo.make_module("Aband", F, n=2, lam=2)
    Y = zoo.make_module("Aband", F, n=2, lam=3)
    assert rt.isomorphism(X, X, indecomposable=True).method == "local-end"
    assert rt.isomorphism(X, X, indecomposable=True).isomorphic
    assert not rt.isomorphism(X, Y, indecomposable=True).isomorphic
    assert not rt.isomorphism(X, Y).isomorphic


def test_invalid_representation_is_rejected():
    zero = Matrix.zeros(F2, 2)
    with pytest.raises(rt.RepresentationError):
        rt.Representation("um", {"a": Matrix.identity(F2, 2), "b": zero, "c": zero}, F2, "bad")


def test_submodule_and_quotient():
    M = zoo.make_module("M")
    rad = rt.radical(M)
    assert rt.is_submodule(M, rad)
    top = rt.quotient_representation(M, rad)
    assert top.dim == 1
