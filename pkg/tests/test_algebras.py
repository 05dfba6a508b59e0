import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from jordandouble.algebras import (
    CHEVALLEY,
    BitEchelon,
    basic_algebra_data,
    build,
    check_lie_automorphism,
    lie_m,
    phi_g,
    quiver_map_check,
    subalgebra_basis,
)
from jordandouble.exactmath import cached_field


@pytest.mark.parametrize("name,dim", [("um", 32), ("H", 32), ("Hstar", 32), ("DH", 1024), ("basic", 8), ("quiverQI", 8)])
def test_dimensions(name, dim):
    assert build(name).dim == dim


def test_unit_and_associativity_on_random_triples():
    rng = random.Random(5)
    for name in ("um", "H", "Hstar", "basic", "quiverQI"):
        A = build(name)
        for _ in range(200):
            x, y, z = (rng.getrandbits(A.dim) for _ in range(3))
            assert A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z))
            assert A.mul(A.unit, x) == x == A.mul(x, A.unit)


def test_double_associativity_sampled():
    rng = random.Random(6)
    A = build("DH")
    for _ in range(30):
        i, j, k = (rng.randrange(A.dim) for _ in range(3))
        assert A.mul(A.mul_basis(i, j), 1 << k) == A.mul(1 << i, A.mul_basis(j, k))


def test_left_matrix_is_a_representation():
    A = build("um")
    rng = random.Random(2)
    for _ in range(20):
        x, y = rng.getrandbits(32), rng.getrandbits(32)
        assert A.left_matrix(A.mul(x, y)) == A.left_matrix(x) @ A.left_matrix(y)


@given(st.lists(st.integers(0, (1 << 12) - 1), max_size=20))
@settings(max_examples=100, deadline=None)
def test_bit_echelon_coordinates(vectors):
    E = BitEchelon()
    kept = []
    for v in vectors:
        if E.add(v):
            kept.append(v)
    for v in vectors:
        c = E.coordinates(v)
        assert c is not None
        s = 0
        for i, u in enumerate(kept):
            if c >> i & 1:
                s ^= u
        assert s == v
    assert len(E) == len(kept)


def test_subalgebra_K_has_dimension_32():
    A = build("DH")
    K = subalgebra_basis(A, [A.elem(s) for s in ("x1", "x21", "g", "w1", "w21")])
    assert len(K) == 32


def test_chevalley_is_an_automorphism():
    L = lie_m()
    assert check_lie_automorphism(phi_g(L, *CHEVALLEY), L) == (True, None)


def test_phi_g_is_an_automorphism_exactly_for_determinant_one_over_gf4():
    F = cached_field(2)
    L = lie_m(F)
    good = 0
    for k, l, m, z in itertools.product(range(4), repeat=4):
        det = F.mul(k, z) ^ F.mul(l, m)
        ok, _ = check_lie_automorphism(phi_g(L, k, l, m, z), L)
        assert ok == (det == 1)
        good += ok
    assert good == 60  # |SL_2(4)|


def test_a_non_automorphism_is_rejected():
    L = lie_m()
    phi = phi_g(L, *CHEVALLEY)
    phi = dict(phi, c=L.vec({"c": 1, "a": 1}))
    ok, witness = check_lie_automorphism(phi, L)
    assert not ok and witness


def test_basic_algebra_data():
    data = basic_algebra_data()
    assert all(data.check_idempotents().values())
    n, bad = data.check_psi()
    assert n == 64 and bad == []


def test_quiver_map():
    res = quiver_map_check(build("quiverQI"), build("basic"))
    assert res["surjective"] and res["arrows_compatible"]
    assert all(res["relations_to_zero"].values()) and len(res["relations_to_zero"]) == 6
    assert res["quotient_dim"] == 8
