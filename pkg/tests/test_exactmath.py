import random

import pytest
from hypothesis import given, settings, strategies as st

from jordandouble.exactmath import (
    Echelon,
    Field,
    FieldError,
    Matrix,
    cached_field,
    default_modulus,
    invert,
    nullspace,
    row_reduce,
)


# an independent reference field: carry-less products reduced bit by bit


def ref_mul(a, b, modulus, k):
    p = 0
    while b:
        if b & 1:
            p ^= a
        b >>= 1
        a <<= 1
        if a >> k & 1:
            a ^= modulus
    return p


def ref_inv(a, modulus, k):
    for x in range(1, 1 << k):
        if ref_mul(a, x, modulus, k) == 1:
            return x
    raise ZeroDivisionError


def ref_rank(rows, modulus, k):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = ref_inv(rows[rank][c], modulus, k)
        rows[rank] = [ref_mul(x, inv, modulus, k) for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x ^ ref_mul(f, y, modulus, k) for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def test_default_moduli_are_smallest_irreducible():
    assert default_modulus(1) == 0b10  # x: smallest degree-1 polynomial, still GF(2)
    assert default_modulus(2) == 0b111
    assert default_modulus(4) == 0b10011
    assert default_modulus(8) == 0b100011011


def test_reducible_modulus_is_rejected():
    with pytest.raises(FieldError, match="reducible"):
        Field(4, 0b10101)  # (x^2 + x + 1)^2


def test_degree_out_of_range():
    with pytest.raises(FieldError):
        Field(17)


@pytest.mark.parametrize("k", range(1, 9))
def test_multiplication_matches_reference_exhaustively(k):
    F = cached_field(k)
    q = F.order
    pairs = [(a, b) for a in range(q) for b in range(q)] if k <= 6 else [(a, b) for a in range(q) for b in (0, 1, 2, 3, 0x53, q - 1)]
    for a, b in pairs:
        assert F.mul(a, b) == ref_mul(a, b, F.modulus, k)


@pytest.mark.parametrize("k", range(1, 9))
def test_frobenius_exhaustively(k):
    F = cached_field(k)
    for a in range(F.order):
        assert F.frobenius(a) == F.mul(a, a)
        x = a
        for _ in range(k):
            x = F.frobenius(x)
        assert x == a
        assert F.sqrt(F.frobenius(a)) == a
    # additive
    for a in range(0, F.order, max(1, F.order // 16)):
        for b in range(F.order):
            assert F.frobenius(a ^ b) == F.frobenius(a) ^ F.frobenius(b)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 8])
def test_inverses(k):
    F = cached_field(k)
    for a in F.nonzero():
        assert F.mul(a, F.inv(a)) == 1


@given(st.integers(1, 10), st.data())
@settings(max_examples=200, deadline=None)
def test_field_axioms(k, data):
    F = cached_field(k)
    a, b, c = (data.draw(st.integers(0, F.order - 1)) for _ in range(3))
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.mul(a, b ^ c) == F.mul(a, b) ^ F.mul(a, c)
    assert F.mul(a, b) == F.mul(b, a)


def _random_matrix(F, rng, n, m, density):
    return [[F.random(rng) if rng.random() < density else 0 for _ in range(m)] for _ in range(n)]


def test_rank_nullspace_inverse_on_random_matrices():
    rng = random.Random(1234)
    count = 0
    for trial in range(1200):
        k = rng.choice([1, 1, 2, 3, 4, 8])
        F = cached_field(k)
        n, m = rng.randint(1, 9), rng.randint(1, 9)
        data = _random_matrix(F, rng, n, m, rng.choice([0.2, 0.5, 0.9]))
        M = Matrix.from_lists(F, data)
        r = M.rank()
        assert r == ref_rank(data, F.modulus, k)
        kern = nullspace(M)
        assert len(kern) == m - r
        for v in kern:
            assert not any(M.mul_vec(v))
        rank, piv, K, R = row_reduce(M)
        assert rank == r and len(piv) == r and K.ncols == m - r
        if n == m:
            inv = invert(M)
            if r == n:
                assert (M @ inv).is_identity() and (inv @ M).is_identity()
            else:
                assert inv == "singular"
        count += 1
    assert count >= 1000


def test_transpose_and_product():
    rng = random.Random(7)
    F = cached_field(4)
    for _ in range(100):
        A = Matrix.from_lists(F, _random_matrix(F, rng, 3, 4, 0.6))
        B = Matrix.from_lists(F, _random_matrix(F, rng, 4, 2, 0.6))
        assert (A @ B).transpose() == B.transpose() @ A.transpose()
        assert A.transpose().transpose() == A


def test_echelon_membership():
    F = cached_field(2)
    E = Echelon(F, 4)
    u = F.row_from([1, 2, 0, 3])
    v = F.row_from([0, 1, 1, 0])
    assert E.add(u) and E.add(v)
    w = F.row_axpy(F.row_scale(u, 3), 2, v)
    assert E.contains(w)
    assert not E.add(w)
    assert len(E) == 2
    assert not E.contains(F.row_unit(3))


def test_block_diag_and_identity():
    F = cached_field(1)
    I2 = Matrix.identity(F, 2)
    Z = Matrix.zeros(F, 1)
    D = I2.block_diag(Z)
    assert D.to_lists() == [[1, 0, 0], [0, 1, 0], [0, 0, 0]]
    assert D.rank() == 2
