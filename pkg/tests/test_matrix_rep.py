import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from geonum import (
    BlockMatrix, BuildingBlock, DimError, Field, Signature, SignatureError, classify_real,
    from_matrix, null_frame, null_vectors, represent, theorem2_block, to_matrix,
)
from geonum.core import random_multivector
from geonum.linalg import exact_rank
from geonum.matrix_rep import matrix_unit_violations, reduction_route
from geonum.parser import evaluate_text
from geonum.scalars import I

from oracles import K2_FRAME, TABLE3, TABLE3_KEYS

HALF = Fraction(1, 2)


def g11_named():
    sig = Signature(1, 1)
    a, b, ba, ab = null_vectors(sig, 1)
    return sig, {"a": a, "b": b, "ab": ab, "ba": ba, "0": sig.zero()}


def test_null_vector_rules():
    sig, v = g11_named()
    a, b = v["a"], v["b"]
    assert a * a == sig.zero() == b * b
    assert a * b + b * a == sig.scalar(1)
    assert (a | b) == sig.scalar(HALF)
    with pytest.raises(IndexError):
        null_vectors(sig, 2)


def test_table3():
    sig, v = g11_named()
    for row in TABLE3_KEYS:
        for col, want in zip(TABLE3_KEYS, TABLE3[row]):
            assert v[row] * v[col] == v[want], (row, col)


def test_idempotents():
    sig, v = g11_named()
    up, um = v["ba"], v["ab"]
    u = sig.e(1) * sig.f(1)
    assert up * up == up and um * um == um
    assert up * um == sig.zero() == um * up
    assert up + um == sig.scalar(1)
    assert up == (1 + u) * HALF and um == (1 - u) * HALF
    assert v["ba"] - v["ab"] == u


def test_frame_k1():
    fr = null_frame(1)
    _, v = g11_named()
    assert fr[0, 0] == v["ba"] and fr[0, 1] == v["b"]
    assert fr[1, 0] == v["a"] and fr[1, 1] == v["ab"]


def _word(sig, text):
    names = {}
    for j in (1, 2):
        a, b, u, U = null_vectors(sig, j)
        names.update({f"a{j}": a, f"b{j}": b, f"u{j}": u, f"U{j}": U})
    out = sig.scalar(1)
    for w in text.split():
        out = out * names[w]
    return out


def test_frame_k2_matches_display():
    fr = null_frame(2)
    sig = fr.sig
    for i, j in itertools.product(range(4), repeat=2):
        sign, word = K2_FRAME[i][j]
        assert fr[i, j] == _word(sig, word) * sign, (i, j)


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("plus_one", [False, True])
def test_matrix_unit_law(k, plus_one):
    assert matrix_unit_violations(null_frame(k, plus_one)) == []


def test_matrix_unit_law_k2_brute_force():
    fr = null_frame(2)
    for i, j, m, l in itertools.product(range(4), repeat=4):
        want = fr[i, l] if j == m else fr.sig.zero()
        assert fr[i, j] * fr[m, l] == want


def test_frame_errors():
    with pytest.raises(IndexError):
        null_frame(0)
    with pytest.raises(IndexError):
        null_frame(6)


def test_decomposition_formula():
    sig = Signature(1, 1)
    fr = null_frame(1)
    rng = random.Random(5)
    for _ in range(20):
        g11, g12, g21, g22 = (rng.randint(-9, 9) for _ in range(4))
        e1, f1 = sig.e(1), sig.f(1)
        g = (sig.scalar(HALF * (g11 + g22)) + e1 * (HALF * (g21 + g12))
             + f1 * (HALF * (g21 - g12)) + e1 * f1 * (HALF * (g11 - g22)))
        assert to_matrix(g, fr).tolist() == [[g11, g12], [g21, g22]]
    assert to_matrix(sig.e(1) * sig.f(1), fr).tolist() == [[1, 0], [0, -1]]
    assert from_matrix([[0, 1], [1, 0]], fr) == sig.e(1)


def test_to_matrix_identity_and_errors():
    for k in (1, 2):
        for plus in (False, True):
            fr = null_frame(k, plus)
            M = to_matrix(fr.sig.scalar(1), fr)
            assert (M == np.eye(fr.size, dtype=int)).all()
    with pytest.raises(SignatureError):
        to_matrix(Signature(2, 0).scalar(1), null_frame(1))
    with pytest.raises(DimError):
        from_matrix([[1, 0, 0]], null_frame(1))


def test_complex_unit_in_g12():
    fr = null_frame(1, plus_one=True)
    sig = fr.sig
    i = sig.pseudoscalar()
    for g in sig.generators():
        assert g * i == i * g
    assert i * i == sig.scalar(-1)
    f2 = sig.f(2)
    assert f2 == i * sig.e(1) * sig.f(1)
    lhs = to_matrix(f2, fr)
    rhs = to_matrix(sig.e(1) * sig.f(1), fr)
    assert lhs.tolist() == [[I * x for x in row] for row in rhs.tolist()]


@pytest.mark.parametrize("k,plus_one", [(1, False), (1, True), (2, False), (2, True), (3, False)])
def test_to_matrix_homomorphism_and_round_trip(k, plus_one):
    fr = null_frame(k, plus_one)
    rng = random.Random(k * 10 + plus_one)
    for _ in range(5):
        a, b = random_multivector(fr.sig, rng), random_multivector(fr.sig, rng)
        A, Bm = to_matrix(a, fr), to_matrix(b, fr)
        assert (to_matrix(a * b, fr) == A.dot(Bm)).all()
        assert from_matrix(A, fr) == a
    for _ in range(20 if k < 3 else 5):
        M = np.empty((fr.size, fr.size), dtype=object)
        for i, j in itertools.product(range(fr.size), repeat=2):
            re = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            M[i, j] = re + I * rng.randint(-3, 3) if plus_one else re
        back = to_matrix(from_matrix(M, fr), fr)
        assert (back == M).all()


def test_central_elements():
    sig = Signature(0, 7)
    big = sig.pseudoscalar()
    assert big * big == sig.scalar(1)
    for g in sig.generators():
        assert g * big == big * g


def test_theorem2_block_examples():
    sig = Signature(1, 1)
    s = Signature(0, 0)
    as_ints = lambda blk: [[x.scalar_part() for x in row] for row in blk]  # noqa: E731
    assert as_ints(theorem2_block(sig.e(1))) == [[0, 1], [1, 0]]
    assert as_ints(theorem2_block(sig.f(1))) == [[0, -1], [1, 0]]
    assert as_ints(theorem2_block(sig.scalar(1))) == [[1, 0], [0, 1]]
    assert theorem2_block(sig.scalar(1))[0][0].sig == s
    with pytest.raises(SignatureError):
        theorem2_block(Signature(2, 0).e(1))


def _block_mul(X, Y):
    return [[X[i][0] * Y[0][j] + X[i][1] * Y[1][j] for j in range(2)] for i in range(2)]


@pytest.mark.parametrize("p,q", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)])
def test_theorem2_block_multiplicative(p, q):
    sig = Signature(p, q)
    rng = random.Random(p * 7 + q)
    for _ in range(10):
        a, b = random_multivector(sig, rng), random_multivector(sig, rng)
        assert theorem2_block(a * b) == _block_mul(theorem2_block(a), theorem2_block(b))


def test_represent_examples():
    g02 = Signature(0, 2)
    m = represent(g02.f(1))
    assert m.shape == classify_real(0, 2) and m.entry(0, 0).coords == (0, 1, 0, 0)
    assert represent(g02.f(1) * g02.f(2)).entry(0, 0).coords == (0, 0, 0, 1)
    g32 = Signature(3, 2)
    assert str(represent(g32.e(1)).shape) == "M4(2R)"
    h = represent(evaluate_text("1 + e1", Signature(1, 0)))
    assert h.entry(0, 0).coords == (2, 0)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(8) for q in range(8 - p)])
def test_represent_shape_and_identity(p, q):
    sig = Signature(p, q)
    one = represent(sig.scalar(1))
    assert one.shape == classify_real(p, q)
    assert one == BlockMatrix.identity(one.ring, one.size)
    assert reduction_route(p, q)[-1].startswith("base")


@pytest.mark.parametrize("p,q", [(0, 3), (3, 0), (0, 5), (1, 3), (4, 0), (2, 2)])
def test_represent_homomorphism_and_faithful(p, q):
    sig = Signature(p, q)
    rng = random.Random(11)
    for _ in range(20):
        a, b = random_multivector(sig, rng), random_multivector(sig, rng)
        assert represent(a * b) == represent(a) @ represent(b)
        assert represent(a + b) == represent(a) + represent(b)
    rows = [represent(sig.blade(m)).flat() for m in range(sig.dim)]
    assert exact_rank(rows) == sig.dim


def test_represent_rejects_complex():
    with pytest.raises(SignatureError):
        represent(Signature(1, 1, Field.COMPLEX).scalar(1))


def test_block_matrix_json():
    doc = represent(Signature(0, 1).f(1) * HALF).to_dict()
    assert doc == {"ring": "C", "size": 1, "entries": [[[0, "1/2"]]]}
    assert BlockMatrix.identity(BuildingBlock.Q, 2).to_text().startswith("M2(Q)")
