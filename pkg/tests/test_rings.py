import itertools
import random
from fractions import Fraction

import pytest

from geonum import BuildingBlock, RingElement, RingError, RingOp, Signature, ring_arith
from geonum.rings import format_coords, structure_tensor

B = BuildingBlock


def q(*c):
    return RingElement(B.Q, c)


def test_quaternion_units_match_g02():
    i, j, k = q(0, 1, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1)
    assert ring_arith(i, j, RingOp.MUL) == k
    # oracle: the same products computed in G(0,2) with i=f1, j=f2, k=f12
    sig = Signature(0, 2)
    gi, gj = sig.f(1), sig.f(2)
    gk = gi * gj
    lookup = {0: 0, 1: 1, 2: 2, 3: 3}
    units = [q(1, 0, 0, 0), i, j, k]
    gunits = [sig.scalar(1), gi, gj, gk]
    for (a, ga), (b, gb) in itertools.product(zip(units, gunits), repeat=2):
        prod = ga * gb
        coords = [0, 0, 0, 0]
        for m, c in prod.items():
            coords[lookup[m]] = c
        assert (a * b).coords == tuple(coords)
    for u in (i, j, k):
        assert u * u == q(-1, 0, 0, 0)
    assert i * j * k == q(-1, 0, 0, 0)


def test_double_componentwise():
    x = RingElement(B.R2, (1, 2))
    y = RingElement(B.R2, (3, 4))
    assert ring_arith(x, y, "mul").coords == (3, 8)
    assert ring_arith(x, y, "add").coords == (4, 6)


def test_conjugation():
    assert ring_arith(RingElement(B.R, (5,)), op=RingOp.CONJ).coords == (5,)
    assert ring_arith(RingElement(B.C, (1, 2)), op="conj").coords == (1, -2)
    assert q(1, 2, 3, 4).conj() == q(1, -2, -3, -4)
    z = RingElement(B.C2, (1, 2, 3, 4))
    assert z.conj().coords == (1, -2, 3, -4)


def test_errors():
    with pytest.raises(RingError):
        ring_arith(RingElement(B.R, (1,)), RingElement(B.C, (1, 0)))
    with pytest.raises(RingError):
        RingElement(B.Q, (1, 2))
    with pytest.raises(RingError):
        ring_arith(q(1, 0, 0, 0), op=RingOp.MUL)


@pytest.mark.parametrize("block", list(BuildingBlock))
def test_ring_axioms(block):
    rng = random.Random(block.real_dim)

    def rand():
        return RingElement(block, tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                                        for _ in range(block.real_dim)))

    one = RingElement.one(block)
    zero = RingElement.zero(block)
    for _ in range(30):
        a, b, c = rand(), rand(), rand()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * one == one * a == a
        assert a + zero == a and a - a == zero
        assert (a * b).conj() == b.conj() * a.conj()
    assert structure_tensor(block).shape == (block.real_dim,) * 3


def test_formatting():
    assert format_coords(B.C, (1, -2)) == "1-2i"
    assert format_coords(B.Q, (1, 2, -3, Fraction(1, 2))) == "1+2i-3j+1/2k"
    assert format_coords(B.R2, (3, 4)) == "(3 | 4)"
    assert format_coords(B.Q2, (1, 0, 0, 0, 0, 1, 0, 0)) == "(1+0i+0j+0k | 0+1i+0j+0k)"
