import json

import pytest

from geonum import BuildingBlock, Field, Signature, classify, classify_complex, classify_real, clock_walk
from geonum.classify import (
    CLOCK, MatrixAlgebraShape, emit_tables, pseudoscalar_square_signs, table1_entries,
    table4_entries,
)
from geonum.core import geometric_product

from oracles import DERIVATIONS, PSEUDOSCALAR_SIGNS, TABLE4, table1


def test_table1_oracle():
    oracle = table1()
    assert len(oracle) == 36
    for (p, q), shape in oracle.items():
        assert str(classify_real(p, q)) == shape, (p, q)


@pytest.mark.parametrize("pq,shape", sorted(DERIVATIONS.items()))
def test_derivations(pq, shape):
    assert str(classify_real(*pq)) == shape


def test_table4_oracle():
    assert [str(classify_complex(n)) for n in range(8)] == TABLE4
    assert str(classify(Signature(2, 1, Field.COMPLEX))) == "M2(2C)"


def test_clock_array():
    names = [str(b) for b in CLOCK]
    assert names == ["R", "2R", "R", "C", "Q", "2Q", "Q", "C"]


def test_shape_invariants():
    for p in range(8):
        for q in range(8 - p):
            s = classify_real(p, q)
            assert s.size & (s.size - 1) == 0
            assert s.size ** 2 * s.block.real_dim == 2 ** (p + q)
            assert classify_real(p + 1, q) == classify_real(q + 1, p)
            a, b = classify_real(p + 1, q + 1), classify_real(p, q)
            assert a.block == b.block and a.size == 2 * b.size
    for p in range(7):
        for q in range(7):
            assert classify_real(p + 4, q) == classify_real(p, q + 4)


def test_building_block_dims():
    assert {b.value: b.real_dim for b in BuildingBlock} == {
        "R": 1, "2R": 2, "C": 2, "2C": 4, "Q": 4, "2Q": 8}
    with pytest.raises(ValueError):
        MatrixAlgebraShape(BuildingBlock.R, 3)


def test_clock_walk_example():
    walk = clock_walk(3, 2)
    dirs = [s.direction for s in walk.steps]
    assert dirs == ["clockwise"] * 2 + ["counterclockwise"] * 3
    assert str(walk.steps[1].block) == "Q"
    assert str(walk.steps[-1].block) == "2R"
    assert str(walk.final) == "M4(2R)"
    assert not clock_walk(0, 0).steps and str(clock_walk(0, 0).final) == "R"
    assert str(clock_walk(1, 1).final) == "M2(R)"
    assert "M4(2R)" in walk.narrative()


def test_clock_walk_agrees_everywhere():
    for p in range(8):
        for q in range(8 - p):
            assert clock_walk(p, q).final == classify_real(p, q)


def test_pseudoscalar_sign_row():
    signs = pseudoscalar_square_signs()
    assert "".join(d["sign"] for d in signs) == PSEUDOSCALAR_SIGNS
    # brute force for a few signatures
    for p, q in [(1, 0), (0, 1), (2, 0), (1, 2), (3, 0)]:
        sig = Signature(p, q)
        i = sig.pseudoscalar()
        sq = geometric_product(i, i).scalar_part()
        assert ("+" if sq > 0 else "-") == PSEUDOSCALAR_SIGNS[7 - (p - q)]


def test_emit_tables():
    doc = json.loads(emit_tables("table1", "json"))
    assert len(doc["entries"]) == 36
    assert doc["entries"] == table1_entries()
    row2 = [e for e in doc["entries"] if e["n"] == 2]
    row2.sort(key=lambda e: -e["p"])
    assert [(e["block"], e["matrix_size"]) for e in row2] == [("R", 2), ("R", 2), ("Q", 1)]
    assert len(table4_entries()) == 8
    text = emit_tables("table4")
    assert "C         2C        M2(C)     M2(2C)" in text
    clock = json.loads(emit_tables("clock", "json"))
    assert [h["block"] for h in clock["hours"]] == ["R", "C", "Q", "2Q", "Q", "C", "R", "2R"]
    with pytest.raises(ValueError):
        emit_tables("table9")
