"""Arithmetic in the six building-block rings R, 2R, C, 2C, Q, 2Q.

Elements are real coordinate tuples. Quaternions use the basis ``1, i, j, k``
with ``i^2 = j^2 = k^2 = -1`` and ``ij = k``. A double ring ``2A`` holds pairs
``(x, y)`` of ``A`` elements and multiplies them componentwise.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .classify import BuildingBlock
from .errors import RingError


def _mul_r(x, y):
    return (x[0] * y[0],)


def _mul_c(x, y):
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c)


def _mul_q(x, y):
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def _conj_r(x):
    return tuple(x)


def _conj_c(x):
    return (x[0], -x[1])


def _conj_q(x):
    return (x[0], -x[1], -x[2], -x[3])


_SINGLE = {
    BuildingBlock.R: (_mul_r, _conj_r),
    BuildingBlock.C: (_mul_c, _conj_c),
    BuildingBlock.Q: (_mul_q, _conj_q),
}


def ring_mul(block: BuildingBlock, x, y) -> tuple:
    if block.is_double:
        h = block.real_dim // 2
        mul = _SINGLE[block.single][0]
        return mul(x[:h], y[:h]) + mul(x[h:], y[h:])
    return _SINGLE[block][0](x, y)


def ring_conj(block: BuildingBlock, x) -> tuple:
    if block.is_double:
        h = block.real_dim // 2
        conj = _SINGLE[block.single][1]
        return conj(x[:h]) + conj(x[h:])
    return _SINGLE[block][1](x)


@lru_cache(maxsize=None)
def structure_tensor(block: BuildingBlock) -> np.ndarray:
    """``T[a, b, c]``: coefficient of unit ``c`` in ``unit_a * unit_b``."""
    d = block.real_dim
    units = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    T = np.zeros((d, d, d), dtype=object)
    for a in range(d):
        for b in range(d):
            T[a, b, :] = ring_mul(block, units[a], units[b])
    T.setflags(write=False)
    return T


def _num_text(x) -> str:
    return str(x)


def _signed(x, unit: str) -> str:
    sign = "-" if x < 0 else "+"
    return f"{sign}{_num_text(abs(x))}{unit}"


def format_coords(block: BuildingBlock, coords) -> str:
    if block.is_double:
        h = block.real_dim // 2
        return f"({format_coords(block.single, coords[:h])} | {format_coords(block.single, coords[h:])})"
    if block is BuildingBlock.R:
        return _num_text(coords[0])
    units = ("", "i", "j", "k")
    return _num_text(coords[0]) + "".join(_signed(c, units[i]) for i, c in enumerate(coords[1:], 1))


class RingOp(enum.Enum):
    ADD = "add"
    MUL = "mul"
    CONJ = "conj"


@dataclass(frozen=True)
class RingElement:
    block: BuildingBlock
    coords: tuple

    def __post_init__(self):
        coords = tuple(self.coords)
        if len(coords) != self.block.real_dim:
            raise RingError(f"{self.block} needs {self.block.real_dim} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    def _same(self, other: "RingElement"):
        if not isinstance(other, RingElement):
            raise RingError(f"expected a RingElement, got {other!r}")
        if other.block is not self.block:
            raise RingError(f"cannot combine {self.block} with {other.block}")

    def __add__(self, other):
        self._same(other)
        return RingElement(self.block, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._same(other)
        return RingElement(self.block, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return RingElement(self.block, tuple(-a for a in self.coords))

    def __mul__(self, other):
        self._same(other)
        return RingElement(self.block, ring_mul(self.block, self.coords, other.coords))

    def conj(self):
        return RingElement(self.block, ring_conj(self.block, self.coords))

    def __str__(self):
        return format_coords(self.block, self.coords)

    @classmethod
    def one(cls, block: BuildingBlock) -> "RingElement":
        return cls(block, unit_coords(block))

    @classmethod
    def zero(cls, block: BuildingBlock) -> "RingElement":
        return cls(block, (0,) * block.real_dim)


def unit_coords(block: BuildingBlock) -> tuple:
    if block.is_double:
        h = block.real_dim // 2
        one = (1,) + (0,) * (h - 1)
        return one + one
    return (1,) + (0,) * (block.real_dim - 1)


def ring_arith(x: RingElement, y: RingElement | None = None, op: RingOp | str = RingOp.MUL) -> RingElement:
    op = RingOp(op)
    if op is RingOp.CONJ:
        if y is not None:
            x._same(y)
        return x.conj()
    if y is None:
        raise RingError(f"{op.value} needs two operands")
    return x + y if op is RingOp.ADD else x * y
