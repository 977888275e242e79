"""Exact rank over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def exact_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a matrix of ints/Fractions, computed exactly."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    data = [[Fraction(x) for x in r] for r in rows]
    return DomainMatrix.from_list(data, QQ).rank()
