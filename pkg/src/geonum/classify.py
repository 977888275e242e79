"""Classification of real and complex geometric algebras as matrix algebras.

Every real G(p,q) is isomorphic to ``M_N(B)`` for a building block ``B`` that
depends only on ``(p - q) mod 8``. The clock below lists the blocks in
clockwise order starting from the top hour; one clockwise hour is one extra
``f`` generator and one counterclockwise hour one extra ``e`` generator.
"""
from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass

from .core import Signature


class BuildingBlock(enum.Enum):
    R = "R"
    R2 = "2R"
    C = "C"
    C2 = "2C"
    Q = "Q"
    Q2 = "2Q"

    @property
    def real_dim(self) -> int:
        return _REAL_DIM[self]

    @property
    def is_double(self) -> bool:
        return self in (BuildingBlock.R2, BuildingBlock.C2, BuildingBlock.Q2)

    @property
    def single(self) -> "BuildingBlock":
        """The block a double block is built from (itself for singles)."""
        return {BuildingBlock.R2: BuildingBlock.R, BuildingBlock.C2: BuildingBlock.C,
                BuildingBlock.Q2: BuildingBlock.Q}.get(self, self)

    def __str__(self):
        return self.value


_REAL_DIM = {
    BuildingBlock.R: 1, BuildingBlock.R2: 2, BuildingBlock.C: 2,
    BuildingBlock.C2: 4, BuildingBlock.Q: 4, BuildingBlock.Q2: 8,
}

B = BuildingBlock

# hours clockwise from the top of the clock
CLOCK_HOURS = (B.R, B.C, B.Q, B.Q2, B.Q, B.C, B.R, B.R2)

# block of G(p,q) indexed by (p - q) mod 8
CLOCK = tuple(CLOCK_HOURS[(-d) % 8] for d in range(8))


@dataclass(frozen=True)
class MatrixAlgebraShape:
    block: BuildingBlock
    size: int

    def __post_init__(self):
        if self.size < 1 or self.size & (self.size - 1):
            raise ValueError(f"matrix size must be a power of two, got {self.size}")

    @property
    def real_dim(self) -> int:
        return self.size * self.size * self.block.real_dim

    def __str__(self):
        if self.size == 1:
            return str(self.block)
        return f"M{self.size}({self.block})"

    def to_dict(self) -> dict:
        return {"block": self.block.value, "matrix_size": self.size}


def _shape_for(block: BuildingBlock, n: int) -> MatrixAlgebraShape:
    total = 1 << n
    if total % block.real_dim:
        raise ValueError(f"block {block} cannot fill a {total}-dimensional algebra")
    sq = total // block.real_dim
    N = math.isqrt(sq)
    if N * N != sq:
        raise ValueError(f"block {block} does not give a square matrix algebra for n={n}")
    return MatrixAlgebraShape(block, N)


def classify_real(p: int, q: int) -> MatrixAlgebraShape:
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    return _shape_for(CLOCK[(p - q) % 8], p + q)


def classify_complex(n: int) -> MatrixAlgebraShape:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n % 2 == 0:
        return MatrixAlgebraShape(B.C, 1 << (n // 2))
    return MatrixAlgebraShape(B.C2, 1 << ((n - 1) // 2))


def classify(sig: Signature) -> MatrixAlgebraShape:
    if sig.is_complex:
        return classify_complex(sig.n)
    return classify_real(sig.p, sig.q)


@dataclass(frozen=True)
class ClockStep:
    direction: str  # "clockwise" | "counterclockwise"
    hour: int
    block: BuildingBlock


@dataclass(frozen=True)
class ClockWalk:
    p: int
    q: int
    steps: tuple[ClockStep, ...]
    final: MatrixAlgebraShape

    def narrative(self) -> str:
        lines = [f"start at hour 0: {CLOCK_HOURS[0]}"]
        for i, s in enumerate(self.steps, 1):
            lines.append(f"step {i}: {s.direction} to hour {s.hour}: {s.block}")
        lines.append(f"{self.p + self.q} hours elapsed: G({self.p},{self.q}) = {self.final}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "p": self.p, "q": self.q,
            "steps": [{"direction": s.direction, "hour": s.hour, "block": s.block.value}
                      for s in self.steps],
            "final": self.final.to_dict(),
        }


def clock_walk(p: int, q: int) -> ClockWalk:
    """Walk ``q`` hours clockwise then ``p`` hours counterclockwise from the top."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    hour = 0
    steps = []
    for _ in range(q):
        hour = (hour + 1) % 8
        steps.append(ClockStep("clockwise", hour, CLOCK_HOURS[hour]))
    for _ in range(p):
        hour = (hour - 1) % 8
        steps.append(ClockStep("counterclockwise", hour, CLOCK_HOURS[hour]))
    return ClockWalk(p, q, tuple(steps), _shape_for(CLOCK_HOURS[hour], p + q))


# --- tables ----------------------------------------------------------------

TABLE1_MAX_N = 7


def table1_entries(max_n: int = TABLE1_MAX_N) -> list[dict]:
    out = []
    for n in range(max_n + 1):
        for p in range(n, -1, -1):
            q = n - p
            shape = classify_real(p, q)
            out.append({"p": p, "q": q, "n": n, "block": shape.block.value,
                        "matrix_size": shape.size})
    return out


def table4_entries(max_n: int = TABLE1_MAX_N) -> list[dict]:
    out = []
    for n in range(max_n + 1):
        shape = classify_complex(n)
        out.append({"n": n, "block": shape.block.value, "matrix_size": shape.size})
    return out


def pseudoscalar_square_signs(max_n: int = TABLE1_MAX_N) -> list[dict]:
    """Sign of the pseudoscalar square for each column ``p - q`` of the real table."""
    out = []
    for d in range(max_n, -max_n - 1, -1):
        sig = Signature(d, 0) if d >= 0 else Signature(0, -d)
        ps = sig.pseudoscalar()
        sq = (ps * ps).scalar_part()
        out.append({"p_minus_q": d, "sign": "+" if sq > 0 else "-"})
    return out


class TableKind(enum.Enum):
    TABLE1 = "table1"
    CLOCK = "clock"
    TABLE4 = "table4"


def _short(entry: dict) -> str:
    return str(MatrixAlgebraShape(BuildingBlock(entry["block"]), entry["matrix_size"]))


def _render_table1(max_n: int) -> str:
    width = 9
    cols = list(range(max_n, -max_n - 1, -1))
    lines = ["Real geometric algebras G(p,q) by n = p+q (rows) and p-q (columns)",
             "p-q  " + "".join(f"{d:^{width}}" for d in cols)]
    by_pos = {(e["n"], e["p"] - e["q"]): _short(e) for e in table1_entries(max_n)}
    for n in range(max_n + 1):
        cells = [by_pos.get((n, d), "") for d in cols]
        lines.append(f"n={n:<3}" + "".join(f"{c:^{width}}" for c in cells).rstrip())
    signs = {s["p_minus_q"]: s["sign"] for s in pseudoscalar_square_signs(max_n)}
    lines.append("i^2  " + "".join(f"{signs[d]:^{width}}" for d in cols).rstrip())
    return "\n".join(lines)


def _render_table4(max_n: int) -> str:
    entries = table4_entries(max_n)
    head = "  ".join(f"G{e['n']}(C)".ljust(8) for e in entries)
    body = "  ".join(_short(e).ljust(8) for e in entries)
    return "Complex geometric algebras G_n(C)\n" + head.rstrip() + "\n" + body.rstrip()


def clock_entries() -> list[dict]:
    return [{"hour": h, "block": b.value} for h, b in enumerate(CLOCK_HOURS)]


def _render_clock() -> str:
    lines = ["Clifford clock (clockwise from the top hour; clockwise = +1 f, counterclockwise = +1 e)"]
    for h, b in enumerate(CLOCK_HOURS):
        lines.append(f"hour {h}: {b}   (p-q = {(-h) % 8} mod 8)")
    return "\n".join(lines)


def emit_tables(which: TableKind | str = TableKind.TABLE1, fmt: str = "text",
                max_n: int = TABLE1_MAX_N) -> str:
    which = TableKind(which)
    if fmt not in ("text", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    if fmt == "text":
        if which is TableKind.TABLE1:
            return _render_table1(max_n)
        if which is TableKind.TABLE4:
            return _render_table4(max_n)
        return _render_clock()
    if which is TableKind.TABLE1:
        doc = {"table": "table1", "entries": table1_entries(max_n),
               "pseudoscalar_square": pseudoscalar_square_signs(max_n)}
    elif which is TableKind.TABLE4:
        doc = {"table": "table4", "entries": table4_entries(max_n)}
    else:
        doc = {"table": "clock", "hours": clock_entries()}
    return json.dumps(doc, indent=2)
