"""Command-line entry point.

Exit codes: 0 success, 1 bad input or usage, 2 a verification that ran and failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from importlib import resources

from .classify import TableKind, classify, clock_walk, emit_tables
from .core import Field, Signature
from .errors import GeonumError
from .isomorphisms import IsoKind, build_iso, verify_map
from .matrix_rep import json_number, null_frame, represent, to_matrix
from .parser import evaluate_text
from .scalars import ComplexRational
from .verify import run_suite

COMMANDS = ("eval", "classify", "table", "clock", "rep", "iso", "verify")

EXIT_OK, EXIT_INPUT, EXIT_FAILED = 0, 1, 2


@dataclass
class CliConfig:
    command: str
    p: int = 0
    q: int = 0
    field: str = "real"
    format: str = "text"
    samples: int = 100
    seed: int = 0
    kind: str = "evensub"
    k: int | None = None
    which: str = "table1"

    def validate(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.samples < 1:
            raise ValueError("--samples must be at least 1")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("--seed must fit in 64 bits")

    def signature(self) -> Signature:
        return Signature(self.p, self.q, Field(self.field))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=0, help="generators squaring to +1")
    common.add_argument("--q", type=int, default=0, help="generators squaring to -1")
    common.add_argument("--complex", action="store_true", help="complexify the algebra")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--samples", type=int, default=100)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--kind", choices=[k.value for k in IsoKind], default="evensub")
    common.add_argument("--k", type=int, default=None, help="null-frame size")

    parser = _Parser(prog="geonum", description="Geometric numbers and their matrix algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, helptext in [
        ("eval", "evaluate an expression"),
        ("classify", "matrix algebra of G(p,q) or G_n(C)"),
        ("table", "render a classification table"),
        ("clock", "walk the Clifford clock to G(p,q)"),
        ("rep", "coordinate matrix of an expression"),
        ("iso", "build and check a structure-theorem map"),
        ("verify", "run the property suite"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=helptext)
        if name in ("eval", "rep"):
            sp.add_argument("expr")
        if name == "table":
            sp.add_argument("--which", choices=[t.value for t in TableKind], default=None)
    return parser


def load_schema(name: str) -> dict:
    """JSON schema shipped for one of the ``--json`` outputs, e.g. ``"table1"``."""
    return json.loads(resources.files("geonum").joinpath("schemas", f"{name}.json").read_text())


def _dump(doc) -> str:
    return json.dumps(doc, indent=2)


def _matrix_doc(M, frame) -> dict:
    rows = [[json_number(x) for x in row] for row in M.tolist()]
    return {"k": frame.k, "plus_one": frame.plus_one, "size": frame.size, "entries": rows}


def _matrix_text(M) -> str:
    def cell(x):
        if isinstance(x, (ComplexRational, complex)):
            re, im = x.real, x.imag
            sign = "-" if im < 0 else "+"
            return f"{re}{sign}{abs(im)}i"
        return str(x)

    cells = [[cell(x) for x in row] for row in M.tolist()]
    w = max(len(c) for row in cells for c in row)
    return "\n".join("[ " + "  ".join(c.rjust(w) for c in row) + " ]" for row in cells)


def run(config: CliConfig, expr: str | None = None) -> tuple[int, str]:
    try:
        config.validate()
        return _run(config, expr)
    except (GeonumError, ValueError, IndexError) as exc:
        return EXIT_INPUT, f"error: {exc}"


def _run(cfg: CliConfig, expr: str | None) -> tuple[int, str]:
    as_json = cfg.format == "json"
    cmd = cfg.command
    if cmd == "table":
        which = cfg.which or ("table4" if cfg.field == "complex" else "table1")
        return EXIT_OK, emit_tables(which, "json" if as_json else "text")
    if cmd == "clock":
        walk = clock_walk(cfg.p, cfg.q)
        return EXIT_OK, _dump(walk.to_dict()) if as_json else walk.narrative()
    if cmd == "iso":
        report = verify_map(build_iso(cfg.kind, cfg.p, cfg.q), samples=cfg.samples, seed=cfg.seed)
        out = _dump(report.to_list()) if as_json else report.to_text()
        return (EXIT_OK if report.passed else EXIT_FAILED), out

    sig = cfg.signature()
    if cmd == "classify":
        shape = classify(sig)
        if as_json:
            return EXIT_OK, _dump({"p": sig.p, "q": sig.q, "n": sig.n, "field": sig.field.value,
                                   **shape.to_dict()})
        return EXIT_OK, str(shape)
    if cmd == "eval":
        g = evaluate_text(expr, sig)
        return EXIT_OK, _dump({"p": sig.p, "q": sig.q, "field": sig.field.value, "value": str(g)}) \
            if as_json else str(g)
    if cmd == "rep":
        g = evaluate_text(expr, sig)
        if cfg.k is not None:
            frame = null_frame(cfg.k, plus_one=(sig.q == sig.p + 1))
            M = to_matrix(g, frame)
            return EXIT_OK, _dump(_matrix_doc(M, frame)) if as_json else _matrix_text(M)
        bm = represent(g)
        return EXIT_OK, _dump(bm.to_dict()) if as_json else bm.to_text()
    # verify
    report = run_suite(sig, samples=cfg.samples, seed=cfg.seed, k=cfg.k)
    out = report.to_json() if as_json else report.to_text()
    return (EXIT_OK if report.passed else EXIT_FAILED), out


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = CliConfig(
        command=args.command, p=args.p, q=args.q,
        field="complex" if args.complex else "real",
        format="json" if args.json else "text",
        samples=args.samples, seed=args.seed, kind=args.kind, k=args.k,
        which=getattr(args, "which", None),
    )
    code, out = run(cfg, getattr(args, "expr", None))
    stream = sys.stdout if code != EXIT_INPUT else sys.stderr
    print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
