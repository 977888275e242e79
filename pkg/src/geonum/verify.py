"""Property suite behind ``geonum verify``.

Every check draws from one seeded RNG in a fixed order, so two runs with the
same arguments produce identical reports.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

from .classify import classify, classify_real, clock_walk
from .core import (
    Conjugation, Signature, conjugate, grade_dimension, random_multivector,
)
from .isomorphisms import Check
from .matrix_rep import matrix_unit_violations, null_frame, represent


@dataclass
class VerifyReport:
    sig: Signature
    samples: int
    seed: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "p": self.sig.p, "q": self.sig.q, "field": self.sig.field.value,
            "samples": self.samples, "seed": self.seed, "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"verify {self.sig}  samples={self.samples} seed={self.seed}"]
        for c in self.checks:
            tail = f"  ({c.witness})" if c.witness else ""
            lines.append(f"  {c.status.upper():4}  {c.check}{tail}")
        lines.append("all checks passed" if self.passed else "FAILED")
        return "\n".join(lines)


def _first(cases) -> str | None:
    for ok, witness in cases:
        if not ok:
            return witness
    return None


def _add(report: VerifyReport, name: str, failure: str | None):
    report.checks.append(Check(name, "fail", failure) if failure else Check(name, "pass"))


def run_suite(sig: Signature, samples: int = 100, seed: int = 0, k: int | None = None) -> VerifyReport:
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = random.Random(seed)
    report = VerifyReport(sig, samples, seed)
    gens = sig.generators()
    names = [sig.blade_name(1 << s) for s in range(sig.n)]

    _add(report, "generator_squares", _first(
        (g * g == (1 if s < sig.p else -1), f"{names[s]}^2 = {g * g}")
        for s, g in enumerate(gens)))
    _add(report, "anticommutation", _first(
        (not (gens[s] * gens[t] + gens[t] * gens[s]), f"{names[s]}, {names[t]}")
        for s, t in itertools.combinations(range(sig.n), 2)))
    _add(report, "dimension", _first(
        [(sig.dim == 2 ** sig.n, f"basis size {sig.dim}")]
        + [(len(sig.masks(kk)) == grade_dimension(sig.n, kk), f"grade {kk}")
           for kk in range(sig.n + 1)]))

    triples = [tuple(random_multivector(sig, rng) for _ in range(3)) for _ in range(samples)]
    _add(report, "associativity", _first(
        ((a * b) * c == a * (b * c), f"sample {i}") for i, (a, b, c) in enumerate(triples)))
    rev = lambda g: conjugate(g, Conjugation.REVERSE)  # noqa: E731
    inv = lambda g: conjugate(g, Conjugation.INVERSION)  # noqa: E731
    _add(report, "reverse_anti_automorphism", _first(
        (rev(a * b) == rev(b) * rev(a), f"sample {i}") for i, (a, b, _) in enumerate(triples)))
    _add(report, "inversion_automorphism", _first(
        (inv(a * b) == inv(a) * inv(b), f"sample {i}") for i, (a, b, _) in enumerate(triples)))
    _add(report, "conjugations_involutive", _first(
        (all(conjugate(conjugate(a, kind), kind) == a for kind in Conjugation), f"sample {i}")
        for i, (a, _, _) in enumerate(triples)))

    shape = classify(sig)
    if not sig.is_complex:
        one = represent(sig.scalar(1))
        _add(report, "represent_shape",
             None if one.shape == shape else f"{one.shape} != {shape}")
        _add(report, "represent_identity",
             None if one == type(one).identity(shape.block, shape.size) else "represent(1) is not I")
        _add(report, "represent_homomorphism", _first(
            (represent(a * b) == represent(a) @ represent(b), f"sample {i}")
            for i, (a, b, _) in enumerate(triples)))
        _add(report, "clock_walk", None if clock_walk(sig.p, sig.q).final == shape
             else f"clock walk gives {clock_walk(sig.p, sig.q).final}")

    _add(report, "table_cross_checks", _table_failure())

    if k is not None:
        for plus_one in (False, True):
            bad = matrix_unit_violations(null_frame(k, plus_one))
            _add(report, f"null_frame_k{k}{'_plus_one' if plus_one else ''}",
                 ", ".join(bad) if bad else None)
    return report


def _table_failure(max_n: int = 7) -> str | None:
    for p in range(max_n + 1):
        for q in range(max_n + 1 - p):
            here = classify_real(p, q)
            if clock_walk(p, q).final != here:
                return f"clock walk disagrees at G({p},{q})"
            if here.real_dim != 2 ** (p + q):
                return f"dimension audit fails at G({p},{q})"
            if classify_real(p + 1, q) != classify_real(q + 1, p):
                return f"swap symmetry fails at G({p + 1},{q})"
            if classify_real(p + 4, q) != classify_real(p, q + 4):
                return f"period-4 shift fails at G({p},{q})"
            nxt = classify_real(p + 1, q + 1)
            if nxt.block != here.block or nxt.size != 2 * here.size:
                return f"block shift fails at G({p},{q})"
    return None
