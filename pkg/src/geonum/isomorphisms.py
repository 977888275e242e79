"""Generator maps realizing the structure theorems between geometric algebras.

A :class:`GeneratorMap` sends each generator of its domain to a multivector of
its codomain. Extending it multiplicatively and linearly gives an algebra
homomorphism whenever the images anticommute pairwise and square like the
generators they replace.

``build_iso`` knows three families:

``evensub``  G(p,q) -> G(p,q+1)^+ via ``x -> f x`` with ``f`` the appended ``f_{q+1}``.
``swap``     G(q+1,p) -> G(p+1,q): ``e1 -> e``, next ``q`` e's ``-> e f_j``, f's ``-> e e_i``,
             where ``e`` is the codomain's first generator.
``shift4``   G(p-4,q+4) -> G(p,q): four f's go to the trivectors built from
             ``e1..e4`` of the codomain; requires ``p >= 4``.
"""
from __future__ import annotations

import enum
import itertools
import json
import random
from dataclasses import dataclass, field

from .classify import classify_real
from .core import Multivector, Signature, random_multivector
from .errors import IsoError, SignatureError
from .linalg import exact_rank


class IsoKind(enum.Enum):
    EVENSUB = "evensub"
    SWAP = "swap"
    SHIFT4 = "shift4"


@dataclass(frozen=True)
class GeneratorMap:
    domain: Signature
    codomain: Signature
    images: tuple[Multivector, ...]
    kind: IsoKind | None = None
    _blade_cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.domain.n:
            raise IsoError(f"need {self.domain.n} images, got {len(self.images)}")
        for im in self.images:
            if im.sig != self.codomain:
                raise SignatureError(f"image {im} does not live in {self.codomain}")

    def blade_image(self, mask: int) -> Multivector:
        img = self._blade_cache.get(mask)
        if img is None:
            img = self.codomain.scalar(1)
            s = 0
            m = mask
            while m:
                if m & 1:
                    img = img * self.images[s]
                m >>= 1
                s += 1
            self._blade_cache[mask] = img
        return img

    def __call__(self, g: Multivector) -> Multivector:
        return apply_map(self, g)

    def describe(self) -> str:
        name = self.kind.value if self.kind else "map"
        return f"{name}: {self.domain} -> {self.codomain}"


def _iso_sig(p, q) -> Signature:
    try:
        return Signature(p, q)
    except SignatureError as exc:
        raise IsoError(str(exc)) from None


def build_iso(kind: IsoKind | str, p: int, q: int) -> GeneratorMap:
    kind = IsoKind(kind)
    if p < 0 or q < 0:
        raise IsoError("p and q must be nonnegative")
    if kind is IsoKind.EVENSUB:
        dom, cod = _iso_sig(p, q), _iso_sig(p, q + 1)
        f = cod.f(q + 1)
        images = [f * cod.e(i) for i in range(1, p + 1)]
        images += [f * cod.f(j) for j in range(1, q + 1)]
    elif kind is IsoKind.SWAP:
        dom, cod = _iso_sig(q + 1, p), _iso_sig(p + 1, q)
        e = cod.e(1)
        images = [e]
        images += [e * cod.f(j) for j in range(1, q + 1)]
        images += [e * cod.e(i + 1) for i in range(1, p + 1)]
    else:
        if p < 4:
            raise IsoError(f"shift4 needs p >= 4 in G(p,q), got p={p}")
        dom, cod = _iso_sig(p - 4, q + 4), _iso_sig(p, q)
        ea, eb, ec, ed = (cod.e(i) for i in range(1, 5))
        primes = [eb * ec * ed, ec * ed * ea, ed * ea * eb, ea * eb * ec]
        images = [cod.e(4 + i) for i in range(1, p - 4 + 1)]
        images += primes
        images += [cod.f(j) for j in range(1, q + 1)]
    return GeneratorMap(dom, cod, tuple(images), kind)


def apply_map(m: GeneratorMap, g: Multivector) -> Multivector:
    if g.sig != m.domain:
        raise SignatureError(f"map domain is {m.domain}, element lives in {g.sig}")
    out = m.codomain.zero()
    acc: dict = {}
    for mask, c in g.items():
        for b, v in m.blade_image(mask).items():
            acc[b] = acc.get(b, 0) + c * v
    return Multivector._raw(m.codomain, acc) if acc else out


# --- verification ----------------------------------------------------------

@dataclass
class Check:
    check: str
    status: str  # "pass" | "fail"
    witness: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {"check": self.check, "status": self.status, "witness": self.witness}


@dataclass
class MapReport:
    description: str
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_list(self) -> list[dict]:
        return [c.to_dict() for c in self.checks]

    def to_json(self) -> str:
        return json.dumps(self.to_list(), indent=2)

    def to_text(self) -> str:
        lines = [self.description]
        for c in self.checks:
            tail = f"  ({c.witness})" if c.witness else ""
            lines.append(f"  {c.status.upper():4}  {c.check}{tail}")
        return "\n".join(lines)


def _check(name: str, failure: str | None) -> Check:
    return Check(name, "fail", failure) if failure else Check(name, "pass")


def _first_failure(cases):
    for ok, witness in cases:
        if not ok:
            return witness
    return None


EXHAUSTIVE_BLADE_PAIRS_MAX_N = 6


def verify_map(m: GeneratorMap, samples: int = 20, seed: int = 0) -> MapReport:
    """Check every generator-map invariant plus multiplicativity and injectivity."""
    dom, cod = m.domain, m.codomain
    names = [dom.blade_name(1 << s) for s in range(dom.n)]
    checks = []

    def square_cases():
        for s, im in enumerate(m.images):
            want = 1 if s < dom.p else -1
            got = im * im
            yield got == want, f"image of {names[s]} squares to {got}, expected {want}"

    checks.append(_check("squares", _first_failure(square_cases())))

    def anti_cases():
        for (s, a), (t, b) in itertools.combinations(enumerate(m.images), 2):
            yield not (a * b + b * a), f"images of {names[s]}, {names[t]} do not anticommute"

    checks.append(_check("anticommute", _first_failure(anti_cases())))
    checks.append(_check("homogeneous", _first_failure(
        (im.is_homogeneous(), f"image of {names[s]} has grades {sorted(im.grades)}")
        for s, im in enumerate(m.images))))

    def blade_pair_cases():
        for a in range(dom.dim):
            for b in range(dom.dim):
                lhs = apply_map(m, dom.blade(a) * dom.blade(b))
                rhs = m.blade_image(a) * m.blade_image(b)
                yield lhs == rhs, f"blades {dom.blade_name(a)}, {dom.blade_name(b)}"

    def sample_cases():
        rng = random.Random(seed)
        for i in range(samples):
            g1 = random_multivector(dom, rng)
            g2 = random_multivector(dom, rng)
            yield apply_map(m, g1 * g2) == apply_map(m, g1) * apply_map(m, g2), f"sample {i}"

    fail = None
    if dom.n <= EXHAUSTIVE_BLADE_PAIRS_MAX_N:
        fail = _first_failure(blade_pair_cases())
    if fail is None:
        fail = _first_failure(sample_cases())
    checks.append(_check("multiplicative", fail))

    rows = [[img.coeff(b) for b in range(cod.dim)]
            for img in (m.blade_image(a) for a in range(dom.dim))]
    rank = exact_rank(rows)
    checks.append(_check("injective",
                         None if rank == dom.dim else f"rank {rank} < {dom.dim}"))

    if m.kind is IsoKind.EVENSUB:
        checks.append(_check("even_subalgebra", _first_failure(
            (all(k % 2 == 0 for k in m.blade_image(a).grades),
             f"image of {dom.blade_name(a)} has odd grade")
            for a in range(dom.dim))))
    elif m.kind in (IsoKind.SWAP, IsoKind.SHIFT4) and not dom.is_complex:
        cd, cc = classify_real(dom.p, dom.q), classify_real(cod.p, cod.q)
        checks.append(_check("classification",
                             None if cd == cc else f"{dom} is {cd} but {cod} is {cc}"))
    return MapReport(m.describe(), checks)
