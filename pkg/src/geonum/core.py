"""Geometric algebras G(p,q) over the reals or complexes.

Basis blades are bitmasks over ``n = p + q`` generator slots. Slots ``0..p-1``
hold ``e1..ep`` (square +1) and slots ``p..n-1`` hold ``f1..fq`` (square -1).
Within a blade the generators are ordered by slot, so every ``e`` precedes every
``f`` and indices ascend, e.g. ``e12f3 = e1 e2 f3``.

Multivectors are immutable sparse maps from blade mask to coefficient.
"""
from __future__ import annotations

import enum
import numbers
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

import numpy as np

from .errors import DimError, GradeError, SignatureError
from .scalars import ComplexRational, exact_sqrt, is_exact, is_real, is_zero, normalize

DEFAULT_DIM_CAP = 12
_TABLE_MAX_N = 8


def dim_cap() -> int:
    """Largest allowed ``p + q``; ``GA_DIM_CAP`` in the environment overrides it."""
    raw = os.environ.get("GA_DIM_CAP")
    if raw is None:
        return DEFAULT_DIM_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise DimError(f"GA_DIM_CAP must be an integer, got {raw!r}") from None
    if cap < 0:
        raise DimError("GA_DIM_CAP must be nonnegative")
    return cap


class Field(enum.Enum):
    REAL = "real"
    COMPLEX = "complex"


@dataclass(frozen=True)
class Signature:
    """The algebra G(p,q), optionally complexified."""

    p: int
    q: int
    field: Field = Field.REAL

    def __post_init__(self):
        for name in ("p", "q"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, numbers.Integral):
                raise SignatureError(f"{name} must be an integer, got {v!r}")
            if v < 0:
                raise SignatureError(f"{name} must be nonnegative, got {v}")
        if not isinstance(self.field, Field):
            object.__setattr__(self, "field", Field(self.field))
        if self.p + self.q > dim_cap():
            raise DimError(f"p+q={self.p + self.q} exceeds the dimension cap {dim_cap()}")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def is_complex(self) -> bool:
        return self.field is Field.COMPLEX

    def __str__(self):
        base = f"G({self.p},{self.q})"
        return base + "(C)" if self.is_complex else base

    # constructors for common elements
    def scalar(self, c=1) -> "Multivector":
        return Multivector(self, {0: c})

    def blade(self, mask: int, coeff=1) -> "Multivector":
        return Multivector(self, {mask: coeff})

    def e(self, i: int) -> "Multivector":
        if not 1 <= i <= self.p:
            raise SignatureError(f"e{i} is not a generator of {self}")
        return self.blade(1 << (i - 1))

    def f(self, j: int) -> "Multivector":
        if not 1 <= j <= self.q:
            raise SignatureError(f"f{j} is not a generator of {self}")
        return self.blade(1 << (self.p + j - 1))

    def generators(self) -> list["Multivector"]:
        """``e1..ep`` then ``f1..fq``."""
        return [self.blade(1 << s) for s in range(self.n)]

    def pseudoscalar(self) -> "Multivector":
        return self.blade(self.dim - 1)

    def zero(self) -> "Multivector":
        return Multivector(self, {})

    def masks(self, grade: int | None = None) -> list[int]:
        """Blade masks in canonical order, optionally restricted to one grade."""
        out = sorted(range(self.dim), key=self.blade_key)
        if grade is not None:
            out = [m for m in out if m.bit_count() == grade]
        return out

    def blade_key(self, mask: int):
        return (mask.bit_count(), slots(mask))

    def blade_name(self, mask: int) -> str:
        return blade_name(mask, self.p)


def slots(mask: int) -> tuple[int, ...]:
    out = []
    s = 0
    while mask:
        if mask & 1:
            out.append(s)
        mask >>= 1
        s += 1
    return tuple(out)


def _index_text(i: int) -> str:
    return str(i) if i < 10 else f"[{i}]"


def blade_name(mask: int, p: int) -> str:
    """Canonical literal, e.g. ``e12f3``; ``1`` for the scalar blade."""
    if mask == 0:
        return "1"
    es = [s + 1 for s in slots(mask) if s < p]
    fs = [s - p + 1 for s in slots(mask) if s >= p]
    text = ""
    if es:
        text += "e" + "".join(_index_text(i) for i in es)
    if fs:
        text += "f" + "".join(_index_text(i) for i in fs)
    return text


def blade_mask(es: Iterable[int], fs: Iterable[int], sig: Signature) -> int:
    mask = 0
    for i in es:
        if not 1 <= i <= sig.p:
            raise SignatureError(f"e{i} is not a generator of {sig}")
        mask |= 1 << (i - 1)
    for j in fs:
        if not 1 <= j <= sig.q:
            raise SignatureError(f"f{j} is not a generator of {sig}")
        mask |= 1 << (sig.p + j - 1)
    return mask


def blade_sign(a: int, b: int, p: int) -> int:
    """Sign of ``blade(a) * blade(b)``; the product blade is ``a ^ b``.

    The reordering parity counts, for every generator of ``a``, the generators
    of ``b`` in lower slots that it must pass. Each shared ``f`` slot
    contributes a further factor of -1.
    """
    swaps = 0
    x = a >> 1
    while x:
        swaps += (x & b).bit_count()
        x >>= 1
    swaps += ((a & b) >> p).bit_count()
    return -1 if swaps & 1 else 1


@lru_cache(maxsize=None)
def _sign_rows(p: int, q: int) -> tuple[tuple[int, ...], ...]:
    dim = 1 << (p + q)
    return tuple(tuple(blade_sign(a, b, p) for b in range(dim)) for a in range(dim))


@lru_cache(maxsize=None)
def cayley_tables(p: int, q: int) -> np.ndarray:
    """Dense ``dim x dim`` array of blade product signs (product blade is ``a ^ b``)."""
    return np.array(_sign_rows(p, q), dtype=np.int64)


class Conjugation(enum.Enum):
    REVERSE = "reverse"
    INVERSION = "inversion"
    MIXED = "mixed"


def conjugation_sign(kind: Conjugation, k: int) -> int:
    if kind is Conjugation.REVERSE:
        e = k * (k - 1) // 2
    elif kind is Conjugation.INVERSION:
        e = k
    else:
        e = k * (k + 1) // 2
    return -1 if e & 1 else 1


def _check_coeff(sig: Signature, c):
    if isinstance(c, bool) or not isinstance(c, (numbers.Number, ComplexRational)):
        raise TypeError(f"coefficient must be a number, got {c!r}")
    if not sig.is_complex and not is_real(c):
        raise SignatureError(f"complex coefficient {c!r} in real algebra {sig}")
    return normalize(c)


class Multivector:
    """An element of a geometric algebra.

    ``*`` is the geometric product, ``^`` and ``|`` the outer and inner
    products, ``~`` the reverse.
    """

    __slots__ = ("sig", "_terms", "_hash")

    def __init__(self, sig: Signature, terms: Mapping[int, object] | None = None):
        self.sig = sig
        clean = {}
        for mask, c in (terms or {}).items():
            if not isinstance(mask, numbers.Integral) or not 0 <= mask < sig.dim:
                raise SignatureError(f"blade mask {mask!r} invalid for {sig}")
            c = _check_coeff(sig, c)
            if not is_zero(c):
                clean[int(mask)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, sig: Signature, terms: dict) -> "Multivector":
        # trusted fast path: masks valid, zeros may still be present
        mv = object.__new__(cls)
        mv.sig = sig
        mv._terms = {m: normalize(c) for m, c in terms.items() if not is_zero(c)}
        mv._hash = None
        return mv

    @property
    def terms(self) -> dict[int, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, mask: int):
        return self._terms.get(mask, 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def grades(self) -> set[int]:
        return {m.bit_count() for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.grades) <= 1

    def is_scalar(self) -> bool:
        return all(m == 0 for m in self._terms)

    def scalar_part(self):
        return self._terms.get(0, 0)

    def _coerce(self, other) -> "Multivector":
        if isinstance(other, Multivector):
            if other.sig != self.sig:
                raise SignatureError(f"cannot combine {self.sig} with {other.sig}")
            return other
        if isinstance(other, (numbers.Number, ComplexRational)) and not isinstance(other, bool):
            return Multivector(self.sig, {0: other})
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = dict(self._terms)
        for m, c in o._terms.items():
            out[m] = out.get(m, 0) + c
        return Multivector._raw(self.sig, out)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw(self.sig, {m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def scale(self, c) -> "Multivector":
        c = _check_coeff(self.sig, c)
        return Multivector._raw(self.sig, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, (numbers.Number, ComplexRational)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (numbers.Number, ComplexRational)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Multivector):
            if not other.is_scalar() or not other:
                raise GradeError("can only divide by a nonzero scalar")
            other = other.scalar_part()
        if isinstance(other, (numbers.Number, ComplexRational)) and not isinstance(other, bool):
            if is_exact(other) and isinstance(other, numbers.Rational):
                other = Fraction(other)
            return Multivector._raw(self.sig, {m: v / other for m, v in self._terms.items()})
        return NotImplemented

    def __xor__(self, other):
        return outer(self, self._coerce(other))

    def __or__(self, other):
        return inner(self, self._coerce(other))

    def __invert__(self):
        return conjugate(self, Conjugation.REVERSE)

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.sig == other.sig and self._terms == other._terms
        if isinstance(other, (numbers.Number, ComplexRational)) and not isinstance(other, bool):
            return self._terms == ({0: normalize(other)} if not is_zero(other) else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.sig, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return format_multivector(self)

    def __repr__(self):
        return f"Multivector({self.sig}, {format_multivector(self)!r})"


def _same_sig(a: Multivector, b: Multivector):
    if not isinstance(a, Multivector) or not isinstance(b, Multivector):
        raise TypeError("expected Multivector operands")
    if a.sig != b.sig:
        raise SignatureError(f"signature mismatch: {a.sig} vs {b.sig}")


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    _same_sig(a, b)
    sig = a.sig
    out: dict[int, object] = {}
    get = out.get
    if sig.n <= _TABLE_MAX_N:
        rows = _sign_rows(sig.p, sig.q)
        for ma, ca in a._terms.items():
            row = rows[ma]
            for mb, cb in b._terms.items():
                m = ma ^ mb
                c = ca * cb
                out[m] = get(m, 0) + (c if row[mb] > 0 else -c)
    else:
        p = sig.p
        for ma, ca in a._terms.items():
            for mb, cb in b._terms.items():
                m = ma ^ mb
                c = ca * cb
                out[m] = get(m, 0) + (c if blade_sign(ma, mb, p) > 0 else -c)
    return Multivector._raw(sig, out)


def grade_project(g: Multivector, k: int) -> Multivector:
    if not 0 <= k <= g.sig.n:
        raise GradeError(f"grade {k} out of range 0..{g.sig.n}")
    return Multivector._raw(g.sig, {m: c for m, c in g._terms.items() if m.bit_count() == k})


def conjugate(g: Multivector, kind: Conjugation | str) -> Multivector:
    kind = Conjugation(kind)
    return Multivector._raw(
        g.sig, {m: c * conjugation_sign(kind, m.bit_count()) for m, c in g._terms.items()}
    )


def reverse(g: Multivector) -> Multivector:
    return conjugate(g, Conjugation.REVERSE)


def inversion(g: Multivector) -> Multivector:
    return conjugate(g, Conjugation.INVERSION)


def mixed(g: Multivector) -> Multivector:
    return conjugate(g, Conjugation.MIXED)


def _single_grade(g: Multivector, what: str) -> int | None:
    gs = g.grades
    if len(gs) > 1:
        raise GradeError(f"{what} must be homogeneous, has grades {sorted(gs)}")
    return next(iter(gs)) if gs else None


_HALF = Fraction(1, 2)


def vector_kvector_split(v: Multivector, W: Multivector) -> tuple[Multivector, Multivector]:
    """Split ``v W`` into its grade k-1 (dot) and grade k+1 (wedge) parts.

    ``v`` must be a vector and ``W`` a k-vector. Returns ``(v.W, v^W)``.
    """
    _same_sig(v, W)
    kv = _single_grade(v, "v")
    if kv not in (None, 1):
        raise GradeError(f"v must be a vector, has grade {kv}")
    k = _single_grade(W, "W")
    if k is None or kv is None:
        zero = v.sig.zero()
        return zero, zero
    vW = v * W
    Wv = W * v
    sym = vW + Wv if k % 2 == 1 else vW - Wv
    anti = vW - Wv if k % 2 == 1 else vW + Wv
    return sym * _HALF, anti * _HALF


def inner(a: Multivector, b: Multivector) -> Multivector:
    """Dot product: the vector split when ``a`` is a vector and ``b`` homogeneous,
    otherwise the symmetric half ``(ab + ba)/2``."""
    _same_sig(a, b)
    if a and b and a.grades == {1} and b.is_homogeneous():
        return vector_kvector_split(a, b)[0]
    return (a * b + b * a) * _HALF


def outer(a: Multivector, b: Multivector) -> Multivector:
    """Wedge product, with the same dispatch as :func:`inner`."""
    _same_sig(a, b)
    if a and b and a.grades == {1} and b.is_homogeneous():
        return vector_kvector_split(a, b)[1]
    return (a * b - b * a) * _HALF


def scalar_product(g1: Multivector, g2: Multivector):
    """``<g1 g2^dagger>_0``."""
    _same_sig(g1, g2)
    total = 0
    p = g1.sig.p
    for m, c in g1._terms.items():
        d = g2._terms.get(m)
        if d is None:
            continue
        # blade(m) * reverse(blade(m)) is +-1
        k = m.bit_count()
        total += c * d * blade_sign(m, m, p) * conjugation_sign(Conjugation.REVERSE, k)
    return normalize(total)


def magnitude(g: Multivector):
    """``|<g g^dagger>_0|^(1/2)``; exact when the root is rational, else a float."""
    s = scalar_product(g, g)
    a = abs(s)
    if isinstance(s, ComplexRational):
        sq = s.re * s.re + s.im * s.im
        r = exact_sqrt(sq)
        return exact_sqrt(r) if isinstance(r, (int, Fraction)) else a ** 0.5
    if isinstance(a, (int, Fraction)):
        return exact_sqrt(a)
    return float(a) ** 0.5


def random_multivector(sig: Signature, rng: random.Random, lo: int = -9, hi: int = 9,
                       density: float = 1.0) -> Multivector:
    """Integer coefficients drawn uniformly from ``[lo, hi]`` over the blades."""
    terms = {}
    for m in range(sig.dim):
        if density < 1.0 and rng.random() >= density:
            continue
        c = rng.randint(lo, hi)
        if sig.is_complex:
            c = ComplexRational(c, rng.randint(lo, hi))
        terms[m] = c
    return Multivector(sig, terms)


def grade_dimension(n: int, k: int) -> int:
    return comb(n, k)


# --- canonical text form ---------------------------------------------------

def _real_text(c) -> str:
    if isinstance(c, float):
        s = repr(c)
        if "e" in s and "." not in s.split("e")[0]:
            mant, exp = s.split("e")
            s = f"{mant}.0e{exp}"
        return s
    return str(c)


def _coeff_parts(c) -> tuple[bool, str]:
    """Return ``(negative, text of |c|)`` for a coefficient."""
    if isinstance(c, (ComplexRational, complex)) and c.imag != 0:
        re, im = c.real, c.imag
        if re == 0:
            return im < 0, f"{_real_text(abs(im))}*i"
        sign = "-" if im < 0 else "+"
        return False, f"({_real_text(re)} {sign} {_real_text(abs(im))}*i)"
    if isinstance(c, (ComplexRational, complex)):
        c = c.real
    return c < 0, _real_text(abs(c))


def format_multivector(g: Multivector) -> str:
    """Canonical text: ``1 + 2*e1 - 3*f12 + 4*e12f3``; ``0`` for zero."""
    if not g._terms:
        return "0"
    pieces = []
    for m in sorted(g._terms, key=g.sig.blade_key):
        neg, mag = _coeff_parts(g._terms[m])
        body = mag if m == 0 else f"{mag}*{blade_name(m, g.sig.p)}"
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)
