"""Coordinate matrix representations of geometric algebras.

Two constructions live here:

* null frames for G(k,k) and G(k,k+1): ``2^k x 2^k`` arrays of multivectors
  behaving as matrix units, giving ``to_matrix``/``from_matrix``;
* ``represent``, which maps any real G(p,q) onto ``M_N(B)`` by regrading with
  the swap/shift4 generator maps, splitting off ``(e, f)`` pairs into 2x2
  blocks, and finishing at one of G(0,0), G(1,0), G(0,1), G(0,2), G(0,3).
"""
from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm

import numpy as np

from .classify import BuildingBlock, MatrixAlgebraShape
from .core import Multivector, Signature, blade_sign, cayley_tables, dim_cap, inversion
from .errors import DimError, SignatureError
from .isomorphisms import IsoKind, apply_map, build_iso
from .rings import RingElement, format_coords, structure_tensor, unit_coords
from .scalars import ComplexRational, exact_complex, is_exact

log = logging.getLogger(__name__)

_HALF = Fraction(1, 2)
_cache_lock = threading.Lock()


# --- block matrices ----------------------------------------------------------

class BlockMatrix:
    """An ``N x N`` matrix over a building block, stored as an ``(N, N, d)`` array
    of real coordinates."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring: BuildingBlock, coords):
        coords = np.asarray(coords, dtype=object)
        if coords.ndim != 3 or coords.shape[0] != coords.shape[1] or coords.shape[2] != ring.real_dim:
            raise DimError(f"coordinate array of shape {coords.shape} does not fit a matrix over {ring}")
        self.ring = ring
        self.coords = coords

    @property
    def size(self) -> int:
        return self.coords.shape[0]

    @property
    def shape(self) -> MatrixAlgebraShape:
        return MatrixAlgebraShape(self.ring, self.size)

    @classmethod
    def identity(cls, ring: BuildingBlock, size: int) -> "BlockMatrix":
        c = np.zeros((size, size, ring.real_dim), dtype=object)
        one = unit_coords(ring)
        for i in range(size):
            c[i, i, :] = one
        return cls(ring, c)

    def entry(self, i: int, j: int) -> RingElement:
        return RingElement(self.ring, tuple(self.coords[i, j]))

    def _same(self, other):
        if not isinstance(other, BlockMatrix):
            return False
        if other.ring is not self.ring or other.size != self.size:
            raise DimError(f"cannot combine {self.shape} with {other.shape}")
        return True

    def __matmul__(self, other):
        if not self._same(other):
            return NotImplemented
        T = np.tensordot(self.coords, other.coords, axes=([1], [0]))  # i a l b
        out = np.tensordot(T, structure_tensor(self.ring), axes=([1, 3], [0, 1]))
        return BlockMatrix(self.ring, out)

    __mul__ = __matmul__

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        return BlockMatrix(self.ring, self.coords + other.coords)

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return BlockMatrix(self.ring, self.coords - other.coords)

    def __eq__(self, other):
        if not isinstance(other, BlockMatrix):
            return NotImplemented
        return (self.ring is other.ring and self.coords.shape == other.coords.shape
                and bool(np.all(self.coords == other.coords)))

    __hash__ = None

    def flat(self) -> list:
        return list(self.coords.reshape(-1))

    def to_dict(self) -> dict:
        return {
            "ring": self.ring.value,
            "size": self.size,
            "entries": [[[json_number(x) for x in self.coords[i, j]] for j in range(self.size)]
                        for i in range(self.size)],
        }

    def to_text(self) -> str:
        cells = [[format_coords(self.ring, tuple(self.coords[i, j])) for j in range(self.size)]
                 for i in range(self.size)]
        w = max(len(c) for row in cells for c in row)
        lines = [str(self.shape)]
        lines += ["[ " + "  ".join(c.rjust(w) for c in row) + " ]" for row in cells]
        return "\n".join(lines)

    def __repr__(self):
        return f"BlockMatrix({self.shape})"


def json_number(x):
    """Ints and floats pass through; other rationals become ``"p/q"`` strings."""
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, (ComplexRational, complex)):
        return [json_number(x.real), json_number(x.imag)]
    return str(x)


# --- null vectors and frames -----------------------------------------------

def null_vectors(sig: Signature, j: int):
    """``(a_j, b_j, u_plus, u_minus)`` with ``a = (e_j + f_j)/2``, ``b = (e_j - f_j)/2``,
    ``u_plus = b a`` and ``u_minus = a b``."""
    if not 1 <= j <= min(sig.p, sig.q):
        raise IndexError(f"j={j} out of range 1..{min(sig.p, sig.q)} for {sig}")
    e, f = sig.e(j), sig.f(j)
    a = (e + f) * _HALF
    b = (e - f) * _HALF
    return a, b, b * a, a * b


@dataclass(frozen=True)
class NullFrame:
    k: int
    plus_one: bool
    sig: Signature
    frame: tuple[tuple[Multivector, ...], ...]

    @property
    def size(self) -> int:
        return 1 << self.k

    def __getitem__(self, ij):
        i, j = ij
        return self.frame[i][j]


_frames: dict = {}


def null_frame(k: int, plus_one: bool = False) -> NullFrame:
    """Matrix-unit basis of G(k,k) (or G(k,k+1)) from the directed Kronecker product.

    Entry ``(i, j)`` is ``r_i u c_j`` with ``u = u_1...u_k``; ``r_i`` multiplies the
    ``a``'s selected by the bits of ``i`` in ascending order and ``c_j`` the
    ``b``'s selected by ``j`` in descending order.
    """
    if not 1 <= k <= 5:
        raise IndexError(f"null frame size k={k} out of range 1..5")
    key = (k, bool(plus_one))
    cached = _frames.get(key)
    if cached is not None:
        return cached
    with _cache_lock:
        if key not in _frames:
            _frames[key] = _build_frame(k, bool(plus_one))
    return _frames[key]


def _build_frame(k: int, plus_one: bool) -> NullFrame:
    sig = Signature(k, k + int(plus_one))
    parts = [null_vectors(sig, j) for j in range(1, k + 1)]
    a = [pt[0] for pt in parts]
    b = [pt[1] for pt in parts]
    u = reduce(lambda x, y: x * y, (pt[2] for pt in parts))
    one = sig.scalar(1)
    size = 1 << k
    rows, cols = [], []
    for i in range(size):
        r, c = one, one
        for s in range(k):
            if i >> s & 1:
                r = r * a[s]
        for s in reversed(range(k)):
            if i >> s & 1:
                c = c * b[s]
        rows.append(r)
        cols.append(c)
    frame = tuple(tuple(rows[i] * u * cols[j] for j in range(size)) for i in range(size))
    return NullFrame(k, plus_one, sig, frame)


def matrix_unit_violations(frame: NullFrame, limit: int = 10) -> list[str]:
    """Exhaustively check ``E_ij E_ml = delta_jm E_il`` and ``sum_i E_ii = 1``.

    Products run on integer-scaled dense coordinates, so the check is exact.
    """
    sig = frame.sig
    K = frame.size
    elems = [frame.frame[i][j] for i in range(K) for j in range(K)]
    den = 1
    for x in elems:
        for _, c in x.items():
            den = lcm(den, Fraction(c).denominator)
    F = np.zeros((len(elems), sig.dim), dtype=np.int64)
    for x_i, x in enumerate(elems):
        for m, c in x.items():
            F[x_i, m] = int(c * den)
    dims = np.arange(sig.dim)
    idx = dims[:, None] ^ dims[None, :]  # idx[c, b] = c ^ b
    S = cayley_tables(sig.p, sig.q)
    sign_cb = S[idx, dims[None, :]]  # sign of blade(c^b) * blade(b)
    L = F[:, idx] * sign_cb[None, :, :]  # L[x, c, b]: left multiplication by x
    P = np.tensordot(L, F, axes=([2], [1]))  # P[x, c, y] = coords of x*y (scaled by den^2)
    bad = []
    for i in range(K):
        for j in range(K):
            for m in range(K):
                for l in range(K):
                    got = P[i * K + j, :, m * K + l]
                    want = den * F[i * K + l] if j == m else 0
                    if not np.array_equal(got, np.broadcast_to(want, got.shape)):
                        bad.append(f"E{i}{j} * E{m}{l}")
                        if len(bad) >= limit:
                            return bad
    diag = F[[i * K + i for i in range(K)]].sum(axis=0)
    ident = np.zeros(sig.dim, dtype=np.int64)
    ident[0] = den
    if not np.array_equal(diag, ident):
        bad.append("sum of diagonal units is not 1")
    return bad


def _scalar_of_product(x: Multivector, g: Multivector):
    """``<x g>_0`` without forming the full product."""
    p = x.sig.p
    total = 0
    for m, c in x.items():
        d = g.coeff(m)
        if d:
            total += c * d * blade_sign(m, m, p)
    return total


def _frame_scale(frame: NullFrame):
    return frame.frame[0][0].scalar_part()


def _check_frame_sig(g: Multivector, frame: NullFrame):
    if (g.sig.p, g.sig.q) != (frame.sig.p, frame.sig.q):
        raise SignatureError(f"element of {g.sig} does not match the frame for {frame.sig}")
    if frame.plus_one and g.sig.is_complex:
        raise SignatureError("complex-field elements cannot use the G(k,k+1) frame")


def to_matrix(g: Multivector, frame: NullFrame) -> np.ndarray:
    """Coordinates ``[g]`` with ``g = sum_ij [g]_ij E_ij``.

    For G(k,k+1) the central pseudoscalar plays the imaginary unit and the
    entries are complex.
    """
    _check_frame_sig(g, frame)
    K = frame.size
    scale = _frame_scale(frame)
    fr = frame.frame
    out = np.empty((K, K), dtype=object)
    if frame.plus_one:
        g = Multivector(frame.sig, g.terms) if g.sig != frame.sig else g
        h = g * (-frame.sig.pseudoscalar())
    for i in range(K):
        for j in range(K):
            re = _div(_scalar_of_product(fr[j][i], g), scale)
            if frame.plus_one:
                im = _div(_scalar_of_product(fr[j][i], h), scale)
                out[i, j] = exact_complex(re, im) if is_exact(re) and is_exact(im) else complex(re, im)
            else:
                out[i, j] = re
    return out


def _div(x, scale):
    if is_exact(x):
        r = Fraction(x) / Fraction(scale) if not isinstance(x, ComplexRational) else x / scale
        if isinstance(r, Fraction) and r.denominator == 1:
            return r.numerator
        return r
    return x / float(scale)


def from_matrix(M, frame: NullFrame, sig: Signature | None = None) -> Multivector:
    """Inverse of :func:`to_matrix`: ``sum_ij M_ij E_ij``.

    ``sig`` may name the complexified G(k,k) to accept complex entries there.
    """
    M = np.asarray(M, dtype=object)
    K = frame.size
    if M.shape != (K, K):
        raise DimError(f"matrix of shape {M.shape} does not match a {K}x{K} frame")
    target = sig or frame.sig
    if (target.p, target.q) != (frame.sig.p, frame.sig.q) or (frame.plus_one and target.is_complex):
        raise SignatureError(f"cannot place a frame of {frame.sig} into {target}")
    I = frame.sig.pseudoscalar()
    acc = target.zero()
    for i in range(K):
        for j in range(K):
            x = M[i, j]
            if not x:
                continue
            E = frame.frame[i][j]
            if target != frame.sig:
                E = Multivector(target, E.terms)
            if frame.plus_one and isinstance(x, (ComplexRational, complex)):
                acc = acc + E * x.real + (I * E) * x.imag
            else:
                acc = acc + E * x
    return acc


# --- splitting off an (e, f) pair ------------------------------------------

def theorem2_split(G: Multivector) -> tuple[Signature, list[Multivector]]:
    """Write ``G = g0 + g1 e + g2 f + g3 e f`` over the smaller algebra, splitting on
    the highest-index ``e`` and ``f``. Returns the smaller signature and ``[g0..g3]``."""
    sig = G.sig
    if sig.p < 1 or sig.q < 1:
        raise SignatureError(f"{sig} has no (e, f) pair to split off")
    small = Signature(sig.p - 1, sig.q - 1, sig.field)
    n = sig.n
    e_slot, f_slot = sig.p - 1, n - 1
    low = (1 << e_slot) - 1
    parts = [{}, {}, {}, {}]
    for mask, c in G.items():
        he = mask >> e_slot & 1
        hf = mask >> f_slot & 1
        rest = mask & ~((1 << e_slot) | (1 << f_slot))
        tail = (he << e_slot) | (hf << f_slot)
        s = blade_sign(rest, tail, sig.p)
        small_mask = (rest & low) | ((rest >> (e_slot + 1)) << e_slot)
        mu = he + 2 * hf
        d = parts[mu]
        d[small_mask] = d.get(small_mask, 0) + (c if s > 0 else -c)
    return small, [Multivector._raw(small, d) for d in parts]


def theorem2_block(G: Multivector) -> list[list[Multivector]]:
    """The 2x2 matrix ``[[g0+g3, g1-g2], [g1^- + g2^-, g0^- - g3^-]]`` over G(p,q)."""
    _, (g0, g1, g2, g3) = theorem2_split(G)
    return [[g0 + g3, g1 - g2],
            [inversion(g1) + inversion(g2), inversion(g0) - inversion(g3)]]


# --- full representation ---------------------------------------------------

_BASE_BLOCKS = {
    (0, 0): BuildingBlock.R,
    (1, 0): BuildingBlock.R2,
    (0, 1): BuildingBlock.C,
    (0, 2): BuildingBlock.Q,
    (0, 3): BuildingBlock.Q2,
}


def _next_step(p: int, q: int):
    if p >= 1 and q >= 1:
        return ("thm2", None)
    if q == 0 and p >= 2:
        return ("swap", build_iso(IsoKind.SWAP, 0, p - 1))
    if p == 0 and q >= 4:
        return ("shift4", build_iso(IsoKind.SHIFT4, 4, q - 4))
    return ("base", _BASE_BLOCKS[(p, q)])


def reduction_route(p: int, q: int) -> list[str]:
    """The fixed sequence of reductions ``represent`` applies to G(p,q)."""
    route = []
    while True:
        kind, arg = _next_step(p, q)
        if kind == "thm2":
            route.append(f"thm2: G({p},{q}) = M2(G({p - 1},{q - 1}))")
            p, q = p - 1, q - 1
        elif kind in ("swap", "shift4"):
            cod = arg.codomain
            route.append(f"{kind}: G({p},{q}) -> G({cod.p},{cod.q})")
            p, q = cod.p, cod.q
        else:
            route.append(f"base: G({p},{q}) = {arg}")
            return route


def representation_shape(p: int, q: int) -> MatrixAlgebraShape:
    size = 1
    while True:
        kind, arg = _next_step(p, q)
        if kind == "thm2":
            size *= 2
            p, q = p - 1, q - 1
        elif kind in ("swap", "shift4"):
            p, q = arg.codomain.p, arg.codomain.q
        else:
            return MatrixAlgebraShape(arg, size)


def _quaternion_coords(terms: dict) -> list:
    return [terms.get(0, 0), terms.get(1, 0), terms.get(2, 0), terms.get(3, 0)]


def _base_coords(g: Multivector) -> list:
    p, q = g.sig.p, g.sig.q
    if (p, q) == (0, 0):
        return [g.coeff(0)]
    if (p, q) == (1, 0):
        x1, x2 = g.coeff(0), g.coeff(1)
        return [x1 + x2, x1 - x2]
    if (p, q) == (0, 1):
        return [g.coeff(0), g.coeff(1)]
    if (p, q) == (0, 2):
        return _quaternion_coords(g.terms)
    # G(0,3): g = A + B I with I = f123 central, I^2 = +1, then (A + B, A - B)
    I = 0b111
    A, Bp = {}, {}
    for m, c in g.items():
        if m & 0b100:
            s = blade_sign(m, I, 0)
            r = m ^ I
            Bp[r] = Bp.get(r, 0) + (c if s > 0 else -c)
        else:
            A[m] = A.get(m, 0) + c
    qa, qb = _quaternion_coords(A), _quaternion_coords(Bp)
    return [x + y for x, y in zip(qa, qb)] + [x - y for x, y in zip(qa, qb)]


def _rep_coords(g: Multivector) -> np.ndarray:
    kind, arg = _next_step(g.sig.p, g.sig.q)
    if kind == "base":
        c = np.empty((1, 1, arg.real_dim), dtype=object)
        c[0, 0, :] = _base_coords(g)
        return c
    if kind in ("swap", "shift4"):
        return _rep_coords(apply_map(arg, g))
    blocks = theorem2_block(g)
    sub = [[_rep_coords(b) for b in row] for row in blocks]
    return np.concatenate([np.concatenate(row, axis=1) for row in sub], axis=0)


_blade_tables: dict = {}


def _blade_table(p: int, q: int) -> tuple[BuildingBlock, int, np.ndarray]:
    key = (p, q)
    hit = _blade_tables.get(key)
    if hit is not None:
        return hit
    with _cache_lock:
        if key not in _blade_tables:
            sig = Signature(p, q)
            shape = representation_shape(p, q)
            log.debug("represent %s via %s", sig, "; ".join(reduction_route(p, q)))
            rows = np.empty((sig.dim, shape.size * shape.size * shape.block.real_dim), dtype=object)
            for m in range(sig.dim):
                rows[m, :] = _rep_coords(sig.blade(m)).reshape(-1)
            rows.setflags(write=False)
            _blade_tables[key] = (shape.block, shape.size, rows)
    return _blade_tables[key]


def represent(g: Multivector) -> BlockMatrix:
    """The coordinate matrix of ``g`` in ``M_N(B)``, with ``M_N(B)`` the
    classification of its (real) algebra. Linear and multiplicative."""
    sig = g.sig
    if sig.is_complex:
        raise SignatureError("represent is defined for real algebras only")
    if sig.n > dim_cap():
        raise DimError(f"p+q={sig.n} exceeds the dimension cap {dim_cap()}")
    block, size, table = _blade_table(sig.p, sig.q)
    if not g:
        coords = np.zeros((size, size, block.real_dim), dtype=object)
        return BlockMatrix(block, coords)
    masks = list(g.terms)
    vec = np.array([g.coeff(m) for m in masks], dtype=object)
    flat = vec @ table[masks]
    return BlockMatrix(block, flat.reshape(size, size, block.real_dim))


__all__ = [
    "BlockMatrix", "NullFrame", "null_vectors", "null_frame", "matrix_unit_violations",
    "to_matrix", "from_matrix", "theorem2_split", "theorem2_block", "represent",
    "reduction_route", "representation_shape",
]
