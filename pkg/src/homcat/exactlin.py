"""Exact linear algebra over the rationals.

Everything downstream works with dense numpy arrays of dtype=object whose
entries are ``fractions.Fraction`` (or plain ints, which compare equal).
No floats ever enter: equality means entrywise identity of reduced
fractions, with no tolerance anywhere.

Conventions, fixed once for the whole package:

* a linear map is a 2-d array; column ``j`` holds the image of the basis
  vector ``e_j``, so maps act by ``mat_vec(f, v)`` and compose by
  ``mat_mul(f, g)`` meaning "g first, then f";
* the basis of a tensor product is ordered lexicographically,
  ``e_i (x) e_j  ->  i * dim2 + j``;
* echelon computations use reduced row echelon form with leftmost pivots,
  so quotient/section/kernel bases are deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

__all__ = [
    "Fraction",
    "DimensionError",
    "frac",
    "parse_scalar",
    "format_scalar",
    "zeros",
    "identity",
    "basis_vector",
    "from_rows",
    "from_columns",
    "column",
    "is_zero",
    "array_eq",
    "nonzero_items",
    "mat_vec",
    "mat_mul",
    "compose",
    "tensor_map",
    "tensor_vec",
    "flip_map",
    "rref",
    "rank",
    "solve_linear",
    "invert",
    "left_inverse",
    "kernel_inclusion",
    "quotient_by_span",
    "flatten_index",
    "unflatten_index",
]


class DimensionError(ValueError):
    """Shapes of the operands do not line up."""


def frac(x) -> Fraction:
    """Coerce ints, strings like ``"2/3"``, and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_scalar(s: str) -> Fraction:
    """Parse the wire format "p/q" or "p" (q = 1)."""
    return Fraction(s)


def format_scalar(q) -> str:
    q = frac(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def zeros(shape) -> np.ndarray:
    if isinstance(shape, int):
        shape = (shape,)
    return np.zeros(shape, dtype=object)


def identity(n: int) -> np.ndarray:
    m = zeros((n, n))
    for i in range(n):
        m[i, i] = Fraction(1)
    return m


def basis_vector(n: int, i: int) -> np.ndarray:
    v = zeros(n)
    v[i] = Fraction(1)
    return v


def from_rows(rows: Sequence[Sequence]) -> np.ndarray:
    m = zeros((len(rows), len(rows[0]) if rows else 0))
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            m[i, j] = frac(x)
    return m


def from_columns(cols: Sequence[np.ndarray], dim: Optional[int] = None) -> np.ndarray:
    if not cols:
        if dim is None:
            raise DimensionError("cannot infer row count of an empty column list")
        return zeros((dim, 0))
    m = zeros((len(cols[0]), len(cols)))
    for j, c in enumerate(cols):
        m[:, j] = c
    return m


def column(mat: np.ndarray, j: int) -> np.ndarray:
    return mat[:, j].copy()


def is_zero(arr: np.ndarray) -> bool:
    return all(x == 0 for x in arr.flat)


def array_eq(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.flat, b.flat))


def nonzero_items(arr: np.ndarray) -> Iterator[tuple]:
    """Yield (multi_index, value) over the nonzero entries."""
    for idx in np.ndindex(*arr.shape):
        v = arr[idx]
        if v != 0:
            yield idx, v


def mat_vec(mat: np.ndarray, v: np.ndarray) -> np.ndarray:
    if mat.shape[1] != v.shape[0]:
        raise DimensionError(f"map of shape {mat.shape} applied to vector of length {v.shape[0]}")
    out = zeros(mat.shape[0])
    for j in range(v.shape[0]):
        x = v[j]
        if x == 0:
            continue
        col = mat[:, j]
        for i in range(mat.shape[0]):
            c = col[i]
            if c != 0:
                out[i] += c * x
    return out


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """a @ b with zero-skipping; our matrices are mostly sparse."""
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot compose shapes {a.shape} and {b.shape}")
    out = zeros((a.shape[0], b.shape[1]))
    # per-row nonzero columns of b, scanned once
    for k in range(b.shape[0]):
        brow = b[k]
        cols = [j for j in range(b.shape[1]) if brow[j] != 0]
        if not cols:
            continue
        acol = a[:, k]
        for i in range(a.shape[0]):
            x = acol[i]
            if x == 0:
                continue
            orow = out[i]
            for j in cols:
                orow[j] += x * brow[j]
    return out


def compose(*mats: np.ndarray) -> np.ndarray:
    """Compose left to right in application order: compose(f, g) = f after g."""
    out = mats[0]
    for m in mats[1:]:
        out = mat_mul(out, m)
    return out


def tensor_map(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Kronecker product; (f (x) g)(v (x) w) = f(v) (x) g(w) in lex ordering."""
    fr, fc = f.shape
    gr, gc = g.shape
    out = zeros((fr * gr, fc * gc))
    for (i, j), x in nonzero_items(f):
        for (k, l), y in nonzero_items(g):
            out[i * gr + k, j * gc + l] = x * y
    return out


def tensor_vec(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    out = zeros(u.shape[0] * v.shape[0])
    n = v.shape[0]
    for i in range(u.shape[0]):
        x = u[i]
        if x == 0:
            continue
        for j in range(n):
            y = v[j]
            if y != 0:
                out[i * n + j] = x * y
    return out


def flip_map(m: int, n: int) -> np.ndarray:
    """The swap V (x) W -> W (x) V on lex-ordered product bases."""
    out = zeros((m * n, m * n))
    for i in range(m):
        for j in range(n):
            out[j * m + i, i * n + j] = Fraction(1)
    return out


def flatten_index(multi: Sequence[int], dims: Sequence[int]) -> int:
    flat = 0
    for i, d in zip(multi, dims):
        flat = flat * d + i
    return flat


def unflatten_index(flat: int, dims: Sequence[int]) -> tuple:
    out = []
    for d in reversed(dims):
        out.append(flat % d)
        flat //= d
    return tuple(reversed(out))


def rref(mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with leftmost pivots.

    Returns (R, pivot_columns).  Deterministic: the pivot of each step is
    the first nonzero entry in the leftmost unfinished column.
    """
    r = mat.copy()
    rows, cols = r.shape
    pivots: list[int] = []
    prow = 0
    for pc in range(cols):
        if prow >= rows:
            break
        sel = None
        for i in range(prow, rows):
            if r[i, pc] != 0:
                sel = i
                break
        if sel is None:
            continue
        if sel != prow:
            r[[prow, sel]] = r[[sel, prow]]
        piv = r[prow, pc]
        if piv != 1:
            inv = Fraction(1) / frac(piv)
            r[prow] = r[prow] * inv
        for i in range(rows):
            if i == prow:
                continue
            f = r[i, pc]
            if f != 0:
                r[i] = r[i] - r[prow] * f
        pivots.append(pc)
        prow += 1
    return r, pivots


def rank(mat: np.ndarray) -> int:
    return len(rref(mat)[1])


def solve_linear(coeffs: np.ndarray, rhs: np.ndarray) -> Optional[np.ndarray]:
    """One exact solution of coeffs @ x = rhs, or None.

    Underdetermined systems use the echelon convention: free variables
    are set to zero.
    """
    rows, cols = coeffs.shape
    if rhs.shape[0] != rows:
        raise DimensionError("right-hand side length does not match the system")
    aug = zeros((rows, cols + 1))
    aug[:, :cols] = coeffs
    aug[:, cols] = rhs
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = zeros(cols)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, cols]
    return x


def solve_matrix(coeffs: np.ndarray, rhs: np.ndarray) -> Optional[np.ndarray]:
    """Solve coeffs @ X = rhs column by column (shared elimination)."""
    rows, cols = coeffs.shape
    k = rhs.shape[1]
    aug = zeros((rows, cols + k))
    aug[:, :cols] = coeffs
    aug[:, cols:] = rhs
    r, pivots = rref(aug)
    pivots_in = [p for p in pivots if p < cols]
    if len(pivots_in) != len(pivots):
        return None
    x = zeros((cols, k))
    for i, pc in enumerate(pivots_in):
        x[pc, :] = r[i, cols:]
    return x


def invert(f: np.ndarray) -> Optional[np.ndarray]:
    """Exact inverse of a square map, or None when singular."""
    rows, cols = f.shape
    if rows != cols:
        raise DimensionError(f"cannot invert a {rows}x{cols} map")
    inv = solve_matrix(f, identity(rows))
    if inv is None:
        return None
    return inv


def left_inverse(f: np.ndarray) -> np.ndarray:
    """A left inverse of an injective map (L @ f = id)."""
    rows, cols = f.shape
    aug = zeros((rows, cols + rows))
    aug[:, :cols] = f
    aug[:, cols:] = identity(rows)
    r, pivots = rref(aug)
    pivots_in = [p for p in pivots if p < cols]
    if len(pivots_in) != cols:
        raise DimensionError("map is not injective, no left inverse")
    out = zeros((cols, rows))
    for i in range(cols):
        out[i, :] = r[i, cols:]
    return out


def kernel_inclusion(f: np.ndarray) -> np.ndarray:
    """Injective map whose image is ker(f); columns = echelon kernel basis."""
    rows, cols = f.shape
    r, pivots = rref(f)
    free = [j for j in range(cols) if j not in pivots]
    out = zeros((cols, len(free)))
    for k, fc in enumerate(free):
        out[fc, k] = Fraction(1)
        for i, pc in enumerate(pivots):
            if r[i, fc] != 0:
                out[pc, k] = -r[i, fc]
    return out


def quotient_by_span(dim: int, generators: Iterable[np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
    """Quotient of k^dim by the span of the generators.

    Returns (projection, section) with projection @ section = id on the
    quotient and ker(projection) = span(generators).  The section picks
    the non-pivot basis vectors of the reduced echelon form, so results
    are reproducible.
    """
    gens = list(generators)
    if not gens:
        return identity(dim), identity(dim)
    mat = zeros((len(gens), dim))
    for i, g in enumerate(gens):
        if g.shape[0] != dim:
            raise DimensionError("generator does not live in the ambient space")
        mat[i, :] = g
    r, pivots = rref(mat)
    free = [j for j in range(dim) if j not in pivots]
    qdim = len(free)
    section = zeros((dim, qdim))
    for k, fc in enumerate(free):
        section[fc, k] = Fraction(1)
    projection = zeros((qdim, dim))
    pos = {fc: k for k, fc in enumerate(free)}
    for j in range(dim):
        if j in pos:
            projection[pos[j], j] = Fraction(1)
    for i, pc in enumerate(pivots):
        # e_pc = -sum of its free-column tail modulo the span
        for fc in free:
            if r[i, fc] != 0:
                projection[pos[fc], pc] = -r[i, fc]
    return projection, section
