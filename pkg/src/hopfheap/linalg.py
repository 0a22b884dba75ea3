"""Dense exact linear algebra over a :class:`~hopfheap.scalars.FieldSpec`.

Matrices are 2-D numpy object arrays of raw canonical values (see
:mod:`hopfheap.scalars`). Linear maps act on column vectors, so the matrix of
``f: V -> W`` has shape ``(dim W, dim V)`` and column ``i`` is ``f(e_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .scalars import FieldSpec

__all__ = [
    "rref",
    "rank",
    "kernel",
    "solve",
    "inverse",
    "SubspaceBasis",
    "span",
    "kernel_of",
    "subspace_equals",
    "subspace_contains",
    "subspace_sum",
    "subspace_intersect",
    "QuotientData",
    "quotient",
    "pair_index",
    "pair_unindex",
    "is_zero",
]


def _as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=object)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {a.shape}")
    return a


def rref(field: FieldSpec, m) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    The returned matrix has the same shape as ``m``; zero rows sit at the bottom.
    """
    a = field.normalize(_as_matrix(m))
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = [i for i in range(r, rows) if a[i, c] != 0]
        if not nz:
            continue
        p = nz[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        piv = a[r, c]
        if piv != 1:
            a[r] = field.normalize(a[r] * field.inv(piv))
        for i in range(rows):
            if i != r and a[i, c] != 0:
                a[i] = field.normalize(a[i] - a[r] * a[i, c])
        pivots.append(c)
        r += 1
    return a, pivots


def rank(field: FieldSpec, m) -> int:
    return len(rref(field, m)[1])


def kernel(field: FieldSpec, m) -> np.ndarray:
    """Rows spanning ``{v : m @ v = 0}``, in RREF (shape ``(nullity, cols)``)."""
    a, pivots = rref(field, m)
    cols = a.shape[1]
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = field.zeros(len(free), cols)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, p in enumerate(pivots):
            basis[k, p] = field.neg(a[r, f])
    if len(free) == 0:
        return basis
    return rref(field, basis)[0]


def solve(field: FieldSpec, m, rhs) -> np.ndarray | None:
    """One solution of ``m @ x = rhs`` with free variables zero, or ``None``."""
    a = _as_matrix(m)
    b = np.asarray(rhs, dtype=object)
    if b.ndim != 1 or b.shape[0] != a.shape[0]:
        raise ValueError(f"rhs of length {b.shape} does not match {a.shape[0]} rows")
    aug = np.concatenate([a, b.reshape(-1, 1)], axis=1)
    red, pivots = rref(field, aug)
    cols = a.shape[1]
    if pivots and pivots[-1] == cols:
        return None
    x = field.zeros(cols)
    for r, p in enumerate(pivots):
        x[p] = red[r, cols]
    return x


def inverse(field: FieldSpec, m) -> np.ndarray | None:
    """Inverse of a square matrix, or ``None`` when singular."""
    a = _as_matrix(m)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"cannot invert non-square matrix of shape {a.shape}")
    red, pivots = rref(field, np.concatenate([a, field.eye(n)], axis=1))
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return red[:, n:].copy()


def is_zero(arr) -> bool:
    a = np.asarray(arr, dtype=object)
    return bool(np.all(a == 0))


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """A subspace of F^ambient_dim stored by its unique RREF basis."""

    field: FieldSpec
    ambient_dim: int
    vectors: np.ndarray
    pivots: tuple[int, ...] = dc_field(default=())

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    def __eq__(self, other):
        return isinstance(other, SubspaceBasis) and subspace_equals(self, other)

    def __hash__(self):
        return hash((self.ambient_dim, self.pivots, tuple(self.vectors.reshape(-1))))

    def __repr__(self):
        return f"SubspaceBasis(dim={self.dim}, ambient_dim={self.ambient_dim})"

    def coordinates(self, v) -> np.ndarray | None:
        """Coordinates of ``v`` in this basis, or ``None`` when ``v`` lies outside."""
        v = self.field.normalize(np.asarray(v, dtype=object))
        coords = v[list(self.pivots)] if self.pivots else self.field.zeros(0)
        recon = self.field.normalize(coords @ self.vectors) if self.dim else self.field.zeros(self.ambient_dim)
        return coords if np.array_equal(recon, v) else None


def span(field: FieldSpec, vectors, ambient_dim: int | None = None) -> SubspaceBasis:
    """Canonical basis of the span of the given row vectors."""
    a = np.asarray(vectors, dtype=object)
    if a.size == 0:
        if ambient_dim is None:
            raise ValueError("ambient_dim is required for an empty spanning set")
        return SubspaceBasis(field, ambient_dim, field.zeros(0, ambient_dim), ())
    a = a.reshape(-1, a.shape[-1])
    if ambient_dim is not None and a.shape[1] != ambient_dim:
        raise ValueError(f"vectors of length {a.shape[1]} in ambient dimension {ambient_dim}")
    red, pivots = rref(field, a)
    return SubspaceBasis(field, a.shape[1], red[: len(pivots)].copy(), tuple(pivots))


def kernel_of(field: FieldSpec, m) -> SubspaceBasis:
    a = _as_matrix(m)
    return span(field, kernel(field, a), a.shape[1])


def _check_ambient(u: SubspaceBasis, v: SubspaceBasis):
    if u.ambient_dim != v.ambient_dim:
        raise ValueError(f"ambient dimensions differ: {u.ambient_dim} vs {v.ambient_dim}")
    if u.field != v.field:
        raise ValueError(f"fields differ: {u.field} vs {v.field}")


def subspace_equals(u: SubspaceBasis, v: SubspaceBasis) -> bool:
    _check_ambient(u, v)
    return u.pivots == v.pivots and np.array_equal(u.vectors, v.vectors)


def subspace_contains(u: SubspaceBasis, vec) -> bool:
    vec = np.asarray(vec, dtype=object)
    if vec.shape != (u.ambient_dim,):
        raise ValueError(f"vector of shape {vec.shape} in ambient dimension {u.ambient_dim}")
    return u.coordinates(vec) is not None


def subspace_sum(u: SubspaceBasis, v: SubspaceBasis) -> SubspaceBasis:
    _check_ambient(u, v)
    return span(u.field, np.concatenate([u.vectors, v.vectors]), u.ambient_dim)


def subspace_intersect(u: SubspaceBasis, v: SubspaceBasis) -> SubspaceBasis:
    _check_ambient(u, v)
    f = u.field
    if u.dim == 0 or v.dim == 0:
        return span(f, f.zeros(0, u.ambient_dim), u.ambient_dim)
    # x = alpha.U = beta.V  <=>  [U^T | -V^T] (alpha, beta) = 0
    stacked = np.concatenate([u.vectors.T, f.normalize(-v.vectors.T)], axis=1)
    null = kernel(f, stacked)
    if null.shape[0] == 0:
        return span(f, f.zeros(0, u.ambient_dim), u.ambient_dim)
    return span(f, f.normalize(null[:, : u.dim] @ u.vectors), u.ambient_dim)


@dataclass(frozen=True, eq=False)
class QuotientData:
    """F^ambient_dim / subspace, with the non-pivot coordinates as complement.

    ``projection`` (quotient_dim x ambient_dim) kills exactly the subspace and
    ``section`` (ambient_dim x quotient_dim) picks the standard representative.
    """

    ambient_dim: int
    subspace: SubspaceBasis
    complement_indices: tuple[int, ...]
    projection: np.ndarray
    section: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.complement_indices)


def quotient(sub: SubspaceBasis) -> QuotientData:
    f = sub.field
    n = sub.ambient_dim
    pivots = set(sub.pivots)
    comp = tuple(c for c in range(n) if c not in pivots)
    q = len(comp)
    proj = f.zeros(q, n)
    sec = f.zeros(n, q)
    for k, c in enumerate(comp):
        proj[k, c] = 1
        sec[c, k] = 1
    for r, p in enumerate(sub.pivots):
        for k, c in enumerate(comp):
            proj[k, p] = f.neg(sub.vectors[r, c])
    return QuotientData(n, sub, comp, proj, sec)


def pair_index(i: int, j: int, n: int) -> int:
    """Flat index of ``e_i (x) e_j`` in an ``n*n``-dimensional tensor square."""
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"pair ({i}, {j}) out of range for dimension {n}")
    return i * n + j


def pair_unindex(flat: int, n: int) -> tuple[int, int]:
    if not 0 <= flat < n * n:
        raise ValueError(f"flat index {flat} out of range for dimension {n}")
    return divmod(flat, n)
