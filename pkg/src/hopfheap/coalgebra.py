"""Finite-dimensional coalgebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .linalg import rank
from .report import Report, ShapeError, compare, first_failure
from .scalars import FieldSpec

__all__ = [
    "Coalgebra",
    "CoalgebraMorphism",
    "check_coalgebra",
    "co_opposite",
    "tensor_coalgebra",
    "grouplike_coalgebra",
    "trivial_coalgebra",
    "grouplike_scan",
    "is_grouplike",
    "check_coalgebra_morphism",
    "canonical_unit_element",
]


def _frozen(field: FieldSpec, data, shape: tuple[int, ...], what: str) -> np.ndarray:
    a = field.array(data)
    if a.shape != shape:
        raise ShapeError(f"{what} has shape {a.shape}, expected {shape}")
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Coalgebra:
    """Coalgebra on basis ``e_0 .. e_{n-1}``.

    ``comul[i, j, k]`` is the coefficient of ``e_j (x) e_k`` in ``Delta(e_i)``
    and ``counit[i] = eps(e_i)``.
    """

    field: FieldSpec
    comul: np.ndarray
    counit: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        counit = np.asarray(self.counit, dtype=object)
        if counit.ndim != 1 or counit.shape[0] < 1:
            raise ShapeError(f"counit must be a non-empty vector, got shape {counit.shape}")
        n = counit.shape[0]
        object.__setattr__(self, "counit", _frozen(self.field, counit, (n,), "counit"))
        object.__setattr__(self, "comul", _frozen(self.field, self.comul, (n, n, n), "comul"))
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != n:
                raise ShapeError(f"{len(labels)} labels for dimension {n}")
            object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return self.counit.shape[0]

    def __eq__(self, other):
        return (
            isinstance(other, Coalgebra)
            and self.field == other.field
            and self.dim == other.dim
            and np.array_equal(self.comul, other.comul)
            and np.array_equal(self.counit, other.counit)
        )

    __hash__ = object.__hash__

    def __repr__(self):
        return f"Coalgebra(dim={self.dim}, field={self.field})"

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"e{i}"

    @cached_property
    def comul3(self) -> np.ndarray:
        """``comul3[c, x, y, z]``: coefficient of ``x (x) y (x) z`` in the threefold coproduct."""
        return self.field.einsum("cxt,tyz->cxyz", self.comul, self.comul)

    def coproduct_power(self, k: int) -> np.ndarray:
        """Iterated coproduct into ``k`` tensor legs, as an ``(n,)*(k+1)`` tensor."""
        if k < 1:
            raise ValueError("need at least one leg")
        if k == 1:
            return self.field.eye(self.dim)
        out = self.comul
        for _ in range(k - 2):
            out = self.field.einsum("...t,tyz->...yz", out, self.comul)
        return out


def trivial_coalgebra(field: FieldSpec) -> Coalgebra:
    """The ground field as a one-dimensional coalgebra."""
    return grouplike_coalgebra(field, 1)


def grouplike_coalgebra(field: FieldSpec, n: int, labels: Sequence[str] | None = None) -> Coalgebra:
    """The coalgebra of a set: every basis vector is grouplike."""
    comul = field.zeros(n, n, n)
    for i in range(n):
        comul[i, i, i] = 1
    counit = field.array([1] * n)
    return Coalgebra(field, comul, counit, tuple(labels) if labels else None)


def check_coalgebra(c: Coalgebra) -> Report:
    """Coassociativity and both counit laws, checked exactly."""
    f, D, eps, n = c.field, c.comul, c.counit, c.dim
    eye = f.eye(n)
    return first_failure([
        lambda: compare(
            "coassociativity",
            f.einsum("itk,tab->iabk", D, D),
            f.einsum("iat,tbk->iabk", D, D),
            1,
        ),
        lambda: compare("left counit law", f.einsum("ijk,j->ik", D, eps), eye, 1),
        lambda: compare("right counit law", f.einsum("ijk,k->ij", D, eps), eye, 1),
    ])


def co_opposite(c: Coalgebra) -> Coalgebra:
    return Coalgebra(c.field, c.comul.transpose(0, 2, 1), c.counit, c.labels)


def tensor_coalgebra(a: Coalgebra, b: Coalgebra) -> Coalgebra:
    """``a (x) b`` with basis ``e_i (x) e_j`` at flat index ``i * dim_b + j``."""
    if a.field != b.field:
        raise ValueError(f"cannot tensor coalgebras over {a.field} and {b.field}")
    f, na, nb = a.field, a.dim, b.dim
    n = na * nb
    comul = f.einsum("ipr,jqs->ijpqrs", a.comul, b.comul).reshape(n, n, n)
    counit = f.einsum("i,j->ij", a.counit, b.counit).reshape(n)
    labels = None
    if a.labels or b.labels:
        labels = tuple(f"{a.label(i)}|{b.label(j)}" for i in range(na) for j in range(nb))
    return Coalgebra(f, comul, counit, labels)


def is_grouplike(c: Coalgebra, v) -> bool:
    f = c.field
    v = f.array(v)
    if v.shape != (c.dim,):
        raise ShapeError(f"vector of shape {v.shape} for dimension {c.dim}")
    if f.normalize(c.counit @ v) != 1:
        return False
    return bool(np.array_equal(f.einsum("i,ijk->jk", v, c.comul), f.einsum("j,k->jk", v, v)))


def grouplike_scan(c: Coalgebra, candidates=None) -> list[np.ndarray]:
    """Grouplike elements among the basis vectors and any supplied candidates.

    Each candidate is rescaled to counit 1 before testing. This is a scan, not a
    solver for ``Delta(v) = v (x) v``: grouplikes that are neither basis vectors
    nor supplied candidates are not found.
    """
    f = c.field
    pool = [f.basis_vector(c.dim, i) for i in range(c.dim)]
    if candidates is not None:
        pool.extend(f.array(v) for v in candidates)
    found: list[np.ndarray] = []
    for v in pool:
        if v.shape != (c.dim,):
            raise ShapeError(f"candidate of shape {v.shape} for dimension {c.dim}")
        e = f.normalize(c.counit @ v)
        if e == 0:
            continue
        v = f.normalize(v * f.inv(e))
        if is_grouplike(c, v) and not any(np.array_equal(v, w) for w in found):
            found.append(v)
    return found


def canonical_unit_element(c: Coalgebra) -> np.ndarray:
    """First basis vector with nonzero counit, rescaled to counit 1."""
    f = c.field
    for i in range(c.dim):
        if c.counit[i] != 0:
            return f.normalize(f.basis_vector(c.dim, i) * f.inv(c.counit[i]))
    raise ShapeError("counit vanishes identically; not a coalgebra")


def counit_one_elements(c: Coalgebra) -> list[np.ndarray]:
    """Every basis vector with nonzero counit, rescaled to counit 1."""
    f = c.field
    return [
        f.normalize(f.basis_vector(c.dim, i) * f.inv(c.counit[i]))
        for i in range(c.dim)
        if c.counit[i] != 0
    ]


@dataclass(frozen=True, eq=False)
class CoalgebraMorphism:
    source: Coalgebra
    target: Coalgebra
    matrix: np.ndarray

    def __post_init__(self):
        m = _frozen(self.source.field, self.matrix, (self.target.dim, self.source.dim), "morphism matrix")
        object.__setattr__(self, "matrix", m)


def check_linear_coalgebra_map(f_mat, source: Coalgebra, target: Coalgebra) -> Report:
    """Delta_target . f = (f (x) f) . Delta_source and eps_target . f = eps_source."""
    f = source.field
    m = np.asarray(f_mat, dtype=object)
    if m.shape != (target.dim, source.dim):
        raise ShapeError(f"map of shape {m.shape}, expected {(target.dim, source.dim)}")
    return first_failure([
        lambda: compare(
            "comultiplicativity",
            f.einsum("ti,tjk->ijk", m, target.comul),
            f.einsum("iab,ja,kb->ijk", source.comul, m, m),
            1,
        ),
        lambda: compare("counitality", f.einsum("t,ti->i", target.counit, m), source.counit, 1),
    ])


def check_coalgebra_morphism(fm: CoalgebraMorphism) -> Report:
    return check_linear_coalgebra_map(fm.matrix, fm.source, fm.target)


def is_invertible(field: FieldSpec, m) -> bool:
    m = np.asarray(m, dtype=object)
    return m.shape[0] == m.shape[1] and rank(field, m) == m.shape[0]
