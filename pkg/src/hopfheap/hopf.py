"""Bialgebras and Hopf algebras by structure constants, with an antipode solver."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coalgebra import Coalgebra, _frozen, check_coalgebra, check_linear_coalgebra_map
from .linalg import solve
from .report import Report, ShapeError, compare, first_failure

__all__ = [
    "HopfAlgebraData",
    "check_bialgebra",
    "check_antipode",
    "solve_antipode",
    "with_solved_antipode",
    "check_hopf_morphism",
    "check_algebra_map",
]


@dataclass(frozen=True, eq=False)
class HopfAlgebraData:
    """``mult[i, j, k]`` is the coefficient of ``e_k`` in ``e_i e_j``.

    ``antipode`` is optional so that bialgebras are representable; when present
    it is a matrix whose column ``i`` is ``S(e_i)``.
    """

    coalgebra: Coalgebra
    mult: np.ndarray
    unit: np.ndarray
    antipode: np.ndarray | None = None

    def __post_init__(self):
        f, n = self.coalgebra.field, self.coalgebra.dim
        object.__setattr__(self, "mult", _frozen(f, self.mult, (n, n, n), "mult"))
        object.__setattr__(self, "unit", _frozen(f, self.unit, (n,), "unit"))
        if self.antipode is not None:
            object.__setattr__(self, "antipode", _frozen(f, self.antipode, (n, n), "antipode"))

    @property
    def field(self):
        return self.coalgebra.field

    @property
    def dim(self) -> int:
        return self.coalgebra.dim

    @property
    def comul(self) -> np.ndarray:
        return self.coalgebra.comul

    @property
    def counit(self) -> np.ndarray:
        return self.coalgebra.counit

    def __eq__(self, other):
        if not isinstance(other, HopfAlgebraData):
            return NotImplemented
        same_s = (self.antipode is None) == (other.antipode is None) and (
            self.antipode is None or np.array_equal(self.antipode, other.antipode)
        )
        return (
            self.coalgebra == other.coalgebra
            and np.array_equal(self.mult, other.mult)
            and np.array_equal(self.unit, other.unit)
            and same_s
        )

    __hash__ = object.__hash__

    def __repr__(self):
        s = "with antipode" if self.antipode is not None else "no antipode"
        return f"HopfAlgebraData(dim={self.dim}, field={self.field}, {s})"

    def with_antipode(self, antipode) -> "HopfAlgebraData":
        return HopfAlgebraData(self.coalgebra, self.mult, self.unit, antipode)

    def multiply(self, x, y) -> np.ndarray:
        return self.field.einsum("i,j,ijk->k", x, y, self.mult)


def check_algebra_map(f_mat, source: HopfAlgebraData, target: HopfAlgebraData) -> Report:
    """Multiplicativity and unitality of a linear map."""
    f = source.field
    m = np.asarray(f_mat, dtype=object)
    return first_failure([
        lambda: compare(
            "multiplicativity",
            f.einsum("ijs,ts->ijt", source.mult, m),
            f.einsum("ai,bj,abt->ijt", m, m, target.mult),
            2,
        ),
        lambda: compare("unitality", f.einsum("ti,i->t", m, source.unit), target.unit, 0),
    ])


def check_bialgebra(h: HopfAlgebraData) -> Report:
    """Coalgebra axioms, associativity, unit, and that Delta and eps are algebra maps."""
    f, M, u, D, eps, n = h.field, h.mult, h.unit, h.comul, h.counit, h.dim
    eye = f.eye(n)
    return first_failure([
        lambda: check_coalgebra(h.coalgebra),
        lambda: compare(
            "associativity",
            f.einsum("abt,tcz->abcz", M, M),
            f.einsum("bct,atz->abcz", M, M),
            3,
        ),
        lambda: compare("left unit", f.einsum("t,tak->ak", u, M), eye, 1),
        lambda: compare("right unit", f.einsum("t,atk->ak", u, M), eye, 1),
        lambda: compare(
            "comultiplication is multiplicative",
            f.einsum("abt,tpq->abpq", M, D),
            f.einsum("axy,bzw,xzp,ywq->abpq", D, D, M, M),
            2,
        ),
        lambda: compare("comultiplication is unital", f.einsum("t,tpq->pq", u, D), f.einsum("p,q->pq", u, u), 0),
        lambda: compare(
            "counit is multiplicative",
            f.einsum("abt,t->ab", M, eps),
            f.einsum("a,b->ab", eps, eps),
            2,
        ),
        lambda: compare("counit is unital", np.array([f.normalize(eps @ u)]), np.array([1], dtype=object), 0),
    ])


def _convolution_sides(h: HopfAlgebraData, S) -> tuple[np.ndarray, np.ndarray]:
    f, M, D = h.field, h.mult, h.comul
    left = f.einsum("hxy,sx,syk->hk", D, S, M)
    right = f.einsum("hxy,sy,xsk->hk", D, S, M)
    return left, right


def check_antipode(h: HopfAlgebraData, antipode=None) -> Report:
    """``sum S(h1) h2 = eps(h) 1 = sum h1 S(h2)`` on every basis element."""
    S = h.antipode if antipode is None else h.field.array(antipode)
    if S is None:
        return Report(False, "antipode missing", None, "no antipode supplied")
    if S.shape != (h.dim, h.dim):
        raise ShapeError(f"antipode of shape {S.shape}, expected {(h.dim, h.dim)}")
    f = h.field
    target = f.einsum("h,k->hk", h.counit, h.unit)
    left, right = _convolution_sides(h, S)
    return first_failure([
        lambda: compare("left antipode law", left, target, 1),
        lambda: compare("right antipode law", right, target, 1),
    ])


def solve_antipode(h: HopfAlgebraData) -> np.ndarray | None:
    """The convolution inverse of the identity, or ``None`` if there is none.

    Solves the left law ``sum S(h1) h2 = eps(h) 1`` as one linear system in the
    ``n^2`` entries of ``S`` and then verifies the right law.
    """
    f, n = h.field, h.dim
    # coefficient of unknown S[s, x] in equation (h, k)
    coeff = f.einsum("hxy,syk->hksx", h.comul, h.mult).reshape(n * n, n * n)
    rhs = f.einsum("h,k->hk", h.counit, h.unit).reshape(n * n)
    sol = solve(f, coeff, rhs)
    if sol is None:
        return None
    S = sol.reshape(n, n)
    if not check_antipode(h, S):
        return None
    return S


def with_solved_antipode(h: HopfAlgebraData) -> HopfAlgebraData:
    S = solve_antipode(h)
    if S is None:
        raise ValueError("bialgebra has no antipode")
    return h.with_antipode(S)


def check_hopf_morphism(f_mat, source: HopfAlgebraData, target: HopfAlgebraData) -> Report:
    """Coalgebra map, algebra map, and antipode compatibility when both antipodes exist."""
    f = source.field
    m = f.array(f_mat)
    if m.shape != (target.dim, source.dim):
        raise ShapeError(f"map of shape {m.shape}, expected {(target.dim, source.dim)}")
    checks = [
        lambda: check_linear_coalgebra_map(m, source.coalgebra, target.coalgebra),
        lambda: check_algebra_map(m, source, target),
    ]
    if source.antipode is not None and target.antipode is not None:
        checks.append(lambda: compare(
            "antipode compatibility",
            f.normalize(target.antipode @ m).T,
            f.normalize(m @ source.antipode).T,
            1,
        ))
    return first_failure(checks)
