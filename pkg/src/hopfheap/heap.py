"""Hopf heaps: coalgebras with a ternary bracket ``[a, b, c]``.

``chi[i, j, k, l]`` is the coefficient of ``e_l`` in ``[e_i, e_j, e_k]``. The
middle slot carries the co-opposite coalgebra, so compatibility with the
coproduct reads ``Delta[a, b, c] = sum [a1, b2, c1] (x) [a2, b1, c2]``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coalgebra import (
    Coalgebra,
    CoalgebraMorphism,
    _frozen,
    canonical_unit_element,
    check_coalgebra,
    check_linear_coalgebra_map,
    counit_one_elements,
    is_grouplike,
)
from .hopf import HopfAlgebraData, check_antipode, check_bialgebra
from .report import Report, ShapeError, VerificationError, compare, first_failure

__all__ = [
    "HopfHeap",
    "HeapMorphism",
    "check_hopf_heap",
    "grunspan_map",
    "grunspan_by_coproducts",
    "grunspan_by_element",
    "check_grunspan",
    "heap_from_hopf",
    "hopf_at_grouplike",
    "check_heap_morphism",
]


@dataclass(frozen=True, eq=False)
class HopfHeap:
    coalgebra: Coalgebra
    chi: np.ndarray

    def __post_init__(self):
        n = self.coalgebra.dim
        object.__setattr__(self, "chi", _frozen(self.coalgebra.field, self.chi, (n, n, n, n), "chi"))

    @property
    def field(self):
        return self.coalgebra.field

    @property
    def dim(self) -> int:
        return self.coalgebra.dim

    def __eq__(self, other):
        return (
            isinstance(other, HopfHeap)
            and self.coalgebra == other.coalgebra
            and np.array_equal(self.chi, other.chi)
        )

    __hash__ = object.__hash__

    def __repr__(self):
        return f"HopfHeap(dim={self.dim}, field={self.field})"

    def bracket(self, a, b, c) -> np.ndarray:
        return self.field.einsum("i,j,k,ijkl->l", a, b, c, self.chi)


def check_hopf_heap(h: HopfHeap) -> Report:
    """Coalgebra-map property of chi, para-associativity, and the Mal'cev laws."""
    f, X, D, eps, n = h.field, h.chi, h.coalgebra.comul, h.coalgebra.counit, h.dim
    eye = f.eye(n)
    return first_failure([
        lambda: check_coalgebra(h.coalgebra),
        lambda: compare(
            "chi is counital",
            f.einsum("abcl,l->abc", X, eps),
            f.einsum("a,b,c->abc", eps, eps, eps),
            3,
        ),
        lambda: compare(
            "chi is comultiplicative",
            f.einsum("abcl,lpq->abcpq", X, D),
            # [a1, b2, c1] (x) [a2, b1, c2]
            f.einsum("aAB,bCE,cFG,AEFp,BCGq->abcpq", D, D, D, X, X),
            3,
        ),
        lambda: compare(
            "associativity",
            f.einsum("abcl,ldez->abcdez", X, X),
            f.einsum("cdel,ablz->abcdez", X, X),
            5,
        ),
        lambda: compare(
            "left Mal'cev law",
            f.einsum("cxy,xyaz->acz", D, X),
            f.einsum("c,az->acz", eps, eye),
            2,
        ),
        lambda: compare(
            "right Mal'cev law",
            f.einsum("cxy,axyz->acz", D, X),
            f.einsum("c,az->acz", eps, eye),
            2,
        ),
    ])


def grunspan_by_coproducts(h: HopfHeap) -> np.ndarray:
    """``theta(c) = sum [c1, [c4, c3, c2], c5]``.

    Uses coassociativity to split the fivefold coproduct as a threefold one
    whose middle leg is split again.
    """
    f, X, D3 = h.field, h.chi, h.coalgebra.comul3
    # reversed inner bracket: w |-> sum [w3, w2, w1]
    inner = f.einsum("wxyz,zyxl->lw", D3, X)
    return f.einsum("cpwr,lw,plrz->zc", D3, inner, X)


def grunspan_by_element(h: HopfHeap, e=None) -> np.ndarray:
    """``theta(c) = sum [c1, [e1, c3, c2], e2]`` for any ``e`` with ``eps(e) = 1``."""
    f, X, D, D3 = h.field, h.chi, h.coalgebra.comul, h.coalgebra.comul3
    e = canonical_unit_element(h.coalgebra) if e is None else f.array(e)
    if f.normalize(h.coalgebra.counit @ e) != 1:
        raise ValueError("the auxiliary element must have counit 1")
    e_split = f.einsum("i,ist->st", e, D)
    return f.einsum("cpqr,st,srql,pltz->zc", D3, e_split, X, X)


def grunspan_map(h: HopfHeap, e=None) -> np.ndarray:
    """The Grunspan map as a matrix (column ``c`` is ``theta(e_c)``).

    Computed from the fivefold-coproduct formula and cross-checked against the
    formula through an element of counit one; disagreement raises.
    """
    theta = grunspan_by_coproducts(h)
    other = grunspan_by_element(h, e)
    if not np.array_equal(theta, other):
        r = compare("Grunspan formulas agree", theta.T, other.T, 1)
        raise VerificationError(f"Grunspan formulas disagree: {r}", r)
    return theta


def check_grunspan(h: HopfHeap, theta) -> Report:
    """``theta`` is a coalgebra endomorphism with ``[[a,b,theta c],d,e] = [a,[d,c,b],e]``."""
    f, X = h.field, h.chi
    theta = f.array(theta)
    if theta.shape != (h.dim, h.dim):
        raise ShapeError(f"theta of shape {theta.shape}, expected {(h.dim, h.dim)}")
    return first_failure([
        lambda: check_linear_coalgebra_map(theta, h.coalgebra, h.coalgebra),
        lambda: compare(
            "Grunspan identity",
            f.einsum("abkl,kc,ldez->abcdez", X, theta, X),
            f.einsum("dcbl,alez->abcdez", X, X),
            5,
        ),
    ])


def heap_from_hopf(h: HopfAlgebraData) -> HopfHeap:
    """The heap ``[a, b, c] = a S(b) c`` of a Hopf algebra."""
    if h.antipode is None:
        raise ValueError("heap_from_hopf needs a Hopf algebra with an antipode")
    f, M, S = h.field, h.mult, h.antipode
    aSb = f.einsum("sj,ist->ijt", S, M)
    return HopfHeap(h.coalgebra, f.einsum("ijt,tkl->ijkl", aSb, M))


def hopf_at_grouplike(h: HopfHeap, x) -> HopfAlgebraData:
    """The Hopf algebra with unit ``x``, product ``[a, x, b]`` and antipode ``[x, a, x]``."""
    f, X = h.field, h.chi
    x = f.array(x)
    if not is_grouplike(h.coalgebra, x):
        raise ValueError("hopf_at_grouplike needs a grouplike element")
    mult = f.einsum("s,iskl->ikl", x, X)
    antipode = f.einsum("a,b,aibl->li", x, x, X)
    return HopfAlgebraData(h.coalgebra, mult, x, antipode)


@dataclass(frozen=True, eq=False)
class HeapMorphism:
    source: HopfHeap
    target: HopfHeap
    matrix: np.ndarray

    def __post_init__(self):
        m = _frozen(self.source.field, self.matrix, (self.target.dim, self.source.dim), "morphism matrix")
        object.__setattr__(self, "matrix", m)

    @property
    def coalgebra_morphism(self) -> CoalgebraMorphism:
        return CoalgebraMorphism(self.source.coalgebra, self.target.coalgebra, self.matrix)


def check_heap_morphism(m: HeapMorphism, theta_source=None, theta_target=None) -> Report:
    """Coalgebra map, bracket preservation, and commuting with the Grunspan maps.

    Grunspan maps default to :func:`grunspan_map` of each side.
    """
    f, F = m.source.field, m.matrix
    ts = grunspan_by_coproducts(m.source) if theta_source is None else f.array(theta_source)
    tt = grunspan_by_coproducts(m.target) if theta_target is None else f.array(theta_target)
    return first_failure([
        lambda: check_linear_coalgebra_map(F, m.source.coalgebra, m.target.coalgebra),
        lambda: compare(
            "bracket preservation",
            f.einsum("abcs,ts->abct", m.source.chi, F),
            f.einsum("ia,jb,kc,ijkt->abct", F, F, F, m.target.chi),
            3,
        ),
        lambda: compare("Grunspan compatibility", f.normalize(F @ ts).T, f.normalize(tt @ F).T, 1),
    ])


def grunspan_formula_agreement(h: HopfHeap) -> Report:
    """Both Grunspan formulas agree for every basis choice of counit-one element."""
    theta = grunspan_by_coproducts(h)
    for k, e in enumerate(counit_one_elements(h.coalgebra)):
        r = compare("Grunspan formulas agree", theta.T, grunspan_by_element(h, e).T, 1)
        if not r:
            return Report(False, r.axiom, r.witness, f"auxiliary element #{k}: {r.detail}")
    return Report.passed()


def check_hopf_at_grouplike(h: HopfHeap, x) -> Report:
    hx = hopf_at_grouplike(h, x)
    return first_failure([lambda: check_bialgebra(hx), lambda: check_antipode(hx)])
