"""Right and left translation Hopf algebras of a Hopf heap.

The right translation ``tau_a^b`` is the endomorphism ``c |-> [c, a, b]`` and
the left translation ``sigma^a_b`` is ``c |-> [a, b, c]``. Their spans inside
``End(C)`` get an abstract basis (the RREF basis of the span), and every
structure map defined on generators is pushed through a kernel basis of the
generator-to-span map before it is accepted.

Endomorphisms are flattened row-major: matrix entry ``E[l, k]`` (coefficient
of ``e_l`` in ``E(e_k)``) sits at position ``l * n + k``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coalgebra import Coalgebra, canonical_unit_element, is_grouplike
from .heap import HeapMorphism, HopfHeap, grunspan_map, hopf_at_grouplike
from .hopf import HopfAlgebraData, check_antipode, check_bialgebra, check_hopf_morphism
from .linalg import SubspaceBasis, kernel, pair_unindex, solve, span
from .report import Report, VerificationError, compare, first_failure

__all__ = [
    "TranslationAlgebra",
    "build_translations",
    "build_right_translations",
    "build_left_translations",
    "grouplike_iso",
    "induced_morphism",
    "SwapReport",
    "abelian_swap_check",
    "check_translation_identities",
]

RIGHT, LEFT = "right", "left"


@dataclass(frozen=True, eq=False)
class TranslationAlgebra:
    """Translation Hopf algebra with its realisation inside ``End(C)``.

    ``generator_coords[i * n + j]`` holds the abstract coordinates of the
    generator built from ``(e_i, e_j)``; ``sections[p]`` writes abstract basis
    element ``p`` as a combination of generators; ``relations`` spans the
    linear relations among generators. ``action[k, p, l]`` is the coefficient
    of ``e_l`` when basis element ``p`` is applied to ``e_k``.
    """

    side: str
    heap: HopfHeap
    basis: SubspaceBasis
    hopf: HopfAlgebraData
    generator_coords: np.ndarray
    action: np.ndarray
    relations: np.ndarray
    sections: np.ndarray
    theta: np.ndarray

    @property
    def dim(self) -> int:
        return self.basis.dim

    @property
    def field(self):
        return self.heap.field

    def endomorphism(self, p: int) -> np.ndarray:
        n = self.heap.dim
        return self.basis.vectors[p].reshape(n, n)

    def generator(self, i: int, j: int) -> np.ndarray:
        """Abstract coordinates of ``tau_{e_i}^{e_j}`` (or ``sigma^{e_i}_{e_j}``)."""
        return self.generator_coords[i * self.heap.dim + j]

    def coordinates(self, endo) -> np.ndarray:
        """Abstract coordinates of an endomorphism matrix lying in the span."""
        coords = self.basis.coordinates(np.asarray(endo, dtype=object).reshape(-1))
        if coords is None:
            raise ValueError("endomorphism is not in the translation span")
        return coords

    def descend(self, generator_values: np.ndarray, what: str) -> np.ndarray:
        """Turn values assigned to generators into values on the abstract basis.

        ``generator_values`` has the ``n*n`` generators on its first axis. Every
        relation among the generators must map to zero, otherwise the assignment
        does not define a map on the span and :class:`VerificationError` is raised.
        """
        f, nn = self.field, self.generator_coords.shape[0]
        flat = np.asarray(generator_values, dtype=object).reshape(nn, -1)
        _check_relations(f, self.relations, flat, what)
        return f.normalize(self.sections @ flat).reshape((self.dim,) + generator_values.shape[1:])


def _check_relations(f, relations, flat, what: str):
    if relations.shape[0] == 0:
        return
    images = f.normalize(relations @ flat)
    bad = np.argwhere(images != 0)
    if len(bad):
        r = int(bad[0][0])
        rel = {pair_unindex(int(g), int(np.sqrt(relations.shape[1]))): relations[r, g]
               for g in np.nonzero(relations[r])[0]}
        report = Report(False, f"{what} well-defined", (r,), f"relation {rel} is not killed")
        raise VerificationError(f"{what} is not well defined on the span: relation {rel}", report)


def _generator_endomorphisms(h: HopfHeap, side: str) -> np.ndarray:
    n, X = h.dim, h.chi
    if side == RIGHT:
        gens = X.transpose(1, 2, 3, 0)  # [i, j, l, k] = X[k, i, j, l]
    elif side == LEFT:
        gens = X  # [i, j, k, l]; reorder to [i, j, l, k]
        gens = gens.transpose(0, 1, 3, 2)
    else:
        raise ValueError(f"side must be 'right' or 'left', not {side!r}")
    return np.array(gens, dtype=object).reshape(n * n, n * n)


def build_translations(h: HopfHeap, side: str = RIGHT, e=None) -> TranslationAlgebra:
    """Build ``Tn^r C`` (``side="right"``) or ``Tn^l C`` (``side="left"``).

    Installs product, unit, coproduct, counit and antipode from the generator
    formulas, verifies each is well defined on the span, requires both antipode
    formulas to agree, and checks the bialgebra and antipode axioms of the result.
    """
    f, n, X, D, eps = h.field, h.dim, h.chi, h.coalgebra.comul, h.coalgebra.counit
    gens = _generator_endomorphisms(h, side)
    basis = span(f, gens, n * n)
    r = basis.dim
    piv = list(basis.pivots)
    coords = gens[:, piv] if r else f.zeros(n * n, 0)
    if not np.array_equal(f.normalize(coords @ basis.vectors), gens):
        raise VerificationError("generator coordinates do not reproduce the generators")
    relations = kernel(f, gens.T)
    sections = f.zeros(r, n * n)
    for p in range(r):
        lam = solve(f, gens.T, basis.vectors[p])
        if lam is None:
            raise VerificationError(f"basis vector {p} is not a combination of generators")
        sections[p] = lam
    theta = grunspan_map(h)

    endos = basis.vectors.reshape(r, n, n)
    if side == RIGHT:
        # p.q = "apply p, then q"
        prods = f.einsum("qlm,pmk->pqlk", endos, endos)
    else:
        prods = f.einsum("plm,qmk->pqlk", endos, endos)
    prods = prods.reshape(r, r, n * n)
    mult = f.normalize(prods[:, :, piv])
    if not np.array_equal(f.einsum("pqs,sv->pqv", mult, basis.vectors), prods):
        raise VerificationError("translation span is not closed under composition")
    unit = basis.coordinates(f.eye(n).reshape(-1))
    if unit is None:
        raise VerificationError("identity endomorphism is not a translation")

    C = coords.reshape(n, n, r)
    es = f.einsum("t,tsu->su", canonical_unit_element(h.coalgebra) if e is None else f.array(e), D)
    if side == RIGHT:
        # Delta(tau_a^b) = sum tau_{a2}^{b1} (x) tau_{a1}^{b2}
        delta_gen = f.einsum("iAB,jCE,BCp,AEq->ijpq", D, D, C, C)
        # S(tau_a^b) = tau_b^{theta a}
        s_gen = f.einsum("ki,jkp->ijp", theta, C)
        # S(tau_a^b) = sum tau_{[e1, a, b]}^{e2}
        s_gen_alt = f.einsum("su,sijk,kup->ijp", es, X, C)
    else:
        # Delta(sigma^a_b) = sum sigma^{a1}_{b2} (x) sigma^{a2}_{b1}
        delta_gen = f.einsum("iAB,jCE,AEp,BCq->ijpq", D, D, C, C)
        # S(sigma^a_b) = sigma^{theta b}_a
        s_gen = f.einsum("kj,kip->ijp", theta, C)
        # S(sigma^a_b) = sum sigma^{e1}_{[a, b, e2]}
        s_gen_alt = f.einsum("su,ijuk,skp->ijp", es, X, C)
    eps_gen = f.einsum("i,j->ij", eps, eps)

    proto = TranslationAlgebra(side, h, basis, None, coords, None, relations, sections, theta)
    comul = proto.descend(delta_gen.reshape(n * n, r, r), "coproduct")
    counit = proto.descend(eps_gen.reshape(n * n), "counit")
    antipode = proto.descend(s_gen.reshape(n * n, r), "antipode").T
    antipode_alt = proto.descend(s_gen_alt.reshape(n * n, r), "antipode (counit-one element formula)").T
    if not np.array_equal(antipode, antipode_alt):
        rep = compare("antipode formulas agree", antipode.T, antipode_alt.T, 1)
        raise VerificationError(f"the two antipode formulas disagree: {rep}", rep)

    hopf = HopfAlgebraData(Coalgebra(f, comul, counit), mult, unit, antipode)
    check_bialgebra(hopf).raise_if_failed(f"Tn^{side[0]} bialgebra")
    check_antipode(hopf).raise_if_failed(f"Tn^{side[0]} antipode")
    action = np.ascontiguousarray(endos.transpose(2, 0, 1))  # [k, p, l] = E_p[l, k]
    return TranslationAlgebra(side, h, basis, hopf, coords, action, relations, sections, theta)


def build_right_translations(h: HopfHeap, e=None) -> TranslationAlgebra:
    return build_translations(h, RIGHT, e)


def build_left_translations(h: HopfHeap, e=None) -> TranslationAlgebra:
    return build_translations(h, LEFT, e)


def grouplike_iso(h: HopfHeap, x, trans: TranslationAlgebra | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Verified isomorphism ``H_x(C) -> Tn C`` and its inverse.

    Right side: ``a |-> tau_x^a`` with inverse ``tau_a^b |-> [x, a, b]``.
    Left side: ``a |-> sigma^a_x`` with inverse ``sigma^a_b |-> [a, b, x]``.
    """
    f, X = h.field, h.chi
    x = f.array(x)
    if not is_grouplike(h.coalgebra, x):
        raise ValueError("grouplike_iso needs a grouplike element")
    trans = build_right_translations(h) if trans is None else trans
    n = h.dim
    C = trans.generator_coords.reshape(n, n, trans.dim)
    if trans.side == RIGHT:
        fwd = f.einsum("i,iap->pa", x, C)
        inv_gen = f.einsum("s,sijl->ijl", x, X)
    else:
        fwd = f.einsum("j,ajp->pa", x, C)
        inv_gen = f.einsum("s,ijsl->ijl", x, X)
    inv = trans.descend(inv_gen.reshape(n * n, n), "inverse of the grouplike isomorphism").T
    hx = hopf_at_grouplike(h, x)
    first_failure([
        lambda: check_hopf_morphism(fwd, hx, trans.hopf),
        lambda: check_hopf_morphism(inv, trans.hopf, hx),
        lambda: compare("inverse . forward = id", f.normalize(inv @ fwd), f.eye(n), 1),
        lambda: compare("forward . inverse = id", f.normalize(fwd @ inv), f.eye(trans.dim), 1),
    ]).raise_if_failed("grouplike isomorphism")
    return fwd, inv


def induced_morphism(m: HeapMorphism, src: TranslationAlgebra, tgt: TranslationAlgebra) -> np.ndarray:
    """Matrix of ``tau_a^b |-> tau_{f a}^{f b}`` (resp. ``sigma``) on abstract bases."""
    if src.side != tgt.side:
        raise ValueError("translation algebras must be on the same side")
    f, F = m.source.field, m.matrix
    ns, nt = m.source.dim, m.target.dim
    Ct = tgt.generator_coords.reshape(nt, nt, tgt.dim)
    gen = f.einsum("ki,lj,klp->ijp", F, F, Ct).reshape(ns * ns, tgt.dim)
    mat = src.descend(gen, "induced morphism").T
    check_hopf_morphism(mat, src.hopf, tgt.hopf).raise_if_failed("induced morphism")
    return mat


@dataclass(frozen=True)
class SwapReport:
    is_abelian_heap: bool
    swap_is_antialgebra_map: bool
    abelian_witness: tuple[int, ...] | None = None
    swap_detail: str = ""


def abelian_swap_check(
    h: HopfHeap,
    left: TranslationAlgebra | None = None,
    right: TranslationAlgebra | None = None,
) -> SwapReport:
    """Is the heap abelian, and does ``sigma^a_b |-> tau_b^a`` give an algebra map
    ``(Tn^l C)^op -> Tn^r C``?"""
    f, n = h.field, h.dim
    left = build_left_translations(h) if left is None else left
    right = build_right_translations(h) if right is None else right
    ab = compare("abelian", h.chi, h.chi.transpose(2, 1, 0, 3), 3)
    Cr = right.generator_coords.reshape(n, n, right.dim)
    gen = np.ascontiguousarray(Cr.transpose(1, 0, 2)).reshape(n * n, right.dim)
    try:
        W = left.descend(gen, "swap map").T
    except VerificationError as exc:
        return SwapReport(ab.ok, False, ab.witness, str(exc))
    # W(y x) = W(x) W(y): products in Tn^l on the left, Tn^r on the right
    rep = first_failure([
        lambda: compare(
            "anti-multiplicativity",
            f.einsum("qps,ts->pqt", left.hopf.mult, W),
            f.einsum("ap,bq,abt->pqt", W, W, right.hopf.mult),
            2,
        ),
        lambda: compare("unitality", f.normalize(W @ left.hopf.unit), right.hopf.unit, 0),
    ])
    return SwapReport(ab.ok, rep.ok, ab.witness, str(rep))


def check_translation_identities(h: HopfHeap, theta=None) -> Report:
    """The seven translation identities as endomorphism equations on basis inputs.

    Without a Grunspan map only the first four are meaningful; ``theta``
    defaults to :func:`grunspan_map`.
    """
    f, X, D, eps, n = h.field, h.chi, h.coalgebra.comul, h.coalgebra.counit, h.dim
    th = grunspan_map(h) if theta is None else f.array(theta)
    eye = f.eye(n)
    return first_failure([
        # Delta(tau_a^b(c)) = sum tau_{a2}^{b1}(c1) (x) tau_{a1}^{b2}(c2)
        lambda: compare(
            "translation coproduct",
            f.einsum("cabl,lpq->abcpq", X, D),
            f.einsum("aAB,bCE,cFG,FBCp,GAEq->abcpq", D, D, D, X, X),
            3,
        ),
        # sum tau_{a1}^{[a2, b, c]} = eps(a) tau_b^c
        lambda: compare(
            "translation absorbs a bracket",
            f.einsum("axy,ybcl,dxlz->abcdz", D, X, X),
            f.einsum("a,dbcz->abcdz", eps, X),
            4,
        ),
        # sum tau_{a1}^{a2} = eps(a) id
        lambda: compare("translation of a coproduct", f.einsum("axy,dxyz->adz", D, X), f.einsum("a,dz->adz", eps, eye), 2),
        # tau_c^d . tau_a^b = tau_a^{[b, c, d]}
        lambda: compare(
            "composition of translations",
            f.einsum("xabl,lcdz->abcdxz", X, X),
            f.einsum("bcdl,xalz->abcdxz", X, X),
            5,
        ),
        # sum tau_{a2}^{[theta(a1), b, c]} = eps(a) tau_b^c
        lambda: compare(
            "translation absorbs a bracket via theta",
            f.einsum("axy,kx,kbcl,dylz->abcdz", D, th, X, X),
            f.einsum("a,dbcz->abcdz", eps, X),
            4,
        ),
        # sum tau_{a2}^{theta(a1)} = eps(a) id
        lambda: compare(
            "translation of a twisted coproduct",
            f.einsum("axy,kx,dykz->adz", D, th, X),
            f.einsum("a,dz->adz", eps, eye),
            2,
        ),
        # tau_c^d . tau_a^{theta(b)} = tau_{[c, b, a]}^d
        lambda: compare(
            "composition of translations via theta",
            f.einsum("kb,xakl,lcdz->abcdxz", th, X, X),
            f.einsum("cbal,xldz->abcdxz", X, X),
            5,
        ),
    ])
