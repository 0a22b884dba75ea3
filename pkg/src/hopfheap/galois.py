"""Hopf-Galois co-objects and the dictionary with Hopf heaps.

A co-object is a coalgebra ``C`` with a right action of a Hopf algebra ``H``.
``action[i, j, k]`` is the coefficient of ``e_k`` in ``e_i . h_j``. The
canonical map ``c (x) h |-> sum c1 (x) c2 . h`` is stored as an
``n^2 x nm`` matrix whose column ``i * m + j`` is the image of ``e_i (x) h_j``.
The cotranslation table ``T[a, b, j]`` is the ``h_j`` coordinate of
``tau(e_a (x) e_b)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .coalgebra import (
    Coalgebra,
    _frozen,
    canonical_unit_element,
    check_coalgebra,
    check_linear_coalgebra_map,
    co_opposite,
    is_invertible,
    tensor_coalgebra,
)
from .heap import HeapMorphism, HopfHeap, check_grunspan, check_hopf_heap, grunspan_map
from .hopf import (
    HopfAlgebraData,
    check_antipode,
    check_bialgebra,
    check_hopf_morphism,
    solve_antipode,
)
from .linalg import QuotientData, inverse, kernel_of, quotient, rank, span, subspace_equals
from .report import Report, ShapeError, VerificationError, compare, first_failure
from .translations import TranslationAlgebra, build_left_translations, build_right_translations, induced_morphism

__all__ = [
    "GaloisCoObject",
    "CotranslationTable",
    "EhresmannHopf",
    "check_galois",
    "cotranslation",
    "check_cotranslation_props",
    "antipode_from_galois",
    "ehresmann_hopf",
    "ehresmann_iso_left_translations",
    "heap_from_galois",
    "galois_from_heap",
    "galois_from_hopf",
    "phi_iso",
    "check_galois_morphism",
    "naturality_check",
    "roundtrip_check",
]


@dataclass(frozen=True, eq=False)
class GaloisCoObject:
    coalgebra: Coalgebra
    hopf: HopfAlgebraData
    action: np.ndarray

    def __post_init__(self):
        if self.coalgebra.field != self.hopf.field:
            raise ValueError(f"coalgebra over {self.coalgebra.field}, Hopf algebra over {self.hopf.field}")
        n, m = self.coalgebra.dim, self.hopf.dim
        object.__setattr__(self, "action", _frozen(self.field, self.action, (n, m, n), "action"))

    @property
    def field(self):
        return self.coalgebra.field

    @property
    def dim(self) -> int:
        return self.coalgebra.dim

    def __repr__(self):
        return f"GaloisCoObject(dim C={self.dim}, dim H={self.hopf.dim}, field={self.field})"

    def act(self, c, h) -> np.ndarray:
        return self.field.einsum("i,j,ijk->k", c, h, self.action)

    @cached_property
    def can(self) -> np.ndarray:
        n, m = self.dim, self.hopf.dim
        canT = self.field.einsum("ika,ajl->ijkl", self.coalgebra.comul, self.action)
        return np.ascontiguousarray(canT.reshape(n * m, n * n).T)

    @cached_property
    def can_inverse(self) -> np.ndarray | None:
        if self.hopf.dim != self.dim:
            return None
        return inverse(self.field, self.can)


@dataclass(frozen=True, eq=False)
class CotranslationTable:
    """``table[a, b, j]`` is the ``h_j`` coordinate of ``tau(e_a (x) e_b)``."""

    table: np.ndarray


@dataclass(frozen=True, eq=False)
class EhresmannHopf:
    """``E(C, H) = (C (x) C) / I`` together with the data used to build it.

    ``generators[a, b, c]`` is the coideal generator indexed by ``(a, b, c)``
    as a vector of ``C (x) C`` (flat index ``k * n + l``).
    """

    source: GaloisCoObject
    generators: np.ndarray
    quotient: QuotientData
    hopf: HopfAlgebraData


def check_galois(g: GaloisCoObject) -> Report:
    """Module, module-coalgebra, and the two Galois conditions."""
    f, n, m = g.field, g.dim, g.hopf.dim
    A, D, eps = g.action, g.coalgebra.comul, g.coalgebra.counit
    H = g.hopf
    if A.shape != (n, m, n):
        raise ShapeError(f"action of shape {A.shape}, expected {(n, m, n)}")

    def condition_a():
        diffs = A - f.einsum("j,ik->ijk", H.counit, f.eye(n))
        spanned = span(f, f.normalize(diffs).reshape(n * m, n), n)
        ker = kernel_of(f, eps.reshape(1, n))
        if subspace_equals(spanned, ker):
            return Report.passed()
        return Report(
            False,
            "condition (a): action span equals ker eps",
            None,
            f"span has dimension {spanned.dim}, ker eps has dimension {ker.dim}",
        )

    def condition_b():
        if m != n:
            return Report(False, "condition (b): canonical map bijective", None,
                          f"dim H = {m} differs from dim C = {n}; the canonical map cannot be invertible")
        r = rank(f, g.can)
        if r != n * n:
            return Report(False, "condition (b): canonical map bijective", None, f"rank {r} < {n * n}")
        return Report.passed()

    return first_failure([
        lambda: check_coalgebra(g.coalgebra),
        lambda: check_bialgebra(H),
        lambda: compare("module unit", f.einsum("j,ijk->ik", H.unit, A), f.eye(n), 1),
        lambda: compare(
            "module associativity",
            f.einsum("ijk,kJz->ijJz", A, A),
            f.einsum("jJs,isz->ijJz", H.mult, A),
            3,
        ),
        lambda: compare(
            "coproduct is a module map",
            f.einsum("ijk,kpq->ijpq", A, D),
            f.einsum("ixy,juv,xup,yvq->ijpq", D, H.comul, A, A),
            2,
        ),
        lambda: compare(
            "counit is a module map",
            f.einsum("ijk,k->ij", A, eps),
            f.einsum("i,j->ij", eps, H.counit),
            2,
        ),
        condition_a,
        condition_b,
    ])


def cotranslation(g: GaloisCoObject) -> CotranslationTable:
    """``tau = (eps (x) id) . can^{-1}``."""
    inv = g.can_inverse
    if inv is None:
        raise VerificationError("canonical map is not invertible")
    f, n, m = g.field, g.dim, g.hopf.dim
    T = f.einsum("i,ijab->abj", g.coalgebra.counit, inv.reshape(n, m, n, n))
    return CotranslationTable(T)


def check_cotranslation_props(g: GaloisCoObject, t: CotranslationTable) -> Report:
    """Exact checks of the cotranslation identities on all basis tuples.

    Besides the six listed identities (counit, right linearity, inverting the
    action, comultiplicativity, acted element, twist) the coproduct-leg
    identity ``sum tau(a1 (x) a2) = eps(a) 1`` is checked as well.
    """
    f, n = g.field, g.dim
    T, A, D, eps = t.table, g.action, g.coalgebra.comul, g.coalgebra.counit
    H = g.hopf
    S = H.antipode if H.antipode is not None else antipode_from_galois(g, t)
    D3 = g.coalgebra.comul3
    return first_failure([
        lambda: compare("cotranslation counit", f.einsum("abj,j->ab", T, H.counit), f.einsum("a,b->ab", eps, eps), 2),
        # sum tau(a1 (x) a2) = eps(a) 1
        lambda: compare("cotranslation of a coproduct", f.einsum("axy,xyj->aj", D, T), f.einsum("a,j->aj", eps, H.unit), 1),
        # tau(a (x) b.h) = tau(a (x) b) h
        lambda: compare(
            "cotranslation is right linear",
            f.einsum("bhk,akj->abhj", A, T),
            f.einsum("abs,shj->abhj", T, H.mult),
            3,
        ),
        # sum a1 . tau(a2 (x) b) = eps(a) b
        lambda: compare(
            "cotranslation inverts the action",
            f.einsum("axy,ybj,xjz->abz", D, T, A),
            f.einsum("a,bz->abz", eps, f.eye(n)),
            2,
        ),
        # Delta tau(a (x) b) = sum tau(a2 (x) b1) (x) tau(a1 (x) b2)
        lambda: compare(
            "cotranslation is comultiplicative",
            f.einsum("abj,jpq->abpq", T, H.comul),
            f.einsum("aAB,bCE,BCp,AEq->abpq", D, D, T, T),
            2,
        ),
        # tau(a . tau(b (x) c) (x) d) = S tau(b (x) c) tau(a (x) d)
        lambda: compare(
            "cotranslation of an acted element",
            f.einsum("bcj,ajk,kdz->abcdz", T, A, T),
            f.einsum("bcj,sj,adt,stz->abcdz", T, S, T, H.mult),
            4,
        ),
        # sum tau(b (x) c1) S tau(c3 (x) c2) = S tau(c (x) b)
        lambda: compare(
            "cotranslation twist",
            f.einsum("cxyw,bxj,wyk,sk,jsz->bcz", D3, T, T, S, H.mult),
            f.einsum("cbk,zk->bcz", T, S),
            2,
        ),
    ])


def _unit_element(g: GaloisCoObject, e):
    f = g.field
    e = canonical_unit_element(g.coalgebra) if e is None else f.array(e)
    if f.normalize(g.coalgebra.counit @ e) != 1:
        raise ValueError("the auxiliary element must have counit 1")
    return e


def antipode_from_galois(g: GaloisCoObject, t: CotranslationTable | None = None, e=None) -> np.ndarray:
    """``S(h) = sum tau(e1 . h (x) e2)``, verified and compared with the solver."""
    f = g.field
    t = cotranslation(g) if t is None else t
    e = _unit_element(g, e)
    S = f.einsum("t,txy,xhk,kyz->zh", e, g.coalgebra.comul, g.action, t.table)
    check_antipode(g.hopf, S).raise_if_failed("antipode from the cotranslation map")
    solved = solve_antipode(g.hopf)
    if solved is None or not np.array_equal(solved, S):
        raise VerificationError("antipode from the cotranslation map differs from the solved antipode")
    return S


def _ehresmann_product(T, A, f, x, y) -> np.ndarray:
    # (a (x) b)(c (x) d) = a . tau(b (x) c) (x) d on stacks of representatives
    P = f.einsum("bcj,ajk->abck", T, A)
    return f.einsum("uab,vcl,abck->uvkl", x, y, P)


def ehresmann_hopf(g: GaloisCoObject, t: CotranslationTable | None = None, e=None) -> EhresmannHopf:
    """Build ``E(C, H)`` as a quotient of ``C (x) C`` by the coideal ``I``.

    Checks that ``I`` is a coideal and that product and antipode do not depend
    on representatives (every coideal basis vector against every basis
    vector), then verifies the bialgebra and antipode axioms of the quotient.
    """
    f, n = g.field, g.dim
    t = cotranslation(g) if t is None else t
    T, A, D, eps = t.table, g.action, g.coalgebra.comul, g.coalgebra.counit
    e = _unit_element(g, e)
    nn = n * n

    # a (x) b eps(c) - sum a . tau(b (x) c1) (x) c2
    gens = f.normalize(
        f.einsum("ak,by,c->abcky", f.eye(n), f.eye(n), eps) - f.einsum("cxy,bxj,ajk->abcky", D, T, A)
    )
    ideal = span(f, gens.reshape(n ** 3, nn), nn)
    q = quotient(ideal)
    # the class of a (x) b maps to sigma^a_b, whose coproduct pairs a1 with b2,
    # so the quotient coalgebra is C (x) C^co; I is checked in both orders
    W = tensor_coalgebra(g.coalgebra, co_opposite(g.coalgebra))
    W_co = tensor_coalgebra(co_opposite(g.coalgebra), g.coalgebra)
    proj, sec = q.projection, q.section
    Ivec = ideal.vectors

    def coideal_check(coal, name):
        return first_failure([
            lambda: compare(f"coideal in {name}: counit vanishes", f.normalize(Ivec @ coal.counit), f.zeros(ideal.dim), 1),
            lambda: compare(
                f"coideal in {name}: coproduct",
                f.einsum("ru,uvw,pv,qw->rpq", Ivec, coal.comul, proj, proj),
                f.zeros(ideal.dim, q.dim, q.dim),
                1,
            ),
        ])

    coideal = first_failure([lambda: coideal_check(W, "C (x) C^co"), lambda: coideal_check(W_co, "C^co (x) C")])
    coideal.raise_if_failed("Ehresmann coideal")

    # S(a (x) b) = sum e1 (x) a . tau(b (x) e2)
    e_split = f.einsum("t,txy->xy", e, D)
    Sw = f.einsum("xs,bsj,ajk->xkab", e_split, T, A).reshape(nn, nn)

    basis = f.eye(nn).reshape(nn, n, n)
    Iv = Ivec.reshape(-1, n, n)
    zeros_IW = f.zeros(ideal.dim, nn, q.dim)
    indep = first_failure([
        lambda: compare(
            "product independent of the left representative",
            f.einsum("uvkl,wkl->uvw", _ehresmann_product(T, A, f, Iv, basis), proj.reshape(q.dim, n, n)),
            zeros_IW,
            2,
        ),
        lambda: compare(
            "product independent of the right representative",
            f.einsum("vukl,wkl->uvw", _ehresmann_product(T, A, f, basis, Iv), proj.reshape(q.dim, n, n)),
            zeros_IW,
            2,
        ),
        lambda: compare(
            "antipode independent of the representative",
            f.normalize(proj @ Sw @ Ivec.T).T,
            f.zeros(ideal.dim, q.dim),
            1,
        ),
    ])
    indep.raise_if_failed("Ehresmann structure")

    reps = np.ascontiguousarray(sec.T).reshape(q.dim, n, n)
    mult = f.einsum("uvkl,wkl->uvw", _ehresmann_product(T, A, f, reps, reps), proj.reshape(q.dim, n, n))
    comul = f.einsum("pu,uvw,sv,tw->pst", sec.T, W.comul, proj, proj)
    counit = f.normalize(W.counit @ sec)
    unit = f.normalize(proj @ e_split.reshape(nn))
    antipode = f.normalize(proj @ Sw @ sec)
    hopf = HopfAlgebraData(Coalgebra(f, comul, counit), mult, unit, antipode)
    check_bialgebra(hopf).raise_if_failed("Ehresmann bialgebra")
    check_antipode(hopf).raise_if_failed("Ehresmann antipode")
    return EhresmannHopf(g, gens, q, hopf)


def ehresmann_iso_left_translations(E: EhresmannHopf, left: TranslationAlgebra) -> np.ndarray:
    """Verified Hopf isomorphism ``E(C, Tn^r C) -> Tn^l C``, class of ``a (x) b`` to ``sigma^a_b``."""
    f = E.hopf.field
    n = left.heap.dim
    if left.side != "left":
        raise ValueError("expected the left translation algebra")
    phi_w = np.ascontiguousarray(left.generator_coords.T)  # dim Tn^l x n^2
    killed = compare(
        "coideal maps to zero",
        f.normalize(phi_w @ E.quotient.subspace.vectors.T).T,
        f.zeros(E.quotient.subspace.dim, left.dim),
        1,
    )
    killed.raise_if_failed("Ehresmann isomorphism well defined")
    phi = f.normalize(phi_w @ E.quotient.section)
    if phi.shape[0] != phi.shape[1] or not is_invertible(f, phi):
        raise VerificationError(f"map E(C, H) -> Tn^l C of shape {phi.shape} is not invertible")
    check_hopf_morphism(phi, E.hopf, left.hopf).raise_if_failed("Ehresmann isomorphism")
    return phi


def heap_from_galois(g: GaloisCoObject, t: CotranslationTable | None = None) -> tuple[HopfHeap, np.ndarray]:
    """Heap ``[a, b, c] = a . tau(b (x) c)`` with Grunspan map ``sum c1 . S tau(c3 (x) c2)``."""
    f = g.field
    t = cotranslation(g) if t is None else t
    S = g.hopf.antipode if g.hopf.antipode is not None else antipode_from_galois(g, t)
    chi = f.einsum("bcj,ajl->abcl", t.table, g.action)
    heap = HopfHeap(g.coalgebra, chi)
    check_hopf_heap(heap).raise_if_failed("heap from a Galois co-object")
    theta = f.einsum("cxyw,wyj,sj,xsz->zc", g.coalgebra.comul3, t.table, S, g.action)
    check_grunspan(heap, theta).raise_if_failed("Grunspan map from a Galois co-object")
    if not np.array_equal(theta, grunspan_map(heap)):
        rep = compare("Grunspan maps agree", theta.T, grunspan_map(heap).T, 1)
        raise VerificationError(f"Grunspan map from the co-object differs from the heap formula: {rep}", rep)
    return heap, theta


def galois_from_heap(h: HopfHeap, trans: TranslationAlgebra | None = None) -> GaloisCoObject:
    """``(C, Tn^r C)`` with the evaluation action, verified.

    The inverse canonical map is compared with ``a (x) b |-> sum a1 (x) tau_{a2}^b``.
    """
    f, n = h.field, h.dim
    trans = build_right_translations(h) if trans is None else trans
    g = GaloisCoObject(h.coalgebra, trans.hopf, trans.action)
    check_galois(g).raise_if_failed("Galois co-object of a heap")
    C = trans.generator_coords.reshape(n, n, trans.dim)
    closed = f.einsum("aiy,ybp->ipab", h.coalgebra.comul, C).reshape(n * trans.dim, n * n)
    rep = compare("inverse canonical map", g.can_inverse, closed, 1)
    rep.raise_if_failed("inverse canonical map closed formula")
    return g


def galois_from_hopf(h: HopfAlgebraData) -> GaloisCoObject:
    """A Hopf algebra as a co-object over itself by right multiplication."""
    return GaloisCoObject(h.coalgebra, h, h.mult)


def phi_iso(g: GaloisCoObject, t: CotranslationTable | None = None, trans: TranslationAlgebra | None = None,
            e=None) -> np.ndarray:
    """Verified Hopf isomorphism ``Tn^r C -> H``, ``tau_a^b |-> tau(a (x) b)``.

    ``C`` carries the heap of the co-object. The inverse ``h |-> tau_{e1}^{e2 . h}``
    is built too and both composites are checked.
    """
    f, n, m = g.field, g.dim, g.hopf.dim
    t = cotranslation(g) if t is None else t
    if trans is None:
        heap, _ = heap_from_galois(g, t)
        trans = build_right_translations(heap)
    phi = trans.descend(t.table.reshape(n * n, m), "phi").T
    e = _unit_element(g, e)
    C = trans.generator_coords.reshape(n, n, trans.dim)
    phi_inv = f.einsum("t,txy,yhk,xkp->ph", e, g.coalgebra.comul, g.action, C)
    first_failure([
        lambda: check_hopf_morphism(phi, trans.hopf, g.hopf),
        lambda: compare("phi inverse . phi = id", f.normalize(phi_inv @ phi), f.eye(trans.dim), 1),
        lambda: compare("phi . phi inverse = id", f.normalize(phi @ phi_inv), f.eye(m), 1),
        lambda: compare(
            "module compatibility",
            trans.action,
            f.einsum("jp,ajz->apz", phi, g.action),
            2,
        ),
    ]).raise_if_failed("phi isomorphism")
    return phi


def check_galois_morphism(fc, gh, src: GaloisCoObject, tgt: GaloisCoObject) -> Report:
    """Coalgebra map, Hopf map, ``f(c . h) = f(c) . g(h)``, and ``tau_D (f (x) f) = g tau_C``."""
    f = src.field
    fc, gh = f.array(fc), f.array(gh)
    if fc.shape != (tgt.dim, src.dim):
        raise ShapeError(f"coalgebra map of shape {fc.shape}, expected {(tgt.dim, src.dim)}")
    if gh.shape != (tgt.hopf.dim, src.hopf.dim):
        raise ShapeError(f"Hopf map of shape {gh.shape}, expected {(tgt.hopf.dim, src.hopf.dim)}")

    def cotranslation_compat():
        if src.can_inverse is None or tgt.can_inverse is None:
            return Report(False, "cotranslation compatibility", None, "a canonical map is not invertible")
        Ts, Tt = cotranslation(src).table, cotranslation(tgt).table
        return compare(
            "cotranslation compatibility",
            f.einsum("ai,bj,abz->ijz", fc, fc, Tt),
            f.einsum("zs,ijs->ijz", gh, Ts),
            2,
        )

    return first_failure([
        lambda: check_linear_coalgebra_map(fc, src.coalgebra, tgt.coalgebra),
        lambda: check_hopf_morphism(gh, src.hopf, tgt.hopf),
        lambda: compare(
            "action compatibility",
            f.einsum("chk,tk->cht", src.action, fc),
            f.einsum("ac,jh,ajt->cht", fc, gh, tgt.action),
            2,
        ),
        cotranslation_compat,
    ])


def naturality_check(field, gh, phi_src, phi_tgt, tn_f) -> Report:
    """``g . phi_(C,H) = phi_(D,K) . Tn^r f``."""
    lhs = field.normalize(field.array(gh) @ field.array(phi_src))
    rhs = field.normalize(field.array(phi_tgt) @ field.array(tn_f))
    if lhs.shape != rhs.shape:
        return Report(False, "naturality of phi", None, f"shapes {lhs.shape} and {rhs.shape}")
    return compare("naturality of phi", lhs.T, rhs.T, 1)


def _bimodule_check(left: TranslationAlgebra, right: TranslationAlgebra) -> Report:
    f = left.field
    # (sigma . x) . tau = sigma . (x . tau)
    return compare(
        "bimodule compatibility",
        f.einsum("xpy,yqz->pxqz", left.action, right.action),
        f.einsum("xqy,ypz->pxqz", right.action, left.action),
        3,
    )


def roundtrip_check(h: HopfHeap, morphisms: tuple[HeapMorphism, ...] = ()) -> Report:
    """One instance of the heap/co-object equivalence.

    Checks that the heap of ``galois_from_heap(h)`` is ``h`` itself, that
    ``phi_iso`` verifies, that left and right translations commute as actions,
    and for each heap morphism with source ``h`` that the induced pair is a
    Galois morphism for which ``phi`` is natural.
    """
    try:
        right = build_right_translations(h)
        left = build_left_translations(h)
        g = galois_from_heap(h, right)
        t = cotranslation(g)
        back, _ = heap_from_galois(g, t)
    except VerificationError as exc:
        return exc.report or Report(False, "construction", None, str(exc))
    rep = compare("heap of the Galois co-object", back.chi, h.chi, 3)
    if not rep:
        return rep
    try:
        phi = phi_iso(g, t, build_right_translations(back))
    except VerificationError as exc:
        return exc.report or Report(False, "phi isomorphism", None, str(exc))
    rep = _bimodule_check(left, right)
    if not rep:
        return rep
    for k, m in enumerate(morphisms):
        if m.source != h:
            raise ValueError(f"morphism #{k} does not start at the given heap")
        try:
            tgt_right = build_right_translations(m.target)
            tgt = galois_from_heap(m.target, tgt_right)
            tn_f = induced_morphism(m, right, tgt_right)
            phi_tgt = phi_iso(tgt, trans=build_right_translations(heap_from_galois(tgt)[0]))
        except VerificationError as exc:
            return exc.report or Report(False, f"morphism #{k}", None, str(exc))
        rep = first_failure([
            lambda: check_galois_morphism(m.matrix, tn_f, g, tgt),
            lambda: naturality_check(h.field, tn_f, phi, phi_tgt, tn_f),
        ])
        if not rep:
            return Report(False, rep.axiom, rep.witness, f"morphism #{k}: {rep.detail}")
    return Report.passed()
