import numpy as np
import pytest

from hopfheap.catalog import catalog_morphisms, gen_group_algebra, gen_sweedler, perturb
from hopfheap.coalgebra import counit_one_elements, trivial_coalgebra
from hopfheap.heap import (
    HeapMorphism,
    HopfHeap,
    check_grunspan,
    check_heap_morphism,
    check_hopf_at_grouplike,
    check_hopf_heap,
    grunspan_by_element,
    grunspan_formula_agreement,
    grunspan_map,
    heap_from_hopf,
    hopf_at_grouplike,
)
from hopfheap.hopf import HopfAlgebraData, solve_antipode, with_solved_antipode
from hopfheap.scalars import GF, QQ

import catalog_cache


def sweedler_heap(f=QQ):
    return heap_from_hopf(with_solved_antipode(gen_sweedler(f)))


def trivial_heap(f=QQ):
    return HopfHeap(trivial_coalgebra(f), [[[[1]]]])


def test_trivial_heap():
    h = trivial_heap()
    assert check_hopf_heap(h)
    assert grunspan_map(h).tolist() == [[1]]


def test_c3_heap_and_negated_entry():
    h = heap_from_hopf(gen_group_algebra("C3"))
    assert check_hopf_heap(h)
    bad = perturb(h, "chi", (1, 1, 1, 1), -1)
    rep = check_hopf_heap(bad)
    assert not rep.ok and rep.axiom in ("chi is counital", "chi is comultiplicative", "left Mal'cev law", "right Mal'cev law")
    assert rep.witness == (1, 1, 1)


def test_heap_from_hopf_values():
    h = heap_from_hopf(gen_group_algebra("C2"))
    assert h.bracket(*([QQ.basis_vector(2, 1)] * 3)).tolist() == [0, 1]
    sw = sweedler_heap()
    one, g = QQ.basis_vector(4, 0), QQ.basis_vector(4, 1)
    assert sw.bracket(one, g, one).tolist() == [0, 1, 0, 0]
    triv = HopfAlgebraData(trivial_coalgebra(QQ), [[[1]]], [1], [[1]])
    assert heap_from_hopf(triv) == trivial_heap()


def test_grunspan_examples():
    for name in ("C2", "C4", "S3"):
        h = heap_from_hopf(gen_group_algebra(name))
        assert np.array_equal(grunspan_map(h), QQ.eye(h.dim))
    sw = sweedler_heap()
    theta = grunspan_map(sw)
    S = solve_antipode(gen_sweedler(QQ))
    assert np.array_equal(theta, QQ.normalize(S @ S))
    assert theta[:, 2].tolist() == [0, 0, -1, 0]


def test_check_grunspan_examples():
    c2 = heap_from_hopf(gen_group_algebra("C2"))
    assert check_grunspan(c2, QQ.eye(2))
    sw = sweedler_heap()
    S = solve_antipode(gen_sweedler(QQ))
    assert check_grunspan(sw, QQ.normalize(S @ S))
    rep = check_grunspan(sw, QQ.eye(4))
    assert not rep.ok and rep.axiom == "Grunspan identity" and rep.witness is not None


def test_hopf_at_grouplike_round_trip():
    h = gen_group_algebra("C3")
    heap = heap_from_hopf(h)
    back = hopf_at_grouplike(heap, h.unit)
    assert back == h
    at_g = hopf_at_grouplike(heap, QQ.basis_vector(3, 1))
    assert check_hopf_at_grouplike(heap, QQ.basis_vector(3, 1))
    assert at_g.unit.tolist() == [0, 1, 0]
    triv = hopf_at_grouplike(trivial_heap(), [1])
    assert triv.mult.tolist() == [[[1]]] and triv.antipode.tolist() == [[1]]


@pytest.mark.parametrize("key", catalog_cache.HOPF_KEYS)
def test_heap_then_grouplike_recovers_hopf(key):
    h = catalog_cache.hopfs()[key]
    assert hopf_at_grouplike(heap_from_hopf(h), h.unit) == h


def test_heap_morphisms():
    h = heap_from_hopf(gen_group_algebra("C3"))
    assert check_heap_morphism(HeapMorphism(h, h, QQ.eye(3)))
    m = catalog_morphisms(QQ)["C4->C2"]
    assert check_heap_morphism(m)
    # on C3 exchanging 1 and g is x |-> g x^-1, an affine map, so it is a morphism
    swap3 = QQ.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert check_heap_morphism(HeapMorphism(h, h, swap3))
    c4 = heap_from_hopf(gen_group_algebra("C4"))
    swap4 = QQ.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    rep = check_heap_morphism(HeapMorphism(c4, c4, swap4))
    assert not rep.ok and rep.axiom == "bracket preservation" and rep.witness is not None


@pytest.mark.parametrize("key", catalog_cache.HEAP_KEYS)
def test_catalog_heap_grunspan(key):
    h = catalog_cache.heap(key)
    assert check_hopf_heap(h)
    theta = grunspan_map(h)
    assert check_grunspan(h, theta)
    assert grunspan_formula_agreement(h)
    for e in counit_one_elements(h.coalgebra):
        assert np.array_equal(grunspan_by_element(h, e), theta)


def test_grunspan_element_requires_counit_one():
    with pytest.raises(ValueError):
        grunspan_by_element(sweedler_heap(), [0, 0, 1, 0])
