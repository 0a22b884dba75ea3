"""Example generators and a set-theoretic oracle.

The oracle half (group tables, heap tables, translation groups) works purely
with integer function tables and never touches field arithmetic, so it can
serve as ground truth for the linear constructions.
"""

from __future__ import annotations

import dataclasses
import itertools
from dataclasses import dataclass

import numpy as np

from .coalgebra import Coalgebra, grouplike_coalgebra
from .heap import HeapMorphism, HopfHeap, check_heap_morphism, heap_from_hopf
from .hopf import HopfAlgebraData, with_solved_antipode
from .linalg import pair_index
from .report import Report, VerificationError, compare, first_failure
from .scalars import GF, QQ, FieldSpec

__all__ = [
    "GROUP_NAMES",
    "GroupTable",
    "FiniteHeapTable",
    "group_table",
    "gen_group_algebra",
    "gen_sweedler",
    "gen_heap_from_group",
    "linearize_heap",
    "set_translation_group",
    "check_group_table",
    "check_heap_table",
    "perturb",
    "catalog_heaps",
    "catalog_hopf_algebras",
    "group_heap_morphism",
    "catalog_morphisms",
    "translation_group_matching",
    "check_oracle_bridge",
]

GROUP_NAMES = ("C1", "C2", "C3", "C4", "C5", "C6", "V4", "S3")


@dataclass(frozen=True)
class GroupTable:
    """``mul[i][j]`` is the index of ``g_i g_j``."""

    mul: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    @property
    def size(self) -> int:
        return len(self.mul)


@dataclass(frozen=True)
class FiniteHeapTable:
    """``table[x][y][z]`` is the index of ``[x, y, z]``."""

    table: tuple[tuple[tuple[int, ...], ...], ...]
    labels: tuple[str, ...] | None = None

    @property
    def size(self) -> int:
        return len(self.table)

    def __call__(self, x: int, y: int, z: int) -> int:
        return self.table[x][y][z]


def _from_mul(mul, labels=None) -> GroupTable:
    n = len(mul)
    identity = next(e for e in range(n) if all(mul[e][x] == x == mul[x][e] for x in range(n)))
    inverse = tuple(next(y for y in range(n) if mul[x][y] == identity) for x in range(n))
    return GroupTable(tuple(tuple(r) for r in mul), identity, inverse, labels)


def group_table(name: str) -> GroupTable:
    if name not in GROUP_NAMES:
        raise ValueError(f"unknown group {name!r}; choose from {', '.join(GROUP_NAMES)}")
    if name == "V4":
        return _from_mul([[i ^ j for j in range(4)] for i in range(4)], ("1", "a", "b", "ab"))
    if name == "S3":
        perms = list(itertools.permutations(range(3)))
        index = {p: i for i, p in enumerate(perms)}
        # (p q)(x) = p(q(x))
        mul = [[index[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]
        return _from_mul(mul, tuple("".join(map(str, p)) for p in perms))
    n = int(name[1:])
    labels = tuple("1" if k == 0 else ("g" if k == 1 else f"g^{k}") for k in range(n))
    return _from_mul([[(i + j) % n for j in range(n)] for i in range(n)], labels)


def check_group_table(g: GroupTable) -> Report:
    n, mul = g.size, g.mul
    for a, b, c in itertools.product(range(n), repeat=3):
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            return Report(False, "associativity", (a, b, c))
    for a in range(n):
        if mul[g.identity][a] != a or mul[a][g.identity] != a:
            return Report(False, "identity", (a,))
        if mul[a][g.inverse[a]] != g.identity or mul[g.inverse[a]][a] != g.identity:
            return Report(False, "inverse", (a,))
    return Report.passed()


def check_heap_table(t: FiniteHeapTable) -> Report:
    n = t.size
    for a, b, c, d, e in itertools.product(range(n), repeat=5):
        if t(t(a, b, c), d, e) != t(a, b, t(c, d, e)):
            return Report(False, "associativity", (a, b, c, d, e))
    for x, y in itertools.product(range(n), repeat=2):
        if t(x, x, y) != y:
            return Report(False, "left Mal'cev law", (x, y))
        if t(x, y, y) != x:
            return Report(False, "right Mal'cev law", (x, y))
    return Report.passed()


def gen_group_algebra(name: str, field: FieldSpec = QQ) -> HopfAlgebraData:
    """The group Hopf algebra F[G] on the grouplike basis of G."""
    g = group_table(name)
    n = g.size
    mult = field.zeros(n, n, n)
    antipode = field.zeros(n, n)
    for i in range(n):
        antipode[g.inverse[i], i] = 1
        for j in range(n):
            mult[i, j, g.mul[i][j]] = 1
    coalg = grouplike_coalgebra(field, n, g.labels)
    return HopfAlgebraData(coalg, mult, field.basis_vector(n, g.identity), antipode)


def gen_sweedler(field: FieldSpec = QQ) -> HopfAlgebraData:
    """Sweedler's four-dimensional Hopf algebra on ``1, g, x, gx``, antipode left unset."""
    if field.characteristic == 2:
        raise ValueError("Sweedler's algebra needs characteristic other than 2")
    one, g, x, gx = range(4)
    table = {
        (one, one): {one: 1}, (one, g): {g: 1}, (one, x): {x: 1}, (one, gx): {gx: 1},
        (g, one): {g: 1}, (g, g): {one: 1}, (g, x): {gx: 1}, (g, gx): {x: 1},
        (x, one): {x: 1}, (x, g): {gx: -1},
        (gx, one): {gx: 1}, (gx, g): {x: -1},
    }
    mult = field.zeros(4, 4, 4)
    for (a, b), out in table.items():
        for k, v in out.items():
            mult[a, b, k] = field.coerce(v)
    comul = field.zeros(4, 4, 4)
    comul[one, one, one] = 1
    comul[g, g, g] = 1
    comul[x, x, one] = 1
    comul[x, g, x] = 1
    comul[gx, gx, g] = 1
    comul[gx, one, gx] = 1
    coalg = Coalgebra(field, comul, field.array([1, 1, 0, 0]), ("1", "g", "x", "gx"))
    return HopfAlgebraData(coalg, mult, field.basis_vector(4, one))


def gen_heap_from_group(g: GroupTable) -> FiniteHeapTable:
    """``[x, y, z] = x y^-1 z``."""
    n = g.size
    table = tuple(
        tuple(tuple(g.mul[g.mul[x][g.inverse[y]]][z] for z in range(n)) for y in range(n))
        for x in range(n)
    )
    return FiniteHeapTable(table, g.labels)


def linearize_heap(t: FiniteHeapTable, field: FieldSpec = QQ) -> HopfHeap:
    n = t.size
    chi = field.zeros(n, n, n, n)
    for x, y, z in itertools.product(range(n), repeat=3):
        chi[x, y, z, t(x, y, z)] = 1
    return HopfHeap(grouplike_coalgebra(field, n, t.labels), chi)


def _translation_maps(t: FiniteHeapTable) -> dict[tuple[int, ...], tuple[int, int]]:
    """Distinct maps ``c |-> [c, a, b]`` with the first (a, b) producing each."""
    n = t.size
    maps: dict[tuple[int, ...], tuple[int, int]] = {}
    for a, b in itertools.product(range(n), repeat=2):
        maps.setdefault(tuple(t(c, a, b) for c in range(n)), (a, b))
    return maps


def set_translation_group(t: FiniteHeapTable) -> GroupTable:
    """The group of translations of a heap, multiplied as "apply left factor first".

    Raises :class:`VerificationError` unless the maps close under composition
    and act freely and transitively.
    """
    n = t.size
    perms = list(_translation_maps(t))
    index = {p: i for i, p in enumerate(perms)}
    mul = []
    for p in perms:
        row = []
        for q in perms:
            comp = tuple(q[p[c]] for c in range(n))
            if comp not in index:
                raise VerificationError(f"translations not closed under composition: {p} then {q}")
            row.append(index[comp])
        mul.append(row)
    for x, y in itertools.product(range(n), repeat=2):
        hits = sum(1 for p in perms if p[x] == y)
        if hits != 1:
            raise VerificationError(f"translation action not free and transitive at ({x}, {y}): {hits} maps")
    identity = tuple(range(n))
    if identity not in index:
        raise VerificationError("identity is not a translation")
    inverse = []
    for p in perms:
        inv = tuple(sorted(range(n), key=lambda c: p[c]))
        if inv not in index:
            raise VerificationError(f"translation {p} has no inverse translation")
        inverse.append(index[inv])
    g = GroupTable(tuple(tuple(r) for r in mul), index[identity], tuple(inverse))
    check_group_table(g).raise_if_failed("translation group")
    return g


_TENSOR_OWNERS = {
    "comul": ("coalgebra",),
    "counit": ("coalgebra",),
    "mult": (),
    "unit": (),
    "antipode": (),
    "chi": (),
    "action": (),
}


def perturb(structure, tensor: str, slot: tuple[int, ...], new_value):
    """Copy of ``structure`` with one entry of the named tensor replaced.

    ``tensor`` is one of comul, counit, mult, unit, antipode, chi, action; the
    coalgebra tensors are reached through ``.coalgebra`` when needed. No
    validity is claimed for the result.
    """
    if tensor not in _TENSOR_OWNERS:
        raise ValueError(f"unknown tensor {tensor!r}")
    if tensor in ("comul", "counit") and not isinstance(structure, Coalgebra):
        inner = perturb(structure.coalgebra, tensor, slot, new_value)
        return dataclasses.replace(structure, coalgebra=inner)
    arr = getattr(structure, tensor, None)
    if arr is None:
        raise ValueError(f"{type(structure).__name__} has no {tensor} tensor")
    slot = tuple(slot)
    if len(slot) != arr.ndim or any(not 0 <= s < d for s, d in zip(slot, arr.shape)):
        raise IndexError(f"slot {slot} out of range for {tensor} of shape {arr.shape}")
    field = structure.field
    new = np.array(arr, dtype=object)
    new[slot] = field.coerce(new_value)
    return dataclasses.replace(structure, **{tensor: new})


def catalog_hopf_algebras() -> dict[str, HopfAlgebraData]:
    """Group algebras over Q and F_7, Sweedler over Q and F_5, all with antipodes."""
    out: dict[str, HopfAlgebraData] = {}
    for field in (QQ, GF(7)):
        for name in GROUP_NAMES:
            out[f"{name}/{field}"] = gen_group_algebra(name, field)
    for field in (QQ, GF(5)):
        out[f"Sweedler/{field}"] = with_solved_antipode(gen_sweedler(field))
    return out


def catalog_heaps() -> dict[str, HopfHeap]:
    out: dict[str, HopfHeap] = {}
    for field in (QQ, GF(7)):
        for name in GROUP_NAMES:
            out[f"{name}/{field}"] = linearize_heap(gen_heap_from_group(group_table(name)), field)
    for field in (QQ, GF(5)):
        out[f"Sweedler/{field}"] = heap_from_hopf(with_solved_antipode(gen_sweedler(field)))
    return out


def group_heap_morphism(src: str, tgt: str, mapping, field: FieldSpec = QQ) -> HeapMorphism:
    """Linearised heap morphism induced by a map of group elements.

    The map must be a group homomorphism; it is checked exhaustively and the
    resulting linear map is verified as a heap morphism.
    """
    gs, gt = group_table(src), group_table(tgt)
    mapping = tuple(mapping)
    if len(mapping) != gs.size or not all(0 <= y < gt.size for y in mapping):
        raise ValueError(f"mapping {mapping} does not send {src} into {tgt}")
    for a, b in itertools.product(range(gs.size), repeat=2):
        if mapping[gs.mul[a][b]] != gt.mul[mapping[a]][mapping[b]]:
            raise ValueError(f"mapping is not a homomorphism at ({a}, {b})")
    hs = linearize_heap(gen_heap_from_group(gs), field)
    ht = linearize_heap(gen_heap_from_group(gt), field)
    mat = field.zeros(gt.size, gs.size)
    for x, y in enumerate(mapping):
        mat[y, x] = 1
    m = HeapMorphism(hs, ht, mat)
    check_heap_morphism(m).raise_if_failed(f"{src} -> {tgt} heap morphism")
    return m


def catalog_morphisms(field: FieldSpec = QQ) -> dict[str, HeapMorphism]:
    """The reduction ``C4 -> C2``, ``g^k |-> g^(k mod 2)``."""
    return {"C4->C2": group_heap_morphism("C4", "C2", (0, 1, 0, 1), field)}


def translation_group_matching(trans, t: FiniteHeapTable) -> tuple[GroupTable, np.ndarray]:
    """Translation group of ``t`` and the matrix sending each group element to
    the abstract coordinates of a generator realising it."""
    n = t.size
    maps = _translation_maps(t)
    group = set_translation_group(t)
    cols = [trans.generator_coords[pair_index(a, b, n)] for a, b in maps.values()]
    return group, np.array(cols, dtype=object).T


def check_oracle_bridge(trans, t: FiniteHeapTable) -> Report:
    """Right translations of the linearised heap form the group algebra of the
    oracle's translation group under the generator-induced matching."""
    field = trans.hopf.field
    group, P = translation_group_matching(trans, t)
    k = group.size
    if trans.hopf.dim != k:
        return Report(False, "dimension", (), f"Tn has dim {trans.hopf.dim}, oracle group order {k}")
    mul_target = np.array([[P[:, group.mul[i][j]] for j in range(k)] for i in range(k)], dtype=object)
    return first_failure([
        lambda: compare(
            "group multiplication",
            field.einsum("ai,bj,abz->ijz", P, P, trans.hopf.mult),
            mul_target,
            2,
        ),
        lambda: compare("unit", trans.hopf.unit, P[:, group.identity], 0),
        lambda: compare(
            "grouplike matching",
            field.einsum("ai,apq->ipq", P, trans.hopf.comul),
            field.einsum("pi,qi->ipq", P, P),
            1,
        ),
    ])
