import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfheap.catalog import gen_sweedler
from hopfheap.fileformat import FormatError, dumps, from_record, loads, read_structure, to_record, write_structure
from hopfheap.galois import GaloisCoObject
from hopfheap.heap import HopfHeap, grunspan_map
from hopfheap.hopf import HopfAlgebraData

import catalog_cache


def same(a, b):
    if isinstance(a, GaloisCoObject):
        return a.coalgebra == b.coalgebra and a.hopf == b.hopf and np.array_equal(a.action, b.action)
    return a == b


def structures():
    out = []
    for key in catalog_cache.HEAP_KEYS:
        out.append(catalog_cache.heap(key))
        out.append(catalog_cache.heap(key).coalgebra)
    out.extend(catalog_cache.hopfs().values())
    out.append(gen_sweedler())
    for key in ("C1/Q", "C3/F_7", "S3/Q", "Sweedler/F_5"):
        out.append(catalog_cache.galois(key))
    return out


ALL = structures()


@given(st.sampled_from(ALL))
def test_round_trip(obj):
    text = dumps(to_record(obj))
    back = from_record(loads(text))
    assert type(back) is type(obj) and same(back, obj)
    # writing again is byte identical
    assert dumps(to_record(back)) == text


def test_sparse_entries_sorted_and_without_zeros():
    rec = to_record(catalog_cache.heap("Sweedler/Q"))
    keys = [tuple(e[:-1]) for e in rec["heap"]]
    assert keys == sorted(keys) and all(e[-1] != "0" for e in rec["heap"])


def test_grunspan_and_provenance_fields(tmp_path):
    h = catalog_cache.heap("Sweedler/F_5")
    path = tmp_path / "h.json"
    rec = write_structure(str(path), h, grunspan=grunspan_map(h))
    assert "grunspan" in rec
    obj, raw = read_structure(str(path))
    assert obj == h and raw["grunspan"] == rec["grunspan"]
    e = to_record(catalog_cache.hopfs()["C2/Q"], quotient_of="somewhere")
    assert e["quotient_of"] == "somewhere" and isinstance(from_record(e), HopfAlgebraData)


def test_type_inference_without_type_key():
    rec = to_record(catalog_cache.heap("C2/Q"))
    del rec["type"]
    assert isinstance(from_record(rec), HopfHeap)
    g = to_record(catalog_cache.galois("C2/Q"))
    flat = dict(g["coalgebra"])
    del flat["type"]
    flat.update(hopf=g["hopf"], action=g["action"])
    assert isinstance(from_record(flat), GaloisCoObject)


def base():
    return to_record(catalog_cache.heap("C2/Q"))


@pytest.mark.parametrize(
    "mutate",
    [
        lambda r: r["heap"][0].__setitem__(-1, "1/0"),
        lambda r: r["heap"][0].__setitem__(-1, "x"),
        lambda r: r["heap"][0].__setitem__(-1, 1),
        lambda r: r["heap"][0].__setitem__(0, 2),
        lambda r: r["heap"][0].__setitem__(0, True),
        lambda r: r["heap"].append(list(r["heap"][0])),
        lambda r: r["comul"].append([0, 0]),
        lambda r: r.__setitem__("dim", 0),
        lambda r: r.__setitem__("counit", ["1"]),
        lambda r: r.__setitem__("field", {"kind": "PrimeField", "p": 4}),
        lambda r: r.__setitem__("field", {"kind": "Reals"}),
        lambda r: r.pop("comul"),
        lambda r: r.__setitem__("type", "monoid"),
        lambda r: r.__setitem__("basis_labels", ["a"]),
    ],
)
def test_malformed_inputs(mutate):
    rec = base()
    mutate(rec)
    with pytest.raises(FormatError):
        from_record(rec)


def test_invalid_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(FormatError):
        read_structure(str(p))
    with pytest.raises(FormatError):
        read_structure(str(tmp_path / "missing.json"))


def test_prime_field_residues_written_canonically():
    rec = to_record(catalog_cache.hopfs()["Sweedler/F_5"])
    assert ["3", 2, "4"] not in rec["antipode"]
    assert [3, 2, "4"] in rec["antipode"]  # S(x) = -gx = 4 gx over F_5
    assert json.loads(dumps(rec)) == rec
