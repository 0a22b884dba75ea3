"""Shared, cached catalog constructions so the suite builds each object once."""

from functools import lru_cache

from hopfheap import catalog
from hopfheap.galois import cotranslation, galois_from_heap
from hopfheap.translations import build_left_translations, build_right_translations

HEAP_KEYS = tuple(catalog.catalog_heaps())
HOPF_KEYS = tuple(catalog.catalog_hopf_algebras())


@lru_cache(maxsize=None)
def heaps():
    return catalog.catalog_heaps()


@lru_cache(maxsize=None)
def hopfs():
    return catalog.catalog_hopf_algebras()


def heap(key):
    return heaps()[key]


@lru_cache(maxsize=None)
def right(key):
    return build_right_translations(heap(key))


@lru_cache(maxsize=None)
def left(key):
    return build_left_translations(heap(key))


@lru_cache(maxsize=None)
def galois(key):
    return galois_from_heap(heap(key), right(key))


@lru_cache(maxsize=None)
def cot(key):
    return cotranslation(galois(key))


def group_name(key):
    return key.split("/")[0]


def is_group(key):
    return group_name(key) in catalog.GROUP_NAMES
