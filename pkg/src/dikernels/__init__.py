"""Exact kernel computations and critical kernel imperfect digraph search."""
from .core import Digraph, delete_vertex, distances, from_arcs, induced, is_strong
from .digraph6 import decode_digraph6, encode_digraph6
from .enumeration import EnumClass, FilterSpec, class_table, count_classes, enumerate_classes
from .families import antihole, circulant, directed_cycle, named_digraph, three_cycle_extension
from .kernels import all_kernels, find_kernel, has_kernel, is_cki, is_kernel, is_kernel_perfect
from .recognizers import are_isomorphic, canonical_form
from .structure4t import classify_strong_4_transitive
from .verification import check_lemma_properties, verify_theorem

__version__ = "0.1.0"

__all__ = [
    "Digraph",
    "EnumClass",
    "FilterSpec",
    "all_kernels",
    "antihole",
    "are_isomorphic",
    "canonical_form",
    "check_lemma_properties",
    "circulant",
    "class_table",
    "classify_strong_4_transitive",
    "count_classes",
    "decode_digraph6",
    "delete_vertex",
    "directed_cycle",
    "distances",
    "encode_digraph6",
    "enumerate_classes",
    "find_kernel",
    "from_arcs",
    "has_kernel",
    "induced",
    "is_cki",
    "is_kernel",
    "is_kernel_perfect",
    "is_strong",
    "named_digraph",
    "three_cycle_extension",
    "verify_theorem",
]
