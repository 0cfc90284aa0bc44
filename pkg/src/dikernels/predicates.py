"""String-identified predicates shared by enumeration filters, suites and the CLI.

An identifier is ``name`` or ``name:arg``, e.g. ``k-quasi-transitive:4``,
``locally-semicomplete:both``, ``diameter:3``, ``free:C5``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from ._jit import batch as _b
from .core import Digraph
from .errors import UnknownPredicate
from .families import antihole, c7_12, complete_digraph, directed_cycle, transitive_tournament

_MODES = {"in": 0, "out": 1, "both": 2, "closed": 3, "any": 4}


@dataclass(frozen=True)
class Predicate:
    ident: str
    func: object
    arg: int
    hereditary: bool

    def __call__(self, d: Digraph) -> bool:
        return bool(self.func(d.n, d.rows, self.arg))

    def batch(self, rows: np.ndarray, n: int) -> np.ndarray:
        if rows.shape[0] == 0:
            return np.zeros(0, np.bool_)
        return _b.batch_of(self.func)(rows, n, self.arg)


def short_named(name: str) -> Digraph:
    """Digraphs addressable in ``free:`` predicates: Cn, An, TTn, Kn, C7_12."""
    if name == "C7_12":
        return c7_12()
    m = re.fullmatch(r"(C|A|TT|K)(\d+)", name)
    if not m:
        raise UnknownPredicate(f"unknown digraph name {name!r}")
    kind, n = m.group(1), int(m.group(2))
    return {"C": directed_cycle, "A": antihole, "TT": transitive_tournament, "K": complete_digraph}[kind](n)


_free_cache: dict[str, object] = {}


def _free_func(name):
    if name not in _free_cache:
        _free_cache[name] = _b.make_free_of(short_named(name).out_rows)
    return _free_cache[name]


def get_predicate(ident: str) -> Predicate:
    name, _, arg = ident.strip().partition(":")
    try:
        if name in ("k-quasi-transitive", "k-transitive", "k-anti-transitive"):
            k = int(arg)
            if k < 2:
                raise UnknownPredicate(f"{ident}: k must be >= 2")
            func = {"k-quasi-transitive": _b.p_kqt, "k-transitive": _b.p_kt, "k-anti-transitive": _b.p_kat}[name]
            return Predicate(ident, func, k, True)
        if name == "locally-semicomplete":
            return Predicate(ident, _b.p_locally, _MODES[arg or "both"], True)
        if name == "arc-locally-semicomplete":
            mode = _MODES[arg or "both"]
            if mode == 3:
                raise KeyError(arg)
            return Predicate(ident, _b.p_arc_locally, mode, True)
        if name == "diameter":
            return Predicate(ident, _b.p_diameter, int(arg), False)
        if name == "far-pair":
            return Predicate(ident, _b.p_far_pair, int(arg), False)
        if name == "free":
            return Predicate(ident, _free_func(arg), 0, True)
    except (KeyError, ValueError):
        raise UnknownPredicate(f"bad predicate argument in {ident!r}") from None
    if arg:
        raise UnknownPredicate(f"predicate {name!r} takes no argument")
    simple = {
        "tt3-free": (_b.p_tt3_free, True),
        "semicomplete": (_b.p_semicomplete, True),
        "asymmetric": (_b.p_asymmetric, True),
        "underlying-perfect": (_b.p_underlying_perfect, True),
        "kernel-perfect": (_b.p_kernel_perfect, True),
        "3cycles-2sym": (_b.p_three_cycles_two_sym, True),
        "strong": (_b.p_strong, False),
        "has-kernel": (_b.p_has_kernel, False),
        "cki": (_b.p_cki, False),
    }
    if name not in simple:
        raise UnknownPredicate(f"unknown predicate {ident!r}")
    func, her = simple[name]
    return Predicate(ident, func, 0, her)


PREDICATE_NAMES = (
    "k-quasi-transitive:K",
    "k-transitive:K",
    "k-anti-transitive:K",
    "locally-semicomplete:in|out|both|closed|any",
    "arc-locally-semicomplete:in|out|both|any",
    "diameter:D",
    "far-pair:D",
    "free:NAME (Cn, An, TTn, Kn, C7_12)",
    "tt3-free",
    "semicomplete",
    "asymmetric",
    "underlying-perfect",
    "kernel-perfect",
    "3cycles-2sym",
    "strong",
    "has-kernel",
    "cki",
)


def check(d: Digraph, ident: str) -> bool:
    return get_predicate(ident)(d)
