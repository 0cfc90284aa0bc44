"""Isomorph-free exhaustive generation of small digraphs.

Order m+1 classes are produced from the order-m classes by attaching a new
vertex in every admissible pair-state combination, canonicalising, and
deduplicating on the canonical code.  Hereditary predicates may prune parents,
which never loses a class: every vertex-deleted subdigraph of a passing
digraph passes as well.
"""
from __future__ import annotations

import enum
import functools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from ._jit import enum as _e
from .core import Digraph
from .errors import NonHereditaryPruneRequested, OrderTooLarge
from .predicates import get_predicate


class EnumClass(enum.Enum):
    ALL = _e.ALL
    ORIENTED = _e.ORIENTED
    SEMICOMPLETE = _e.SEMICOMPLETE

    @classmethod
    def parse(cls, text: str) -> "EnumClass":
        return cls[text.strip().upper()]

    @property
    def states(self) -> int:
        return 4 if self is EnumClass.ALL else 3


MAX_ORDER = {EnumClass.ALL: 6, EnumClass.ORIENTED: 7, EnumClass.SEMICOMPLETE: 7}
# one order more is admitted when a hereditary predicate prunes the search;
# the cost then depends on how selective the pruning is
PRUNED_MAX_ORDER = {EnumClass.ALL: 7, EnumClass.ORIENTED: 7, EnumClass.SEMICOMPLETE: 7}

# candidates canonicalised per work unit
_CHUNK = 1 << 21


@dataclass(frozen=True)
class FilterSpec:
    """Predicate identifiers, each with a flag saying whether it may prune parents.

    ``hereditary=None`` takes each predicate's declared flag.
    """

    predicates: tuple[str, ...] = ()
    hereditary: tuple[bool, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "predicates", tuple(self.predicates))
        if self.hereditary is not None:
            flags = tuple(bool(x) for x in self.hereditary)
            if len(flags) != len(self.predicates):
                raise ValueError("one hereditary flag per predicate")
            object.__setattr__(self, "hereditary", flags)

    @classmethod
    def parse(cls, text: str | None, prune: bool = True) -> "FilterSpec":
        idents = tuple(p.strip() for p in (text or "").split(",") if p.strip())
        return cls.of(*idents, prune=prune)

    @classmethod
    def of(cls, *idents: str, prune: bool = True) -> "FilterSpec":
        if prune:
            return cls(idents)
        return cls(idents, tuple(False for _ in idents))

    def resolved(self):
        """(prune predicates, final-order predicates)."""
        preds = [get_predicate(p) for p in self.predicates]
        flags = self.hereditary if self.hereditary is not None else tuple(p.hereditary for p in preds)
        prune = []
        for p, flag in zip(preds, flags):
            if flag and not p.hereditary:
                raise NonHereditaryPruneRequested(f"{p.ident} is not hereditary and cannot prune")
            if flag:
                prune.append(p)
        return prune, preds


NO_FILTER = FilterSpec()


@dataclass(frozen=True)
class ClassTable:
    """One representative per isomorphism class, ascending by canonical code."""

    n: int
    cls: EnumClass
    codes: np.ndarray  # uint64 canonical codes
    rows: np.ndarray  # (count, n) int64 out-rows of the canonical representatives

    def __len__(self):
        return len(self.codes)

    def digraph(self, i: int) -> Digraph:
        return Digraph(self.n, self.rows[i])

    def __iter__(self) -> Iterator[Digraph]:
        for i in range(len(self.codes)):
            yield self.digraph(i)

    def select(self, mask: np.ndarray) -> "ClassTable":
        return ClassTable(self.n, self.cls, self.codes[mask], self.rows[mask])


def max_order(cls: EnumClass, pruned: bool = False) -> int:
    return PRUNED_MAX_ORDER[cls] if pruned else MAX_ORDER[cls]


def _check_bounds(n, cls, pruned=False):
    limit = max_order(cls, pruned)
    if n < 0 or n > limit:
        extra = "" if pruned or limit == PRUNED_MAX_ORDER[cls] else " without hereditary pruning"
        raise OrderTooLarge(f"{cls.name} enumeration limited to n <= {limit}{extra}")


def _extend(parents: np.ndarray, m: int, cls: EnumClass, jobs: int, prune=()) -> np.ndarray:
    per_parent = cls.states ** m
    step = max(1, _CHUNK // per_parent)
    chunks = [parents[i:i + step] for i in range(0, len(parents), step)]

    def work(chunk):
        out = np.empty(len(chunk) * per_parent, np.uint64)
        _e.extend_codes(chunk, m, cls.value, out)
        codes = np.unique(out)
        if prune:
            # filtering before the global merge keeps peak memory near the survivors
            rows = _e.decode_codes(codes, m + 1)
            keep = np.ones(len(codes), np.bool_)
            for p in prune:
                idx = np.flatnonzero(keep)
                keep[idx] = p.batch(rows[idx], m + 1)
            codes = codes[keep]
        return codes

    if jobs > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(work, chunks))
    else:
        parts = [work(c) for c in chunks]
    if not parts:
        return np.zeros(0, np.uint64)
    return np.unique(np.concatenate(parts))


@functools.lru_cache(maxsize=32)
def _level(n: int, cls: EnumClass, prune_idents: tuple[str, ...]) -> ClassTable:
    """Classes of order n all of whose induced subdigraphs pass the prune predicates."""
    prune = [get_predicate(p) for p in prune_idents]
    if n == 0:
        table = ClassTable(0, cls, np.zeros(1, np.uint64), np.zeros((1, 0), np.int64))
    elif n == 1:
        table = ClassTable(1, cls, np.zeros(1, np.uint64), np.zeros((1, 1), np.int64))
    else:
        parent = _level(n - 1, cls, prune_idents)
        codes = _extend(parent.rows, n - 1, cls, 1, prune)
        table = ClassTable(n, cls, codes, _e.decode_codes(codes, n))
    if n <= 1:
        keep = np.ones(len(table), np.bool_)
        for p in prune:
            keep &= p.batch(table.rows, n)
        table = table.select(keep)
    return table


def class_table(n: int, cls: EnumClass = EnumClass.ALL, filt: FilterSpec = NO_FILTER, jobs: int = 1) -> ClassTable:
    prune, preds = filt.resolved()
    _check_bounds(n, cls, pruned=bool(prune))
    prune_idents = tuple(sorted(p.ident for p in prune))
    if jobs > 1 and n >= 2:
        parent = _level(n - 1, cls, prune_idents)
        codes = _extend(parent.rows, n - 1, cls, jobs, prune)
        table = ClassTable(n, cls, codes, _e.decode_codes(codes, n))
    else:
        table = _level(n, cls, prune_idents)
    keep = np.ones(len(table), np.bool_)
    for p in preds:
        if not keep.any():
            break
        idx = np.flatnonzero(keep)
        keep[idx] = p.batch(table.rows[idx], n)
    return table if keep.all() else table.select(keep)


def enumerate_classes(n: int, cls: EnumClass = EnumClass.ALL, filt: FilterSpec = NO_FILTER, jobs: int = 1) -> Iterator[Digraph]:
    """Stream one digraph per isomorphism class passing ``filt``, in canonical order."""
    yield from class_table(n, cls, filt, jobs)


def count_classes(n: int, cls: EnumClass = EnumClass.ALL, filt: FilterSpec = NO_FILTER, jobs: int = 1) -> int:
    return len(class_table(n, cls, filt, jobs))


def clear_cache() -> None:
    """Drop the memoised per-order tables."""
    _level.cache_clear()
