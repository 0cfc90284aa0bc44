"""Exact kernel, kernel-perfection and critical-kernel-imperfection decisions.

A kernel is an independent set S such that every vertex outside S has an arc into S.
Every kernel is a maximal independent set of the underlying graph, so the search
walks those sets (Bron-Kerbosch with pivoting) and keeps the absorbent ones.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from ._jit import kernel as _k
from .core import Digraph, mask_of, members
from .errors import OrderTooLarge

LATTICE_MAX_ORDER = 15
ENUM_MAX_ORDER = 20


class KernelStatus(enum.Enum):
    FOUND = "FOUND"
    NONE = "NONE"


@dataclass(frozen=True)
class KernelAnswer:
    status: KernelStatus
    witness: frozenset[int] | None = None

    @property
    def found(self) -> bool:
        return self.status is KernelStatus.FOUND


def is_kernel(d: Digraph, s: Iterable[int]) -> bool:
    m = mask_of(s, d.n)
    full = (1 << d.n) - 1
    return bool(_k.is_independent(d.n, d.rows, m) and _k.is_absorbent(d.n, d.rows, m, full))


def all_kernels(d: Digraph) -> list[frozenset[int]]:
    """Every kernel, ascending by bit pattern."""
    if d.n > ENUM_MAX_ORDER:
        raise OrderTooLarge(f"kernel enumeration limited to n <= {ENUM_MAX_ORDER}")
    return [members(int(m)) for m in _k.all_kernels(d.n, d.rows)]


def find_kernel(d: Digraph) -> KernelAnswer:
    """The kernel with the smallest bit pattern, or NONE."""
    ks = _k.all_kernels(d.n, d.rows)
    if len(ks) == 0:
        return KernelAnswer(KernelStatus.NONE)
    return KernelAnswer(KernelStatus.FOUND, members(int(ks[0])))


def has_kernel(d: Digraph) -> bool:
    return bool(_k.has_kernel(d.n, d.rows))


def is_kernel_perfect(d: Digraph) -> bool:
    if d.n > LATTICE_MAX_ORDER:
        raise OrderTooLarge(f"subset-lattice test limited to n <= {LATTICE_MAX_ORDER}")
    return bool(_k.is_kernel_perfect(d.n, d.rows))


def is_cki(d: Digraph) -> bool:
    """No kernel, while every vertex-deleted subdigraph is kernel-perfect.

    Strongness is never used to short-cut the search.
    """
    if d.n > LATTICE_MAX_ORDER:
        raise OrderTooLarge(f"subset-lattice test limited to n <= {LATTICE_MAX_ORDER}")
    return bool(_k.is_cki(d.n, d.rows))
