"""Starred preorders, their relations, and the square-cancellable set.

a <=_L* b holds when every right-multiplication identity satisfied by b
is satisfied by a: bx = by implies ax = ay, with x, y ranging over S with
a fresh identity adjoined. The kernel partition of each element is built
once; comparisons reduce to a refinement test between partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import FiniteSemigroup, SubSemigroup, adjoin_identity
from .green import green_data
from .relations import Relation


@dataclass(frozen=True)
class StarredData:
    leq_Lstar: Relation
    leq_Rstar: Relation
    Lstar: Relation
    Rstar: Relation
    Hstar: Relation
    square_cancellable: frozenset[int]


def _kernel_signatures(products: list[list[int]]) -> list[tuple[int, ...]]:
    """Per element b, the partition of the domain by x ~ y iff row_b[x] == row_b[y],
    encoded as first-occurrence class ids."""
    sigs = []
    for row in products:
        first: dict[int, int] = {}
        sig = []
        for p in row:
            sig.append(first.setdefault(p, len(first)))
        sigs.append(tuple(sig))
    return sigs


def _refines(finer: tuple[int, ...], coarser: tuple[int, ...]) -> bool:
    """True when every block of `finer` lies inside one block of `coarser`."""
    seen: dict[int, int] = {}
    for f, c in zip(finer, coarser):
        if seen.setdefault(f, c) != c:
            return False
    return True


@lru_cache(maxsize=None)
def starred_data(s: FiniteSemigroup) -> StarredData:
    n = s.order
    s1 = adjoin_identity(s)
    dom = range(s1.order)
    right_rows = [[s1.table[b][x] for x in dom] for b in range(n)]
    left_rows = [[s1.table[x][b] for x in dom] for b in range(n)]
    right_sigs = _kernel_signatures(right_rows)
    left_sigs = _kernel_signatures(left_rows)

    # a <=_L* b iff b's kernel refines into a's: bx = by forces ax = ay.
    lm = np.zeros((n, n), dtype=bool)
    rm = np.zeros((n, n), dtype=bool)
    for a in range(n):
        for b in range(n):
            lm[a, b] = _refines(right_sigs[b], right_sigs[a])
            rm[a, b] = _refines(left_sigs[b], left_sigs[a])
    leq_lstar = Relation(lm)
    leq_rstar = Relation(rm)
    lstar = leq_lstar.equivalence()
    rstar = leq_rstar.equivalence()
    hstar = lstar & rstar
    sq = frozenset(a for a in range(n) if hstar.same_class(a, s.mul(a, a)))
    return StarredData(leq_lstar, leq_rstar, lstar, rstar, hstar, sq)


def square_cancellable_members(sub: SubSemigroup) -> frozenset[int]:
    """S(S) of the subsemigroup viewed abstractly, as parent indices."""
    abstract, to_parent = sub.as_semigroup()
    return frozenset(to_parent[i] for i in starred_data(abstract).square_cancellable)


def check_star_restriction(sub: SubSemigroup) -> tuple[int, int, str] | None:
    """Green preorders of an oversemigroup refine the starred preorders.

    For all a, b in S: a <=_L b in Q implies a <=_L* b in S, and dually for
    the R side. Returns the first violating (a, b, side) as parent indices,
    or None. The converse direction asserts existence of some oversemigroup
    and is not decidable from a single Q, so it is not tested.
    """
    q = sub.parent
    gd = green_data(q)
    abstract, to_parent = sub.as_semigroup()
    to_sub = {p: i for i, p in to_parent.items()}
    sd = starred_data(abstract)
    for a in sub.members:
        for b in sub.members:
            if gd.leq_L.holds(a, b) and not sd.leq_Lstar.holds(to_sub[a], to_sub[b]):
                return (a, b, "L")
            if gd.leq_R.holds(a, b) and not sd.leq_Rstar.holds(to_sub[a], to_sub[b]):
                return (a, b, "R")
    return None
