"""Finite semigroups as Cayley tables.

Elements are dense integer indices 0..n-1; labels are cosmetic. All values
are immutable after construction and every operation is a pure function,
so everything here is safe to share across workers.
"""

from __future__ import annotations

from itertools import permutations
from typing import Callable, Iterable, Sequence

import numpy as np

MAX_ENUM_ORDER = 4


class SemigroupError(Exception):
    """Base class for input/validation errors raised by this package."""


class NotAssociative(SemigroupError):
    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        a, b, c = triple
        super().__init__(f"not associative: ({a}*{b})*{c} != {a}*({b}*{c})")


class IndexOutOfRange(SemigroupError):
    pass


class EmptySeed(SemigroupError):
    pass


class NotClosed(SemigroupError):
    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        a, b, ab = witness
        super().__init__(f"subset not closed: {a}*{b} = {ab} is outside the subset")


class OrderTooLarge(SemigroupError):
    pass


class FiniteSemigroup:
    """An associative n x n multiplication table over indices 0..n-1."""

    __slots__ = ("table", "labels", "_np")

    def __init__(self, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in table)
        n = len(rows)
        if n == 0:
            raise IndexOutOfRange("a semigroup needs at least one element")
        for row in rows:
            if len(row) != n:
                raise IndexOutOfRange(f"table is not square: row of length {len(row)} in order-{n} table")
            for x in row:
                if not 0 <= x < n:
                    raise IndexOutOfRange(f"table entry {x} outside [0, {n})")
        arr = np.array(rows, dtype=np.int64)
        # (ab)c == a(bc) for all triples, fully vectorised
        lhs = arr[arr, :]       # lhs[a,b,c] = table[table[a,b], c]
        rhs = arr[:, arr]       # rhs[a,b,c] = table[a, table[b,c]]
        bad = np.argwhere(lhs != rhs)
        if len(bad) > 0:
            a, b, c = bad[0]
            raise NotAssociative((int(a), int(b), int(c)))
        arr.setflags(write=False)
        self.table = rows
        self._np = arr
        if labels is None:
            self.labels = tuple(str(i) for i in range(n))
        else:
            if len(labels) != n:
                raise IndexOutOfRange("label count must match order")
            self.labels = tuple(str(s) for s in labels)

    @property
    def order(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def product(self, *xs: int) -> int:
        """Left-to-right product of one or more elements."""
        if not xs:
            raise IndexOutOfRange("empty product")
        acc = xs[0]
        for x in xs[1:]:
            acc = self.table[acc][x]
        return acc

    def power(self, a: int, k: int) -> int:
        """a^k for k >= 1."""
        if k < 1:
            raise IndexOutOfRange("power requires k >= 1")
        acc = a
        for _ in range(k - 1):
            acc = self.table[acc][a]
        return acc

    def idempotents(self) -> tuple[int, ...]:
        return tuple(e for e in self.elements() if self.table[e][e] == e)

    def identity(self) -> int | None:
        for e in self.elements():
            if all(self.table[e][x] == x == self.table[x][e] for x in self.elements()):
                return e
        return None

    def zero(self) -> int | None:
        for z in self.elements():
            if all(self.table[z][x] == z == self.table[x][z] for x in self.elements()):
                return z
        return None

    def label(self, a: int) -> str:
        return self.labels[a]

    def relabel(self, labels: Sequence[str]) -> "FiniteSemigroup":
        return FiniteSemigroup(self.table, labels)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteSemigroup)
            and self.table == other.table
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.table, self.labels))

    def __repr__(self) -> str:
        return f"FiniteSemigroup(order={self.order})"


def make_semigroup(table: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> FiniteSemigroup:
    """Validate a square index table and wrap it; rejects non-associative tables."""
    return FiniteSemigroup(table, labels)


def adjoin_identity(s: FiniteSemigroup, label: str = "1") -> FiniteSemigroup:
    """S^1: adjoin a fresh identity at index n, even when S is already a monoid.

    Original indices and products are unchanged.
    """
    n = s.order
    rows = [list(row) + [a] for a, row in enumerate(s.table)]
    rows.append(list(range(n + 1)))
    return FiniteSemigroup(rows, tuple(s.labels) + (label,))


class SubSemigroup:
    """A multiplicatively closed nonempty subset of a parent semigroup."""

    __slots__ = ("parent", "members", "_member_set")

    def __init__(self, parent: FiniteSemigroup, members: Iterable[int]):
        mset = sorted(set(int(m) for m in members))
        if not mset:
            raise EmptySeed("a subsemigroup must be nonempty")
        for m in mset:
            if not 0 <= m < parent.order:
                raise IndexOutOfRange(f"element {m} outside the parent semigroup")
        sset = set(mset)
        for a in mset:
            for b in mset:
                ab = parent.table[a][b]
                if ab not in sset:
                    raise NotClosed((a, b, ab))
        self.parent = parent
        self.members = tuple(mset)
        self._member_set = frozenset(mset)

    def __contains__(self, a: int) -> bool:
        return a in self._member_set

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def member_set(self) -> frozenset[int]:
        return self._member_set

    def is_whole(self) -> bool:
        return len(self.members) == self.parent.order

    def as_semigroup(self) -> tuple[FiniteSemigroup, dict[int, int]]:
        """Restrict the parent table to the members, reindexed densely.

        Returns the abstract semigroup and the map new index -> parent index.
        """
        to_parent = {i: m for i, m in enumerate(self.members)}
        to_sub = {m: i for i, m in enumerate(self.members)}
        rows = [[to_sub[self.parent.table[a][b]] for b in self.members] for a in self.members]
        labels = [self.parent.labels[m] for m in self.members]
        return FiniteSemigroup(rows, labels), to_parent

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubSemigroup)
            and self.parent == other.parent
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((self.parent, self.members))

    def __repr__(self) -> str:
        return f"SubSemigroup(members={self.members}, parent_order={self.parent.order})"


def opposite(s: FiniteSemigroup) -> FiniteSemigroup:
    """The opposite semigroup: x *op y = y * x. Right-side notions on S
    are left-side notions on the opposite."""
    n = s.order
    return FiniteSemigroup([[s.table[b][a] for b in range(n)] for a in range(n)], s.labels)


def opposite_sub(sub: "SubSemigroup") -> "SubSemigroup":
    return SubSemigroup(opposite(sub.parent), sub.members)


def closure(q: FiniteSemigroup, seed: Iterable[int]) -> SubSemigroup:
    """Smallest multiplicatively closed superset of `seed` in `q`."""
    todo = sorted(set(int(x) for x in seed))
    if not todo:
        raise EmptySeed("closure needs a nonempty seed")
    for x in todo:
        if not 0 <= x < q.order:
            raise IndexOutOfRange(f"seed element {x} outside the semigroup")
    got = set(todo)
    while todo:
        nxt = []
        for a in todo:
            for b in list(got):
                for p in (q.table[a][b], q.table[b][a]):
                    if p not in got:
                        got.add(p)
                        nxt.append(p)
        todo = nxt
    return SubSemigroup(q, got)


def is_cancellative(t: SubSemigroup) -> bool:
    """ax = ay => x = y and xa = ya => x = y for all a, x, y in t."""
    tab = t.parent.table
    for a in t.members:
        left_seen: dict[int, int] = {}
        right_seen: dict[int, int] = {}
        for x in t.members:
            ax = tab[a][x]
            if ax in left_seen and left_seen[ax] != x:
                return False
            left_seen[ax] = x
            xa = tab[x][a]
            if xa in right_seen and right_seen[xa] != x:
                return False
            right_seen[xa] = x
    return True


def is_right_reversible(t: SubSemigroup) -> bool:
    """Ore condition: Ta and Tb intersect for all a, b in T."""
    tab = t.parent.table
    left_sets = {a: {tab[x][a] for x in t.members} for a in t.members}
    for a in t.members:
        for b in t.members:
            if not (left_sets[a] & left_sets[b]):
                return False
    return True


def is_left_reversible(t: SubSemigroup) -> bool:
    """Dual Ore condition: aT and bT intersect for all a, b in T."""
    tab = t.parent.table
    right_sets = {a: {tab[a][x] for x in t.members} for a in t.members}
    for a in t.members:
        for b in t.members:
            if not (right_sets[a] & right_sets[b]):
                return False
    return True


def enumerate_semigroups(n: int, visitor: Callable[[FiniteSemigroup], None] | None = None) -> int:
    """Visit every labeled associative n x n table exactly once; return the count.

    Backtracking cell fill in row-major order with incremental associativity
    pruning: after each cell assignment only the triples the new cell can
    complete are rechecked. No isomorphism dedup (see canonical_table).
    """
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise OrderTooLarge(f"enumeration supports orders 1..{MAX_ENUM_ORDER}, got {n}")

    UNSET = -1
    tab = [[UNSET] * n for _ in range(n)]
    rng = range(n)
    count = 0

    def consistent_after(a: int, b: int) -> bool:
        # Triples that the just-set cell (a, b) may newly decide:
        #   x=a, y=b: (ab)z vs a(bz)
        #   y=a, z=b: (xa)b vs x(ab)
        #   cell used as an inner product: xy = a with z = b, or yz = b with x = a.
        v = tab[a][b]
        for z in rng:
            vz = tab[v][z]
            bz = tab[b][z]
            if vz != UNSET and bz != UNSET:
                abz = tab[a][bz]
                if abz != UNSET and vz != abz:
                    return False
        for x in rng:
            xa = tab[x][a]
            xv = tab[x][v]
            if xa != UNSET and xv != UNSET:
                xab = tab[xa][b]
                if xab != UNSET and xab != xv:
                    return False
        for x in rng:
            for y in rng:
                if tab[x][y] == a:
                    # ((xy)b) vs (x(yb))
                    yb = tab[y][b]
                    if yb != UNSET:
                        xyb = tab[x][yb]
                        if xyb != UNSET and xyb != v:
                            return False
                if tab[x][y] == b:
                    # cell (a,b) as the (x, yz) lookup: a(xy) vs (ax)y with xy = b
                    ax = tab[a][x]
                    if ax != UNSET:
                        axy = tab[ax][y]
                        if axy != UNSET and axy != v:
                            return False
        return True

    def fill(pos: int) -> None:
        nonlocal count
        if pos == n * n:
            count += 1
            if visitor is not None:
                visitor(FiniteSemigroup([row[:] for row in tab]))
            return
        a, b = divmod(pos, n)
        for v in rng:
            tab[a][b] = v
            if consistent_after(a, b):
                fill(pos + 1)
        tab[a][b] = UNSET

    fill(0)
    return count


def canonical_table(s: FiniteSemigroup) -> tuple[tuple[int, ...], ...]:
    """Least relabeling of the table under all element permutations.

    Two semigroups are isomorphic iff their canonical tables coincide;
    intended as an optional dedup post-pass over enumerate_semigroups.
    """
    n = s.order
    best: tuple[tuple[int, ...], ...] | None = None
    for perm in permutations(range(n)):
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        cand = tuple(
            tuple(inv[s.table[perm[a]][perm[b]]] for b in range(n)) for a in range(n)
        )
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best
