"""Boolean relations on {0, ..., n-1} backed by numpy matrices.

Preorders and equivalences (Green-style relations, kernel preorders,
*-pair components) are all instances of :class:`Relation`.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np


class Relation:
    """An n x n boolean relation; immutable after construction."""

    __slots__ = ("_m",)

    def __init__(self, matrix) -> None:
        m = np.array(matrix, dtype=bool)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"relation matrix must be square, got shape {m.shape}")
        m.setflags(write=False)
        self._m = m

    @classmethod
    def identity(cls, n: int) -> "Relation":
        return cls(np.eye(n, dtype=bool))

    @classmethod
    def full(cls, n: int) -> "Relation":
        return cls(np.ones((n, n), dtype=bool))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Relation":
        m = np.zeros((n, n), dtype=bool)
        for a, b in pairs:
            m[a, b] = True
        return cls(m)

    @property
    def n(self) -> int:
        return self._m.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        return self._m

    def holds(self, a: int, b: int) -> bool:
        return bool(self._m[a, b])

    def pairs(self) -> Iterator[tuple[int, int]]:
        for a, b in zip(*np.nonzero(self._m)):
            yield int(a), int(b)

    def __eq__(self, other) -> bool:
        return isinstance(other, Relation) and np.array_equal(self._m, other._m)

    def __hash__(self) -> int:
        return hash(self._m.tobytes())

    def __le__(self, other: "Relation") -> bool:
        """Containment as sets of pairs."""
        return bool(np.all(~self._m | other._m))

    def __and__(self, other: "Relation") -> "Relation":
        return Relation(self._m & other._m)

    def __or__(self, other: "Relation") -> "Relation":
        return Relation(self._m | other._m)

    def converse(self) -> "Relation":
        return Relation(self._m.T)

    def compose(self, other: "Relation") -> "Relation":
        """Pairs (a, c) with a self b and b other c for some b."""
        prod = self._m.astype(np.uint8) @ other._m.astype(np.uint8)
        return Relation(prod > 0)

    def transitive_closure(self) -> "Relation":
        cur = self._m.copy()
        while True:
            nxt = cur | ((cur.astype(np.uint8) @ cur.astype(np.uint8)) > 0)
            if np.array_equal(nxt, cur):
                return Relation(cur)
            cur = nxt

    def is_reflexive(self) -> bool:
        return bool(np.all(np.diag(self._m)))

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self._m, self._m.T))

    def is_transitive(self) -> bool:
        comp = (self._m.astype(np.uint8) @ self._m.astype(np.uint8)) > 0
        return bool(np.all(~comp | self._m))

    def is_preorder(self) -> bool:
        return self.is_reflexive() and self.is_transitive()

    def is_equivalence(self) -> bool:
        return self.is_preorder() and self.is_symmetric()

    def first_nonpair(self, other: "Relation") -> tuple[int, int] | None:
        """First (a, b) in self but not in other, row-major; None if contained."""
        diff = self._m & ~other._m
        idx = np.argwhere(diff)
        if len(idx) == 0:
            return None
        a, b = idx[0]
        return int(a), int(b)

    def equivalence(self) -> "Relation":
        """The equivalence a ~ b iff a <= b and b <= a (meet with the converse)."""
        return Relation(self._m & self._m.T)

    def class_of(self, a: int) -> frozenset[int]:
        return frozenset(int(i) for i in np.nonzero(self._m[a])[0])

    def classes(self) -> tuple[frozenset[int], ...]:
        """Blocks of an equivalence relation, ordered by least member."""
        if not self.is_equivalence():
            raise ValueError("classes() requires an equivalence relation")
        seen: set[int] = set()
        out: list[frozenset[int]] = []
        for a in range(self.n):
            if a not in seen:
                blk = self.class_of(a)
                seen.update(blk)
                out.append(blk)
        return tuple(out)

    def same_class(self, a: int, b: int) -> bool:
        return bool(self._m[a, b] and self._m[b, a])

    def restrict(self, members: Sequence[int]) -> "Relation":
        """Relation on the subset, reindexed in the order of `members`."""
        idx = np.array(members, dtype=int)
        return Relation(self._m[np.ix_(idx, idx)])

    def __repr__(self) -> str:
        return f"Relation(n={self.n}, pairs={int(self._m.sum())})"


def right_compatible(rel: Relation, table: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    """Check a rel b implies ax rel bx; return a violating (a, b, x) or None."""
    n = rel.n
    for a in range(n):
        for b in range(n):
            if not rel.holds(a, b):
                continue
            for x in range(n):
                if not rel.holds(table[a][x], table[b][x]):
                    return (a, b, x)
    return None


def left_compatible(rel: Relation, table: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    """Check a rel b implies xa rel xb; return a violating (a, b, x) or None."""
    n = rel.n
    for a in range(n):
        for b in range(n):
            if not rel.holds(a, b):
                continue
            for x in range(n):
                if not rel.holds(table[x][a], table[x][b]):
                    return (a, b, x)
    return None
