"""Green's preorders and relations on finite semigroups.

Includes the egg-box structure, group H-classes and group inverses,
regularity, simplicity notions, principal factors and complete
semisimplicity. All data is computed once per semigroup and cached;
queries are read-only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import FiniteSemigroup, SemigroupError
from .relations import Relation


class NotInSubgroup(SemigroupError):
    pass


class NotRegular(SemigroupError):
    pass


@dataclass(frozen=True)
class GreenData:
    leq_L: Relation
    leq_R: Relation
    leq_J: Relation
    L: Relation
    R: Relation
    H: Relation
    D: Relation
    J: Relation
    idempotents: frozenset[int]
    group_H_classes: tuple[frozenset[int], ...]

    def subgroup_elements(self) -> frozenset[int]:
        """H(Q): the union of the subgroups (= of the group H-classes)."""
        out: set[int] = set()
        for h in self.group_H_classes:
            out |= h
        return frozenset(out)

    def in_subgroup(self, a: int) -> bool:
        return a in self.subgroup_elements()

    def h_classes(self) -> tuple[frozenset[int], ...]:
        return self.H.classes()


def _ideal_leq(ideals: list[frozenset[int]]) -> Relation:
    n = len(ideals)
    m = np.zeros((n, n), dtype=bool)
    for a in range(n):
        for b in range(n):
            m[a, b] = ideals[a] <= ideals[b]
    return Relation(m)


@lru_cache(maxsize=None)
def green_data(q: FiniteSemigroup) -> GreenData:
    """All Green structure, from principal ideal containment."""
    n = q.order
    tab = q.table
    rng = range(n)

    left_ideals = [frozenset({a} | {tab[x][a] for x in rng}) for a in rng]
    right_ideals = [frozenset({a} | {tab[a][x] for x in rng}) for a in rng]
    two_sided = []
    for a in rng:
        ideal = {a} | {tab[x][a] for x in rng} | {tab[a][x] for x in rng}
        ideal |= {tab[tab[x][a]][y] for x in rng for y in rng}
        two_sided.append(frozenset(ideal))

    leq_L = _ideal_leq(left_ideals)
    leq_R = _ideal_leq(right_ideals)
    leq_J = _ideal_leq(two_sided)
    L = leq_L.equivalence()
    R = leq_R.equivalence()
    H = L & R
    D = L.compose(R)
    # L and R commute, so the composite is already the join
    if D != R.compose(L):
        raise AssertionError("L∘R != R∘L; the Cayley table is corrupt")
    J = leq_J.equivalence()

    idem = frozenset(e for e in rng if tab[e][e] == e)
    group_h = tuple(h for h in H.classes() if h & idem)
    return GreenData(leq_L, leq_R, leq_J, L, R, H, D, J, idem, group_h)


def group_h_classes_by_idempotent(q: FiniteSemigroup) -> tuple[frozenset[int], ...]:
    """Group H-classes as the H-classes containing an idempotent."""
    return green_data(q).group_H_classes


def group_h_classes_by_square(q: FiniteSemigroup) -> tuple[frozenset[int], ...]:
    """Independent detection: a lies in a subgroup iff a H a^2."""
    gd = green_data(q)
    return tuple(
        h for h in gd.H.classes()
        if all(gd.H.same_class(a, q.mul(a, a)) for a in sorted(h))
    )


def group_inverse(q: FiniteSemigroup, a: int) -> int:
    """The inverse of a within its group H-class; raises when a H a^2 fails."""
    gd = green_data(q)
    h_class = gd.H.class_of(a)
    idems = sorted(h_class & gd.idempotents)
    if not idems:
        raise NotInSubgroup(f"element {a} lies in no subgroup")
    e = idems[0]
    for x in sorted(h_class):
        if q.mul(a, x) == e and q.mul(x, a) == e:
            return x
    raise NotInSubgroup(f"no inverse for {a} inside its H-class")  # pragma: no cover


@dataclass(frozen=True)
class LawViolation:
    law: str
    witness: tuple[int, ...]


def check_green_subgroup_laws(q: FiniteSemigroup) -> LawViolation | None:
    """Interaction laws between the Green preorders and subgroup membership.

    Verifies, for all applicable p, q, r (with HQ the union of subgroups):
      (i)    q <=_L p, p in HQ          => qp R q         (dual: pq L q)
      (ii)   q,r <=_L p, p in HQ, qp=rp => q = r          (dual on the left)
      (iii)  q,r <=_L p, p in HQ, qp L rp => q L r        (dual with R)
      (iv)   q <=_R p, q in HQ          => qp R q         (dual: pq L q)
      (v)    q R p, p in HQ             => pq H q         (dual: q L p => qp H q)

    Returns the first violation or None. A violation would falsify this
    implementation, not the statements.
    """
    gd = green_data(q)
    hq = gd.subgroup_elements()
    tab = q.table
    rng = q.elements()
    for p in rng:
        p_in = p in hq
        for x in rng:
            if p_in and gd.leq_L.holds(x, p) and not gd.R.same_class(tab[x][p], x):
                return LawViolation("i", (x, p))
            if p_in and gd.leq_R.holds(x, p) and not gd.L.same_class(tab[p][x], x):
                return LawViolation("i-dual", (x, p))
            if x in hq and gd.leq_R.holds(x, p) and not gd.R.same_class(tab[x][p], x):
                return LawViolation("iv", (x, p))
            if x in hq and gd.leq_L.holds(x, p) and not gd.L.same_class(tab[p][x], x):
                return LawViolation("iv-dual", (x, p))
            if p_in and gd.R.same_class(x, p) and not gd.H.same_class(tab[p][x], x):
                return LawViolation("v", (x, p))
            if p_in and gd.L.same_class(x, p) and not gd.H.same_class(tab[x][p], x):
                return LawViolation("v-dual", (x, p))
        if not p_in:
            continue
        below_L = [x for x in rng if gd.leq_L.holds(x, p)]
        below_R = [x for x in rng if gd.leq_R.holds(x, p)]
        for x in below_L:
            for y in below_L:
                if tab[x][p] == tab[y][p] and x != y:
                    return LawViolation("ii", (x, y, p))
                if gd.L.same_class(tab[x][p], tab[y][p]) and not gd.L.same_class(x, y):
                    return LawViolation("iii", (x, y, p))
        for x in below_R:
            for y in below_R:
                if tab[p][x] == tab[p][y] and x != y:
                    return LawViolation("ii-dual", (x, y, p))
                if gd.R.same_class(tab[p][x], tab[p][y]) and not gd.R.same_class(x, y):
                    return LawViolation("iii-dual", (x, y, p))
    return None


def is_regular(q: FiniteSemigroup) -> bool:
    """Every element a has an inner inverse: axa = a for some x."""
    tab = q.table
    return all(
        any(tab[tab[a][x]][a] == a for x in q.elements()) for a in q.elements()
    )


def is_simple(q: FiniteSemigroup) -> bool:
    """A single J-class."""
    return len(green_data(q).J.classes()) == 1


def is_bisimple(q: FiniteSemigroup) -> bool:
    """A single D-class."""
    return len(green_data(q).D.classes()) == 1


def is_zero_simple(q: FiniteSemigroup) -> bool:
    """Exactly two J-classes, one being the zero, and Q^2 != {0}."""
    z = q.zero()
    if z is None:
        return False
    classes = green_data(q).J.classes()
    if len(classes) != 2 or not any(c == frozenset({z}) for c in classes):
        return False
    return any(
        q.mul(a, b) != z for a in q.elements() for b in q.elements()
    )


def is_inverse(q: FiniteSemigroup) -> bool:
    """Regular with commuting idempotents."""
    if not is_regular(q):
        return False
    idem = sorted(green_data(q).idempotents)
    return all(q.mul(e, f) == q.mul(f, e) for e in idem for f in idem)


def is_completely_regular(q: FiniteSemigroup) -> bool:
    """Every element lies in a subgroup."""
    gd = green_data(q)
    return gd.subgroup_elements() == frozenset(q.elements())


def principal_factor(q: FiniteSemigroup, b: int) -> FiniteSemigroup:
    """Rees quotient of the principal ideal of b by the elements strictly below.

    Elements are the J-class of b, with products leaving the class collapsed
    to an adjoined zero. When nothing lies strictly below, the J-class equals
    the (closed) principal ideal and is returned as-is.
    """
    gd = green_data(q)
    j_class = sorted(gd.J.class_of(b))
    strictly_below = [x for x in q.elements() if gd.leq_J.holds(x, b) and not gd.J.same_class(x, b)]
    members = set(j_class)
    if not strictly_below:
        closed = all(q.mul(x, y) in members for x in j_class for y in j_class)
        if closed:
            rows = [[j_class.index(q.mul(x, y)) for y in j_class] for x in j_class]
            return FiniteSemigroup(rows, [q.labels[x] for x in j_class])
    zero_idx = len(j_class)
    rows = []
    for x in j_class:
        row = []
        for y in j_class:
            p = q.mul(x, y)
            row.append(j_class.index(p) if p in members else zero_idx)
        row.append(zero_idx)
        rows.append(row)
    rows.append([zero_idx] * (zero_idx + 1))
    return FiniteSemigroup(rows, [q.labels[x] for x in j_class] + ["0"])


def completely_semisimple_via_factors(q: FiniteSemigroup) -> bool:
    """Every principal factor is (0-)simple; for finite factors this is
    the same as completely (0-)simple."""
    if not is_regular(q):
        raise NotRegular("complete semisimplicity is decided for regular semigroups only")
    gd = green_data(q)
    for j_class in gd.J.classes():
        factor = principal_factor(q, min(j_class))
        if not (is_simple(factor) or is_zero_simple(factor)):
            return False
    return True


def completely_semisimple_via_trace(q: FiniteSemigroup) -> bool:
    """Elementwise form: a J ab forces a R ab, and a J ba forces a L ba."""
    if not is_regular(q):
        raise NotRegular("complete semisimplicity is decided for regular semigroups only")
    gd = green_data(q)
    for a in q.elements():
        for b in q.elements():
            ab = q.mul(a, b)
            if gd.J.same_class(a, ab) and not gd.R.same_class(a, ab):
                return False
            ba = q.mul(b, a)
            if gd.J.same_class(a, ba) and not gd.L.same_class(a, ba):
                return False
    return True


def is_completely_semisimple(q: FiniteSemigroup) -> bool:
    """Both characterisations, asserted to agree (redundancy as an oracle)."""
    via_factors = completely_semisimple_via_factors(q)
    via_trace = completely_semisimple_via_trace(q)
    if via_factors != via_trace:
        raise AssertionError(
            f"semisimplicity oracles disagree: factors={via_factors} trace={via_trace}"
        )
    return via_factors


def render_eggbox(q: FiniteSemigroup) -> str:
    """ASCII egg-box: one grid per D-class, rows are R-classes, columns are
    L-classes, a `*` marks a group H-class."""
    gd = green_data(q)
    group_set = set(gd.group_H_classes)
    out: list[str] = []
    for d_class in gd.D.classes():
        reps = sorted(d_class)
        r_classes = sorted({gd.R.class_of(x) for x in reps}, key=min)
        l_classes = sorted({gd.L.class_of(x) for x in reps}, key=min)
        grid: list[list[str]] = []
        for r in r_classes:
            row = []
            for l in l_classes:
                h = r & l
                star = "*" if frozenset(h) in group_set else ""
                row.append(" ".join(q.labels[x] for x in sorted(h)) + star)
            grid.append(row)
        widths = [max(len(grid[i][j]) for i in range(len(r_classes))) for j in range(len(l_classes))]
        border = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
        out.append(f"D-class of {q.labels[min(d_class)]}:")
        out.append(border)
        for row in grid:
            out.append("| " + " | ".join(cell.ljust(w) for cell, w in zip(row, widths)) + " |")
            out.append(border)
        out.append("")
    return "\n".join(out).rstrip() + "\n"
