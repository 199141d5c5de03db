"""Order-of-quotients predicates for a subsemigroup S of a finite semigroup Q.

A weak left order writes every q in Q as (group inverse of a) * b with
a, b in S and a in a subgroup of Q; a left order additionally puts every
square-cancellable element of S inside a subgroup of Q; a straight left
order has witnesses with a R b in Q; a local left order makes S ∩ H a
group-theoretic left order in every group H-class H. Right-side notions
are evaluated on the opposite semigroup, which is their exact mirror.

Witness searches iterate in index order and return the first hit, so all
reports are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteSemigroup, SemigroupError, SubSemigroup, opposite_sub
from .green import NotRegular, green_data, group_inverse, is_regular
from .relations import Relation
from .starred import square_cancellable_members


class PreconditionFailed(SemigroupError):
    def __init__(self, step: str, message: str):
        self.step = step
        super().__init__(f"{step}: {message}")


@dataclass(frozen=True)
class QuotientDecomposition:
    """q = a♯·b (side 'left') or q = b·a♯ (side 'right') with a, b in S."""

    q: int
    a: int
    b: int
    side: str
    straight: bool

    def check(self, parent: FiniteSemigroup) -> None:
        gd = green_data(parent)
        if not gd.in_subgroup(self.a):
            raise PreconditionFailed("decomposition", f"{self.a} is in no subgroup")
        a_sharp = group_inverse(parent, self.a)
        got = parent.mul(a_sharp, self.b) if self.side == "left" else parent.mul(self.b, a_sharp)
        if got != self.q:
            raise PreconditionFailed("decomposition", f"witness product {got} != {self.q}")
        if self.straight:
            rel = gd.R if self.side == "left" else gd.L
            if not rel.same_class(self.a, self.b):
                raise PreconditionFailed("decomposition", "witness pair is not straight")


def is_very_large(sub: SubSemigroup) -> bool:
    """S meets every H-class of Q."""
    gd = green_data(sub.parent)
    members = sub.member_set()
    return all(h & members for h in gd.H.classes())


def _missed_h_classes(sub: SubSemigroup) -> list[frozenset[int]]:
    gd = green_data(sub.parent)
    members = sub.member_set()
    return [h for h in gd.H.classes() if not (h & members)]


def weak_order_witnesses(
    sub: SubSemigroup, side: str = "left", straight: bool = False
) -> dict[int, tuple[int, int]] | None:
    """For each q in Q the first (a, b) with q = a♯b (resp. b·a♯), or None
    if some q has no witness. `straight` also requires a R b (resp. a L b)."""
    if side == "right":
        wit = weak_order_witnesses(opposite_sub(sub), "left", straight)
        return wit
    q_sg = sub.parent
    gd = green_data(q_sg)
    subgroup_members = [a for a in sub.members if gd.in_subgroup(a)]
    sharps = {a: group_inverse(q_sg, a) for a in subgroup_members}
    out: dict[int, tuple[int, int]] = {}
    for target in q_sg.elements():
        found = None
        for a in subgroup_members:
            a_sharp = sharps[a]
            for b in sub.members:
                if q_sg.mul(a_sharp, b) != target:
                    continue
                if straight and not gd.R.same_class(a, b):
                    continue
                found = (a, b)
                break
            if found:
                break
        if found is None:
            return None
        out[target] = found
    return out


def is_weak_left_order(sub: SubSemigroup) -> bool:
    return weak_order_witnesses(sub, "left") is not None


def is_weak_right_order(sub: SubSemigroup) -> bool:
    return weak_order_witnesses(sub, "right") is not None


def _square_cancellables_in_subgroups(sub: SubSemigroup) -> bool:
    gd = green_data(sub.parent)
    return all(gd.in_subgroup(a) for a in square_cancellable_members(sub))


def is_left_order(sub: SubSemigroup) -> bool:
    """Weak left order whose square-cancellable elements lie in subgroups of Q."""
    return is_weak_left_order(sub) and _square_cancellables_in_subgroups(sub)


def is_right_order(sub: SubSemigroup) -> bool:
    return is_weak_right_order(sub) and _square_cancellables_in_subgroups(sub)


def is_order(sub: SubSemigroup) -> bool:
    return is_left_order(sub) and is_right_order(sub)


def is_straight_weak_left_order(sub: SubSemigroup) -> bool:
    return weak_order_witnesses(sub, "left", straight=True) is not None


def is_straight_weak_right_order(sub: SubSemigroup) -> bool:
    return weak_order_witnesses(sub, "right", straight=True) is not None


def is_straight_left_order(sub: SubSemigroup) -> bool:
    return is_left_order(sub) and is_straight_weak_left_order(sub)


def is_straight_right_order(sub: SubSemigroup) -> bool:
    return is_right_order(sub) and is_straight_weak_right_order(sub)


def _group_h_class_left_order(q_sg: FiniteSemigroup, h: frozenset[int], members: frozenset[int]) -> bool:
    inter = sorted(h & members)
    if not inter:
        return False
    quotients = set()
    for a in inter:
        a_sharp = group_inverse(q_sg, a)
        for b in inter:
            quotients.add(q_sg.mul(a_sharp, b))
    witness_form = quotients == set(h)
    # closed form for a finite group H: a subsemigroup is a subgroup, and a
    # subgroup is a left order in H exactly when it is all of H
    closed_form = set(inter) == set(h)
    if witness_form != closed_form:
        raise AssertionError(f"left-order-in-group oracles disagree on H-class {sorted(h)}")
    return witness_form


def is_local_left_order(sub: SubSemigroup) -> bool:
    """S ∩ H is a group-theoretic left order in H for every group H-class H."""
    gd = green_data(sub.parent)
    members = sub.member_set()
    return all(
        _group_h_class_left_order(sub.parent, h, members) for h in gd.group_H_classes
    )


def is_local_right_order(sub: SubSemigroup) -> bool:
    return is_local_left_order(opposite_sub(sub))


@dataclass(frozen=True)
class StraightnessStatus:
    """The three pairwise-equivalent conditions for S inside regular Q."""

    very_large_weak: bool
    straight_weak: bool
    very_large_local: bool

    def all_equal(self) -> bool:
        return self.very_large_weak == self.straight_weak == self.very_large_local


def straightness_status(sub: SubSemigroup, side: str = "left") -> StraightnessStatus:
    """Evaluate the three conditions independently; callers assert equivalence."""
    if not is_regular(sub.parent):
        raise NotRegular("straightness/locality equivalence requires a regular ambient semigroup")
    if side == "right":
        inner = straightness_status(opposite_sub(sub), "left")
        return inner
    vl = is_very_large(sub)
    return StraightnessStatus(
        very_large_weak=vl and is_weak_left_order(sub),
        straight_weak=is_straight_weak_left_order(sub),
        very_large_local=vl and is_local_left_order(sub),
    )


@dataclass(frozen=True)
class StraightenTrace:
    """Constructive straightening of w: picks e, s, (a, b), f, t and returns
    the straight witness pair (t*a*s, t*b)."""

    w: int
    e: int
    s: int
    a: int
    b: int
    f: int
    t: int
    left: int
    right: int

    def decomposition(self) -> QuotientDecomposition:
        return QuotientDecomposition(q=self.w, a=self.left, b=self.right, side="left", straight=True)


def straighten(sub: SubSemigroup, w: int) -> StraightenTrace:
    """Turn any quotient expression of w into a straight one, constructively.

    Requires S to behave as a very large weak left order in a regular Q;
    fails with a named step when a witness is missing.
    """
    q_sg = sub.parent
    gd = green_data(q_sg)
    members = sub.member_set()

    e = next((x for x in sorted(gd.idempotents) if gd.R.same_class(w, x)), None)
    if e is None:
        raise PreconditionFailed("pick-e", f"no idempotent is R-related to {w}")
    s = next((x for x in sorted(gd.H.class_of(e) & members)), None)
    if s is None:
        raise PreconditionFailed("pick-s", f"S misses the group H-class of {e}")
    sw = q_sg.mul(s, w)

    pair = None
    for a in sorted(members):
        if not gd.in_subgroup(a):
            continue
        a_sharp = group_inverse(q_sg, a)
        for b in sorted(members):
            if q_sg.mul(a_sharp, b) == sw and gd.leq_R.holds(b, a):
                pair = (a, b)
                break
        if pair:
            break
    if pair is None:
        raise PreconditionFailed("decompose-sw", f"no quotient witness with b <=_R a for {sw}")
    a, b = pair

    f = next((x for x in sorted(gd.idempotents) if gd.R.same_class(b, x)), None)
    if f is None:
        raise PreconditionFailed("pick-f", f"no idempotent is R-related to {b}")
    t = next(
        (x for x in sorted(gd.R.class_of(w) & gd.L.class_of(f) & members)), None
    )
    if t is None:
        raise PreconditionFailed("pick-t", "S misses the H-class R_w ∩ L_f")

    left = q_sg.product(t, a, s)
    right = q_sg.mul(t, b)
    trace = StraightenTrace(w=w, e=e, s=s, a=a, b=b, f=f, t=t, left=left, right=right)
    trace.decomposition().check(q_sg)
    return trace


def localize(sub: SubSemigroup, q: int) -> tuple[int, int]:
    """Witnesses inside S ∩ H for q in a group H-class H: q = (s*c*s)♯ (s*d)."""
    q_sg = sub.parent
    gd = green_data(q_sg)
    if not gd.in_subgroup(q):
        raise PreconditionFailed("localize", f"{q} is in no subgroup")
    h = gd.H.class_of(q)
    members = sub.member_set()
    s = next((x for x in sorted(h & members)), None)
    if s is None:
        raise PreconditionFailed("localize", f"S misses the group H-class of {q}")
    sq = q_sg.mul(s, q)
    pair = None
    for c in sorted(members):
        if not gd.in_subgroup(c):
            continue
        c_sharp = group_inverse(q_sg, c)
        for d in sorted(members):
            if q_sg.mul(c_sharp, d) == sq and gd.R.same_class(c, d):
                pair = (c, d)
                break
        if pair:
            break
    if pair is None:
        raise PreconditionFailed("localize", f"no straight witness for {sq}")
    c, d = pair
    a = q_sg.product(s, c, s)
    b = q_sg.mul(s, d)
    if a not in members or b not in members or a not in h or b not in h:
        raise PreconditionFailed("localize", "constructed witnesses left S ∩ H")
    if q_sg.mul(group_inverse(q_sg, a), b) != q:
        raise PreconditionFailed("localize", "constructed witnesses do not multiply back")
    return a, b


@dataclass(frozen=True)
class RhoStructure:
    """The R-classes below a within the D-class of q, with the action of a.

    `classes[i]` are frozensets of elements; `leq` is the inherited R-order
    on them; `phi[i]` is the index of the class of a*b for b in classes[i];
    phi is an order automorphism and `phi_order` its order as a permutation.
    """

    a: int
    q: int
    classes: tuple[frozenset[int], ...]
    leq: Relation
    phi: tuple[int, ...]
    phi_order: int


def _permutation_order(perm: tuple[int, ...]) -> int:
    order = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cur = perm[cur]
            length += 1
        lcm = order * length // _gcd(order, length)
        order = lcm
    return order


def _gcd(x: int, y: int) -> int:
    while y:
        x, y = y, x % y
    return x


def rho_structure(q_sg: FiniteSemigroup, a: int, q: int) -> RhoStructure:
    """Build {R_b : b D q, b <=_R a} with the multiplication-by-a map."""
    gd = green_data(q_sg)
    if not gd.in_subgroup(a):
        raise PreconditionFailed("rho", f"{a} is in no subgroup")
    if not gd.leq_R.holds(q, a):
        raise PreconditionFailed("rho", f"{q} is not <=_R {a}")
    pool = [b for b in q_sg.elements() if gd.D.same_class(b, q) and gd.leq_R.holds(b, a)]
    classes = sorted({gd.R.class_of(b) for b in pool}, key=min)
    index = {cls: i for i, cls in enumerate(classes)}
    reps = [min(cls) for cls in classes]
    leq = Relation.from_pairs(
        len(classes),
        (
            (i, j)
            for i in range(len(classes))
            for j in range(len(classes))
            if gd.leq_R.holds(reps[i], reps[j])
        ),
    )
    phi = []
    for rep in reps:
        img = gd.R.class_of(q_sg.mul(a, rep))
        if img not in index:
            raise PreconditionFailed("rho", f"a*{rep} leaves the structure")
        phi.append(index[img])
    if sorted(phi) != list(range(len(classes))):
        raise PreconditionFailed("rho", "multiplication by a is not a bijection on the classes")
    for i in range(len(classes)):
        for j in range(len(classes)):
            if leq.holds(i, j) != leq.holds(phi[i], phi[j]):
                raise PreconditionFailed("rho", "multiplication by a does not preserve the order")
    a_sharp = group_inverse(q_sg, a)
    psi = [index[gd.R.class_of(q_sg.mul(a_sharp, rep))] for rep in reps]
    if any(psi[phi[i]] != i for i in range(len(classes))):
        raise PreconditionFailed("rho", "the group inverse does not invert the action")
    return RhoStructure(
        a=a, q=q, classes=tuple(classes), leq=leq, phi=tuple(phi),
        phi_order=_permutation_order(tuple(phi)),
    )


@dataclass(frozen=True)
class PowerWitness:
    """k with q H a^k*b, where a^0*b is read as b."""

    k: int
    k_minimal: int


def power_h_witness(q_sg: FiniteSemigroup, q: int, a: int, b: int) -> PowerWitness:
    """From a quotient expression q = a♯b with b <=_R a, produce k >= 0 with
    q H a^k b; k comes from the order of the action of a, k_minimal by scan."""
    gd = green_data(q_sg)
    if not gd.in_subgroup(a):
        raise PreconditionFailed("power-witness", f"{a} is in no subgroup")
    if q_sg.mul(group_inverse(q_sg, a), b) != q:
        raise PreconditionFailed("power-witness", "q != a♯b")
    if not gd.leq_R.holds(b, a):
        raise PreconditionFailed("power-witness", f"{b} is not <=_R {a}")
    rho = rho_structure(q_sg, a, q)
    k = rho.phi_order - 1

    def a_pow_b(j: int) -> int:
        return b if j == 0 else q_sg.mul(q_sg.power(a, j), b)

    if not gd.H.same_class(q, a_pow_b(k)):
        raise AssertionError(f"a^{k}*b is not H-related to q; the action order is wrong")
    k_min = next(j for j in range(k + 1) if gd.H.same_class(q, a_pow_b(j)))
    return PowerWitness(k=k, k_minimal=k_min)


@dataclass(frozen=True)
class Criterion:
    hypothesis: bool
    conclusion: bool | None


@dataclass(frozen=True)
class CriteriaReport:
    """Sufficient conditions for a weak left order to be straight."""

    finite_orbit: Criterion
    finitely_many_r_classes: Criterion
    chain_r_classes: Criterion

    def sound(self) -> bool:
        return all(
            c.conclusion is not False
            for c in (self.finite_orbit, self.finitely_many_r_classes, self.chain_r_classes)
        )


def straightness_criteria(sub: SubSemigroup) -> CriteriaReport:
    """Evaluate each criterion's hypothesis on (S, Q); when one holds, check
    the straightness conclusion it forces.

    Every criterion carries a regular-Q hypothesis: all three route through
    the very-large/straight/local equivalence, which needs regularity. The
    order-3 monoid ((2,0,2),(0,1,2),(2,2,2)) is a weak left order in itself
    with no straight witness for element 0, so the hypothesis is not
    droppable even at this scale.
    """
    if not is_weak_left_order(sub):
        raise PreconditionFailed("criteria", "S is not a weak left order in Q")
    q_sg = sub.parent
    gd = green_data(q_sg)
    regular = is_regular(q_sg)

    # every q admits a witness with b <=_R a whose orbit structure is finite;
    # in a finite Q the only content is the existence of such a witness
    orbit_hyp = regular
    for target in q_sg.elements() if orbit_hyp else ():
        found = False
        for a in sorted(sub.members):
            if not gd.in_subgroup(a):
                continue
            a_sharp = group_inverse(q_sg, a)
            if any(
                q_sg.mul(a_sharp, b) == target and gd.leq_R.holds(b, a)
                for b in sorted(sub.members)
            ):
                found = True
                break
        if not found:
            orbit_hyp = False
            break

    finitely_many = regular  # Q is finite, so only regularity can fail

    chain_hyp = regular
    if chain_hyp:
        for d_class in gd.D.classes():
            r_classes = sorted({gd.R.class_of(x) for x in sorted(d_class)}, key=min)
            reps = [min(c) for c in r_classes]
            for i in reps:
                for j in reps:
                    if not (gd.leq_R.holds(i, j) or gd.leq_R.holds(j, i)):
                        chain_hyp = False
    straight = None
    if orbit_hyp or finitely_many or chain_hyp:
        straight = is_straight_weak_left_order(sub)
    return CriteriaReport(
        finite_orbit=Criterion(orbit_hyp, straight if orbit_hyp else None),
        finitely_many_r_classes=Criterion(finitely_many, straight if finitely_many else None),
        chain_r_classes=Criterion(chain_hyp, straight if chain_hyp else None),
    )
