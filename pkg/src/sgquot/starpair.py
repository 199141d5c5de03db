"""*-pairs: preorder pairs abstracting the Green preorders of an oversemigroup.

A *-pair on S is a pair (<=_l, <=_r) of preorders with <=_l right
compatible, <=_r left compatible, <=_l inside <=_L* and <=_r inside <=_R*.
L', R' are their equivalences, H' the intersection, G(S) the elements with
a H' a^2. The embeddability conditions (Ei)-(Evii), the order conditions
(Gi)-(Giv) with their specialisations (I) and (GI), and the derived
ideal structure D', <=_j, J' are all decided here by exhaustive scans.

Condition checks short-circuit but always record the first counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import FiniteSemigroup, SemigroupError, SubSemigroup
from .green import green_data, is_bisimple, is_simple
from .orders import PreconditionFailed
from .relations import Relation, left_compatible, right_compatible
from .starred import starred_data


class NotAPreorder(SemigroupError):
    pass


class AxiomViolated(SemigroupError):
    def __init__(self, which: str, witness: tuple[int, ...]):
        self.which = which
        self.witness = witness
        super().__init__(f"*-pair axiom {which} fails at {witness}")


@dataclass(frozen=True)
class Verdict:
    status: str  # "holds" | "fails" | "not-applicable"
    witness: tuple[int, ...] | None = None
    note: str | None = None

    @property
    def holds(self) -> bool:
        return self.status == "holds"


HOLDS = Verdict("holds")


def _fails(*witness: int, note: str | None = None) -> Verdict:
    return Verdict("fails", tuple(witness), note)


EMBED_KEYS = ("Ei", "Eii_l", "Eii_r", "Eiii", "Ev_l", "Ev_r", "Evi_l", "Evi_r", "Evii_l", "Evii_r")
ORDER_KEYS = ("Gi", "Gii", "Gii_dual", "Giii", "Giv")


@dataclass(frozen=True)
class StarPair:
    """A validated *-pair with its derived relations, on a dense-index S."""

    s: FiniteSemigroup
    leq_l: Relation
    leq_r: Relation
    Lp: Relation
    Rp: Relation
    Hp: Relation
    GS: frozenset[int]

    def elements(self) -> range:
        return self.s.elements()

    def hp_class(self, a: int) -> frozenset[int]:
        return self.Hp.class_of(a)

    def square_cancellable(self) -> frozenset[int]:
        return starred_data(self.s).square_cancellable


def make_star_pair(s: FiniteSemigroup, leq_l: Relation, leq_r: Relation) -> StarPair:
    """Validate the axioms and derive L', R', H' and G(S)."""
    if leq_l.n != s.order or leq_r.n != s.order:
        raise SemigroupError("relation size does not match the semigroup order")
    if not leq_l.is_preorder():
        raise NotAPreorder("the left component is not a preorder")
    if not leq_r.is_preorder():
        raise NotAPreorder("the right component is not a preorder")
    bad = right_compatible(leq_l, s.table)
    if bad is not None:
        raise AxiomViolated("leq_l right compatible", bad)
    bad = left_compatible(leq_r, s.table)
    if bad is not None:
        raise AxiomViolated("leq_r left compatible", bad)
    sd = starred_data(s)
    pair = leq_l.first_nonpair(sd.leq_Lstar)
    if pair is not None:
        raise AxiomViolated("leq_l contained in leq_L*", pair)
    pair = leq_r.first_nonpair(sd.leq_Rstar)
    if pair is not None:
        raise AxiomViolated("leq_r contained in leq_R*", pair)
    lp = leq_l.equivalence()
    rp = leq_r.equivalence()
    hp = lp & rp
    gs = frozenset(a for a in s.elements() if hp.same_class(a, s.mul(a, a)))
    return StarPair(s, leq_l, leq_r, lp, rp, hp, gs)


@lru_cache(maxsize=None)
def induced_star_pair(sub: SubSemigroup) -> StarPair:
    """Restrict the ambient Green preorders to S. Validity is guaranteed for
    any subsemigroup, so a validation failure here flags a bug."""
    gd = green_data(sub.parent)
    abstract, _ = sub.as_semigroup()
    leq_l = gd.leq_L.restrict(sub.members)
    leq_r = gd.leq_R.restrict(sub.members)
    return make_star_pair(abstract, leq_l, leq_r)


def starred_pair(s: FiniteSemigroup) -> StarPair:
    """The pair of starred preorders; a *-pair for any semigroup."""
    sd = starred_data(s)
    return make_star_pair(s, sd.leq_Lstar, sd.leq_Rstar)


def equality_pair(s: FiniteSemigroup) -> StarPair:
    """Equality in both components; trivially a *-pair."""
    ident = Relation.identity(s.order)
    return make_star_pair(s, ident, ident)


# ---------------------------------------------------------------- embeddability

def check_embeddable(p: StarPair) -> dict[str, Verdict]:
    """The embeddability conditions, each checked exhaustively."""
    out: dict[str, Verdict] = {}

    lr = p.Lp.compose(p.Rp)
    rl = p.Rp.compose(p.Lp)
    if lr == rl:
        out["Ei"] = HOLDS
    else:
        wit = lr.first_nonpair(rl) or rl.first_nonpair(lr)
        out["Ei"] = _fails(*wit)

    out["Eii_l"] = _check_eii(p, left=True)
    out["Eii_r"] = _check_eii(p, left=False)

    eiii = HOLDS
    for cls in p.Lp.classes():
        if not (cls & p.GS):
            eiii = _fails(min(cls), note="L'-class without an element of G(S)")
            break
    if eiii.holds:
        for cls in p.Rp.classes():
            if not (cls & p.GS):
                eiii = _fails(min(cls), note="R'-class without an element of G(S)")
                break
    out["Eiii"] = eiii

    out["Ev_l"] = _check_ev(p, left=True)
    out["Ev_r"] = _check_ev(p, left=False)
    out["Evi_l"] = _check_evi(p, left=True)
    out["Evi_r"] = _check_evi(p, left=False)
    out["Evii_l"] = _check_evii(p, left=True)
    out["Evii_r"] = _check_evii(p, left=False)
    return out


def _check_eii(p: StarPair, left: bool) -> Verdict:
    s = p.s
    rng = range(s.order)
    leq = p.leq_l if left else p.leq_r
    eq = p.Lp if left else p.Rp
    for b in rng:
        for c in rng:
            witnessed = any(
                eq.same_class(b, s.mul(d, c) if left else s.mul(c, d)) for d in rng
            )
            if leq.holds(b, c) and not witnessed:
                return _fails(b, c, note="no witness d")
            if witnessed and not leq.holds(b, c):
                return _fails(b, c, note="witness without the inequality")
    return HOLDS


def _check_ev(p: StarPair, left: bool) -> Verdict:
    s = p.s
    leq = p.leq_l if left else p.leq_r
    eq = p.Rp if left else p.Lp
    for a in sorted(p.GS):
        for b in range(s.order):
            if not leq.holds(b, a):
                continue
            prod = s.mul(b, a) if left else s.mul(a, b)
            if not eq.same_class(prod, b):
                return _fails(a, b)
    return HOLDS


def _check_evi(p: StarPair, left: bool) -> Verdict:
    s = p.s
    leq = p.leq_l if left else p.leq_r
    for a in sorted(p.GS):
        below = [b for b in range(s.order) if leq.holds(b, a)]
        for b in below:
            for c in below:
                if b == c:
                    continue
                if left and s.mul(b, a) == s.mul(c, a):
                    return _fails(a, b, c)
                if not left and s.mul(a, b) == s.mul(a, c):
                    return _fails(a, b, c)
    return HOLDS


def _check_evii(p: StarPair, left: bool) -> Verdict:
    s = p.s
    leq = p.leq_l if left else p.leq_r
    eq = p.Lp if left else p.Rp
    for a in sorted(p.GS):
        below = [b for b in range(s.order) if leq.holds(b, a)]
        for b in below:
            for c in below:
                if left:
                    rel = eq.same_class(s.mul(b, a), s.mul(c, a))
                else:
                    rel = eq.same_class(s.mul(a, b), s.mul(a, c))
                if rel and not eq.same_class(b, c):
                    return _fails(a, b, c)
    return HOLDS


def is_embeddable(report: dict[str, Verdict]) -> bool:
    return all(report[k].holds for k in EMBED_KEYS)


# ------------------------------------------------------------- order conditions

def check_order_conditions(p: StarPair) -> dict[str, Verdict]:
    """(Gi), (Gii) and its dual, (Giii), (Giv)."""
    s = p.s
    rng = range(s.order)
    ss = p.square_cancellable()
    out: dict[str, Verdict] = {}

    if ss == p.GS:
        out["Gi"] = HOLDS
    else:
        wit = min(ss.symmetric_difference(p.GS))
        out["Gi"] = _fails(wit, note="S(S) and G(S) differ here")

    out["Gii"] = _check_gii(p, ss, right=True)
    out["Gii_dual"] = _check_gii(p, ss, right=False)
    out["Giii"] = _check_giii(p, ss)
    out["Giv"] = _check_giv(p, ss)
    return out


def _check_gii(p: StarPair, ss: frozenset[int], right: bool) -> Verdict:
    """H'-classes of square-cancellable elements are (right/left) reversible,
    with products taken inside the class; an unclosed class is flagged
    not-applicable rather than failed."""
    s = p.s
    not_closed: tuple[int, ...] | None = None
    for a in sorted(ss):
        cls = sorted(p.hp_class(a))
        cset = set(cls)
        closed = all(s.mul(x, y) in cset for x in cls for y in cls)
        if not closed:
            if not_closed is None:
                not_closed = (a,)
            continue
        for x in cls:
            for y in cls:
                if right:
                    px = {s.mul(t, x) for t in cls}
                    py = {s.mul(t, y) for t in cls}
                else:
                    px = {s.mul(x, t) for t in cls}
                    py = {s.mul(y, t) for t in cls}
                if not (px & py):
                    return _fails(a, x, y, note="reversibility fails in this H'-class")
    if not_closed is not None:
        return Verdict("not-applicable", not_closed, "H'-class not closed under products")
    return HOLDS


def _check_giii(p: StarPair, ss: frozenset[int]) -> Verdict:
    s = p.s
    rng = range(s.order)
    for b in rng:
        for c in rng:
            witnessed = False
            for h in sorted(ss):
                if not p.leq_r.holds(b, h):
                    continue
                for k in rng:
                    if p.Rp.same_class(h, k) and s.mul(h, b) == s.mul(k, c):
                        witnessed = True
                        break
                if witnessed:
                    break
            if p.leq_l.holds(b, c) and not witnessed:
                return _fails(b, c, note="no (h, k) witness")
            if witnessed and not p.leq_l.holds(b, c):
                return _fails(b, c, note="witness without the inequality")
    return HOLDS


def _check_giv(p: StarPair, ss: frozenset[int]) -> Verdict:
    s = p.s
    rng = range(s.order)
    ss_sorted = sorted(ss)
    for a in ss_sorted:
        a2 = s.mul(a, a)
        for c in ss_sorted:
            c2 = s.mul(c, c)
            for b in rng:
                if not p.Rp.same_class(a, b):
                    continue
                bc = s.mul(b, c)
                kbc_target = None
                found = False
                for u in ss_sorted:
                    if not p.leq_r.holds(u, a):
                        continue
                    if not p.Rp.same_class(s.mul(a, u), bc):
                        continue
                    ua = s.mul(u, a)
                    for h in ss_sorted:
                        if not p.Rp.same_class(h, u):
                            continue
                        hua = s.mul(h, ua)
                        for k in rng:
                            if not p.Rp.same_class(k, u) or not p.leq_l.holds(k, a):
                                continue
                            if hua != s.mul(k, a2):
                                continue
                            kbc = s.mul(k, bc)
                            for v in rng:
                                if not p.Rp.same_class(v, u) or not p.leq_l.holds(v, c):
                                    continue
                                if s.product(h, v, c2) == kbc:
                                    found = True
                                    break
                            if found:
                                break
                        if found:
                            break
                    if found:
                        break
                if not found:
                    return _fails(a, c, b, note="no (u, h, v, k) witness")
    return HOLDS


def check_inverse_condition(p: StarPair) -> Verdict:
    """(I): R'- or L'-related elements of G(S) are already H'-related."""
    for a in sorted(p.GS):
        for h in sorted(p.GS):
            if p.Rp.same_class(a, h) and not p.Hp.same_class(a, h):
                return _fails(a, h, note="R'-related but not H'-related in G(S)")
            if p.Lp.same_class(a, h) and not p.Hp.same_class(a, h):
                return _fails(a, h, note="L'-related but not H'-related in G(S)")
    return HOLDS


def check_completely_regular_condition(p: StarPair) -> Verdict:
    """(GI): G(S) is all of S."""
    if p.GS == frozenset(p.elements()):
        return HOLDS
    wit = min(frozenset(p.elements()) - p.GS)
    return _fails(wit, note="element outside G(S)")


# ------------------------------------------------------ structural consequences

def _require(p: StarPair, report: dict[str, Verdict], keys: tuple[str, ...]) -> None:
    missing = [k for k in keys if not report[k].holds]
    if missing:
        raise PreconditionFailed("star-pair-conditions", f"conditions {missing} do not hold")


def h_class_laws(p: StarPair) -> tuple[str, tuple[int, ...]] | None:
    """Under (Ev): products against G(S) stay in the H'-class, and the
    H'-class of an element of G(S) is a subsemigroup inside G(S)."""
    emb = check_embeddable(p)
    _require(p, emb, ("Ev_l", "Ev_r"))
    s = p.s
    for a in sorted(p.GS):
        for b in range(s.order):
            if p.Lp.same_class(a, b) and not p.Hp.same_class(s.mul(b, a), b):
                return ("ba-not-Hp-b", (a, b))
            if p.Rp.same_class(a, b) and not p.Hp.same_class(s.mul(a, b), b):
                return ("ab-not-Hp-b", (a, b))
        cls = sorted(p.hp_class(a))
        for x in cls:
            for y in cls:
                if s.mul(x, y) not in set(cls):
                    return ("hp-class-not-closed", (a, x, y))
        if not p.hp_class(a) <= p.GS:
            return ("hp-class-outside-GS", (a,))
    return None


def greens_composition_law(p: StarPair) -> tuple[int, int, int] | None:
    """Under (Ev): u L' s R' v with s in G(S) forces u R' uv L' v."""
    emb = check_embeddable(p)
    _require(p, emb, ("Ev_l", "Ev_r"))
    s = p.s
    rng = range(s.order)
    for mid in sorted(p.GS):
        for u in rng:
            if not p.Lp.same_class(u, mid):
                continue
            for v in rng:
                if not p.Rp.same_class(mid, v):
                    continue
                uv = s.mul(u, v)
                if not (p.Rp.same_class(u, uv) and p.Lp.same_class(uv, v)):
                    return (u, mid, v)
    return None


def translation_law(p: StarPair) -> tuple[int, int, str] | None:
    """Under (Eii): q in G(S), q <=_r p forces qp R' q; dually on the left."""
    emb = check_embeddable(p)
    _require(p, emb, ("Eii_l", "Eii_r"))
    s = p.s
    for q in sorted(p.GS):
        for x in range(s.order):
            if p.leq_r.holds(q, x) and not p.Rp.same_class(s.mul(q, x), q):
                return (q, x, "right")
            if p.leq_l.holds(q, x) and not p.Lp.same_class(s.mul(x, q), q):
                return (q, x, "left")
    return None


_FACTOR_PRE = ("Ei", "Eii_l", "Eii_r", "Eiii", "Ev_l", "Ev_r", "Evi_l")


def factor_witness_preconditions(p: StarPair) -> bool:
    emb = check_embeddable(p)
    cond = check_order_conditions(p)
    return all(emb[k].holds for k in _FACTOR_PRE) and cond["Gii"].holds


def factor_witness(p: StarPair, b: int, c: int) -> tuple[int, int] | None:
    """When b <=_l c, a pair (h, k) with h in G(S), h R' k R' b and hb = kc.

    Existence is guaranteed under the preconditions, so a missing witness
    raises; conversely a returned pair certifies b <=_l c.
    """
    if not factor_witness_preconditions(p):
        raise PreconditionFailed("factor-witness", "required conditions do not hold")
    s = p.s
    if not p.leq_l.holds(b, c):
        return None
    for h in sorted(p.GS):
        if not p.Rp.same_class(h, b):
            continue
        for k in range(s.order):
            if p.Rp.same_class(k, b) and s.mul(h, b) == s.mul(k, c):
                return (h, k)
    raise AssertionError(f"no factor witness for {b} <=_l {c}; this falsifies the theory")


def factor_witness_equivalence(p: StarPair) -> tuple[int, int] | None:
    """Exhaustive check that b <=_l c holds exactly when a witness exists."""
    if not factor_witness_preconditions(p):
        raise PreconditionFailed("factor-witness", "required conditions do not hold")
    s = p.s
    rng = range(s.order)
    for b in rng:
        for c in rng:
            witness = None
            for h in sorted(p.GS):
                if not p.Rp.same_class(h, b):
                    continue
                for k in rng:
                    if p.Rp.same_class(k, b) and s.mul(h, b) == s.mul(k, c):
                        witness = (h, k)
                        break
                if witness:
                    break
            if (witness is not None) != p.leq_l.holds(b, c):
                return (b, c)
    return None


def compat_redundancy_check(p: StarPair) -> bool:
    """(Evii)(l) is implied by (Ei), (Eii), (Eiii), (Ev), (Evi)(l) and (Gii);
    verify it concretely. A False return falsifies the theory."""
    emb = check_embeddable(p)
    cond = check_order_conditions(p)
    _require(p, emb, _FACTOR_PRE)
    if not cond["Gii"].holds:
        raise PreconditionFailed("compat-redundancy", "(Gii) does not hold")
    return _check_evii(p, left=True).holds


# ------------------------------------------------------------- derived ideals

@dataclass(frozen=True)
class JStructure:
    """D' as the join of L' and R', the preorder <=_j and its equivalence J'."""

    pair: StarPair
    Dp: Relation
    leq_j: Relation
    Jp: Relation

    def j_ideal(self, b: int) -> frozenset[int]:
        return frozenset(x for x in self.pair.elements() if self.leq_j.holds(x, b))

    def strict_ideal(self, b: int) -> frozenset[int]:
        return frozenset(
            x for x in self.pair.elements()
            if self.leq_j.holds(x, b) and not self.leq_j.holds(b, x)
        )

    def principal_factor(self, b: int) -> FiniteSemigroup:
        """Rees quotient of the <=_j ideal of b by its strict part."""
        s = self.pair.s
        j_class = sorted(self.Jp.class_of(b))
        members = set(j_class)
        below = self.strict_ideal(b)
        if not below:
            closed = all(s.mul(x, y) in members for x in j_class for y in j_class)
            if closed:
                rows = [[j_class.index(s.mul(x, y)) for y in j_class] for x in j_class]
                return FiniteSemigroup(rows, [s.labels[x] for x in j_class])
        zero = len(j_class)
        rows = []
        for x in j_class:
            row = []
            for y in j_class:
                prod = s.mul(x, y)
                row.append(j_class.index(prod) if prod in members else zero)
            row.append(zero)
            rows.append(row)
        rows.append([zero] * (zero + 1))
        return FiniteSemigroup(rows, [s.labels[x] for x in j_class] + ["0"])


def derived_j_structure(p: StarPair) -> JStructure:
    """Requires (Ei), (Eii), (Eiii), (Ev). Validates that the join equals the
    composite, that <=_j is a preorder and that every j-ideal is an ideal."""
    emb = check_embeddable(p)
    _require(p, emb, ("Ei", "Eii_l", "Eii_r", "Eiii", "Ev_l", "Ev_r"))
    s = p.s
    rng = range(s.order)
    dp = (p.Lp | p.Rp).transitive_closure()
    if dp != p.Lp.compose(p.Rp):
        raise AssertionError("D' is not L'∘R' despite (Ei); this falsifies the theory")
    leq_j = Relation.from_pairs(
        s.order,
        (
            (a, b)
            for a in rng
            for b in rng
            if any(dp.same_class(a, s.product(x, b, y)) for x in rng for y in rng)
        ),
    )
    if not leq_j.is_preorder():
        raise AssertionError("<=_j is not a preorder; this falsifies the theory")
    jp = leq_j.equivalence()
    if not dp <= jp:
        raise AssertionError("D' is not below J'; this falsifies the theory")
    js = JStructure(p, dp, leq_j, jp)
    for b in rng:
        ideal = js.j_ideal(b)
        if b not in ideal:
            raise AssertionError(f"the j-ideal of {b} misses {b}")
        for x in sorted(ideal):
            for t in rng:
                if s.mul(t, x) not in ideal or s.mul(x, t) not in ideal:
                    raise AssertionError(f"the j-ideal of {b} is not an ideal")
    return js


# ------------------------------------------------- checks against an ambient Q

@dataclass(frozen=True)
class StraightOrderConsequences:
    """What must follow when S is a straight left order in Q."""

    applies: bool
    embeddable: bool | None = None
    conditions: dict[str, Verdict] | None = None

    def verified(self) -> bool:
        if not self.applies:
            return True
        assert self.conditions is not None
        return bool(self.embeddable) and all(
            self.conditions[k].holds for k in ("Gi", "Gii", "Giii", "Giv")
        )


def straight_order_consequences(sub: SubSemigroup) -> StraightOrderConsequences:
    """If S is a straight left order in Q, the induced pair must be embeddable
    and satisfy (Gi), (Gii); (Giii), (Giv) then come for free."""
    from .orders import is_straight_left_order

    if not is_straight_left_order(sub):
        return StraightOrderConsequences(applies=False)
    p = induced_star_pair(sub)
    emb = check_embeddable(p)
    cond = check_order_conditions(p)
    return StraightOrderConsequences(
        applies=True, embeddable=is_embeddable(emb), conditions=cond
    )


@dataclass(frozen=True)
class SemisimpleReport:
    completely_semisimple: bool
    trace_condition: bool
    chain_condition: bool
    chain_note: str
    restrictions_agree: bool
    simple_iff_jp_full: bool
    bisimple_iff_dp_full: bool

    def consistent(self) -> bool:
        return (
            self.completely_semisimple == self.trace_condition == self.chain_condition
            and self.restrictions_agree
            and self.simple_iff_jp_full
            and self.bisimple_iff_dp_full
        )


def semisimple_characterization(sub: SubSemigroup) -> SemisimpleReport:
    """For a straight left order S in Q with embeddable induced pair:
    complete semisimplicity of Q against the J'-trace condition and the
    chain conditions, plus the restriction identities for D, <=_J, J and
    the simplicity correspondences."""
    from .green import is_completely_semisimple
    from .orders import is_straight_left_order

    if not is_straight_left_order(sub):
        raise PreconditionFailed("semisimple", "S is not a straight left order in Q")
    p = induced_star_pair(sub)
    emb = check_embeddable(p)
    if not is_embeddable(emb):
        raise PreconditionFailed("semisimple", "the induced pair is not embeddable")
    js = derived_j_structure(p)
    s = p.s
    rng = range(s.order)

    cs = is_completely_semisimple(sub.parent)

    trace = True
    for a in rng:
        for b in rng:
            ab = s.mul(a, b)
            if js.Jp.same_class(a, ab) and not p.Rp.same_class(a, ab):
                trace = False
            ba = s.mul(b, a)
            if js.Jp.same_class(a, ba) and not p.Lp.same_class(a, ba):
                trace = False

    # finite S: every descending chain of R'- or L'-classes stabilises
    chain = True
    chain_note = "finite instance: descending chain conditions hold automatically"

    gd = green_data(sub.parent)
    restrictions = (
        gd.D.restrict(sub.members) == js.Dp
        and gd.leq_J.restrict(sub.members) == js.leq_j
        and gd.J.restrict(sub.members) == js.Jp
    )

    full = Relation.full(s.order)
    simple_iff = is_simple(sub.parent) == (js.Jp == full)
    bisimple_iff = is_bisimple(sub.parent) == (js.Dp == full)

    return SemisimpleReport(
        completely_semisimple=cs,
        trace_condition=trace,
        chain_condition=chain,
        chain_note=chain_note,
        restrictions_agree=restrictions,
        simple_iff_jp_full=simple_iff,
        bisimple_iff_dp_full=bisimple_iff,
    )


@dataclass(frozen=True)
class SpecialisationReport:
    """Directions of the inverse / completely regular specialisations that
    are decidable from a supplied ambient semigroup."""

    straight: bool
    ambient_property: bool
    conditions_hold: bool | None
    forward_ok: bool
    converse_ok: bool | None


def inverse_specialisation(sub: SubSemigroup) -> SpecialisationReport:
    """Straight left order in an inverse Q forces (I); with (I) in hand the
    supplied Q must itself be inverse. The converse is reported, not asserted."""
    from .green import is_inverse
    from .orders import is_straight_left_order

    straight = is_straight_left_order(sub)
    inv = is_inverse(sub.parent)
    cond: bool | None = None
    forward_ok = True
    converse_ok: bool | None = None
    if straight:
        p = induced_star_pair(sub)
        oc = check_order_conditions(p)
        cond = check_inverse_condition(p).holds and oc["Gi"].holds and oc["Gii"].holds
        if inv:
            forward_ok = cond
        converse_ok = (not cond) or inv
    return SpecialisationReport(straight, inv, cond, forward_ok, converse_ok)


def completely_regular_specialisation(sub: SubSemigroup) -> SpecialisationReport:
    """Straight left order in a completely regular Q forces (GI) and (Gii);
    conversely those conditions force the supplied Q to be completely regular."""
    from .green import is_completely_regular
    from .orders import is_straight_left_order

    straight = is_straight_left_order(sub)
    creg = is_completely_regular(sub.parent)
    cond: bool | None = None
    forward_ok = True
    converse_ok: bool | None = None
    if straight:
        p = induced_star_pair(sub)
        oc = check_order_conditions(p)
        cond = check_completely_regular_condition(p).holds and oc["Gii"].holds
        if creg:
            forward_ok = cond
        converse_ok = (not cond) or creg
    return SpecialisationReport(straight, creg, cond, forward_ok, converse_ok)
