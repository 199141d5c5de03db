"""Exhaustive verification suites over enumerated universes and fixtures.

Each suite quantifies one structural statement over every applicable
instance (a semigroup Q, usually with every subsemigroup S of it) and
collects concrete counterexamples; an empty failure list means the
statement survived the universe. Work items can be distributed over
processes; QKIT_THREADS caps the worker count and results are merged
deterministically by input digest.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Iterable

from .core import FiniteSemigroup, NotClosed, SubSemigroup, enumerate_semigroups
from .fixtures import fixture_semigroups
from .green import (
    check_green_subgroup_laws,
    completely_semisimple_via_factors,
    completely_semisimple_via_trace,
    green_data,
    group_h_classes_by_idempotent,
    group_h_classes_by_square,
    is_regular,
)
from .orders import (
    is_straight_weak_left_order,
    is_straight_weak_right_order,
    is_very_large,
    is_weak_left_order,
    localize,
    straighten,
    straightness_criteria,
    straightness_status,
)
from .relations import left_compatible, right_compatible
from .starpair import (
    StarPair,
    check_embeddable,
    check_order_conditions,
    compat_redundancy_check,
    completely_regular_specialisation,
    equality_pair,
    factor_witness_equivalence,
    factor_witness_preconditions,
    greens_composition_law,
    h_class_laws,
    induced_star_pair,
    inverse_specialisation,
    semisimple_characterization,
    starred_pair,
    straight_order_consequences,
    translation_law,
)
from .starred import check_star_restriction, starred_data


@dataclass
class SuiteOutcome:
    name: str
    instances: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    notes: list[dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "SuiteOutcome") -> None:
        self.instances += other.instances
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)

    def sort(self) -> None:
        self.failures.sort(key=lambda f: (f.get("digest", ""), str(f)))
        self.notes.sort(key=lambda f: (f.get("digest", ""), str(f)))


def all_subsemigroups(q: FiniteSemigroup) -> list[SubSemigroup]:
    """Every nonempty multiplicatively closed subset."""
    out = []
    elements = list(q.elements())
    for size in range(1, q.order + 1):
        for subset in combinations(elements, size):
            try:
                out.append(SubSemigroup(q, subset))
            except NotClosed:
                continue
    return out


def enumerated_universe(max_order: int) -> list[FiniteSemigroup]:
    out: list[FiniteSemigroup] = []
    for n in range(1, max_order + 1):
        enumerate_semigroups(n, out.append)
    return out


def _fail(q: FiniteSemigroup, **info: Any) -> dict[str, Any]:
    from .reports import table_digest

    return {"digest": table_digest(q), "order": q.order, **info}


def _sub_label(sub: SubSemigroup) -> list[str]:
    return [sub.parent.labels[m] for m in sub.members]


# ------------------------------------------------------------------- suites

def _suite_green_laws(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    """Green preorder/subgroup interaction laws hold elementwise."""
    out.instances += 1
    violation = check_green_subgroup_laws(q)
    if violation is not None:
        out.failures.append(_fail(q, law=violation.law, witness=list(violation.witness)))


def _suite_preorder_compat(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    """Compatibility and containment laws for the Green and starred preorders."""
    gd = green_data(q)
    out.instances += 1
    if right_compatible(gd.leq_L, q.table) is not None:
        out.failures.append(_fail(q, law="leq_L right compatible"))
    if left_compatible(gd.leq_R, q.table) is not None:
        out.failures.append(_fail(q, law="leq_R left compatible"))
    sd = starred_data(q)
    if right_compatible(sd.leq_Lstar, q.table) is not None:
        out.failures.append(_fail(q, law="leq_L* right compatible"))
    if left_compatible(sd.leq_Rstar, q.table) is not None:
        out.failures.append(_fail(q, law="leq_R* left compatible"))
    if not (gd.leq_L <= sd.leq_Lstar and gd.leq_R <= sd.leq_Rstar):
        out.failures.append(_fail(q, law="green preorders inside starred preorders"))
    if not gd.D <= gd.J:
        out.failures.append(_fail(q, law="D inside J"))


def _suite_star_restriction(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    """Ambient Green preorders refine the starred preorders of a subsemigroup."""
    for sub in all_subsemigroups(q):
        out.instances += 1
        violation = check_star_restriction(sub)
        if violation is not None:
            out.failures.append(_fail(q, sub=_sub_label(sub), witness=list(violation)))


def _suite_straightness_equivalence(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    """very-large weak, straight weak and very-large local orders coincide in regular Q."""
    if not is_regular(q):
        return
    for sub in all_subsemigroups(q):
        for side in ("left", "right"):
            out.instances += 1
            status = straightness_status(sub, side)
            if not status.all_equal():
                out.failures.append(
                    _fail(q, sub=_sub_label(sub), side=side, status=vars(status))
                )


def _suite_finite_straightness(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    """In a finite regular ambient semigroup every weak left order is straight."""
    if not is_regular(q):
        return
    for sub in all_subsemigroups(q):
        if not is_weak_left_order(sub):
            continue
        out.instances += 1
        if not is_straight_weak_left_order(sub):
            out.failures.append(_fail(q, sub=_sub_label(sub)))
            continue
        report = straightness_criteria(sub)
        if not report.sound():
            out.failures.append(_fail(q, sub=_sub_label(sub), criteria=str(report)))


def _suite_constructive_straightening(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    """straighten() and localize() must succeed and validate on every
    applicable instance."""
    if not is_regular(q):
        return
    gd = green_data(q)
    for sub in all_subsemigroups(q):
        if not (is_very_large(sub) and is_weak_left_order(sub)):
            continue
        for w in q.elements():
            out.instances += 1
            try:
                straighten(sub, w)
            except Exception as exc:  # noqa: BLE001 - collected as counterexample
                out.failures.append(_fail(q, sub=_sub_label(sub), w=q.labels[w], op="straighten", error=str(exc)))
        if is_straight_weak_left_order(sub):
            for target in sorted(gd.subgroup_elements()):
                out.instances += 1
                try:
                    localize(sub, target)
                except Exception as exc:  # noqa: BLE001
                    out.failures.append(_fail(q, sub=_sub_label(sub), q_elt=q.labels[target], op="localize", error=str(exc)))


def _suite_abelian_symmetry(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    """With abelian subgroups, straight weak left and right orders coincide."""
    if not is_regular(q):
        return
    gd = green_data(q)
    for h in gd.group_H_classes:
        hs = sorted(h)
        if any(q.mul(a, b) != q.mul(b, a) for a in hs for b in hs):
            return
    for sub in all_subsemigroups(q):
        out.instances += 1
        if is_straight_weak_left_order(sub) != is_straight_weak_right_order(sub):
            out.failures.append(_fail(q, sub=_sub_label(sub)))


def _suite_h_congruence_straightness(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    """When H is a congruence on regular Q, weak left orders are straight."""
    if not is_regular(q):
        return
    gd = green_data(q)
    for a in q.elements():
        for b in q.elements():
            if not gd.H.same_class(a, b):
                continue
            for x in q.elements():
                if not gd.H.same_class(q.mul(x, a), q.mul(x, b)):
                    return
                if not gd.H.same_class(q.mul(a, x), q.mul(b, x)):
                    return
    for sub in all_subsemigroups(q):
        if not is_weak_left_order(sub):
            continue
        out.instances += 1
        if not is_straight_weak_left_order(sub):
            out.failures.append(_fail(q, sub=_sub_label(sub)))


def _suite_induced_embeddable(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    """The pair induced on a very large subsemigroup of regular Q satisfies
    every embeddability condition."""
    if not is_regular(q):
        return
    for sub in all_subsemigroups(q):
        if not is_very_large(sub):
            continue
        out.instances += 1
        report = check_embeddable(induced_star_pair(sub))
        bad = {k: v for k, v in report.items() if not v.holds}
        if bad:
            out.failures.append(
                _fail(q, sub=_sub_label(sub), conditions={k: v.status for k, v in bad.items()})
            )


def _suite_straight_order_conditions(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    """Straight left orders induce embeddable pairs satisfying every order condition."""
    for sub in all_subsemigroups(q):
        soc = straight_order_consequences(sub)
        if not soc.applies:
            continue
        out.instances += 1
        if not soc.verified():
            assert soc.conditions is not None
            out.failures.append(
                _fail(
                    q, sub=_sub_label(sub), embeddable=soc.embeddable,
                    conditions={k: v.status for k, v in soc.conditions.items()},
                )
            )


def _qualifying_pairs(q: FiniteSemigroup) -> Iterable[tuple[str, StarPair]]:
    yield "starred", starred_pair(q)
    yield "equality", equality_pair(q)
    for sub in all_subsemigroups(q):
        yield f"induced:{','.join(_sub_label(sub))}", induced_star_pair(sub)


def _suite_factor_witness(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    """b <=_l c holds exactly when an (h, k) factor witness exists, on every
    pair meeting the preconditions."""
    for tag, pair in _qualifying_pairs(q):
        if not factor_witness_preconditions(pair):
            continue
        out.instances += 1
        bad = factor_witness_equivalence(pair)
        if bad is not None:
            out.failures.append(_fail(q, pair=tag, witness=list(bad)))


def _suite_compat_redundancy(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    for tag, pair in _qualifying_pairs(q):
        if not factor_witness_preconditions(pair):
            continue
        out.instances += 1
        if not compat_redundancy_check(pair):
            out.failures.append(_fail(q, pair=tag))


def _suite_translation_law(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    for tag, pair in _qualifying_pairs(q):
        emb = check_embeddable(pair)
        if not (emb["Eii_l"].holds and emb["Eii_r"].holds):
            continue
        out.instances += 1
        bad = translation_law(pair)
        if bad is not None:
            out.failures.append(_fail(q, pair=tag, witness=list(bad)))


def _suite_h_class_laws(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    for tag, pair in _qualifying_pairs(q):
        emb = check_embeddable(pair)
        if not (emb["Ev_l"].holds and emb["Ev_r"].holds):
            continue
        out.instances += 1
        bad = h_class_laws(pair)
        if bad is not None:
            out.failures.append(_fail(q, pair=tag, law=bad[0], witness=list(bad[1])))
        bad2 = greens_composition_law(pair)
        if bad2 is not None:
            out.failures.append(_fail(q, pair=tag, law="composition", witness=list(bad2)))


def _suite_inverse_specialisation(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    """Straight left orders in inverse ambient semigroups satisfy condition (I)."""
    for sub in all_subsemigroups(q):
        rep = inverse_specialisation(sub)
        if not rep.straight:
            continue
        out.instances += 1
        if not rep.forward_ok:
            out.failures.append(_fail(q, sub=_sub_label(sub), direction="forward"))
        if rep.converse_ok is False:
            out.notes.append(_fail(q, sub=_sub_label(sub), direction="converse"))


def _suite_completely_regular_specialisation(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    """(GI)+(Gii) characterise straight left orders in completely regular ambients."""
    for sub in all_subsemigroups(q):
        rep = completely_regular_specialisation(sub)
        if not rep.straight:
            continue
        out.instances += 1
        if not rep.forward_ok:
            out.failures.append(_fail(q, sub=_sub_label(sub), direction="forward"))
        if rep.converse_ok is False:
            out.failures.append(_fail(q, sub=_sub_label(sub), direction="converse"))


def _suite_two_sided_condition(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    """A straight left order is also a straight right order exactly when the
    H'-classes of square-cancellable elements are left reversible."""
    from .orders import is_straight_left_order, is_straight_right_order

    for sub in all_subsemigroups(q):
        if not is_straight_left_order(sub):
            continue
        pair = induced_star_pair(sub)
        cond = check_order_conditions(pair)
        if cond["Gii_dual"].status == "not-applicable":
            continue
        out.instances += 1
        if is_straight_right_order(sub) != cond["Gii_dual"].holds:
            out.failures.append(
                _fail(q, sub=_sub_label(sub), gii_dual=cond["Gii_dual"].status,
                      straight_right=is_straight_right_order(sub))
            )


def _suite_semisimple(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    """Complete semisimplicity matches the J'-trace and chain conditions."""
    for sub in all_subsemigroups(q):
        soc = straight_order_consequences(sub)
        if not (soc.applies and soc.verified()):
            continue
        out.instances += 1
        rep = semisimple_characterization(sub)
        if not rep.consistent():
            out.failures.append(_fail(q, sub=_sub_label(sub), report=vars(rep)))


def _suite_oracle_redundancy(q: FiniteSemigroup, out: SuiteOutcome) -> None:
    """Redundant implementations of group-H detection and semisimplicity agree."""
    out.instances += 1
    if group_h_classes_by_idempotent(q) != group_h_classes_by_square(q):
        out.failures.append(_fail(q, oracle="group-h-class"))
    if is_regular(q):
        if completely_semisimple_via_factors(q) != completely_semisimple_via_trace(q):
            out.failures.append(_fail(q, oracle="completely-semisimple"))


SUITES: dict[str, Callable[[FiniteSemigroup, SuiteOutcome], None]] = {
    "green-laws": _suite_green_laws,
    "preorder-compat": _suite_preorder_compat,
    "star-restriction": _suite_star_restriction,
    "straightness-equivalence": _suite_straightness_equivalence,
    "finite-straightness": _suite_finite_straightness,
    "constructive-straightening": _suite_constructive_straightening,
    "abelian-symmetry": _suite_abelian_symmetry,
    "h-congruence-straightness": _suite_h_congruence_straightness,
    "induced-embeddable": _suite_induced_embeddable,
    "straight-order-conditions": _suite_straight_order_conditions,
    "factor-witness": _suite_factor_witness,
    "compat-redundancy": _suite_compat_redundancy,
    "translation-law": _suite_translation_law,
    "h-class-laws": _suite_h_class_laws,
    "inverse-specialisation": _suite_inverse_specialisation,
    "completely-regular-specialisation": _suite_completely_regular_specialisation,
    "two-sided-condition": _suite_two_sided_condition,
    "semisimple": _suite_semisimple,
    "oracle-redundancy": _suite_oracle_redundancy,
}


def worker_count() -> int:
    raw = os.environ.get("QKIT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_chunk(tables: list[tuple[tuple[int, ...], ...]], suites: tuple[str, ...]) -> dict[str, SuiteOutcome]:
    outcomes = {name: SuiteOutcome(name) for name in suites}
    for table in tables:
        q = FiniteSemigroup(table)
        for name in suites:
            SUITES[name](q, outcomes[name])
    return outcomes


def run_suites(
    semigroups: list[FiniteSemigroup], suites: Iterable[str] | None = None, threads: int | None = None
) -> dict[str, SuiteOutcome]:
    names = tuple(suites) if suites else tuple(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {unknown}; available: {sorted(SUITES)}")
    threads = worker_count() if threads is None else max(1, threads)
    outcomes = {name: SuiteOutcome(name) for name in names}
    if threads == 1 or len(semigroups) < 4:
        for q in semigroups:
            for name in names:
                SUITES[name](q, outcomes[name])
    else:
        tables = [q.table for q in semigroups]
        chunks = [c for c in (tables[i::threads] for i in range(threads)) if c]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for partial in pool.map(_run_chunk, chunks, [names] * len(chunks)):
                for name, outcome in partial.items():
                    outcomes[name].merge(outcome)
    for outcome in outcomes.values():
        outcome.sort()
    return outcomes


def harness_report(
    max_order: int | None = None,
    fixtures: bool = False,
    suites: Iterable[str] | None = None,
    threads: int | None = None,
) -> dict:
    """Run suites over the enumerated universe and/or the curated fixtures."""
    from .reports import SCHEMA, _finish
    from . import __version__

    if max_order is not None and not 1 <= max_order <= 3:
        from .core import OrderTooLarge

        raise OrderTooLarge("the exhaustive harness supports orders 1..3")
    universe: list[FiniteSemigroup] = []
    if max_order is not None:
        universe.extend(enumerated_universe(max_order))
    if fixtures or max_order is None:
        universe.extend(fixture_semigroups().values())
    outcomes = run_suites(universe, suites, threads)
    report = {
        "schema": SCHEMA,
        "tool": {"name": "sgquot", "version": __version__},
        "input": {
            "max_order": max_order,
            "fixtures": fixtures or max_order is None,
            "semigroups": len(universe),
            "workers": threads or worker_count(),
        },
        "checks": [],
    }
    for name in sorted(outcomes):
        outcome = outcomes[name]
        report["checks"].append(
            {
                "check": f"suite:{name}",
                "statement": SUITES[name].__doc__ or name,
                "verdict": "holds" if outcome.passed else "fails",
                "instances": outcome.instances,
                "witnesses": outcome.failures[:20],
                "notes": outcome.notes[:20],
            }
        )
    return _finish(report)
