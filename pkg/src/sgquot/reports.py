"""Machine-readable reports shared by the CLI and the web service.

Every report carries `schema: 1`, the tool version, an input digest and a
list of check entries; a failing check always carries a witness encoded as
element labels. Witness searches run in a fixed order, so reports for
identical inputs are byte-identical.
"""

from __future__ import annotations

import hashlib
import time
from typing import Any, Callable

from . import __version__
from .core import FiniteSemigroup, SubSemigroup, canonical_table, enumerate_semigroups
from .green import (
    check_green_subgroup_laws,
    green_data,
    group_h_classes_by_idempotent,
    group_h_classes_by_square,
    is_bisimple,
    is_completely_semisimple,
    is_inverse,
    is_regular,
    is_simple,
    is_zero_simple,
    render_eggbox,
)
from .orders import (
    is_left_order,
    is_local_left_order,
    is_local_right_order,
    is_order,
    is_right_order,
    is_straight_left_order,
    is_straight_right_order,
    is_straight_weak_left_order,
    is_straight_weak_right_order,
    is_very_large,
    is_weak_left_order,
    is_weak_right_order,
    straightness_status,
    weak_order_witnesses,
)
from .starpair import (
    StarPair,
    Verdict,
    check_completely_regular_condition,
    check_embeddable,
    check_inverse_condition,
    check_order_conditions,
    derived_j_structure,
    equality_pair,
    induced_star_pair,
    is_embeddable,
    semisimple_characterization,
    starred_pair,
    straight_order_consequences,
)
from .starred import starred_data
from .symbolic import by_name, claims_report, oracle_window_agreement, phi_period
from .tableio import render_table

SCHEMA = 1

NOTIONS: dict[str, Callable[[SubSemigroup], bool]] = {
    "very-large": is_very_large,
    "weak-left": is_weak_left_order,
    "left": is_left_order,
    "straight-left": is_straight_left_order,
    "straight-weak-left": is_straight_weak_left_order,
    "local-left": is_local_left_order,
    "weak-right": is_weak_right_order,
    "right": is_right_order,
    "straight-right": is_straight_right_order,
    "straight-weak-right": is_straight_weak_right_order,
    "local-right": is_local_right_order,
    "order": is_order,
}

PAIR_SOURCES = ("induced", "starred", "equality")


def table_digest(s: FiniteSemigroup) -> str:
    return hashlib.sha256(render_table(s).encode()).hexdigest()[:16]


def _labels(s: FiniteSemigroup, xs) -> list[str]:
    return [s.labels[x] for x in xs]


def _base_report(input_info: dict[str, Any]) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "tool": {"name": "sgquot", "version": __version__},
        "input": input_info,
        "checks": [],
    }


def _add_check(
    report: dict[str, Any],
    name: str,
    statement: str,
    verdict: str,
    witnesses: list[Any] | None = None,
    started: float | None = None,
    **extra: Any,
) -> None:
    entry: dict[str, Any] = {
        "check": name,
        "statement": statement,
        "verdict": verdict,
        "witnesses": witnesses or [],
    }
    if started is not None:
        entry["elapsed_ms"] = round((time.perf_counter() - started) * 1000, 3)
    entry.update(extra)
    report["checks"].append(entry)


def _finish(report: dict[str, Any]) -> dict[str, Any]:
    summary = {"holds": 0, "fails": 0, "not-applicable": 0}
    for entry in report["checks"]:
        summary[entry["verdict"]] = summary.get(entry["verdict"], 0) + 1
    report["summary"] = summary
    return report


def exit_code(report: dict[str, Any]) -> int:
    return 1 if report["summary"].get("fails", 0) else 0


def _verdict_entry(report: dict, s: FiniteSemigroup, name: str, statement: str, v: Verdict, started: float) -> None:
    witnesses = [_labels(s, v.witness)] if v.witness else []
    extra = {"note": v.note} if v.note else {}
    _add_check(report, name, statement, v.status, witnesses, started, **extra)


# ------------------------------------------------------------------ relations

def relations_report(s: FiniteSemigroup, eggbox: bool = False) -> dict[str, Any]:
    report = _base_report({"digest": table_digest(s), "order": s.order, "labels": list(s.labels)})
    started = time.perf_counter()
    gd = green_data(s)
    report["green"] = {
        "R_classes": [_labels(s, sorted(c)) for c in gd.R.classes()],
        "L_classes": [_labels(s, sorted(c)) for c in gd.L.classes()],
        "H_classes": [_labels(s, sorted(c)) for c in gd.H.classes()],
        "D_classes": [_labels(s, sorted(c)) for c in gd.D.classes()],
        "J_classes": [_labels(s, sorted(c)) for c in gd.J.classes()],
        "idempotents": _labels(s, sorted(gd.idempotents)),
        "group_H_classes": [_labels(s, sorted(c)) for c in gd.group_H_classes],
        "subgroup_elements": _labels(s, sorted(gd.subgroup_elements())),
    }
    sd = starred_data(s)
    report["starred"] = {
        "Lstar_classes": [_labels(s, sorted(c)) for c in sd.Lstar.classes()],
        "Rstar_classes": [_labels(s, sorted(c)) for c in sd.Rstar.classes()],
        "square_cancellable": _labels(s, sorted(sd.square_cancellable)),
    }
    report["properties"] = {
        "regular": is_regular(s),
        "inverse": is_inverse(s),
        "simple": is_simple(s),
        "bisimple": is_bisimple(s),
        "zero_simple": is_zero_simple(s),
    }
    if is_regular(s):
        report["properties"]["completely_semisimple"] = is_completely_semisimple(s)
    laws = check_green_subgroup_laws(s)
    _add_check(
        report, "green-subgroup-laws",
        "preorder/subgroup interaction laws hold for all element triples",
        "holds" if laws is None else "fails",
        [] if laws is None else [{"law": laws.law, "elements": _labels(s, laws.witness)}],
        started,
    )
    oracle_agree = group_h_classes_by_idempotent(s) == group_h_classes_by_square(s)
    _add_check(
        report, "group-h-class-oracles",
        "idempotent-based and square-based group H-class detection agree",
        "holds" if oracle_agree else "fails", [], None,
    )
    if eggbox:
        report["eggbox"] = render_eggbox(s)
    return _finish(report)


# ---------------------------------------------------------------- check-order

def order_report(s: FiniteSemigroup, sub_members, notion: str, prop31: bool = False) -> dict[str, Any]:
    sub = SubSemigroup(s, sub_members)
    report = _base_report(
        {
            "digest": table_digest(s),
            "order": s.order,
            "sub": _labels(s, sub.members),
        }
    )
    if notion not in NOTIONS:
        raise ValueError(f"unknown notion {notion!r}; choose from {sorted(NOTIONS)}")
    started = time.perf_counter()
    holds = NOTIONS[notion](sub)
    witnesses: list[Any] = []
    if notion in ("weak-left", "straight-left", "straight-weak-left", "left"):
        wits = weak_order_witnesses(sub, "left", straight=notion.startswith("straight"))
        if wits:
            witnesses = [
                {"q": s.labels[q], "a": s.labels[a], "b": s.labels[b]}
                for q, (a, b) in sorted(wits.items())
            ]
    elif notion in ("weak-right", "straight-right", "straight-weak-right", "right"):
        wits = weak_order_witnesses(sub, "right", straight=notion.startswith("straight"))
        if wits:
            witnesses = [
                {"q": s.labels[q], "a": s.labels[a], "b": s.labels[b]}
                for q, (a, b) in sorted(wits.items())
            ]
    elif notion == "very-large" and not holds:
        gd = green_data(s)
        missed = [h for h in gd.H.classes() if not (h & sub.member_set())]
        witnesses = [{"missed_h_class": _labels(s, sorted(h))} for h in missed]
    _add_check(
        report, f"order:{notion}",
        f"S is a {notion} order-of-quotients structure in Q",
        "holds" if holds else "fails", witnesses, started,
    )
    if holds and notion in ("straight-left", "straight-weak-left"):
        from .orders import straighten

        report["straighten_traces"] = [
            {
                "w": s.labels[tr.w], "e": s.labels[tr.e], "s": s.labels[tr.s],
                "a": s.labels[tr.a], "b": s.labels[tr.b], "f": s.labels[tr.f],
                "t": s.labels[tr.t],
                "result": {"a": s.labels[tr.left], "b": s.labels[tr.right]},
            }
            for tr in (straighten(sub, w) for w in s.elements())
        ]
    if prop31:
        started = time.perf_counter()
        status = straightness_status(sub)
        _add_check(
            report, "straightness-equivalence",
            "very-large weak, straight weak and very-large local agree",
            "holds" if status.all_equal() else "fails",
            [
                {
                    "very_large_weak": status.very_large_weak,
                    "straight_weak": status.straight_weak,
                    "very_large_local": status.very_large_local,
                }
            ],
            started,
        )
    return _finish(report)


# ------------------------------------------------------------- check-starpair

def _build_pair(s: FiniteSemigroup, sub_members, source: str) -> tuple[StarPair, FiniteSemigroup]:
    if source == "induced":
        sub = SubSemigroup(s, sub_members if sub_members is not None else range(s.order))
        pair = induced_star_pair(sub)
        return pair, pair.s
    if sub_members is not None and len(set(sub_members)) != s.order:
        sub = SubSemigroup(s, sub_members)
        s, _ = sub.as_semigroup()
    if source == "starred":
        return starred_pair(s), s
    if source == "equality":
        return equality_pair(s), s
    raise ValueError(f"unknown pair source {source!r}; choose from {PAIR_SOURCES}")


def starpair_report(s: FiniteSemigroup, sub_members=None, source: str = "induced") -> dict[str, Any]:
    pair, base = _build_pair(s, sub_members, source)
    report = _base_report(
        {
            "digest": table_digest(s),
            "order": s.order,
            "pair": source,
            "sub": _labels(s, sub_members) if sub_members is not None else "all",
        }
    )
    started = time.perf_counter()
    _add_check(
        report, "star-axioms",
        "compatibility and starred-containment axioms of the pair",
        "holds", [], None,  # construction validates; violations surface as input errors
    )
    emb = check_embeddable(pair)
    for key in sorted(emb):
        _verdict_entry(report, base, f"embed:{key}", f"embeddability condition ({key})", emb[key], started)
    _add_check(
        report, "embeddable", "all embeddability conditions hold",
        "holds" if is_embeddable(emb) else "fails", [], None,
    )
    cond = check_order_conditions(pair)
    for key in sorted(cond):
        _verdict_entry(report, base, f"order-condition:{key}", f"straight-order condition ({key})", cond[key], started)
    _verdict_entry(
        report, base, "condition:I",
        "R'- or L'-related elements of G(S) are H'-related",
        check_inverse_condition(pair), started,
    )
    _verdict_entry(
        report, base, "condition:GI",
        "G(S) is all of S",
        check_completely_regular_condition(pair), started,
    )
    if source == "induced":
        sub = SubSemigroup(s, sub_members if sub_members is not None else range(s.order))
        soc = straight_order_consequences(sub)
        _add_check(
            report, "straight-order-consequences",
            "a straight left order induces an embeddable pair satisfying the order conditions",
            "holds" if soc.verified() else "fails",
            [] if soc.applies else [{"note": "S is not a straight left order in Q"}],
            None,
        )
        if soc.applies and soc.verified():
            rep = semisimple_characterization(sub)
            _add_check(
                report, "semisimple-characterization",
                "complete semisimplicity matches the J'-trace and chain conditions",
                "holds" if rep.consistent() else "fails",
                [
                    {
                        "completely_semisimple": rep.completely_semisimple,
                        "trace_condition": rep.trace_condition,
                        "chain_condition": rep.chain_condition,
                        "chain_note": rep.chain_note,
                        "restrictions_agree": rep.restrictions_agree,
                        "simple_iff_jp_full": rep.simple_iff_jp_full,
                        "bisimple_iff_dp_full": rep.bisimple_iff_dp_full,
                    }
                ],
                None,
            )
        else:
            _add_check(
                report, "semisimple-characterization",
                "complete semisimplicity matches the J'-trace and chain conditions",
                "not-applicable",
                [{"note": "S is not a straight left order with an embeddable induced pair"}],
                None,
            )
    if is_embeddable(emb):
        js = derived_j_structure(pair)
        report["derived"] = {
            "Jp_classes": [_labels(base, sorted(c)) for c in js.Jp.classes()],
            "Dp_classes": [_labels(base, sorted(c)) for c in js.Dp.classes()],
        }
    report["GS"] = _labels(base, sorted(pair.GS))
    report["square_cancellable"] = _labels(base, sorted(pair.square_cancellable()))
    return _finish(report)


# -------------------------------------------------------------------- example

def example_report(which: str, window: int = 5, modulus: int = 3, verify: bool = False) -> dict[str, Any]:
    e = by_name(which, modulus)
    report = _base_report({"example": which, "window": window, "modulus": e.modulus})
    started = time.perf_counter()
    for claim in claims_report(e, window):
        _add_check(
            report, f"claim:{claim.name}", claim.detail, claim.status,
            [list(claim.witness)] if claim.witness else [], started,
        )
    report["phi_period"] = phi_period(e, window)
    if verify:
        started = time.perf_counter()
        agreement = oracle_window_agreement(e, window)
        _add_check(
            report, "oracle-window-agreement",
            "analytic Green oracles agree with windowed witness search",
            "holds" if not agreement.mismatches else "fails",
            [list(m) for m in agreement.mismatches],
            started,
            checked_pairs=agreement.checked_pairs,
            oracle_only=agreement.oracle_only,
        )
        started = time.perf_counter()
        from .symbolic import associativity_violation, format_element

        bad = associativity_violation(e, min(window, 3))
        _add_check(
            report, "associativity-window",
            "products are associative on every windowed triple",
            "holds" if bad is None else "fails",
            [] if bad is None else [[format_element(x) for x in bad]],
            started,
        )
    return _finish(report)


# ------------------------------------------------------------------ enumerate

def enumerate_report(order: int, up_to_iso: bool = False, limit: int = 0) -> dict[str, Any]:
    report = _base_report({"order": order, "up_to_iso": up_to_iso})
    started = time.perf_counter()
    tables: list[FiniteSemigroup] = []
    count = enumerate_semigroups(order, tables.append)
    if up_to_iso:
        seen: dict[tuple, FiniteSemigroup] = {}
        for s in tables:
            seen.setdefault(canonical_table(s), s)
        tables = list(seen.values())
        report["iso_classes"] = len(tables)
    report["count"] = count
    if limit:
        report["tables"] = [render_table(s) for s in tables[:limit]]
    _add_check(
        report, "enumerate", f"every associative table of order {order} visited once",
        "holds", [], started,
    )
    return _finish(report)
