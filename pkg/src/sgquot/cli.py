"""Command-line front end.

Thin client over the report layer: every verb builds the same request the
web service accepts and either runs it in-process or, with --server URL,
POSTs it to a running service. Reports print as JSON (or as plain text for
the egg-box). Exit codes: 0 all checks pass, 1 falsification, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from .core import SemigroupError
from .green import render_eggbox
from .harness import SUITES, harness_report
from .reports import (
    NOTIONS,
    PAIR_SOURCES,
    enumerate_report,
    example_report,
    exit_code,
    order_report,
    relations_report,
    starpair_report,
)
from .symbolic import KINDS
from .tableio import parse_table


def _read_table(path: str):
    return parse_table(Path(path).read_text())


def _parse_sub(raw: str | None, order: int) -> list[int]:
    if raw is None or raw == "all":
        return list(range(order))
    return [int(tok) for tok in raw.replace(",", " ").split()]


def _emit(report: dict[str, Any], out: str | None) -> int:
    text = json.dumps(report, indent=2, default=str)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)
    return exit_code(report)


def _post(server: str, endpoint: str, payload: dict[str, Any]) -> dict[str, Any]:
    import httpx

    resp = httpx.post(f"{server.rstrip('/')}/{endpoint}", json=payload, timeout=600.0)
    if resp.status_code == 422:
        raise SemigroupError(str(resp.json().get("detail")))
    resp.raise_for_status()
    return resp.json()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sgquot", description=__doc__)
    parser.add_argument("--server", help="base URL of a running sgquot service; run remotely instead of in-process")
    parser.add_argument("--out", help="write the JSON report to this path instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("relations", help="Green/starred structure of a Cayley table")
    p.add_argument("table")
    p.add_argument("--eggbox", action="store_true", help="include the ASCII egg-box diagram")

    p = sub.add_parser("eggbox", help="render the egg-box diagram only")
    p.add_argument("table")

    p = sub.add_parser("check-order", help="order-of-quotients predicates for S in Q")
    p.add_argument("table")
    p.add_argument("--sub", help="comma-separated element indices (default: all)")
    p.add_argument("--notion", default="straight-left", choices=sorted(NOTIONS))
    p.add_argument("--prop31", action="store_true", help="add the three-way straightness/locality equivalence record")

    p = sub.add_parser("check-starpair", help="*-pair conditions for S (induced from Q, starred, or equality)")
    p.add_argument("table")
    p.add_argument("--sub", help="comma-separated element indices (default: all)")
    p.add_argument("--pair", default="induced", choices=PAIR_SOURCES)

    p = sub.add_parser("harness", help="run verification suites over universes of instances")
    p.add_argument("--max-order", type=int, help="exhaustive over all semigroups up to this order (1..3)")
    p.add_argument("--fixtures", action="store_true", help="include the curated fixtures")
    p.add_argument("--suites", help=f"comma-separated suite names (default: all). Available: {', '.join(sorted(SUITES))}")
    p.add_argument("--threads", type=int, help="worker processes (default: QKIT_THREADS or 1)")

    p = sub.add_parser("example", help="windowed claim ledger for a symbolic instance")
    p.add_argument("which", choices=KINDS)
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--modulus", type=int, default=3)
    p.add_argument("--verify", action="store_true", help="also cross-validate oracles against windowed witness search")

    p = sub.add_parser("enumerate", help="count/emit all associative tables of a given order")
    p.add_argument("order", type=int)
    p.add_argument("--up-to-iso", action="store_true", help="deduplicate by canonical form as a post-pass")
    p.add_argument("--limit", type=int, default=0, help="emit at most this many tables")

    p = sub.add_parser("serve", help="run the web service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def _run_local(args: argparse.Namespace) -> tuple[dict[str, Any] | None, str | None]:
    """Returns (report, plain_text); exactly one is set."""
    if args.command == "relations":
        s = _read_table(args.table)
        return relations_report(s, eggbox=args.eggbox), None
    if args.command == "eggbox":
        s = _read_table(args.table)
        return None, render_eggbox(s)
    if args.command == "check-order":
        s = _read_table(args.table)
        return order_report(s, _parse_sub(args.sub, s.order), args.notion, args.prop31), None
    if args.command == "check-starpair":
        s = _read_table(args.table)
        members = _parse_sub(args.sub, s.order) if args.sub else None
        return starpair_report(s, members, args.pair), None
    if args.command == "harness":
        suites = args.suites.split(",") if args.suites else None
        return harness_report(args.max_order, args.fixtures, suites, args.threads), None
    if args.command == "example":
        return example_report(args.which, args.window, args.modulus, args.verify), None
    if args.command == "enumerate":
        return enumerate_report(args.order, args.up_to_iso, args.limit), None
    raise AssertionError(f"unhandled command {args.command}")


def _run_remote(args: argparse.Namespace) -> tuple[dict[str, Any] | None, str | None]:
    server = args.server
    if args.command in ("relations", "eggbox", "check-order", "check-starpair"):
        table_text = Path(args.table).read_text()
        parse_table(table_text)  # fail fast with a line number before going remote
    if args.command == "relations":
        return _post(server, "relations", {"table": table_text, "eggbox": args.eggbox}), None
    if args.command == "eggbox":
        return None, _post(server, "eggbox", {"table": table_text})["eggbox"]
    if args.command == "check-order":
        sub_members = _parse_sub(args.sub, parse_table(table_text).order)
        payload = {"table": table_text, "sub": sub_members, "notion": args.notion, "prop31": args.prop31}
        return _post(server, "check-order", payload), None
    if args.command == "check-starpair":
        payload = {"table": table_text, "pair": args.pair}
        if args.sub:
            payload["sub"] = _parse_sub(args.sub, parse_table(table_text).order)
        return _post(server, "check-starpair", payload), None
    if args.command == "harness":
        payload = {
            "max_order": args.max_order,
            "fixtures": args.fixtures,
            "suites": args.suites.split(",") if args.suites else None,
            "threads": args.threads,
        }
        return _post(server, "harness", payload), None
    if args.command == "example":
        payload = {"which": args.which, "window": args.window, "modulus": args.modulus, "verify": args.verify}
        return _post(server, "example", payload), None
    if args.command == "enumerate":
        payload = {"order": args.order, "up_to_iso": args.up_to_iso, "limit": args.limit}
        return _post(server, "enumerate", payload), None
    raise AssertionError(f"unhandled command {args.command}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .webservice import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0
    try:
        if args.server:
            report, text = _run_remote(args)
        else:
            report, text = _run_local(args)
    except (SemigroupError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if text is not None:
        if args.out:
            Path(args.out).write_text(text)
        else:
            print(text, end="")
        return 0
    assert report is not None
    return _emit(report, args.out)


if __name__ == "__main__":
    sys.exit(main())
