"""Cayley-table text format.

First line: the order n. Then n lines of n space-separated 0-based indices.
Lines starting with `#` are comments; `# label <i> <name>` assigns a label.
This format is the interchange currency of the CLI and the service.
"""

from __future__ import annotations

from .core import FiniteSemigroup, SemigroupError, make_semigroup


class ParseError(SemigroupError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


def parse_table(text: str) -> FiniteSemigroup:
    n: int | None = None
    rows: list[list[int]] = []
    labels: dict[int, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split(None, 2)
            if len(parts) == 3 and parts[0] == "label":
                try:
                    idx = int(parts[1])
                except ValueError:
                    raise ParseError(line_no, f"bad label index {parts[1]!r}")
                labels[idx] = parts[2].strip()
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ParseError(line_no, f"expected the order, got {line!r}")
            if n < 1:
                raise ParseError(line_no, f"order must be positive, got {n}")
            continue
        if len(rows) >= n:
            raise ParseError(line_no, f"more than {n} table rows")
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(line_no, f"non-integer entry in {line!r}")
        if len(row) != n:
            raise ParseError(line_no, f"expected {n} entries, got {len(row)}")
        for x in row:
            if not 0 <= x < n:
                raise ParseError(line_no, f"entry {x} outside [0, {n})")
        rows.append(row)
    if n is None:
        raise ParseError(1, "empty input")
    if len(rows) != n:
        raise ParseError(1, f"expected {n} rows, got {len(rows)}")
    label_list = None
    if labels:
        for idx in labels:
            if not 0 <= idx < n:
                raise ParseError(1, f"label index {idx} outside [0, {n})")
        label_list = [labels.get(i, str(i)) for i in range(n)]
    return make_semigroup(rows, label_list)


def render_table(s: FiniteSemigroup) -> str:
    lines = [str(s.order)]
    lines.extend(" ".join(str(x) for x in row) for row in s.table)
    default = tuple(str(i) for i in range(s.order))
    if s.labels != default:
        lines.extend(f"# label {i} {lab}" for i, lab in enumerate(s.labels))
    return "\n".join(lines) + "\n"
