"""The pcdg text format.

Line-oriented, human-writable, unambiguous about complement bits::

    pcdg 1
    n 4
    v 1 c : 3
    v 2 u : 1
    v 3 u :
    v 4 u : 2

Line 1 is magic plus format version, line 2 the vertex count, then exactly
one line per vertex in ascending order: id, ``c`` (complemented) or ``u``,
a colon, then the stored entries.  Entries may arrive unsorted
(construction sorts); sentinels are implicit and never serialized.  Lines
starting with ``#`` and blank lines are ignored.  ``serialize`` emits the
canonical form (sorted entries, single spaces, trailing newline), and
parse/serialize round-trips canonical text byte-identically.
"""

from __future__ import annotations

from .pcgraph import PcDigraph, PcGraphError, build_pc_lists


class ParseError(ValueError):
    """Malformed pcdg text; carries the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _significant_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse(text: str) -> PcDigraph:
    """Parse pcdg text into a validated pc-digraph."""
    lines = _significant_lines(text)

    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError(0, "empty input, expected 'pcdg 1' header") from None
    if line.split() != ["pcdg", "1"]:
        raise ParseError(lineno, f"expected header 'pcdg 1', got {line!r}")

    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError(lineno, "missing 'n <N>' line") from None
    parts = line.split()
    if len(parts) != 2 or parts[0] != "n":
        raise ParseError(lineno, f"expected 'n <N>', got {line!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(lineno, f"vertex count is not an integer: "
                                 f"{parts[1]!r}") from None
    if n < 1:
        raise ParseError(lineno, "n must be ≥ 1")

    flags = [False] * n
    entries: list[tuple[int, int]] = []
    expected = 1
    for lineno, line in lines:
        parts = line.split()
        if parts[0] != "v":
            raise ParseError(lineno, f"expected a vertex line, got {line!r}")
        if len(parts) < 4 or parts[3] != ":":
            raise ParseError(
                lineno, "vertex line must look like 'v <id> <c|u> : ...'")
        try:
            v = int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"vertex id is not an integer: "
                                     f"{parts[1]!r}") from None
        if expected > n:
            raise ParseError(lineno, f"unexpected extra vertex line for "
                                     f"vertex {v} (n is {n})")
        if v != expected:
            if 1 <= v < expected:
                raise ParseError(lineno, f"duplicate or out-of-order vertex "
                                         f"line for vertex {v}")
            raise ParseError(lineno, f"expected vertex {expected}, got {v}")
        if parts[2] not in ("c", "u"):
            raise ParseError(
                lineno, f"flag must be 'c' or 'u', got {parts[2]!r}")
        flags[v - 1] = parts[2] == "c"
        row_seen = set()
        for tok in parts[4:]:
            try:
                w = int(tok)
            except ValueError:
                raise ParseError(lineno, f"entry is not an integer: "
                                         f"{tok!r}") from None
            if not 1 <= w <= n:
                raise ParseError(lineno, f"entry {w} out of range 1..{n}")
            if w == v:
                raise ParseError(lineno, f"self-entry {w} forbidden")
            if w in row_seen:
                raise ParseError(lineno, f"duplicate entry {w}")
            row_seen.add(w)
            entries.append((v, w))
        expected += 1
    if expected <= n:
        raise ParseError(0, f"missing vertex line for vertex {expected}")

    try:
        return build_pc_lists(n, entries, flags)
    except PcGraphError as exc:  # parse-level checks should preempt this
        raise ParseError(0, str(exc)) from exc


def serialize(g: PcDigraph) -> str:
    """Canonical pcdg text for a pc-digraph."""
    lines = ["pcdg 1", f"n {g.n}"]
    for v in range(1, g.n + 1):
        flag = "c" if g.complemented[v] else "u"
        row = g.entries(v)
        tail = " " + " ".join(map(str, row)) if row else ""
        lines.append(f"v {v} {flag} :{tail}")
    return "\n".join(lines) + "\n"
