"""Reading and writing the plain-text Cayley table format.

Lines starting with ``#`` (and blank lines) are ignored. The first remaining
line holds the order n; the next n lines hold n whitespace-separated 1-based
labels each, entry j of line i being the product i*j.
"""
import re

from .errors import ParseError
from .tableloop import DEFAULT_MAX_ORDER, load_table

_TOKEN = re.compile(r"\S+")


def _content_lines(text):
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, line


def parse_rows(text):
    """Parse the text format into 1-based rows, checking only its shape."""
    lines = _content_lines(text)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError("missing order line") from None
    tokens = line.split()
    if len(tokens) != 1 or not tokens[0].isdigit() or int(tokens[0]) < 1:
        raise ParseError(f"expected a positive order, got {line.strip()!r}", lineno, 1)
    n = int(tokens[0])
    rows = []
    for lineno, line in lines:
        if len(rows) == n:
            raise ParseError(f"unexpected content after {n} rows", lineno, 1)
        row = []
        for m in _TOKEN.finditer(line):
            tok = m.group()
            col = m.start() + 1
            if not tok.isdigit():
                raise ParseError(f"not a label: {tok!r}", lineno, col)
            v = int(tok)
            if not 1 <= v <= n:
                raise ParseError(f"label {v} outside 1..{n}", lineno, col)
            row.append(v)
        if len(row) != n:
            raise ParseError(f"expected {n} entries, found {len(row)}", lineno, len(line.rstrip()) + 1)
        rows.append(row)
    if len(rows) != n:
        raise ParseError(f"expected {n} rows, found {len(rows)}")
    return rows


def parse_table_text(text, max_order=DEFAULT_MAX_ORDER):
    return load_table(parse_rows(text), max_order=max_order)


def parse_table_file(path, max_order=DEFAULT_MAX_ORDER):
    with open(path, encoding="utf-8") as fh:
        return parse_table_text(fh.read(), max_order=max_order)


def format_table(L, comments=()):
    """Render a loop in the text format (1-based labels)."""
    width = len(str(L.n))
    out = [f"# {c}" for c in comments]
    out.append(str(L.n))
    for row in L.rows():
        out.append(" ".join(f"{v:>{width}}" for v in row))
    return "\n".join(out) + "\n"
