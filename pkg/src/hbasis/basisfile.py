"""The one canonical artifact grammar shared by every CLI subcommand.

Line-oriented `key = value` text.  Core basis fields are h, n, and
elements (ascending integers); manifests, provenance, plans, and ledgers
use dotted prefixes so any emitted artifact can be fed back in as input.
Integers are exact, rationals print as num/den, reals at 12 significant
digits.  No timestamps ever enter a payload.
"""

from __future__ import annotations

from fractions import Fraction


def render_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return f"{v:.12g}"
    if isinstance(v, (tuple, list)):
        return " ".join(render_value(x) for x in v)
    return str(v)


def format_document(fields) -> str:
    """fields: iterable of (key, value) pairs, emitted in the given order."""
    return "".join(f"{key} = {render_value(value)}\n" for key, value in fields)


def parse_document(text: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        out[key.strip()] = value.strip()
    return out


def parse_int_list(raw: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in raw.split())


def read_basis_document(text: str):
    """(h, n, elements) from a basis document; h and n may be absent (None)."""
    doc = parse_document(text)
    if "elements" not in doc:
        raise ValueError("basis document missing 'elements'")
    h = int(doc["h"]) if "h" in doc else None
    n = int(doc["n"]) if "n" in doc else None
    return h, n, parse_int_list(doc["elements"])


def read_residue_document(text: str):
    """(q, members) from a residue-set document."""
    doc = parse_document(text)
    if "q" not in doc or "members" not in doc:
        raise ValueError("residue document needs 'q' and 'members'")
    return int(doc["q"]), parse_int_list(doc["members"])
