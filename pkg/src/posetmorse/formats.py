"""Text and JSON formats for posets, complexes, matchings, functions,
and the structured report document.

Poset text: one `w < x` line per cover, a bare identifier declares an
isolated element, `#` starts a comment.  The JSON alternative is a
document with "elements" and "covers" fields.  Matchings are `x y` lines
(x covered by y); functions are `element value` lines with integer or
p/q rational values.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .dynamics import Matching, validate_matching
from .errors import MalformedLine
from .posets import Poset, build_poset, was_reduced
from .simplicial import SimplicialComplex, parse_simplicial_complex, serialize_simplicial_complex

SCHEMA_VERSION = 1


def parse_poset_text(text: str) -> Poset:
    elements: list[str] = []
    seen: set[str] = set()
    relations: list[tuple[str, str]] = []

    def declare(name: str):
        if name not in seen:
            seen.add(name)
            elements.append(name)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "<" in line:
            parts = [p.strip() for p in line.split("<")]
            if len(parts) != 2 or not all(parts):
                raise MalformedLine(f"line {lineno}: expected 'w < x', got {line!r}")
            w, x = parts
            declare(w)
            declare(x)
            relations.append((w, x))
        else:
            tokens = line.split()
            if len(tokens) != 1:
                raise MalformedLine(f"line {lineno}: expected one identifier, got {line!r}")
            declare(tokens[0])
    return build_poset(elements, relations)


def parse_poset_document(doc: dict) -> Poset:
    if not isinstance(doc, dict) or "elements" not in doc:
        raise MalformedLine("poset document needs an 'elements' field")
    elements = [str(e) for e in doc["elements"]]
    covers = [(str(w), str(x)) for w, x in doc.get("covers", [])]
    return build_poset(elements, covers)


def load_poset(text: str) -> tuple[Poset, bool]:
    """Parse either format; also report whether input covers got reduced."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = json.loads(text)
        poset = parse_poset_document(doc)
        reduced = was_reduced(poset.elements,
                              [(str(w), str(x)) for w, x in doc.get("covers", [])])
        return poset, reduced
    relations = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#") and "<" in line:
            w, _, x = line.partition("<")
            relations.append((w.strip(), x.strip()))
    poset = parse_poset_text(text)
    return poset, not {(w, x) for w, x in relations} <= poset.covers


def serialize_poset(poset: Poset) -> str:
    lines = [f"{w} < {x}" for w, x in sorted(poset.covers,
                                             key=lambda c: (poset.index[c[1]], poset.index[c[0]]))]
    isolated = [e for e in poset.elements
                if not poset.upper_covers(e) and not poset.lower_covers(e)]
    lines.extend(isolated)
    return "\n".join(lines) + "\n"


def poset_document(poset: Poset) -> dict:
    return {
        "elements": list(poset.elements),
        "covers": [[w, x] for w, x in sorted(poset.covers,
                                             key=lambda c: (poset.index[c[1]], poset.index[c[0]]))],
    }


def parse_matching_text(poset: Poset, text: str) -> Matching:
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedLine(f"line {lineno}: expected 'x y', got {line!r}")
        pairs.append((tokens[0], tokens[1]))
    return validate_matching(poset, pairs)


def serialize_matching(matching: Matching) -> str:
    return "\n".join(f"{w} {x}" for w, x in matching.sorted_pairs()) + "\n"


def parse_function_text(poset: Poset, text: str) -> dict[str, Fraction]:
    values: dict[str, Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedLine(f"line {lineno}: expected 'element value', got {line!r}")
        name, value = tokens
        poset.require(name)
        try:
            values[name] = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedLine(f"line {lineno}: bad rational {value!r}") from exc
    missing = [e for e in poset.elements if e not in values]
    if missing:
        raise MalformedLine(f"function is missing values for {missing[:5]}")
    return values


def serialize_function(poset: Poset, values: dict[str, Fraction]) -> str:
    return "\n".join(f"{e} {values[e]}" for e in poset.elements) + "\n"


def load_complex(text: str) -> SimplicialComplex:
    return parse_simplicial_complex(text)


def serialize_complex(complex: SimplicialComplex) -> str:
    return serialize_simplicial_complex(complex)


def report_document(command: str, results: dict, inputs: dict | None = None) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs or {},
        "results": results,
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
