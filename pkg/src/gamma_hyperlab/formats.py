"""JSON documents for structures, fuzzy subsets and maps.

A structure document has exactly the keys ``carrier``, ``gamma``,
``denominator`` and ``table``.  The table maps ``"a|γ|b"`` to an object
``{label: numerator}``; absent labels have grade 0.  Crisp structures are
written as their 0/1 tables with denominator 1.

Emission is canonical: least common denominator, cells in index order,
labels in carrier order, zero grades omitted.
"""
from __future__ import annotations

import json
from fractions import Fraction
from math import lcm
from typing import Mapping

from .carrier import Carrier, FuzzySubset
from .cuts import CrispGammaHyperop
from .grades import ONE, ZERO, Grade
from .hyperop import FuzzyGammaHyperop

STRUCTURE_KEYS = ("carrier", "gamma", "denominator", "table")
SUBSET_KEYS = ("denominator", "grades")


class FormatError(ValueError):
    pass


def _no_duplicates(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise FormatError(f"duplicate key {key!r}")
        out[key] = value
    return out


def _load(text: str) -> dict:
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise FormatError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    return doc


def _keys(doc: dict, expected: tuple[str, ...], what: str):
    missing = [k for k in expected if k not in doc]
    if missing:
        raise FormatError(f"{what} document is missing field {missing[0]!r}")
    extra = [k for k in doc if k not in expected]
    if extra:
        raise FormatError(f"{what} document has unknown field {extra[0]!r}")


def _labels(value, field: str) -> tuple[str, ...]:
    if not isinstance(value, list) or not value:
        raise FormatError(f"field {field!r} must be a nonempty array of labels")
    for x in value:
        if not isinstance(x, str) or not x:
            raise FormatError(f"field {field!r}: labels must be nonempty strings, got {x!r}")
        if "|" in x:
            raise FormatError(f"field {field!r}: label {x!r} contains '|'")
    seen = set()
    for x in value:
        if x in seen:
            raise FormatError(f"field {field!r}: duplicate label {x!r}")
        seen.add(x)
    return tuple(value)


def _denominator(value) -> int:
    if type(value) is not int or value < 1:
        raise FormatError(f"field 'denominator' must be a positive integer, got {value!r}")
    return value


def _grades(carrier: Carrier, entry, d: int, where: str) -> tuple[Grade, ...]:
    if not isinstance(entry, dict):
        raise FormatError(f"{where}: expected an object mapping labels to numerators")
    out = [ZERO] * carrier.size
    for label, n in entry.items():
        if label not in carrier.elements:
            raise FormatError(f"{where}: unknown element {label!r}")
        if type(n) is not int:
            raise FormatError(f"{where}: numerator for {label!r} must be an integer, got {n!r}")
        if not 0 <= n <= d:
            raise FormatError(f"{where}: numerator {n} for {label!r} is outside 0..{d}")
        out[carrier.index(label)] = Grade(n, d)
    return tuple(out)


def cell_key(carrier: Carrier, a: int, g: int, b: int) -> str:
    return f"{carrier.elements[a]}|{carrier.sorts[g]}|{carrier.elements[b]}"


def parse_structure(text: str) -> FuzzyGammaHyperop:
    doc = _load(text)
    _keys(doc, STRUCTURE_KEYS, "structure")
    elements = _labels(doc["carrier"], "carrier")
    sorts = _labels(doc["gamma"], "gamma")
    d = _denominator(doc["denominator"])
    table = doc["table"]
    if not isinstance(table, dict):
        raise FormatError("field 'table' must be an object")
    carrier = Carrier(elements, sorts)
    known = set()
    cells = []
    for a in range(carrier.size):
        row = []
        for g in range(carrier.n_sorts):
            per_b = []
            for b in range(carrier.size):
                key = cell_key(carrier, a, g, b)
                known.add(key)
                if key not in table:
                    raise FormatError(f"missing table cell ({elements[a]}, {sorts[g]}, {elements[b]})")
                per_b.append(_grades(carrier, table[key], d, f"cell {key!r}"))
            row.append(tuple(per_b))
        cells.append(tuple(row))
    for key in table:
        if key not in known:
            raise FormatError(f"table has unknown cell {key!r}")
    return FuzzyGammaHyperop(carrier, tuple(cells), proper=None)


def common_denominator(grades) -> int:
    return lcm(1, *(Fraction(g).denominator for g in grades))


def _numerators(grades, carrier: Carrier, d: int) -> str:
    items = [f"{json.dumps(carrier.elements[t])}: {int(g * d)}" for t, g in enumerate(grades) if g]
    return "{" + ", ".join(items) + "}"


def emit_structure(H: FuzzyGammaHyperop | CrispGammaHyperop) -> str:
    if isinstance(H, CrispGammaHyperop):
        H = crisp_as_fuzzy(H)
    c = H.carrier
    d = common_denominator(H.grades())
    lines = [
        "{",
        f'  "carrier": {json.dumps(list(c.elements), ensure_ascii=False)},',
        f'  "gamma": {json.dumps(list(c.sorts), ensure_ascii=False)},',
        f'  "denominator": {d},',
        '  "table": {',
    ]
    entries = []
    for a in range(c.size):
        for g in range(c.n_sorts):
            for b in range(c.size):
                key = json.dumps(cell_key(c, a, g, b), ensure_ascii=False)
                entries.append(f"    {key}: {_numerators(H.cells[a][g][b], c, d)}")
    lines.append(",\n".join(entries))
    lines += ["  }", "}"]
    return "\n".join(lines) + "\n"


def crisp_as_fuzzy(K: CrispGammaHyperop) -> FuzzyGammaHyperop:
    """The 0/1 table of ``K``; empty cells are allowed."""
    m = K.carrier.size
    return FuzzyGammaHyperop.from_function(
        K.carrier, lambda a, g, b: tuple(ONE if x in K.cells[a][g][b] else ZERO for x in range(m)), proper=None
    )


def fuzzy_as_crisp(H: FuzzyGammaHyperop) -> CrispGammaHyperop:
    """Read a 0/1 table back as a crisp structure."""
    bad = [g for g in H.grades() if g not in (ZERO, ONE)]
    if bad:
        raise FormatError(f"crisp document has grade {bad[0]} outside {{0, 1}}")
    m = H.carrier.size
    return CrispGammaHyperop.from_function(
        H.carrier, lambda a, g, b: (x for x in range(m) if H.cells[a][g][b][x])
    )


def parse_subset(text: str, carrier: Carrier) -> FuzzySubset:
    doc = _load(text)
    _keys(doc, SUBSET_KEYS, "subset")
    d = _denominator(doc["denominator"])
    return FuzzySubset._trusted(carrier, _grades(carrier, doc["grades"], d, "field 'grades'"))


def emit_subset(mu: FuzzySubset) -> str:
    d = common_denominator(mu.grades)
    return f'{{"denominator": {d}, "grades": {_numerators(mu.grades, mu.carrier, d)}}}\n'


def parse_inline_subset(text: str, carrier: Carrier) -> FuzzySubset:
    """``"0=1,1=1/2"``: unlisted labels get grade 0."""
    grades: dict[str, Fraction] = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        label, sep, value = item.partition("=")
        if not sep:
            raise FormatError(f"subset item {item!r} is not of the form label=grade")
        label = label.strip()
        if label not in carrier.elements:
            raise FormatError(f"subset names unknown element {label!r}")
        if label in grades:
            raise FormatError(f"subset lists {label!r} twice")
        try:
            grades[label] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"subset grade {value.strip()!r} is not a rational number") from None
    try:
        return FuzzySubset.from_mapping(carrier, grades)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def parse_map(text: str) -> Mapping[str, str]:
    doc = _load(text)
    for k, v in doc.items():
        if not isinstance(v, str):
            raise FormatError(f"map entry {k!r} must be a label string, got {v!r}")
    return doc
