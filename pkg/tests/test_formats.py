import json
import random
from fractions import Fraction as F
from pathlib import Path

import pytest

import gamma_hyperlab
from gamma_hyperlab.families import max_structure, subset_union, truncated_sum
from gamma_hyperlab.formats import (
    FormatError, crisp_as_fuzzy, emit_structure, emit_subset, fuzzy_as_crisp, parse_inline_subset, parse_map,
    parse_structure, parse_subset,
)
from gamma_hyperlab.bridge import psi
from gamma_hyperlab.sampling import random_any, random_structure
from support import grades

FIXTURES = Path(gamma_hyperlab.__file__).parent / "fixtures"


def _max_doc():
    return json.loads((FIXTURES / "max.json").read_text())


def _dump(doc):
    return json.dumps(doc)


def test_shipped_max_document_round_trips_byte_exactly():
    text = (FIXTURES / "max.json").read_text()
    H = parse_structure(text)
    assert H == max_structure(2)
    assert emit_structure(H) == text


def test_random_round_trips():
    rng = random.Random(12)
    for i in range(100):
        H = random_any(rng, rng.randint(1, 3), rng.randint(1, 2), rng.randint(1, 6))
        assert parse_structure(emit_structure(H)) == H
    improper = random_structure(rng, 2, 1, 3, proper=False, density=0.2)
    assert parse_structure(emit_structure(improper)) == improper


def test_emission_uses_least_common_denominator():
    text = emit_structure(truncated_sum(2))
    assert json.loads(text)["denominator"] == 2
    assert json.loads(emit_structure(subset_union(2)))["denominator"] == 3


def test_numerator_out_of_range_names_the_cell():
    doc = _max_doc()
    doc["table"]["1|g|2"] = {"2": 2}
    with pytest.raises(FormatError, match=r"1\|g\|2"):
        parse_structure(_dump(doc))


def test_missing_cell_names_the_triple():
    doc = _max_doc()
    del doc["table"]["2|g|0"]
    with pytest.raises(FormatError, match=r"missing table cell \(2, g, 0\)"):
        parse_structure(_dump(doc))


@pytest.mark.parametrize("mutate, message", [
    (lambda d: d.update(carrier=["0", "0", "2"]), "duplicate label"),
    (lambda d: d.update(denominator=0), "denominator"),
    (lambda d: d.update(extra=1), "unknown field"),
    (lambda d: d.pop("gamma"), "missing field"),
    (lambda d: d["table"].update({"0|g|3": {}}), "unknown cell"),
    (lambda d: d["table"].update({"0|g|0": {"7": 1}}), "unknown element"),
    (lambda d: d["table"].update({"0|g|0": {"0": 0.5}}), "must be an integer"),
    (lambda d: d.update(carrier=["0", "1|2", "2"]), "contains '|'"),
])
def test_format_errors(mutate, message):
    doc = _max_doc()
    mutate(doc)
    with pytest.raises(FormatError, match=message):
        parse_structure(_dump(doc))


def test_syntax_errors_report_position():
    with pytest.raises(FormatError, match="line 1"):
        parse_structure("{")
    with pytest.raises(FormatError, match="duplicate key"):
        parse_structure('{"carrier": ["0"], "carrier": ["1"]}')


def test_subset_documents():
    c = max_structure(2).carrier
    mu = grades(c, "1/2", 0, "1/3")
    assert emit_subset(mu) == '{"denominator": 6, "grades": {"0": 3, "2": 2}}\n'
    assert parse_subset(emit_subset(mu), c) == mu
    assert parse_inline_subset("0=1/2, 2=1/3", c) == mu
    for bad in ("0=2", "0", "9=1", "0=x", "0=1,0=1"):
        with pytest.raises(FormatError):
            parse_inline_subset(bad, c)


def test_crisp_documents():
    K = psi(truncated_sum(2))
    assert fuzzy_as_crisp(crisp_as_fuzzy(K)) == K
    with pytest.raises(FormatError):
        fuzzy_as_crisp(truncated_sum(2))


def test_map_documents():
    assert parse_map('{"0": "lo"}') == {"0": "lo"}
    with pytest.raises(FormatError):
        parse_map('{"0": 1}')
