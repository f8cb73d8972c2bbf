"""Command-line front end.

Exit codes: 0 when every requested check passes (or output was produced),
1 when a check fails (the report carries the witness), 2 on usage or
format errors.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys
import warnings
from fractions import Fraction
from pathlib import Path

from .bridge import CarrierMap, is_crisp_homomorphism, is_fuzzy_homomorphism, phi, psi
from .carrier import Carrier, FuzzySubset
from .cuts import cut_structure
from .formats import (
    FormatError, common_denominator, emit_structure, emit_subset, fuzzy_as_crisp, parse_inline_subset, parse_map,
    parse_structure, parse_subset,
)
from .grades import as_grade
from .hyperop import (
    CheckReport, FuzzyGammaHyperop, compose_elem, compose_fuzzy, compose_left, compose_right, fail, is_associative,
    is_hypergroup,
)
from .ideals import (
    generate_left_ideal, generate_right_ideal, is_bi_ideal, is_interior_ideal, is_left_ideal, is_right_ideal,
    is_sub_hypersemigroup,
)
from .relations import (
    EquivRelation, NotStronglyRegularWarning, QuotientError, is_fuzzy_regular, is_fuzzy_strongly_regular,
    quotient_crisp, quotient_fuzzy,
)
from .search import (
    FILTERS, BudgetExceeded, EnumSpec, GradeGrid, canonical_key, enumerate_indexed, oracle_min_left_ideal,
    oracle_min_right_ideal,
)

IDEAL_KINDS = {
    "sub": ("sub-hypersemigroup", is_sub_hypersemigroup),
    "left": ("left ideal", is_left_ideal),
    "right": ("right ideal", is_right_ideal),
    "bi": ("bi-ideal", is_bi_ideal),
    "interior": ("interior ideal", is_interior_ideal),
}


class UsageError(Exception):
    pass


class Report:
    """Verdicts, facts and an optional payload, rendered as text or JSON."""

    def __init__(self, command: str, carrier: Carrier | None = None):
        self.command = command
        self.carrier = carrier
        self.verdicts: list[tuple[str, CheckReport, bool]] = []
        self.facts: list[tuple[str, object]] = []
        self.payload: str | None = None
        self.payload_json = None

    def verdict(self, name: str, report: CheckReport, required: bool = True):
        self.verdicts.append((name, report, required))

    def fact(self, key: str, value):
        self.facts.append((key, value))

    @property
    def exit_code(self) -> int:
        return 0 if all(r.verdict for _, r, req in self.verdicts if req) else 1

    def _witness_json(self, report: CheckReport):
        w = report.witness
        c = self.carrier
        el = (lambda i: c.elements[i]) if c else str
        so = (lambda i: c.sorts[i]) if c else str
        return {
            "elements": {n: el(i) for n, i in w.elements},
            "sorts": {n: so(i) for n, i in w.sorts},
            "point": None if w.point is None else el(w.point),
            "left": None if w.left is None else str(w.left),
            "right": None if w.right is None else str(w.right),
            "note": w.note,
        }

    def text(self) -> str:
        lines = []
        if self.verdicts:
            lines.append(", ".join(f"{n}: {'yes' if r.verdict else 'no'}" for n, r, _ in self.verdicts))
            for n, r, _ in self.verdicts:
                if not r.verdict:
                    lines.append(f"{n} witness: {r.witness.describe(self.carrier)}")
        for key, value in self.facts:
            if isinstance(value, bool):
                value = "yes" if value else "no"
            elif isinstance(value, list):
                value = " ".join(str(v) for v in value)
            lines.append(f"{key}: {value}")
        out = "\n".join(lines) + ("\n" if lines else "")
        if self.payload is not None:
            out += self.payload
        return out

    def json(self) -> str:
        doc: dict = {"command": self.command}
        if self.verdicts:
            doc["verdicts"] = {n: r.verdict for n, r, _ in self.verdicts}
            witnesses = {n: self._witness_json(r) for n, r, _ in self.verdicts if not r.verdict}
            if witnesses:
                doc["witnesses"] = witnesses
        for key, value in self.facts:
            doc[key] = value
        if self.payload_json is not None:
            doc["output"] = self.payload_json
        doc["exit"] = self.exit_code
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _structure(path: str) -> FuzzyGammaHyperop:
    try:
        return parse_structure(_read(path))
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


def _subset(H: FuzzyGammaHyperop, spec: str) -> FuzzySubset:
    """An element label (its point), an inline ``label=grade,...`` list, or a subset document path."""
    c = H.carrier
    if spec in c.elements:
        return c.point(c.index(spec))
    if "=" in spec:
        return parse_inline_subset(spec, c)
    try:
        return parse_subset(_read(spec), c)
    except FormatError as exc:
        raise FormatError(f"{spec}: {exc}") from None


def _relation(H: FuzzyGammaHyperop, text: str) -> EquivRelation:
    try:
        return EquivRelation.parse(H.carrier, text.replace("{", "").replace("}", ""))
    except ValueError as exc:
        raise FormatError(f"relation {text!r}: {exc}") from None


def _subset_json(mu: FuzzySubset) -> dict:
    return {e: str(g) for e, g in zip(mu.carrier.elements, mu.grades) if g}


def _structure_payload(report: Report, H):
    report.payload = emit_structure(H)
    report.payload_json = json.loads(report.payload)


def cmd_check(args) -> Report:
    H = _structure(args.file)
    r = Report("check", H.carrier)
    r.verdict("associative", is_associative(H))
    r.verdict("hypergroup", is_hypergroup(H), required=args.hypergroup)
    return r


def cmd_compose(args) -> Report:
    H = _structure(args.file)
    c = H.carrier
    g = c.sort_index(args.gamma)
    left_is_elem = args.left in c.elements
    right_is_elem = args.right in c.elements
    if left_is_elem and right_is_elem:
        form, mu = "element", compose_elem(H, c.index(args.left), g, c.index(args.right))
    elif left_is_elem:
        form, mu = "left", compose_left(H, c.index(args.left), g, _subset(H, args.right))
    elif right_is_elem:
        form, mu = "right", compose_right(H, _subset(H, args.left), g, c.index(args.right))
    else:
        form, mu = "fuzzy", compose_fuzzy(H, _subset(H, args.left), g, _subset(H, args.right))
    r = Report("compose", c)
    r.fact("form", form)
    r.fact("result", str(mu))
    r.payload_json = _subset_json(mu)
    return r


def cmd_cut(args) -> Report:
    H = _structure(args.file)
    try:
        p = as_grade(Fraction(args.p))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--p: {exc}") from None
    K = cut_structure(H, p)
    r = Report("cut", H.carrier)
    r.fact("p", str(p))
    r.fact("partial", K.partial)
    _structure_payload(r, K)
    return r


def cmd_ideal(args) -> Report:
    H = _structure(args.file)
    mu = _subset(H, args.subset)
    kinds = [k for k in IDEAL_KINDS if getattr(args, k)] or list(IDEAL_KINDS)
    r = Report("ideal", H.carrier)
    for k in kinds:
        name, predicate = IDEAL_KINDS[k]
        r.verdict(name, predicate(H, mu))
    return r


def cmd_generate(args) -> Report:
    H = _structure(args.file)
    mu = _subset(H, args.subset)
    gen = generate_left_ideal if args.side == "left" else generate_right_ideal
    ideal = gen(H, mu)
    r = Report("generate", H.carrier)
    r.fact("side", args.side)
    r.fact("generated", str(ideal))
    if args.oracle:
        d = args.grid or common_denominator(list(H.grades()) + list(mu.grades))
        oracle = oracle_min_left_ideal if args.side == "left" else oracle_min_right_ideal
        expected = oracle(H, mu, GradeGrid(d), budget=args.budget)
        diff = [t for t in range(H.carrier.size) if ideal[t] != expected[t]]
        if diff:
            t = diff[0]
            check = fail(point=t, left=ideal[t], right=expected[t], note="closure formula vs brute-force meet")
        else:
            check = CheckReport(True)
        r.verdict("oracle agreement", check)
        r.fact("oracle grid", f"1/{d}")
    r.payload = emit_subset(ideal)
    r.payload_json = _subset_json(ideal)
    return r


def cmd_convert(args) -> Report:
    H = _structure(args.file)
    r = Report("convert", H.carrier)
    r.fact("to", args.to)
    _structure_payload(r, psi(H) if args.to == "crisp" else phi(fuzzy_as_crisp(H)))
    return r


def cmd_hom(args) -> Report:
    H1, H2 = _structure(args.source), _structure(args.target)
    f = CarrierMap.from_labels(H1.carrier, H2.carrier, parse_map(_read(args.map)))
    r = Report("hom", H1.carrier)
    if args.crisp:
        r.verdict("crisp homomorphism", is_crisp_homomorphism(f, fuzzy_as_crisp(H1), fuzzy_as_crisp(H2)))
    else:
        r.verdict("fuzzy homomorphism", is_fuzzy_homomorphism(f, H1, H2))
    return r


def cmd_relation(args) -> Report:
    H = _structure(args.file)
    rho = _relation(H, args.relation)
    both = not (args.regular or args.strong)
    r = Report("relation", H.carrier)
    r.fact("relation", str(rho))
    r.verdict("regular", is_fuzzy_regular(H, rho), required=both or args.regular)
    r.verdict("strongly regular", is_fuzzy_strongly_regular(H, rho), required=both or args.strong)
    return r


def cmd_quotient(args) -> Report:
    H = _structure(args.file)
    rho = _relation(H, args.relation)
    r = Report("quotient", H.carrier)
    r.fact("relation", str(rho))
    r.fact("kind", "crisp" if args.crisp else "fuzzy")
    strong = is_fuzzy_strongly_regular(H, rho)
    r.verdict("strongly regular", strong, required=args.strong)
    if args.strong and not strong:
        return r
    if args.crisp:
        try:
            Q = quotient_crisp(H, rho)
        except QuotientError as exc:
            r.verdict("well defined", exc.report)
            return r
    else:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NotStronglyRegularWarning)
            Q = quotient_fuzzy(H, rho, check=False)
    _structure_payload(r, Q)
    return r


def cmd_enumerate(args) -> Report:
    spec = EnumSpec(args.size, args.gammas, GradeGrid(args.denominator), args.filter)
    hits = []
    keys = set()
    for i, H in enumerate_indexed(spec, budget=args.budget, cursor=args.cursor, limit=args.limit):
        hits.append(i)
        if args.iso:
            keys.add(canonical_key(H))
    r = Report("enumerate")
    r.fact("raw", spec.raw_count)
    r.fact("filter", spec.filter)
    r.fact("cursor", args.cursor)
    r.fact("accepted", len(hits))
    if args.iso:
        r.fact("isomorphism classes", len(keys))
    if args.limit is not None and len(hits) == args.limit:
        r.fact("next cursor", hits[-1] + 1)
    if args.list:
        r.fact("cursors", hits)
    return r


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gamma-hyperlab", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable report")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable report")

    p = sub.add_parser("check", parents=[common], help="associativity and hypergroup axioms")
    p.add_argument("file")
    p.add_argument("--axioms", action="store_true", help="check the axioms (default)")
    p.add_argument("--hypergroup", action="store_true", help="also require the reproduction axiom")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("compose", parents=[common], help="a∘γ∘b, a∘γ∘μ, μ∘γ∘a or μ∘γ∘ν")
    p.add_argument("file")
    p.add_argument("left", help="element label, inline subset 'a=1/2,b=1' or subset document")
    p.add_argument("gamma")
    p.add_argument("right")
    p.set_defaults(run=cmd_compose)

    p = sub.add_parser("cut", parents=[common], help="crisp structure of the p-cuts")
    p.add_argument("file")
    p.add_argument("--p", required=True)
    p.set_defaults(run=cmd_cut)

    p = sub.add_parser("ideal", parents=[common], help="sub-hypersemigroup and ideal predicates")
    p.add_argument("file")
    p.add_argument("--subset", required=True)
    for k, (name, _) in IDEAL_KINDS.items():
        p.add_argument(f"--{k}", action="store_true", help=f"check {name}")
    p.set_defaults(run=cmd_ideal)

    p = sub.add_parser("generate", parents=[common], help="ideal generated by a fuzzy subset")
    p.add_argument("file")
    p.add_argument("--subset", required=True)
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("--oracle", action="store_true", help="cross-check against the brute-force meet")
    p.add_argument("--grid", type=int, help="oracle grid denominator")
    p.add_argument("--budget", type=int, default=1_000_000)
    p.set_defaults(run=cmd_generate)

    p = sub.add_parser("convert", parents=[common], help="support (crisp) or characteristic (fuzzy) form")
    p.add_argument("file")
    p.add_argument("--to", choices=("crisp", "fuzzy"), required=True)
    p.set_defaults(run=cmd_convert)

    p = sub.add_parser("hom", parents=[common], help="homomorphism check for a label map")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--map", required=True)
    p.add_argument("--crisp", action="store_true")
    p.set_defaults(run=cmd_hom)

    p = sub.add_parser("relation", parents=[common], help="regular and strongly regular predicates")
    p.add_argument("file")
    p.add_argument("--relation", required=True, help="blocks such as '0,1|2'")
    p.add_argument("--regular", action="store_true")
    p.add_argument("--strong", action="store_true")
    p.set_defaults(run=cmd_relation)

    p = sub.add_parser("quotient", parents=[common], help="quotient by an equivalence relation")
    p.add_argument("file")
    p.add_argument("--relation", required=True)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--crisp", action="store_true")
    kind.add_argument("--fuzzy", action="store_true")
    p.add_argument("--strong", action="store_true", help="require strong regularity")
    p.set_defaults(run=cmd_quotient)

    p = sub.add_parser("enumerate", parents=[common], help="census of structures on a grade grid")
    p.add_argument("--size", type=int, required=True, help="|M|")
    p.add_argument("--gammas", type=int, default=1, help="|Γ|")
    p.add_argument("--denominator", type=int, default=1)
    p.add_argument("--filter", choices=FILTERS, default="all")
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--cursor", type=int, default=0)
    p.add_argument("--limit", type=int)
    p.add_argument("--iso", action="store_true", help="count classes up to relabelling of M")
    p.add_argument("--list", action="store_true", help="print accepted cursors")
    p.set_defaults(run=cmd_enumerate)
    return parser


def run_command(argv, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        report = args.run(args)
    except (UsageError, FormatError, BudgetExceeded, ValueError, IndexError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    stdout.write(report.json() if args.json else report.text())
    return report.exit_code


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
