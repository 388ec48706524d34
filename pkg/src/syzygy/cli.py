"""Command line interface: ``syzygy betti|break|verify|verify-subadditivity|search``.

Input documents are line based::

    # comments start with '#'
    variables: a b c d e
    ideal: ac bc ad bd ae be cde

or, for a simplicial complex, one ``facet:`` line per facet (names separated by
spaces, or run together when all names are single letters).  An empty
``facet:`` line is the empty face; a complex with no facet lines is void.

Exit codes: 0 success, 1 usage or parse error, 2 hypothesis not met,
3 verification failure, 4 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from .betti import BettiTable, betti_gpw, betti_hochster, check_subadditivity_at_top, polarize
from .breaker import (BreakCertificateInduced, BreakCertificateLink, break_induced, break_on_links,
                      search_induced_certificates, search_link_certificates, search_question_complements,
                      verify_certificate_induced, verify_certificate_link)
from .combinatorics import SimplicialComplex, _split_names, alexander_dual
from .errors import CapExceededError, HypothesisError, VerificationError
from .homology import Chain, FieldSpec, reduced_betti
from .monomial import MonomialIdeal, MonomialParseError, parse_monomial, stanley_reisner_complex
from .sampling import random_squarefree_ideal

EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_VERIFY, EXIT_CAP = 0, 1, 2, 3, 4


class DocumentError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line, self.col = line, col


@dataclass(frozen=True)
class InputDocument:
    kind: str  # "ideal" or "complex"
    variables: tuple[str, ...]
    body: tuple[str, ...]

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.variables, tuple(parse_monomial(g, self.variables) for g in self.body))

    def complex(self) -> SimplicialComplex:
        return SimplicialComplex.from_names([tuple(f.split()) for f in self.body], self.variables)


def parse_document(text: str) -> InputDocument:
    variables: tuple[str, ...] | None = None
    kind = None
    body: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        key, sep, rest = line.partition(":")
        col = len(line) - len(line.lstrip()) + 1
        key = key.strip()
        if not sep:
            raise DocumentError("expected 'key: value'", lineno, col)
        rest_col = line.index(":") + 2 + len(rest) - len(rest.lstrip())
        if key == "variables":
            if variables is not None:
                raise DocumentError("duplicate variables line", lineno, col)
            variables = tuple(rest.split())
            if not variables or len(set(variables)) != len(variables):
                raise DocumentError("variables must be distinct and nonempty", lineno, rest_col)
            continue
        if key not in ("ideal", "facet"):
            raise DocumentError(f"unknown key {key!r}", lineno, col)
        if variables is None:
            raise DocumentError("'variables:' must come first", lineno, col)
        this = "ideal" if key == "ideal" else "complex"
        if kind not in (None, this):
            raise DocumentError("cannot mix ideal and facet lines", lineno, col)
        kind = this
        if this == "ideal":
            offset = line.index(":") + 1
            for token in rest.split():
                pos = line.index(token, offset)
                offset = pos + len(token)
                try:
                    parse_monomial(token, variables)
                except MonomialParseError as exc:
                    raise DocumentError(str(exc), lineno, pos + exc.pos + 1) from None
                body.append(token)
        else:
            tokens = rest.split()
            if len(tokens) == 1 and tokens[0] not in variables:
                try:
                    tokens = _split_names(tokens[0], variables)
                except ValueError as exc:
                    raise DocumentError(str(exc), lineno, line.index(tokens[0]) + 1) from None
            for t in tokens:
                if t not in variables:
                    raise DocumentError(f"unknown vertex {t!r}", lineno, line.index(t) + 1)
            body.append(" ".join(tokens))
    if variables is None:
        raise DocumentError("missing 'variables:' line", 1, 1)
    return InputDocument(kind or "complex", variables, tuple(body))


def format_document(doc: InputDocument) -> str:
    lines = ["variables: " + " ".join(doc.variables)]
    if doc.kind == "ideal":
        lines.append("ideal: " + " ".join(doc.body))
    else:
        lines.extend(("facet: " + f).rstrip() for f in doc.body)
    return "\n".join(lines) + "\n"


def document_from_ideal(I: MonomialIdeal) -> InputDocument:
    sep = "" if all(len(v) == 1 for v in I.variables) else "*"
    return InputDocument("ideal", I.variables, tuple(g.format(I.variables, sep) for g in I.generators))


def document_from_complex(K: SimplicialComplex) -> InputDocument:
    return InputDocument("complex", K.vertices, tuple(" ".join(K.names(f)) for f in K.facets))


# -- rendering ----------------------------------------------------------------

def render_betti(B: BettiTable) -> str:
    """Macaulay2-style table: rows j - i, columns i, leading 'total:' row."""
    grid = B.grid()
    totals = B.totals()
    cols = len(totals)
    cells = [[str(i) for i in range(cols)], [str(t) for t in totals]]
    cells += [[str(x) if x else "." for x in row] for row in grid]
    labels = ["", "total:"] + [f"{r}:" for r in range(len(grid))]
    w0 = max(len(s) for s in labels)
    widths = [max(len(row[c]) for row in cells) for c in range(cols)]
    return "\n".join(" ".join([lab.rjust(w0)] + [row[c].rjust(widths[c]) for c in range(cols)])
                     for lab, row in zip(labels, cells)) + "\n"


def betti_json(B: BettiTable) -> dict:
    return {
        "variables": list(B.variables),
        "field": str(B.field),
        "totals": B.totals(),
        "table": B.grid(),
        "multigraded": [{"i": i, "multidegree": m.format(B.variables), "degree": m.degree, "rank": r}
                        for (i, m), r in B.multigraded.items()],
    }


def _chain_json(c: Chain | None):
    if c is None:
        return None
    K = c.complex
    return {"dim": c.dim, "terms": [[list(K.names(f)), str(x)] for f, x in c.terms.items()]}


def certificate_json(cert, k: FieldSpec) -> dict:
    K = cert.complex
    base = {"field": str(k), "variables": list(K.vertices), "facets": [list(K.names(f)) for f in K.facets],
            "a": cert.a, "b": cert.b, "witnesses": list(cert.witnesses)}
    if isinstance(cert, BreakCertificateLink):
        base.update(kind="link-certificate", F=list(K.names(cert.F)), G=list(K.names(cert.G)),
                    A=list(cert.A), B=list(cert.B), sigma_F=_chain_json(cert.sigma_F),
                    sigma_G=_chain_json(cert.sigma_G))
    else:
        base.update(kind="induced-certificate", C=list(K.names(cert.C)), D=list(K.names(cert.D)),
                    method=cert.method)
    return base


def certificate_from_json(data: dict):
    """Rebuild ``(complex, certificate, field)`` from :func:`certificate_json` output."""
    k = FieldSpec.parse(data.get("field", "rat"))
    K = SimplicialComplex.from_names([tuple(f) for f in data["facets"]], data["variables"])
    if data["kind"] == "link-certificate":
        from .combinatorics import link

        def chain(spec, face):
            if spec is None:
                return None
            terms = {K.face(names): Fraction(x) for names, x in spec["terms"]}
            return Chain(link(K, face), spec["dim"], terms, k)

        F, G = K.face(data["F"]), K.face(data["G"])
        cert = BreakCertificateLink(K, data["a"], data["b"], F, G, tuple(data["A"]), tuple(data["B"]),
                                    tuple(data["witnesses"]), chain(data.get("sigma_F"), F),
                                    chain(data.get("sigma_G"), G))
    elif data["kind"] == "induced-certificate":
        cert = BreakCertificateInduced(K, data["a"], data["b"], K.face(data["C"]), K.face(data["D"]),
                                       tuple(data["witnesses"]), data.get("method", ""))
    else:
        raise ValueError(f"unknown certificate kind {data['kind']!r}")
    return K, cert, k


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


# -- commands -----------------------------------------------------------------

def _read(path: str) -> InputDocument:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return parse_document(text)


def _ideal(doc: InputDocument) -> MonomialIdeal:
    if doc.kind != "ideal":
        raise ValueError("this command needs an ideal: input")
    I = doc.ideal()
    if I.is_zero:
        raise ValueError("zero ideal")
    return I


def cmd_betti(args, out) -> int:
    I = _ideal(_read(args.input))
    if I.is_squarefree:
        B = betti_hochster(I, args.field, full_sweep=args.full_sweep, threads=args.threads)
    else:
        B = betti_gpw(I, args.field, threads=args.threads)
    if args.format == "json":
        out.write(_dump(betti_json(B)) + "\n")
    else:
        out.write(render_betti(B))
    return EXIT_OK


def cmd_break(args, out) -> int:
    doc = _read(args.input)
    if doc.kind == "ideal":
        gamma = stanley_reisner_complex(doc.ideal())
        target = alexander_dual(gamma) if args.mode == "links" else gamma
    else:
        target = doc.complex()
    if args.mode == "links":
        cert = break_on_links(target, args.a, args.b, args.field)
    else:
        cert = break_induced(target, args.a, args.b, args.field, method=args.method)
    if args.format == "json":
        out.write(_dump(certificate_json(cert, args.field)) + "\n")
    else:
        out.write(cert.summary() + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    text = sys.stdin.read() if args.certificate == "-" else open(args.certificate, encoding="utf-8").read()
    data = json.loads(text)
    try:
        K, cert, k = certificate_from_json(data)
    except (ValueError, IndexError, TypeError) as exc:
        if "kind" not in data or "facets" not in data:
            raise ValueError(f"not a certificate: {exc}") from None
        out.write(f"INVALID certificate does not describe faces of the complex: {exc}\n")
        return EXIT_VERIFY
    check = verify_certificate_link if isinstance(cert, BreakCertificateLink) else verify_certificate_induced
    ok = check(K, cert, k)
    out.write(("VALID " if ok else "INVALID ") + cert.summary() + "\n")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_verify_subadditivity(args, out) -> int:
    I = _ideal(_read(args.input))
    report = check_subadditivity_at_top(I, args.field, threads=args.threads)
    if args.format == "json":
        out.write(_dump({
            "n": report.n, "d": report.d, "i": report.i, "beta_top": report.beta_top,
            "hypothesis_met": report.hypothesis_met, "passed": report.passed,
            "t": {str(a): t for a, t in report.t.items()},
            "splits": [{"a": s.a, "b": s.b, "t_a": s.t_a, "t_b": s.t_b, "t_i": s.t_i, "holds": s.holds}
                       for s in report.splits],
        }) + "\n")
    else:
        out.write("\n".join(report.lines()) + "\n")
    if not report.hypothesis_met:
        return EXIT_HYPOTHESIS
    return EXIT_OK if report.passed else EXIT_VERIFY


def _top_splits(gamma: SimplicialComplex, k: FieldSpec) -> list[tuple[int, int, int]]:
    """(i, a, b) with β_{i,[n]} = dim H̃_{n-i-1}(Γ) != 0 and i = a + b, a <= b."""
    n = gamma.n
    hb = reduced_betti(gamma, k)
    degrees = [n - d - 1 for d, r in enumerate(hb, start=-1) if r and n - d - 1 >= 1]
    return [(i, a, i - a) for i in sorted(degrees) for a in range(1, i // 2 + 1)]


def search_record(I: MonomialIdeal, question: str, k: FieldSpec, limit: int | None) -> dict:
    record = {"question": question, "variables": list(I.variables),
              "generators": list(document_from_ideal(I).body)}
    splits = []
    if question == "2.1":
        try:
            for r in search_question_complements(I, k, limit):
                splits.append({"i": r.i, "a": r.a, "b": r.b, "found": not r.none_found,
                               "witnesses": [[I.format(m), I.format(m2)] for m, m2 in r.witnesses]})
        except HypothesisError:
            pass
    else:
        gamma = stanley_reisner_complex(I)
        delta = alexander_dual(gamma)
        for i, a, b in _top_splits(gamma, k):
            if question == "2.4":
                certs = search_link_certificates(delta, a, b, k, limit)
                wit = [{"F": list(delta.names(c.F)), "G": list(delta.names(c.G))} for c in certs]
            else:
                certs = search_induced_certificates(gamma, a, b, k, limit)
                wit = [{"C": list(gamma.names(c.C)), "D": list(gamma.names(c.D))} for c in certs]
            splits.append({"i": i, "a": a, "b": b, "found": bool(certs), "witnesses": wit})
    record["hypothesis_met"] = bool(splits)
    record["splits"] = splits
    record["none_found"] = any(not s["found"] for s in splits)
    return record


def _parse_random(tokens: list[str]) -> dict[str, int]:
    spec = {}
    for t in tokens:
        key, sep, val = t.partition("=")
        if not sep or key not in ("n", "gens", "trials", "seed"):
            raise ValueError(f"bad --random token {t!r}; expected n=, gens=, trials=, seed=")
        spec[key] = int(val)
    missing = {"n", "gens", "trials", "seed"} - set(spec)
    if missing:
        raise ValueError(f"--random is missing {', '.join(sorted(missing))}")
    return spec


def cmd_search(args, out) -> int:
    limit = args.limit if args.all else 1
    if args.random is not None:
        if args.input:
            raise ValueError("give either an input file or --random, not both")
        spec = _parse_random(args.random)
        rng = random.Random(spec["seed"])
        instances = [random_squarefree_ideal(rng, spec["n"], spec["gens"], min_deg=2)
                     for _ in range(spec["trials"])]
    else:
        if not args.input:
            raise ValueError("give an input file or --random")
        instances = [polarize(_ideal(_read(args.input)))[0]]
    hits = 0
    for trial, I in enumerate(instances):
        record = {"trial": trial, **search_record(I, args.question, args.field, limit)}
        if args.random is not None:
            record["seed"] = spec["seed"]
        if record["none_found"]:
            hits += 1
            print(f"POTENTIAL COUNTEREXAMPLE (question {args.question}) trial {trial}: "
                  f"ideal ({','.join(record['generators'])}) in {' '.join(I.variables)}", file=sys.stderr)
        out.write(_dump(record) + "\n")
    if hits:
        print(f"{hits} instance(s) with no witness; records above are replayable", file=sys.stderr)
    return EXIT_OK


# -- entry point ---------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="syzygy", description="Betti numbers of monomial ideals and breaking of simplicial cycles.")
    parser.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker threads for per-multidegree homology (output does not depend on it)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, fmt=True):
        p.add_argument("--threads", type=int, default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        p.add_argument("--field", type=_field, default=FieldSpec(0),
                       help="rat (default) or gf:<p>; gf:2 is faster but loses signs")
        if fmt:
            p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("betti", help="Betti table of S/I")
    p.add_argument("input", help="input document, '-' for stdin")
    p.add_argument("--full-sweep", action="store_true", help="visit all 2^n multidegrees")
    common(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("break", help="break top homology into a certificate")
    p.add_argument("input")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--mode", choices=("links", "induced"), default="induced",
                   help="for an ideal input, links works on the Alexander dual of N(I), induced on N(I)")
    p.add_argument("--method", choices=("auto", "dual", "search"), default="auto")
    common(p)
    p.set_defaults(func=cmd_break)

    p = sub.add_parser("verify", help="re-verify a JSON certificate produced by 'break --format json'")
    p.add_argument("certificate")
    p.add_argument("--threads", type=int, default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-subadditivity", help="check t_i <= t_a + t_b at i = n - d + 1")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_verify_subadditivity)

    p = sub.add_parser("search", help="search witnesses for the complement / breaking questions")
    p.add_argument("input", nargs="?")
    p.add_argument("--random", nargs=4, metavar="KEY=VAL", help="n=<int> gens=<int> trials=<int> seed=<int>")
    p.add_argument("--question", choices=("2.1", "2.4", "2.6"), default="2.1")
    p.add_argument("--all", action="store_true", help="report all witnesses up to --limit")
    p.add_argument("--limit", type=int, default=100)
    common(p, fmt=False)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except DocumentError as exc:
        print(f"syzygy: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HypothesisError as exc:
        print(f"syzygy: hypothesis not met: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except VerificationError as exc:
        print(f"syzygy: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except CapExceededError as exc:
        print(f"syzygy: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"syzygy: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
