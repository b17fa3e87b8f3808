"""Command-line front end.

Exit status: 0 for a positive answer (fibred, isolated critical value,
negative definite, ...), 1 for a negative one, 2 for any error.
"""
import argparse
import json
import sys
from importlib import resources

from plumblink import linalg
from plumblink.brieskorn import brieskorn_isolated_critical_value
from plumblink.errors import PlumbingError, ZeroDenominatorQuotient
from plumblink.fibration import (
    fgbar_report,
    germ_multiplicities,
    is_fibred,
    multiplicity_vector,
    scale_to_fibred,
)
from plumblink.model import intersection_matrix, parse_multilink, serialize, validate
from plumblink.moves import blow_down_leaf, blow_up_leaf

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


def fmt_q(x):
    """Rational as ``p/q`` (or ``p`` when integral)."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_vec(v):
    return "(" + ", ".join(fmt_q(x) for x in v) + ")"


def _ordered(g, ids):
    return [vid for vid in g.ids if vid in ids]


def _load(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    g = parse_multilink(text)
    for d in validate(g):
        print(f"{path}: {d}", file=sys.stderr)
    return g


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _verdict_payload(g, verdict):
    return {
        "graph": g.name,
        "verdict": "fibred" if verdict.fibred else "not fibred",
        "reason": verdict.reason,
        "m": [fmt_q(x) for x in verdict.m],
        "rupture": _ordered(g, verdict.rupture),
        "reason_vertices": list(verdict.vertices),
        "det": str(linalg.determinant(intersection_matrix(g))),
    }


def cmd_check(args):
    g = _load(args.file)
    v = is_fibred(g)
    rupture = ", ".join(_ordered(g, v.rupture)) or "none"
    text = f"{v.describe()}\nm = {fmt_vec(v.m)}\nrupture vertices: {rupture}"
    _emit(args, _verdict_payload(g, v), text)
    return EXIT_YES if v.fibred else EXIT_NO


def cmd_mult(args):
    g = _load(args.file)
    payload = {"graph": g.name, "family": args.family}
    if args.family == "all":
        m = multiplicity_vector(g)
        text = f"m = {fmt_vec(m)}"
    else:
        germ = germ_multiplicities(g, args.family)
        m = germ.m
        payload["b"] = [fmt_q(x) for x in germ.b]
        payload["realizable"] = germ.realizable
        text = f"m = {fmt_vec(m)}; realizable: {'yes' if germ.realizable else 'no'}"
    payload["m"] = [fmt_q(x) for x in m]
    _emit(args, payload, text)
    return EXIT_YES


def cmd_fgbar(args):
    g = _load(args.file)
    try:
        report = fgbar_report(g)
    except ZeroDenominatorQuotient as exc:
        # the partial report is still worth showing before failing
        report = exc.report
        print(f"error: {exc}", file=sys.stderr)
        status = EXIT_ERROR
    else:
        status = EXIT_YES if report.isolated_critical_value else EXIT_NO

    quotients = {vid: report.contact_quotients[vid]
                 for vid in _ordered(g, report.contact_quotients)}
    payload = _verdict_payload(g, report.difference_verdict)
    payload["fgbar"] = {
        "mf": [fmt_q(x) for x in report.germ_f.m],
        "mg": [fmt_q(x) for x in report.germ_g.m],
        "quotients": {vid: fmt_q(q) for vid, q in quotients.items()},
        "ratio_set": [fmt_q(q) for q in sorted(report.ratio_set)],
        "condition_iii": report.condition_iii,
        "isolated_critical_value": report.isolated_critical_value,
    }
    shown = ", ".join(f"{vid}: {fmt_q(q)}" for vid, q in quotients.items())
    icv = "yes" if report.isolated_critical_value else "no"
    text = "\n".join([
        f"isolated critical value: {icv} (derived from condition iii); contact quotients: {{{shown}}}",
        f"m^f = {fmt_vec(report.germ_f.m)}",
        f"m^g = {fmt_vec(report.germ_g.m)}",
        f"L_f - L_g: {report.difference_verdict.describe()}",
    ])
    _emit(args, payload, text)
    return status


def cmd_negdef(args):
    g = _load(args.file)
    m = intersection_matrix(g)
    ok = linalg.is_negative_definite(m)
    payload = {
        "graph": g.name,
        "negative_definite": ok,
        "leading_minors": [str(x) for x in linalg.leading_minors(m)],
    }
    _emit(args, payload, "yes" if ok else "no")
    return EXIT_YES if ok else EXIT_NO


def cmd_det(args):
    g = _load(args.file)
    d = linalg.determinant(intersection_matrix(g))
    _emit(args, {"graph": g.name, "det": str(d)}, str(d))
    return EXIT_YES


def cmd_scale(args):
    g = _load(args.file)
    k = scale_to_fibred(g)
    payload = {"graph": g.name, "k": None if k is None else str(k)}
    if k is None:
        text = "k = none (m vanishes at a rupture vertex; no multiple is fibred)"
    else:
        text = f"k = {k}"
    _emit(args, payload, text)
    return EXIT_NO if k is None else EXIT_YES


def _cmd_move(args, move):
    g = _load(args.file)
    out = move(g, args.at)
    if args.json:
        print(json.dumps({"graph": out.name, "text": serialize(out)}, indent=2))
    else:
        sys.stdout.write(serialize(out))
    return EXIT_YES


def cmd_blowup(args):
    return _cmd_move(args, blow_up_leaf)


def cmd_blowdown(args):
    return _cmd_move(args, blow_down_leaf)


def cmd_brieskorn(args):
    ok = brieskorn_isolated_critical_value(args.exponents)
    payload = {"exponents": args.exponents, "isolated_critical_value": ok}
    _emit(args, payload, f"isolated critical value: {'yes' if ok else 'no'}")
    return EXIT_YES if ok else EXIT_NO


def corpus_files():
    """Names and paths of the bundled example graphs."""
    root = resources.files("plumblink") / "corpus"
    return sorted((p.name, p) for p in root.iterdir() if p.name.endswith(".plumb"))


def cmd_corpus(args):
    root = resources.files("plumblink") / "corpus"
    if args.name:
        name = args.name if args.name.endswith(".plumb") else args.name + ".plumb"
        sys.stdout.write((root / name).read_text(encoding="utf-8"))
        return EXIT_YES
    for name, path in corpus_files():
        print(path if args.paths else name)
    return EXIT_YES


def build_parser():
    parser = argparse.ArgumentParser(
        prog="plumblink",
        description="Fibredness of plumbing multilinks and isolated critical values of f*conj(g).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, file=True):
        p = sub.add_parser(name, help=help)
        if file:
            p.add_argument("file", help="graph file, or - for stdin")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, "decide whether the multilink is fibred")
    p = add("mult", cmd_mult, "multiplicity vector m = -M^-1 b")
    p.add_argument("--family", choices=["f", "g", "all"], default="all")
    add("fgbar", cmd_fgbar, "isolated critical value test for f*conj(g)")
    add("negdef", cmd_negdef, "is the intersection matrix negative definite?")
    add("det", cmd_det, "determinant of the intersection matrix")
    add("scale", cmd_scale, "least k with kL fibred")
    p = add("blowup", cmd_blowup, "blow up a new leaf at a vertex")
    p.add_argument("--at", required=True, metavar="VERTEX")
    p = add("blowdown", cmd_blowdown, "blow down a (-1)-leaf")
    p.add_argument("--at", required=True, metavar="VERTEX")
    p = add("brieskorn", cmd_brieskorn, "Brieskorn-Pham criterion sum(1/a_i) != 1", file=False)
    p.add_argument("exponents", nargs="+", type=int, metavar="A")
    p = sub.add_parser("corpus", help="list or print the bundled example graphs")
    p.add_argument("name", nargs="?")
    p.add_argument("--paths", action="store_true")
    p.set_defaults(func=cmd_corpus, json=False)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PlumbingError, OSError) as exc:
        if getattr(args, "json", False):
            print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
