"""Command-line front end: ``bbjsj check | split | present | jsj | oracle``.

Exit codes: 0 success, 1 hypothesis violation (or oracle counterexample),
2 unreadable or malformed input, 3 an enumeration cap was hit. Results go to
stdout; diagnostics go to stderr.
"""

import argparse
import json
import sys

from . import FORMAT_VERSION, __version__
from .checks import CHECKS
from .errors import HypothesisViolation, ParseError, SimplicialityError, SizeLimitExceeded
from .graph import Clique, cut_vertices, is_chordal, is_connected, connected_components, load_graph
from .jsj import export_dot, jsj_report, to_text
from .oracle import FILTERS, sweep_small_graphs
from .presentation import abelianization, check_finitely_presented, dicks_leary_presentation, reduced_presentation
from .splitting import bbg_splitting_verdict, raag_splitting_verdict
from .topology import flag_complex, h1_summary

EXIT_OK, EXIT_HYPOTHESIS, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


def _dump(obj):
    return json.dumps(obj, indent=2) + "\n"


def _witness_json(w):
    if isinstance(w, Clique):
        return list(w.members)
    if isinstance(w, (tuple, list)):
        return [_witness_json(x) for x in w]
    return w


def _witness_text(w):
    if isinstance(w, Clique):
        return str(w)
    if isinstance(w, (tuple, list)):
        if w and isinstance(w[0], (tuple, list)):
            return " | ".join(" ".join(c) for c in w)
        return " ".join(str(x) for x in w)
    return "" if w is None else str(w)


def _violation(exc, args, out):
    """Report a HypothesisViolation and return exit code 1."""
    print(f"hypothesis violated: {exc.hypothesis}", file=sys.stderr)
    if exc.witness is not None:
        print(f"witness: {_witness_text(exc.witness)}", file=sys.stderr)
    if getattr(args, "format", "text") == "json":
        out.write(_dump({
            "error": "hypothesis_violation",
            "hypothesis": exc.hypothesis,
            "witness": _witness_json(exc.witness),
        }))
    return EXIT_HYPOTHESIS


# subcommands


def cmd_check(args, out):
    g = load_graph(args.file)
    connected = is_connected(g)
    cert = is_chordal(g)
    cx = flag_complex(g)
    h = h1_summary(cx)
    violation = None
    try:
        check_finitely_presented(g)
    except HypothesisViolation as exc:
        violation = exc
    cuts = list(cut_vertices(g)) if connected and g.n else []
    hyp = {
        "finitely_generated": connected and g.n > 0,
        "finitely_presented": violation is None,
        "no_cut_vertex": connected and not cuts,
        "not_complete": not g.is_complete(),
    }
    hyp["jsj_without_blocks"] = hyp["finitely_presented"] and hyp["no_cut_vertex"] and hyp["not_complete"]
    report = {
        "vertices": g.n,
        "edges": g.num_edges,
        "connected": connected,
        "components": [list(c) for c in connected_components(g)],
        "cut_vertices": cuts,
        "chordal": cert.is_chordal,
        "perfect_elimination_order": list(cert.peo) if cert.is_chordal else None,
        "induced_cycle": None if cert.is_chordal else list(cert.witness_cycle),
        "f_vector": list(cx.f_vector),
        "euler_characteristic": cx.euler_characteristic,
        "h1": {"rank": h.h1_rank, "torsion": list(h.h1_torsion)},
        "hypotheses": hyp,
        "violation": None if violation is None else {
            "hypothesis": violation.hypothesis,
            "witness": _witness_json(violation.witness),
        },
    }
    if args.emit_complex:
        with open(args.emit_complex, "w", encoding="utf-8") as fh:
            fh.write(_dump(cx.to_dict()))
    if args.format == "json":
        out.write(_dump(report))
    else:
        yes = {True: "yes", False: "no"}
        lines = [
            f"vertices {g.n}, edges {g.num_edges}",
            f"connected: {yes[connected]}",
            "cut vertices: " + (" ".join(cuts) if cuts else "none"),
        ]
        if cert.is_chordal:
            lines.append("chordal: yes (elimination order " + " ".join(cert.peo) + ")")
        else:
            lines.append("chordal: no (induced cycle " + " ".join(cert.witness_cycle) + ")")
        lines.append("flag f-vector: " + " ".join(map(str, cx.f_vector)))
        lines.append(f"euler characteristic: {cx.euler_characteristic}")
        torsion = " ".join(f"Z/{d}" for d in h.h1_torsion) or "none"
        lines.append(f"H1: rank {h.h1_rank}, torsion {torsion}")
        for name, ok in hyp.items():
            lines.append(f"{name.replace('_', ' ')}: {yes[ok]}")
        if violation is not None:
            lines.append(f"violated: {violation.hypothesis} ({_witness_text(violation.witness)})")
        out.write("\n".join(lines) + "\n")
    if violation is not None:
        print(f"hypothesis violated: {violation.hypothesis}", file=sys.stderr)
        print(f"witness: {_witness_text(violation.witness)}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    return EXIT_OK


def cmd_split(args, out):
    g = load_graph(args.file)
    verdict = bbg_splitting_verdict(g) if args.group == "bbg" else raag_splitting_verdict(g)
    out.write(_dump(verdict.to_dict()) if args.format == "json" else verdict.to_text())
    return EXIT_OK


def cmd_present(args, out):
    g = load_graph(args.file)
    p = reduced_presentation(g) if args.reduced else dicks_leary_presentation(g)
    if args.format == "json":
        rank, torsion = abelianization(p)
        d = {"reduced": args.reduced}
        d.update(p.to_dict())
        d["abelianization"] = {"rank": rank, "torsion": torsion}
        out.write(_dump(d))
    else:
        out.write(p.to_text())
    return EXIT_OK


def cmd_jsj(args, out):
    g = load_graph(args.file)
    rep = jsj_report(g, args.group)
    if args.format == "json":
        out.write(_dump(rep.to_dict()))
    elif args.format == "dot":
        out.write(export_dot(rep.decomposition))
    else:
        text = to_text(rep.decomposition)
        if rep.kind == "blocks":
            text += f"blocks joined at cut vertices {' '.join(rep.cut_vertices)} ({rep.combination})\n"
        out.write(text)
    return EXIT_OK


def cmd_oracle(args, out):
    checks = args.check or sorted(CHECKS)
    report = sweep_small_graphs(
        args.max_n, checks, seed=args.seed, min_n=args.min_n, graph_filter=args.filter,
        sample=args.sample, threads=args.threads, max_examples=args.max_examples,
    )
    out.write(_dump(report.to_dict()))
    if not report.ok:
        print("counterexamples found", file=sys.stderr)
        return EXIT_HYPOTHESIS
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bbjsj",
        description="Abelian splittings and JSJ-decompositions of RAAGs and Bestvina-Brady groups.",
    )
    parser.add_argument(
        "--version", action="version",
        version=f"bbjsj {__version__} (format schema {FORMAT_VERSION})",
    )
    parser.add_argument("--threads", type=int, default=1, help="worker processes for sweeps (output unchanged)")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, help_text, formats=("text", "json")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="graph file (edge list or JSON)")
        p.add_argument("--format", choices=formats, default="text")
        return p

    p = with_file("check", "report connectivity, chordality, flag homology and hypotheses")
    p.add_argument("--emit-complex", metavar="PATH", help="write f-vector and boundary matrices as JSON")
    p.set_defaults(func=cmd_check)

    p = with_file("split", "decide abelian splitting")
    p.add_argument("--group", choices=("raag", "bbg"), required=True)
    p.set_defaults(func=cmd_split)

    p = with_file("present", "print the Dicks-Leary presentation")
    p.add_argument("--reduced", action="store_true", help="eliminate non-tree generators")
    p.set_defaults(func=cmd_present)

    p = with_file("jsj", "build the abelian JSJ-decomposition", formats=("text", "dot", "json"))
    p.add_argument("--group", choices=("raag", "bbg"), required=True)
    p.set_defaults(func=cmd_jsj)

    p = sub.add_parser("oracle", help="cross-check against brute force on small graphs")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--check", action="append", choices=sorted(CHECKS), help="repeatable; default all")
    p.add_argument("--sample", type=int, default=None, help="random masks per vertex count")
    p.add_argument("--filter", choices=FILTERS, default="chordal")
    p.add_argument("--max-examples", type=int, default=10)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be positive")
    if args.command == "oracle" and not 1 <= args.min_n <= args.max_n <= 8:
        parser.error("need 1 <= --min-n <= --max-n <= 8")
    try:
        return args.func(args, out)
    except HypothesisViolation as exc:
        return _violation(exc, args, out)
    except (ParseError, SimplicialityError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeLimitExceeded as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
