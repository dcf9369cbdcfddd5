"""Command line surface.

Exit codes: 0 success / verified, 1 verification failure or counterexample,
2 usage or parse errors. Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import audit, sweep_bound, verify_lemma22
from .casetrees import certify_all, two_trees, verify_certificate
from .enumeration import connected_graph_classes
from .extremal import build_H, parse_role_label
from .graphio import Graph6Error, emit_dot, emit_graph6, emit_json, parse_graph6, parse_json
from .graphs import Graph
from .oracle import kappa3, kappa_set


class CliError(Exception):
    """Usage or input problem; maps to exit code 2."""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as ex:
        raise CliError(f"cannot read {path}: {ex}") from ex


def _load_graph(path: str) -> tuple[Graph, dict[int, str] | None]:
    text = _read_text(path)
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            return parse_json(text)
        except (ValueError, KeyError) as ex:
            raise CliError(f"bad graph document in {path}: {ex}") from ex
    for line in text.splitlines():
        line = line.strip()
        if line:
            try:
                return parse_graph6(line), None
            except Graph6Error as ex:
                raise CliError(f"bad graph6 in {path}: {ex}") from ex
    raise CliError(f"no graph found in {path}")


def _parse_set(spec: str, g: Graph, labels: dict[int, str] | None) -> tuple[int, int, int]:
    parts = [p.strip() for p in spec.split(",") if p.strip()]
    if len(parts) != 3:
        raise CliError(f"--set needs three comma-separated vertices, got {spec!r}")
    by_label = {lab: v for v, lab in (labels or {}).items()}
    out = []
    for p in parts:
        if p.lstrip("-").isdigit():
            out.append(int(p))
        elif p in by_label:
            out.append(by_label[p])
        else:
            try:
                parse_role_label(p)
            except ValueError:
                raise CliError(f"not a vertex id or role label: {p!r}") from None
            raise CliError(f"label {p!r} needs a labelled input graph (construct --format json)")
    try:
        from .graphs import make_triple

        return make_triple(g.n, *out)
    except ValueError as ex:
        raise CliError(str(ex)) from ex


def _write_or_print(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        print(text)


def _cmd_construct(args) -> int:
    if args.k < 1:
        raise CliError("--k must be a positive integer")
    h = build_H(args.k)
    if args.format == "graph6":
        out = emit_graph6(h.graph)
    elif args.format == "json":
        out = emit_json(h.graph, h.labels())
    else:
        out = emit_dot(h.graph, h.labels()).rstrip("\n")
    _write_or_print(out, args.out)
    return 0


def _cmd_kappa3(args) -> int:
    g, _ = _load_graph(args.input)
    try:
        res = kappa3(g)
    except ValueError as ex:
        raise CliError(str(ex)) from ex
    if args.certificates:
        doc = {
            "kappa3": res.value,
            "argmin": list(res.argmin),
            "certificate": res.witness.to_json_dict() if res.witness else None,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(res.value)
    return 0


def _cmd_kappa_s(args) -> int:
    g, labels = _load_graph(args.input)
    s = _parse_set(args.set, g, labels)
    res = kappa_set(g, s)
    if args.certificates:
        doc = {
            "S": list(res.s),
            "kappa": res.kappa,
            "certificate": res.witness.to_json_dict() if res.witness else None,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(res.kappa)
    return 0


def _cmd_certify(args) -> int:
    if args.k < 1:
        raise CliError("--k must be a positive integer")
    if args.k == 2:
        raise CliError("k = 2 rejected: H(2) has 3-connectivity 1, no two-tree certificates")
    if (args.set is None) == (not args.all):
        raise CliError("choose exactly one of --set or --all")
    h = build_H(args.k)
    if args.set is not None:
        s = _parse_set(args.set, h.graph, h.labels())
        cert = two_trees(h, s)
        _write_or_print(json.dumps(cert.to_json_dict(h), indent=2), args.out)
        return 0
    certs: list = []
    report = certify_all(h, collect=certs.append if args.out else None)
    if args.out:
        Path(args.out).write_text(
            json.dumps([c.to_json_dict(h) for c in certs], indent=1)
        )
    if args.figures:
        from .figures import render_certify

        for p in render_certify(report, args.figures):
            print(f"wrote {p}", file=sys.stderr)
    print(
        f"H({args.k}): {report.total} 3-sets, {report.total - len(report.failures)} certified;"
        f" cases: " + ", ".join(f"{t}={c}" for t, c in sorted(report.by_case.items()))
    )
    return 0 if report.ok else 1


def _cmd_audit(args) -> int:
    g, _ = _load_graph(args.input)
    print(json.dumps(audit(g).to_json_dict(), indent=2))
    return 0


def _cmd_verify_lemma22(args) -> int:
    report = verify_lemma22()
    doc = {"command": "verify-lemma22", "inputs": {}, "results": report.to_json_dict(),
           "failures": [c for c in report.candidates if c["kappa3"] != 1]}
    if args.report:
        Path(args.report).write_text(json.dumps(doc, indent=2))
    if args.figures:
        from .figures import render_lemma22

        for p in render_lemma22(report, args.figures):
            print(f"wrote {p}", file=sys.stderr)
    c = report.census
    print(
        f"order-10/size-12 family: {c['classes_connected']} connected candidates"
        f" (of {c['labelled_connected']} labelled assignments);"
        f" all have 3-connectivity 1: {report.ok}"
    )
    return 0 if report.ok else 1


def _iter_graph6_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield f"line{lineno}:{line}", parse_graph6(line)
        except Graph6Error as ex:
            print(f"warning: skipping line {lineno}: {ex}", file=sys.stderr)


def _cmd_sweep(args) -> int:
    if args.stdin_graph6:
        text = sys.stdin.read()
    elif args.input:
        text = _read_text(args.input)
    else:
        raise CliError("sweep needs --stdin-graph6 or --input FILE")
    report = sweep_bound(_iter_graph6_lines(text))
    doc = {
        "command": "sweep",
        "inputs": {"graphs": len(report.rows)},
        "results": report.to_json_dict(),
        "failures": [r.name for r in report.violations + report.remark_violations],
    }
    if args.report:
        Path(args.report).write_text(json.dumps(doc, indent=2))
    if args.figures:
        from .figures import render_sweep

        for p in render_sweep(report, args.figures):
            print(f"wrote {p}", file=sys.stderr)
    swept = sum(1 for r in report.rows if r.kappa3 is not None)
    print(
        f"swept {swept} graphs: {len(report.violations)} below-bound violations,"
        f" {len(report.remark_violations)} equality-condition violations"
    )
    return 0 if report.ok else 1


def _cmd_corpus(args) -> int:
    if args.max_n < args.min_n:
        raise CliError("--max-n must be at least --min-n")
    if args.max_n > 8:
        raise CliError("corpus generation is supported for n <= 8")
    lines = []
    for n in range(args.min_n, args.max_n + 1):
        for g in connected_graph_classes(n):
            lines.append(emit_graph6(g))
    _write_or_print("\n".join(lines), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="treeconn",
        description="Exact generalized 3-connectivity: search, construction, certificates, bounds.",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("construct", help="build the tight graph H(k)")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--format", choices=("graph6", "json", "dot"), default="graph6")
    c.add_argument("--out")
    c.set_defaults(func=_cmd_construct)

    c = sub.add_parser("kappa3", help="3-connectivity of a graph by exact search")
    c.add_argument("--input", required=True, help="graph6 or JSON document file, - for stdin")
    c.add_argument("--certificates", action="store_true")
    c.set_defaults(func=_cmd_kappa3)

    c = sub.add_parser("kappa-s", help="kappa(S) for one 3-set")
    c.add_argument("--input", required=True)
    c.add_argument("--set", required=True, help="three ids or role labels, e.g. 0,2,5 or x1,x2,z1")
    c.add_argument("--certificates", action="store_true")
    c.set_defaults(func=_cmd_kappa_s)

    c = sub.add_parser("certify", help="two-tree certificates on H(k)")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--set", help="three ids or role labels")
    c.add_argument("--all", action="store_true", help="certify every 3-set")
    c.add_argument("--out", help="write certificates as JSON")
    c.add_argument("--figures", help="directory for case-count figure and CSV")
    c.set_defaults(func=_cmd_certify)

    c = sub.add_parser("audit", help="degree-2 decomposition and the 6n/5 edge bound")
    c.add_argument("--input", required=True)
    c.set_defaults(func=_cmd_audit)

    c = sub.add_parser("verify-lemma22", help="order-10/size-12 graphs all have 3-connectivity 1")
    c.add_argument("--report", help="write JSON report")
    c.add_argument("--figures", help="directory for candidate figures and CSV")
    c.set_defaults(func=_cmd_verify_lemma22)

    c = sub.add_parser("sweep", help="oracle + bound audit over a graph6 corpus")
    c.add_argument("--stdin-graph6", action="store_true")
    c.add_argument("--input", help="graph6 file (alternative to --stdin-graph6)")
    c.add_argument("--report", help="write JSON report")
    c.add_argument("--figures", help="directory for density figure and CSV")
    c.set_defaults(func=_cmd_sweep)

    c = sub.add_parser("corpus", help="emit all connected graphs up to isomorphism as graph6")
    c.add_argument("--min-n", type=int, default=3)
    c.add_argument("--max-n", type=int, required=True)
    c.add_argument("--out")
    c.set_defaults(func=_cmd_corpus)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return int(ex.code) if ex.code is not None else 2
    try:
        return args.func(args)
    except CliError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
