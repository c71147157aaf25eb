"""Command-line interface: ``splinedim <command> mesh.json [options]``.

Exit status: 0 on success, 1 when the input mesh or ordering is invalid,
2 when a runtime consistency check fails (a bug, never masked), 64 on
usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import __version__
from .mesh import MeshError, Triangulation, parse_triangulation, validate_disk
from .ordering import (
    InternalInconsistencyError,
    OrderingError,
    exactness_certificate,
    find_certified_ordering,
    find_schumaker_ordering,
    lemma_order,
    minimize_upper_bound,
    tilde_slope_counts,
)
from .oracle import spline_dimension
from .bounds import lower_bound_hom
from .refine import CrossingConditionError, ps6_numbering, ps6_split, ps12_split
from .report import bound_report

EXIT_OK, EXIT_INVALID, EXIT_INCONSISTENT, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_k_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad degree range {text!r}; use A or A..B") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty degree range {text!r}")
    return a, b


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return str(v)


def render_rows(rows: list[dict], columns: Sequence[str], fmt: str, document=None) -> str:
    if fmt == "json":
        return dumps_json(document if document is not None else rows)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_cell(row.get(c)) for c in columns])
        return buf.getvalue()
    cells = [[_cell(row.get(c)) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells]
    return "\n".join(lines) + "\n"


def _load(path: str) -> tuple[Triangulation, dict]:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    return parse_triangulation(doc), doc


def _ordering_from(args, doc: dict) -> tuple[int, ...] | None:
    if getattr(args, "ordering_file", None):
        with open(args.ordering_file, encoding="utf-8") as fh:
            data = json.load(fh)
        if isinstance(data, dict):
            data = data.get("ordering", data.get("interior_ordering"))
        return tuple(int(v) for v in data)
    if "interior_ordering" in doc:
        return tuple(int(v) for v in doc["interior_ordering"])
    return None


def _degrees(args) -> range:
    lo, hi = args.k
    if args.r < 0:
        raise UsageError("--r must be nonnegative")
    if lo < args.r:
        raise UsageError(f"need r <= k, got r={args.r} and k={lo}")
    return range(lo, hi + 1)


def cmd_validate(args, out) -> int:
    with open(args.mesh, encoding="utf-8") as fh:
        T = parse_triangulation(fh.read(), validate=False)
    rep = validate_disk(T)
    doc = {"valid": rep.ok, "failures": rep.failures, "checks": list(rep.checks), "note": rep.note, **T.f_vector()}
    if args.format == "json":
        out.write(dumps_json(doc))
    else:
        rows = [{"check": c, "status": "FAIL: " + rep.failures[c] if c in rep.failures else "ok"} for c in rep.checks]
        out.write(render_rows(rows, ["check", "status"], args.format))
    return EXIT_OK if rep.ok else EXIT_INVALID


def cmd_stats(args, out) -> int:
    T, _ = _load(args.mesh)
    rows = [
        {"vertex": g, "t": T.slope_counts[g], "degree": len(T.neighbors[g])}
        for g in T.interior_vertices
    ]
    doc = {"f_vector": T.f_vector(), "interior_vertices": rows, "lemma_order": list(lemma_order(T))}
    if args.format == "json":
        out.write(dumps_json(doc))
    else:
        fv = T.f_vector()
        out.write(render_rows([fv], list(fv), args.format))
        out.write(render_rows(rows, ["vertex", "t", "degree"], args.format))
    return EXIT_OK


BOUND_COLUMNS = ["r", "k", "lbh", "lbs", "ubh_for_ordering", "ubs_for_ordering", "best_ubh", "ubs_schumaker",
                 "oracle_dim", "homology_defect", "exactness_certified", "polynomial_floor"]


def cmd_bounds(args, out) -> int:
    T, doc = _load(args.mesh)
    ks = _degrees(args)
    ordering = None
    strategy = args.order
    if strategy == "file":
        ordering = _ordering_from(args, doc)
        if ordering is None:
            raise UsageError("--order file needs --ordering-file or an interior_ordering entry in the mesh")
        strategy = "auto"
    search = find_schumaker_ordering(T)
    reports = [
        bound_report(T, args.r, k, ordering=ordering, strategy=strategy, oracle=args.oracle,
                     formulation=args.formulation, budget=args.budget, seed=args.seed, schumaker=search).to_dict()
        for k in ks
    ]
    document = {"f_vector": T.f_vector(), "reports": reports}
    out.write(render_rows(reports, BOUND_COLUMNS, args.format, document))
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    T, _ = _load(args.mesh)
    rows = []
    for k in _degrees(args):
        dim = spline_dimension(T, args.r, k, formulation=args.formulation)
        lbh = lower_bound_hom(T, args.r, k)
        if dim < lbh:
            raise InternalInconsistencyError(f"dimension {dim} below lower bound {lbh} at k={k}")
        rows.append({"r": args.r, "k": k, "dimension": dim, "lbh": lbh, "homology_defect": dim - lbh})
    out.write(render_rows(rows, ["r", "k", "dimension", "lbh", "homology_defect"], args.format, {"results": rows}))
    return EXIT_OK


def cmd_certify(args, out) -> int:
    T, doc = _load(args.mesh)
    ordering = _ordering_from(args, doc)
    source = "supplied"
    if ordering is None:
        ordering, source = find_certified_ordering(T, args.r), "search"
    if ordering is None:
        certified, tilde = False, None
    else:
        stats = tilde_slope_counts(T, ordering)
        certified, tilde = exactness_certificate(T, stats, args.r), list(stats.tilde_t)
    result = {
        "r": args.r,
        "certified": certified,
        "ordering": list(ordering) if ordering is not None else None,
        "ordering_source": source,
        "tilde_t": tilde,
    }
    if args.format == "json":
        out.write(dumps_json(result))
    elif args.format == "csv":
        out.write(render_rows([result], list(result), "csv"))
    else:
        out.write("exactness certified\n" if certified else "not certified\n")
        if ordering is not None:
            out.write(f"ordering: {' '.join(map(str, ordering))} ({source})\n")
    return EXIT_OK


def cmd_refine(args, out) -> int:
    T, _ = _load(args.mesh)
    if args.scheme == "ps12":
        rec = ps12_split(T)
        doc = rec.to_dict()
    else:
        rec = ps6_split(T, args.interior)
        doc = rec.to_dict()
        doc["interior_ordering"] = list(ps6_numbering(rec))
    out.write(dumps_json(doc))
    return EXIT_OK


def cmd_order(args, out) -> int:
    T, _ = _load(args.mesh)
    if args.strategy == "schumaker-search":
        res = find_schumaker_ordering(T, budget=args.budget)
        doc = {"strategy": args.strategy, "status": res.status,
               "ordering": list(res.ordering) if res.ordering is not None else None}
    else:
        k = _degrees(args)[0]
        res = minimize_upper_bound(T, args.r, k, args.budget, strategy=args.strategy, seed=args.seed)
        stats = tilde_slope_counts(T, res.ordering)
        doc = {"strategy": res.strategy, "r": args.r, "k": k, "ordering": list(res.ordering),
               "tilde_t": list(stats.tilde_t), "ubh": res.value, "lbh": lower_bound_hom(T, args.r, k)}
    if args.format == "json":
        out.write(dumps_json(doc))
    else:
        out.write(render_rows([doc], list(doc), args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="splinedim", description="Dimension bounds for bivariate spline spaces.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, degrees=True):
        sp.add_argument("mesh", help="mesh JSON file")
        sp.add_argument("--format", choices=["table", "json", "csv"], default="table")
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--seed", type=int, default=None)
        if degrees:
            sp.add_argument("--r", type=int, required=True, help="smoothness")
            sp.add_argument("--k", type=parse_k_range, required=True, help="degree or range A..B")
        return sp

    common(sub.add_parser("validate", help="check the disk invariants"), degrees=False)
    common(sub.add_parser("stats", help="f-vector and slope counts"), degrees=False)
    b = common(sub.add_parser("bounds", help="LBH/LBS/UBH/UBS table"))
    b.add_argument("--order", choices=["auto", "exhaustive", "greedy", "file"], default="auto")
    b.add_argument("--ordering-file")
    b.add_argument("--oracle", action="store_true", help="also compute the exact dimension")
    b.add_argument("--formulation", choices=["assembled", "conformality"], default="assembled")
    b.add_argument("--budget", type=int, default=20_000)
    o = common(sub.add_parser("oracle", help="exact dimension and homology defect"))
    o.add_argument("--formulation", choices=["assembled", "conformality"], default="assembled")
    c = common(sub.add_parser("certify", help="exactness certificate"), degrees=False)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--ordering-file")
    rf = common(sub.add_parser("refine", help="Powell-Sabin refinement"), degrees=False)
    rf.add_argument("--scheme", choices=["ps6", "ps12"], required=True)
    rf.add_argument("--interior", choices=["auto", "centroid", "incenter"], default="auto")
    od = common(sub.add_parser("order", help="search interior-vertex orderings"), degrees=False)
    od.add_argument("--strategy", choices=["exhaustive", "greedy", "schumaker-search"], required=True)
    od.add_argument("--r", type=int, default=1)
    od.add_argument("--k", type=parse_k_range, default=None)
    od.add_argument("--budget", type=int, default=20_000)
    return p


COMMANDS = {
    "validate": cmd_validate,
    "stats": cmd_stats,
    "bounds": cmd_bounds,
    "oracle": cmd_oracle,
    "certify": cmd_certify,
    "refine": cmd_refine,
    "order": cmd_order,
}


def main(argv: Sequence[str] | None = None, stdout=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "order" and args.k is None:
        args.k = (max(args.r, 2), max(args.r, 2))
    out = io.StringIO()
    try:
        status = COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"splinedim: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MeshError, OrderingError, CrossingConditionError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"splinedim: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InternalInconsistencyError as exc:
        print(f"splinedim: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    text = out.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        (stdout or sys.stdout).write(text)
    return status


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
