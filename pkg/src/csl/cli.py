"""The ``csl`` command line.

Exit status: 0 success, 2 search budget exhausted, 3 structural precondition
failed (bad input graph, impossible family parameters, ...), 1 anything
else, including a certified gap that differs from the expected one.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .constructions import VARIANTS, FamilySpec, build_family, default_family, read_rotation_file
from .errors import AllDegreeTwo, BudgetExceeded, CSLError, StructuralError
from .formats import HEADER, RunReport, dumps, read_planar_code, to_dot, write_planar_code
from .plane import PlaneGraph, build_from_rotation, is_k_connected
from .polyhedra import NAMED, named
from .reduction import (
    counting_report,
    discharge,
    interior_charge_check,
    long_faces_in,
    make_subcubic,
    reduce_to_g_prime,
    subdivided_path_bound_check,
)
from .spectrum import SearchBudget, gap_report
from .sweeps import SweepConfig, run_sweep
from .values import f, f3

EXIT_OK, EXIT_OTHER, EXIT_BUDGET, EXIT_STRUCTURAL = 0, 1, 2, 3


class UsageError(CSLError):
    """Missing or conflicting command line options."""


class _Parser(argparse.ArgumentParser):
    # usage errors must not collide with the budget exit status
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_OTHER, f"{self.prog}: error: {message}\n")


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000, 3)


def _emit(report: RunReport) -> None:
    print(dumps(report))


def load_graphs(source: str) -> list:
    """Graphs from a planar_code file, a rotation text file or a named graph."""
    path = Path(source)
    if path.exists():
        data = path.read_bytes()
        if data.startswith(HEADER):
            return read_planar_code(data)
        return [build_from_rotation(read_rotation_file(path))]
    if source in NAMED:
        return [named(source)]
    raise FileNotFoundError(f"{source}: no such file or named graph")


def graph_stats(G: PlaneGraph, connectivity: bool = True) -> dict:
    out = {"V": G.n, "E": G.m, "F": len(G.faces()), "cubic": G.is_cubic(), "genus": G.genus()}
    if connectivity:
        out["three_connected"] = is_k_connected(G, 3)
    return out


def _budget(args) -> SearchBudget | None:
    if args.budget_ms is None:
        return None
    return SearchBudget(max_seconds=args.budget_ms / 1000)


def _sources(args):
    """``(family spec or None, graph)`` pairs for commands that take a graph."""
    if args.input:
        return [(None, G) for G in load_graphs(args.input)]
    if args.family:
        if args.k is None:
            raise UsageError("--family needs --k")
        spec = FamilySpec(args.family, args.k, args.l)
        return [(spec, build_family(spec).graph)]
    raise UsageError("give an input file, a named graph or --family")


def _certify_one(spec, G, args, expect=None) -> tuple:
    t0 = time.perf_counter()
    k = args.k
    rep = RunReport("certify", family=spec.variant if spec else None, k=k, l=spec.l if spec else None,
                    n=G.n, m=G.m, seed=args.seed, inputs={"input": args.input, "max_len": args.max_len})
    if expect is None and spec is not None:
        expect = spec.expected_gap_end
    try:
        cert = gap_report(G, k, horizon=args.max_len, budget=_budget(args), jobs=args.jobs)
    except BudgetExceeded as exc:
        rep.status = "budget"
        rep.exhaustive = False
        rep.payload = {"partial_lengths": list(exc.partial.lengths), "horizon": exc.partial.horizon}
        rep.elapsed_ms = _ms(t0)
        return rep, EXIT_BUDGET
    rep.interval = list(cert.interval) if cert.interval else None
    rep.gap_end = cert.gap_end
    rep.witness_length = cert.witness_length
    rep.witness_vertices = list(cert.witness)
    rep.exhaustive = cert.exhaustive
    rep.payload = {"horizon": cert.horizon, "lengths": list(cert.lengths), "witness_source": cert.witness_source,
                   "expected_gap_end": expect}
    code = EXIT_OK
    if expect is not None and cert.gap_end != expect:
        rep.status = "mismatch"
        code = EXIT_OTHER
    rep.elapsed_ms = _ms(t0)
    return rep, code


def cmd_build(args) -> int:
    t0 = time.perf_counter()
    if args.family is None or args.k is None:
        raise UsageError("build needs --family and --k")
    spec = FamilySpec(args.family, args.k, args.l)
    fam = build_family(spec)
    G = fam.graph
    out = Path(args.out or f"{spec.variant}-k{spec.k}" + (f"-l{spec.l}" if spec.l else "") + ".pc")
    out.write_bytes(write_planar_code([G]))
    rep = RunReport("build", family=spec.variant, k=spec.k, l=spec.l, n=G.n, m=G.m,
                    interval=list(fam.expected_interval), seed=args.seed,
                    inputs={"out": str(out)}, stats=graph_stats(G, connectivity=args.check))
    rep.elapsed_ms = _ms(t0)
    _emit(rep)
    return EXIT_OK


def cmd_certify(args) -> int:
    if args.k is None:
        raise UsageError("certify needs --k")
    worst = EXIT_OK
    for spec, G in _sources(args):
        rep, code = _certify_one(spec, G, args, args.expect_gap_end)
        _emit(rep)
        worst = max(worst, code)
    return worst


def pipeline(G: PlaneGraph, k: int) -> dict:
    """Reduction, splitting, counting and (for cubic 3-connected inputs) charges."""
    Gp, trace = reduce_to_g_prime(G, k)
    G2, split = make_subcubic(Gp, k, G=G)
    out = {"trace": trace, "split": split, "g_prime": {"n": Gp.n, "m": Gp.m},
           "g_second": {"n": G2.n, "m": G2.m}}
    try:
        out["counting"] = counting_report(G2, k)
    except AllDegreeTwo:
        out["counting"] = None
    if G.is_cubic() and is_k_connected(G, 3):
        ledger = discharge(G, k, long_faces_in(G, Gp, k))
        out["discharge"] = ledger
        out["paths"] = subdivided_path_bound_check(Gp, k)
        out["interior"] = [interior_charge_check(G, Gp, F, ledger, k) for F in Gp.faces() if F.length < k]
    return out


def cmd_reduce(args) -> int:
    if args.k is None:
        raise UsageError("reduce needs --k")
    for spec, G in _sources(args):
        t0 = time.perf_counter()
        res = pipeline(G, args.k)
        trace = res["trace"]
        counting = res["counting"]
        payload = {
            "steps": len(trace.steps),
            "g_prime": res["g_prime"],
            "g_second": res["g_second"],
            "lemma": trace.properties,
            "split": res["split"].properties,
            "counting_failures": counting.failures if counting else None,
            "contradiction": counting.contradiction if counting else None,
        }
        if "discharge" in res:
            payload["deficient_faces"] = res["discharge"].deficient
            payload["max_path"] = res["paths"].max_path
        rep = RunReport("reduce", family=spec.variant if spec else None, k=args.k, l=spec.l if spec else None,
                        n=G.n, m=G.m, seed=args.seed, inputs={"input": args.input}, payload=payload)
        if args.out:
            Path(args.out).write_text(json.dumps(json.loads(dumps(res)), indent=1))
            rep.inputs["trace_out"] = args.out
        rep.elapsed_ms = _ms(t0)
        _emit(rep)
    return EXIT_OK


def cmd_sweep(args) -> int:
    t0 = time.perf_counter()
    cfg = SweepConfig(count=args.count, min_n=args.min_n, max_n=args.max_n, seed=args.seed or 0,
                      kmax=args.kmax, cubic=args.cubic, polyhedra=not args.no_polyhedra)
    res = run_sweep(cfg, jobs=args.jobs)
    rep = RunReport("sweep", seed=cfg.seed, payload=res.to_dict())
    if res.graphs and args.out:
        Path(args.out).write_bytes(write_planar_code(res.graphs))
        rep.inputs["counterexamples"] = args.out
    rep.status = "ok" if not res.violations else "violations"
    rep.elapsed_ms = _ms(t0)
    _emit(rep)
    return EXIT_OK if not res.violations else EXIT_OTHER


def _parse_ks(text: str) -> list:
    ks = []
    for part in text.split(","):
        if ".." in part:
            a, b = part.split("..")
            ks.extend(x for x in range(int(a), int(b) + 1) if x % 2)
        elif part:
            ks.append(int(part))
    return ks


def cmd_table(args) -> int:
    t0 = time.perf_counter()
    ks = _parse_ks(args.ks)
    rows = []
    worst = EXIT_OK
    for k in ks:
        for cubic in (True, False):
            row = {"k": k, "cubic": cubic}
            try:
                spec = default_family(k, cubic=cubic)
                row["family"] = spec.variant
                G = build_family(spec).graph
                cert = gap_report(G, k, budget=_budget(args), jobs=args.jobs)
                row["gap_end"] = cert.gap_end
                row["witness_length"] = cert.witness_length
                row["expected"] = (f3(k) if cubic else f(k)) - 1
                row["match"] = cert.gap_end == row["expected"]
                if not row["match"]:
                    worst = max(worst, EXIT_OTHER)
            except BudgetExceeded:
                row["error"] = "budget"
                worst = max(worst, EXIT_BUDGET)
            except CSLError as exc:
                row["error"] = f"{type(exc).__name__}: {exc}"
                worst = max(worst, EXIT_OTHER)
            rows.append(row)
            if not args.json:
                status = row.get("error") or ("ok" if row["match"] else "MISMATCH")
                print(f"k={k:<3} {row.get('family', '-'):<11} gap_end={row.get('gap_end', '-'):<4} "
                      f"expected={row.get('expected', '-'):<4} {status}", file=sys.stderr)
    rep = RunReport("table", seed=args.seed, payload={"rows": rows})
    rep.elapsed_ms = _ms(t0)
    if args.out:
        Path(args.out).write_text(dumps(rep) + "\n")
    _emit(rep)
    return worst


def cmd_export_dot(args) -> int:
    chunks = []
    for i, (_, G) in enumerate(_sources(args)):
        chunks.append(to_dot(G, args.k, name=f"G{i}"))
    text = "".join(chunks)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int)
    common.add_argument("--l", type=int)
    common.add_argument("--family", choices=VARIANTS)
    common.add_argument("--seed", type=int)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--budget-ms", type=int)
    common.add_argument("--max-len", type=int)
    common.add_argument("--out")

    p = _Parser(prog="csl", description="Gaps in cycle spectra of 3-connected plane graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", parents=[common], help="build a family graph, write planar_code")
    b.add_argument("--check", action="store_true", help="also test 3-connectivity")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("certify", parents=[common], help="certify the cycle-length gap starting at k")
    c.add_argument("input", nargs="?", help="planar_code file, rotation file or named graph")
    c.add_argument("--expect-gap-end", type=int)
    c.set_defaults(func=cmd_certify)

    r = sub.add_parser("reduce", parents=[common], help="run the reduction pipeline")
    r.add_argument("input", nargs="?")
    r.set_defaults(func=cmd_reduce)

    s = sub.add_parser("sweep", parents=[common], help="check random graphs against the intervals")
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--min-n", type=int, default=10)
    s.add_argument("--max-n", type=int, default=40)
    s.add_argument("--kmax", type=int, default=8)
    s.add_argument("--cubic", action="store_true")
    s.add_argument("--no-polyhedra", action="store_true")
    s.set_defaults(func=cmd_sweep)

    t = sub.add_parser("table", parents=[common], help="certified gaps against the known values")
    t.add_argument("--ks", default="5,7,9,11", help="comma list or a..b (odd values)")
    t.add_argument("--json", action="store_true", help="no human table on stderr")
    t.set_defaults(func=cmd_table)

    d = sub.add_parser("export-dot", parents=[common], help="DOT text with face annotations")
    d.add_argument("input", nargs="?")
    d.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"csl: {exc}", file=sys.stderr)
        return EXIT_OTHER
    except BudgetExceeded as exc:
        print(f"csl: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except StructuralError as exc:
        print(f"csl: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL
    except (CSLError, OSError, ValueError) as exc:
        print(f"csl: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_OTHER


if __name__ == "__main__":
    sys.exit(main())
