"""Command-line surface for census runs, orbit inspection, certificates,
generation, invariant tables, and bound tables.

Primary output is TSV on stdout; diagnostics go to stderr.  Exit status:
0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field

from . import bounds as bounds_mod
from . import graph6
from .classify import InputFormatError, classify_codes
from .generate import generate_all, generate_connected
from .graphs import Graph, complement, complete_graph, cycle_graph, empty_graph, join, path_graph, petersen_graph
from .invariants import invariant_record
from .orbits import (
    certificate_mismatch,
    enumerate_orbit,
    format_certificate,
    make_certificate,
    orbit_search,
    read_certificate,
    write_certificate,
)
from .structure import circle_graph_obstructions, find_induced_pattern_in_orbit, identify_named, lc_class_partition

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2

LONG_RUN_CLASSIFY_ORDER = 11


@dataclass
class RunConfig:
    command: str
    k: int | None = None
    budget: int | None = None
    input_path: str | None = None
    output_path: str | None = None
    phase3_out: str | None = None
    n_from_gen: int | None = None
    n: int | None = None
    codes: list[str] = field(default_factory=list)
    construct: str | None = None
    connected: bool = False
    workers: int = 1
    long_run_ack: bool = False
    fast_path_disconnected: bool = False
    stats: str | None = None
    list_code: str | None = None
    with_classes: bool = False
    with_obstructions: bool = False
    k_max: int | None = None
    out_format: str = "tsv"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vmramsey")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="three-phase census classification")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--input", dest="input_path")
    p.add_argument("--n-from-gen", dest="n_from_gen", type=int,
                   help="classify the internal census of this order instead of reading input")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--phase3-out", dest="phase3_out")
    p.add_argument("--format", dest="out_format", choices=("tsv", "text"), default="tsv")
    p.add_argument("--fast-path-disconnected", action="store_true")
    p.add_argument("--long-run-ack", action="store_true")

    p = sub.add_parser("orbit", help="enumerate or search one orbit")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--stats", metavar="CODE")
    group.add_argument("--list", dest="list_code", metavar="CODE")
    p.add_argument("--k", type=int)
    p.add_argument("--budget", type=int)

    p = sub.add_parser("certify", help="write a full-orbit negative certificate")
    p.add_argument("code")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", dest="output_path")

    p = sub.add_parser("verify", help="re-run and check a certificate file")
    p.add_argument("input_path")

    p = sub.add_parser("gen", help="isomorph-free census as graph6 lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--long-run-ack", action="store_true")

    p = sub.add_parser("analyze", help="invariant table for graphs")
    p.add_argument("codes", nargs="*")
    p.add_argument("--input", dest="input_path")
    p.add_argument("--construct", help="named construction, e.g. k5, c7, petersen, c5-join-c5")
    p.add_argument("--classes", dest="with_classes", action="store_true")
    p.add_argument("--obstructions", dest="with_obstructions", action="store_true")

    p = sub.add_parser("bounds", help="lower/upper bound comparison table")
    p.add_argument("--k-max", dest="k_max", type=int, required=True)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in vars(args):
        if name != "command" and hasattr(cfg, name):
            setattr(cfg, name, getattr(args, name))
    return cfg


def _read_lines(path: str | None) -> list[str]:
    if path is None:
        return sys.stdin.read().splitlines()
    with open(path, "r", encoding="ascii") as fobj:
        return fobj.read().splitlines()


def _fmt_budget(budget: int | None) -> str:
    return "-" if budget is None else str(budget)


def cmd_classify(cfg: RunConfig) -> int:
    if cfg.k is None or cfg.k < 1:
        print("classify: --k must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    if cfg.budget is not None and cfg.budget < 1:
        print("classify: --budget must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    if cfg.workers < 1:
        print("classify: --workers must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    if cfg.n_from_gen is not None:
        gen = generate_all(cfg.n_from_gen, long_run_ack=cfg.long_run_ack)
        codes = [graph6.encode(g) for g in gen]
    else:
        lines = _read_lines(cfg.input_path)
        codes_checked = []
        for lineno, line in enumerate(lines, start=1):
            stripped = line.rstrip("\r")
            if lineno == 1 and stripped.startswith(graph6.HEADER):
                stripped = stripped[len(graph6.HEADER):]
            if not stripped:
                continue
            try:
                g = graph6.decode(stripped)
            except graph6.Graph6Error as exc:
                print(f"classify: line {lineno}: {exc}", file=sys.stderr)
                return EXIT_INPUT
            if g.n >= LONG_RUN_CLASSIFY_ORDER and not cfg.long_run_ack:
                print(
                    f"classify: order {g.n} input is a long run; pass --long-run-ack",
                    file=sys.stderr,
                )
                return EXIT_INPUT
            codes_checked.append(stripped)
        codes = codes_checked
    counts_list, phase3 = classify_codes(
        codes, cfg.k, cfg.budget, workers=cfg.workers,
        fast_path_disconnected=cfg.fast_path_disconnected,
    )
    if cfg.out_format == "tsv":
        print("n\tk\tbudget\ttotal\tp1\tp2\tp3\tp3_budgeted\tp3_total")
        for counts in counts_list:
            print(
                f"{counts.n}\t{counts.k}\t{_fmt_budget(counts.budget)}\t{counts.total}"
                f"\t{counts.p1}\t{counts.p2}\t{counts.p3}\t{counts.p3_budgeted}\t{counts.p3_total}"
            )
    else:
        for counts in counts_list:
            print(f"n={counts.n}")
            print(f"k={counts.k}")
            print(f"budget={_fmt_budget(counts.budget)}")
            print(f"total={counts.total}")
            print(f"p1={counts.p1}")
            print(f"p2={counts.p2}")
            print(f"p3={counts.p3}")
            print(f"p3_budgeted={counts.p3_budgeted}")
            print(f"p3_total={counts.p3_total}")
    if cfg.phase3_out is not None:
        with open(cfg.phase3_out, "w", encoding="ascii") as fobj:
            for rec in phase3:
                fobj.write(rec.code + "\n")
    return EXIT_OK


def cmd_orbit(cfg: RunConfig) -> int:
    if cfg.stats is not None:
        g = graph6.decode(cfg.stats)
        if cfg.k is not None:
            summary = orbit_search(g, cfg.k, cfg.budget)
            print("code\toutcome\texplored\tmax_alpha")
            print(f"{cfg.stats}\t{summary.outcome}\t{summary.explored}\t{summary.max_alpha_seen}")
            return EXIT_OK
        members = enumerate_orbit(g, cfg.budget)
        print("code\tsize")
        print(f"{cfg.stats}\t{len(members)}")
        return EXIT_OK
    g = graph6.decode(cfg.list_code)
    for member in enumerate_orbit(g, cfg.budget):
        print(graph6.encode(member))
    return EXIT_OK


def cmd_certify(cfg: RunConfig) -> int:
    cert = make_certificate(cfg.codes[0], cfg.k)
    if cfg.output_path is not None:
        write_certificate(cert, cfg.output_path)
        print(f"wrote {cfg.output_path}", file=sys.stderr)
    else:
        sys.stdout.write(format_certificate(cert))
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    cert = read_certificate(cfg.input_path)
    mismatch = certificate_mismatch(cert)
    if mismatch is None:
        print("ok")
        return EXIT_OK
    print(f"mismatch: {mismatch}")
    return EXIT_VERIFY


def cmd_gen(cfg: RunConfig) -> int:
    gen = generate_connected if cfg.connected else generate_all
    for g in gen(cfg.n, long_run_ack=cfg.long_run_ack):
        print(graph6.encode(g))
    return EXIT_OK


_CONSTRUCTIONS = {
    "petersen": petersen_graph,
    "c5-join-c5": lambda: join(cycle_graph(5), cycle_graph(5)),
    "c6-complement": lambda: complement(cycle_graph(6)),
}


def _construct(name: str) -> Graph:
    name = name.lower()
    if name in _CONSTRUCTIONS:
        return _CONSTRUCTIONS[name]()
    kind, num = name[:1], name[1:]
    if num.isdigit():
        n = int(num)
        if kind == "k":
            return complete_graph(n)
        if kind == "e":
            return empty_graph(n)
        if kind == "c":
            return cycle_graph(n)
        if kind == "p":
            return path_graph(n)
    raise ValueError(f"unknown construction {name!r}")


def _fmt_inf(value: int | float) -> str:
    return "inf" if value == math.inf else str(value)


def cmd_analyze(cfg: RunConfig) -> int:
    codes = list(cfg.codes)
    if cfg.input_path is not None:
        codes.extend(graph6.iter_codes(_read_lines(cfg.input_path)))
    if cfg.construct is not None:
        codes.append(graph6.encode(_construct(cfg.construct)))
    if not codes:
        print("analyze: no graphs given", file=sys.stderr)
        return EXIT_INPUT
    graphs = [graph6.decode(code) for code in codes]

    header = ["code", "n", "edges", "alpha", "omega", "chi", "diameter", "girth",
              "degree_sequence", "connected", "named"]
    class_of: dict[str, int] = {}
    if cfg.with_classes:
        parts = lc_class_partition(codes)
        for idx, cls in enumerate(parts, start=1):
            for code in cls:
                class_of[code] = idx
        header.append("lc_class")
    if cfg.with_obstructions:
        header.extend(["W5", "BW3", "W7"])
    print("\t".join(header))

    patterns = circle_graph_obstructions() if cfg.with_obstructions else []
    for code, g in zip(codes, graphs):
        rec = invariant_record(g)
        row = [
            code,
            str(g.n),
            str(rec.edge_count),
            str(rec.alpha),
            str(rec.omega),
            str(rec.chi),
            _fmt_inf(rec.diameter),
            _fmt_inf(rec.girth),
            ",".join(map(str, rec.degree_sequence)),
            "yes" if rec.connected else "no",
            "|".join(identify_named(g)) or "-",
        ]
        if cfg.with_classes:
            row.append(str(class_of[code]))
        if cfg.with_obstructions:
            for pattern in patterns:
                row.append("yes" if find_induced_pattern_in_orbit(g, pattern) else "no")
        print("\t".join(row))
    return EXIT_OK


def cmd_bounds(cfg: RunConfig) -> int:
    print("k\texplicit_lower\tasymptotic_leading\tupper_2k\tknown")
    for row in bounds_mod.bound_table(cfg.k_max):
        known = "-" if row.known_value is None else str(row.known_value)
        print(f"{row.k}\t{row.explicit_lower}\t{row.asymptotic_leading}\t{row.upper_2k}\t{known}")
    return EXIT_OK


_COMMANDS = {
    "classify": cmd_classify,
    "orbit": cmd_orbit,
    "certify": cmd_certify,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "analyze": cmd_analyze,
    "bounds": cmd_bounds,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    cfg = _config_from_args(args)
    if args.command == "certify":
        cfg.codes = [args.code]
    try:
        return _COMMANDS[args.command](cfg)
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (graph6.Graph6Error, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
