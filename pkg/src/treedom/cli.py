"""Command line front end for the tree domination toolkit.

Subcommands: solve, enumerate, check, oracle, verify, generate,
random-tree, bench.  Human output is line-oriented text; --json swaps it
for a single structured document.  Exit codes are a stable contract:
0 success, 1 usage error or failed verification, 2 input error,
3 negative verdict (no set exists, or a checked set is invalid).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from .cost import CostValue
from .interval import count_sets_ab, extract_set_ab, gamma_ab, solve_ab
from .onetwo import count_sets, enumerate_sets, extract_set, gamma12, solve12
from .oracle import MAX_ORACLE_N, Mode, oracle_solve, validate_set
from .total import count_total_sets, extract_total_set, gamma_total, solve_total
from .tree import (
    RootedTree,
    TreeInputError,
    VertexRangeError,
    format_tree,
    free_trees,
    parse_tree,
    random_tree,
)
from .upsilon import generate as generate_pairs

MODES = ("12", "ab", "total12", "totalab")


@dataclass
class RunReport:
    """One command's outcome: echo, input digest, results, exit status."""

    command: list
    digest: str
    results: dict
    exit_status: int = 0
    lines: list = field(default_factory=list)

    def as_doc(self) -> dict:
        return {
            "command": self.command,
            "input_digest": self.digest,
            "results": self.results,
            "exit_status": self.exit_status,
        }


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad flags by default; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _gamma_json(g: CostValue):
    return g.value if g.is_finite else "inf"


def _ids(s) -> str:
    return ",".join(str(v) for v in sorted(s))


def _parse_members(literal: str) -> frozenset:
    literal = literal.strip()
    if not literal:
        return frozenset()
    try:
        return frozenset(int(tok) for tok in literal.split(","))
    except ValueError:
        raise ValueError(f"set literal {literal!r} is not comma-separated integers") from None


def _resolve_bounds(args) -> tuple[int, int]:
    if args.mode in ("12", "total12"):
        return 1, 2
    if args.a is None or args.b is None:
        raise ValueError(f"--mode {args.mode} requires both --a and --b")
    return args.a, args.b


def cmd_solve(args) -> RunReport:
    text = _read_input(args.input)
    tree = parse_tree(text, root=args.root)
    a, b = _resolve_bounds(args)
    t0 = time.perf_counter()
    if args.mode == "12":
        table = solve12(tree)
        g = gamma12(table)
        witness = extract_set(tree, table).black if args.witness and g.is_finite else None
        count = count_sets(tree, table) if args.count else None
    elif args.mode == "ab":
        table = solve_ab(tree, a, b)
        g = gamma_ab(table)
        witness = extract_set_ab(tree, table).black if args.witness and g.is_finite else None
        count = count_sets_ab(tree, table) if args.count else None
    else:
        table = solve_total(tree, a, b)
        g = gamma_total(table)
        witness = extract_total_set(tree, table).black if args.witness and g.is_finite else None
        count = count_total_sets(tree, table) if args.count else None
    elapsed = time.perf_counter() - t0

    results = {
        "mode": args.mode,
        "a": a,
        "b": b,
        "n": tree.n,
        "gamma": _gamma_json(g),
        "timings": {"solve_s": elapsed},
    }
    lines = [f"gamma={g}"]
    if count is not None:
        results["count"] = count
        lines.append(f"count={count}")
    if witness is not None:
        results["witness"] = sorted(witness)
        lines.append(f"witness={_ids(witness)}")
    status = 0 if g.is_finite else 3
    return RunReport(args.echo, _digest(text), results, status, lines)


def cmd_enumerate(args) -> RunReport:
    text = _read_input(args.input)
    tree = parse_tree(text, root=args.root)
    table = solve12(tree)
    total = count_sets(tree, table)
    emitted = []
    if args.limit != 0:
        for coloring in enumerate_sets(tree, table):
            emitted.append(sorted(coloring.black))
            if args.limit is not None and len(emitted) >= args.limit:
                break
    truncated = len(emitted) < total
    lines = [_ids(s) for s in emitted]
    lines.append(f"count={total}")
    results = {
        "gamma": _gamma_json(gamma12(table)),
        "count": total,
        "sets": emitted,
        "truncated": truncated,
    }
    return RunReport(args.echo, _digest(text), results, 0, lines)


def cmd_check(args) -> RunReport:
    text = _read_input(args.input)
    tree = parse_tree(text, root=args.root)
    a, b = _resolve_bounds(args)
    mode = Mode.total(a, b) if args.mode.startswith("total") else Mode.interval(a, b)
    members = _parse_members(args.set)
    try:
        ok = validate_set(tree, members, mode)
    except ValueError as exc:
        # Members outside 1..n are an input problem, not a usage problem.
        raise VertexRangeError(str(exc)) from None
    results = {
        "mode": mode.kind,
        "a": a,
        "b": b,
        "set": sorted(members),
        "valid": ok,
    }
    return RunReport(args.echo, _digest(text), results, 0 if ok else 3, [f"valid={'true' if ok else 'false'}"])


def cmd_oracle(args) -> RunReport:
    text = _read_input(args.input)
    tree = parse_tree(text, root=args.root)
    a, b = _resolve_bounds(args)
    mode = Mode.total(a, b) if args.mode.startswith("total") else Mode.interval(a, b)
    t0 = time.perf_counter()
    res = oracle_solve(tree, mode)
    elapsed = time.perf_counter() - t0
    lines = [f"gamma={res.min_size}", f"count={res.count}"]
    results = {
        "mode": mode.kind,
        "a": a,
        "b": b,
        "gamma": _gamma_json(res.min_size),
        "count": res.count,
        "truncated": res.truncated,
        "timings": {"oracle_s": elapsed},
    }
    if args.witness and res.sets:
        witness = min(res.sets, key=sorted)
        results["witness"] = sorted(witness)
        lines.append(f"witness={_ids(witness)}")
    status = 0 if res.min_size.is_finite else 3
    return RunReport(args.echo, _digest(text), results, status, lines)


def _verify_token(token: str):
    """Map a --modes token to (label, kind, a, b, use_fused_12)."""
    if token == "12":
        return token, "interval", 1, 2, True
    if token == "total12":
        return token, "total", 1, 2, False
    parts = token.split(":")
    if len(parts) == 3 and parts[0] in ("ab", "totalab"):
        try:
            a, b = int(parts[1]), int(parts[2])
        except ValueError:
            raise ValueError(f"mode token {token!r} has non-integer bounds") from None
        return token, ("total" if parts[0] == "totalab" else "interval"), a, b, False
    raise ValueError(f"unknown mode token {token!r}")


def _verify_one(tree: RootedTree, kind: str, a: int, b: int, fused: bool) -> Optional[str]:
    """Compare the DP against the oracle on one tree; None means agreement."""
    if kind == "interval":
        mode = Mode.interval(a, b)
        if fused:
            table = solve12(tree)
            g, c = gamma12(table), count_sets(tree, table)
            witness = extract_set(tree, table).black if g.is_finite else None
        else:
            table = solve_ab(tree, a, b)
            g, c = gamma_ab(table), count_sets_ab(tree, table)
            witness = extract_set_ab(tree, table).black if g.is_finite else None
    else:
        mode = Mode.total(a, b)
        table = solve_total(tree, a, b)
        g, c = gamma_total(table), count_total_sets(tree, table)
        witness = extract_total_set(tree, table).black if g.is_finite else None
    res = oracle_solve(tree, mode, want_sets=False)
    if g != res.min_size:
        return f"gamma {g} != oracle {res.min_size} on n={tree.n} edges={tree.edges}"
    if c != res.count:
        return f"count {c} != oracle {res.count} on n={tree.n} edges={tree.edges}"
    if witness is not None:
        if len(witness) != g.value or not validate_set(tree, witness, mode):
            return f"witness invalid on n={tree.n} edges={tree.edges}"
    return None


def cmd_verify(args) -> RunReport:
    if args.max_n > MAX_ORACLE_N:
        raise ValueError(f"--max-n {args.max_n} exceeds the oracle cap {MAX_ORACLE_N}")
    if args.max_n < 2:
        raise ValueError("--max-n must be at least 2")
    tokens = [tok.strip() for tok in args.modes.split(",") if tok.strip()]
    if not tokens:
        raise ValueError("--modes must name at least one mode")
    pool = [tree for n in range(2, args.max_n + 1) for tree in free_trees(n)]
    rng = random.Random(args.seed)
    for _ in range(args.samples):
        n = rng.randint(2, args.max_n)
        pool.append(random_tree(n, rng.randrange(2**32)))

    lines = []
    mode_reports = []
    all_ok = True
    t0 = time.perf_counter()
    for token in tokens:
        label, kind, a, b, fused = _verify_token(token)
        failure = None
        checked = 0
        for tree in pool:
            failure = _verify_one(tree, kind, a, b, fused)
            checked += 1
            if failure:
                break
        ok = failure is None
        all_ok = all_ok and ok
        mode_reports.append(
            {"mode": label, "pass": ok, "instances": checked, "failure": failure}
        )
        if ok:
            lines.append(f"mode {label}: PASS ({checked} instances)")
        else:
            lines.append(f"mode {label}: FAIL after {checked} instances: {failure}")
    elapsed = time.perf_counter() - t0
    lines.append("PASS" if all_ok else "FAIL")
    results = {
        "max_n": args.max_n,
        "samples": args.samples,
        "modes": mode_reports,
        "pass": all_ok,
        "timings": {"verify_s": elapsed},
    }
    return RunReport(args.echo, _digest(args.modes), results, 0 if all_ok else 1, lines)


def cmd_generate(args) -> RunReport:
    if args.max_n < 2:
        raise ValueError("--max-n must be at least 2")
    pairs = generate_pairs(args.max_n)
    lines = []
    docs = []
    for ct in pairs:
        edges = ";".join(f"{u}-{v}" for u, v in ct.edges)
        line = f"n={ct.n} edges={edges} set={_ids(ct.black)}"
        if args.trace:
            line += f" via={'>'.join(ct.provenance)}"
        lines.append(line)
        doc = {"n": ct.n, "edges": [list(e) for e in ct.edges], "set": sorted(ct.black)}
        if args.trace:
            doc["trace"] = list(ct.provenance)
        docs.append(doc)
    lines.append(f"count={len(pairs)}")
    results = {"max_n": args.max_n, "count": len(pairs), "pairs": docs}
    return RunReport(args.echo, _digest(str(args.max_n)), results, 0, lines)


def cmd_random_tree(args) -> RunReport:
    tree = random_tree(args.n, args.seed)
    text = format_tree(tree)
    results = {
        "n": tree.n,
        "seed": args.seed,
        "edges": [list(e) for e in tree.edges],
    }
    return RunReport(args.echo, _digest(text), results, 0, text.splitlines())


def cmd_bench(args) -> RunReport:
    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"--sizes {args.sizes!r} is not comma-separated integers") from None
    if not sizes or any(s < 2 for s in sizes):
        raise ValueError("--sizes needs positive entries of at least 2")
    rows = []
    lines = []
    prev = None
    for n in sizes:
        tree = random_tree(n, args.seed)
        t0 = time.perf_counter()
        solve12(tree)
        t12 = time.perf_counter() - t0
        t0 = time.perf_counter()
        solve_ab(tree, 1, 2)
        tab = time.perf_counter() - t0
        t0 = time.perf_counter()
        solve_total(tree, 1, 2)
        ttot = time.perf_counter() - t0
        row = {"n": n, "solve12_s": t12, "ab_s": tab, "total_s": ttot}
        if prev is not None and prev > 0:
            row["ratio12"] = t12 / prev
        prev = t12
        rows.append(row)
        ratio = f" ratio12={row['ratio12']:.2f}" if "ratio12" in row else ""
        lines.append(
            f"n={n} solve12={t12:.4f}s ab(1,2)={tab:.4f}s total(1,2)={ttot:.4f}s{ratio}"
        )
    sweep = []
    big = max(sizes)
    tree = random_tree(big, args.seed)
    for b in (2, 8, 32):
        t0 = time.perf_counter()
        solve_ab(tree, 1, b)
        sweep.append({"b": b, "ab_s": time.perf_counter() - t0})
    lines.append(
        f"b-sweep n={big} a=1: " + " ".join(f"b={s['b']} {s['ab_s']:.4f}s" for s in sweep)
    )
    results = {"sizes": sizes, "seed": args.seed, "rows": rows, "b_sweep": sweep}
    return RunReport(args.echo, _digest(args.sizes), results, 0, lines)


def _add_mode_flags(sub, default="12"):
    sub.add_argument("--mode", choices=MODES, default=default)
    sub.add_argument("--a", type=int, default=None)
    sub.add_argument("--b", type=int, default=None)


def _add_input(sub):
    sub.add_argument("input", help="edge-list file, or - for standard input")
    sub.add_argument("--root", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="treedom", description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit one JSON document")
    subs = parser.add_subparsers(dest="cmd", parser_class=_Parser)

    p = subs.add_parser("solve", help="minimum set size for one tree")
    _add_input(p)
    _add_mode_flags(p)
    p.add_argument("--witness", action="store_true", help="print one minimum set")
    p.add_argument("--count", action="store_true", help="print the exact number of minimum sets")
    p.set_defaults(func=cmd_solve)

    p = subs.add_parser("enumerate", help="stream every minimum [1,2]-set")
    _add_input(p)
    p.add_argument("--limit", type=int, default=None, help="emit at most this many sets")
    p.set_defaults(func=cmd_enumerate)

    p = subs.add_parser("check", help="validate a user-supplied set")
    _add_input(p)
    p.add_argument("set", help="comma-separated vertex ids")
    _add_mode_flags(p)
    p.set_defaults(func=cmd_check)

    p = subs.add_parser("oracle", help="exhaustive reference answer (small trees)")
    _add_input(p)
    _add_mode_flags(p)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = subs.add_parser("verify", help="DP vs oracle over all small trees")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--modes", default="12,total12", help="e.g. 12,total12,ab:1:1,totalab:2:3")
    p.add_argument("--samples", type=int, default=25, help="extra random trees")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("generate", help="all (tree, total [1,2]-set) pairs up to a size")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="include each pair's expansion chain")
    p.set_defaults(func=cmd_generate)

    p = subs.add_parser("random-tree", help="emit a seeded random labeled tree")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_random_tree)

    p = subs.add_parser("bench", help="time the solvers on random trees")
    p.add_argument("--sizes", default="4096,16384,65536")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    if getattr(args, "cmd", None) is None:
        parser.print_usage(sys.stderr)
        return 1
    args.echo = list(argv)
    try:
        report = args.func(args)
    except TreeInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(report.as_doc(), indent=2, sort_keys=True))
    else:
        for line in report.lines:
            print(line)
    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())
