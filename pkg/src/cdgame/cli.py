"""Command-line front end: solve one instance, run the named verification
suite, scan a graph6 corpus for predomination behavior, or play a game
against the solver.

Exit codes for ``solve``: 0 finite value, 2 unfinishable game, 1 bad
input, 3 time budget exceeded.  ``verify`` exits 1 when any claim fails.
Corpus scans can fan out over a process pool (``--threads`` or the
``CDGAME_THREADS`` environment variable) and always emit results in
input line order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import analysis, families
from .engine import (PASS, GameConfig, GameState, Player, Status, Variant,
                     apply_move, apply_pass, dominated, legal_moves, mover, status)
from .graph import Graph, parse_graph6, read_graph6_file
from .solver import BudgetExceeded, format_value, is_never, optimal_move, solve

VARIANTS = {
    "d": Variant.DOMINATOR_START,
    "s": Variant.STALLER_START,
    "dd": Variant.STALLER_SKIPS_FIRST,
    "ss": Variant.DOMINATOR_SKIPS_FIRST,
}


class CliError(Exception):
    pass


def _load_graph(args) -> Graph:
    sources = [s for s in (args.family, args.graph6, args.input) if s]
    if len(sources) != 1:
        raise CliError("exactly one of --family, --graph6, --input is required")
    try:
        if args.family:
            return families.graph_from_spec(args.family)
        if args.graph6:
            return parse_graph6(args.graph6)
        graphs = read_graph6_file(args.input)
        if not graphs:
            raise CliError(f"{args.input}: no graphs found")
        return graphs[0]
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _predominated_mask(g: Graph, specs: list[str]) -> int:
    mask = 0
    for chunk in specs:
        # whole-argument labels first, so coordinate labels like (1,2) win
        # over the comma-list shorthand
        try:
            mask |= 1 << g.vertex_by_label(chunk.strip())
            continue
        except KeyError:
            pass
        for name in chunk.split(","):
            name = name.strip()
            if not name:
                continue
            try:
                mask |= 1 << g.vertex_by_label(name)
            except KeyError as exc:
                raise CliError(str(exc)) from None
    return mask


def _config(g: Graph, args) -> GameConfig:
    try:
        cfg = GameConfig(variant=VARIANTS[args.variant],
                         pass_budget=args.passes,
                         predominated=_predominated_mask(g, args.predominate))
        cfg.validate_for(g)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    return cfg


def _format_line(g: Graph, line) -> str:
    return " ".join(
        f"{who.value}:{action if action == PASS else g.label(action)}"
        for who, action in line)


def cmd_solve(args) -> int:
    g = _load_graph(args)
    cfg = _config(g, args)
    try:
        report = solve(g, cfg, time_budget=args.time_budget)
    except BudgetExceeded:
        print(f"budget exceeded ({args.time_budget:.0f} s)")
        return 3
    print(f"value = {format_value(report.value)}")
    print(f"line: {_format_line(g, report.principal_line)}")
    print(f"states expanded = {report.states_expanded}, memo hits = {report.memo_hits}, "
          f"elapsed = {report.elapsed:.3f} s")
    return 2 if is_never(report.value) else 0


def cmd_verify(args) -> int:
    corpus = None
    if args.corpus:
        if not os.path.exists(args.corpus):
            raise CliError(f"corpus file not found: {args.corpus}")
        corpus = analysis.load_corpus(args.corpus)
    names = args.only or None
    try:
        results = analysis.run_suite(names, corpus=corpus, time_budget=args.time_budget)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    failures = 0
    for c in results:
        record = c.to_record()
        if c.verdict == analysis.PASS:
            print(f"PASS  {c.claim:36s} {c.instance}")
        else:
            failures += 1
            print(f"{c.verdict.upper():5s} {c.claim:36s} {c.instance} "
                  f"expected={json.dumps(record['expected'])} "
                  f"observed={json.dumps(record['observed'])}")
    print(f"{len(results)} claims, {failures} not passing")
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            for c in results:
                fh.write(json.dumps(c.to_record()) + "\n")
    return 1 if failures else 0


def _scan_one(job):
    index, line, time_budget = job
    g = parse_graph6(line)
    try:
        result = analysis.predomination_scan(g, instance=f"line{index}",
                                             time_budget=time_budget)
    except BudgetExceeded:
        return {"line": index, "graph6": line, "verdict": "budget-exceeded"}
    record = {"line": index, "graph6": line}
    record.update(result.to_record())
    del record["instance"]
    return record


def cmd_scan(args) -> int:
    if not os.path.exists(args.corpus):
        raise CliError(f"corpus file not found: {args.corpus}")
    with open(args.corpus, "r", encoding="ascii") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    jobs = [(i, line, args.time_budget) for i, line in enumerate(lines, start=1)]
    threads = args.threads or int(os.environ.get("CDGAME_THREADS", "1"))
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(_scan_one, jobs, chunksize=8))
    else:
        records = [_scan_one(job) for job in jobs]
    out = open(args.output, "w", encoding="ascii") if args.output else sys.stdout
    try:
        for record in records:
            out.write(json.dumps(record) + "\n")
    finally:
        if args.output:
            out.close()
    scanned = [r for r in records if "max_increase" in r]
    increases = [r["max_increase"] for r in scanned if r["max_increase"] is not None]
    decreases = [r["max_decrease"] for r in scanned if r["max_decrease"] is not None]
    candidates = [r["line"] for r in scanned if r["candidate"]]
    print(f"scanned {len(records)} graphs: "
          f"max increase {max(increases) if increases else 'n/a'}, "
          f"max decrease {max(decreases) if decreases else 'n/a'}, "
          f"{len(candidates)} all-shift-with-increase candidates"
          + (f" at lines {candidates[:20]}" if candidates else ""),
          file=sys.stderr)
    return 0


def _read_action(g: Graph, cfg: GameConfig, st: GameState) -> int | str:
    legal = legal_moves(g, cfg, st)
    may_pass = (mover(cfg, st) is Player.STALLER and st.passes_left > 0)
    while True:
        prompt = "your move (vertex"
        prompt += " or 'pass'): " if may_pass else "): "
        raw = input(prompt).strip()
        if raw == PASS:
            if may_pass:
                return PASS
            print("you cannot pass now")
            continue
        try:
            v = g.vertex_by_label(raw)
        except KeyError as exc:
            print(exc)
            continue
        if not legal & (1 << v):
            print(f"{g.label(v)} is not a legal move")
            continue
        return v


def cmd_play(args) -> int:
    g = _load_graph(args)
    cfg = _config(g, args)
    human = Player.DOMINATOR if args.human == "d" else Player.STALLER
    st = GameState(0, cfg.pass_budget)
    print(f"playing on {g.n} vertices; you are "
          f"{'Dominator' if human is Player.DOMINATOR else 'Staller'}")
    while True:
        state = status(g, cfg, st)
        if state is Status.WON:
            print(f"game over in {st.moves_made()} moves")
            return 0
        if state is Status.STUCK:
            print("game cannot be finished: NEVER")
            return 2
        print(f"played {g.format_set(st.played)}, "
              f"dominated {g.format_set(dominated(g, cfg, st))}")
        who = mover(cfg, st)
        if who is human:
            action = _read_action(g, cfg, st)
        else:
            action = optimal_move(g, cfg, st)
            shown = action if action == PASS else g.label(action)
            print(f"engine ({who.value}) plays {shown}")
        if action == PASS:
            st = apply_pass(cfg, st)
        else:
            st = apply_move(g, cfg, st, action)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdgame",
        description="exact solver and verification harness for the connected "
                    "domination game")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--family", help="family spec, e.g. path:7 or lex:cycle:5,complete:2")
        p.add_argument("--graph6", help="one graph6 line")
        p.add_argument("--input", help="graph6 file (first graph is used)")

    def add_game(p):
        p.add_argument("--variant", choices=sorted(VARIANTS), default="d",
                       help="d/s: Dominator/Staller starts; dd/ss: the starter's "
                            "opponent skips the opening exchange")
        p.add_argument("--passes", type=int, default=0, metavar="K",
                       help="Staller pass budget")
        p.add_argument("--predominate", action="append", default=[], metavar="V",
                       help="vertex (label or index) predominated from the start; "
                            "repeatable or comma separated")

    p = sub.add_parser("solve", help="solve a single instance")
    add_input(p)
    add_game(p)
    p.add_argument("--time-budget", type=float, default=60.0, metavar="S")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run the named claim suite")
    p.add_argument("--only", action="append", metavar="GROUP",
                   help=f"claim group(s) out of: {', '.join(analysis.GROUPS)}")
    p.add_argument("--corpus", help="graph6 corpus (bundled corpus by default)")
    p.add_argument("--output", help="write claim records as JSON lines")
    p.add_argument("--time-budget", type=float, default=60.0, metavar="S")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="predomination scan over a graph6 corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--output", help="write scan records as JSON lines (default stdout)")
    p.add_argument("--threads", type=int, default=0,
                   help="worker processes (default CDGAME_THREADS or 1)")
    p.add_argument("--time-budget", type=float, default=60.0, metavar="S")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("play", help="play against the solver")
    add_input(p)
    add_game(p)
    p.add_argument("--human", choices=("d", "s"), required=True,
                   help="which side you play")
    p.set_defaults(func=cmd_play)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
