"""Command-line front end.

Subcommands: `tw` and `pw` run the cover-parameterized solvers, `oracle`
runs the exponential reference solvers on small graphs, `check` validates a
path/tree decomposition against a graph. Graphs are read in .gr format from
--input or stdin; decompositions are printed in .td format.

Exit codes: 0 success, 2 malformed input (or failed check), 3 resource cap
exceeded, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .complement import MAX_COMPLEMENT_COVER, pathwidth_cvc
from .cover import is_vertex_cover, minimum_vertex_cover
from .decomposition import find_violations
from .errors import (InternalError, InvalidDecompositionError, ParseError,
                     ResourceLimitError)
from .formats import (decomposition_of, emit_td, parse_cover, parse_gr,
                      parse_td)
from .oracle import pathwidth_exact, treewidth_exact
from .pathwidth import pathwidth_vc
from .treewidth import treewidth_vc_4k
from .treewidth_fast import treewidth_vc_3k

DEFAULT_MAX_K = {"tw-vc-3k": 14, "tw-vc-4k": 14, "pw-vc": 18, "pw-cvc": 26}
DEFAULT_MAX_N = 26
ORACLE_FALLBACK_MAX_N = 12

_SELECTORS = {
    "tw": {None: "tw-vc-3k", "3k": "tw-vc-3k", "tw-vc-3k": "tw-vc-3k",
           "4k": "tw-vc-4k", "tw-vc-4k": "tw-vc-4k",
           "oracle": "oracle-tw", "oracle-tw": "oracle-tw"},
    "pw": {None: "pw-vc", "vc": "pw-vc", "pw-vc": "pw-vc",
           "cvc": "pw-cvc", "pw-cvc": "pw-cvc",
           "oracle": "oracle-pw", "oracle-pw": "oracle-pw"},
    "oracle": {None: "oracle-tw", "tw": "oracle-tw", "oracle-tw": "oracle-tw",
               "pw": "oracle-pw", "oracle-pw": "oracle-pw"},
}


@dataclass
class RunConfig:
    subcommand: str
    algo: str
    input_path: str | None = None
    cover_path: str | None = None
    emit_witness: bool = False
    stats: bool = False
    max_k: int | None = None
    max_n: int = DEFAULT_MAX_N
    seed: int = 0  # reserved for test instance generators
    algo_defaulted: bool = False

    def __post_init__(self):
        allowed = {"pw-vc", "tw-vc-4k", "tw-vc-3k", "pw-cvc",
                   "oracle-tw", "oracle-pw"}
        assert self.algo in allowed, f"unknown selector {self.algo!r}"
        assert self.max_k is None or self.max_k > 0
        assert self.max_n > 0


def _read_input(path):
    if path is None:
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _print_stats(stats):
    print(f"cover size: {stats.get('cover_size', 0)}")
    print(f"valid triples: {stats.get('valid_triples', 0)}")
    print(f"states: {stats.get('states', 0)}")
    print(f"peak table entries: {stats.get('peak_table', 0)}")


def _load_cover(config, g):
    data = _read_input(config.cover_path) if config.cover_path else None
    if data is None:
        return None
    return parse_cover(data, g.n)


def _run_solver(config, g):
    """Dispatch one solve; returns (width, witness-or-None, stats dict)."""
    algo = config.algo
    stats = {}
    if algo in ("oracle-tw", "oracle-pw"):
        if g.n > config.max_n:
            raise ResourceLimitError(
                f"graph has {g.n} vertices, oracle cap is {config.max_n}")
        w = treewidth_exact(g) if algo == "oracle-tw" else pathwidth_exact(g)
        stats["states"] = 1 << g.n
        stats["peak_table"] = 1 << g.n
        return w, None, stats
    if algo == "pw-cvc":
        cap = config.max_k if config.max_k is not None else DEFAULT_MAX_K[algo]
        cover = _load_cover(config, g)
        w, dec = pathwidth_cvc(g, cover=cover, stats=stats,
                               max_cover=min(cap, MAX_COMPLEMENT_COVER))
        return w, dec, stats
    cover = _load_cover(config, g)
    if cover is None:
        cover = minimum_vertex_cover(g)
    elif not is_vertex_cover(g, cover):
        raise ParseError(1, "supplied vertex set is not a vertex cover")
    cap = config.max_k if config.max_k is not None else DEFAULT_MAX_K[algo]
    if len(cover) > cap:
        if (config.algo_defaulted and algo == "tw-vc-3k"
                and g.n <= ORACLE_FALLBACK_MAX_N and not config.emit_witness):
            # small instance with a large cover: the plain oracle is cheaper
            w = treewidth_exact(g)
            stats["states"] = 1 << g.n
            stats["peak_table"] = 1 << g.n
            return w, None, stats
        raise ResourceLimitError(
            f"vertex cover of size {len(cover)} exceeds the cap {cap}")
    solver = {"pw-vc": pathwidth_vc, "tw-vc-4k": treewidth_vc_4k,
              "tw-vc-3k": treewidth_vc_3k}[algo]
    w, dec = solver(g, cover=cover, stats=stats)
    return w, dec, stats


def run(config):
    if config.subcommand == "check":
        return _run_check(config)
    g = parse_gr(_read_input(config.input_path))
    width, witness, stats = _run_solver(config, g)
    print(f"width: {width}")
    if config.stats:
        _print_stats(stats)
    if config.emit_witness:
        if witness is None:
            print("error: the oracle computes widths only, no witness",
                  file=sys.stderr)
            return 2
        sys.stdout.write(emit_td(witness, g.n))
    return 0


def _run_check(config):
    g = parse_gr(_read_input(config.input_path))
    with open(config.cover_path, "rb") as fh:  # reused as the .td path
        td_data = fh.read()
    doc = parse_td(td_data)
    dec, n = decomposition_of(doc)
    if n != g.n:
        print(f"error: decomposition is for {n} vertices, graph has {g.n}",
              file=sys.stderr)
        return 2
    violations = find_violations(g, dec)
    if violations:
        for v in violations:
            print(f"invalid: {v}", file=sys.stderr)
        return 2
    print(f"width: {dec.width}")
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="vcwidth",
        description="exact treewidth/pathwidth via vertex-cover structure")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name, help_text in [
            ("tw", "treewidth of a .gr graph"),
            ("pw", "pathwidth of a .gr graph"),
            ("oracle", "reference exponential solver (small graphs)")]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--algo", default=None,
                       help="algorithm selector (see docs for choices)")
        p.add_argument("--input", default=None, help=".gr file (default stdin)")
        p.add_argument("--cover", default=None,
                       help="file with a vertex cover to use (1-based ids)")
        p.add_argument("--emit-witness", action="store_true",
                       help="print the decomposition in .td format")
        p.add_argument("--stats", action="store_true",
                       help="print solver counters")
        p.add_argument("--max-k", type=int, default=None,
                       help="cover size cap (defaults per algorithm)")
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                       help="vertex count cap for the oracle")
    pc = sub.add_parser("check", help="validate a .td against a .gr")
    pc.add_argument("graph", help=".gr file")
    pc.add_argument("decomposition", help=".td file")
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.subcommand == "check":
            config = RunConfig(subcommand="check", algo="oracle-tw",
                               input_path=args.graph,
                               cover_path=args.decomposition)
        else:
            table = _SELECTORS[args.subcommand]
            if args.algo not in table:
                parser.error(f"unknown --algo {args.algo!r} for "
                             f"{args.subcommand}")
            config = RunConfig(
                subcommand=args.subcommand,
                algo=table[args.algo],
                input_path=args.input,
                cover_path=args.cover,
                emit_witness=args.emit_witness,
                stats=args.stats,
                max_k=args.max_k,
                max_n=args.max_n,
                algo_defaulted=args.algo is None,
            )
            if config.emit_witness and config.algo.startswith("oracle"):
                parser.error("--emit-witness is not available for the oracle")
        return run(config)
    except ParseError as exc:
        print(f"error: line {exc.line}: {exc.message}", file=sys.stderr)
        return 2
    except InvalidDecompositionError as exc:
        for v in exc.violations:
            print(f"invalid: {v}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
