"""spherig command line tool.

Complexes flow through the facet-list text format (one facet per line,
integer labels, '#' comments) on stdin/stdout or file paths.  Exit codes:
0 on success / all checks pass, 1 when a query or verification answers
negatively, 2 on usage or input errors.

The SPHERIG_SEED environment variable supplies the default seed; flags and
config files override it.
"""

from __future__ import annotations

import argparse
import os
import sys

from .complexes import SimplicialComplex, prime_factors
from .generators import (
    boundary_simplex,
    cross_polytope,
    cyclic_polytope_boundary,
    join_simplex_cycle,
    join_spheres,
)
from .graphs import graph_of
from .harness import SuiteConfig, run_suite
from .rigidity import DEFAULT_TRIALS, decide_rigidity
from .textio import format_facets, parse_facets

GEN_FAMILIES = {
    "simplex": (boundary_simplex, "d"),
    "cross-polytope": (cross_polytope, "d"),
    "join-spheres": (join_spheres, "p q"),
    "join-simplex-cycle": (join_simplex_cycle, "d k"),
    "cyclic": (cyclic_polytope_boundary, "n d"),
}


def _default_seed() -> int:
    value = os.environ.get("SPHERIG_SEED", "")
    return int(value) if value else 0


def _read_complex(path: str) -> SimplicialComplex:
    if path == "-":
        return parse_facets(sys.stdin.read())
    with open(path) as fh:
        return parse_facets(fh.read())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spherig",
        description="simplicial sphere generators and generic-rigidity checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a named sphere family as a facet list")
    gen.add_argument("family", choices=sorted(GEN_FAMILIES))
    gen.add_argument(
        "params", nargs="+", type=int,
        help="family parameters: simplex d | cross-polytope d | "
             "join-spheres p q | join-simplex-cycle d k | cyclic n d",
    )

    def complex_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("path", nargs="?", default="-", help="facet list file, or - for stdin")

    g2 = sub.add_parser("g2", help="print g2 = f1 - d*f0 + C(d+1,2) of a complex")
    complex_input(g2)

    prime = sub.add_parser("prime", help="test primeness (no missing face of facet size)")
    prime.add_argument("--dim", type=int, help="rigidity dimension d, default dim+1")
    complex_input(prime)

    missing = sub.add_parser("missing-faces", help="list all minimal non-faces")
    complex_input(missing)

    contract = sub.add_parser("contract", help="contract the edge {a,b} to a fresh vertex")
    contract.add_argument("a", type=int)
    contract.add_argument("b", type=int)
    complex_input(contract)

    rigid = sub.add_parser("rigid", help="decide generic rigidity of a complex's graph")
    rigid.add_argument("--dim", type=int, required=True, help="rigidity dimension d")
    rigid.add_argument("--minus-edge", metavar="a,b", help="delete this edge first")
    rigid.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    rigid.add_argument("--seed", type=int, default=None)
    complex_input(rigid)

    decompose = sub.add_parser("decompose", help="split a connected sum into prime factors")
    decompose.add_argument("--dim", type=int, help="rigidity dimension d, default dim+1")
    complex_input(decompose)

    verify = sub.add_parser("verify", help="run the verification suite over a corpus")
    verify.add_argument("--config", help="key=value file: families, dims, trials, seed")
    verify.add_argument("--seed", type=int, default=None, help="override the suite seed")
    verify.add_argument(
        "--machine", metavar="PATH",
        help="write the tab-separated machine report here ('-' prints it instead of the table)",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "gen":
        builder, arity = GEN_FAMILIES[args.family]
        if len(args.params) != len(arity.split()):
            raise ValueError(f"family {args.family} takes parameters: {arity}")
        sys.stdout.write(format_facets(builder(*args.params)))
        return 0

    if args.command == "g2":
        print(_read_complex(args.path).g2())
        return 0

    if args.command == "prime":
        delta = _read_complex(args.path)
        d = args.dim if args.dim is not None else delta.dim + 1
        result = delta.is_prime(d)
        print("prime" if result else "not prime")
        return 0 if result else 1

    if args.command == "missing-faces":
        for face in _read_complex(args.path).missing_faces():
            print(" ".join(str(v) for v in sorted(face)))
        return 0

    if args.command == "contract":
        delta = _read_complex(args.path)
        sys.stdout.write(
            format_facets(delta.contract_edge((args.a, args.b), max(delta.vertices) + 1))
        )
        return 0

    if args.command == "rigid":
        delta = _read_complex(args.path)
        graph = graph_of(delta)
        if args.minus_edge:
            a, _, b = args.minus_edge.partition(",")
            graph = graph.remove_edge(int(a), int(b))
        seed = args.seed if args.seed is not None else _default_seed()
        verdict = decide_rigidity(graph, args.dim, args.trials, seed)
        print(
            f"rigid={str(verdict.is_rigid).lower()} rank={verdict.rank} "
            f"target={verdict.target_rank} stress={verdict.stress_dim} "
            f"trials={verdict.trials} seed={seed}"
        )
        return 0 if verdict.is_rigid else 1

    if args.command == "decompose":
        delta = _read_complex(args.path)
        d = args.dim if args.dim is not None else delta.dim + 1
        for i, factor in enumerate(prime_factors(delta, d)):
            print(f"# factor {i}")
            sys.stdout.write(format_facets(factor))
        return 0

    if args.command == "verify":
        base = SuiteConfig(seed=_default_seed())
        config = SuiteConfig.from_file(args.config, base) if args.config else base
        if args.seed is not None:
            config.seed = args.seed
        report = run_suite(config)
        machine = report.machine_format()
        if args.machine == "-":
            sys.stdout.write(machine)
        else:
            if args.machine:
                with open(args.machine, "w") as fh:
                    fh.write(machine)
            sys.stdout.write(report.human_format())
        return 0 if report.ok else 1

    raise ValueError(f"unknown command {args.command!r}")  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
