"""Command-line interface: ``cwbd <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions as C
from . import graphs as G
from .design import Design, classify, existence_check
from .designio import (DesignFormatError, design_to_csv, design_to_json, matrix_to_csv, read_design,
                       read_matrix)
from .finite_field import field_of_order, prime_power
from .optimality import CARRYOVER, DIRECT, dominance_sample_test, optimality_verdict

EXIT_OK, EXIT_IO, EXIT_INFEASIBLE, EXIT_BUDGET = 0, 1, 2, 3


class Infeasible(Exception):
    pass


def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from None


def _paley_for_q(q: int):
    r = 4 * q + 3
    if prime_power(r) is None:
        raise Infeasible(f"4q+3 = {r} is not a prime power")
    return G.paley(r).adjacency


def _need_t(args):
    if args.t is None:
        raise Infeasible("--t is required for this construction")
    return args.t


def _build(args) -> Design | C.BlockMatrix:
    kind = args.type
    try:
        if kind == "I-prime":
            return C.construct_type1(_need_t(args))
        if kind == "I-belle":
            t = _need_t(args)
            if prime_power(t) is None:
                raise Infeasible(f"t must be a prime power (got {t})")
            return C.expand_belle(C.belle_from_primitive(field_of_order(t), args.x))
        if kind == "II-ds":
            t = _need_t(args)
            if args.ds is None:
                raise Infeasible("--ds is required for II-ds")
            return C.construct_type2_ds(t, args.ds)
        if kind == "III-block":
            return C.type3_block(_paley_for_q(args.q), args.m)
        if kind == "III-sdigraph":
            return C.sdigraph_double(_paley_for_q(args.q))
        if kind == "cbd":
            return C.construct_cbd(_need_t(args))
        return C.t3_special()
    except ValueError as e:
        raise Infeasible(str(e)) from None


def cmd_construct(args) -> int:
    obj = _build(args)
    if isinstance(obj, Design):
        text = design_to_csv(obj) if args.format == "csv" else design_to_json(obj)
        summary = classify(obj).summary()
    else:
        text = matrix_to_csv(obj.A) if args.format == "csv" else json.dumps(obj.to_json()) + "\n"
        summary = f"adjacency matrix t={obj.t}, λ={obj.lam}, k={obj.k}, n={obj.n}"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    print(summary, file=sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    d = read_design(args.path)
    c = classify(d)
    print(c.summary())
    if args.json:
        print(json.dumps(c.to_json()))
    return EXIT_OK


def cmd_analyze(args) -> int:
    d = read_design(args.path)
    effect = CARRYOVER if args.effect == "carryover" else DIRECT
    print(json.dumps(optimality_verdict(d, args.model, effect).to_json(), indent=2))
    return EXIT_OK


def cmd_exist(args) -> int:
    f = existence_check(args.t, args.n)
    print(f"λ={f.lam}, k={f.k}: {'passes necessary conditions' if f.feasible else 'infeasible'}")
    for note in f.notes:
        print(note)
    return EXIT_OK if f.feasible else EXIT_INFEASIBLE


def cmd_search_cycles(args) -> int:
    if args.t15_gamma2:
        D = G.gamma2()
        action = [G.gf7_doubled_translation(1)]
        anchor = tuple(args.anchor) if args.anchor else (7, 0)
    else:
        try:
            D = G.Digraph(read_matrix(args.graph))
        except ValueError as e:
            raise DesignFormatError(str(e)) from None
        action = []
        anchor = tuple(args.anchor) if args.anchor else (0,)
    cs = G.find_invariant_cycles(D, action, anchor=anchor, budget=args.budget, workers=args.workers)
    if args.count_only:
        print(len(cs))
    else:
        print(json.dumps(cs.to_json()))
    return EXIT_OK


_GRAPHS = {
    "l24": (G.lattice_graph_L2_4, G.l24_automorphism),
    "shrikhande": (G.shrikhande_graph, G.shrikhande_automorphism),
    "clebsch": (G.clebsch_graph, G.clebsch_rotation),
}


def cmd_decompose(args) -> int:
    make, auto = _GRAPHS[args.graph]
    g = make()
    try:
        cs = G.hamiltonian_decomposition(g, auto() if args.invariant else None, budget=args.budget)
    except G.NotFound as e:
        print(f"none found (exhaustive): {e}")
        return EXIT_INFEASIBLE
    if args.out:
        d = G.cycles_to_design(cs, both_directions=True)
        Path(args.out).write_text(design_to_csv(d) if args.format == "csv" else design_to_json(d))
        print(classify(d).summary())
    print(json.dumps(cs.to_json()))
    return EXIT_OK


def cmd_ds_search(args) -> int:
    try:
        found = C.find_difference_sets(args.t, args.k, budget=args.budget, workers=args.workers)
    except ValueError as e:
        raise Infeasible(str(e)) from None
    if not found:
        print("none found (exhaustive)")
        return EXIT_OK
    for ds in found:
        print(",".join(map(str, ds.elements)))
    return EXIT_OK


def cmd_brc(args) -> int:
    try:
        r = C.brc_check(args.t, args.k)
    except ValueError as e:
        raise Infeasible(str(e)) from None
    print(r)
    return EXIT_OK


def cmd_sample_dominance(args) -> int:
    try:
        rep = dominance_sample_test(args.t, args.n, args.trials, seed=args.seed, model=args.model,
                                    workers=args.workers)
    except ValueError as e:
        raise Infeasible(str(e)) from None
    print(json.dumps(rep.to_json(), indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cwbd", description="Circular weakly balanced repeated-measurements designs.")
    sub = p.add_subparsers(dest="command", required=True)

    def search_opts(sp):
        sp.add_argument("--budget", type=int, default=C.DEFAULT_BUDGET, help="node cap for the search")
        sp.add_argument("--workers", type=int, default=1)

    sp = sub.add_parser("construct", help="build a design or adjacency matrix")
    sp.add_argument("--type", required=True,
                    choices=["I-prime", "I-belle", "II-ds", "III-block", "III-sdigraph", "cbd", "t3"])
    sp.add_argument("--t", type=int)
    sp.add_argument("--ds", type=_int_list, help="difference set, e.g. 1,2,5,7")
    sp.add_argument("--x", type=int, help="primitive element for I-belle (default: smallest)")
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--q", type=int, default=0)
    sp.add_argument("--out")
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="classify a design file")
    sp.add_argument("path")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("analyze", help="information matrix and optimality verdict")
    sp.add_argument("path")
    sp.add_argument("--model", choices=["full", "subjects", "periods"], default="full")
    sp.add_argument("--effect", choices=["direct", "carryover"], default="direct")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("exist", help="necessary conditions for a CWBD with t treatments on n subjects")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_exist)

    sp = sub.add_parser("search-cycles", help="invariant Hamiltonian cycles in a tournament")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--t15-gamma2", action="store_true", help="the doubled Paley tournament on 15 vertices")
    g.add_argument("--graph", help="adjacency matrix file (JSON or CSV)")
    sp.add_argument("--anchor", type=_int_list)
    sp.add_argument("--count-only", action="store_true")
    search_opts(sp)
    sp.set_defaults(func=cmd_search_cycles)

    sp = sub.add_parser("decompose", help="Hamiltonian decomposition of a 16-vertex graph")
    sp.add_argument("--graph", required=True, choices=sorted(_GRAPHS))
    sp.add_argument("--invariant", action="store_true", help="search for an automorphism-invariant decomposition")
    sp.add_argument("--out", help="write the both-directions design here")
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    search_opts(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("ds-search", help="exhaustive difference-set search in Z_t")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    search_opts(sp)
    sp.set_defaults(func=cmd_ds_search)

    sp = sub.add_parser("brc", help="Bruck-Ryser-Chowla test")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_brc)

    sp = sub.add_parser("sample-dominance", help="random competitors against the reference CWBD")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trials", type=int, default=500)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--model", choices=["full", "subjects", "periods"], default="full")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_sample_dominance)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DesignFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except Infeasible as e:
        print(f"infeasible: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except C.SearchBudgetExceeded as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
