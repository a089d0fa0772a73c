"""Command-line front end.

Exit codes: 0 on success (and positive verdicts), 1 on negative results
(non-Hamiltonian verdicts, verification mismatches, inapplicable
operations), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import gc
import json
import sys
import time
from typing import Callable, Optional, Sequence

from .errors import (
    EdgeDeletionDisconnectsError,
    NoHamiltonianChainGraphError,
    OracleCapError,
    ReductionNotApplicableError,
    SequenceError,
)
from .extremal import census, min_cycle_chain_graph
from .graph import degree_profile, export, materialize
from .hamiltonicity import (
    Verdict,
    is_hamiltonian_chain,
    is_hamiltonian_threshold,
    reduce_to_g_star,
)
from .oracle import DEFAULT_COUNT_CAP, count_hamilton_cycles, enumerate_sequences, find_hamilton_cycle
from .sequence import GeneratingSequence, parse_sequence


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamchain",
        description="Hamiltonicity toolkit for threshold and chain graphs "
        "given by run-length binary generating sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide Hamiltonicity from the sequence")
    p.add_argument("kind", choices=("threshold", "chain"))
    p.add_argument("sequence", help="raw word or run-length notation, e.g. '0^2 1^2'")
    p.add_argument("--witness", action="store_true", help="attach a Hamilton cycle found by the oracle")
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("reduce", help="trim the clique surplus of a threshold graph")
    p.add_argument("sequence")

    p = sub.add_parser("degrees", help="closed-form degree profile of the threshold split")
    p.add_argument("sequence")

    p = sub.add_parser("count", help="exact Hamilton cycle count (brute force)")
    p.add_argument("sequence")
    p.add_argument("--kind", choices=("threshold", "chain"), required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_COUNT_CAP)

    p = sub.add_parser("min-chain", help="Hamiltonian chain graph of order n with fewest cycles")
    p.add_argument("n", type=int)

    p = sub.add_parser("census", help="cycle counts of all Hamiltonian chain graphs of order n")
    p.add_argument("n", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_COUNT_CAP)

    p = sub.add_parser("export", help="serialize the graph")
    p.add_argument("sequence")
    p.add_argument("--kind", choices=("threshold", "chain"), required=True)
    p.add_argument("--format", choices=("dot", "edgelist", "json"), required=True)

    p = sub.add_parser("verify", help="exhaustive cross-validation against the brute-force oracle")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--kind", choices=("threshold", "chain", "both"), default="both")

    p = sub.add_parser("bench", help="time the linear decisions on a synthetic sequence")
    p.add_argument("--h", type=int, required=True, help="number of levels")

    return parser


def _print_verdict(verdict: Verdict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(verdict.as_dict()))
        return
    parts = [
        f"hamiltonian={str(verdict.hamiltonian).lower()}",
        f"reason={verdict.reason}",
        f"r={verdict.r}",
        f"s={verdict.s}",
        f"T={verdict.T}",
        f"S={verdict.S}",
    ]
    if verdict.ell is not None:
        parts.append(f"ell={verdict.ell}")
    if verdict.failed_j is not None:
        parts.append(f"failed_j={verdict.failed_j}")
    if verdict.witness is not None:
        parts.append("witness=" + "-".join(map(str, verdict.witness.vertices)))
    print(" ".join(parts))


def _cmd_check(args) -> int:
    seq = parse_sequence(args.sequence)
    decide = is_hamiltonian_threshold if args.kind == "threshold" else is_hamiltonian_chain
    verdict = decide(seq)
    if args.witness and verdict.hamiltonian:
        cycle = find_hamilton_cycle(materialize(seq, args.kind))
        verdict = dataclasses.replace(verdict, witness=cycle)
    _print_verdict(verdict, args.as_json)
    return 0 if verdict.hamiltonian else 1


def _cmd_reduce(args) -> int:
    seq = parse_sequence(args.sequence)
    print(reduce_to_g_star(seq))
    return 0


def _cmd_degrees(args) -> int:
    profile = degree_profile(parse_sequence(args.sequence))
    d = ",".join(map(str, profile.d))
    e = ",".join(map(str, profile.e))
    print(f"r={profile.r} s={profile.s} T={profile.T} S={profile.S} d=[{d}] e=[{e}]")
    return 0


def _cmd_count(args) -> int:
    seq = parse_sequence(args.sequence)
    result = count_hamilton_cycles(materialize(seq, args.kind), cap=args.cap)
    print(result.count)
    return 0


def _cmd_min_chain(args) -> int:
    seq = min_cycle_chain_graph(args.n)
    print(f"{seq}  cycles={2 ** (args.n // 2 - 2)}")
    return 0


def _cmd_census(args) -> int:
    writer = csv.writer(sys.stdout)
    writer.writerow(["sequence", "n", "hamiltonian", "cycle_count"])
    for seq, count in census(args.n, cap=args.cap):
        writer.writerow([str(seq), seq.n, "true", count])
    return 0


def _cmd_export(args) -> int:
    seq = parse_sequence(args.sequence)
    sys.stdout.write(export(materialize(seq, args.kind), args.format))
    return 0


def _cmd_verify(args) -> int:
    kinds = ("threshold", "chain") if args.kind == "both" else (args.kind,)
    mismatches = run_verification(args.max_n, kinds, out=sys.stdout)
    return 1 if mismatches else 0


def run_verification(max_n: int, kinds: Sequence[str] = ("threshold", "chain"),
                     out=None) -> list[str]:
    """Cross-validate the linear decisions (and the clique reduction)
    against the brute-force oracle on every connected sequence of order
    2..max_n.  Returns mismatch descriptions; prints a per-order summary
    table to ``out``.
    """
    from .oracle import find_hamilton_cycle as oracle_find

    def emit(line: str) -> None:
        if out is not None:
            print(line, file=out)

    mismatches: list[str] = []
    emit("n sequences threshold_ham chain_ham reductions")
    totals = [0, 0, 0, 0]
    for n in range(2, max_n + 1):
        counts = {"threshold": 0, "chain": 0}
        sequences = 0
        reductions = 0
        for seq in enumerate_sequences(n):
            sequences += 1
            for kind in kinds:
                decide = is_hamiltonian_threshold if kind == "threshold" else is_hamiltonian_chain
                claimed = decide(seq).hamiltonian
                actual = oracle_find(materialize(seq, kind)) is not None
                if claimed:
                    counts[kind] += 1
                if claimed != actual:
                    mismatches.append(
                        f"MISMATCH kind={kind} seq={seq.word()} algorithm={claimed} oracle={actual}"
                    )
            if "threshold" in kinds:
                try:
                    reduced = reduce_to_g_star(seq)
                except ReductionNotApplicableError:
                    reduced = None
                if reduced is not None:
                    reductions += 1
                    before = oracle_find(materialize(seq, "threshold")) is not None
                    after = oracle_find(materialize(reduced, "threshold")) is not None
                    if before != after:
                        mismatches.append(
                            f"MISMATCH kind=reduction seq={seq.word()} before={before} after={after}"
                        )
        emit(f"{n} {sequences} {counts['threshold']} {counts['chain']} {reductions}")
        totals[0] += sequences
        totals[1] += counts["threshold"]
        totals[2] += counts["chain"]
        totals[3] += reductions
    for line in mismatches:
        emit(line)
    emit(
        f"total {totals[0]} sequences per kind; threshold Hamiltonian {totals[1]}; "
        f"chain Hamiltonian {totals[2]}; reductions checked {totals[3]}; "
        f"mismatches {len(mismatches)}"
    )
    return mismatches


def synthetic_sequence(h: int) -> GeneratingSequence:
    """A balanced h-level sequence on which neither decision exits early."""
    if h < 2:
        raise ValueError("need at least 2 levels")
    if h == 2:
        return GeneratingSequence(((2, 1), (1, 2)))
    return GeneratingSequence(((2, 1),) + ((1, 1),) * (h - 2) + ((1, 2),))


def time_decision(decide: Callable[[GeneratingSequence], Verdict],
                  seq: GeneratingSequence, repeats: int = 5) -> float:
    """Best-of-``repeats`` wall time of one decision call, in seconds."""
    decide(seq)  # warm caches (run-length extraction)
    best = float("inf")
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repeats):
            start = time.perf_counter()
            decide(seq)
            best = min(best, time.perf_counter() - start)
    finally:
        if gc_was_enabled:
            gc.enable()
    return best


def _cmd_bench(args) -> int:
    seq = synthetic_sequence(args.h)
    threshold_s = time_decision(is_hamiltonian_threshold, seq)
    chain_s = time_decision(is_hamiltonian_chain, seq)
    print(f"h={args.h} threshold_ms={threshold_s * 1e3:.3f} chain_ms={chain_s * 1e3:.3f}")
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "reduce": _cmd_reduce,
    "degrees": _cmd_degrees,
    "count": _cmd_count,
    "min-chain": _cmd_min_chain,
    "census": _cmd_census,
    "export": _cmd_export,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SequenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        ReductionNotApplicableError,
        NoHamiltonianChainGraphError,
        EdgeDeletionDisconnectsError,
        OracleCapError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
