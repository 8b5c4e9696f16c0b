"""Command-line interface.

Subcommands: generate, verify, map, analyze, discrepancy, table.  Exit
status 0 on success, 1 on a validation error (with a one-line diagnostic on
stderr), 2 when a verification subcommand finds a property violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .discrepancy import TABLE_WINDOW_CAP, discrepancy, discrepancy_table, table_csv
from .errors import MemoryCapError, PrefseqError
from .generator import (
    SequenceRecord,
    generate,
    generate_prefer_higher,
    generate_prefer_opposite,
    generate_prefer_same,
)
from .homomorphism import verify_mapping
from .preference import (
    PreferenceFunction,
    analyze_cycles,
    column_function,
    make_prefer_higher,
    make_prefer_opposite,
    make_prefer_same,
    predict_missing,
    read_matrix_file,
)
from .verifier import census
from .words import Word, format_digits, parse_digits

# Refuse window tables above 2**30 entries (1 GiB of bookkeeping).
WINDOW_CAP = 2**30

SCHEMA = 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except PrefseqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prefseq",
        description="Generate and verify q-ary de Bruijn sequences built from preference functions.",
    )
    sub = parser.add_subparsers(required=True)

    def family_args(p: argparse.ArgumentParser, with_kind: bool = True) -> None:
        if with_kind:
            p.add_argument(
                "--kind",
                choices=["opposite", "same", "higher", "custom"],
                default="opposite",
                help="sequence family (default: opposite)",
            )
            p.add_argument("--matrix-file", type=Path, help="preference table for --kind custom")
        p.add_argument("--q", type=int, required=True, help="alphabet size")
        p.add_argument("--d", type=int, default=1, help="family step, coprime with q (default 1)")
        p.add_argument("--start", type=int, default=0, help="first digit of the prefer-same seed")
        p.add_argument("--init", help="explicit initial word (digits, comma-separated if q > 10)")
        p.add_argument("--format", choices=["plain", "json"], default="plain")
        p.add_argument("--out", type=Path, help="write output here instead of stdout")

    p = sub.add_parser("generate", help="emit one sequence")
    family_args(p)
    p.add_argument("--n", type=int, help="window order (required unless --init gives it)")
    p.set_defaults(handler=_cmd_generate)

    p = sub.add_parser("verify", help="generate and check structural properties")
    family_args(p)
    p.add_argument("--n", type=int)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("map", help="difference-image reduction to prefer-higher")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit", choices=["image", "compact", "report"], default="report")
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.add_argument("--out", type=Path)
    p.set_defaults(handler=_cmd_map)

    p = sub.add_parser("analyze", help="cycle structure of a column function and missing-word prediction")
    family_args(p)
    p.add_argument("--n", type=int, help="predict missing n-words (omit to list cycles only)")
    p.add_argument("--k", type=int, help="column rank to analyze (default q)")
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("discrepancy", help="prefix-frequency discrepancy of one sequence")
    family_args(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_discrepancy)

    p = sub.add_parser("table", help="discrepancy table over a (q, n) grid, as CSV")
    p.add_argument("--q", type=int, action="append", help="alphabet size (repeatable; default 2 3 4 5)")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=15)
    p.add_argument("--cap", type=int, default=TABLE_WINDOW_CAP, help="skip cells with q**n above this")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", type=Path)
    p.set_defaults(handler=_cmd_table)

    return parser


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        args.out.write_text(text)
    else:
        sys.stdout.write(text)


def _check_cap(q: int, n: int) -> None:
    if q**n > WINDOW_CAP:
        raise MemoryCapError(
            f"q**n = {q ** n} windows exceeds the cap of {WINDOW_CAP}; choose a smaller order"
        )


def _preference_for(args) -> PreferenceFunction:
    if args.kind == "opposite":
        return make_prefer_opposite(args.q, args.d)
    if args.kind == "same":
        return make_prefer_same(args.q, args.d)
    if args.kind == "higher":
        return make_prefer_higher(args.q)
    if args.matrix_file is None:
        raise ValueError("--kind custom requires --matrix-file")
    P = read_matrix_file(args.matrix_file)
    if P.q != args.q:
        raise ValueError(f"matrix file has q={P.q}, command line says q={args.q}")
    return P


def _build_record(args) -> SequenceRecord:
    n = args.n
    init = None
    if args.init is not None:
        init = parse_digits(args.init, args.q)
        if n is None:
            n = len(init)
        elif len(init) != n:
            raise ValueError(f"--init has {len(init)} digits but --n is {n}")
    if n is None:
        raise ValueError("--n is required when --init is not given")
    _check_cap(args.q, n)

    if init is not None or args.kind == "custom":
        P = _preference_for(args)
        seed = Word(init if init is not None else (0,) * n, args.q)
        d = args.d if args.kind in ("opposite", "same") else None
        return generate(P, seed, kind=args.kind, d=d)
    if args.kind == "opposite":
        return generate_prefer_opposite(args.q, args.d, n)
    if args.kind == "same":
        return generate_prefer_same(args.q, args.d, n, start=args.start)
    return generate_prefer_higher(args.q, n)


def _record_json(rec: SequenceRecord) -> dict:
    return {
        "schema": SCHEMA,
        "kind": rec.kind,
        "q": rec.q,
        "d": rec.d,
        "n": rec.n,
        "initial": str(rec.initial),
        "length": len(rec.digits),
        "visited_count": rec.visited_count,
        "digits": str(rec.digits),
    }


def _cmd_generate(args) -> int:
    rec = _build_record(args)
    if args.format == "json":
        _emit(args, json.dumps(_record_json(rec), indent=2) + "\n")
    else:
        _emit(args, str(rec.digits) + "\n")
    return 0


def _cmd_verify(args) -> int:
    rec = _build_record(args)
    report = census(rec)
    ok = report.ok

    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "kind": rec.kind,
            "q": report.q,
            "d": rec.d,
            "n": report.n,
            "length": len(rec.digits),
            "windows": rec.visited_count,
            "is_full": report.is_full,
            "missing": sorted(str(w) for w in report.missing),
            "duplicated": sorted(str(w) for w in report.duplicated),
            "suffix_ok": report.suffix_ok,
            "terminal_expected": None if report.terminal_expected is None else str(report.terminal_expected),
            "terminal_ok": report.terminal_ok,
            "missing_ok": report.missing_ok,
            "final_appearance_ok": report.final_appearance_ok,
            "family_ok": report.family_ok,
            "palindrome": report.palindrome,
            "ok": ok,
        }
        _emit(args, json.dumps(doc, indent=2) + "\n")
    else:
        lines = [
            f"kind={rec.kind} q={report.q} d={rec.d} n={report.n}",
            f"length={len(rec.digits)} windows={rec.visited_count} distinct={len(report.counts)}",
            f"is_full={report.is_full} missing={len(report.missing)} duplicated={len(report.duplicated)}",
            f"suffix_ok={report.suffix_ok} terminal_ok={report.terminal_ok} missing_ok={report.missing_ok}"
            f" final_appearance_ok={report.final_appearance_ok}"
            f" family_ok={report.family_ok} palindrome={report.palindrome}",
        ]
        if report.missing and len(report.missing) <= 32:
            lines.append("missing_words=" + ",".join(sorted(str(w) for w in report.missing)))
        if report.duplicated and len(report.duplicated) <= 32:
            lines.append("duplicated_words=" + ",".join(sorted(str(w) for w in report.duplicated)))
        lines.append("status=" + ("ok" if ok else "violation"))
        _emit(args, "\n".join(lines) + "\n")
    return 0 if ok else 2


def _cmd_map(args) -> int:
    _check_cap(args.q, args.n)
    report = verify_mapping(args.q, args.d, args.n)
    if args.emit == "image":
        _emit(args, str(report.image) + "\n")
        return 0
    if args.emit == "compact":
        _emit(args, str(report.compact) + "\n")
        return 0
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "q": report.q,
            "d": report.d,
            "n": report.n,
            "beta": report.beta,
            "image_length": len(report.image),
            "compact": str(report.compact),
            "expected": str(report.expected),
            "equal": report.equal,
            "first_mismatch": report.first_mismatch,
        }
        _emit(args, json.dumps(doc, indent=2) + "\n")
    else:
        lines = [
            f"q={report.q} d={report.d} n={report.n} beta={report.beta}",
            f"image_length={len(report.image)} compact_length={len(report.compact)}"
            f" expected_length={len(report.expected)}",
            f"equal={report.equal} first_mismatch={report.first_mismatch}",
        ]
        _emit(args, "\n".join(lines) + "\n")
    return 0 if report.equal else 2


def _vertex_str(v: tuple[int, ...], q: int) -> str:
    return format_digits(v, q) if v else "()"


def _cmd_analyze(args) -> int:
    P = _preference_for(args)
    k = args.k if args.k is not None else P.q
    analysis = analyze_cycles(P, k)

    prediction = None
    if args.n is not None and k == P.q:
        if P.q**args.n > WINDOW_CAP:
            raise MemoryCapError(f"q**n = {P.q ** args.n} exceeds the cap of {WINDOW_CAP}")
        # Default cycle: the one reached by following g_q from the all-zero
        # s-word (equals the cycle containing it when that word is cyclic).
        g = analyze_cycles(P, P.q)
        start = (0,) * P.span
        target = _follow_to_cycle(P, start)
        chosen = next(c for c in g.cycles if target in c.members)
        prediction = predict_missing(P, chosen, args.n)

    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "q": P.q,
            "span": P.span,
            "true_span": P.true_span,
            "k": k,
            "cycles": [
                {
                    "vertices": [_vertex_str(v, P.q) for v in c.vertices],
                    "closure": sorted(_vertex_str(v, P.q) for v in c.closure),
                    "sigma": sorted(_vertex_str(v, P.q) for v in c.sigma),
                }
                for c in analysis.cycles
            ],
        }
        if prediction is not None:
            doc.update(
                {
                    "chosen": prediction.chosen,
                    "q_prime": prediction.q_prime,
                    "exact": prediction.exact,
                    "complete": prediction.complete,
                    "predicted_missing": sorted(str(w) for w in prediction.predicted_missing),
                }
            )
        _emit(args, json.dumps(doc, indent=2) + "\n")
    else:
        lines = [f"q={P.q} span={P.span} true_span={P.true_span} column={k} cycles={len(analysis.cycles)}"]
        for i, c in enumerate(analysis.cycles):
            verts = "->".join(_vertex_str(v, P.q) for v in c.vertices)
            lines.append(
                f"cycle {i}: ({verts}) closure_size={len(c.closure)} sigma_size={len(c.sigma)}"
            )
        if prediction is not None:
            lines.append(
                f"chosen={prediction.chosen} q_prime={prediction.q_prime}"
                f" exact={prediction.exact} complete={prediction.complete}"
            )
            words_str = ",".join(sorted(str(w) for w in prediction.predicted_missing)) or "(none)"
            lines.append(f"predicted_missing={words_str}")
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _follow_to_cycle(P: PreferenceFunction, start: tuple[int, ...]) -> tuple[int, ...]:
    g = column_function(P, P.q)
    seen = set()
    v = start
    while v not in seen:
        seen.add(v)
        v = g(v)
    return v


def _cmd_discrepancy(args) -> int:
    rec = _build_record(args)
    profile = discrepancy(rec.digits)
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "kind": rec.kind,
            "q": rec.q,
            "d": rec.d,
            "n": rec.n,
            "length": len(rec.digits),
            "value": profile.value,
            "argmax_prefix": profile.argmax_prefix,
        }
        _emit(args, json.dumps(doc, indent=2) + "\n")
    else:
        _emit(
            args,
            f"kind={rec.kind} q={rec.q} d={rec.d} n={rec.n} length={len(rec.digits)}\n"
            f"value={profile.value} argmax_prefix={profile.argmax_prefix}\n",
        )
    return 0


def _cmd_table(args) -> int:
    qs = args.q if args.q else [2, 3, 4, 5]
    ns = range(args.n_min, args.n_max + 1)
    rows = discrepancy_table(qs, ns, max_windows=args.cap)
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "rows": [
                {
                    "q": r.q,
                    "n": r.n,
                    "prefer_same": r.prefer_same,
                    "prefer_opposite": r.prefer_opposite,
                    "prefer_higher": r.prefer_higher,
                }
                for r in rows
            ],
        }
        _emit(args, json.dumps(doc, indent=2) + "\n")
    else:
        _emit(args, table_csv(rows))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
