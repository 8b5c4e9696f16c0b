#!/usr/bin/env python3
"""End-to-end tour of the q=3, d=2, n=4 pipeline.

Generates the order-4 ternary prefer-opposite sequence, maps it through the
matched difference homomorphism, crosses out repeated windows, and checks
the survivor against the order-3 prefer-higher sequence.
"""

import argparse

from prefseq.generator import generate_prefer_higher, generate_prefer_opposite
from prefseq.homomorphism import apply_dbeta, cleanup, spec_for_family
from prefseq.preference import analyze_cycles, make_prefer_opposite, predict_missing
from prefseq.verifier import census, expected_terminal


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", type=int, default=3)
    parser.add_argument("--d", type=int, default=2)
    parser.add_argument("--n", type=int, default=4)
    args = parser.parse_args()
    q, d, n = args.q, args.d, args.n

    rec = generate_prefer_opposite(q, d, n)
    print(f"prefer-opposite  q={q} d={d} n={n}  length={len(rec.digits)}")
    print(f"  {rec.digits}")

    report = census(rec)
    print(f"missing words: {', '.join(sorted(str(w) for w in report.missing))}")
    print(f"terminal suffix: {expected_terminal(q, d, n)}  (matches: {report.terminal_ok})")

    P = make_prefer_opposite(q, d)
    zero = next(c for c in analyze_cycles(P, q).cycles if c.vertices == ((0,),))
    pred = predict_missing(P, zero, n)
    predicted = ", ".join(sorted(str(w) for w in pred.predicted_missing))
    print(f"predicted missing (threshold q'={pred.q_prime}): {predicted}")

    spec = spec_for_family(d, q)
    image = apply_dbeta(rec.digits, spec)
    print(f"\ndifference image (beta={spec.beta})  length={len(image)}")
    print(f"  {image}")

    result = cleanup(image, n)
    print(f"\nafter crossing repeated windows  length={len(result.compact)}")
    print(f"  {result.compact}")

    h = generate_prefer_higher(q, n - 1)
    print(f"prefer-higher order {n - 1}")
    print(f"  {h.digits}")
    print(f"\nequal: {result.compact == h.digits}")
    return 0 if result.compact == h.digits else 2


if __name__ == "__main__":
    raise SystemExit(main())
