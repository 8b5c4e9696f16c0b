"""Prefix-frequency discrepancy of q-ary sequences.

The discrepancy of a sequence is the largest gap, over all prefixes, between
the most and least frequent symbols so far.  One digit changes one counter,
so consecutive prefix gaps differ by at most one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .generator import (
    generate_prefer_higher,
    generate_prefer_opposite,
    generate_prefer_same,
)
from .words import Word

# Window budget for table cells; cells above it are emitted as skipped.
# One million windows keeps every cell at laptop scale.
TABLE_WINDOW_CAP = 1_000_000


@dataclass(frozen=True)
class DiscrepancyProfile:
    """Per-prefix frequency gaps; prefix_gap[i] covers the first i digits."""

    q: int
    prefix_gap: tuple[int, ...]
    value: int
    argmax_prefix: int


def discrepancy(seq: Word | Sequence[int], q: int | None = None) -> DiscrepancyProfile:
    """Single left-to-right pass maintaining one counter per symbol."""
    if isinstance(seq, Word):
        if q is not None and q != seq.q:
            raise ValueError(f"alphabet mismatch: word has q={seq.q}, got q={q}")
        digits, q = seq.digits, seq.q
    else:
        if q is None:
            raise ValueError("alphabet size required for a bare digit sequence")
        digits = tuple(seq)
    if not digits:
        raise ValueError("discrepancy of an empty sequence is undefined")

    counts = [0] * q
    gaps = [0]
    for a in digits:
        counts[a] += 1
        gaps.append(max(counts) - min(counts))
    value = max(gaps)
    return DiscrepancyProfile(
        q=q, prefix_gap=tuple(gaps), value=value, argmax_prefix=gaps.index(value)
    )


@dataclass(frozen=True)
class TableRow:
    """Discrepancy of the three step-1 sequences at one (q, n); None = skipped."""

    q: int
    n: int
    prefer_same: int | None
    prefer_opposite: int | None
    prefer_higher: int | None


def discrepancy_table(
    qs: Iterable[int], ns: Iterable[int], max_windows: int = TABLE_WINDOW_CAP
) -> list[TableRow]:
    """Discrepancies of s_n, o_n (both d=1) and h_n over a (q, n) grid.

    Each sequence starts from its natural initial word.  Cells whose window
    table q**n would exceed `max_windows` are skipped.
    """
    rows = []
    for q in qs:
        for n in ns:
            if q**n > max_windows:
                rows.append(TableRow(q=q, n=n, prefer_same=None, prefer_opposite=None, prefer_higher=None))
                continue
            same = discrepancy(generate_prefer_same(q, 1, n).digits).value
            opp = discrepancy(generate_prefer_opposite(q, 1, n).digits).value
            higher = discrepancy(generate_prefer_higher(q, n).digits).value
            rows.append(TableRow(q=q, n=n, prefer_same=same, prefer_opposite=opp, prefer_higher=higher))
    return rows


def table_csv(rows: Iterable[TableRow]) -> str:
    """Fixed-header CSV with '-' marking skipped cells."""
    out = ["q,n,prefer_same,prefer_opposite,prefer_higher"]
    for r in rows:
        cells = ["-" if v is None else str(v) for v in (r.prefer_same, r.prefer_opposite, r.prefer_higher)]
        out.append(f"{r.q},{r.n}," + ",".join(cells))
    return "\n".join(out) + "\n"


def conjectured_q2(kind: str, n: int) -> int:
    """Closed-form binary discrepancy guesses for the two span-1 families.

    For prefer-same: n(n-2)/4 when n is even, else (n-1)^2/4 plus one when
    (n-1) = 2 mod 4.  For prefer-opposite: (n/2)^2 + 1 when n is even, else
    ((n-1)/2)^2 + (n-1)/2 + 1.  Both are asymptotic: they only match the
    computed values from a small onset index onwards.
    """
    if n < 2:
        raise ValueError("closed forms start at n=2")
    if kind == "same":
        if n % 2 == 0:
            return n * (n - 2) // 4
        base = (n - 1) ** 2 // 4
        return base if (n - 1) % 4 == 0 else base + 1
    if kind == "opposite":
        if n % 2 == 0:
            return (n // 2) ** 2 + 1
        half = (n - 1) // 2
        return half**2 + half + 1
    raise ValueError(f"unknown kind {kind!r}; expected 'same' or 'opposite'")


def conjecture_onset_q2(kind: str, computed: dict[int, int]) -> int | None:
    """Smallest n such that the closed form matches every computed value
    from n up to the largest key; None when even the last value disagrees."""
    onset = None
    for n in sorted(computed, reverse=True):
        if conjectured_q2(kind, n) == computed[n]:
            onset = n
        else:
            break
    return onset
