"""Greedy sequence construction driven by a preference function.

Seed with an initial n-word, then repeatedly append the highest-ranked digit
whose trailing n-window has not been seen; halt when every candidate repeats
a window.  The output always ends with the first n-1 digits of the seed, so
the linear string already contains its cyclic wrap-around.

Window bookkeeping uses a dense byte table of size q**n; keep q**n below
2**30 (the CLI enforces this cap, the library functions trust the caller).
"""

from __future__ import annotations

from dataclasses import dataclass

from .preference import PreferenceFunction, make_prefer_higher, make_prefer_opposite, make_prefer_same
from .words import Word, alternating_word


@dataclass(frozen=True)
class SequenceRecord:
    """A generated digit string plus its provenance.

    `kind` is one of "opposite", "same", "higher", "custom"; `d` is the
    family step for the first two and None otherwise.  `visited_count` is
    the number of distinct n-windows placed, so the linear length is always
    visited_count + n - 1.
    """

    digits: Word
    q: int
    n: int
    initial: Word
    kind: str
    d: int | None
    visited_count: int


def generate(
    P: PreferenceFunction, I: Word, *, kind: str = "custom", d: int | None = None
) -> SequenceRecord:
    """Run the greedy construction for preference function `P` and seed `I`."""
    q, s = P.q, P.span
    n = len(I)
    if I.q != q:
        raise ValueError(f"seed alphabet {I.q} does not match preference alphabet {q}")
    if n <= s:
        raise ValueError(f"seed length {n} must exceed the span {s}")

    windows = q**n
    shift_mod = q ** (n - 1)
    seen = bytearray(windows)

    seq = list(I.digits)
    code = 0
    for a in seq:
        code = code * q + a
    seen[code] = 1
    tail = code % shift_mod  # encoding of the last n-1 digits

    rows = P.rows
    if s:
        s_mod = q**s
        s_code = 0
        for a in seq[-s:]:
            s_code = s_code * q + a
    else:
        s_mod = 1
        s_code = 0

    while True:
        for digit in rows[s_code]:
            cand = tail * q + digit
            if not seen[cand]:
                seen[cand] = 1
                seq.append(digit)
                tail = cand % shift_mod
                if s:
                    s_code = (s_code * q + digit) % s_mod
                break
        else:
            break

    return SequenceRecord(
        digits=Word(tuple(seq), q),
        q=q,
        n=n,
        initial=I,
        kind=kind,
        d=d,
        visited_count=len(seq) - n + 1,
    )


def generate_prefer_opposite(q: int, d: int, n: int) -> SequenceRecord:
    """The prefer-opposite sequence o_n: step-d family seeded with 0^n."""
    if n < 2:
        raise ValueError("prefer-opposite needs n >= 2")
    P = make_prefer_opposite(q, d)
    return generate(P, Word((0,) * n, q), kind="opposite", d=d)


def generate_prefer_same(q: int, d: int, n: int, start: int = 0) -> SequenceRecord:
    """The prefer-same sequence s_n, seeded with the alternating word of
    increment d*(q-1) starting at `start`; a full de Bruijn sequence."""
    if n < 2:
        raise ValueError("prefer-same needs n >= 2")
    P = make_prefer_same(q, d)
    seed = alternating_word(q, start, d * (q - 1) % q, n)
    return generate(P, seed, kind="same", d=d)


def generate_prefer_higher(q: int, n: int) -> SequenceRecord:
    """The prefer-higher (Ford) de Bruijn sequence h_n, seeded with 0^n."""
    if n < 1:
        raise ValueError("prefer-higher needs n >= 1")
    P = make_prefer_higher(q)
    return generate(P, Word((0,) * n, q), kind="higher")


def record_from_digits(
    digits, q: int, n: int, *, kind: str = "custom", d: int | None = None
) -> SequenceRecord:
    """Wrap an arbitrary digit string as a record, e.g. to feed the verifier.

    No greedy-construction invariants are assumed or checked beyond digit
    validity and the string being long enough to contain one n-window.
    """
    w = digits if isinstance(digits, Word) else Word(tuple(digits), q)
    if len(w) < n:
        raise ValueError(f"need at least {n} digits, got {len(w)}")
    distinct = len({w.digits[i : i + n] for i in range(len(w) - n + 1)})
    return SequenceRecord(
        digits=w,
        q=q,
        n=n,
        initial=Word(w.digits[:n], q),
        kind=kind,
        d=d,
        visited_count=distinct,
    )
