"""Structural checks on generated sequences: window census, terminal
patterns, final-appearance, and the n=2 palindrome test."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product

from .generator import SequenceRecord, generate_prefer_opposite
from .preference import column_function, make_prefer_opposite
from .words import Word


@dataclass(frozen=True)
class VerificationReport:
    """Window-level census plus the family-specific structure flags.

    `counts` maps each occurring n-word to its multiplicity.  `is_full`
    holds exactly when every n-word occurs once.  `terminal_expected`,
    `terminal_ok`, `missing_ok` and `final_appearance_ok` are set for
    prefer-opposite records only; `palindrome` follows the n=2 convention
    of appending one zero for those records and tests the raw digits
    otherwise.  `family_ok` condenses what the record's family promises:
    the exact missing set, terminal pattern and final-appearance rule for
    prefer-opposite, a full census for prefer-same and prefer-higher, and
    None (no promise) for custom records.
    """

    q: int
    n: int
    counts: dict[Word, int]
    missing: frozenset[Word]
    duplicated: frozenset[Word]
    is_full: bool
    suffix_ok: bool
    terminal_expected: Word | None
    terminal_ok: bool | None
    missing_ok: bool | None
    final_appearance_ok: bool | None
    family_ok: bool | None
    palindrome: bool

    @property
    def ok(self) -> bool:
        """No duplicated window, wrap suffix intact, family promise kept."""
        return not self.duplicated and self.suffix_ok and self.family_ok is not False


def census(seq: SequenceRecord) -> VerificationReport:
    """Exact multiplicity table of the n-windows of `seq`.

    Any multiplicity above one violates the at-most-once guarantee of the
    greedy construction, so `duplicated` doubles as the defect list for
    adversarial input.
    """
    q, n = seq.q, seq.n
    a = seq.digits.digits
    counter = Counter(a[i : i + n] for i in range(len(a) - n + 1))
    counts = {Word(w, q): c for w, c in counter.items()}
    missing = frozenset(
        Word(w, q) for w in product(range(q), repeat=n) if w not in counter
    )
    duplicated = frozenset(w for w, c in counts.items() if c > 1)
    is_full = not missing and not duplicated
    suffix_ok = n == 1 or a[-(n - 1) :] == a[: n - 1]

    terminal_expected = None
    terminal_ok = None
    missing_ok = None
    final_ok = None
    family_ok = None
    if seq.kind == "opposite" and seq.d is not None and n >= 2:
        terminal_expected = expected_terminal(q, seq.d, n)
        terminal_ok = a[-len(terminal_expected) :] == terminal_expected.digits
        missing_ok = missing == frozenset(Word((c,) * n, q) for c in range(1, q))
        final_ok = check_final_appearance(seq)
        family_ok = terminal_ok and missing_ok and final_ok
    elif seq.kind in ("same", "higher"):
        family_ok = is_full

    if seq.kind == "opposite":
        palindrome = _is_palindrome(a + (0,))
    else:
        palindrome = _is_palindrome(a)

    return VerificationReport(
        q=q,
        n=n,
        counts=counts,
        missing=missing,
        duplicated=duplicated,
        is_full=is_full,
        suffix_ok=suffix_ok,
        terminal_expected=terminal_expected,
        terminal_ok=terminal_ok,
        missing_ok=missing_ok,
        final_appearance_ok=final_ok,
        family_ok=family_ok,
        palindrome=palindrome,
    )


def expected_terminal(q: int, d: int, n: int) -> Word:
    """The forced tail of the step-d prefer-opposite sequence.

    Iterating the next-to-last column g_{q-1} from 0 orders the nonzero
    digits; the sequence ends with each of them repeated n-1 times in that
    order, then n-1 zeros.  Total length q*(n-1).
    """
    if n < 2:
        raise ValueError("terminal pattern needs n >= 2")
    g = column_function(make_prefer_opposite(q, d), q - 1)
    blocks = []
    v = (0,)
    for _ in range(q - 1):
        v = g(v)
        blocks.append(v[0])
    blocks.append(0)
    return Word(tuple(b for b in blocks for _ in range(n - 1)), q)


def check_final_appearance(seq: SequenceRecord) -> bool:
    """No digit a occurs after the last occurrence of the run a^(n-1).

    Digits whose run never occurs impose no constraint.  Holds for every
    prefer-opposite sequence; adversarial input can fail it.
    """
    q, n = seq.q, seq.n
    if n < 2:
        return True
    a = seq.digits.digits
    for digit in range(q):
        run = (digit,) * (n - 1)
        last = _rfind(a, run)
        if last is None:
            continue
        if digit in a[last + n - 1 :]:
            return False
    return True


def check_palindrome_rule(q: int, d: int) -> bool:
    """Whether o_2 plus one appended zero is a palindrome iff q is prime."""
    seq = generate_prefer_opposite(q, d, 2)
    return _is_palindrome(seq.digits.digits + (0,)) == is_prime(q)


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


def _is_palindrome(a: tuple[int, ...]) -> bool:
    return a == a[::-1]


def _rfind(a: tuple[int, ...], pattern: tuple[int, ...]) -> int | None:
    for i in range(len(a) - len(pattern), -1, -1):
        if a[i : i + len(pattern)] == pattern:
            return i
    return None
