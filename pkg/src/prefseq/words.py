"""Digit and word primitives over the alphabet {0, ..., q-1}.

Words are immutable digit tuples tagged with their alphabet size.  The dense
base-q encoding (most significant digit first) gives every word of a fixed
length a unique index in [0, q**length), which the rest of the package uses
for O(1) membership tables.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Word:
    """An immutable word of digits over {0, ..., q-1}; at least one digit."""

    digits: tuple[int, ...]
    q: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "digits", tuple(self.digits))
        if self.q < 2:
            raise ValueError(f"alphabet size must be >= 2, got {self.q}")
        if len(self.digits) < 1:
            raise ValueError("a word needs at least one digit")
        for a in self.digits:
            if not 0 <= a < self.q:
                raise ValueError(f"digit {a} out of range for alphabet size {self.q}")

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return format_digits(self.digits, self.q)


def encode(w: Word) -> int:
    """Dense index of `w` among all words of its length: base-q, MSD first."""
    code = 0
    for a in w.digits:
        code = code * w.q + a
    return code


def decode(index: int, q: int, length: int) -> Word:
    """Inverse of :func:`encode` for the given alphabet size and length."""
    if length < 1:
        raise ValueError("word length must be >= 1")
    if not 0 <= index < q**length:
        raise ValueError(f"index {index} out of range for q={q}, length={length}")
    digits = [0] * length
    for i in range(length - 1, -1, -1):
        index, digits[i] = divmod(index, q)
    return Word(tuple(digits), q)


def translate(w: Word, c: int) -> Word:
    """Shift every digit of `w` by the constant `c`, modulo q."""
    if not 0 <= c < w.q:
        raise ValueError(f"translation constant {c} out of range for q={w.q}")
    return Word(tuple((a + c) % w.q for a in w.digits), w.q)


def is_alternating(w: Word, delta: int) -> bool:
    """True iff consecutive digits of `w` always differ by `delta` mod q.

    The constant word is alternating with increment 0.  Requires at least
    two digits so the condition is non-vacuous.
    """
    if len(w) < 2:
        raise ValueError("alternating test needs a word of length >= 2")
    q = w.q
    return all((w.digits[i + 1] - w.digits[i]) % q == delta % q for i in range(len(w) - 1))


def alternating_word(q: int, start: int, delta: int, length: int) -> Word:
    """The length-`length` word starting at `start` with constant increment `delta`."""
    return Word(tuple((start + i * delta) % q for i in range(length)), q)


def format_digits(digits: tuple[int, ...], q: int) -> str:
    """Render digits: concatenated for q <= 10, comma-separated otherwise."""
    if q <= 10:
        return "".join(str(a) for a in digits)
    return ",".join(str(a) for a in digits)


def parse_digits(text: str, q: int) -> tuple[int, ...]:
    """Parse the output of :func:`format_digits` back into a digit tuple."""
    text = text.strip()
    if not text:
        raise ValueError("empty digit string")
    if "," in text or q > 10:
        parts = [p.strip() for p in text.split(",")]
    else:
        parts = list(text)
    digits = tuple(int(p) for p in parts)
    for a in digits:
        if not 0 <= a < q:
            raise ValueError(f"digit {a} out of range for alphabet size {q}")
    return digits
