"""Scaled-difference homomorphism and the repetition-cleanup reduction.

D_beta maps a word to its beta-scaled consecutive differences mod q; it
collapses each translate orbit to a single image and shortens the word by
one digit.  Cleaning repetitions out of D_beta applied to the prefer-opposite
sequence of order n recovers the prefer-higher sequence of order n-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotCoprimeError
from .generator import SequenceRecord, generate_prefer_higher, generate_prefer_opposite
from .words import Word


@dataclass(frozen=True)
class HomomorphismSpec:
    """Alphabet size with a scaling unit beta and its inverse mod q."""

    q: int
    beta: int
    beta_inv: int

    def __post_init__(self) -> None:
        if math.gcd(self.beta, self.q) != 1:
            raise NotCoprimeError(f"beta={self.beta} is not coprime with q={self.q}")
        if (self.beta * self.beta_inv) % self.q != 1:
            raise ValueError(f"{self.beta_inv} is not the inverse of {self.beta} mod {self.q}")

    @classmethod
    def for_beta(cls, q: int, beta: int) -> "HomomorphismSpec":
        beta %= q
        if math.gcd(beta, q) != 1:
            raise NotCoprimeError(f"beta={beta} is not coprime with q={q}")
        return cls(q=q, beta=beta, beta_inv=pow(beta, -1, q))


def beta_for(d: int, q: int) -> int:
    """The scaling unit matched to the step-d prefer-opposite family: d^-1 * (q-1) mod q."""
    if math.gcd(d, q) != 1:
        raise NotCoprimeError(f"d={d} is not coprime with q={q}")
    return (pow(d, -1, q) * (q - 1)) % q


def spec_for_family(d: int, q: int) -> HomomorphismSpec:
    """Spec carrying :func:`beta_for`'s unit for the step-d family."""
    return HomomorphismSpec.for_beta(q, beta_for(d, q))


def apply_dbeta(x: Word, spec: HomomorphismSpec) -> Word:
    """beta-scaled consecutive differences; output is one digit shorter."""
    if x.q != spec.q:
        raise ValueError(f"word alphabet {x.q} does not match spec alphabet {spec.q}")
    if len(x) < 2:
        raise ValueError("difference image needs a word of length >= 2")
    q, beta = spec.q, spec.beta
    a = x.digits
    return Word(tuple(beta * (a[i + 1] - a[i]) % q for i in range(len(a) - 1)), q)


def preimages(w: Word, spec: HomomorphismSpec) -> list[Word]:
    """All q inverse images of `w` under D_beta, one per leading digit.

    Successive digits follow x_i = x_{i-1} + beta^-1 * w_{i-1}; the q
    results are mutual translates of each other.
    """
    if w.q != spec.q:
        raise ValueError(f"word alphabet {w.q} does not match spec alphabet {spec.q}")
    q, inv = spec.q, spec.beta_inv
    out = []
    for lead in range(q):
        digits = [lead]
        for step in w.digits:
            digits.append((digits[-1] + inv * step) % q)
        out.append(Word(tuple(digits), q))
    return out


@dataclass(frozen=True)
class CleanupResult:
    """Outcome of crossing repeated (n-1)-windows out of an image string.

    The first n-2 digits are always kept (no full window ends there);
    `kept_indices` lists the later positions whose trailing window was new
    when reached.  `compact` is the always-kept prefix followed by the kept
    digits in order.
    """

    image: Word
    n: int
    kept_indices: tuple[int, ...]
    compact: Word


def cleanup(image: Word, n: int) -> CleanupResult:
    """Keep each image digit only if it ends a first-occurrence (n-1)-window.

    The window seen-set tracks windows of the raw image, so later repeats
    are crossed out even when earlier copies were themselves crossed out.
    """
    m = n - 1
    if m < 1:
        raise ValueError("cleanup needs n >= 2")
    if len(image) < m:
        raise ValueError(f"image of length {len(image)} has no {m}-window")
    a = image.digits
    seen: set[tuple[int, ...]] = set()
    kept: list[int] = []
    for i in range(m - 1, len(a)):
        window = a[i - m + 1 : i + 1]
        if window not in seen:
            seen.add(window)
            kept.append(i)
    compact = a[: m - 1] + tuple(a[i] for i in kept)
    return CleanupResult(image=image, n=n, kept_indices=tuple(kept), compact=Word(compact, image.q))


@dataclass(frozen=True)
class MappingReport:
    """Digit-for-digit comparison of the cleaned image against prefer-higher."""

    q: int
    d: int
    n: int
    beta: int
    source: SequenceRecord
    image: Word
    compact: Word
    expected: Word
    equal: bool
    first_mismatch: int | None


def verify_mapping(q: int, d: int, n: int) -> MappingReport:
    """Check that cleanup(D_beta(o_n)) equals the prefer-higher sequence of order n-1."""
    if n < 2:
        raise ValueError("mapping check needs n >= 2")
    source = generate_prefer_opposite(q, d, n)
    spec = spec_for_family(d, q)
    image = apply_dbeta(source.digits, spec)
    compact = cleanup(image, n).compact
    expected = generate_prefer_higher(q, n - 1).digits
    first_mismatch = None
    for i in range(max(len(compact), len(expected))):
        ca = compact.digits[i] if i < len(compact) else None
        ea = expected.digits[i] if i < len(expected) else None
        if ca != ea:
            first_mismatch = i
            break
    return MappingReport(
        q=q,
        d=d,
        n=n,
        beta=spec.beta,
        source=source,
        image=image,
        compact=compact,
        expected=expected,
        equal=first_mismatch is None,
        first_mismatch=first_mismatch,
    )
