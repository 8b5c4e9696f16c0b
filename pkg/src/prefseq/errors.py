"""Exception types shared across the package."""


class PrefseqError(Exception):
    """Base class for all library-specific errors."""


class NotCoprimeError(PrefseqError, ValueError):
    """A family parameter d (or beta) is not coprime with the alphabet size."""


class NotACycleError(PrefseqError, ValueError):
    """A vertex set handed to the missing-word predictor is not a cycle of g_q."""


class NoQPrimeError(PrefseqError):
    """No valid preference threshold exists for the missing-word prediction."""


class MatrixFormatError(PrefseqError, ValueError):
    """A preference matrix file is malformed or fails the permutation check."""


class MemoryCapError(PrefseqError):
    """A requested computation would exceed the documented memory budget."""
