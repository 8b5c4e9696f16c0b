"""q-ary de Bruijn sequences from preference functions.

Greedy construction of the prefer-opposite, prefer-same, and prefer-higher
families over any alphabet size, with exact missing-word prediction, a
difference-homomorphism reduction between families, structural verifiers,
and prefix-discrepancy profiling.
"""

from .discrepancy import (
    DiscrepancyProfile,
    TableRow,
    conjecture_onset_q2,
    conjectured_q2,
    discrepancy,
    discrepancy_table,
    table_csv,
)
from .errors import (
    MatrixFormatError,
    MemoryCapError,
    NoQPrimeError,
    NotACycleError,
    NotCoprimeError,
    PrefseqError,
)
from .generator import (
    SequenceRecord,
    generate,
    generate_prefer_higher,
    generate_prefer_opposite,
    generate_prefer_same,
    record_from_digits,
)
from .homomorphism import (
    CleanupResult,
    HomomorphismSpec,
    MappingReport,
    apply_dbeta,
    beta_for,
    cleanup,
    preimages,
    spec_for_family,
    verify_mapping,
)
from .preference import (
    Cycle,
    CycleAnalysis,
    ColumnFunction,
    PreferenceFunction,
    analyze_cycles,
    column_function,
    is_on_cycle,
    make_prefer_higher,
    make_prefer_opposite,
    make_prefer_same,
    parse_matrix,
    predict_missing,
    read_matrix_file,
)
from .verifier import (
    VerificationReport,
    census,
    check_final_appearance,
    check_palindrome_rule,
    expected_terminal,
    is_prime,
)
from .words import (
    Word,
    alternating_word,
    decode,
    encode,
    format_digits,
    is_alternating,
    parse_digits,
    translate,
)

__version__ = "0.1.0"
