"""Exact Betti diagram and h-vector tools for level modules."""
from .bounds import Bounds, mc_bounds, mc_upper_certificate_codim3, zanello_check
from .cancellation import (
    CancellationCertificate,
    apply_cancellations,
    cancellation_certificate,
    delta3,
    maximal_cancellation_level,
    zanello_indices,
)
from .census import CensusReport, Flags, classify, enumerate_candidates, run_census
from .diagram import (
    BettiDiagram,
    HVector,
    dual_flip,
    hvector_of,
    multiplicity,
    phi,
    phi_inverse,
    s_polynomial,
    shifts,
)
from .errors import *  # noqa: F401,F403
from .hvec import (
    LefschetzSplit,
    LevelWitness,
    WlpData,
    codim2_level_condition,
    lefschetz_split,
    level_condition,
    max_betti_combo,
    rational_cancellable,
    rational_dual_cancellable,
    reverse,
    wlp_condition,
)
from .jsonio import render_diagram
from .lex import (
    LexProfile,
    Monomial,
    betti_lex,
    exact_cancellable,
    exact_dual_cancellable,
    lex_profile,
    macaulay_growth,
    module_o_sequence,
    normalized_betti_lex,
)
from .pure import (
    PureCombo,
    binom_r,
    codim3_level_membership,
    ecomp_hvector,
    ecomp_type,
    greedy_decompose,
    pure_diagram,
    quasipure_check,
)
from .rational import as_rational, format_rational, parse_rational

__version__ = "0.1.0"
