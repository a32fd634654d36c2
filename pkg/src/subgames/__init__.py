"""Subtraction games: nim-values, cold positions, and structure experiments."""

from .analysis import (
    DigitHistogram,
    MonomialFit,
    RecordSeries,
    density_samples,
    digit_histogram,
    max_records,
    siegel_fit,
)
from .bitkernel import (
    BitVec,
    CountVec,
    convolve_boolean,
    convolve_boolean_window,
    convolve_exact,
    convolve_naive,
)
from .games import (
    GameSpec,
    explicit_game,
    moser_de_bruijn_game,
    moser_nim_formula,
    primes_game,
    squares_game,
)
from .solvers import (
    HotCold,
    MultiHeapVerdict,
    NimTable,
    cold_sieve,
    hotcold_dandc,
    hotcold_dp,
    mex,
    multiheap_analyze,
    nim_dp,
    nim_layered,
)

__version__ = "0.1.0"

__all__ = [
    "BitVec",
    "CountVec",
    "convolve_naive",
    "convolve_exact",
    "convolve_boolean",
    "convolve_boolean_window",
    "GameSpec",
    "squares_game",
    "moser_de_bruijn_game",
    "explicit_game",
    "primes_game",
    "moser_nim_formula",
    "HotCold",
    "NimTable",
    "MultiHeapVerdict",
    "mex",
    "nim_dp",
    "hotcold_dp",
    "hotcold_dandc",
    "cold_sieve",
    "nim_layered",
    "multiheap_analyze",
    "RecordSeries",
    "MonomialFit",
    "DigitHistogram",
    "max_records",
    "density_samples",
    "digit_histogram",
    "siegel_fit",
    "__version__",
]
