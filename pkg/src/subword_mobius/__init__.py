"""Zeta and Möbius functions of generalized subword orders, computed exactly."""

from .automata import accept_series, build_M_automaton, build_Z_automaton
from .chebyshev import chebyshev_T, check_lambda_conjecture
from .incidence import DownSetTable, IntervalCache, convolution_check, interval, mobius_normal, mobius_oracle, zeta_power
from .ncseries import NCSeries, m_builder, series_M, series_Z, verify_telescoping, z_builder
from .poset import BOTTOM, Poset, make_antichain, make_chain, make_forest, make_lambda, parse_poset
from .ratfn import Polynomial, RationalFn
from .words import (
    Embedding,
    all_embeddings,
    defect,
    leq_words,
    normal_embeddings,
    parse_word,
    rightmost_embedding,
    runs,
)

__version__ = "0.1.0"
