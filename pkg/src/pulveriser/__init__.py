"""Exact implementations of classical number-theory algorithms.

Every algorithm works on unbounded integers and exact fractions, and most
accept an optional ``sink`` that receives a numbered, machine-readable
record of each step (see :mod:`pulveriser.trace`).
"""

from .comparative import UnitFractionSum, egyptian_decompose, euclid_new_prime, sieve
from .diophantine import (
    ChakravalaState,
    KuttakaSolution,
    PellSolution,
    brahmagupta_compose,
    chakravala,
    kuttaka,
)
from .exactnum import Rational, extended_gcd, gcd, rational_make
from .prosody import (
    MeterPattern,
    Syllable,
    enumerate_matra,
    enumerate_prastara,
    exp,
    exp2,
    index_to_pattern,
    matra_count,
    meru_row,
    pattern_to_index,
    points_share,
)
from .roots import IterationStep, Method, RootState, aryabhata_sqrt, bakhshali_step, heron_step, iterate
from .triples import (
    GeneratorPair,
    Triple,
    enumerate_primitive_triples,
    katyayana_triple,
    pothayanar_estimate,
    pothayanar_is_exact,
)

__version__ = "0.1.0"
