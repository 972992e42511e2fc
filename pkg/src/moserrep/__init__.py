"""Unique additive representations by Moser-type sequences."""

from .decompose import DecompositionPair, decompose_moser, decompose_s, decompose_shifted, oracle_decompose
from .errors import CapExhausted, DomainError, MoserError, RangeError
from .josephus import simulate_survivor, survivor_closed, v_iterate
from .radix import RadixExpansion, expand, reassemble, valuation
from .sequences import (SequenceFamily, affine_s, counting, moser, moser_prefix, s_prefix,
                        s_term, shifted_a, t_prefix)

__version__ = "0.1.0"
