"""Codes correcting any number of exact tandem duplications of length k plus one noisy one."""

from .analysis import asymptotic_rate, count_irreducible, count_rll, rate_table
from .channel import apply_nd, apply_td, classify_root_change, descendants, sample_channel
from .guard import GuardParams, guard_decode
from .indel import DecodeError
from .ndcode import Codebook, CodeParams, DecodeTrace, build_codebook, nd_decode, nd_membership
from .words import format_word, is_irreducible, mu, parse_word, phi, phi_inv, root

__all__ = [
    "Codebook",
    "CodeParams",
    "DecodeError",
    "DecodeTrace",
    "GuardParams",
    "apply_nd",
    "apply_td",
    "asymptotic_rate",
    "build_codebook",
    "classify_root_change",
    "count_irreducible",
    "count_rll",
    "descendants",
    "format_word",
    "guard_decode",
    "is_irreducible",
    "mu",
    "nd_decode",
    "nd_membership",
    "parse_word",
    "phi",
    "phi_inv",
    "rate_table",
    "root",
    "sample_channel",
]
