"""Euler characteristics and profinite commensurability of arithmetic spin groups."""

from ._core import (
    InvariantViolation,
    adelic_exact,
    adelic_float,
    bernoulli,
    chi,
    chi_factored,
    chi_record,
    chi_sign,
    compare,
    gen_bernoulli_mod4,
    genus_equal,
    hilbert_symbol,
    l2_profile,
    s_arithmetic_sign,
    sweep,
    verify,
    witt,
)

__all__ = [
    "InvariantViolation",
    "adelic_exact",
    "adelic_float",
    "bernoulli",
    "chi",
    "chi_factored",
    "chi_record",
    "chi_sign",
    "compare",
    "gen_bernoulli_mod4",
    "genus_equal",
    "hilbert_symbol",
    "l2_profile",
    "s_arithmetic_sign",
    "sweep",
    "verify",
    "witt",
]
