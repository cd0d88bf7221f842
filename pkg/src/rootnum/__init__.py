"""Exact local root numbers of multiplicative characters of unramified p-adic fields."""

from .characters import (
    MultiplicativeCharacter,
    VirtualCharacter,
    chi_alpha,
    parse_character,
    psi,
    tame_char,
    trivial_character,
)
from .cyclotomic import (
    CyclotomicNumber,
    GaloisElement,
    RootOfUnity,
    as_root_of_unity,
    complex_embedding,
    decompose_root,
    galois_apply,
    root_of_unity,
    sqrt_p,
    sqrt_pstar,
)
from .epsilon import (
    EpsilonValue,
    g_quadratic,
    iota,
    three_factor,
    verify_identity,
    w_closed,
    w_oracle,
    w_p_part,
    w_quadratic_2adic,
    w_star,
    w_virtual,
)
from .padic import (
    PadicElement,
    PrecisionError,
    UnramifiedField,
    hilbert_2adic_bruteforce,
    hilbert_qp,
    hilbert_tame_unram,
    make_field,
)

__version__ = "0.1.0"

__all__ = [
    "CyclotomicNumber",
    "EpsilonValue",
    "GaloisElement",
    "MultiplicativeCharacter",
    "PadicElement",
    "PrecisionError",
    "RootOfUnity",
    "UnramifiedField",
    "VirtualCharacter",
    "as_root_of_unity",
    "chi_alpha",
    "complex_embedding",
    "decompose_root",
    "g_quadratic",
    "galois_apply",
    "hilbert_2adic_bruteforce",
    "hilbert_qp",
    "hilbert_tame_unram",
    "iota",
    "make_field",
    "parse_character",
    "psi",
    "root_of_unity",
    "sqrt_p",
    "sqrt_pstar",
    "tame_char",
    "three_factor",
    "trivial_character",
    "verify_identity",
    "w_closed",
    "w_oracle",
    "w_p_part",
    "w_quadratic_2adic",
    "w_star",
    "w_virtual",
]
