"""Exact computations in U_q^+(so_2n+1): shuffle representation, PBW bases,
the elements Phi^S(k,m), and the classification of right coideal subalgebras
containing the coradical."""
from .classifier import (
    RTSets,
    SpanOracle,
    build_rt,
    describe,
    enumerate_subalgebras,
    generators,
    lattice,
    root_sequence_of,
)
from .coefficients import (
    Bicharacter,
    LaurentScalar,
    bicharacter_from_json,
    default_bicharacter,
    multiparameter_bicharacter,
)
from .pbw import height, leading_term, pbw_decompose, projection_pi, u_bracket
from .phi import (
    ColoredScheme,
    extract_phi,
    is_black_regular,
    is_regular,
    is_white_regular,
    phi,
    theta_of_uskm,
)
from .shuffle import (
    ShuffleElement,
    hopf_coproduct,
    partial_derivative,
    power,
    shuffle_product,
    skew_bracket,
)

__version__ = "0.1.0"

__all__ = [
    "Bicharacter",
    "ColoredScheme",
    "LaurentScalar",
    "RTSets",
    "ShuffleElement",
    "SpanOracle",
    "bicharacter_from_json",
    "build_rt",
    "default_bicharacter",
    "describe",
    "enumerate_subalgebras",
    "extract_phi",
    "generators",
    "height",
    "hopf_coproduct",
    "is_black_regular",
    "is_regular",
    "is_white_regular",
    "lattice",
    "leading_term",
    "multiparameter_bicharacter",
    "partial_derivative",
    "pbw_decompose",
    "phi",
    "power",
    "projection_pi",
    "root_sequence_of",
    "shuffle_product",
    "skew_bracket",
    "theta_of_uskm",
    "u_bracket",
]
