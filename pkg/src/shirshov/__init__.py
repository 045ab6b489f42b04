"""Composition checking and normal forms for Lie algebra presentations over ZZ and QQ.

The core pieces:

* :mod:`shirshov.words` - Lyndon-Shirshov words, bracketings, orders
* :mod:`shirshov.liepoly` - Lie polynomials in the NLSW basis
* :mod:`shirshov.gsb` - compositions, reduction, verification
* :mod:`shirshov.semigroup` - string rewriting and Knuth-Bendix completion
* :mod:`shirshov.kukin` - the Lie algebra attached to a semigroup
* :mod:`shirshov.drinfeld_kohno` - the Drinfeld-Kohno algebras
"""

from .drinfeld_kohno import dk_basis, dk_build, dk_check, dk_ranks, witt, witt_ranks
from .errors import (
    AlphabetError,
    BoundExceededError,
    IncompleteSystemError,
    NonUnitError,
    NotALSWError,
    NotLieError,
    PresentationSyntaxError,
    ShirshovError,
    UnverifiedBasisError,
    ZeroPolynomialError,
)
from .gsb import RelationSet, check_gsb, complete, ideal_member, irr_enumerate, make_relation, reduce
from .kukin import KukinContext, build_s1, lie_word_equal, verify_s1
from .liepoly import LiePoly, Ring, bracket, left_normed, lie_value
from .presentation import PresentationFile, parse_lie_expression, parse_presentation, resolve
from .semigroup import SgpPresentation, StringRS, knuth_bendix, orient, sgp_equal, sgp_normal_form
from .words import (
    Alphabet,
    Leaf,
    Node,
    alsw_factorization,
    compare_deglex,
    compare_lex,
    is_alsw,
    is_nlsw,
    special_bracketing,
    standard_bracketing,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetError",
    "BoundExceededError",
    "IncompleteSystemError",
    "KukinContext",
    "Leaf",
    "LiePoly",
    "Node",
    "NonUnitError",
    "NotALSWError",
    "NotLieError",
    "PresentationFile",
    "PresentationSyntaxError",
    "RelationSet",
    "Ring",
    "SgpPresentation",
    "ShirshovError",
    "StringRS",
    "UnverifiedBasisError",
    "ZeroPolynomialError",
    "alsw_factorization",
    "bracket",
    "build_s1",
    "check_gsb",
    "compare_deglex",
    "compare_lex",
    "complete",
    "dk_basis",
    "dk_build",
    "dk_check",
    "dk_ranks",
    "ideal_member",
    "irr_enumerate",
    "is_alsw",
    "is_nlsw",
    "knuth_bendix",
    "left_normed",
    "lie_value",
    "lie_word_equal",
    "make_relation",
    "orient",
    "parse_lie_expression",
    "parse_presentation",
    "reduce",
    "resolve",
    "sgp_equal",
    "sgp_normal_form",
    "special_bracketing",
    "standard_bracketing",
    "verify_s1",
    "witt",
    "witt_ranks",
]
