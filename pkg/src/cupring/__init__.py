"""Resonance varieties, determinantal ideals and Kähler screens from cup-product data.

Exact arithmetic over Q throughout.  Main entry points:

* :func:`build_delta`, :func:`resonance_ideal`, :func:`membership`, :func:`r1_is_proper`
* :func:`cup_image_dim`, :func:`is_isotropic`, :func:`is_one_isotropic`, :func:`extend_isotropic`
* :func:`cup_from_threeform`, :func:`prop51_check`
* :func:`kahler_screen`, :func:`threemanifold_kahler_screen`
"""

__version__ = "0.1.0"

from .polynomial import Polynomial, poly_is_zero
from .linalg import QMatrix, kernel_basis, matrix_rank
from .linforms import IdealGens, LinFormMatrix, NotSkewSymmetricError, determinant, evaluate, minors, pfaffian
from .resonance import (CupData, ProperResult, ResonanceReport, build_delta, change_of_basis,
                        membership, r1_is_proper, resonance_ideal)
from .isotropy import Subspace, cup_image_dim, extend_isotropic, is_isotropic, is_one_isotropic
from .threefold import Prop51Report, ThreeForm, change_of_basis_threeform, cup_from_threeform, prop51_check
from .screen import Finding, OutOfScopeError, Verdict, kahler_screen, threemanifold_kahler_screen
from .fileformat import ParseError, parse_input, serialize
from .corpus import CORPUS, CorpusEntry, corpus_get, corpus_names
