"""Descent sets of oscillating tableaux, Sundaram's bijection and Roby's
growth diagrams, with exact checks of the associated character identities."""

from .growth import GrowthDiagram, backward_rule, descent_visualization, forward_rule, grow_row, roby
from .oscillating import (
    OscillatingTableau,
    descents_crystal_word,
    descents_oscillating,
    enumerate_oscillating,
    is_n_symplectic,
    tableau_to_word,
    weight,
    word_to_tableau,
)
from .partitions import Box, add_eps, conjugate, covers, has_even_columns, sub_eps
from .rs import descents_involution, descents_word, rs_insert_word, rs_involution
from .sundaram import coeff_a, count_c, is_n_symplectic_lr, sun, sun1, sun1_inverse, sun2, sun_inverse
from .symfunc import (
    LaurentPolynomial,
    fundamental_qsym,
    frobenius_via_descents,
    frobenius_via_lr,
    invariant_character,
    schur,
    symplectic_character,
)
from .tableaux import SkewTableau, column_delete, column_insert, row_insert

__version__ = "0.1.0"

__all__ = [
    "Box",
    "GrowthDiagram",
    "LaurentPolynomial",
    "OscillatingTableau",
    "SkewTableau",
    "add_eps",
    "backward_rule",
    "coeff_a",
    "column_delete",
    "column_insert",
    "conjugate",
    "count_c",
    "covers",
    "descent_visualization",
    "descents_crystal_word",
    "descents_involution",
    "descents_oscillating",
    "descents_word",
    "enumerate_oscillating",
    "forward_rule",
    "frobenius_via_descents",
    "frobenius_via_lr",
    "fundamental_qsym",
    "grow_row",
    "has_even_columns",
    "invariant_character",
    "is_n_symplectic",
    "is_n_symplectic_lr",
    "roby",
    "row_insert",
    "rs_insert_word",
    "rs_involution",
    "schur",
    "sub_eps",
    "sun",
    "sun1",
    "sun1_inverse",
    "sun2",
    "sun_inverse",
    "symplectic_character",
    "tableau_to_word",
    "weight",
    "word_to_tableau",
]
