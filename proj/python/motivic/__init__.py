"""Equivariant Grothendieck-ring calculator.

Classes cross the boundary as JSON strings in the same formats the ``motivic``
command-line tool reads and writes.
"""

from ._core import (
    A1Class,
    BudgetError,
    MotivicError,
    MuClass,
    ParseError,
    RealizationError,
    ValidationError,
    __version__,
    a1_lefschetz,
    a1_star,
    a1_unit,
    assoc_check,
    chi_c,
    chi_of_a1,
    e_polynomial,
    epsilon_push,
    forget_action,
    nearby_fiber,
    normalize,
    phi_generator,
    phi_measure,
    point_count_oracle,
    star,
    star_power,
    ts_check,
    validate_datum,
    vanishing_cycles,
)

__all__ = [
    "A1Class",
    "BudgetError",
    "MotivicError",
    "MuClass",
    "ParseError",
    "RealizationError",
    "ValidationError",
    "a1_lefschetz",
    "a1_star",
    "a1_unit",
    "assoc_check",
    "chi_c",
    "chi_of_a1",
    "e_polynomial",
    "epsilon_push",
    "forget_action",
    "nearby_fiber",
    "normalize",
    "phi_generator",
    "phi_measure",
    "point_count_oracle",
    "star",
    "star_power",
    "ts_check",
    "validate_datum",
    "vanishing_cycles",
]
