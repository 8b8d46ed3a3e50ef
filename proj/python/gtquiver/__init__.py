from ._core import (
    AlgebraElement,
    Error,
    InconsistentConstraints,
    InputError,
    IrreducibleWord,
    NonGenericWindowError,
    Tableau,
    UPoly,
    Window,
    alpha,
    canonical_rows,
    classify,
    drinfeld_polynomial,
    gamma,
    generator,
    gt_generator,
    hw_eigenvalue,
    orbit_equivalent,
    same_component,
    verify,
)

__all__ = [
    "AlgebraElement",
    "Error",
    "InconsistentConstraints",
    "InputError",
    "IrreducibleWord",
    "NonGenericWindowError",
    "Tableau",
    "UPoly",
    "Window",
    "alpha",
    "canonical_rows",
    "classify",
    "drinfeld_polynomial",
    "gamma",
    "generator",
    "gt_generator",
    "hw_eigenvalue",
    "orbit_equivalent",
    "same_component",
    "verify",
]
