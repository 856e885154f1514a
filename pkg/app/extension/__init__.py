from app.extension.denominator import (
    extended_eigen_polynomial,
    extension_degree,
    xi_factored,
    xi_polynomial,
)
from app.extension.duality import halfint_equivalence, krein_adler_dual
from app.extension.nodeless import check_nodeless
from app.extension.spec import ExtensionSpec, build_spec
from app.extension.system import (
    ExtendedSystem,
    added_bound_state,
    build_system,
    extended_norm,
    extended_potential,
    shifted_set,
)

__all__ = [
    "ExtendedSystem",
    "ExtensionSpec",
    "added_bound_state",
    "build_spec",
    "build_system",
    "check_nodeless",
    "extended_eigen_polynomial",
    "extended_norm",
    "extended_potential",
    "extension_degree",
    "halfint_equivalence",
    "krein_adler_dual",
    "shifted_set",
    "xi_factored",
    "xi_polynomial",
]
