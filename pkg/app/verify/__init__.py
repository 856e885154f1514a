from app.verify.eigensolver import SpectrumReport, family_spectrum, schrodinger_spectrum
from app.verify.equivalence import verify_halfint_equivalence
from app.verify.identities import IdentityReport, verify_ddx_wronskian, verify_shape_invariance
from app.verify.isospectral import verify_isospectral
from app.verify.quadrature import check_norms, gram_matrix, quadrature_inner_product

__all__ = [
    "IdentityReport",
    "SpectrumReport",
    "check_norms",
    "family_spectrum",
    "gram_matrix",
    "quadrature_inner_product",
    "schrodinger_spectrum",
    "verify_ddx_wronskian",
    "verify_halfint_equivalence",
    "verify_isospectral",
    "verify_shape_invariance",
]
