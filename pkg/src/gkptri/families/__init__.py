"""Named triangle families, their explicit formulas and identities."""
from .closed_forms import REGISTRY, closed_form_eval, cross_check, curious_identity_check
from .conjecture import conjecture_check, conjecture_scan
from .connection import (
    boros_moll_check,
    connection_matrix,
    connection_matrix_checks,
    connection_matrix_eigencheck,
    jacobi_identity_check,
)
from .named import (
    CLASSICS,
    FAMILIES,
    eulerian,
    eulerian_params,
    eulerian_rank1,
    family_params,
    family_triangle,
    narayana_e,
    narayana_rs,
    narayana_s,
    sectan_e,
    sectan_rs,
    sectan_s,
    stirling,
    stirling_params,
    stirling_rank1,
)
