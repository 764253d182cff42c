"""Exact polynomial algebra over QQ.

Univariate polynomials (gcd, Yun decomposition, gcd-free bases, resultants),
multivariate homogeneous forms (arithmetic, substitution, form gcd, mod-p
point counts), and dynamic evaluation over QQ[t]/(f) with context splitting.
"""

from ncsurf.polyring.unipoly import (
    UniPoly,
    gcd_uni,
    squarefree_decomposition,
    gcd_free_basis,
    resultant,
    resultant_x,
)
from ncsurf.polyring.homform import (
    HomForm,
    form_gcd,
    reduce_mod_p,
    count_projective_points,
)
from ncsurf.polyring.dyneval import (
    AlgebraicContext,
    SplitRequired,
    split_run,
    context_rank,
    dynamic_eval_solve,
    ORACLE_PRIMES,
)

__all__ = [
    "UniPoly",
    "gcd_uni",
    "squarefree_decomposition",
    "gcd_free_basis",
    "resultant",
    "resultant_x",
    "HomForm",
    "form_gcd",
    "reduce_mod_p",
    "count_projective_points",
    "AlgebraicContext",
    "SplitRequired",
    "split_run",
    "context_rank",
    "dynamic_eval_solve",
    "ORACLE_PRIMES",
]
