"""Oracle-versus-machinery agreement on genuine triangulations.

The brute-force allowable-chain computation and the Mayer-Vietoris
dimension assembly share nothing but the exact linear algebra underneath,
so agreement over full perversity bands on honest triangulations of the
same spaces checks both ends at once.
"""

from strathom.catalog import circle, torus7
from strathom.simplicial import (
    StratifiedComplex,
    ih_direct,
    product_complex,
    suspension,
)
from strathom.spaces import s2xt2_space, suspension_product_space
from strathom.stratified import ih_ct_dims, ih_space_dims


def test_suspension_of_torus_oracle_vs_model():
    st2 = suspension(torus7())
    model = suspension_product_space([1, 2, 1], [1])
    for p in range(-3, 5):
        assert ih_direct(st2, p) == ih_space_dims(model, p), p


def triangulated_transition():
    """S(T^2) x S^1 with its two singular circles flagged."""
    prod = product_complex(suspension(torus7()).complex, circle())
    sigma = [v for v in prod.vertices if v.split(",")[0] in ("N*", "S*")]
    return StratifiedComplex(prod, sigma, codim=3)


def test_transition_triangulation_oracle_vs_model():
    # the 4-dimensional transition of the running example, as an honest
    # 336-facet triangulation: the oracle must reproduce the whole
    # perversity sweep of the algebraic model, extremes included
    ct = triangulated_transition()
    sp = s2xt2_space()
    for q in range(-2, 4):
        assert ih_direct(ct, q) == ih_ct_dims(sp, q), q
