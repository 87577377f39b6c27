"""Independent first-order-jet evaluation of the weighted conformal action.

Used as the oracle for the analytic operator assembly: exp(tX)^(-1) equals
1 - t X exactly over jets, so the weighted action

    F  |->  chi(a)^(-1) rep(m)^(-1) F(v),   g^(-1) nbar_x = nbar_v m a n

can be evaluated to first order with nothing but the Gelfand-Naimark
factorization over the jet ring.  The eps-slope of the result is the value
of the infinitesimal operator on F at the base point.
"""

from sbdo.scalars import Jet, Q
from sbdo.clifford import Multivector
from sbdo.conformal import gn_factorize, nbar_element


def dpi_via_jets(X, weight, rep, funcs, names, point):
    """Value of the infinitesimal weighted action on the vector-valued
    polynomial ``funcs`` (one Poly per target coordinate) at ``point``."""
    sig = X.sig
    g_inv = Multivector.scalar(sig, Jet(Q(1))) + X.map_scalars(lambda c: Jet(Q(0), -c))
    x0 = [Jet(Q(c)) for c in point]
    fac = gn_factorize(g_inv * nbar_element(sig, x0))
    r = fac.r
    assert r.val == 1
    chi_inv = Jet(Q(1), -2 * weight * r.eps)  # chi(a(r))^(-1) = r^(-2*weight)
    rep_inv = rep.group(fac.m.alpha())
    values = [f.eval(dict(zip(names, fac.v))) for f in funcs]
    out = rep_inv.apply(values)
    return [chi_inv * val for val in out]


def jet_slopes(vals):
    return [v.eps if isinstance(v, Jet) else 0 for v in vals]
