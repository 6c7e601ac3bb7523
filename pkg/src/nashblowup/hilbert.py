"""Standard-monomial counting for monomial ideals and the local dimension
criteria it supports.

`graded_dim(a, n)` counts monomials of degree n outside a monomial ideal,
i.e. dim m^n/m^(n+1) for the quotient by the ideal.  For a hypersurface
through the origin the same count is obtained from the leading monomial of
the lowest homogeneous component, which gives a dimension-based
non-singularity test equivalent to the rank criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import multiindex as mi
from .polynomial import Polynomial, grevlex, make_point


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, stored by its minimal generating exponents."""

    s: int
    generators: tuple[mi.MultiIndex, ...]

    def __init__(self, s: int, generators):
        gens = sorted(set(tuple(g) for g in generators), key=mi.canonical_key)
        for g in gens:
            if len(g) != s:
                raise ValueError(f"generator {g} has wrong length for {s} variables")
            mi.validate(g)
        minimal = [g for g in gens if not any(h != g and mi.leq(h, g) for h in gens)]
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "generators", tuple(minimal))

    def contains_monomial(self, alpha: mi.MultiIndex) -> bool:
        return any(mi.leq(g, alpha) for g in self.generators)


def graded_dim(a: MonomialIdeal, n: int) -> int:
    """Number of degree-n monomials not in the ideal: dim m^n/m^(n+1)."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    return sum(1 for alpha in mi.iter_degree(a.s, n) if not a.contains_monomial(alpha))


def local_hilbert(F: Polynomial, n: int) -> int:
    """dim m^n/m^(n+1) of the local ring of V(F) at the origin.

    Equals the standard-monomial count of the principal monomial ideal
    generated by the grevlex leading monomial of the lowest homogeneous
    component of F; the count does not depend on the order used.
    """
    if F.is_zero():
        raise ValueError("F must be nonzero")
    origin = make_point([0] * F.num_vars)
    if F.evaluate(origin) != 0:
        raise ValueError("F(0) != 0: the origin is not on the hypersurface")
    f0 = F.lowest_homogeneous_component()
    lead = f0.leading_monomial(grevlex())
    return graded_dim(MonomialIdeal(F.num_vars, [lead]), n)


def nonsingular_by_dimension(F: Polynomial, n: int, point) -> bool:
    """Dimension criterion: p is non-singular iff
    dim m_p/m_p^(n+1) = C(n+s-1, s-1) - 1."""
    point = make_point(point)
    if F.evaluate(point) != 0:
        raise ValueError("point is not on the hypersurface")
    s = F.num_vars
    shifted = F.substitute({
        name: Polynomial.variable(F.ring, name) + Polynomial.constant(F.ring, c)
        for name, c in zip(F.ring, point)
    })
    total = sum(local_hilbert(shifted, k) for k in range(1, n + 1))
    return total == math.comb(n + s - 1, s - 1) - 1
