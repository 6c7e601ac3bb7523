"""Limits of higher tangent spaces at a singular point of a hypersurface.

The pipeline: build the ideal A = <F, u_J - t*Delta_J> in the ring
(t, x, u), eliminate t, intersect with Q[x, u], set x = 0, and read the
resulting ideal in the u variables.  Its zero set consists of the limits of
the row spaces of the order-n Jacobian along non-singular points approaching
the center; Plucker duality converts those into limits of the higher tangent
spaces themselves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .groebner import Ideal, buchberger, normal_form
from .hjac import SingularPointError, is_singular, maximal_minors
from .polynomial import (
    Polynomial,
    block_order,
    grevlex,
    lex,
    make_point,
)


class NotDecomposableError(ValueError):
    """The vector is not a valid Plucker vector of any subspace."""


def _fresh(name: str, taken) -> str:
    candidate = name
    k = 0
    while candidate in taken:
        candidate = f"{name}_{k}"
        k += 1
    return candidate


@dataclass(frozen=True)
class LimitIdealResult:
    F: Polynomial
    n: int
    center: tuple[Fraction, ...]
    lambda_size: int
    minors: tuple[tuple[tuple[int, ...], Polynomial], ...]
    generators: tuple[Polynomial, ...]  # in the u-ring
    order_used: str
    planes: tuple[tuple[tuple[Fraction, ...], ...], ...] | None

    @property
    def u_ring(self) -> tuple[str, ...]:
        if self.generators:
            return self.generators[0].ring
        return tuple(f"u_{k}" for k in range(1, self.lambda_size + 1))


def translate_to_origin(F: Polynomial, center) -> Polynomial:
    """F(x + center): moves the given point of interest to the origin."""
    center = make_point(center)
    return F.substitute({
        name: Polynomial.variable(F.ring, name) + Polynomial.constant(F.ring, c)
        for name, c in zip(F.ring, center)
    })


def _graph_ideal_data(F: Polynomial, n: int, center):
    center = make_point(center)
    if F.evaluate(center) != 0:
        raise ValueError("center is not on the hypersurface")
    if not is_singular(F, n, center):
        raise SingularPointError("limits of higher tangent spaces are computed at singular centers")
    shifted = translate_to_origin(F, center)
    minors = maximal_minors(shifted, n)
    lam = len(minors)
    tname = _fresh("t", F.ring)
    unames = tuple(_fresh(f"u_{k}", F.ring) for k in range(1, lam + 1))
    ring_a = (tname,) + F.ring + unames
    t = Polynomial.variable(ring_a, tname)
    gens = [shifted.to_ring(ring_a)]
    for (_, delta), uname in zip(minors, unames):
        gens.append(Polynomial.variable(ring_a, uname) - t * delta.to_ring(ring_a))
    return center, shifted, minors, ring_a, tname, unames, gens


def build_graph_ideal(F: Polynomial, n: int, center) -> Ideal:
    """A = <F(x+center), u_J - t*Delta_J(x+center)> in the ring (t, x, u)."""
    _, _, _, ring_a, _, _, gens = _graph_ideal_data(F, n, center)
    return Ideal(ring_a, gens)


def limit_ideal(
    F: Polynomial,
    n: int,
    center,
    style: str = "block",
    max_pairs: int | None = None,
    max_reductions: int | None = None,
) -> LimitIdealResult:
    """Eliminate t from A, restrict to Q[x, u], set x = 0, and return the
    limit-space ideal in the u variables (as a reduced basis)."""
    center, shifted, minors, ring_a, tname, unames, gens = _graph_ideal_data(F, n, center)
    if style == "block":
        order = block_order(
            ((tname,), grevlex()),
            (tuple(F.ring), grevlex()),
            (unames, grevlex()),
        )
    elif style == "lex":
        order = lex(*ring_a)
    else:
        raise ValueError(f"unknown elimination style {style!r}")
    basis = buchberger(gens, order, ring_a, max_pairs=max_pairs, max_reductions=max_reductions)

    t_idx = ring_a.index(tname)
    x_idx = [ring_a.index(v) for v in F.ring]
    zero_x = {v: Polynomial.zero(ring_a) for v in F.ring}
    projected: list[Polynomial] = []
    for g in basis:
        if any(m[t_idx] for m in g.terms):
            continue
        h = g.substitute(zero_x)
        if h.is_zero():
            continue
        projected.append(h.to_ring(unames))
    reduced = buchberger(projected, grevlex(), unames) if projected else []
    planes = describe_planes(reduced, len(unames))
    return LimitIdealResult(
        F=F,
        n=n,
        center=center,
        lambda_size=len(minors),
        minors=tuple(minors),
        generators=tuple(reduced),
        order_used=style,
        planes=planes,
    )


def substitute_minor_variables(g: Polynomial, result: LimitIdealResult) -> Polynomial:
    """Map u_J -> t * Delta_J(x + center) inside g; the result lives in the
    ring (t, x)."""
    f_ring = result.F.ring
    tname = _fresh("t", f_ring)
    ring_xt = (tname,) + f_ring
    t = Polynomial.variable(ring_xt, tname)
    u_ring = g.ring
    images = {}
    for uname, (_, delta) in zip(result.u_ring, result.minors):
        if uname in u_ring:
            images[uname] = t * delta.to_ring(ring_xt)
    for name in f_ring:
        if name in u_ring:
            images[name] = Polynomial.variable(ring_xt, name)
    out = Polynomial.zero(ring_xt)
    for mono, coeff in g.terms.items():
        term = Polynomial.constant(ring_xt, coeff)
        for name, e in zip(u_ring, mono):
            if e:
                term = term * images[name] ** e
        out = out + term
    return out


def _shifted_F_in_xt(result: LimitIdealResult) -> Polynomial:
    f_ring = result.F.ring
    tname = _fresh("t", f_ring)
    ring_xt = (tname,) + f_ring
    return translate_to_origin(result.F, result.center).to_ring(ring_xt)


def containment_oracle(result: LimitIdealResult) -> bool:
    """Cheap one-directional check that each reported generator really comes
    from the elimination ideal: substitute u_J -> t*Delta_J, reduce modulo
    the (translated) hypersurface equation, and demand the result vanish at
    x = 0.  A constant obstruction (a generator not even in A + <x>) fails.
    """
    if not result.generators:
        return True
    Ft = _shifted_F_in_xt(result)
    f_ring = result.F.ring
    for g in result.generators:
        image = substitute_minor_variables(g, result)
        reduced = normal_form(image, [Ft], grevlex())
        at_zero = reduced.substitute({v: Polynomial.zero(reduced.ring) for v in f_ring})
        if not at_zero.is_zero():
            return False
    return True


def elimination_stage_oracle(result: LimitIdealResult, xu_generators) -> bool:
    """Strict containment check for basis elements of A intersected with
    Q[x, u] (before x is set to 0): after u_J -> t*Delta_J each must reduce
    to 0 modulo the hypersurface equation alone."""
    Ft = _shifted_F_in_xt(result)
    for g in xu_generators:
        image = substitute_minor_variables(g, result)
        if not normal_form(image, [Ft], grevlex()).is_zero():
            return False
    return True


# -- Plucker coordinates -------------------------------------------------------


def _antisymmetric_lookup(v, index_of: dict, idx: tuple[int, ...]) -> Fraction:
    if len(set(idx)) != len(idx):
        return Fraction(0)
    order = sorted(range(len(idx)), key=lambda i: idx[i])
    sorted_idx = tuple(idx[i] for i in order)
    inversions = sum(
        1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if order[a] > order[b]
    )
    value = v[index_of[sorted_idx]]
    return -value if inversions % 2 else value


def pluecker_coordinates(basis: list[list[Fraction]]) -> list[Fraction]:
    """All maximal minors of the matrix with the given rows, in ascending
    lexicographic order of the column tuple."""
    m = len(basis)
    d = len(basis[0])
    out = []
    for J in combinations(range(d), m):
        rows = [[Fraction(basis[i][j]) for j in J] for i in range(m)]
        out.append(_det_fraction(rows))
    return out


def _det_fraction(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    a = [row[:] for row in rows]
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        inv = Fraction(1) / a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] * inv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det


def pluecker_reconstruct(v, m: int, ambient_dim: int) -> list[list[Fraction]]:
    """Recover a basis of the m-plane with Plucker coordinates v.

    v is indexed by the C(ambient_dim, m) ascending index tuples.  Raises
    NotDecomposableError when v is zero or fails the decomposability check
    (the reconstructed plane must reproduce v up to a scalar).
    """
    v = [Fraction(x) for x in v]
    tuples = list(combinations(range(ambient_dim), m))
    if len(v) != len(tuples):
        raise ValueError(f"expected {len(tuples)} coordinates, got {len(v)}")
    index_of = {J: k for k, J in enumerate(tuples)}
    pivot = next((J for J in tuples if v[index_of[J]]), None)
    if pivot is None:
        raise NotDecomposableError("the zero vector is not a Plucker vector")
    basis = []
    for slot in range(m):
        row = []
        for c in range(ambient_dim):
            idx = pivot[:slot] + (c,) + pivot[slot + 1:]
            row.append(_antisymmetric_lookup(v, index_of, idx))
        basis.append(row)
    if linalg.rank(basis) != m:
        raise NotDecomposableError("reconstructed rows are dependent")
    recovered = pluecker_coordinates(basis)
    scale = None
    for a, b in zip(recovered, v):
        if (a == 0) != (b == 0):
            raise NotDecomposableError("vector fails the decomposability check")
        if a:
            ratio = a / b
            if scale is None:
                scale = ratio
            elif ratio != scale:
                raise NotDecomposableError("vector fails the decomposability check")
    return basis


def annihilator(basis) -> list[list[Fraction]]:
    """Basis of {w : <w, b> = 0 for every input vector b}."""
    rows = [[Fraction(x) for x in b] for b in basis]
    if not rows:
        raise ValueError("empty input basis")
    if linalg.rank(rows) != len(rows):
        raise ValueError("input vectors are linearly dependent")
    return linalg.kernel_basis(rows, width=len(rows[0]))


# -- zero-set reporting --------------------------------------------------------


def _rational_sqrt(c: Fraction) -> Fraction | None:
    if c < 0:
        return None
    num = math.isqrt(c.numerator)
    den = math.isqrt(c.denominator)
    if num * num == c.numerator and den * den == c.denominator:
        return Fraction(num, den)
    return None


def _linear_row(g: Polynomial) -> list[Fraction]:
    row = [Fraction(0)] * g.num_vars
    for mono, coeff in g.terms.items():
        i = next(k for k, e in enumerate(mono) if e)
        row[i] = coeff
    return row


def _substitution_from_rows(ring, rows):
    """Solved linear system as {pivot variable -> polynomial in free vars}."""
    R, pivots = linalg.rref(rows)
    subs = {}
    for r, p in enumerate(pivots):
        expr = Polynomial.zero(ring)
        for j in range(p + 1, len(ring)):
            if R[r][j]:
                expr = expr - Polynomial.variable(ring, ring[j]).scalar_mul(R[r][j])
        subs[ring[p]] = expr
    return subs, pivots


def _solve_branches(ring, gens, rows, out, seen, depth=0):
    if depth > 64:
        raise RecursionError("plane description branched too deeply")
    while True:
        subs, _ = _substitution_from_rows(ring, rows) if rows else ({}, [])
        current = []
        for g in gens:
            h = g.substitute(subs) if subs else g
            if h.is_zero():
                continue
            if h.is_constant():
                return  # inconsistent branch
            current.append(h)
        # linear generators become rows immediately
        linear = [g for g in current if g.total_degree() == 1]
        if linear:
            rows = rows + [_linear_row(g) for g in linear]
            gens = [g for g in current if g.total_degree() != 1]
            continue
        gens = current
        # pure powers of a single variable force that variable to zero
        forced = None
        for g in gens:
            if len(g.terms) == 1:
                mono = next(iter(g.terms))
                support = [i for i, e in enumerate(mono) if e]
                if len(support) == 1:
                    forced = support[0]
                    break
        if forced is not None:
            row = [Fraction(0)] * len(ring)
            row[forced] = Fraction(1)
            rows = rows + [row]
            continue
        break

    if not gens:
        if rows:
            basis = linalg.kernel_basis(rows, width=len(ring))
        else:
            basis = [[Fraction(i == j) for j in range(len(ring))] for i in range(len(ring))]
        canonical = tuple(tuple(v) for v in linalg.rref(basis)[0]) if basis else ()
        if canonical not in seen:
            seen.add(canonical)
            out.append([list(v) for v in canonical])
        return

    g = gens[0]
    rest = gens[1:]
    if len(g.terms) == 1:
        # a product of variables vanishes: branch on each factor
        mono = next(iter(g.terms))
        for i, e in enumerate(mono):
            if e:
                row = [Fraction(0)] * len(ring)
                row[i] = Fraction(1)
                _solve_branches(ring, rest, rows + [row], out, seen, depth + 1)
        return
    if len(g.terms) == 2:
        (m1, c1), (m2, c2) = g.terms.items()
        common = tuple(min(a, b) for a, b in zip(m1, m2))
        if any(common):
            # pull out the shared monomial factor and branch
            for i, e in enumerate(common):
                if e:
                    row = [Fraction(0)] * len(ring)
                    row[i] = Fraction(1)
                    _solve_branches(ring, rest, rows + [row], out, seen, depth + 1)
            quotient = Polynomial(g.ring, {
                tuple(a - c for a, c in zip(m1, common)): c1,
                tuple(a - c for a, c in zip(m2, common)): c2,
            })
            _solve_branches(ring, [quotient] + rest, rows, out, seen, depth + 1)
            return
        s1 = [i for i, e in enumerate(m1) if e]
        s2 = [i for i, e in enumerate(m2) if e]
        if len(s1) == 1 and len(s2) == 1 and m1[s1[0]] == 2 and m2[s2[0]] == 2:
            # c1*u_i^2 + c2*u_j^2: split when -c2/c1 is a rational square
            root = _rational_sqrt(-c2 / c1)
            if root is not None:
                for sgn in (1, -1):
                    row = [Fraction(0)] * len(ring)
                    row[s1[0]] = Fraction(1)
                    row[s2[0]] = sgn * root
                    _solve_branches(ring, rest, rows + [row], out, seen, depth + 1)
                return
    raise _Unsupported


class _Unsupported(Exception):
    pass


def describe_planes(generators, num_u: int):
    """Describe the zero set of an ideal in the u variables as a union of
    linear subspaces, when the generators fit the monomial / binomial /
    binomial-quadric patterns.  Returns a tuple of subspace bases (maximal
    under inclusion), or None when the patterns do not apply."""
    if not generators:
        return None
    ring = generators[0].ring
    out: list = []
    seen: set = set()
    try:
        _solve_branches(ring, list(generators), [], out, seen)
    except (_Unsupported, RecursionError):
        return None
    # keep only subspaces maximal under inclusion (equal ones were deduped)
    def contains(big, small):
        if not small:
            return True
        if not big:
            return False
        return linalg.rank(big) == linalg.rank(big + small)

    result = []
    for i, p in enumerate(out):
        strictly_inside = any(
            j != i and contains(q, p) and not contains(p, q) for j, q in enumerate(out)
        )
        if not strictly_inside:
            result.append(tuple(tuple(v) for v in p))
    return tuple(result)
