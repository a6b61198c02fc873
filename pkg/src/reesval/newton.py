"""Newton polyhedron of a monomial ideal, and what its facets compute.

The polyhedron is conv(generator exponents) + the non-negative orthant.
Its facets are enumerated exactly: homogenize to a cone (generator points
at height one, orthant rays at height zero) and build the extreme rays of
the dual cone by incremental double description over the integers.  A dual
ray (a, c) with a != 0 is the facet a.x >= -c of the polyhedron; the ray
with a = 0 is the homogenization artifact "height >= 0" and is dropped.

Downstream of the facets: membership of rational points in any dilation,
integral closures of powers (all lattice points of the n-fold dilation),
and the asymptotic order function min_a (a.m / a-offset).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .core import (
    MonomialIdeal,
    RingContext,
    check_vector,
    contains_monomial,
    ideal_power,
    normalize,
)
from .errors import InvalidInput


@dataclass(frozen=True)
class FacetInequality:
    """Half-space a.x >= b with a primitive non-negative integer normal."""

    normal: tuple[int, ...]
    offset: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "normal", tuple(self.normal))
        if not self.normal or not any(self.normal):
            raise InvalidInput("facet normal must be nonzero")
        if any(a < 0 for a in self.normal):
            raise InvalidInput("facet normal must be non-negative")
        g = 0
        for a in self.normal:
            g = gcd(g, a)
        if g != 1:
            raise InvalidInput("facet normal must be primitive")
        if self.offset < 0:
            raise InvalidInput("facet offset must be non-negative")

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.normal) if a)

    def evaluate(self, m: Sequence[int]) -> int:
        return sum(a * e for a, e in zip(self.normal, m))

    def sort_key(self):
        return (len(self.support()), self.normal, self.offset)


@dataclass(frozen=True)
class NewtonPolyhedron:
    ring: RingContext
    facets: tuple[FacetInequality, ...]
    points: tuple[tuple[int, ...], ...]


def _primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for v in vec:
        g = gcd(g, v)
    return tuple(v // g for v in vec)


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def _dual_extreme_rays(points: Sequence[tuple[int, ...]], d: int) -> list[tuple[int, ...]]:
    """Extreme rays of {y : g.y >= 0, g a homogenized generator}.

    The constraint list is the d unit rays at height 0 followed by the
    generator points at height 1.  The first d+1 constraints form a
    triangular system, so the initial simplicial cone's rays are written
    down directly; every further constraint keeps the non-negative rays and
    inserts one combination per adjacent (positive, negative) pair, with
    the standard combinatorial adjacency test on tight sets.  All vectors
    stay integer and primitive.
    """
    dim = d + 1
    constraints: list[tuple[int, ...]] = [
        tuple(1 if j == i else 0 for j in range(d)) + (0,) for i in range(d)
    ]
    constraints += [tuple(p) + (1,) for p in points]

    p0 = points[0]
    rays: list[tuple[int, ...]] = [
        tuple(1 if j == i else 0 for j in range(d)) + (-p0[i],) for i in range(d)
    ]
    rays.append((0,) * d + (1,))

    def tight_mask(ray: tuple[int, ...], upto: int) -> int:
        mask = 0
        for k in range(upto):
            if _dot(constraints[k], ray) == 0:
                mask |= 1 << k
        return mask

    tight = [tight_mask(r, dim) for r in rays]

    for k in range(dim, len(constraints)):
        h = constraints[k]
        vals = [_dot(h, r) for r in rays]
        if all(v >= 0 for v in vals):
            for idx, v in enumerate(vals):
                if v == 0:
                    tight[idx] |= 1 << k
            continue
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        new_rays: list[tuple[int, ...]] = []
        seen: set[tuple[int, ...]] = set()
        for ip in pos:
            for im in neg:
                common = tight[ip] & tight[im]
                if any(
                    io not in (ip, im) and tight[io] & common == common
                    for io in range(len(rays))
                ):
                    continue  # not adjacent: a third ray is tight wherever both are
                combo = _primitive(
                    tuple(
                        vals[ip] * rays[im][j] - vals[im] * rays[ip][j]
                        for j in range(dim)
                    )
                )
                if combo not in seen:
                    seen.add(combo)
                    new_rays.append(combo)
        kept = [i for i, v in enumerate(vals) if v >= 0]
        rays = [rays[i] for i in kept] + new_rays
        tight = [
            tight[i] | ((1 << k) if vals[i] == 0 else 0) for i in kept
        ] + [tight_mask(r, k + 1) for r in new_rays]
    return rays


@lru_cache(maxsize=None)
def compute_np(I: MonomialIdeal) -> NewtonPolyhedron:
    """Irredundant facet description of conv(exponents of I) + orthant."""
    if not I.is_proper_nonzero():
        raise InvalidInput("Newton polyhedron needs a proper nonzero ideal")
    d = I.ring.dimension
    facets = []
    for ray in _dual_extreme_rays(I.min_gens, d):
        a, c = ray[:d], ray[d]
        if not any(a):
            continue
        # the recession cone is the orthant, so a negative entry or a
        # negative offset can only come from a bug upstream
        assert all(x >= 0 for x in a), f"facet normal {a} escaped the recession cone"
        assert c <= 0, f"facet offset {-c} is negative"
        facets.append(FacetInequality(a, -c))
    facets.sort(key=FacetInequality.sort_key)
    return NewtonPolyhedron(I.ring, tuple(facets), I.min_gens)


def _check_rational_point(ring: RingContext, q: Iterable) -> tuple[Fraction, ...]:
    point = tuple(Fraction(c) for c in q)
    if len(point) != ring.dimension:
        raise InvalidInput(
            f"point {point} has length {len(point)}, expected {ring.dimension}"
        )
    if any(c < 0 for c in point):
        raise InvalidInput("point coordinates must be non-negative")
    return point


def np_contains(np_: NewtonPolyhedron, q: Iterable, scale=1) -> bool:
    """Is q inside scale * NP?  Exact rational arithmetic throughout."""
    point = _check_rational_point(np_.ring, q)
    t = Fraction(scale)
    if t < 0:
        raise InvalidInput("scale must be non-negative")
    return all(_dot(f.normal, point) >= t * f.offset for f in np_.facets)


def _minimal_lattice_members(
    facets: Sequence[FacetInequality], bounds: Sequence[int], scale: int
) -> list[tuple[int, ...]]:
    """Minimal lattice points of scale*NP inside the box prod [0, bounds[i]].

    Depth-first over coordinates with two prunings: abandon a prefix when
    even the box-completion misses some facet, and stop descending once the
    zero-completion is already a member (everything below the prefix then
    dominates it, so the zero-completion is the only minimal candidate).
    """
    d = len(bounds)
    normals = [f.normal for f in facets]
    targets = [scale * f.offset for f in facets]
    nf = len(facets)
    # suffix_max[f][i] = max contribution of coordinates i.. to facet f
    suffix_max = [
        [sum(normals[f][j] * bounds[j] for j in range(i, d)) for i in range(d + 1)]
        for f in range(nf)
    ]
    out: list[tuple[int, ...]] = []

    def is_minimal(q: tuple[int, ...], dots: list[int]) -> bool:
        for j in range(d):
            if q[j] and all(dots[f] - normals[f][j] >= targets[f] for f in range(nf)):
                return False
        return True

    def walk(i: int, prefix: tuple[int, ...], dots: list[int]) -> None:
        if all(dots[f] >= targets[f] for f in range(nf)):
            q = prefix + (0,) * (d - i)
            if is_minimal(q, dots):
                out.append(q)
            return
        if i == d:
            return
        if any(dots[f] + suffix_max[f][i] < targets[f] for f in range(nf)):
            return
        col = [normals[f][i] for f in range(nf)]
        for v in range(bounds[i] + 1):
            walk(i + 1, prefix + (v,), [dots[f] + v * col[f] for f in range(nf)])

    walk(0, (), [0] * nf)
    return out


@lru_cache(maxsize=None)
def integral_closure_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """The monomial ideal of all lattice points of n * NP(I).

    Minimal generators are found inside the box prod [0, n*M_i] with M the
    componentwise generator maxima; any lattice point of the dilation that
    leaves the box dominates one inside it (see the repo README for the
    one-paragraph argument), so the scan is complete.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidInput("closure power must be a positive integer")
    np_ = compute_np(I)
    bounds = tuple(n * m for m in I.max_exponents())
    return normalize(_minimal_lattice_members(np_.facets, bounds, n), I.ring)


def vbar(I: MonomialIdeal, m: Iterable[int]) -> Fraction:
    """Asymptotic order of x^m along I: min over positive-offset facets of
    (a.m)/b.  The zero vector gives 0; a proper nonzero ideal always has a
    positive-offset facet (the origin lies outside the polyhedron), so the
    minimum is never over an empty set."""
    np_ = compute_np(I)
    m = check_vector(I.ring, m)
    values = [
        Fraction(f.evaluate(m), f.offset) for f in np_.facets if f.offset > 0
    ]
    assert values, "proper nonzero ideal must have a positive-offset facet"
    return min(values)


def samuel_order(J: MonomialIdeal, m: Iterable[int], t_max: int) -> int:
    """Largest t <= t_max with x^m in J^t; 0 when x^m is not even in J.

    Total on degenerate ideals: the unit ideal gives t_max, the zero ideal
    gives 0.  Callers bound the search themselves (membership is monotone
    decreasing in t, so the first failure stops the scan).
    """
    m = check_vector(J.ring, m)
    if not isinstance(t_max, int) or t_max < 1:
        raise InvalidInput("t_max must be a positive integer")
    best = 0
    for t in range(1, t_max + 1):
        if contains_monomial(ideal_power(J, t), m):
            best = t
        else:
            break
    return best
