"""Exact arithmetic on monomial ideals.

A monomial is represented by its exponent vector, a tuple of non-negative
ints whose length equals the ring dimension.  A monomial ideal is stored as
the antichain of its minimal generators, sorted by total degree and then
lexicographically descending, so equal ideals are equal values and every
serialization is deterministic.

The coefficient field never appears anywhere: for monomial ideals, nothing
computed in this package depends on it.

All values are immutable and all operations are pure functions, so results
can be shared across workers and cached freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidInput

# Desk-scale guards: box and hull enumerations are exponential in the
# dimension, so oversized inputs are rejected instead of degrading silently.
MAX_DIMENSION = 6
MAX_INPUT_EXPONENT = 12

ExponentVector = tuple  # tuple[int, ...] of length ring.dimension


@dataclass(frozen=True)
class RingContext:
    """Ambient polynomial ring, identified by its ordered variable names."""

    variable_names: tuple[str, ...]

    def __post_init__(self) -> None:
        names = tuple(self.variable_names)
        object.__setattr__(self, "variable_names", names)
        if not 1 <= len(names) <= MAX_DIMENSION:
            raise InvalidInput(
                f"ring needs between 1 and {MAX_DIMENSION} variables, got {len(names)}"
            )
        if len(set(names)) != len(names):
            raise InvalidInput("variable names must be distinct")
        for name in names:
            ok = name and (name[0].isalpha() or name[0] == "_")
            ok = ok and all(c.isalnum() or c == "_" for c in name)
            if not ok:
                raise InvalidInput(f"invalid variable name {name!r}")

    @property
    def dimension(self) -> int:
        return len(self.variable_names)

    def index_of(self, name: str) -> int:
        try:
            return self.variable_names.index(name)
        except ValueError:
            raise InvalidInput(f"unknown variable {name!r}") from None


def monomial_key(m: Sequence[int]):
    """Canonical generator order: total degree ascending, then lex descending."""
    return (sum(m), tuple(-e for e in m))


def divides(a: Sequence[int], m: Sequence[int]) -> bool:
    """True when x^a divides x^m, i.e. a <= m componentwise."""
    return all(x <= y for x, y in zip(a, m))


@dataclass(frozen=True)
class MonomialIdeal:
    """Ring plus the canonical antichain of minimal generators.

    The empty generator tuple encodes the zero ideal; the single all-zero
    vector encodes the unit ideal.  Build instances through `normalize`,
    which canonicalizes arbitrary generating sets.
    """

    ring: RingContext
    min_gens: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        gens = tuple(tuple(g) for g in self.min_gens)
        object.__setattr__(self, "min_gens", gens)
        d = self.ring.dimension
        for g in gens:
            if len(g) != d:
                raise InvalidInput(f"generator {g} has length {len(g)}, expected {d}")
            if any(not isinstance(e, int) or e < 0 for e in g):
                raise InvalidInput(f"generator {g} needs non-negative integer entries")

    def is_zero(self) -> bool:
        return not self.min_gens

    def is_unit(self) -> bool:
        return len(self.min_gens) == 1 and not any(self.min_gens[0])

    def is_proper_nonzero(self) -> bool:
        return bool(self.min_gens) and not self.is_unit()

    def max_exponents(self) -> tuple[int, ...]:
        """Componentwise max over the generators (the generator bounding box)."""
        if not self.min_gens:
            return (0,) * self.ring.dimension
        return tuple(
            max(g[i] for g in self.min_gens) for i in range(self.ring.dimension)
        )


def zero_ideal(ring: RingContext) -> MonomialIdeal:
    return MonomialIdeal(ring, ())


def unit_ideal(ring: RingContext) -> MonomialIdeal:
    return MonomialIdeal(ring, ((0,) * ring.dimension,))


def check_vector(ring: RingContext, m: Iterable[int]) -> tuple[int, ...]:
    """Validate an exponent vector against the ring; returns it as a tuple."""
    m = tuple(m)
    if len(m) != ring.dimension:
        raise InvalidInput(f"vector {m} has length {len(m)}, expected {ring.dimension}")
    if any(not isinstance(e, int) or e < 0 for e in m):
        raise InvalidInput(f"vector {m} needs non-negative integer entries")
    return m


def _same_ring(J: MonomialIdeal, K: MonomialIdeal) -> None:
    if J.ring != K.ring:
        raise InvalidInput("ideals live in different rings")


def normalize(gens: Iterable[Sequence[int]], ring: RingContext) -> MonomialIdeal:
    """Minimal generators of the ideal generated by `gens`, canonically sorted.

    Keeps the componentwise-minimal vectors (an antichain) and is idempotent.
    The empty input yields the zero ideal; a zero vector yields the unit ideal.
    """
    seen = {check_vector(ring, g) for g in gens}
    mins: list[tuple[int, ...]] = []
    for g in sorted(seen, key=monomial_key):
        # accepted vectors have strictly smaller degree or are incomparable,
        # so a single divisibility scan against them suffices
        if not any(divides(h, g) for h in mins):
            mins.append(g)
    return MonomialIdeal(ring, tuple(mins))


def contains_monomial(J: MonomialIdeal, m: Iterable[int]) -> bool:
    """True iff some minimal generator divides x^m."""
    m = check_vector(J.ring, m)
    return any(divides(g, m) for g in J.min_gens)


def contains_ideal(J: MonomialIdeal, K: MonomialIdeal) -> bool:
    """J contains K, i.e. every generator of K is a member of J."""
    _same_ring(J, K)
    return all(contains_monomial(J, g) for g in K.min_gens)


def equals(J: MonomialIdeal, K: MonomialIdeal) -> bool:
    """Set equality of canonical generators (same ring required)."""
    _same_ring(J, K)
    return J.min_gens == K.min_gens


def ideal_sum(J: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    _same_ring(J, K)
    return normalize(J.min_gens + K.min_gens, J.ring)


def ideal_product(J: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    _same_ring(J, K)
    return normalize(
        (tuple(a + b for a, b in zip(g, h)) for g in J.min_gens for h in K.min_gens),
        J.ring,
    )


@lru_cache(maxsize=None)
def ideal_power(J: MonomialIdeal, n: int) -> MonomialIdeal:
    """J^n, normalized at every step.  n = 0 yields the unit ideal."""
    if not isinstance(n, int) or n < 0:
        raise InvalidInput("power must be a non-negative integer")
    if n == 0:
        return unit_ideal(J.ring)
    if n == 1:
        return J
    return ideal_product(ideal_power(J, n - 1), J)


def ideal_intersection(J: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise componentwise max (lcm) of generators."""
    _same_ring(J, K)
    return normalize(
        (tuple(max(a, b) for a, b in zip(g, h)) for g in J.min_gens for h in K.min_gens),
        J.ring,
    )


def colon(J: MonomialIdeal, m: Iterable[int]) -> MonomialIdeal:
    """(J : x^m), generated by the truncated differences g - m."""
    m = check_vector(J.ring, m)
    return normalize(
        (tuple(max(e - c, 0) for e, c in zip(g, m)) for g in J.min_gens), J.ring
    )


def saturate(J: MonomialIdeal, var_indexes: Iterable[int]) -> MonomialIdeal:
    """(J : s^infinity) for s the product of the named variables.

    Equals the contraction of the extension of J to the localization
    inverting those variables; for monomial ideals that is just zeroing out
    the chosen coordinates of every generator.  Indexes are 0-based.
    """
    idxs = sorted(set(var_indexes))
    if not idxs:
        raise InvalidInput("saturation needs at least one variable")
    if idxs[0] < 0 or idxs[-1] >= J.ring.dimension:
        raise InvalidInput("variable index out of range")
    drop = set(idxs)
    return normalize(
        (tuple(0 if i in drop else e for i, e in enumerate(g)) for g in J.min_gens),
        J.ring,
    )


def contains_in_power(J: MonomialIdeal, m: Iterable[int], t: int) -> bool:
    """Membership of x^m in J^t, decided without materializing J^t.

    Searches for t generators (with repetition) whose exponent sum divides m.
    This is raw-power membership expressed on the generators only; it never
    consults any polyhedral data, so it can serve as the independent side of
    closure cross-checks.
    """
    m = check_vector(J.ring, m)
    if not isinstance(t, int):
        raise InvalidInput("power must be an integer")
    if t <= 0:
        return True
    if J.is_zero():
        return False
    if J.is_unit():
        return True
    gens = sorted(J.min_gens, key=lambda g: -sum(g))
    n_gens = len(gens)
    min_deg_from = [0] * (n_gens + 1)
    for i in range(n_gens - 1, -1, -1):
        deg = sum(gens[i])
        min_deg_from[i] = deg if i == n_gens - 1 else min(deg, min_deg_from[i + 1])
    memo: dict[tuple[int, tuple[int, ...], int], bool] = {}

    def search(i: int, rem: tuple[int, ...], k: int) -> bool:
        if k == 0:
            return True
        if i == n_gens or min_deg_from[i] * k > sum(rem):
            return False
        key = (i, rem, k)
        cached = memo.get(key)
        if cached is not None:
            return cached
        g = gens[i]
        cmax = k
        for c_rem, c_g in zip(rem, g):
            if c_g:
                cmax = min(cmax, c_rem // c_g)
        result = False
        for c in range(cmax, -1, -1):
            nxt = tuple(r - c * e for r, e in zip(rem, g))
            if search(i + 1, nxt, k - c):
                result = True
                break
        memo[key] = result
        return result

    return search(0, m, t)
