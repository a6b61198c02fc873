"""Asymptotic associated primes of the closure filtration, and the
mechanical checks tying them to the Rees valuation centers.

The chain Ass(R / closure(I^n)) increases with n and its terminal value is
exactly the center set B*(I); stabilization is therefore detected against
that target rather than by plateau heuristics (a plateau can be temporary
in principle, the target cannot).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .core import MonomialIdeal, contains_in_power, equals, saturate
from .errors import InvalidInput, NotStabilized
from .newton import compute_np, integral_closure_power, np_contains
from .primes import MonomialPrime, associated_primes, minimal_primes
from .valuations import BStarSet, b_star

DEFAULT_CHAIN_CAP = 8
DEFAULT_LOCALIZATION_CAP = 4
DEFAULT_ORACLE_POWER_CAP = 12


@dataclass(frozen=True)
class AsymptoticReport:
    """Chain of Ass sets of closure powers up to stabilization."""

    ideal: MonomialIdeal
    chain: tuple[tuple[int, frozenset[MonomialPrime]], ...]
    stable_set: frozenset[MonomialPrime]
    stabilization_index: int
    b_star: BStarSet
    verdict_cor26: bool
    verdict_monotone: bool


@dataclass(frozen=True)
class LocalizationReport:
    """Per-power record of whether saturating the closure changes it."""

    ideal: MonomialIdeal
    s_vars: tuple[int, ...]
    admissible: bool
    per_n: tuple[tuple[int, bool], ...]

    def counter_witness(self) -> Optional[int]:
        for n, ok in self.per_n:
            if not ok:
                return n
        return None

    def holds(self) -> bool:
        """The localization statement, vacuous when S meets a center."""
        return not self.admissible or all(ok for _, ok in self.per_n)


def a_star(I: MonomialIdeal, n_cap: int = DEFAULT_CHAIN_CAP) -> AsymptoticReport:
    """Run Ass(R / closure(I^n)) for n = 1.. until it equals B*(I).

    Raises NotStabilized when the cap is hit first; that signals an
    undersized cap or an implementation bug, never a silent pass.
    """
    if not isinstance(n_cap, int) or n_cap < 1:
        raise InvalidInput("n_cap must be a positive integer")
    if not I.is_proper_nonzero():
        raise InvalidInput("asymptotic primes need a proper nonzero ideal")
    target = b_star(I).centers
    chain: list[tuple[int, frozenset[MonomialPrime]]] = []
    monotone = True
    previous: Optional[frozenset[MonomialPrime]] = None
    for n in range(1, n_cap + 1):
        ass_n = associated_primes(integral_closure_power(I, n))
        chain.append((n, ass_n))
        if previous is not None and not previous <= ass_n:
            monotone = False
        previous = ass_n
        if ass_n == target:
            return AsymptoticReport(
                ideal=I,
                chain=tuple(chain),
                stable_set=ass_n,
                stabilization_index=n,
                b_star=b_star(I),
                verdict_cor26=True,
                verdict_monotone=monotone,
            )
    raise NotStabilized(n_cap, chain)


def verify_centers_match(
    I: MonomialIdeal, n_cap: int = DEFAULT_CHAIN_CAP
) -> tuple[bool, AsymptoticReport]:
    """Stabilized Ass chain equals the Rees valuation centers, exactly."""
    report = a_star(I, n_cap)
    return report.verdict_cor26 and report.stable_set == report.b_star.centers, report


def verify_min_primes_contained(I: MonomialIdeal, n_cap: int = DEFAULT_CHAIN_CAP) -> bool:
    """Every minimal prime of I belongs to the stable associated-prime set."""
    return minimal_primes(I) <= a_star(I, n_cap).stable_set


def verify_localization(
    I: MonomialIdeal,
    s_var_indexes: Iterable[int],
    n_cap: int = DEFAULT_LOCALIZATION_CAP,
) -> LocalizationReport:
    """Check that saturating closure(I^n) at the chosen variables fixes it.

    Admissible means the variables avoid every valuation center (so the
    multiplicative set they generate misses all centers).  Inadmissible
    inputs are still processed, observationally: the same checks run, and a
    failing n is reported as a counter-witness instead of an error.
    """
    s_vars = tuple(sorted(set(s_var_indexes)))
    if not s_vars:
        raise InvalidInput("localization needs at least one variable")
    if s_vars[0] < 0 or s_vars[-1] >= I.ring.dimension:
        raise InvalidInput("variable index out of range")
    if not isinstance(n_cap, int) or n_cap < 1:
        raise InvalidInput("n_cap must be a positive integer")
    centers = b_star(I).centers
    admissible = all(set(s_vars).isdisjoint(c.vars) for c in centers)
    per_n = []
    for n in range(1, n_cap + 1):
        closure_n = integral_closure_power(I, n)
        per_n.append((n, equals(saturate(closure_n, s_vars), closure_n)))
    return LocalizationReport(I, s_vars, admissible, tuple(per_n))


def closure_oracle_discrepancies(
    I: MonomialIdeal,
    monomials: Sequence[tuple[int, ...]],
    n_values: Sequence[int] = (1, 2, 3),
    k_max: int = DEFAULT_ORACLE_POWER_CAP,
) -> list[tuple[tuple[int, ...], int]]:
    """Two-route closure membership on sample monomials.

    For each monomial m and dilation n, facet membership of m in n*NP(I)
    must agree with the raw-power route: some k <= k_max has x^{km} in
    I^{kn}.  Returns the disagreeing (m, n) pairs, empty when the routes
    agree everywhere.
    """
    np_ = compute_np(I)
    bad = []
    for m in monomials:
        for n in n_values:
            by_facets = np_contains(np_, m, n)
            by_powers = any(
                contains_in_power(I, tuple(k * e for e in m), k * n)
                for k in range(1, k_max + 1)
            )
            if by_facets != by_powers:
                bad.append((tuple(m), n))
    return bad
