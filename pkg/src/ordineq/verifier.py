"""Independent verification of mediated profiles.

This module is the project's ground truth: it never trusts the solver,
recomputes every oracle from scratch, and for partial orders additionally
cross-checks the closure oracle against direct enumeration of upward-closed
0/1 vectors whenever the outcome set is small enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .equilibrium import (
    Violation,
    _deviation_gain_coeffs,
    separation_oracle_dist,
    separation_oracle_partial,
)
from .errors import UnsupportedSpace
from .games import (
    DistributionOrder,
    FiniteTypes,
    GameForm,
    MediatedProfile,
    PartialOrder,
    PreferenceCnf,
    Profile,
    TotalOrder,
    TypeSpaceSpec,
    opponents_profiles_of,
    outcome_distribution,
    validate_profile,
)
from .typespaces import enumerate_extreme_types

ZERO = Fraction(0)
ONE = Fraction(1)

#: Up to this many outcomes the partial-order check is double-checked by
#: enumerating every upward-closed 0/1 vector.
ENUM_CROSS_CHECK_LIMIT = 12


@dataclass(frozen=True)
class VerifyReport:
    violation: Optional[Violation]  # None = robust equilibrium

    @property
    def is_equilibrium(self) -> bool:
        return self.violation is None


def stochastic_dominance(
    order: TotalOrder, d1: Mapping[str, Fraction], d2: Mapping[str, Fraction]
) -> bool:
    """d1 dominates d2: every upper-set prefix of the order gets at least as
    much mass under d1 as under d2."""
    acc1 = acc2 = ZERO
    for o in order.order:
        acc1 += d1.get(o, ZERO)
        acc2 += d2.get(o, ZERO)
        if acc1 < acc2:
            return False
    return True


def best_response_value(
    game: GameForm, i: int, u: Mapping[str, Fraction], q_i: Mapping[Profile, Fraction]
) -> Fraction:
    """Best expected utility player i can get against punishment q_{-i}."""
    best = None
    for a in game.action_sets[i]:
        val = sum(
            (w * u[game.outcome_of(game.insert(i, a, opp))] for opp, w in q_i.items()),
            ZERO,
        )
        if best is None or val > best:
            best = val
    return best


def averaging_dominates(
    game: GameForm,
    i: int,
    u: Mapping[str, Fraction],
    rounds: Sequence[Mapping[Profile, Fraction]],
) -> tuple[Fraction, Fraction, bool]:
    """Compare punishing with the round-average distribution vs. the original
    round sequence: (value vs average, mean of per-round values, lhs <= rhs).

    The comparison always holds: the best-response value is a maximum of
    linear functions of q, hence convex.
    """
    m = len(rounds)
    avg: dict[Profile, Fraction] = {}
    for q in rounds:
        for opp, w in q.items():
            avg[opp] = avg.get(opp, ZERO) + w
    avg = {opp: w / m for opp, w in avg.items()}
    lhs = best_response_value(game, i, u, avg)
    rhs = sum((best_response_value(game, i, u, q) for q in rounds), ZERO) / m
    return lhs, rhs, lhs <= rhs


def _deviation_distribution(
    game: GameForm, i: int, a: str, q_i: Mapping[Profile, Fraction]
) -> dict[str, Fraction]:
    d = {o: ZERO for o in game.outcomes}
    for opp, w in q_i.items():
        d[game.outcome_of(game.insert(i, a, opp))] += w
    return d


def verify(
    game: GameForm,
    spaces: Sequence[TypeSpaceSpec],
    profile: MediatedProfile,
) -> VerifyReport:
    """Check Definition-style robustness: for every player, deviation, and
    consistent type, the on-path payoff weakly beats the deviation payoff."""
    validate_profile(game, profile)
    on_path = outcome_distribution(game, profile.p)
    for i, spec in enumerate(spaces):
        q_i = {opp: profile.q[i].get(opp, ZERO) for opp in opponents_profiles_of(game, i)}
        for a in game.action_sets[i]:
            v = _check_one(game, spec, i, a, profile.p, q_i, on_path)
            if v is not None:
                return VerifyReport(v)
    return VerifyReport(None)


def _check_one(game, spec, i, a, p, q_i, on_path) -> Optional[Violation]:
    if isinstance(spec, FiniteTypes):
        gain = _deviation_gain_coeffs(game, i, a, p, q_i)
        for u in spec.types:
            g = sum((w * u[o] for o, w in gain.items() if w != 0), ZERO)
            if g > 0:
                return Violation(i, a, dict(u), g)
        return None
    if isinstance(spec, TotalOrder):
        dev = _deviation_distribution(game, i, a, q_i)
        if stochastic_dominance(spec, on_path, dev):
            return None
        # First failing prefix yields the threshold-type witness and gap.
        acc1 = acc2 = ZERO
        for o in spec.order:
            acc1 += on_path.get(o, ZERO)
            acc2 += dev.get(o, ZERO)
            if acc1 < acc2:
                top = set(spec.order[: spec.order.index(o) + 1])
                witness = {oo: (ONE if oo in top else ZERO) for oo in game.outcomes}
                return Violation(i, a, witness, acc2 - acc1)
        raise AssertionError("dominance check disagreed with prefix scan")
    if isinstance(spec, PartialOrder):
        res = separation_oracle_partial(game, spec, i, a, p, q_i)
        if len(game.outcomes) <= ENUM_CROSS_CHECK_LIMIT:
            brute = _brute_partial_max(game, spec, i, a, p, q_i)
            oracle_max = res.amount if res is not None else ZERO
            if brute != oracle_max:
                raise AssertionError(
                    f"closure oracle ({oracle_max}) disagrees with enumeration ({brute})"
                )
        return res
    if isinstance(spec, DistributionOrder):
        return separation_oracle_dist(game, spec, i, a, p, q_i)
    if isinstance(spec, PreferenceCnf):
        raise UnsupportedSpace(
            "verify does not support preference-CNF; use the hardness module's "
            "enumeration check (sound for violation only)"
        )
    raise UnsupportedSpace(type(spec).__name__)


def _brute_partial_max(game, spec, i, a, p, q_i) -> Fraction:
    gain = _deviation_gain_coeffs(game, i, a, p, q_i)
    best = ZERO  # the all-zero vector is always consistent
    for u in enumerate_extreme_types(spec, game.outcomes):
        g = sum((w * u[o] for o, w in gain.items() if w != 0), ZERO)
        if g > best:
            best = g
    return best
