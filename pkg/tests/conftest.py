"""Shared brute-force oracles for the property suites.

Every oracle here is deliberately independent of the implementation it
checks: vertex enumeration for LPs, subset enumeration for closures and
extreme types, and a direct type-by-type scan for equilibrium checking.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from ordineq.games import (
    GameForm,
    MediatedProfile,
    PartialOrder,
    TotalOrder,
    opponents_profiles_of,
    partial_order_closure,
    profiles_of,
)
from ordineq.linprog import (
    EQ,
    GE,
    LE,
    FEASIBLE,
    INFEASIBLE,
    MAX,
    MIN,
    LinearProgram,
    constraint as make_constraint,
)

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# Exact linear algebra


def solve_square_system(rows, rhs):
    """Solve A x = b exactly; return the unique solution or None if A is
    singular (no or infinitely many solutions)."""
    n = len(rhs)
    A = [list(r) + [v] for r, v in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return None
        A[col], A[piv] = A[piv], A[col]
        inv = ONE / A[col][col]
        A[col] = [v * inv for v in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [v - f * w for v, w in zip(A[r], A[col])]
    return tuple(A[r][n] for r in range(n))


# ---------------------------------------------------------------------------
# LP brute force by vertex enumeration (valid for box-bounded programs,
# where the feasible region is a polytope and hence has a vertex iff it is
# nonempty).


def lp_brute_force(lp: LinearProgram):
    """Return (status, best_value) by enumerating candidate vertices.

    Requires finite lower and upper bounds on every variable.
    """
    n = lp.num_vars
    assert lp.lower is not None and lp.upper is not None
    hyperplanes = []  # (coeffs, rhs) rows whose tightness can define a vertex
    for c in lp.constraints:
        hyperplanes.append((c.coeffs, c.rhs))
    for j in range(n):
        assert lp.lower[j] is not None and lp.upper[j] is not None
        unit = tuple(ONE if k == j else ZERO for k in range(n))
        hyperplanes.append((unit, lp.lower[j]))
        hyperplanes.append((unit, lp.upper[j]))

    def feasible(x):
        for c in lp.constraints:
            lhs = sum(a * v for a, v in zip(c.coeffs, x))
            if c.rel == LE and lhs > c.rhs:
                return False
            if c.rel == GE and lhs < c.rhs:
                return False
            if c.rel == EQ and lhs != c.rhs:
                return False
        return all(
            lp.lower[j] <= x[j] <= lp.upper[j] for j in range(n)
        )

    best = None
    found = False
    for combo in itertools.combinations(range(len(hyperplanes)), n):
        rows = [hyperplanes[k][0] for k in combo]
        rhs = [hyperplanes[k][1] for k in combo]
        x = solve_square_system(rows, rhs)
        if x is None or not feasible(x):
            continue
        found = True
        if lp.objective is not None:
            coeffs, direction = lp.objective
            val = sum(a * v for a, v in zip(coeffs, x))
            if best is None:
                best = val
            elif direction == MAX:
                best = max(best, val)
            else:
                best = min(best, val)
    status = FEASIBLE if found else INFEASIBLE
    return status, best


def random_boxed_lp(rng: random.Random, max_vars=3, max_rows=5) -> LinearProgram:
    """Small random LP with finite box bounds on every variable."""
    n = rng.randint(1, max_vars)
    m = rng.randint(0, max_rows)
    lower, upper = [], []
    for _ in range(n):
        a, b = sorted(rng.randint(-3, 3) for _ in range(2))
        lower.append(Fraction(a))
        upper.append(Fraction(b))
    constraints = []
    for _ in range(m):
        coeffs = tuple(Fraction(rng.randint(-3, 3)) for _ in range(n))
        rel = rng.choice((LE, GE, EQ))
        constraints.append(make_constraint(coeffs, rel, Fraction(rng.randint(-4, 4))))
    objective = None
    if rng.random() < 0.7:
        coeffs = tuple(Fraction(rng.randint(-3, 3)) for _ in range(n))
        objective = (coeffs, rng.choice((MAX, MIN)))
    return LinearProgram(
        num_vars=n,
        constraints=tuple(constraints),
        objective=objective,
        lower=tuple(lower),
        upper=tuple(upper),
    )


# ---------------------------------------------------------------------------
# Closure brute force


def closure_brute_force(items, values, implications):
    """Max-value implication-closed subset by enumerating all subsets."""
    index = {it: k for k, it in enumerate(items)}
    n = len(items)
    best_set, best_val = frozenset(), ZERO
    for mask in range(1 << n):
        ok = True
        for a, b in implications:
            if mask >> index[a] & 1 and not mask >> index[b] & 1:
                ok = False
                break
        if not ok:
            continue
        val = sum(
            (values[items[k]] for k in range(n) if mask >> k & 1), ZERO
        )
        if val > best_val:
            best_val = val
            best_set = frozenset(items[k] for k in range(n) if mask >> k & 1)
    return best_set, best_val


# ---------------------------------------------------------------------------
# Up-set enumeration and direct deviation-gain brute force


def upward_closed_vectors(outcomes, pairs):
    """All 0/1 vectors whose 1-set is upward closed: u(o) >= u(o2)
    whenever the pair (o, o2) is entailed."""
    closure = partial_order_closure(pairs, outcomes)
    result = []
    for bits in itertools.product((ZERO, ONE), repeat=len(outcomes)):
        u = dict(zip(outcomes, bits))
        if all(u[o] >= u[o2] for o, o2 in closure):
            result.append(u)
    return result


def deviation_gain(game: GameForm, i, deviation, u, p, q_i):
    """RHS - LHS of the incentive constraint for utility vector u."""
    on_path = sum(
        (w * u[game.outcome_of(prof)] for prof, w in p.items()), ZERO
    )
    deviate = ZERO
    for opp, w in q_i.items():
        deviate += w * u[game.outcome_of(game.insert(i, deviation, opp))]
    return deviate - on_path


def brute_verify(game: GameForm, spaces, profile: MediatedProfile):
    """Independent equilibrium check: scan every extreme type of every
    player against every deviation.  Supports the space kinds for which
    0/1 extreme types are exhaustive witnesses."""
    from ordineq.games import FiniteTypes
    from ordineq.typespaces import enumerate_extreme_types

    for i, spec in enumerate(spaces):
        if isinstance(spec, FiniteTypes):
            types = list(spec.types)
        else:
            types = enumerate_extreme_types(spec, game.outcomes)
        q_i = {
            opp: profile.q[i].get(opp, ZERO)
            for opp in opponents_profiles_of(game, i)
        }
        for u in types:
            for a in game.action_sets[i]:
                if deviation_gain(game, i, a, u, profile.p, q_i) > 0:
                    return False
    return True


def point_profile(game: GameForm, cell) -> MediatedProfile:
    """Point mass on one cell with q_{-i} equal to the others' part of it."""
    p = {tuple(cell): ONE}
    q = []
    for i in range(game.num_players):
        opp = tuple(a for j, a in enumerate(cell) if j != i)
        q.append({opp: ONE})
    return MediatedProfile(p, tuple(q))


@pytest.fixture
def rng():
    return random.Random(0)
