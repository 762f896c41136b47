#!/usr/bin/env python3
"""Cross-check the cutting-plane solver against explicit extreme-type LPs.

For each random partial-order game the existence question (and a robust
social-welfare question) is answered twice: once with the lazy separation
oracle over the partial order, and once with every 0/1 extreme type
enumerated up front as a finite type list.  The two routes must agree on
every trial; any disagreement is printed and counted.

Usage: python scripts/oracle_agreement.py [--trials N] [--seed S]
"""

from __future__ import annotations

import argparse
import time

from ordineq import equilibrium
from ordineq.randgen import random_game
from ordineq.typespaces import FiniteTypes, enumerate_extreme_types


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-actions", type=int, default=2)
    ap.add_argument("--max-outcomes", type=int, default=4)
    args = ap.parse_args()

    disagreements = 0
    t0 = time.monotonic()
    for trial in range(args.trials):
        game, spaces = random_game(
            seed=args.seed + trial,
            max_actions=args.max_actions,
            max_outcomes=args.max_outcomes,
            kind="partial_order",
        )
        finite = tuple(
            FiniteTypes(tuple(enumerate_extreme_types(s, game.outcomes)))
            for s in spaces
        )
        target = tuple(acts[0] for acts in game.action_sets)
        for query in (equilibrium.Eore(), equilibrium.Sire(target)):
            lazy = equilibrium.solve(game, spaces, query)
            explicit = equilibrium.solve(game, finite, query)
            if lazy.answer != explicit.answer:
                disagreements += 1
                print(
                    f"DISAGREE trial={args.seed + trial} query={query}: "
                    f"lazy={lazy.answer} explicit={explicit.answer}"
                )
    dt = time.monotonic() - t0
    print(
        f"{args.trials} games x 2 queries: {disagreements} disagreements "
        f"({dt:.2f}s)"
    )
    return 1 if disagreements else 0


if __name__ == "__main__":
    raise SystemExit(main())
