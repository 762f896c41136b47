"""Command-line interface.

Machine-readable JSON goes to stdout; human diagnostics to stderr.
Exit codes: 0 = yes/verified, 3 = no/violated, 2 = non-definitive
(yes over extreme 0/1 types only), 64 = usage error, 65 = bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import equilibrium, fixture_suite, hardness, verifier
from .errors import OrdineqError, ParseError, UnsupportedSpace, ValidationError
from .gamedoc import (
    PROFILE_KEY_SEP,
    parse_game,
    parse_profile,
    serialize_game,
    serialize_profile,
)
from .games import ObjectiveSpec, PreferenceCnf
from .rational import rational_parse, rational_render
from .typespaces import enumerate_extreme_types

EXIT_YES = 0
EXIT_NON_DEFINITIVE = 2
EXIT_NO = 3
EXIT_USAGE = 64
EXIT_BAD_INPUT = 65


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _profile_obj(profile) -> dict:
    return json.loads(serialize_profile(profile))


def _load_game(path: str):
    with open(path) as f:
        return parse_game(f.read())


def _parse_rat_map(path: str, label: str) -> dict:
    with open(path) as f:
        doc = json.load(f)
    if not isinstance(doc, dict):
        raise ParseError(f"{label} file must be a JSON object of profile-key -> rational")
    return {
        tuple(key.split(PROFILE_KEY_SEP)): rational_parse(val) for key, val in doc.items()
    }


def _cmd_solve(args) -> int:
    game, spaces, _ = _load_game(args.game)

    if any(isinstance(s, PreferenceCnf) for s in spaces):
        if args.problem != "eore":
            sys.stderr.write(
                "only the existence problem is supported for preference-CNF spaces\n"
            )
            return EXIT_USAGE
        res = hardness.check_cnf_existence(game, spaces)
        if res.answer == "no":
            _emit({"answer": "no"})
            return EXIT_NO
        if res.answer == "cap_exceeded":
            sys.stderr.write("extreme-type enumeration cap exceeded\n")
            return EXIT_BAD_INPUT
        out = {
            "answer": "yes" if res.definitive else "yes_over_extreme_types",
            "profile": _profile_obj(res.profile),
        }
        _emit(out)
        return EXIT_YES if res.definitive else EXIT_NON_DEFINITIVE

    if args.problem == "eore":
        query = equilibrium.Eore()
    elif args.problem == "sire":
        if not args.target:
            sys.stderr.write("--target is required for sire\n")
            return EXIT_USAGE
        query = equilibrium.Sire(tuple(args.target.split(PROFILE_KEY_SEP)))
    elif args.problem == "aare":
        if not args.path:
            sys.stderr.write("--path is required for aare\n")
            return EXIT_USAGE
        query = equilibrium.Aare(_parse_rat_map(args.path, "--path"))
    else:
        if not args.objective or args.threshold is None:
            sys.stderr.write("--objective and --threshold are required for omire\n")
            return EXIT_USAGE
        query = equilibrium.Omire(
            ObjectiveSpec(
                _parse_rat_map(args.objective, "--objective"),
                rational_parse(args.threshold),
            )
        )

    res = equilibrium.solve(game, spaces, query)
    if res.answer:
        out = {"answer": "yes", "profile": _profile_obj(res.profile)}
        if res.value is not None:
            out["value"] = rational_render(res.value)
        _emit(out)
        return EXIT_YES
    out = {"answer": "no"}
    if res.value is not None:
        out["value"] = rational_render(res.value)
    _emit(out)
    return EXIT_NO


def _cmd_verify(args) -> int:
    game, spaces, _ = _load_game(args.game)
    with open(args.profile) as f:
        profile = parse_profile(f.read(), game)
    report = verifier.verify(game, spaces, profile)
    if report.is_equilibrium:
        _emit({"verdict": "robust_equilibrium"})
        return EXIT_YES
    v = report.violation
    _emit(
        {
            "verdict": "violated",
            "player": v.player,
            "deviation": v.deviation,
            "gap": rational_render(v.amount),
            "witness": {o: rational_render(u) for o, u in sorted(v.witness.items())},
        }
    )
    return EXIT_NO


def _cmd_pure(args) -> int:
    game, spaces, _ = _load_game(args.game)
    profiles = equilibrium.find_pure_unmediated(game, spaces)
    _emit({"profiles": [list(p) for p in profiles]})
    return EXIT_YES


def _cmd_reduce_sat(args) -> int:
    with open(args.dimacs) as f:
        formula = hardness.parse_dimacs(f.read())
    game, spaces = hardness.reduce_sat(formula)
    doc = serialize_game(game, spaces, name="sat_reduction")
    with open(args.out, "w") as f:
        f.write(doc)
    _emit(
        {
            "written": args.out,
            "variables": formula.num_vars,
            "clauses": len(formula.clauses),
            "outcomes": list(game.outcomes),
        }
    )
    return EXIT_YES


def _cmd_enumerate_types(args) -> int:
    game, spaces, _ = _load_game(args.game)
    if not (0 <= args.player < game.num_players):
        sys.stderr.write(f"no player {args.player}\n")
        return EXIT_USAGE
    types = enumerate_extreme_types(spaces[args.player], game.outcomes)
    _emit(
        {
            "player": args.player,
            "types": [
                {o: rational_render(v) for o, v in sorted(t.items())} for t in types
            ],
        }
    )
    return EXIT_YES


def _cmd_fixtures(args) -> int:
    _emit({"fixtures": list(fixture_suite.GAME_NAMES)})
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordineq",
        description="Solve and verify robust mediated equilibria of ordinal games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="answer an existence/support/attainability query")
    p.add_argument("--game", required=True)
    p.add_argument("--problem", required=True, choices=["eore", "sire", "aare", "omire"])
    p.add_argument("--target", help="comma-joined action profile (sire)")
    p.add_argument("--path", help="JSON file with the on-path distribution (aare)")
    p.add_argument("--objective", help="JSON file mapping profile keys to values (omire)")
    p.add_argument("--threshold", help="rational threshold (omire)")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("verify", help="check a mediated profile against a game")
    p.add_argument("--game", required=True)
    p.add_argument("--profile", required=True)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("pure", help="list pure unmediated equilibria")
    p.add_argument("--game", required=True)
    p.set_defaults(fn=_cmd_pure)

    p = sub.add_parser("reduce-sat", help="build the preference-CNF game for a DIMACS formula")
    p.add_argument("--dimacs", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_reduce_sat)

    p = sub.add_parser("enumerate-types", help="list a player's extreme 0/1 types")
    p.add_argument("--game", required=True)
    p.add_argument("--player", type=int, required=True)
    p.set_defaults(fn=_cmd_enumerate_types)

    p = sub.add_parser("fixtures", help="list bundled example games")
    p.set_defaults(fn=_cmd_fixtures)

    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ParseError, ValidationError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_BAD_INPUT
    except FileNotFoundError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_BAD_INPUT
    except json.JSONDecodeError as e:
        sys.stderr.write(f"error: invalid JSON: {e}\n")
        return EXIT_BAD_INPUT
    except UnsupportedSpace as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except OrdineqError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_BAD_INPUT


def main() -> None:
    sys.exit(run_cli())
