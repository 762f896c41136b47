"""JSON game and profile documents.

A game document:

    {"name": "...",                      # optional
     "players": 2,
     "actions": [["Top","Bottom"], ["Left","Right"]],
     "outcomes": ["o1","o2"],
     "outcome_map": {"Top,Left": "o1", ...},   # comma-joined action names
     "type_spaces": [{"kind": "total_order", "order": [...]}, ...]}

A profile document:

    {"p": {"Top,Left": "1/2", ...},
     "q": [{"Left": "1/2", "Right": "1/2"}, {"Top": "1"}]}

All rationals are strings in the shared textual form; decimal literals are
rejected.  Omitted keys in distributions mean probability zero.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Mapping, Optional, Sequence

from .errors import ParseError, ValidationError
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
    profiles_of,
    validate_profile,
    validate_space,
)
from .rational import rational_parse, rational_render

PROFILE_KEY_SEP = ","


def _profile_key(profile: Profile) -> str:
    return PROFILE_KEY_SEP.join(profile)


def _rat(value: Any, where: str) -> Fraction:
    if not isinstance(value, str):
        raise ParseError(f"{where}: rationals must be strings, got {value!r}")
    try:
        return rational_parse(value)
    except ParseError as e:
        raise ParseError(f"{where}: {e}") from None


def _space_from_obj(obj: Any, k: int) -> TypeSpaceSpec:
    where = f"type_spaces[{k}]"
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError(f"{where}: expected an object with a 'kind' field")
    kind = obj["kind"]
    if kind == "finite":
        types = tuple(
            {o: _rat(v, f"{where}.types[{t}]") for o, v in entry.items()}
            for t, entry in enumerate(obj.get("types", []))
        )
        return FiniteTypes(types)
    if kind == "total_order":
        return TotalOrder(tuple(obj.get("order", [])))
    if kind == "partial_order":
        return PartialOrder(tuple((a, b) for a, b in obj.get("pairs", [])))
    if kind == "distribution_order":
        pairs = []
        for t, (r1, r2) in enumerate(obj.get("pairs", [])):
            pairs.append(
                (
                    {o: _rat(v, f"{where}.pairs[{t}][0]") for o, v in r1.items()},
                    {o: _rat(v, f"{where}.pairs[{t}][1]") for o, v in r2.items()},
                )
            )
        return DistributionOrder(tuple(pairs))
    if kind == "preference_cnf":
        clauses = tuple(
            tuple((a, b) for a, b in clause) for clause in obj.get("clauses", [])
        )
        return PreferenceCnf(clauses)
    raise ParseError(f"{where}: unknown kind {kind!r}")


def _space_to_obj(spec: TypeSpaceSpec) -> dict:
    if isinstance(spec, FiniteTypes):
        return {
            "kind": "finite",
            "types": [
                {o: rational_render(v) for o, v in sorted(t.items())} for t in spec.types
            ],
        }
    if isinstance(spec, TotalOrder):
        return {"kind": "total_order", "order": list(spec.order)}
    if isinstance(spec, PartialOrder):
        return {"kind": "partial_order", "pairs": [list(p) for p in spec.pairs]}
    if isinstance(spec, DistributionOrder):
        return {
            "kind": "distribution_order",
            "pairs": [
                [
                    {o: rational_render(v) for o, v in sorted(r1.items())},
                    {o: rational_render(v) for o, v in sorted(r2.items())},
                ]
                for r1, r2 in spec.pairs
            ],
        }
    if isinstance(spec, PreferenceCnf):
        return {
            "kind": "preference_cnf",
            "clauses": [[list(atom) for atom in clause] for clause in spec.clauses],
        }
    raise ValidationError(f"unknown space kind {type(spec).__name__}")


def parse_game(text: str) -> tuple[GameForm, tuple[TypeSpaceSpec, ...], Optional[str]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise ParseError("game document must be a JSON object")
    for field in ("players", "actions", "outcomes", "outcome_map", "type_spaces"):
        if field not in doc:
            raise ParseError(f"missing field {field!r}")
    players = doc["players"]
    actions = doc["actions"]
    if not isinstance(players, int) or players != len(actions):
        raise ParseError("'players' must equal the number of action lists")
    action_sets = tuple(tuple(a) for a in actions)
    for i, acts in enumerate(action_sets):
        for a in acts:
            if PROFILE_KEY_SEP in a:
                raise ParseError(f"action name {a!r} may not contain {PROFILE_KEY_SEP!r}")
    outcomes = tuple(doc["outcomes"])

    mapping = {}
    for key, val in doc["outcome_map"].items():
        parts = tuple(key.split(PROFILE_KEY_SEP))
        if len(parts) != players:
            raise ParseError(f"outcome_map key {key!r} is not a {players}-player profile")
        mapping[parts] = val
    game = GameForm(action_sets, outcomes, mapping)  # raises ValidationError

    raw_spaces = doc["type_spaces"]
    if len(raw_spaces) != players:
        raise ParseError("one type space per player required")
    spaces = tuple(_space_from_obj(obj, k) for k, obj in enumerate(raw_spaces))
    for spec in spaces:
        validate_space(spec, outcomes)
    return game, spaces, doc.get("name")


def serialize_game(
    game: GameForm, spaces: Sequence[TypeSpaceSpec], name: Optional[str] = None
) -> str:
    doc: dict[str, Any] = {}
    if name is not None:
        doc["name"] = name
    doc["players"] = game.num_players
    doc["actions"] = [list(a) for a in game.action_sets]
    doc["outcomes"] = list(game.outcomes)
    doc["outcome_map"] = {
        _profile_key(prof): game.outcome_of(prof) for prof in profiles_of(game)
    }
    doc["type_spaces"] = [_space_to_obj(s) for s in spaces]
    return json.dumps(doc, indent=2) + "\n"


def parse_profile(text: str, game: GameForm) -> MediatedProfile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict) or "p" not in doc or "q" not in doc:
        raise ParseError("profile document needs 'p' and 'q' fields")
    if len(doc["q"]) != game.num_players:
        raise ParseError("'q' must have one distribution per player")

    p = {}
    for key, val in doc["p"].items():
        prof = tuple(key.split(PROFILE_KEY_SEP))
        p[prof] = _rat(val, f"p[{key}]")
    q = []
    for i, entry in enumerate(doc["q"]):
        qi = {}
        for key, val in entry.items():
            prof = tuple(key.split(PROFILE_KEY_SEP))
            qi[prof] = _rat(val, f"q[{i}][{key}]")
        q.append(qi)
    profile = MediatedProfile(p, tuple(q))
    validate_profile(game, profile)  # raises ValidationError
    return profile


def serialize_profile(profile: MediatedProfile) -> str:
    doc = {
        "p": {
            _profile_key(prof): rational_render(w)
            for prof, w in sorted(profile.p.items())
            if w != 0
        },
        "q": [
            {
                _profile_key(prof): rational_render(w)
                for prof, w in sorted(qi.items())
                if w != 0
            }
            for qi in profile.q
        ],
    }
    return json.dumps(doc, indent=2) + "\n"
