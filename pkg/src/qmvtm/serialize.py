"""JSON file formats for algebras, effect tables and machines.

Algebra files:

    {"name": ..., "carrier": [names...], "zero": name, "one": name,
     "boxplus": [[name, ...], ...],      # row = left operand
     "complement": [name, ...]}

Partial effect tables use the same shape with an "oplus" matrix whose
entries may be null (undefined).  Machine files:

    {"name": ..., "algebra": <file-or-builtin>, "states": [...],
     "input_alphabet": [...], "tape_alphabet": [...], "blank": ...,
     "initial": {state: element, ...}, "final": {state: element, ...},
     "transitions": [{"from": ..., "read": ..., "to": ..., "write": ...,
                      "move": "L"|"S"|"R", "value": element}, ...]}

Omitted initial/final entries and unlisted transitions have value 1.  The
"algebra" field is either a path (resolved relative to the machine file) or
a builtin spec such as ``lukasiewicz(3)``, ``diamond`` or
``product(lukasiewicz(2),lukasiewicz(3))``.
"""

from __future__ import annotations

import json
import os
from typing import Callable

from .algebra import (
    AlgebraError,
    FiniteAlgebra,
    PartialEffectTable,
    builtin_algebra,
)
from .machine import MOVES, Machine
from .transforms import TransformInfo


class LoadError(Exception):
    """A file failed to parse or validate."""


def _parse_json(text: str, what: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise LoadError(f"{what}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}")
    if not isinstance(data, dict):
        raise LoadError(f"{what}: expected a JSON object")
    return data


def _require(data: dict, keys: tuple[str, ...], what: str) -> None:
    missing = [k for k in keys if k not in data]
    if missing:
        raise LoadError(f"{what}: missing keys {missing}")


# ---------------------------------------------------------------------------
# algebras


def algebra_to_dict(algebra: FiniteAlgebra) -> dict:
    names = algebra.carrier
    return {
        "name": algebra.name,
        "carrier": list(names),
        "zero": names[algebra.zero_index],
        "one": names[algebra.one_index],
        "boxplus": [[names[e] for e in row] for row in algebra._bp],
        "complement": [names[e] for e in algebra._comp],
    }


def loads_algebra(text: str) -> FiniteAlgebra:
    data = _parse_json(text, "algebra")
    _require(data, ("name", "carrier", "zero", "one", "boxplus", "complement"), "algebra")
    try:
        return FiniteAlgebra(
            data["name"], data["carrier"], data["zero"], data["one"],
            data["boxplus"], data["complement"],
            extended_effect=bool(data.get("extended_effect", False)),
        )
    except AlgebraError as e:
        raise LoadError(f"algebra: {e}")


def loads_effect_table(text: str) -> PartialEffectTable:
    data = _parse_json(text, "effect table")
    _require(data, ("name", "carrier", "zero", "one", "oplus"), "effect table")
    try:
        return PartialEffectTable(
            data["name"], tuple(data["carrier"]), data["zero"], data["one"],
            tuple(tuple(row) for row in data["oplus"]),
        )
    except AlgebraError as e:
        raise LoadError(f"effect table: {e}")


def load_algebra_file(path: str) -> FiniteAlgebra:
    with open(path) as f:
        return loads_algebra(f.read())


def load_effect_table_file(path: str) -> PartialEffectTable:
    with open(path) as f:
        return loads_effect_table(f.read())


def resolve_algebra(reference: str, base_dir: str = ".") -> FiniteAlgebra:
    """Resolve an algebra reference: a readable file wins, then a builtin
    spec; anything else is an unknown reference."""
    candidate = reference if os.path.isabs(reference) else os.path.join(base_dir, reference)
    if os.path.isfile(candidate):
        return load_algebra_file(candidate)
    try:
        return builtin_algebra(reference)
    except (AlgebraError, ValueError):
        raise LoadError(f"unknown algebra reference {reference!r}")


# ---------------------------------------------------------------------------
# machines


def machine_to_dict(machine: Machine, algebra_reference: str) -> dict:
    return {
        "name": machine.name,
        "algebra": algebra_reference,
        "states": sorted(machine.states),
        "input_alphabet": sorted(machine.input_alphabet),
        "tape_alphabet": sorted(machine.tape_alphabet),
        "blank": machine.blank,
        "initial": {q: v.name for q, v in sorted(machine.initial.items())},
        "final": {q: v.name for q, v in sorted(machine.final.items())},
        "transitions": [
            {"from": p, "read": a, "to": q, "write": b, "move": move, "value": v.name}
            for (p, a, q, b, move), v in sorted(machine.transitions.items())
        ],
    }


def loads_machine(text: str, algebra_resolver: Callable[[str], FiniteAlgebra]) -> Machine:
    data = _parse_json(text, "machine")
    _require(
        data,
        ("name", "algebra", "states", "input_alphabet", "tape_alphabet", "blank"),
        "machine",
    )
    algebra = algebra_resolver(data["algebra"])

    def element(name: str, where: str):
        try:
            return algebra.element(name)
        except AlgebraError:
            raise LoadError(f"machine {where}: {name!r} is not an element of {algebra.name}")

    initial = {
        q: element(v, f"initial[{q}]") for q, v in data.get("initial", {}).items()
    }
    final = {
        q: element(v, f"final[{q}]") for q, v in data.get("final", {}).items()
    }
    transitions = {}
    for i, entry in enumerate(data.get("transitions", [])):
        if not isinstance(entry, dict):
            raise LoadError(f"machine transitions[{i}]: expected an object")
        missing = [k for k in ("from", "read", "to", "write", "move", "value") if k not in entry]
        if missing:
            raise LoadError(f"machine transitions[{i}]: missing keys {missing}")
        if entry["move"] not in MOVES:
            raise LoadError(f"machine transitions[{i}]: move must be one of {MOVES}")
        key = (entry["from"], entry["read"], entry["to"], entry["write"], entry["move"])
        if key in transitions:
            raise LoadError(f"machine transitions[{i}]: duplicate transition {key}")
        transitions[key] = element(entry["value"], f"transitions[{i}]")
    machine = Machine(
        name=data["name"],
        algebra=algebra,
        states=frozenset(data["states"]),
        input_alphabet=frozenset(data["input_alphabet"]),
        tape_alphabet=frozenset(data["tape_alphabet"]),
        blank=data["blank"],
        initial=initial,
        final=final,
        transitions=transitions,
    )
    report = machine.validate()
    if not report.passed:
        raise LoadError(f"machine failed validation:\n{report}")
    return machine


def load_machine_file(path: str) -> Machine:
    base_dir = os.path.dirname(os.path.abspath(path))
    with open(path) as f:
        return loads_machine(f.read(), lambda ref: resolve_algebra(ref, base_dir))


def load_machine_file_with_ref(path: str) -> tuple[Machine, str]:
    """Load a machine and return the algebra reference in a form usable from
    any directory (relative file references are made absolute)."""
    base_dir = os.path.dirname(os.path.abspath(path))
    with open(path) as f:
        text = f.read()
    machine = loads_machine(text, lambda ref: resolve_algebra(ref, base_dir))
    reference = json.loads(text)["algebra"]
    candidate = reference if os.path.isabs(reference) else os.path.join(base_dir, reference)
    if os.path.isfile(candidate):
        reference = os.path.abspath(candidate)
    return machine, reference


def save_machine(machine: Machine, path: str, algebra_reference: str) -> None:
    with open(path, "w") as f:
        json.dump(machine_to_dict(machine, algebra_reference), f, indent=2, sort_keys=True)
        f.write("\n")


def save_algebra(algebra: FiniteAlgebra, path: str) -> None:
    with open(path, "w") as f:
        json.dump(algebra_to_dict(algebra), f, indent=2, sort_keys=True)
        f.write("\n")


# ---------------------------------------------------------------------------
# transform sidecars


def sidecar_path(machine_path: str) -> str:
    return machine_path + ".meta.json"


def save_transform_info(info: TransformInfo, machine_path: str) -> str:
    path = sidecar_path(machine_path)
    with open(path, "w") as f:
        json.dump(info.to_json_dict(), f, indent=2, sort_keys=True)
        f.write("\n")
    return path


def load_transform_info(machine_path: str) -> TransformInfo | None:
    path = sidecar_path(machine_path)
    if not os.path.isfile(path):
        return None
    with open(path) as f:
        data = json.load(f)
    return TransformInfo(
        kind=data["kind"],
        source=data["source"],
        subalgebra_size=data.get("subalgebra_size"),
        boxplus_closure_size=data.get("boxplus_closure_size"),
        input_encoding=data.get("input_encoding"),
    )
