"""Depth-first and width-first language values of a machine under a budget.

Both evaluators explore the effective computations of a machine on one input
and fold the algebra's infimum over halting outcomes; they differ in *where*
the infimum is taken:

* depth-first: each halting path is summed end to end (initial value, step
  values, final value) and the infimum ranges over whole paths;
* width-first: paths are merged level by level — all computations sitting in
  the same configuration after n steps share one value, the infimum of their
  predecessors' values plus the step value — and the infimum ranges over
  halting configurations per level.

Width-first is always below depth-first, with equality exactly when the sum
distributes over meet.  Exploration never continues past a halting
configuration (a final value below 1 stops the machine), and a starting
configuration that is already halting contributes its initial value plus its
final value as a length-0 computation.

The word's value is the infimum over halting outcomes only; when no
computation halts within the budget the result is marked undefined and the
reported value is the empty infimum, 1.  Budgets bound the number of steps;
a result is complete when the frontier emptied before the bound, in which
case the value is exact.

Depth-first search prunes dominated partial paths: over the finite set of
values a machine can mention, a path is summarized by the count vector of
the values it used, and a path arriving at a configuration already reached
by a componentwise-smaller vector can never lower the infimum.  This is
sound only when adding a summand never decreases a value, which is probed
per algebra; pruning silently disables itself when the probe fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Element, NotLatticeError
from .machine import Configuration, Machine, MachineError


@dataclass(frozen=True)
class Budget:
    """Exploration limits: maximum path length and a pruning switch."""

    max_steps: int = 200
    prune: bool = True


@dataclass(frozen=True)
class KVector:
    """Count vector of a path's values over a fixed basis.

    The path's value is the basis-weighted sum of the counts; since the sum
    is commutative and associative the counts determine the value.
    """

    basis: tuple[Element, ...]
    counts: tuple[int, ...]

    def value(self) -> Element:
        algebra = self.basis[0].algebra
        total = algebra.zero
        for element, count in zip(self.basis, self.counts):
            for _ in range(count):
                total = algebra.boxplus(total, element)
        return total

    def dominates(self, other: "KVector") -> bool:
        """Componentwise <= on counts (a dominated path is redundant)."""
        if self.basis != other.basis:
            raise ValueError("k-vectors over different bases are incomparable")
        return all(a <= b for a, b in zip(self.counts, other.counts))


def dominates(v: KVector, w: KVector) -> bool:
    return v.dominates(w)


@dataclass(frozen=True)
class EvalResult:
    """Computed value of one input plus exploration statistics.

    ``defined`` is False when no halting computation was found (the value
    field is then the empty infimum, 1).  ``complete`` is True when the
    exploration frontier emptied within the budget, making the value exact;
    otherwise the value is an upper bound that further steps can only lower.
    """

    value: Element
    complete: bool
    defined: bool
    levels: int
    paths: int
    pruned: int

    def to_json_dict(self) -> dict:
        return {
            "value": self.value.name,
            "complete": self.complete,
            "defined": self.defined,
            "levels": self.levels,
            "paths": self.paths,
            "pruned": self.pruned,
        }


def label_basis(machine: Machine) -> tuple[Element, ...]:
    """The machine's value range in carrier order; the k-vector basis."""
    return tuple(sorted(machine.machine_range(), key=lambda e: e.index))


def path_value(machine: Machine, path: Sequence[Configuration]) -> Element:
    """End-to-end value of a halting path: initial value, step values, final
    value, all summed.

    The path must consist of effective steps, halt exactly at its last
    configuration, and may have length 0 (a halting starting configuration).
    """
    if not path:
        raise MachineError("path must contain at least the starting configuration")
    A = machine.algebra
    total = machine.initial_value(path[0].state)
    for c1, c2 in zip(path, path[1:]):
        if machine.is_halting(c1):
            raise MachineError(f"path continues past halting configuration {c1.render()}")
        step = machine.delta_star(c1, c2)
        if step == A.one:
            raise MachineError(f"step {c1.render()} -> {c2.render()} is not effective")
        total = A.boxplus(total, step)
    last = path[-1]
    if not machine.is_halting(last):
        raise MachineError(f"path ends at non-halting configuration {last.render()}")
    return A.boxplus(total, machine.final_value(last.state))


def path_vector(machine: Machine, path: Sequence[Configuration]) -> KVector:
    """Count vector of a halting path over the machine's value range,
    including the initial and final contributions."""
    basis = label_basis(machine)
    position = {e: i for i, e in enumerate(basis)}
    counts = [0] * len(basis)
    counts[position[machine.initial_value(path[0].state)]] += 1
    for c1, c2 in zip(path, path[1:]):
        counts[position[machine.delta_star(c1, c2)]] += 1
    counts[position[machine.final_value(path[-1].state)]] += 1
    return KVector(basis, tuple(counts))


def _require_lattice(machine: Machine) -> None:
    if not machine.algebra.is_lattice:
        raise NotLatticeError(
            f"evaluation needs a lattice-ordered algebra; {machine.algebra.name} is not"
        )


class _Frontier:
    """Per-configuration store of mutually incomparable count vectors."""

    def __init__(self):
        self.store: dict[Configuration, list[tuple[int, ...]]] = {}

    def admit(self, config: Configuration, counts: tuple[int, ...]) -> bool:
        """Record ``counts`` at ``config``; False when an already-stored
        vector is componentwise <= (the arrival is redundant)."""
        vectors = self.store.setdefault(config, [])
        for stored in vectors:
            if all(s <= c for s, c in zip(stored, counts)):
                return False
        vectors[:] = [
            stored
            for stored in vectors
            if not all(c <= s for c, s in zip(counts, stored))
        ]
        vectors.append(counts)
        return True


def eval_depth(machine: Machine, word, budget: Budget = Budget()) -> EvalResult:
    """Depth-first value: infimum over halting paths of the path sum."""
    _require_lattice(machine)
    if budget.max_steps < 1:
        raise MachineError("budget.max_steps must be at least 1")
    A = machine.algebra
    basis = label_basis(machine)
    position = {e: i for i, e in enumerate(basis)}
    prune = budget.prune and A.addition_monotone

    def unit(value: Element) -> tuple[int, ...]:
        counts = [0] * len(basis)
        counts[position[value]] += 1
        return tuple(counts)

    frontier = _Frontier()
    items: list[tuple[Configuration, Element, tuple[int, ...]]] = []
    for config, value in machine.initial_distribution(word):
        counts = unit(value)
        if prune:
            frontier.admit(config, counts)
        items.append((config, value, counts))

    accumulator: Element | None = None
    paths = pruned = 0
    levels = 0
    complete = True
    for level in range(budget.max_steps + 1):
        if not items:
            break
        levels = level + 1
        next_items: list[tuple[Configuration, Element, tuple[int, ...]]] = []
        for config, value, counts in items:
            if machine.is_halting(config):
                outcome = A.boxplus(value, machine.final_value(config.state))
                accumulator = outcome if accumulator is None else A.meet(accumulator, outcome)
                paths += 1
                continue
            if level == budget.max_steps:
                complete = False
                continue
            for succ, label in machine.effective_successors(config):
                new_value = A.boxplus(value, label.value)
                new_counts = list(counts)
                new_counts[position[label.value]] += 1
                new_counts = tuple(new_counts)
                if prune and not frontier.admit(succ, new_counts):
                    pruned += 1
                    continue
                next_items.append((succ, new_value, new_counts))
        items = next_items
    return EvalResult(
        value=accumulator if accumulator is not None else A.one,
        complete=complete,
        defined=accumulator is not None,
        levels=levels,
        paths=paths,
        pruned=pruned,
    )


def eval_width(machine: Machine, word, budget: Budget = Budget()) -> EvalResult:
    """Width-first value: computations merge per configuration at every
    level before the next step's value is added."""
    _require_lattice(machine)
    if budget.max_steps < 1:
        raise MachineError("budget.max_steps must be at least 1")
    A = machine.algebra

    level_values: dict[Configuration, Element] = {}
    for config, value in machine.initial_distribution(word):
        existing = level_values.get(config)
        level_values[config] = value if existing is None else A.meet(existing, value)

    accumulator: Element | None = None
    paths = 0
    levels = 0
    complete = True
    for level in range(budget.max_steps + 1):
        if not level_values:
            break
        levels = level + 1
        running: dict[Configuration, Element] = {}
        next_values: dict[Configuration, Element] = {}
        for config in sorted(level_values):
            value = level_values[config]
            if machine.is_halting(config):
                outcome = A.boxplus(value, machine.final_value(config.state))
                accumulator = outcome if accumulator is None else A.meet(accumulator, outcome)
                paths += 1
                continue
            running[config] = value
        if not running:
            break
        if level == budget.max_steps:
            complete = False
            break
        for config, value in running.items():
            for succ, label in machine.effective_successors(config):
                stepped = A.boxplus(value, label.value)
                existing = next_values.get(succ)
                next_values[succ] = stepped if existing is None else A.meet(existing, stepped)
        level_values = next_values
    return EvalResult(
        value=accumulator if accumulator is not None else A.one,
        complete=complete,
        defined=accumulator is not None,
        levels=levels,
        paths=paths,
        pruned=0,
    )
