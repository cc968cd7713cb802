"""Machine constructions: pushing values out of the initial map, the final
map and the transition map, plus the example-machine builders used by the
verification suites.

Each construction returns a new machine over the same algebra whose
corresponding map is classical (range inside {0, 1}) and whose language
value is preserved:

* ``classicalize_initial`` — preserves both depth and width values;
* ``classicalize_final`` — preserves depth values;
* ``classicalize_both`` — their composition (final after initial);
* ``classicalize_transitions_width`` — a powerset-style construction whose
  states are value assignments over the original states; preserves width
  values;
* ``classicalize_transitions_depth`` — moves step values onto the tape as
  running annotations; preserves depth values after re-encoding the input
  onto the annotated alphabet.

State and symbol names generated here are deterministic so transformed
machines serialize reproducibly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import (
    Element,
    FiniteAlgebra,
    boxplus_closure,
    subalgebra_closure,
)
from .machine import MOVES, Machine, MachineError, TransitionKey


class TransformError(MachineError):
    """A construction's precondition failed."""


@dataclass(frozen=True)
class TransformInfo:
    """Sidecar metadata for a transformed machine."""

    kind: str
    source: str
    subalgebra_size: int | None = None
    boxplus_closure_size: int | None = None
    input_encoding: dict[str, str] | None = None

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "source": self.source,
            "subalgebra_size": self.subalgebra_size,
            "boxplus_closure_size": self.boxplus_closure_size,
            "input_encoding": self.input_encoding,
        }


def _fresh_state(base: str, taken: frozenset[str]) -> str:
    if base not in taken:
        return base
    n = 2
    while f"{base}{n}" in taken:
        n += 1
    return f"{base}{n}"


# ---------------------------------------------------------------------------
# initial / final classicalization


def classicalize_initial(machine: Machine) -> Machine:
    """Replace the initial map by a single fresh state with value 0 that
    branches, via stationary transitions carrying the old initial values,
    into every state that had one."""
    A = machine.algebra
    start = _fresh_state("pI", machine.states)
    transitions = dict(machine.transitions)
    for a in sorted(machine.tape_alphabet):
        for q, value in sorted(machine.initial.items()):
            transitions[(start, a, q, a, "S")] = value
    return Machine(
        name=f"{machine.name}+cI",
        algebra=A,
        states=machine.states | {start},
        input_alphabet=machine.input_alphabet,
        tape_alphabet=machine.tape_alphabet,
        blank=machine.blank,
        initial={start: A.zero},
        final=dict(machine.final),
        transitions=transitions,
    )


def classicalize_final(machine: Machine) -> Machine:
    """Fold final values into the transitions that enter them.

    Every transition into a state with final value below 1 has that value
    added to its own; the final map then becomes 0 exactly where it was
    below 1.  States are conceptually renamed to (state, final value) pairs,
    but since that renaming is injective the original names are kept.
    Transitions whose adjusted value reaches 1 become non-effective and are
    dropped.  Depth values are preserved; width preservation is measured by
    the harness but not promised.
    """
    A = machine.algebra
    transitions: dict[TransitionKey, Element] = {}
    for (p, a, q, b, move), value in machine.transitions.items():
        tq = machine.final_value(q)
        adjusted = A.boxplus(value, tq) if tq != A.one else value
        transitions[(p, a, q, b, move)] = adjusted
    final = {q: A.zero for q in sorted(machine.final)}
    return Machine(
        name=f"{machine.name}+cT",
        algebra=A,
        states=machine.states,
        input_alphabet=machine.input_alphabet,
        tape_alphabet=machine.tape_alphabet,
        blank=machine.blank,
        initial=dict(machine.initial),
        final=final,
        transitions=transitions,
    )


def classicalize_both(machine: Machine) -> Machine:
    """Classical initial and final maps; composition is final after initial,
    which keeps the fresh start state out of the final map's reach."""
    return classicalize_final(classicalize_initial(machine))


# ---------------------------------------------------------------------------
# width-preserving transition classicalization


def _function_state_name(states: tuple[str, ...], values: tuple[Element, ...], one: Element) -> str:
    parts = [f"{q}:{v.name}" for q, v in zip(states, values) if v != one]
    return "X{" + ",".join(parts) + "}"


def classicalize_transitions_width(machine: Machine, cap: int | None = None) -> Machine:
    """Replace weighted transitions by classical ones over function states.

    A function state assigns to every original state the merged value of all
    computations currently sitting there; stepping with (read, write, move)
    sends an assignment X to the assignment

        Y(q) = inf over p of X(p) + value(p, read, q, write, move)

    with step value 0, and the final value of X is the merged final sum
    inf over p of X(p) + T(p).  Only assignments reachable from the start
    are materialized, and the constant-1 assignment (which never halts and
    never contributes) is omitted along with its incoming edges.

    The machine must have a single classical initial state; when it does
    not, the initial classicalization is applied first.  Assignments take
    values in the subalgebra generated by the machine's value range, whose
    size ``cap`` bounds.
    """
    A = machine.algebra
    flags = machine.classify()
    if not (flags.classical_initial and len(machine.initial) == 1):
        machine = classicalize_initial(machine)
    start_state = next(iter(machine.initial))

    closure = subalgebra_closure(A, machine.machine_range(), cap=cap)
    states = tuple(sorted(machine.states))
    pos = {q: i for i, q in enumerate(states)}
    one, zero = A.one, A.zero

    x_init = tuple(zero if q == start_state else one for q in states)
    all_one = tuple(one for _ in states)

    def final_merge(x: tuple[Element, ...]) -> Element:
        return A.meet_all(
            A.boxplus(x[pos[q]], machine.final_value(q)) for q in states
        )

    def successor(x: tuple[Element, ...], a: str, b: str, move: str) -> tuple[Element, ...]:
        return tuple(
            A.meet_all(
                A.boxplus(x[pos[p]], machine.transition_entry(p, a, q, b, move))
                for p in states
            )
            for q in states
        )

    names: dict[tuple[Element, ...], str] = {}
    pending = [x_init]
    names[x_init] = _function_state_name(states, x_init, one)
    transitions: dict[TransitionKey, Element] = {}
    alphabet = sorted(machine.tape_alphabet)
    while pending:
        x = pending.pop(0)
        for a, b in itertools.product(alphabet, alphabet):
            for move in MOVES:
                y = successor(x, a, b, move)
                if y == all_one:
                    continue
                for v in y:
                    if v not in closure:
                        raise TransformError(
                            f"assignment value {v.name} escaped the generated subalgebra"
                        )
                if y not in names:
                    names[y] = _function_state_name(states, y, one)
                    pending.append(y)
                transitions[(names[x], a, names[y], b, move)] = zero
    final = {
        name: final_merge(x)
        for x, name in sorted(names.items(), key=lambda kv: kv[1])
        if final_merge(x) != one
    }
    return Machine(
        name=f"{machine.name}+cW",
        algebra=A,
        states=frozenset(names.values()),
        input_alphabet=machine.input_alphabet,
        tape_alphabet=machine.tape_alphabet,
        blank=machine.blank,
        initial={names[x_init]: zero},
        final=final,
        transitions=transitions,
    )


# ---------------------------------------------------------------------------
# depth-preserving transition classicalization


def annotated_symbol(symbol: str, value: Element) -> str:
    return f"({symbol},{value.name})"


def annotate_word(machine: Machine, word) -> tuple[str, ...]:
    """Re-encode an input word onto the annotated alphabet, pairing every
    symbol with the accumulator's starting value 0."""
    zero = machine.algebra.zero
    return tuple(annotated_symbol(s, zero) for s in machine.check_word(word))


def depth_input_encoding(machine: Machine) -> dict[str, str]:
    zero = machine.algebra.zero
    return {s: annotated_symbol(s, zero) for s in sorted(machine.input_alphabet)}


def classicalize_transitions_depth(machine: Machine, cap: int | None = None) -> Machine:
    """Track the running sum of step values on the tape instead of in the
    transition map.

    Tape symbols become (symbol, accumulated value) pairs over the sum
    closure of the machine's value range; one original step expands into a
    six-step macro that writes the new accumulator onto the written cell and
    both neighbours, so the head always scans a cell carrying the current
    sum.  From any original state the machine may also jump to a final-check
    state whose final value is the scanned accumulator plus the original
    final value; every generated transition has value 0.

    Inputs must be re-encoded with :func:`annotate_word`.  The sum closure
    must be finite within ``cap`` (always true here, where algebras are
    finite tables; the cap guards deliberately small limits and future
    backends).
    """
    A = machine.algebra
    closure = sorted(boxplus_closure(A, machine.machine_range()), key=lambda e: e.index)
    if cap is not None and len(closure) > cap:
        raise TransformError(
            f"sum closure of the value range has {len(closure)} elements, cap is {cap}"
        )
    zero = A.zero
    alphabet = sorted(machine.tape_alphabet)
    blank = machine.blank

    transitions: dict[TransitionKey, Element] = {}
    states: set[str] = set(machine.states)
    final: dict[str, Element] = {}

    def stage(q: str, v: Element, index: int, phase: int) -> str:
        name = f"{q}@{v.name}@{index}.{phase}"
        states.add(name)
        return name

    def check_state(q: str, v: Element) -> str:
        name = f"{q}@{v.name}@f"
        states.add(name)
        return name

    numbered = sorted(machine.transitions.items())
    for index, ((p, a, q, b, move), y) in enumerate(numbered, start=1):
        for x in closure:
            v = A.boxplus(x, y)
            s0 = stage(q, v, index, 0)
            s1 = stage(q, v, index, 1)
            s2 = stage(q, v, index, 2)
            s3 = stage(q, v, index, 3)
            s4 = stage(q, v, index, 4)
            bv = annotated_symbol(b, v)
            transitions[(p, annotated_symbol(a, x), s0, bv, "S")] = zero
            transitions[(s0, bv, s1, bv, "L")] = zero
            for c in alphabet:
                for z in closure:
                    transitions[(s1, annotated_symbol(c, z), s2, annotated_symbol(c, v), "R")] = zero
                    transitions[(s3, annotated_symbol(c, z), s4, annotated_symbol(c, v), "L")] = zero
            # At a tape edge the neighbour is a plain blank rather than an
            # annotated pair; annotate it in passing so the head never exits
            # the annotated region.
            transitions[(s1, blank, s2, annotated_symbol(blank, v), "R")] = zero
            transitions[(s3, blank, s4, annotated_symbol(blank, v), "L")] = zero
            transitions[(s2, bv, s3, bv, "R")] = zero
            transitions[(s4, bv, q, bv, move)] = zero
    for q in sorted(machine.states):
        for c in alphabet:
            for z in closure:
                target = check_state(q, z)
                transitions[(q, annotated_symbol(c, z), target, annotated_symbol(c, z), "S")] = zero
    for q in sorted(machine.states):
        for z in closure:
            final[check_state(q, z)] = A.boxplus(z, machine.final_value(q))

    tape_alphabet = {blank} | {
        annotated_symbol(c, z) for c in alphabet for z in closure
    }
    input_alphabet = {
        annotated_symbol(s, zero) for s in sorted(machine.input_alphabet)
    }
    return Machine(
        name=f"{machine.name}+cD",
        algebra=A,
        states=frozenset(states),
        input_alphabet=frozenset(input_alphabet),
        tape_alphabet=frozenset(tape_alphabet),
        blank=blank,
        initial=dict(machine.initial),
        final=final,
        transitions=transitions,
    )


def apply_transform(machine: Machine, kind: str, cap: int | None = None) -> tuple[Machine, TransformInfo]:
    """Dispatch a named transform and collect its sidecar metadata."""
    if kind == "initial":
        return classicalize_initial(machine), TransformInfo(kind, machine.name)
    if kind == "final":
        return classicalize_final(machine), TransformInfo(kind, machine.name)
    if kind == "both":
        return classicalize_both(machine), TransformInfo(kind, machine.name)
    if kind == "transitions-width":
        out = classicalize_transitions_width(machine, cap=cap)
        size = len(subalgebra_closure(machine.algebra, machine.machine_range(), cap=cap))
        return out, TransformInfo(kind, machine.name, subalgebra_size=size)
    if kind == "transitions-depth":
        out = classicalize_transitions_depth(machine, cap=cap)
        size = len(boxplus_closure(machine.algebra, machine.machine_range()))
        return out, TransformInfo(
            kind,
            machine.name,
            boxplus_closure_size=size,
            input_encoding=depth_input_encoding(machine),
        )
    raise TransformError(f"unknown transform kind {kind!r}")


# ---------------------------------------------------------------------------
# example machines


def counterexample_machine(
    algebra: FiniteAlgebra,
    a: Element,
    b: Element,
    c: Element,
    input_symbol: str = "s",
    name: str | None = None,
) -> Machine:
    """The three-state machine separating width from depth.

    Two initial states (values ``b`` and ``c``) step, with value 0, into a
    common state whose final value is ``a``.  Depth-first this evaluates to
    (a + b) inf (a + c); width-first to (b inf c) + a, so the two coincide
    for all triples exactly when the sum distributes over meet.
    """
    algebra._own(a, b, c)
    blank = "_"
    return Machine(
        name=name or f"sum-meet-probe({a.name},{b.name},{c.name})",
        algebra=algebra,
        states=frozenset({"q0", "q1", "q2"}),
        input_alphabet=frozenset({input_symbol}),
        tape_alphabet=frozenset({input_symbol, blank}),
        blank=blank,
        initial={"q0": b, "q1": c},
        final={"q2": a},
        transitions={
            ("q0", input_symbol, "q2", input_symbol, "R"): algebra.zero,
            ("q1", input_symbol, "q2", input_symbol, "R"): algebra.zero,
        },
    )


def acceptance_wrapper(base: Machine, x: Element, name: str | None = None) -> Machine:
    """Wrap a fully classical machine so the language value becomes 0 on
    accepted words and ``x`` on everything else.

    A fresh start state branches, with value 0, either into the base
    machine's start state or into a fresh state whose final value is ``x``
    (that branch halts immediately, so every input has at least one halting
    computation).  Requires a classical base with a single start state and
    ``x`` strictly between 0 and 1.
    """
    A = base.algebra
    A._own(x)
    if x == A.zero or x == A.one:
        raise TransformError("x must lie strictly between 0 and 1")
    flags = base.classify()
    if not (flags.classical_transitions and flags.classical_initial and flags.classical_final):
        raise TransformError("wrapper base must be fully classical")
    if len(base.initial) != 1:
        raise TransformError("wrapper base must have a single start state")
    base_start = next(iter(base.initial))
    start = _fresh_state("qI", base.states)
    accept_x = _fresh_state("qT", base.states | {start})
    transitions = dict(base.transitions)
    for a in sorted(base.input_alphabet):
        transitions[(start, a, base_start, a, "S")] = A.zero
        transitions[(start, a, accept_x, a, "S")] = A.zero
    final = dict(base.final)
    final[accept_x] = x
    return Machine(
        name=name or f"{base.name}+wrap({x.name})",
        algebra=A,
        states=base.states | {start, accept_x},
        input_alphabet=base.input_alphabet,
        tape_alphabet=base.tape_alphabet,
        blank=base.blank,
        initial={start: A.zero},
        final=final,
        transitions=transitions,
    )
