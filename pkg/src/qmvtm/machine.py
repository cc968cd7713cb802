"""Turing machines whose initial, final and transition maps take values in a
finite lattice-ordered algebra.

A machine is a classical single-tape machine plus three value maps: ``I`` on
states (cost of starting there), ``T`` on states (cost of accepting there)
and a sparse transition map on (state, read, state, write, move) entries.
The value 1 means "no contribution / impossible": it is absorbing for the
sum and neutral for the infimum, so only non-1 entries are ever stored.

Configurations are kept in a canonical form so that structural equality is
configuration identity: the cells strictly left of the head carry no leading
blanks, the cells from the head rightwards carry no trailing blanks, and an
empty right part means the head scans a blank.  In particular a machine that
has just moved off the rightmost written cell and one that is resting on an
explicit trailing blank are the *same* configuration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import AxiomReport, AxiomViolation, Element, FiniteAlgebra

MOVES = ("L", "S", "R")

TransitionKey = tuple[str, str, str, str, str]  # (from, read, to, write, move)


class MachineError(Exception):
    """Base class for machine construction and usage errors."""


class InvalidMachineError(MachineError):
    """The machine failed structural validation."""


class InputError(MachineError):
    """An input word was empty or used undeclared symbols."""


class AmbiguousStepError(MachineError):
    """Two transitions with different values produce the same configuration
    pair; the single-step value is then ill-defined."""


@dataclass(frozen=True, order=True)
class Configuration:
    """An instantaneous description ``left state right`` in canonical form.

    ``right[0]`` is the scanned symbol; an empty ``right`` means the head
    scans a blank.  Construct through :meth:`Machine.config` or
    :func:`canonical_configuration` so the canonical-form invariant holds.
    """

    left: tuple[str, ...]
    state: str
    right: tuple[str, ...]

    def render(self) -> str:
        cells = list(self.left) + [f"[{self.state}]"] + list(self.right)
        return " ".join(cells)


def canonical_configuration(
    left: Sequence[str], state: str, right: Sequence[str], blank: str
) -> Configuration:
    """Strip leading blanks on the left and trailing blanks on the right."""
    left = tuple(left)
    right = tuple(right)
    i = 0
    while i < len(left) and left[i] == blank:
        i += 1
    j = len(right)
    while j > 0 and right[j - 1] == blank:
        j -= 1
    return Configuration(left[i:], state, right[:j])


@dataclass(frozen=True, order=True)
class TransitionLabel:
    """One transition entry together with its value."""

    from_state: str
    read: str
    to_state: str
    write: str
    move: str
    value: Element = field(compare=False)

    @property
    def key(self) -> TransitionKey:
        return (self.from_state, self.read, self.to_state, self.write, self.move)


@dataclass(frozen=True)
class MachineFlags:
    """Classification of a machine: determinism plus which of the three
    value maps is classical (range inside {0, 1})."""

    deterministic: bool
    classical_transitions: bool
    classical_initial: bool
    classical_final: bool


@dataclass
class Machine:
    """A value-weighted nondeterministic Turing machine.

    ``initial``, ``final`` and ``transitions`` are sparse: states or entries
    that are absent have value 1.  Entries explicitly equal to 1 are dropped
    on construction.  Instances are treated as immutable after construction.
    """

    name: str
    algebra: FiniteAlgebra
    states: frozenset[str]
    input_alphabet: frozenset[str]
    tape_alphabet: frozenset[str]
    blank: str
    initial: dict[str, Element]
    final: dict[str, Element]
    transitions: dict[TransitionKey, Element]

    def __post_init__(self):
        one = self.algebra.one
        self.states = frozenset(self.states)
        self.input_alphabet = frozenset(self.input_alphabet)
        self.tape_alphabet = frozenset(self.tape_alphabet)
        self.initial = {q: v for q, v in self.initial.items() if v != one}
        self.final = {q: v for q, v in self.final.items() if v != one}
        self.transitions = {k: v for k, v in self.transitions.items() if v != one}
        by_source: dict[tuple[str, str], list[TransitionLabel]] = {}
        for (p, a, q, b, d), v in self.transitions.items():
            by_source.setdefault((p, a), []).append(TransitionLabel(p, a, q, b, d, v))
        self._by_source = {
            key: sorted(labels, key=lambda t: (t.to_state, t.write, t.move))
            for key, labels in by_source.items()
        }

    # -- value lookups -------------------------------------------------

    def initial_value(self, state: str) -> Element:
        return self.initial.get(state, self.algebra.one)

    def final_value(self, state: str) -> Element:
        return self.final.get(state, self.algebra.one)

    def transition_entry(self, p: str, a: str, q: str, b: str, move: str) -> Element:
        return self.transitions.get((p, a, q, b, move), self.algebra.one)

    # -- validation and classification ----------------------------------

    def validate(self) -> AxiomReport:
        """Structural validation; failures are reported, not raised."""
        v: list[AxiomViolation] = []

        def bad(rule: str, witness: tuple[str, ...], got: str, want: str):
            v.append(AxiomViolation(rule, witness, got, want))

        if self.blank not in self.tape_alphabet:
            bad("BLANK_IN_TAPE", (self.blank,), "missing from tape alphabet", "member")
        if self.blank in self.input_alphabet:
            bad("INPUT_EXCLUDES_BLANK", (self.blank,), "in input alphabet", "excluded")
        for s in sorted(self.input_alphabet - self.tape_alphabet):
            bad("INPUT_IN_TAPE", (s,), "missing from tape alphabet", "member")
        for q in sorted(set(self.initial) - self.states):
            bad("INITIAL_STATE_DECLARED", (q,), "undeclared", "declared state")
        for q in sorted(set(self.final) - self.states):
            bad("FINAL_STATE_DECLARED", (q,), "undeclared", "declared state")
        for q, val in sorted(self.initial.items()):
            if val.algebra != self.algebra:
                bad("INITIAL_VALUE_ALGEBRA", (q,), val.algebra.name, self.algebra.name)
        for q, val in sorted(self.final.items()):
            if val.algebra != self.algebra:
                bad("FINAL_VALUE_ALGEBRA", (q,), val.algebra.name, self.algebra.name)
        for (p, a, q, b, move), val in sorted(self.transitions.items()):
            witness = (p, a, q, b, move)
            if p not in self.states or q not in self.states:
                bad("TRANSITION_STATES_DECLARED", witness, "undeclared state", "declared")
            if a not in self.tape_alphabet or b not in self.tape_alphabet:
                bad("TRANSITION_SYMBOLS_DECLARED", witness, "undeclared symbol", "declared")
            if move not in MOVES:
                bad("TRANSITION_MOVE", witness, move, "L, S or R")
            if val.algebra != self.algebra:
                bad("TRANSITION_VALUE_ALGEBRA", witness, val.algebra.name, self.algebra.name)
        return AxiomReport("machine", self.name, v)

    def check_valid(self) -> "Machine":
        report = self.validate()
        if not report.passed:
            raise InvalidMachineError(str(report))
        return self

    def classify(self) -> MachineFlags:
        zero = self.algebra.zero
        deterministic = all(len(labels) <= 1 for labels in self._by_source.values())
        return MachineFlags(
            deterministic=deterministic,
            classical_transitions=all(v == zero for v in self.transitions.values()),
            classical_initial=all(v == zero for v in self.initial.values()),
            classical_final=all(v == zero for v in self.final.values()),
        )

    # -- configurations and steps ----------------------------------------

    def config(self, left: Sequence[str], state: str, right: Sequence[str]) -> Configuration:
        for s in tuple(left) + tuple(right):
            if s not in self.tape_alphabet:
                raise MachineError(f"symbol {s!r} is not in the tape alphabet")
        if state not in self.states:
            raise MachineError(f"state {state!r} is not declared")
        return canonical_configuration(left, state, right, self.blank)

    def scanned(self, c: Configuration) -> str:
        return c.right[0] if c.right else self.blank

    def apply(self, c: Configuration, to_state: str, write: str, move: str) -> Configuration:
        """The configuration after writing ``write``, entering ``to_state``
        and moving; moving left past the written region scans a blank."""
        rest = c.right[1:] if c.right else ()
        if move == "S":
            left, right = c.left, (write,) + rest
        elif move == "R":
            left, right = c.left + (write,), rest
        elif move == "L":
            neighbour = c.left[-1] if c.left else self.blank
            left, right = c.left[:-1], (neighbour, write) + rest
        else:
            raise MachineError(f"unknown move {move!r}")
        return canonical_configuration(left, to_state, right, self.blank)

    def delta_star(self, c1: Configuration, c2: Configuration) -> Element:
        """Value of transforming ``c1`` into ``c2`` in one step; 1 when no
        transition produces that pair.

        The (write, move) decomposition of a configuration pair is unique in
        canonical form except for degenerate blank-writing corners; if two
        decompositions ever disagree on the value, that is reported as an
        error rather than silently resolved.
        """
        p, a = c1.state, self.scanned(c1)
        values = set()
        for b in sorted(self.tape_alphabet):
            for move in MOVES:
                if self.apply(c1, c2.state, b, move) == c2:
                    values.add(self.transition_entry(p, a, c2.state, b, move))
        if not values:
            return self.algebra.one
        if len(values) > 1:
            raise AmbiguousStepError(
                f"configuration pair {c1.render()} -> {c2.render()} matches "
                f"transitions with distinct values"
            )
        return values.pop()

    def effective_successors(
        self, c: Configuration
    ) -> list[tuple[Configuration, TransitionLabel]]:
        """All one-step successors reachable with value != 1, in a fixed
        order (sorted by target state, written symbol, move)."""
        labels = self._by_source.get((c.state, self.scanned(c)), ())
        return [
            (self.apply(c, t.to_state, t.write, t.move), t) for t in labels
        ]

    def is_halting(self, c: Configuration) -> bool:
        """Halting means a final value below 1, or no effective step out."""
        if self.final_value(c.state) != self.algebra.one:
            return True
        return not self._by_source.get((c.state, self.scanned(c)))

    # -- inputs and reachability -----------------------------------------

    def check_word(self, word: str | Sequence[str]) -> tuple[str, ...]:
        """Normalize an input word to a tuple of symbol names.

        A plain string is split into characters (convenient when all input
        symbols are single characters); empty words are rejected.
        """
        symbols = tuple(word)
        if not symbols:
            raise InputError("input word must be nonempty")
        for s in symbols:
            if s not in self.input_alphabet:
                raise InputError(f"symbol {s!r} is not in the input alphabet")
        return symbols

    def initial_configuration(self, state: str, word: str | Sequence[str]) -> Configuration:
        return canonical_configuration((), state, self.check_word(word), self.blank)

    def initial_distribution(
        self, word: str | Sequence[str]
    ) -> list[tuple[Configuration, Element]]:
        """Starting configurations paired with their initial values; states
        with value 1 are omitted (their paths contribute nothing)."""
        word = self.check_word(word)
        return [
            (self.initial_configuration(q, word), v)
            for q, v in sorted(self.initial.items())
        ]

    def reachable_ids(self, word: str | Sequence[str], n: int) -> frozenset[Configuration]:
        """Configurations reachable in exactly ``n`` effective steps, never
        expanding a halting configuration."""
        if n < 1:
            raise MachineError("n must be at least 1")
        level = {c for c, _ in self.initial_distribution(word)}
        for _ in range(n):
            level = {
                succ
                for c in level
                if not self.is_halting(c)
                for succ, _ in self.effective_successors(c)
            }
        return frozenset(level)

    def machine_range(self) -> frozenset[Element]:
        """All values taken by the three maps, including the default 1."""
        values = {self.algebra.one}
        values.update(self.initial.values())
        values.update(self.final.values())
        values.update(self.transitions.values())
        return frozenset(values)
