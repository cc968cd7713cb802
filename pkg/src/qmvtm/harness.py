"""Verification suites: algebra-level facts, machine equivalences, and the
bundled corpus of fixtures they run on.

The checks here are the executable counterparts of the package's headline
properties:

* the sum distributes over meet exactly on MV algebras (checked on a catalog
  of built-ins and on every exhaustively enumerated small algebra);
* the width-first value never exceeds the depth-first value, with equality
  forced by distributivity (swept over all value triples via the three-state
  probe machine);
* each classicalization preserves the language values it promises to;
* depth-first pruning never changes the result.

Everything produces plain report rows so the command-line front end can
print them, serialize them, and render figures from them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .algebra import (
    AlgebraError,
    AxiomReport,
    AxiomViolation,
    Element,
    FiniteAlgebra,
    chain_effect_table,
    check_axioms,
    diamond,
    diamond_effect_table,
    effect_order,
    extend_effect,
    lukasiewicz,
    product_algebra,
)
from .machine import Machine
from .semantics import Budget, EvalResult, eval_depth, eval_width
from .transforms import (
    acceptance_wrapper,
    annotate_word,
    apply_transform,
    classicalize_both,
    classicalize_final,
    classicalize_initial,
    classicalize_transitions_depth,
    classicalize_transitions_width,
    counterexample_machine,
)

Word = tuple[str, ...]


# ---------------------------------------------------------------------------
# equivalence and order reports


@dataclass(frozen=True)
class EquivRow:
    word: Word
    left: EvalResult
    right: EvalResult
    ok: bool | None  # None when a side is incomplete or a value undefined


@dataclass
class EquivReport:
    """Per-input comparison of two evaluations.

    ``relation`` is "equal" (values and definedness must match) or "leq"
    (left value must sit below right value; undefined values make the row
    inconclusive).  The verdict is "pass" only when every row is conclusive
    and satisfies the relation.
    """

    left_name: str
    right_name: str
    mode: str
    relation: str
    rows: list[EquivRow] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if any(r.ok is False for r in self.rows):
            return "fail"
        if any(r.ok is None for r in self.rows):
            return "inconclusive"
        return "pass"

    @property
    def witnesses(self) -> list[EquivRow]:
        return [r for r in self.rows if r.ok is False]

    def __str__(self) -> str:
        head = f"{self.left_name} vs {self.right_name} [{self.mode}, {self.relation}]: {self.verdict}"
        lines = [head]
        for r in self.rows:
            mark = {True: "ok", False: "FAIL", None: "?"}[r.ok]
            lines.append(
                f"  {'·'.join(r.word)}: {r.left.value.name} / {r.right.value.name} {mark}"
            )
        return "\n".join(lines)


def _evaluator(mode: str) -> Callable[[Machine, Word, Budget], EvalResult]:
    if mode == "depth":
        return eval_depth
    if mode == "width":
        return eval_width
    raise ValueError(f"unknown mode {mode!r}; expected 'depth' or 'width'")


def equiv_check(
    left: Machine,
    right: Machine,
    mode: str,
    inputs: Iterable[Word],
    budget: Budget = Budget(),
    encode: Callable[[Word], Word] | None = None,
) -> EquivReport:
    """Evaluate both machines on each input and compare values exactly.

    ``encode`` maps inputs before feeding them to the right machine (used
    when the right machine runs over a re-encoded alphabet).  Rows where
    either side is incomplete are inconclusive, never equal.
    """
    if left.algebra != right.algebra:
        raise AlgebraError("machines compare only over the same algebra")
    evaluate = _evaluator(mode)
    report = EquivReport(left.name, right.name, mode, "equal")
    for word in inputs:
        word = tuple(word)
        lres = evaluate(left, word, budget)
        rres = evaluate(right, encode(word) if encode else word, budget)
        if not (lres.complete and rres.complete):
            ok = None
        else:
            ok = lres.value == rres.value and lres.defined == rres.defined
        report.rows.append(EquivRow(word, lres, rres, ok))
    return report


def order_check(machine: Machine, inputs: Iterable[Word], budget: Budget = Budget()) -> EquivReport:
    """Check width-first <= depth-first on each input; undefined values are
    inconclusive."""
    report = EquivReport(f"{machine.name}[width]", f"{machine.name}[depth]", "both", "leq")
    A = machine.algebra
    for word in inputs:
        word = tuple(word)
        wres = eval_width(machine, word, budget)
        dres = eval_depth(machine, word, budget)
        if not (wres.complete and dres.complete) or not (wres.defined and dres.defined):
            ok = None
        else:
            ok = A.leq(wres.value, dres.value)
        report.rows.append(EquivRow(word, wres, dres, ok))
    return report


# ---------------------------------------------------------------------------
# algebra-level theorem checks


def mv_distributivity_theorem_check(algebra: FiniteAlgebra) -> AxiomReport:
    """Check that the MV identity holds exactly when the sum distributes
    over meet; for algebras of extended-effect origin, that distributivity
    additionally coincides with being a linear MV algebra."""
    if not check_axioms(algebra, "QMV").passed:
        raise AlgebraError(f"{algebra.name} is not a quantum MV algebra")
    if not algebra.is_lattice:
        raise AlgebraError(f"{algebra.name} is not lattice-ordered")
    mv = check_axioms(algebra, "MV").passed
    dist = check_axioms(algebra, "DISTRIBUTIVE").passed
    violations: list[AxiomViolation] = []
    if mv != dist:
        violations.append(
            AxiomViolation("MV_DISTRIBUTIVITY", (algebra.name,), f"MV={mv}", f"DISTRIBUTIVE={dist}")
        )
    if algebra.extended_effect:
        linear = check_axioms(algebra, "LINEAR").passed
        if dist != (mv and linear):
            violations.append(
                AxiomViolation(
                    "LINEAR_MV_DISTRIBUTIVITY",
                    (algebra.name,),
                    f"DISTRIBUTIVE={dist}",
                    f"MV and LINEAR={mv and linear}",
                )
            )
    return AxiomReport("THEOREM_COINCIDENCE", algebra.name, violations)


@dataclass
class SweepReport:
    """Outcome of sweeping the width/depth probe machine over all value
    triples of one algebra."""

    algebra_name: str
    triples: int
    formula_failures: list[tuple[str, str, str]]
    mismatches: list[tuple[str, str, str]]
    distributive: bool

    @property
    def all_equal(self) -> bool:
        return not self.mismatches

    @property
    def consistent(self) -> bool:
        """Depth equals width on every triple exactly when the sum
        distributes over meet."""
        return not self.formula_failures and self.all_equal == self.distributive


def proposition_sweep(algebra: FiniteAlgebra, budget: Budget = Budget(max_steps=10)) -> SweepReport:
    """For every triple (a, b, c), build the three-state probe machine and
    check that its depth value is (a+b) inf (a+c), its width value is
    (b inf c) + a, and that the all-triples verdict matches distributivity."""
    if not check_axioms(algebra, "QMV").passed:
        raise AlgebraError(f"{algebra.name} is not a quantum MV algebra")
    if not algebra.is_lattice:
        raise AlgebraError(f"{algebra.name} is not lattice-ordered")
    formula_failures: list[tuple[str, str, str]] = []
    mismatches: list[tuple[str, str, str]] = []
    word = ("s",)
    for a, b, c in itertools.product(algebra.elements, repeat=3):
        machine = counterexample_machine(algebra, a, b, c)
        dres = eval_depth(machine, word, budget)
        wres = eval_width(machine, word, budget)
        expected_depth = algebra.meet(algebra.boxplus(a, b), algebra.boxplus(a, c))
        expected_width = algebra.boxplus(algebra.meet(b, c), a)
        names = (a.name, b.name, c.name)
        if (
            not dres.complete or not wres.complete
            or dres.value != expected_depth or wres.value != expected_width
        ):
            formula_failures.append(names)
        if dres.value != wres.value:
            mismatches.append(names)
    return SweepReport(
        algebra_name=algebra.name,
        triples=algebra.k ** 3,
        formula_failures=formula_failures,
        mismatches=mismatches,
        distributive=check_axioms(algebra, "DISTRIBUTIVE").passed,
    )


def enumerate_small_algebras(max_size: int = 4) -> list[FiniteAlgebra]:
    """Exhaustively enumerate algebras passing the base axioms up to the
    given carrier size.

    The constant rows (a+0=a, a+1=1) are fixed and commutativity is baked
    in, so only sums of middle elements and involutive complements of the
    middles are free; everything else is filtered by the base-axiom check.
    """
    if max_size < 2:
        raise AlgebraError("max_size must be at least 2")
    found: list[FiniteAlgebra] = []
    for k in range(2, max_size + 1):
        middles = [f"m{i}" for i in range(1, k - 1)]
        names = ["0"] + middles + ["1"]
        mid_idx = list(range(1, k - 1))
        free_pairs = [(i, j) for i in mid_idx for j in mid_idx if i <= j]
        count = 0
        for assignment in itertools.product(range(k), repeat=len(free_pairs)):
            table = [[None] * k for _ in range(k)]
            for i in range(k):
                table[i][0] = names[i]
                table[0][i] = names[i]
                table[i][k - 1] = names[k - 1]
                table[k - 1][i] = names[k - 1]
            for (i, j), v in zip(free_pairs, assignment):
                table[i][j] = names[v]
                table[j][i] = names[v]
            for comp in _middle_involutions(mid_idx):
                complement = [None] * k
                complement[0] = names[k - 1]
                complement[k - 1] = names[0]
                for i in mid_idx:
                    complement[i] = names[comp[i]]
                count += 1
                candidate = FiniteAlgebra(
                    f"enum{k}-{count}", names, "0", "1", table, complement
                )
                if check_axioms(candidate, "S").passed:
                    found.append(candidate)
    return found


def _middle_involutions(indices: list[int]) -> list[dict[int, int]]:
    """All involutive self-pairings of the middle elements."""
    if not indices:
        return [{}]
    first, rest = indices[0], indices[1:]
    out = []
    for sub in _middle_involutions(rest):
        out.append({first: first, **sub})
    for partner in rest:
        remaining = [i for i in rest if i != partner]
        for sub in _middle_involutions(remaining):
            out.append({first: partner, partner: first, **sub})
    return out


# ---------------------------------------------------------------------------
# catalog and corpus


def catalog() -> list[FiniteAlgebra]:
    """The built-in algebras every suite runs over."""
    return [
        lukasiewicz(2),
        lukasiewicz(3),
        lukasiewicz(4),
        lukasiewicz(5),
        diamond(),
        product_algebra(lukasiewicz(2), lukasiewicz(2)),
        product_algebra(lukasiewicz(2), lukasiewicz(3)),
        extend_effect(chain_effect_table(3), name="chain-effect(3)"),
    ]


@dataclass(frozen=True)
class Fixture:
    """One corpus entry: a machine, the inputs to evaluate it on, a budget
    known to complete them, and the transforms to exercise."""

    name: str
    machine: Machine
    inputs: tuple[Word, ...]
    budget: Budget = Budget(max_steps=500)
    transforms: tuple[str, ...] = ()


def scanner_machine(algebra: FiniteAlgebra | None = None) -> Machine:
    """Deterministic right-scanner over {a, b}: scanning an ``a`` costs 1/3,
    a ``b`` is free, and reaching the end costs a final 1/3."""
    A = algebra or lukasiewicz(4)
    third = A.element("1/3")
    return Machine(
        name="scanner",
        algebra=A,
        states=frozenset({"q0", "qa"}),
        input_alphabet=frozenset({"a", "b"}),
        tape_alphabet=frozenset({"a", "b", "_"}),
        blank="_",
        initial={"q0": A.zero},
        final={"qa": third},
        transitions={
            ("q0", "a", "q0", "a", "R"): third,
            ("q0", "b", "q0", "b", "R"): A.zero,
            ("q0", "_", "qa", "_", "S"): A.zero,
        },
    )


def branchy_machine(algebra: FiniteAlgebra | None = None) -> Machine:
    """Nondeterministic with a short and a long branch that halt at
    different levels in the same state."""
    A = algebra or lukasiewicz(4)
    third = A.element("1/3")
    return Machine(
        name="branchy",
        algebra=A,
        states=frozenset({"q0", "qa", "qb"}),
        input_alphabet=frozenset({"s"}),
        tape_alphabet=frozenset({"s", "t", "_"}),
        blank="_",
        initial={"q0": A.zero},
        final={"qa": third},
        transitions={
            ("q0", "s", "qa", "s", "R"): third,
            ("q0", "s", "qb", "t", "R"): third,
            ("qb", "_", "qa", "t", "S"): third,
        },
    )


def mergy_machine(algebra: FiniteAlgebra | None = None) -> Machine:
    """Two weighted starts funnel through a common configuration before
    halting, so width-first merges two levels below the start."""
    A = algebra or diamond()
    p, q = A.element("p"), A.element("q")
    return Machine(
        name="mergy",
        algebra=A,
        states=frozenset({"q0", "q1", "qm", "qf"}),
        input_alphabet=frozenset({"s"}),
        tape_alphabet=frozenset({"s", "t", "_"}),
        blank="_",
        initial={"q0": p, "q1": q},
        final={"qf": p},
        transitions={
            ("q0", "s", "qm", "t", "R"): A.zero,
            ("q1", "s", "qm", "t", "R"): A.zero,
            ("qm", "_", "qf", "_", "S"): A.zero,
        },
    )


def shortcut_machine(algebra: FiniteAlgebra | None = None) -> Machine:
    """A one-step and a two-step route into the same configuration; the
    longer route's count vector is dominated, so pruning discards it."""
    A = algebra or lukasiewicz(5)
    quarter = A.element("1/4")
    return Machine(
        name="shortcut",
        algebra=A,
        states=frozenset({"q0", "qx", "qm"}),
        input_alphabet=frozenset({"s"}),
        tape_alphabet=frozenset({"s", "t", "_"}),
        blank="_",
        initial={"q0": A.zero},
        final={"qm": quarter},
        transitions={
            ("q0", "s", "qm", "t", "R"): quarter,
            ("q0", "s", "qx", "s", "S"): quarter,
            ("qx", "s", "qm", "t", "R"): quarter,
        },
    )


def contains_pair_base(algebra: FiniteAlgebra | None = None) -> Machine:
    """Fully classical decider: accepts binary words containing "11"."""
    A = algebra or lukasiewicz(3)
    z = A.zero
    return Machine(
        name="contains-11",
        algebra=A,
        states=frozenset({"b0", "b1", "bacc"}),
        input_alphabet=frozenset({"0", "1"}),
        tape_alphabet=frozenset({"0", "1", "_"}),
        blank="_",
        initial={"b0": z},
        final={"bacc": z},
        transitions={
            ("b0", "0", "b0", "0", "R"): z,
            ("b0", "1", "b1", "1", "R"): z,
            ("b1", "0", "b0", "0", "R"): z,
            ("b1", "1", "bacc", "1", "R"): z,
        },
    )


def looping_machine(algebra: FiniteAlgebra | None = None) -> Machine:
    """A self-loop next to an exit; the loop never halts, so unpruned
    exploration exhausts any budget.  Not part of the corpus."""
    A = algebra or lukasiewicz(3)
    half = A.element("1/2")
    return Machine(
        name="looper",
        algebra=A,
        states=frozenset({"q0", "qa"}),
        input_alphabet=frozenset({"s"}),
        tape_alphabet=frozenset({"s", "_"}),
        blank="_",
        initial={"q0": A.zero},
        final={"qa": half},
        transitions={
            ("q0", "s", "q0", "s", "S"): half,
            ("q0", "s", "qa", "s", "R"): A.zero,
        },
    )


def _words(*texts: str) -> tuple[Word, ...]:
    return tuple(tuple(t) for t in texts)


def build_corpus(verify: bool = True) -> list[Fixture]:
    """The bundled fixtures: probe machines over four algebras, merge /
    branch / shortcut machines, the wrapper, and transformed variants.

    With ``verify`` (the default) every fixture is checked to validate and
    to evaluate completely in both modes, pruned and unpruned, within its
    budget; the corpus is the ground every suite stands on, so an
    incomplete fixture is a build error.
    """
    d4 = diamond()
    l3 = lukasiewicz(3)
    l4 = lukasiewicz(4)
    l5 = lukasiewicz(5)
    prod = product_algebra(lukasiewicz(2), lukasiewicz(3))
    half = l3.element("1/2")
    all_transforms = ("initial", "final", "both", "transitions-width", "transitions-depth")

    def probe(A: FiniteAlgebra, a: str, b: str, c: str, name: str) -> Machine:
        return counterexample_machine(
            A, A.element(a), A.element(b), A.element(c), name=name
        )

    fixtures = [
        Fixture("probe-d4", probe(d4, "p", "p", "q", "probe-d4"), _words("s"),
                transforms=all_transforms),
        Fixture("probe-l3", probe(l3, "1/2", "1/2", "1/2", "probe-l3"), _words("s"),
                transforms=all_transforms),
        Fixture("probe-l4", probe(l4, "1/3", "2/3", "1/3", "probe-l4"), _words("s"),
                transforms=all_transforms),
        Fixture("probe-prod", probe(prod, "(0,1/2)", "(1,0)", "(0,1)", "probe-prod"),
                _words("s"),
                transforms=("initial", "final", "both", "transitions-width")),
        Fixture("mergy-d4", mergy_machine(d4), _words("s"),
                transforms=all_transforms),
        Fixture("scanner-l4", scanner_machine(l4),
                _words("a", "b", "ab", "ba", "abab", "bbab"),
                transforms=all_transforms),
        Fixture("branchy-l4", branchy_machine(l4), _words("s"),
                transforms=all_transforms),
        Fixture("shortcut-l5", shortcut_machine(l5), _words("s"),
                transforms=("initial", "final", "both", "transitions-width")),
        Fixture("wrapper-l3", acceptance_wrapper(contains_pair_base(l3), half),
                _words("0", "1", "11", "010", "011", "0110"),
                transforms=("initial", "final", "both")),
    ]
    derived = [
        Fixture("probe-d4+cI", classicalize_initial(fixtures[0].machine), _words("s")),
        Fixture("probe-d4+cT", classicalize_final(fixtures[0].machine), _words("s")),
        Fixture("probe-l3+cIT", classicalize_both(fixtures[1].machine), _words("s")),
        Fixture("probe-l3+cW", classicalize_transitions_width(fixtures[1].machine), _words("s")),
        Fixture(
            "probe-l3+cD",
            classicalize_transitions_depth(fixtures[1].machine),
            (annotate_word(fixtures[1].machine, ("s",)),),
        ),
    ]
    fixtures.extend(derived)
    if verify:
        for fixture in fixtures:
            fixture.machine.check_valid()
            for word in fixture.inputs:
                for evaluate in (eval_depth, eval_width):
                    for prune in (True, False):
                        budget = Budget(fixture.budget.max_steps, prune)
                        result = evaluate(fixture.machine, word, budget)
                        if not result.complete:
                            raise AlgebraError(
                                f"corpus fixture {fixture.name} did not complete on "
                                f"{'·'.join(word)} within {fixture.budget.max_steps} steps"
                            )
    return fixtures


# ---------------------------------------------------------------------------
# full verification run


@dataclass(frozen=True)
class ReportRow:
    section: str
    name: str
    status: str  # "pass" | "fail" | "inconclusive" | "info"
    detail: str
    data: dict | None = None


@dataclass
class VerificationReport:
    rows: list[ReportRow] = field(default_factory=list)

    def add(self, section: str, name: str, status: str, detail: str, data: dict | None = None):
        self.rows.append(ReportRow(section, name, status, detail, data))

    @property
    def failed(self) -> bool:
        return any(r.status == "fail" for r in self.rows)

    @property
    def inconclusive(self) -> bool:
        return any(r.status == "inconclusive" for r in self.rows)

    @property
    def exit_status(self) -> int:
        if self.failed:
            return 1
        if self.inconclusive:
            return 3
        return 0

    def to_json_dict(self) -> dict:
        return {
            "rows": [
                {
                    "section": r.section,
                    "name": r.name,
                    "status": r.status,
                    "detail": r.detail,
                    "data": r.data,
                }
                for r in self.rows
            ],
            "failed": self.failed,
            "inconclusive": self.inconclusive,
        }

    def summary_text(self) -> str:
        sections: dict[str, list[ReportRow]] = {}
        for r in self.rows:
            sections.setdefault(r.section, []).append(r)
        width = max((len(r.name) for r in self.rows), default=0)
        lines = []
        for section, rows in sections.items():
            lines.append(f"== {section} ==")
            for r in rows:
                lines.append(f"  {r.name.ljust(width)}  {r.status.upper():12s} {r.detail}")
        counts = {s: sum(1 for r in self.rows if r.status == s) for s in ("pass", "fail", "inconclusive", "info")}
        lines.append(
            f"-- {counts['pass']} pass, {counts['fail']} fail, "
            f"{counts['inconclusive']} inconclusive, {counts['info']} info"
        )
        return "\n".join(lines)


def _verdict_status(verdict: str) -> str:
    return {"pass": "pass", "fail": "fail", "inconclusive": "inconclusive"}[verdict]


def run_full_verification(budget: Budget = Budget(max_steps=500)) -> VerificationReport:
    """Run every suite over the catalog and the corpus and collect rows."""
    report = VerificationReport()
    algebras = catalog()

    # Axiom profiles: informational matrix plus hard baseline assertions.
    families = ("S", "MV", "QMV", "LATTICE", "QUASILINEAR", "LINEAR",
                "LOCALLY_FINITE", "DISTRIBUTIVE")
    profiles: dict[str, dict[str, bool]] = {}
    for A in algebras:
        profile = {}
        for family in families:
            if family == "DISTRIBUTIVE" and not A.is_lattice:
                continue
            profile[family] = check_axioms(A, family).passed
        profiles[A.name] = profile
        detail = ", ".join(f"{f}={'y' if ok else 'n'}" for f, ok in profile.items())
        report.add("algebra-axioms", A.name, "info", detail,
                   {"algebra": A.name, "profile": profile})
        report.add("algebra-invariants", f"base-axioms:{A.name}",
                   "pass" if profile["S"] else "fail", "every built-in passes the base axioms")
        if profile["MV"]:
            report.add("algebra-invariants", f"mv-implies-qmv:{A.name}",
                       "pass" if profile["QMV"] else "fail",
                       "an MV algebra is a quantum MV algebra")
        if profile["QMV"]:
            order_violations = [
                v for v in check_axioms(A, "LATTICE", find_all=True).violations
                if v.axiom.startswith("ORDER_")
            ]
            report.add("algebra-invariants", f"partial-order:{A.name}",
                       "pass" if not order_violations else "fail",
                       "the induced relation is a partial order")
        report.add("algebra-invariants", f"monotone-addition:{A.name}", "info",
                   f"a <= a+b for all a, b: {A.addition_monotone}",
                   {"algebra": A.name, "monotone": A.addition_monotone})

    # Derived meet agrees with lattice meet on MV lattices; diverges on the
    # diamond at (p, q).
    for A in algebras:
        if not A.is_lattice:
            continue
        if profiles[A.name]["MV"]:
            agree = all(
                A.qmeet(a, b) == A.meet(a, b)
                for a in A.elements for b in A.elements
            )
            report.add("algebra-invariants", f"qmeet-is-meet:{A.name}",
                       "pass" if agree else "fail",
                       "on MV lattices the derived meet is the lattice meet")
    d4 = next(A for A in algebras if A.name == "diamond")
    p, q = d4.element("p"), d4.element("q")
    divergence_ok = d4.qmeet(p, q) == q and d4.meet(p, q) == d4.zero
    report.add("algebra-invariants", "qmeet-vs-meet:diamond",
               "pass" if divergence_ok else "fail",
               "derived meet of (p,q) is q while lattice meet is 0")

    # Totalization preserves the effect order.
    for table in (diamond_effect_table(), chain_effect_table(3)):
        ext = extend_effect(table)
        ok = all(
            effect_order(table, a, b) == ext.leq(ext.element(a), ext.element(b))
            for a in table.carrier for b in table.carrier
        )
        report.add("algebra-invariants", f"effect-order-preserved:{table.name}",
                   "pass" if ok else "fail",
                   "totalizing keeps the effect-algebra order")

    # Distributivity coincidence on the catalog and on enumerated algebras.
    for A in algebras:
        if not (profiles[A.name]["QMV"] and A.is_lattice):
            continue
        outcome = mv_distributivity_theorem_check(A)
        report.add("theorem-coincidence", A.name,
                   "pass" if outcome.passed else "fail",
                   "MV holds iff sum distributes over meet"
                   + ("; extended-effect: iff linear MV" if A.extended_effect else ""))
    enumerated = enumerate_small_algebras(4)
    bad = []
    eligible = 0
    for A in enumerated:
        if check_axioms(A, "QMV").passed and A.is_lattice:
            eligible += 1
            if check_axioms(A, "MV").passed != check_axioms(A, "DISTRIBUTIVE").passed:
                bad.append(A.name)
    report.add("theorem-coincidence", "enumerated(size<=4)",
               "pass" if not bad else "fail",
               f"{len(enumerated)} base-axiom algebras, {eligible} lattice QMV; "
               f"coincidence holds on all" if not bad else f"failures: {bad}")

    # Width/depth sweeps over all value triples.
    for A in (lukasiewicz(2), lukasiewicz(3), diamond()):
        sweep = proposition_sweep(A)
        detail = (
            f"{sweep.triples} triples, {len(sweep.mismatches)} depth≠width, "
            f"distributive={sweep.distributive}"
        )
        report.add("width-depth-sweep", A.name,
                   "pass" if sweep.consistent else "fail", detail,
                   {"algebra": A.name, "mismatches": sweep.mismatches[:8]})

    corpus = build_corpus()

    # Order property and pruning oracle on every fixture.
    for fixture in corpus:
        oreport = order_check(fixture.machine, fixture.inputs, fixture.budget)
        for row in oreport.rows:
            if row.ok is True:
                status = "pass"
            elif row.ok is None:
                status = "inconclusive"
            else:
                status = "fail"
            report.add("order-check", f"{fixture.name}:{'·'.join(row.word)}",
                       status,
                       f"width {row.left.value.name} <= depth {row.right.value.name}",
                       {"fixture": fixture.name, "word": "·".join(row.word),
                        "width": row.left.value.name, "depth": row.right.value.name,
                        "width_index": row.left.value.index,
                        "depth_index": row.right.value.index})
        for word in fixture.inputs:
            pruned = eval_depth(fixture.machine, word,
                                Budget(fixture.budget.max_steps, prune=True))
            plain = eval_depth(fixture.machine, word,
                               Budget(fixture.budget.max_steps, prune=False))
            same = (
                pruned.value == plain.value
                and pruned.defined == plain.defined
                and pruned.complete == plain.complete
            )
            report.add("pruning-oracle", f"{fixture.name}:{'·'.join(word)}",
                       "pass" if same else "fail",
                       f"pruned={pruned.value.name} plain={plain.value.name} "
                       f"(pruned {pruned.pruned} paths)")

    # Transform preservation.
    for fixture in corpus:
        machine = fixture.machine
        for kind in fixture.transforms:
            transformed, _ = apply_transform(machine, kind)
            flag_checks = {
                "initial": lambda f: f.classical_initial,
                "final": lambda f: f.classical_final,
                "both": lambda f: f.classical_initial and f.classical_final,
                "transitions-width": lambda f: f.classical_transitions,
                "transitions-depth": lambda f: f.classical_transitions,
            }
            flags = transformed.classify()
            if not flag_checks[kind](flags):
                report.add("transform-equivalence", f"{fixture.name}+{kind}", "fail",
                           "transformed machine is not classical as advertised")
                continue
            if kind == "initial":
                modes = ("depth", "width")
            elif kind == "transitions-width":
                modes = ("width",)
            else:
                modes = ("depth",)
            encode = None
            if kind == "transitions-depth":
                encode = lambda w, m=machine: annotate_word(m, w)
            for mode in modes:
                result = equiv_check(machine, transformed, mode, fixture.inputs,
                                     fixture.budget, encode=encode)
                report.add("transform-equivalence", f"{fixture.name}+{kind}[{mode}]",
                           _verdict_status(result.verdict),
                           f"values preserved on {len(result.rows)} input(s)",
                           {"fixture": fixture.name, "kind": kind, "mode": mode,
                            "verdict": result.verdict})
        if "both" in fixture.transforms:
            swapped = classicalize_initial(classicalize_final(machine))
            result = equiv_check(machine, swapped, "depth", fixture.inputs, fixture.budget)
            report.add("transform-equivalence", f"{fixture.name}+both-swapped[depth]",
                       _verdict_status(result.verdict),
                       "composition order does not affect depth values",
                       {"fixture": fixture.name, "kind": "both-swapped", "mode": "depth",
                        "verdict": result.verdict})

    # Wrapper contract: 0 on accepted words, the chosen x otherwise.
    l3 = lukasiewicz(3)
    half = l3.element("1/2")
    wrapper = acceptance_wrapper(contains_pair_base(l3), half)
    for text in ("0", "1", "11", "010", "011", "0110", "1010"):
        word = tuple(text)
        accepted = "11" in text
        result = eval_depth(wrapper, word, budget)
        expected = l3.zero if accepted else half
        ok = result.complete and result.value == expected
        report.add("wrapper-contract", text, "pass" if ok else "fail",
                   f"value {result.value.name}, expected {expected.name}")

    # Determinism probe: the depth construction introduces the final-check
    # branch, so determinism of the source is not expected to survive; the
    # outcome is recorded, not gated.
    scanner = scanner_machine()
    probe_out = classicalize_transitions_depth(scanner)
    in_flags = scanner.classify()
    out_flags = probe_out.classify()
    report.add("determinism-probe", "scanner-l4", "info",
               f"deterministic in: {in_flags.deterministic}, "
               f"out: {out_flags.deterministic}",
               {"in": in_flags.deterministic, "out": out_flags.deterministic})
    return report
