"""Finite many-valued truth algebras given by explicit operation tables.

Every structure here is a finite carrier with constants 0 and 1, a total
binary sum and a unary complement.  Nothing is assumed about the tables:
axiom families (supplement algebras, MV algebras, quantum MV algebras,
lattice order, linearity, local finiteness, distributivity of the sum over
meet) are checked exhaustively on demand and violations are reported with
concrete witnesses.  Partial effect tables are a separate input type; they
can be totalized (undefined sums map to 1), which yields the quasilinear
quantum MV algebras used throughout the rest of the package.

Derived operations, in terms of the sum ``+`` and complement ``~``:

    odot(a, b)  = ~(~a + ~b)
    qmeet(a, b) = (a + ~b) odot b
    qjoin(a, b) = (a odot ~b) + b
    a <= b      iff a == qmeet(a, b)

The induced relation ``<=`` is computed from the tables, never from carrier
listing order.  When ``<=`` is a partial order with all binary infima and
suprema, the meet/join tables are cached and the algebra is flagged as a
lattice.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


class AlgebraError(Exception):
    """Base class for algebra construction and usage errors."""


class AlgebraMismatchError(AlgebraError):
    """An element of one algebra was combined with a different algebra."""


class NotLatticeError(AlgebraError):
    """A lattice operation was requested but the order is not a lattice."""


class CapExceededError(AlgebraError):
    """A closure computation grew past the caller-supplied size cap."""


class EffectAlgebraError(AlgebraError):
    """A partial table failed the effect-algebra axioms."""


FAMILIES = (
    "S",
    "MV",
    "QMV",
    "EFFECT",
    "LATTICE",
    "QUASILINEAR",
    "LINEAR",
    "LOCALLY_FINITE",
    "DISTRIBUTIVE",
)


@dataclass(frozen=True)
class Element:
    """A carrier element of one specific algebra.

    Elements of different algebras never mix: every operation checks the
    owning algebra and raises :class:`AlgebraMismatchError` on a mismatch.
    """

    algebra: "FiniteAlgebra"
    index: int

    @property
    def name(self) -> str:
        return self.algebra.carrier[self.index]

    def __repr__(self) -> str:
        return f"<{self.name}@{self.algebra.name}>"


@dataclass(frozen=True)
class AxiomViolation:
    """One failed axiom instance, with both evaluated sides."""

    axiom: str
    witness: tuple[str, ...]
    lhs: str
    rhs: str

    def __str__(self) -> str:
        args = ", ".join(self.witness)
        return f"{self.axiom}({args}): {self.lhs} != {self.rhs}"


@dataclass
class AxiomReport:
    """Outcome of an axiom-family check (or a structural validation)."""

    family: str
    subject: str
    violations: list[AxiomViolation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.passed:
            return f"{self.subject}: {self.family} pass"
        lines = [f"{self.subject}: {self.family} fail ({len(self.violations)} violation(s))"]
        lines.extend(f"  {v}" for v in self.violations)
        return "\n".join(lines)


class FiniteAlgebra:
    """A finite table-driven algebra with eagerly computed derived structure.

    Immutable after construction; instances are compared and hashed by a
    structural identity (name plus a content hash of the tables), so the
    same file loaded twice yields interoperable elements.
    """

    def __init__(
        self,
        name: str,
        carrier: Sequence[str],
        zero: str,
        one: str,
        boxplus: Sequence[Sequence[str]],
        complement: Sequence[str],
        extended_effect: bool = False,
    ):
        carrier = tuple(carrier)
        if len(carrier) < 2:
            raise AlgebraError(f"carrier must have at least 2 elements, got {len(carrier)}")
        if len(set(carrier)) != len(carrier):
            raise AlgebraError("carrier element names must be unique")
        if any(not n for n in carrier):
            raise AlgebraError("carrier element names must be nonempty")
        index = {n: i for i, n in enumerate(carrier)}
        if zero not in index or one not in index:
            raise AlgebraError("zero and one must name carrier elements")
        if zero == one:
            raise AlgebraError("zero and one must differ")
        k = len(carrier)
        if len(boxplus) != k or any(len(row) != k for row in boxplus):
            raise AlgebraError(f"boxplus table must be {k}x{k}")
        if len(complement) != k:
            raise AlgebraError(f"complement table must have length {k}")
        for row in boxplus:
            for entry in row:
                if entry not in index:
                    raise AlgebraError(f"boxplus entry {entry!r} is not a carrier element")
        for entry in complement:
            if entry not in index:
                raise AlgebraError(f"complement entry {entry!r} is not a carrier element")

        self.name = name
        self.carrier = carrier
        self.k = k
        self.zero_index = index[zero]
        self.one_index = index[one]
        self.extended_effect = extended_effect
        self._index = index
        self._bp = tuple(tuple(index[e] for e in row) for row in boxplus)
        self._comp = tuple(index[e] for e in complement)
        self._ident = (name, self._content_hash())
        self._compute_derived()

    def _content_hash(self) -> str:
        payload = json.dumps(
            [self.carrier, self.zero_index, self.one_index, self._bp, self._comp],
            separators=(",", ":"),
        )
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def _compute_derived(self) -> None:
        k, bp, comp = self.k, self._bp, self._comp
        rng = range(k)
        self._odot = tuple(
            tuple(comp[bp[comp[a]][comp[b]]] for b in rng) for a in rng
        )
        odot = self._odot
        self._qmeet = tuple(
            tuple(odot[bp[a][comp[b]]][b] for b in rng) for a in rng
        )
        self._qjoin = tuple(
            tuple(bp[odot[a][comp[b]]][b] for b in rng) for a in rng
        )
        qmeet = self._qmeet
        self._leq = tuple(tuple(qmeet[a][b] == a for b in rng) for a in rng)
        leq = self._leq
        self._is_poset = (
            all(leq[a][a] for a in rng)
            and all(not (leq[a][b] and leq[b][a]) or a == b for a in rng for b in rng)
            and all(
                not (leq[a][b] and leq[b][c]) or leq[a][c]
                for a in rng for b in rng for c in rng
            )
        )
        self._meet, self._join = self._lattice_tables() if self._is_poset else (None, None)
        self.is_lattice = self._meet is not None and self._join is not None
        self.addition_monotone = all(leq[a][bp[a][b]] for a in rng for b in rng)

    def _lattice_tables(self):
        k, leq = self.k, self._leq
        rng = range(k)
        meet = [[None] * k for _ in rng]
        join = [[None] * k for _ in rng]
        for a in rng:
            for b in rng:
                lower = [c for c in rng if leq[c][a] and leq[c][b]]
                glbs = [c for c in lower if all(leq[d][c] for d in lower)]
                upper = [c for c in rng if leq[a][c] and leq[b][c]]
                lubs = [c for c in upper if all(leq[c][d] for d in upper)]
                if len(glbs) != 1 or len(lubs) != 1:
                    return None, None
                meet[a][b] = glbs[0]
                join[a][b] = lubs[0]
        return tuple(map(tuple, meet)), tuple(map(tuple, join))

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteAlgebra) and self._ident == other._ident

    def __hash__(self) -> int:
        return hash(self._ident)

    def __repr__(self) -> str:
        return f"FiniteAlgebra({self.name!r}, k={self.k})"

    # -- element access ----------------------------------------------------

    def element(self, name: str) -> Element:
        if name not in self._index:
            raise AlgebraError(f"{name!r} is not an element of {self.name}")
        return Element(self, self._index[name])

    @property
    def elements(self) -> tuple[Element, ...]:
        return tuple(Element(self, i) for i in range(self.k))

    @property
    def zero(self) -> Element:
        return Element(self, self.zero_index)

    @property
    def one(self) -> Element:
        return Element(self, self.one_index)

    def _own(self, *xs: Element) -> None:
        for x in xs:
            if x.algebra != self:
                raise AlgebraMismatchError(
                    f"element {x!r} does not belong to algebra {self.name}"
                )

    # -- operations --------------------------------------------------------

    def boxplus(self, a: Element, b: Element) -> Element:
        self._own(a, b)
        return Element(self, self._bp[a.index][b.index])

    def complement(self, a: Element) -> Element:
        self._own(a)
        return Element(self, self._comp[a.index])

    def odot(self, a: Element, b: Element) -> Element:
        self._own(a, b)
        return Element(self, self._odot[a.index][b.index])

    def qmeet(self, a: Element, b: Element) -> Element:
        self._own(a, b)
        return Element(self, self._qmeet[a.index][b.index])

    def qjoin(self, a: Element, b: Element) -> Element:
        self._own(a, b)
        return Element(self, self._qjoin[a.index][b.index])

    def derived_op(self, kind: str, a: Element, b: Element) -> Element:
        ops = {"odot": self.odot, "qmeet": self.qmeet, "qjoin": self.qjoin}
        if kind not in ops:
            raise AlgebraError(f"unknown derived operation {kind!r}")
        return ops[kind](a, b)

    def leq(self, a: Element, b: Element) -> bool:
        self._own(a, b)
        return self._leq[a.index][b.index]

    def meet(self, a: Element, b: Element) -> Element:
        self._own(a, b)
        if not self.is_lattice:
            raise NotLatticeError(f"algebra {self.name} is not lattice-ordered")
        return Element(self, self._meet[a.index][b.index])

    def join(self, a: Element, b: Element) -> Element:
        self._own(a, b)
        if not self.is_lattice:
            raise NotLatticeError(f"algebra {self.name} is not lattice-ordered")
        return Element(self, self._join[a.index][b.index])

    def lattice_op(self, kind: str, a: Element, b: Element) -> Element:
        ops = {"meet": self.meet, "join": self.join}
        if kind not in ops:
            raise AlgebraError(f"unknown lattice operation {kind!r}")
        return ops[kind](a, b)

    def meet_all(self, values: Iterable[Element]) -> Element:
        """Infimum of ``values``; the empty infimum is 1 (the top)."""
        result = self.one
        for v in values:
            result = self.meet(result, v)
        return result

    def boxplus_all(self, values: Iterable[Element]) -> Element:
        """Sum of ``values``; the empty sum is 0."""
        result = self.zero
        for v in values:
            result = self.boxplus(result, v)
        return result


@dataclass
class PartialEffectTable:
    """A partial sum table: ``oplus[a][b]`` is an element name or None.

    Whether it actually is an effect algebra is decided by
    ``check_axioms(table, "EFFECT")``, not by the constructor.
    """

    name: str
    carrier: tuple[str, ...]
    zero: str
    one: str
    oplus: tuple[tuple[str | None, ...], ...]

    def __post_init__(self):
        self.carrier = tuple(self.carrier)
        self.oplus = tuple(tuple(row) for row in self.oplus)
        k = len(self.carrier)
        if k < 2:
            raise AlgebraError("carrier must have at least 2 elements")
        if len(set(self.carrier)) != k:
            raise AlgebraError("carrier element names must be unique")
        if self.zero not in self.carrier or self.one not in self.carrier:
            raise AlgebraError("zero and one must name carrier elements")
        if self.zero == self.one:
            raise AlgebraError("zero and one must differ")
        if len(self.oplus) != k or any(len(row) != k for row in self.oplus):
            raise AlgebraError(f"oplus table must be {k}x{k}")
        for row in self.oplus:
            for entry in row:
                if entry is not None and entry not in self.carrier:
                    raise AlgebraError(f"oplus entry {entry!r} is not a carrier element")

    def index(self, name: str) -> int:
        return self.carrier.index(name)


# ---------------------------------------------------------------------------
# axiom checking


def check_axioms(target, family: str, find_all: bool = False) -> AxiomReport:
    """Exhaustively check one axiom family on an algebra or effect table.

    By default only the first violation of each axiom is reported (the
    iteration order over the carrier is fixed, so witnesses are stable and
    can be frozen into regression tests); ``find_all`` collects every
    violating tuple.
    """
    if family not in FAMILIES:
        raise AlgebraError(f"unknown axiom family {family!r}")
    if family == "EFFECT":
        if not isinstance(target, PartialEffectTable):
            raise AlgebraError("EFFECT check requires a PartialEffectTable")
        violations = _check_effect(target, find_all)
        return AxiomReport("EFFECT", target.name, violations)
    if not isinstance(target, FiniteAlgebra):
        raise AlgebraError(f"{family} check requires a FiniteAlgebra")
    checker = {
        "S": _check_s,
        "MV": _check_mv,
        "QMV": _check_qmv,
        "LATTICE": _check_lattice,
        "QUASILINEAR": _check_quasilinear,
        "LINEAR": _check_linear,
        "LOCALLY_FINITE": _check_locally_finite,
        "DISTRIBUTIVE": _check_distributive,
    }[family]
    return AxiomReport(family, target.name, checker(target, find_all))


def _harvest(generator, find_all: bool) -> list[AxiomViolation]:
    """Collect violations, keeping only the first one per axiom tag unless
    ``find_all`` is set."""
    seen: dict[str, AxiomViolation] = {}
    out: list[AxiomViolation] = []
    for v in generator:
        if find_all:
            out.append(v)
        elif v.axiom not in seen:
            seen[v.axiom] = v
            out.append(v)
    return out


def _check_s(A: FiniteAlgebra, find_all: bool) -> list[AxiomViolation]:
    bp, comp, names = A._bp, A._comp, A.carrier
    zero, one = A.zero_index, A.one_index
    rng = range(A.k)

    def gen():
        for a, b in itertools.product(rng, repeat=2):
            if bp[a][b] != bp[b][a]:
                yield AxiomViolation("S1", (names[a], names[b]),
                                     names[bp[a][b]], names[bp[b][a]])
        for a, b, c in itertools.product(rng, repeat=3):
            if bp[a][bp[b][c]] != bp[bp[a][b]][c]:
                yield AxiomViolation("S2", (names[a], names[b], names[c]),
                                     names[bp[a][bp[b][c]]], names[bp[bp[a][b]][c]])
        for a in rng:
            if bp[a][comp[a]] != one:
                yield AxiomViolation("S3", (names[a],), names[bp[a][comp[a]]], names[one])
            if bp[a][zero] != a:
                yield AxiomViolation("S4", (names[a],), names[bp[a][zero]], names[a])
            if comp[comp[a]] != a:
                yield AxiomViolation("S5", (names[a],), names[comp[comp[a]]], names[a])
            if bp[a][one] != one:
                yield AxiomViolation("S6", (names[a],), names[bp[a][one]], names[one])

    return _harvest(gen(), find_all)


def _check_mv(A: FiniteAlgebra, find_all: bool) -> list[AxiomViolation]:
    bp, comp, names = A._bp, A._comp, A.carrier
    rng = range(A.k)

    def gen():
        for a, b in itertools.product(rng, repeat=2):
            lhs = bp[comp[bp[comp[a]][b]]][b]
            rhs = bp[comp[bp[a][comp[b]]]][a]
            if lhs != rhs:
                yield AxiomViolation("MV", (names[a], names[b]), names[lhs], names[rhs])

    return _harvest(gen(), find_all)


def _check_qmv(A: FiniteAlgebra, find_all: bool) -> list[AxiomViolation]:
    bp, comp, names = A._bp, A._comp, A.carrier
    qm, qj = A._qmeet, A._qjoin
    one = A.one_index
    rng = range(A.k)

    def gen():
        for a, b in itertools.product(rng, repeat=2):
            if qj[a][qm[b][a]] != a:
                yield AxiomViolation("QMV1", (names[a], names[b]),
                                     names[qj[a][qm[b][a]]], names[a])
            if bp[a][qm[comp[a]][b]] != bp[a][b]:
                yield AxiomViolation("QMV4", (names[a], names[b]),
                                     names[bp[a][qm[comp[a]][b]]], names[bp[a][b]])
            if qj[bp[comp[a]][b]][bp[comp[b]][a]] != one:
                yield AxiomViolation("QMV5", (names[a], names[b]),
                                     names[qj[bp[comp[a]][b]][bp[comp[b]][a]]], names[one])
        for a, b, c in itertools.product(rng, repeat=3):
            lhs2 = qm[qm[a][b]][c]
            rhs2 = qm[qm[a][b]][qm[b][c]]
            if lhs2 != rhs2:
                yield AxiomViolation("QMV2", (names[a], names[b], names[c]),
                                     names[lhs2], names[rhs2])
            t = comp[bp[a][c]]
            lhs3 = bp[a][qm[b][t]]
            rhs3 = qm[bp[a][b]][bp[a][t]]
            if lhs3 != rhs3:
                yield AxiomViolation("QMV3", (names[a], names[b], names[c]),
                                     names[lhs3], names[rhs3])

    return _harvest(gen(), find_all)


def _check_lattice(A: FiniteAlgebra, find_all: bool) -> list[AxiomViolation]:
    leq, names = A._leq, A.carrier
    rng = range(A.k)

    def gen():
        for a in rng:
            if not leq[a][a]:
                yield AxiomViolation("ORDER_REFLEXIVE", (names[a],),
                                     "a<=a false", "a<=a")
        for a, b in itertools.product(rng, repeat=2):
            if a != b and leq[a][b] and leq[b][a]:
                yield AxiomViolation("ORDER_ANTISYMMETRIC", (names[a], names[b]),
                                     "a<=b and b<=a", "a=b")
        for a, b, c in itertools.product(rng, repeat=3):
            if leq[a][b] and leq[b][c] and not leq[a][c]:
                yield AxiomViolation("ORDER_TRANSITIVE", (names[a], names[b], names[c]),
                                     "a<=c false", "a<=c")
        for a, b in itertools.product(rng, repeat=2):
            lower = [c for c in rng if leq[c][a] and leq[c][b]]
            glbs = [c for c in lower if all(leq[d][c] for d in lower)]
            if len(glbs) != 1:
                yield AxiomViolation("LATTICE_MEET", (names[a], names[b]),
                                     f"{len(glbs)} greatest lower bounds", "1")
            upper = [c for c in rng if leq[a][c] and leq[b][c]]
            lubs = [c for c in upper if all(leq[c][d] for d in upper)]
            if len(lubs) != 1:
                yield AxiomViolation("LATTICE_JOIN", (names[a], names[b]),
                                     f"{len(lubs)} least upper bounds", "1")

    return _harvest(gen(), find_all)


def _check_quasilinear(A: FiniteAlgebra, find_all: bool) -> list[AxiomViolation]:
    leq, qm, names = A._leq, A._qmeet, A.carrier
    rng = range(A.k)

    def gen():
        for a, b in itertools.product(rng, repeat=2):
            if not leq[a][b] and qm[a][b] != b:
                yield AxiomViolation("QUASILINEAR", (names[a], names[b]),
                                     names[qm[a][b]], names[b])

    return _harvest(gen(), find_all)


def _check_linear(A: FiniteAlgebra, find_all: bool) -> list[AxiomViolation]:
    leq, names = A._leq, A.carrier
    rng = range(A.k)

    def gen():
        for a, b in itertools.product(rng, repeat=2):
            if not leq[a][b] and not leq[b][a]:
                yield AxiomViolation("LINEAR", (names[a], names[b]),
                                     "incomparable", "comparable")

    return _harvest(gen(), find_all)


def _check_locally_finite(A: FiniteAlgebra, find_all: bool) -> list[AxiomViolation]:
    bp, names = A._bp, A.carrier
    zero, one = A.zero_index, A.one_index
    rng = range(A.k)

    def gen():
        for a in rng:
            if a == zero:
                continue
            acc = a
            seen = set()
            while acc != one and acc not in seen:
                seen.add(acc)
                acc = bp[acc][a]
            if acc != one:
                yield AxiomViolation("LOCALLY_FINITE", (names[a],),
                                     f"n*a cycles within {{{', '.join(names[i] for i in sorted(seen))}}}",
                                     names[one])

    return _harvest(gen(), find_all)


def _check_distributive(A: FiniteAlgebra, find_all: bool) -> list[AxiomViolation]:
    if not A.is_lattice:
        raise NotLatticeError(
            f"DISTRIBUTIVE check requires a lattice order; {A.name} is not a lattice"
        )
    bp, meet, names = A._bp, A._meet, A.carrier
    rng = range(A.k)

    def gen():
        for a, b, c in itertools.product(rng, repeat=3):
            lhs = meet[bp[a][b]][bp[a][c]]
            rhs = bp[a][meet[b][c]]
            if lhs != rhs:
                yield AxiomViolation("DISTRIBUTIVE", (names[a], names[b], names[c]),
                                     names[lhs], names[rhs])

    return _harvest(gen(), find_all)


def _check_effect(P: PartialEffectTable, find_all: bool) -> list[AxiomViolation]:
    k = len(P.carrier)
    names = P.carrier
    op = P.oplus
    zero, one = P.index(P.zero), P.index(P.one)
    idx = {n: i for i, n in enumerate(names)}

    def val(a: int, b: int) -> int | None:
        entry = op[a][b]
        return None if entry is None else idx[entry]

    rng = range(k)

    def gen():
        for a, b in itertools.product(rng, repeat=2):
            ab, ba = val(a, b), val(b, a)
            if (ab is None) != (ba is None):
                yield AxiomViolation("E1", (names[a], names[b]),
                                     "defined" if ab is not None else "undefined",
                                     "defined" if ba is not None else "undefined")
            elif ab is not None and ab != ba:
                yield AxiomViolation("E1", (names[a], names[b]), names[ab], names[ba])
        for a, b, c in itertools.product(rng, repeat=3):
            bc = val(b, c)
            if bc is None:
                continue
            abc = val(a, bc)
            if abc is None:
                continue
            ab = val(a, b)
            if ab is None:
                yield AxiomViolation("E2", (names[a], names[b], names[c]),
                                     "a+b undefined", "a+b defined")
                continue
            ab_c = val(ab, c)
            if ab_c is None:
                yield AxiomViolation("E2", (names[a], names[b], names[c]),
                                     "(a+b)+c undefined", "(a+b)+c defined")
            elif ab_c != abc:
                yield AxiomViolation("E2", (names[a], names[b], names[c]),
                                     names[ab_c], names[abc])
        for a in rng:
            partners = [b for b in rng if val(a, b) == one]
            if len(partners) != 1:
                yield AxiomViolation("E3", (names[a],),
                                     f"{len(partners)} partners reach 1", "1")
        for a in rng:
            if val(one, a) is not None and a != zero:
                yield AxiomViolation("E4", (names[a],), names[a], names[zero])

    return _harvest(gen(), find_all)


# ---------------------------------------------------------------------------
# closures and totalization


def subalgebra_closure(
    algebra: FiniteAlgebra,
    seed: Iterable[Element],
    cap: int | None = None,
) -> frozenset[Element]:
    """Smallest superset of ``seed`` and {0, 1} closed under sum, complement
    and (when the order is a lattice) binary meet and join.

    ``cap`` bounds the intermediate size; exceeding it raises
    :class:`CapExceededError`.  For a finite algebra the closure is at most
    the whole carrier, so the cap only ever fires when set below that.
    """
    if cap is not None and cap <= 0:
        raise AlgebraError("cap must be positive")
    seed = list(seed)
    algebra._own(*seed)
    current = {algebra.zero_index, algebra.one_index}
    current.update(e.index for e in seed)
    bp, comp = algebra._bp, algebra._comp
    meet, join = algebra._meet, algebra._join
    while True:
        if cap is not None and len(current) > cap:
            raise CapExceededError(
                f"closure exceeded cap {cap} (size {len(current)})"
            )
        new = set()
        items = sorted(current)
        for a in items:
            if comp[a] not in current:
                new.add(comp[a])
            for b in items:
                if bp[a][b] not in current:
                    new.add(bp[a][b])
                if algebra.is_lattice:
                    if meet[a][b] not in current:
                        new.add(meet[a][b])
                    if join[a][b] not in current:
                        new.add(join[a][b])
        if not new:
            break
        current |= new
    if cap is not None and len(current) > cap:
        raise CapExceededError(f"closure exceeded cap {cap} (size {len(current)})")
    return frozenset(Element(algebra, i) for i in current)


def boxplus_closure(algebra: FiniteAlgebra, seed: Iterable[Element]) -> frozenset[Element]:
    """All finite sums of seed elements, with 0 adjoined."""
    seed = list(seed)
    algebra._own(*seed)
    seed_idx = sorted({e.index for e in seed})
    current = set(seed_idx) | {algebra.zero_index}
    bp = algebra._bp
    while True:
        new = {
            bp[a][r]
            for a in current
            for r in seed_idx
            if bp[a][r] not in current
        }
        if not new:
            break
        current |= new
    return frozenset(Element(algebra, i) for i in current)


def extend_effect(table: PartialEffectTable, name: str | None = None) -> FiniteAlgebra:
    """Totalize an effect table: undefined sums become 1, the complement of
    ``a`` is its unique partner with ``a + b = 1``.

    The table must pass the EFFECT axioms; the result is tagged as having
    extended-effect origin.
    """
    report = check_axioms(table, "EFFECT")
    if not report.passed:
        raise EffectAlgebraError(str(report))
    k = len(table.carrier)
    one = table.one
    boxplus = [
        [table.oplus[a][b] if table.oplus[a][b] is not None else one for b in range(k)]
        for a in range(k)
    ]
    idx = {n: i for i, n in enumerate(table.carrier)}
    complement = [None] * k
    for a in range(k):
        partners = [b for b in range(k) if table.oplus[a][b] == one]
        complement[a] = table.carrier[partners[0]]
    return FiniteAlgebra(
        name if name is not None else table.name,
        table.carrier,
        table.zero,
        table.one,
        boxplus,
        complement,
        extended_effect=True,
    )


def effect_order(table: PartialEffectTable, a: str, b: str) -> bool:
    """The effect-algebra order: a <= b iff a + c = b for some c."""
    ai, bi = table.index(a), table.index(b)
    return any(table.oplus[ai][c] == table.carrier[bi] for c in range(len(table.carrier)))


# ---------------------------------------------------------------------------
# built-in algebras


def lukasiewicz(n: int) -> FiniteAlgebra:
    """The n-element chain 0, 1/(n-1), ..., 1 with truncated addition."""
    if n < 2:
        raise AlgebraError("lukasiewicz chain needs at least 2 elements")
    fractions = [Fraction(i, n - 1) for i in range(n)]
    names = [str(f) for f in fractions]
    boxplus = [[str(min(Fraction(1), a + b)) for b in fractions] for a in fractions]
    complement = [str(1 - a) for a in fractions]
    return FiniteAlgebra(f"lukasiewicz({n})", names, "0", "1", boxplus, complement)


def diamond_effect_table() -> PartialEffectTable:
    """The four-element diamond: 0 < p, q < 1 with p + q = 1 the only
    nontrivial defined sum."""
    names = ("0", "p", "q", "1")
    defined = {
        ("0", "0"): "0", ("0", "p"): "p", ("0", "q"): "q", ("0", "1"): "1",
        ("p", "0"): "p", ("q", "0"): "q", ("1", "0"): "1",
        ("p", "q"): "1", ("q", "p"): "1",
    }
    oplus = tuple(
        tuple(defined.get((a, b)) for b in names) for a in names
    )
    return PartialEffectTable("diamond", names, "0", "1", oplus)


def diamond() -> FiniteAlgebra:
    """Totalization of the diamond effect table: a quasilinear quantum MV
    algebra that is not an MV algebra."""
    return extend_effect(diamond_effect_table())


def chain_effect_table(n: int) -> PartialEffectTable:
    """The n-element chain as an effect table: a + b defined iff a + b <= 1."""
    if n < 2:
        raise AlgebraError("chain needs at least 2 elements")
    fractions = [Fraction(i, n - 1) for i in range(n)]
    names = tuple(str(f) for f in fractions)
    oplus = tuple(
        tuple(str(a + b) if a + b <= 1 else None for b in fractions)
        for a in fractions
    )
    return PartialEffectTable(f"chain-effect({n})", names, "0", "1", oplus)


def product_algebra(A: FiniteAlgebra, B: FiniteAlgebra, name: str | None = None) -> FiniteAlgebra:
    """Componentwise product; element names are ``(a,b)`` pairs."""
    pairs = [(a, b) for a in A.carrier for b in B.carrier]
    names = [f"({a},{b})" for a, b in pairs]
    pos = {p: i for i, p in enumerate(pairs)}

    def pair_name(ai: int, bi: int) -> str:
        return names[pos[(A.carrier[ai], B.carrier[bi])]]

    boxplus = []
    complement = []
    for a1, b1 in pairs:
        i1, j1 = A._index[a1], B._index[b1]
        complement.append(pair_name(A._comp[i1], B._comp[j1]))
        row = []
        for a2, b2 in pairs:
            i2, j2 = A._index[a2], B._index[b2]
            row.append(pair_name(A._bp[i1][i2], B._bp[j1][j2]))
        boxplus.append(row)
    zero = pair_name(A.zero_index, B.zero_index)
    one = pair_name(A.one_index, B.one_index)
    return FiniteAlgebra(
        name if name is not None else f"product({A.name},{B.name})",
        names, zero, one, boxplus, complement,
    )


def builtin_algebra(spec: str) -> FiniteAlgebra:
    """Resolve a builtin algebra spec: ``lukasiewicz(N)``, ``diamond``, or
    ``product(SPEC,SPEC)`` with arbitrary nesting."""
    algebra, rest = _parse_builtin(spec.strip())
    if rest.strip():
        raise AlgebraError(f"trailing input in algebra spec: {rest!r}")
    return algebra


def _parse_builtin(text: str) -> tuple[FiniteAlgebra, str]:
    text = text.lstrip()
    head = ""
    for ch in text:
        if ch.isalnum() or ch == "_":
            head += ch
        else:
            break
    rest = text[len(head):].lstrip()
    if head == "diamond":
        return diamond(), rest
    if head == "lukasiewicz":
        if not rest.startswith("("):
            raise AlgebraError("lukasiewicz requires a size, e.g. lukasiewicz(3)")
        close = rest.index(")")
        n = int(rest[1:close])
        return lukasiewicz(n), rest[close + 1:]
    if head == "product":
        if not rest.startswith("("):
            raise AlgebraError("product requires two arguments")
        first, rest = _parse_builtin(rest[1:])
        rest = rest.lstrip()
        if not rest.startswith(","):
            raise AlgebraError("product requires two arguments")
        second, rest = _parse_builtin(rest[1:])
        rest = rest.lstrip()
        if not rest.startswith(")"):
            raise AlgebraError("unclosed product(...)")
        return product_algebra(first, second), rest[1:]
    raise AlgebraError(f"unknown builtin algebra {head!r}")
