"""Turing machines valued in finite lattice-ordered quantum MV algebras.

The package splits into:

* :mod:`qmvtm.algebra` — finite table-driven algebras, axiom checking,
  closures, effect-table totalization, built-ins;
* :mod:`qmvtm.machine` — the machine model, configurations, single-step
  values, reachability;
* :mod:`qmvtm.semantics` — depth-first and width-first language values
  under an exploration budget, with dominance pruning;
* :mod:`qmvtm.transforms` — classicalizations of the initial, final and
  transition maps, plus example-machine builders;
* :mod:`qmvtm.harness` — theorem-level verification suites and the bundled
  corpus;
* :mod:`qmvtm.serialize` / :mod:`qmvtm.report` / :mod:`qmvtm.cli` — file
  formats, report rendering and the command-line front end.
"""

from .algebra import (
    AlgebraError,
    AlgebraMismatchError,
    AxiomReport,
    AxiomViolation,
    CapExceededError,
    EffectAlgebraError,
    Element,
    FiniteAlgebra,
    NotLatticeError,
    PartialEffectTable,
    boxplus_closure,
    builtin_algebra,
    chain_effect_table,
    check_axioms,
    diamond,
    diamond_effect_table,
    extend_effect,
    lukasiewicz,
    product_algebra,
    subalgebra_closure,
)
from .harness import (
    EquivReport,
    Fixture,
    SweepReport,
    VerificationReport,
    build_corpus,
    catalog,
    enumerate_small_algebras,
    equiv_check,
    mv_distributivity_theorem_check,
    order_check,
    proposition_sweep,
    run_full_verification,
)
from .machine import (
    Configuration,
    InputError,
    InvalidMachineError,
    Machine,
    MachineError,
    MachineFlags,
    TransitionLabel,
    canonical_configuration,
)
from .semantics import (
    Budget,
    EvalResult,
    KVector,
    dominates,
    eval_depth,
    eval_width,
    label_basis,
    path_value,
    path_vector,
)
from .serialize import (
    LoadError,
    load_algebra_file,
    load_machine_file,
    loads_algebra,
    loads_effect_table,
    loads_machine,
    resolve_algebra,
    save_algebra,
    save_machine,
)
from .transforms import (
    TransformInfo,
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

__version__ = "0.1.0"
