"""Twin-width toolkit: contraction sequences with replayable certificates."""
from .trigraph import (
    ContractionSequence,
    ContractionStep,
    SequenceError,
    Trigraph,
    VerificationReport,
    apply_sequence,
    boundary_size,
    contract,
    max_red_degree,
    red_degree,
    symmetric_difference_size,
)
from .generators import GraphFamilySpec, family, gnp, paley, random_tree
from .bounds import (
    BoundedSequence,
    best_upper_bound,
    lower_bound_min_symdiff,
    paley_sequence,
    theorem1_sequence,
    theorem2_sequence,
)
from .exact import Unknown, decide_at_most, exact_solve, exact_twinwidth
from .lattice import LatticeQuery, count_crossing_paths, crossing_probability
from .experiments import ExperimentConfig, ExperimentRecord, regime_classify, run_experiment

__version__ = "0.1.0"
