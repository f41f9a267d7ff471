"""Exhaustive structure analysis of finite rings and modules.

Finite rings and modules are given by full operation tables; every
structural notion (small/essential submodules, radical, socle, hollow and
uniform dimension, weak supplements, endomorphism dualities) is decided by
exhaustive lattice algorithms, with independent computation routes
cross-checked against each other.
"""

__version__ = "0.1.0"

from .config import Caps, active_caps
from .core import (
    FiniteModule,
    FiniteRing,
    ModuleHom,
    Submodule,
    cyclic_ring,
    direct_sum,
    direct_sum_maps,
    matrix_ring,
    module_from_spec,
    opposite_ring,
    product_ring,
    quotient_module,
    regular_module,
    ring_from_spec,
    submodule_as_module,
    tables_ring,
    triangular_ring,
    validate,
)
from .dimension import (
    DimensionProfile,
    HollowDecomposition,
    camps_dicks_d,
    dimension_profile,
    hollow_dimension,
    is_hollow,
    is_semisimple,
    is_uniform,
    length,
    radical,
    socle,
    uniform_dimension,
    verify_d_axioms,
)
from .endo import (
    BimoduleView,
    HomSet,
    endomorphism_ring,
    hom_module_over_end,
    hom_set,
    is_cogenerator,
    is_injective,
    is_self_projective,
    verify_good_module,
    verify_page,
    verify_takeuchi,
)
from .errors import (
    CapExceeded,
    InputError,
    InternalCheckError,
    ModlatError,
    PreconditionError,
    ValidationError,
)
from .harness import (
    CorpusEntry,
    builtin_corpus,
    report_body,
    report_ok,
    run_verification,
)
from .kernels import BACKEND
from .lattice import (
    SubmoduleLattice,
    complement_of,
    generated_submodule,
    is_coindependent,
    is_essential,
    is_small,
    refine_coindependent_fg,
    submodule_lattice,
)
from .ringclass import (
    RingProfile,
    classify,
    element_d_function,
    is_semiregular_by_weak_supplements,
    jacobson_radical,
    units,
    verify_lemma_ra_rb,
)
from .supplements import (
    FreeCoverCertificate,
    WeakSupplementWitness,
    find_supplement,
    find_weak_supplement,
    free_cover_decomposition,
    is_semilocal_module,
    is_supplemented,
    is_weakly_supplemented,
    push_forward_weak_supplement,
    pull_back_weak_supplement,
    semisimple_quotient_decomposition,
    weak_supplement_from_summands,
)
