"""Geometric entanglement and discord of two-qubit Bell-diagonal and X states
under local decoherence channels, with brute-force verification oracles."""

from .channels import (
    ChannelKind,
    KrausChannel,
    apply_local_pair,
    decay_factors,
    evolved_vector,
    kraus_for,
    parse_channel_spec,
)
from .dynamics import (
    ContractivityReport,
    EventRecord,
    Trajectory,
    TrajectorySample,
    contractivity_scan,
    d_vs_e_curve,
    run_trajectory,
)
from .errors import (
    BranchUnknown,
    DegenerateOrdering,
    EmptyWindow,
    NonPhysical,
    NotEntangled,
    NumericalFailure,
    OutOfRange,
    QcorrError,
    WindowViolation,
)
from .oracles import (
    OracleResult,
    SeparableXCandidate,
    clamped_minimizer,
    closest_classical,
    closest_separable_hs,
    closest_separable_trace_xfamily,
    golden_section_min,
    trace_norm,
)
from .quantifiers import (
    Measure,
    Norm,
    QuantifierValue,
    concurrence_x,
    hs_discord,
    hs_entanglement,
    trace_discord,
    trace_entanglement,
    wootters_concurrence,
)
from .relations import (
    CriticalTimes,
    RelationCase,
    critical_times,
    hs_branch_at,
    hs_discord_from_entanglement,
    ordering,
    piecewise_discord_pd_trace,
    sudden_death_time,
    trace_discord_from_concurrence,
    trace_piece_at,
)
from .states import (
    CorrelationVector,
    RegionLabel,
    XState,
    bd_to_density,
    bd_to_xstate,
    bell_eigenvalues,
    classify_region,
    density_to_bd,
    is_entangled_ppt,
    partial_transpose,
    validate_density,
)
from .verify import physical_grid, report_to_json, run_verification

__version__ = "0.1.0"
