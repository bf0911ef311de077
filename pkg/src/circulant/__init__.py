"""Circulant graph isomorphism toolkit."""

from .core import (
    CirculantGraph,
    CycleStats,
    DirectedJumpSet,
    JumpSet,
    edge_set,
    make_circulant,
    period_cycle_stats,
    reflexive_reduce,
    scale,
    symmetric_closure,
)
from .errors import (
    BudgetExceeded,
    CirculantError,
    DegenerateFamily,
    EmptyConnectionSet,
    InvalidFamilyParams,
    InvalidJump,
    InvalidThetaParams,
    NotAUnit,
    OrderMismatch,
    SubgroupViolation,
    VerificationFailure,
)
from .families import (
    FamilyClaim,
    FamilyInstance,
    FamilyVerification,
    ThetaRelation,
    family_general_p,
    family_m2,
    family_m2_general,
    family_m3,
    family_m3_general,
    family_m5,
    family_m5_general,
    family_m7,
    family_m7_general,
    family_verify,
)
from .groups import (
    AppendedJumpReport,
    CensusRecord,
    CensusResult,
    CensusSummary,
    OrbitGroup,
    Type2Set,
    VSet,
    appended_jump_check,
    census,
    t2_group,
    t2_set,
    t2_set_equality,
    v_group,
    v_set,
)
from .oracle import (
    GcdSignature,
    IsoWitness,
    brute_force_isomorphic,
    gcd_signature,
    gcd_signature_check,
    spectral_fingerprint,
    verify_theta_witness,
)
from .theta import (
    LabeledGraph,
    TableRow,
    TClassification,
    ThetaParams,
    ThetaValidity,
    Verdict,
    check_theta_params,
    classification_table,
    classify_t,
    detect_circulant,
    theta_image,
    theta_vertex,
)
from .type1 import (
    Type1Group,
    Type1Set,
    UnitGroup,
    phi_apply,
    type1_group,
    type1_set,
    type1_set_equality,
    type1_witnesses,
    units,
)

__all__ = [name for name in dir() if not name.startswith("_")]
