"""Spectral laboratory for Harper-like and magnetic Schrodinger operators."""

from ._core import (  # noqa: F401
    ConfigError,
    DecayType,
    DefectReport,
    Grid,
    HarperModel,
    HolderFit,
    KernelOperator,
    MagneticField,
    ModelKind,
    ModelSpec,
    NumericError,
    PartitionOfUnity,
    PhaseFunction,
    PhaseReport,
    ResolventCertificate,
    SHNormResult,
    Spectrum,
    SweepTable,
    build_harper,
    build_mag_schrodinger,
    build_partition,
    certify_resolvent_point,
    default_b_grid,
    defect,
    defect_split,
    eigvalsh,
    fit_holder,
    hausdorff,
    kernel_from_json,
    line_phase,
    op_norm,
    resolvent,
    sh_norm,
    spectral_distance,
    sweep_defect,
    sweep_hausdorff,
    transverse_gauge,
    truncate,
    twist,
    uniformity_defect,
    validate_phase,
    __version__,
)
