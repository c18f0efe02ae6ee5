"""Dissimilarity measures between equal-mass nonnegative-integer 2D grids.

Three measures over a pair of same-shape grids with equal total mass:

- ``mwd_exact``: the exact earth mover's distance under Manhattan ground
  cost, with an optimal transport plan.
- ``qmwd``: a fast quasi distance built from three directional 1D
  Wasserstein distances (row-major, rotated, transposed vectorizations).
- ``wd_1d`` over ``vec_row_major``: the raw 1D distance on flattened
  grids, the baseline the quasi distance improves on.

Plus a benchmark harness (``run_sweep``/``aggregate``) comparing accuracy
and runtime of the fast measures against the exact one, with CSV and SVG
output, exposed on the command line as ``gridemd``.
"""

from .bench import (
    BenchRecord,
    RECORDS_CSV_HEADER,
    SUMMARY_CSV_HEADER,
    SweepConfig,
    SweepSummary,
    aggregate,
    derive_seed,
    emit_records_csv,
    emit_summary_csv,
    equalize_mass,
    gen_random_grid,
    read_records_csv,
    run_sweep,
)
from .charts import emit_svg
from .errors import (
    AllZeroError,
    BadTokenError,
    DimensionMismatchError,
    EmptyGridError,
    EmptyInputError,
    GridEmdError,
    InputFormatError,
    LengthMismatchError,
    MassMismatchError,
    MassTooLargeError,
    NegativeEntryError,
    PreconditionError,
    RaggedRowsError,
    ResidueTooLargeError,
)
from .grid import (
    GridHistogram,
    MassVector,
    format_grid,
    parse_grid,
    rotate90,
    total_mass,
    transpose,
    vec_row_major,
)
from .mwd import (
    Move,
    MwdResult,
    manhattan_cost,
    mwd_exact,
    mwd_oracle_assignment,
    plan_cost,
)
from .qmwd import QmwdBreakdown, directional_estimate, normalize_pair, qmwd, qmwd_value
from .wd1d import wd_1d, wd_1d_oracle

__version__ = "0.1.0"

__all__ = [
    "AllZeroError",
    "BadTokenError",
    "BenchRecord",
    "DimensionMismatchError",
    "EmptyGridError",
    "EmptyInputError",
    "GridEmdError",
    "GridHistogram",
    "InputFormatError",
    "LengthMismatchError",
    "MassMismatchError",
    "MassTooLargeError",
    "MassVector",
    "Move",
    "MwdResult",
    "NegativeEntryError",
    "PreconditionError",
    "QmwdBreakdown",
    "RECORDS_CSV_HEADER",
    "RaggedRowsError",
    "ResidueTooLargeError",
    "SUMMARY_CSV_HEADER",
    "SweepConfig",
    "SweepSummary",
    "aggregate",
    "derive_seed",
    "directional_estimate",
    "emit_records_csv",
    "emit_summary_csv",
    "emit_svg",
    "equalize_mass",
    "format_grid",
    "gen_random_grid",
    "manhattan_cost",
    "mwd_exact",
    "mwd_oracle_assignment",
    "normalize_pair",
    "parse_grid",
    "plan_cost",
    "qmwd",
    "qmwd_value",
    "read_records_csv",
    "rotate90",
    "run_sweep",
    "total_mass",
    "transpose",
    "vec_row_major",
    "wd_1d",
    "wd_1d_oracle",
]
