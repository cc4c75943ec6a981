from .axes import AXES, Linspace, Logspace, Values, build_axis
from .frequency import parse_frequency
from .spec import CSV_COLUMNS, SweepRow, SweepSpec, load_config, spec_hash, validate_config
from .runner import audit_rows, build_point, evaluate_point, run_points, run_sweep
from .writer import read_csv, write_csv
