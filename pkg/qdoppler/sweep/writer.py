import os

import pandas as pd

from .. import __version__
from .spec import CSV_COLUMNS

FLOAT_FORMAT = '%.17g'


def rows_to_frame(rows):
    return pd.DataFrame([row._asdict() for row in rows], columns=list(CSV_COLUMNS))


def write_csv(rows, path, spec_hash):
    """``# qdoppler <version> spec <hash>``, then the header and one line per row."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    df = rows_to_frame(rows)
    with open(path, 'w', newline='') as f:
        f.write(f'# qdoppler {__version__} spec {spec_hash}\n')
        df.to_csv(f, index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
    return path


def read_csv(path):
    return pd.read_csv(path, comment='#', float_precision='round_trip')
