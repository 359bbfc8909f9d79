"""CSV emission and parsing of experiment tables."""
# License: GNU AGPLv3

import pandas as pd

FLOAT_FORMAT = "%.17g"


def write_table(frame, path):
    """Write `frame` as UTF-8 CSV with a header row, LF line endings,
    17 significant digits and empty cells for missing values."""
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, na_rep='',
                 lineterminator='\n', encoding='utf-8')


def read_table(path):
    """Read a table written by :func:`write_table`, reproducing its float
    values exactly."""
    return pd.read_csv(path, float_precision='round_trip', encoding='utf-8')
