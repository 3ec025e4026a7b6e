"""
output.py - JSON and CSV writers

JSON is the machine interface of every command. Keys keep the order the
command built them in and floats are written with repr(), which round-trips
exactly, so the same run always produces the same bytes. NaN and infinities
have no JSON spelling and are written as null.
"""

import csv
import io
import json
import math
import sys
import logging

import numpy as np

logger = logging.getLogger(__name__)

# header of every curve CSV
CSV_HEADER = ('theta', 'curve', 're', 'im')

# header of eval results written as CSV
EVAL_HEADER = ('z_re', 'z_im', 'f_re', 'f_im')


def to_plain(value):
    """turn numpy scalars, complex numbers and tuples into JSON-safe python values"""
    if isinstance(value, dict):
        return {str(key): to_plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_plain(item) for item in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return {'re': to_plain(value.real), 'im': to_plain(value.imag)}
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def format_json(payload):
    return json.dumps(to_plain(payload), indent=2, allow_nan=False, ensure_ascii=False) + "\n"


def format_number(value):
    """shortest round-trip text of a float; empty for non-finite values"""
    value = float(value)
    return repr(value) if math.isfinite(value) else ''


def format_csv(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([cell if isinstance(cell, str) else format_number(cell) for cell in row])
    return buffer.getvalue()


def curve_rows(name, thetas, values):
    """rows (theta, name, re, im) of one sampled curve"""
    return [(theta, name, value.real, value.imag) for theta, value in zip(thetas, values)]


def write_text(text, path=None):
    """write to `path` as UTF-8, or to stdout when no path is given"""
    if path:
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
        logger.info(f"Wrote {len(text)} characters to {path}")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
