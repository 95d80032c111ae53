"""CSV helpers that round-trip float64 values bit-exactly."""

from __future__ import annotations

import csv
from pathlib import Path


class DataFormatError(ValueError):
    """Malformed input file; the message carries the offending line number."""


def fmt(x) -> str:
    # repr of a Python float is the shortest string that parses back exactly
    return repr(float(x))


def write_rows(path, header, rows):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for row in rows:
            w.writerow([fmt(v) if isinstance(v, (float, int)) and not isinstance(v, bool) else v for v in row])
    return path


def read_rows(path, required):
    """Yield ``(line_number, row_dict)``; the header must contain ``required``."""
    path = Path(path)
    try:
        fh = path.open(newline="")
    except OSError as exc:
        raise FileNotFoundError(f"{path}: {exc.strerror}") from exc
    with fh:
        reader = csv.DictReader(fh)
        header = [h.strip() for h in (reader.fieldnames or [])]
        missing = [c for c in required if c not in header]
        if missing:
            raise DataFormatError(f"{path}:1: missing column(s) {', '.join(missing)}; header is {header}")
        reader.fieldnames = header
        for row in reader:
            yield reader.line_num, {k: (v.strip() if isinstance(v, str) else v) for k, v in row.items()}


def parse_float(path, line, name, text) -> float:
    try:
        return float(text)
    except (TypeError, ValueError):
        raise DataFormatError(f"{path}:{line}: column {name!r} is not a number: {text!r}") from None
