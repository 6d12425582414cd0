"""Tabular rendering for the command-line front end."""
from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import mpmath

FORMATS = ("csv", "json", "tsv")


@dataclass(frozen=True)
class OutputSpec:
    format: str = "csv"
    decimals: int = 12
    destination: Path | None = None

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if not 0 <= self.decimals <= 30:
            raise ValueError("decimals must lie in [0, 30]")


def exact(value) -> Fraction:
    """Exact rational value of an int, Fraction or mpmath real."""
    if isinstance(value, mpmath.ctx_mp_python._mpf):
        man, exp = value.man_exp
        return Fraction(man) * Fraction(2) ** exp
    return Fraction(value)


def render_decimal(value, decimals: int, trim: bool = False) -> str:
    """Fixed-point string rounded half away from zero.

    With ``trim`` trailing zeros and a bare point are dropped, so 1.0 -> "1".
    """
    q = exact(value)
    scaled = abs(q) * 10 ** decimals
    digits = int(scaled + Fraction(1, 2))
    sign = "-" if q < 0 and digits else ""
    text = str(digits).rjust(decimals + 1, "0")
    if decimals:
        text = f"{text[:-decimals]}.{text[-decimals:]}"
        if trim:
            text = text.rstrip("0").rstrip(".")
    return sign + text


def render_fraction(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    return value


def format_rows(columns: list[str], rows: list[list], spec: OutputSpec, meta: dict) -> str:
    if spec.format == "json":
        doc = {"meta": meta, "rows": [dict(zip(columns, row)) for row in rows]}
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    delimiter = "\t" if spec.format == "tsv" else ","
    writer = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def emit(text: str, spec: OutputSpec) -> None:
    if spec.destination is None:
        sys.stdout.write(text)
    else:
        Path(spec.destination).write_text(text, encoding="utf-8", newline="")
