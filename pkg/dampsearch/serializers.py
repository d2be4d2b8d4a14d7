"""
dampsearch Serialization
Deterministic CSV and JSON rendering for spectra, curves and summaries

Floats carry a fixed number of significant digits, files use LF endings and
JSON keys are sorted, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np

from .analysis import ExpectedIterationsResult
from .constants import (
    CURVE_CSV_HEADER,
    EXPECTED_CSV_HEADER,
    SIGNIFICANT_DIGITS,
    SPECTRUM_CSV_HEADER,
)
from .core import ProbabilityCurve
from .spectrum import EnergySpectrum


@dataclass(frozen=True)
class SerializerConfig:
    """Formatting options shared by every writer"""

    significant_digits: int = SIGNIFICANT_DIGITS
    indent: int = 2


DEFAULT_SERIALIZER = SerializerConfig()


def format_number(value: Any, digits: int = SIGNIFICANT_DIGITS) -> str:
    """Integers verbatim, floats to ``digits`` significant digits"""
    if isinstance(value, bool):
        raise TypeError("Booleans are not numbers here")
    if isinstance(value, int | np.integer):
        return str(int(value))
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"Cannot serialize non-finite value {value}")
    text = format(value, f".{digits}g")
    return "0" if text == "-0" else text


def round_significant(value: float, digits: int = SIGNIFICANT_DIGITS) -> float:
    return float(format_number(float(value), digits))


def normalize(obj: Any, digits: int = SIGNIFICANT_DIGITS) -> Any:
    """
    Prepare a structure for JSON: numpy scalars and arrays become Python
    values, floats are rounded, non-finite floats become None.
    """
    if isinstance(obj, Mapping):
        return {str(k): normalize(v, digits) for k, v in obj.items()}
    if isinstance(obj, list | tuple):
        return [normalize(v, digits) for v in obj]
    if isinstance(obj, np.ndarray):
        return [normalize(v, digits) for v in obj.tolist()]
    if isinstance(obj, bool | np.bool_):
        return bool(obj)
    if isinstance(obj, int | np.integer):
        return int(obj)
    if isinstance(obj, float | np.floating):
        value = float(obj)
        if not math.isfinite(value):
            return None
        return round_significant(value, digits)
    return obj


def dumps_json(obj: Any, config: SerializerConfig = DEFAULT_SERIALIZER) -> str:
    normalized = normalize(obj, config.significant_digits)
    return json.dumps(normalized, indent=config.indent, sort_keys=True) + "\n"


def _csv(header: str, rows: Iterable[Iterable[str]]) -> str:
    lines = [header]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def spectrum_to_csv(spectrum: EnergySpectrum) -> str:
    """``lambda,degeneracy`` rows, lambda ascending in units of epsilon"""
    return _csv(
        SPECTRUM_CSV_HEADER,
        ((str(e.lambda_units), str(e.degeneracy)) for e in spectrum.entries),
    )


def spectrum_to_json(
    spectrum: EnergySpectrum, config: SerializerConfig = DEFAULT_SERIALIZER
) -> str:
    return dumps_json(spectrum.to_dict(), config)


def curve_to_csv(
    curve: ProbabilityCurve, config: SerializerConfig = DEFAULT_SERIALIZER
) -> str:
    """``j,p_success`` rows for j = 1..j_max"""
    digits = config.significant_digits
    return _csv(
        CURVE_CSV_HEADER,
        (
            (str(j), format_number(p, digits))
            for j, p in zip(curve.iterations.tolist(), curve.p.tolist(), strict=True)
        ),
    )


def curve_to_json(
    curve: ProbabilityCurve,
    provenance: Mapping[str, Any],
    config: SerializerConfig = DEFAULT_SERIALIZER,
) -> str:
    document = {
        **curve.model.to_dict(),
        **provenance,
        "points": [
            {"j": j, "p_success": p}
            for j, p in zip(curve.iterations.tolist(), curve.p.tolist(), strict=True)
        ],
    }
    return dumps_json(document, config)


def provenance_line(
    provenance: Mapping[str, Any], config: SerializerConfig = DEFAULT_SERIALIZER
) -> str:
    """``key=value`` pairs in key order; None values are left out"""
    parts = []
    for key in sorted(provenance):
        value = provenance[key]
        if value is None:
            continue
        if not isinstance(value, str):
            value = format_number(value, config.significant_digits)
        parts.append(f"{key}={value}")
    return " ".join(parts)


def expected_to_csv(
    curve: ProbabilityCurve,
    result: ExpectedIterationsResult,
    config: SerializerConfig = DEFAULT_SERIALIZER,
) -> str:
    """
    ``j,p_success,expected_iterations`` rows.

    E(j) is left empty where P(j) = 0.
    """
    digits = config.significant_digits
    rows = []
    for j, p, e in zip(
        curve.iterations.tolist(),
        curve.p.tolist(),
        result.e_curve.tolist(),
        strict=True,
    ):
        expected = format_number(e, digits) if math.isfinite(e) else ""
        rows.append((str(j), format_number(p, digits), expected))
    return _csv(EXPECTED_CSV_HEADER, rows)


def write_text(path: str | Path, content: str) -> Path:
    """Write with LF line endings, creating parent directories"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(content)
    return path
