"""JSON system documents: serialization, parsing, atomic writes.

A document records one surface plus its curve list (empty in analytic,
counts-only mode), optionally extended by a crossing report and a
distinctness certificate.  JSON keeps desk-scale systems inspectable by eye;
round-tripping is stable field for field, and writes go through a temp file
plus rename so readers never see a partial document.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .curves import Curve, CrossingReport, CurveSystem, SparsityThreshold
from .errors import DocumentError
from .homology import DistinctnessCertificate
from .surfaces import CompositeSurface

SCHEMA_VERSION = 1


@dataclass
class SystemDocument:
    surface: CompositeSurface
    curves: tuple[Curve, ...]
    analytic: bool = False
    report: Optional[CrossingReport] = None
    certificate: Optional[DistinctnessCertificate] = None

    def system(self) -> CurveSystem:
        return CurveSystem(
            surface=self.surface, curves=self.curves, analytic=self.analytic
        )

    @staticmethod
    def from_system(
        system: CurveSystem,
        report: Optional[CrossingReport] = None,
        certificate: Optional[DistinctnessCertificate] = None,
    ) -> "SystemDocument":
        return SystemDocument(
            surface=system.surface,
            curves=system.curves,
            analytic=system.analytic,
            report=report or system.report,
            certificate=certificate,
        )


def _fraction_text(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _threshold_dict(threshold: SparsityThreshold) -> dict:
    return {"kind": threshold.kind, "value": _fraction_text(threshold.value)}


def _report_dict(report: CrossingReport) -> dict:
    return {
        "totalCrossings": report.total_crossings,
        "pairCount": report.pair_count,
        "averageNumerator": report.average.numerator,
        "averageDenominator": report.average.denominator,
        "sparsityThreshold": _threshold_dict(report.threshold),
        "isSparse": report.is_sparse,
        "mode": report.mode,
    }


def _certificate_dict(certificate: DistinctnessCertificate) -> dict:
    collision = None
    if certificate.collision is not None:
        collision = [_curve_dict(c) for c in certificate.collision]
    return {
        "distinct": certificate.distinct,
        "method": certificate.method,
        "collision": collision,
    }


def _curve_dict(curve: Curve) -> dict:
    return {"necklace": curve.necklace, "word": "".join(map(str, curve.word))}


def to_dict(doc: SystemDocument) -> dict:
    surface = doc.surface
    return {
        "schemaVersion": SCHEMA_VERSION,
        "surface": {
            "g": surface.g,
            "alpha": _fraction_text(surface.alpha),
            "h": surface.h,
            "hPrime": surface.h_prime,
            "baseGenus": surface.base_genus,
        },
        "analytic": doc.analytic,
        "curves": [_curve_dict(c) for c in doc.curves],
        "report": _report_dict(doc.report) if doc.report else None,
        "certificate": _certificate_dict(doc.certificate) if doc.certificate else None,
    }


def _parse_fraction(text: object, field: str) -> Fraction:
    if not isinstance(text, str):
        raise DocumentError(f"{field} must be a 'p/q' string, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"{field}: {exc}") from exc


def _parse_curve(entry: object, index: int) -> Curve:
    if not isinstance(entry, dict):
        raise DocumentError(f"curves[{index}] must be an object, got {entry!r}")
    try:
        necklace = entry["necklace"]
        word_text = entry["word"]
    except KeyError as exc:
        raise DocumentError(f"curves[{index}] missing key {exc}") from exc
    if not isinstance(necklace, int) or necklace < 0:
        raise DocumentError(f"curves[{index}].necklace must be a nonnegative integer")
    if not isinstance(word_text, str) or not word_text:
        raise DocumentError(f"curves[{index}].word must be a nonempty string")
    if any(ch not in "1234" for ch in word_text):
        raise DocumentError(f"curves[{index}].word must use letters 1-4 only")
    return Curve(necklace, tuple(int(ch) for ch in word_text))


def _parse_threshold(entry: object) -> SparsityThreshold:
    if not isinstance(entry, dict) or "kind" not in entry or "value" not in entry:
        raise DocumentError(f"sparsityThreshold must have kind and value, got {entry!r}")
    kind = entry["kind"]
    value = _parse_fraction(entry["value"], "sparsityThreshold.value")
    if kind == "rational":
        return SparsityThreshold.rational(value)
    if kind == "power":
        return SparsityThreshold.power(value)
    raise DocumentError(f"unknown threshold kind {kind!r}")


def from_dict(data: object) -> SystemDocument:
    if not isinstance(data, dict):
        raise DocumentError(f"document root must be an object, got {type(data).__name__}")
    if data.get("schemaVersion") != SCHEMA_VERSION:
        raise DocumentError(
            f"unsupported schemaVersion {data.get('schemaVersion')!r}, expected {SCHEMA_VERSION}"
        )
    surface_data = data.get("surface")
    if not isinstance(surface_data, dict):
        raise DocumentError("missing surface object")
    try:
        surface = CompositeSurface(
            g=int(surface_data["g"]),
            alpha=_parse_fraction(surface_data["alpha"], "surface.alpha"),
            h=int(surface_data["h"]),
            h_prime=int(surface_data["hPrime"]),
            base_genus=int(surface_data["baseGenus"]),
        )
    except KeyError as exc:
        raise DocumentError(f"surface missing key {exc}") from exc
    try:
        surface.check_invariants()
    except ValueError as exc:
        raise DocumentError(f"inconsistent surface: {exc}") from exc
    curves_data = data.get("curves")
    if not isinstance(curves_data, list):
        raise DocumentError("curves must be a list")
    curves = tuple(_parse_curve(entry, i) for i, entry in enumerate(curves_data))
    for i, curve in enumerate(curves):
        if len(curve.word) != surface.h - 1:
            raise DocumentError(
                f"curves[{i}].word has length {len(curve.word)}, surface needs {surface.h - 1}"
            )
        if curve.necklace >= surface.h_prime:
            raise DocumentError(
                f"curves[{i}].necklace = {curve.necklace} outside [0, {surface.h_prime})"
            )

    report = None
    report_data = data.get("report")
    if report_data is not None:
        if not isinstance(report_data, dict):
            raise DocumentError("report must be an object")
        try:
            report = CrossingReport(
                total_crossings=int(report_data["totalCrossings"]),
                pair_count=int(report_data["pairCount"]),
                average=Fraction(
                    int(report_data["averageNumerator"]),
                    int(report_data["averageDenominator"]),
                ),
                threshold=_parse_threshold(report_data["sparsityThreshold"]),
                is_sparse=bool(report_data["isSparse"]),
                mode=str(report_data["mode"]),
            )
        except KeyError as exc:
            raise DocumentError(f"report missing key {exc}") from exc

    certificate = None
    certificate_data = data.get("certificate")
    if certificate_data is not None:
        if not isinstance(certificate_data, dict):
            raise DocumentError("certificate must be an object")
        collision_data = certificate_data.get("collision")
        collision = None
        if collision_data is not None:
            if not isinstance(collision_data, list) or len(collision_data) != 2:
                raise DocumentError("certificate.collision must list two curves")
            collision = (
                _parse_curve(collision_data[0], 0),
                _parse_curve(collision_data[1], 1),
            )
        certificate = DistinctnessCertificate(
            distinct=bool(certificate_data.get("distinct")),
            method=str(certificate_data.get("method", "exhaustive")),
            collision=collision,
        )

    return SystemDocument(
        surface=surface,
        curves=curves,
        analytic=bool(data.get("analytic", False)),
        report=report,
        certificate=certificate,
    )


def dumps(doc: SystemDocument) -> str:
    return json.dumps(to_dict(doc), indent=2, ensure_ascii=False) + "\n"


def write_text_atomic(path: str | Path, text: str) -> None:
    """Write via a sibling temp file and rename, so partial files never appear."""
    path = Path(path)
    fd, tmp_name = tempfile.mkstemp(
        prefix=path.name + ".", suffix=".tmp", dir=path.parent or "."
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise


def save_document(doc: SystemDocument, path: str | Path) -> None:
    write_text_atomic(path, dumps(doc))


def load_document(path: str | Path) -> SystemDocument:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"{path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return from_dict(data)
