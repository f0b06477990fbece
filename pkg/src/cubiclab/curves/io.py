"""CSV formats for points and curves."""

import csv
from collections.abc import Iterable
from pathlib import Path

from cubiclab.curves.models import CURVE_CSV_HEADER, POINT_CSV_HEADER, AffinePoint, CurveCoeffs
from cubiclab.errors import InvalidInputError
from cubiclab.field import PrimeModulus


def _read_rows(path: Path, header: tuple[str, ...]) -> list[list[int]]:
    with open(path, newline="") as f:
        reader = csv.reader(f)
        first = next(reader, None)
        if first is None or tuple(cell.strip() for cell in first) != header:
            raise InvalidInputError(f"{path}: expected header {','.join(header)}")

        rows = []
        for line_number, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise InvalidInputError(
                    f"{path}:{line_number}: expected {len(header)} fields, got {len(row)}"
                )
            try:
                rows.append([int(cell) for cell in row])
            except ValueError as e:
                raise InvalidInputError(f"{path}:{line_number}: {e}") from e
        return rows


def _write_rows(path: Path, header: tuple[str, ...], rows: Iterable[Iterable[int]]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def read_points(path: Path, modulus: PrimeModulus) -> list[AffinePoint]:
    """Read a "x,y" point file; coordinates must already be reduced.

    Raises:
        InvalidInputError: On a malformed file or unreduced coordinates
    """
    return [AffinePoint(x, y, modulus) for x, y in _read_rows(path, POINT_CSV_HEADER)]


def write_points(path: Path, points: Iterable[AffinePoint]) -> None:
    _write_rows(path, POINT_CSV_HEADER, ((q.x, q.y) for q in points))


def read_curves(path: Path, modulus: PrimeModulus) -> list[CurveCoeffs]:
    """Read a curve file (ten residues per row in monomial order).

    Raises:
        InvalidInputError: On a malformed file or a zero row
    """
    return [CurveCoeffs(tuple(row), modulus) for row in _read_rows(path, CURVE_CSV_HEADER)]


def write_curves(path: Path, curves: Iterable[CurveCoeffs]) -> None:
    _write_rows(path, CURVE_CSV_HEADER, (curve.values for curve in curves))
