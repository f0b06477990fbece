"""Exact incidence counting on cached monomial vectors.

Each (point, curve) test is a 10-term dot product of the point's monomial row
with the curve's coefficient row. Products are reduced term by term so that
int64 blocks never overflow; larger moduli fall back to object arrays.
Parallel runs partition the curves, so every worker owns whole per-curve counts.
"""

import csv
import logging
from pathlib import Path

import numpy as np

from cubiclab.env import get_settings, worker_pool
from cubiclab.errors import InvalidInputError, ModulusMismatchError
from cubiclab.incidence.models import CurveSet, PointSet

logger = logging.getLogger(__name__)

COUNTS_CSV_HEADER = ("curve_index", "count")


def evaluate_block(monomials: np.ndarray, coefficients: np.ndarray, p: int) -> np.ndarray:
    """Residues f_j(q_i) for a block of points (rows) and curves (columns)."""
    acc = np.zeros((monomials.shape[0], coefficients.shape[0]), dtype=monomials.dtype)
    for term in range(monomials.shape[1]):
        acc += monomials[:, term, None] * coefficients[None, :, term] % p
    return acc % p


def count_block(
    monomials: np.ndarray, coefficients: np.ndarray, p: int, block_pairs: int
) -> np.ndarray:
    """Per-curve incidence counts for one chunk of curves against every point.

    Points are processed in blocks of about block_pairs point-curve pairs.
    """
    counts = np.zeros(coefficients.shape[0], dtype=np.int64)
    if monomials.shape[0] == 0 or coefficients.shape[0] == 0:
        return counts

    rows_per_block = max(1, block_pairs // coefficients.shape[0])
    for start in range(0, monomials.shape[0], rows_per_block):
        values = evaluate_block(monomials[start : start + rows_per_block], coefficients, p)
        counts += np.count_nonzero(values == 0, axis=0)
    return counts


def _count_worker(args: tuple[np.ndarray, np.ndarray, int, int]) -> np.ndarray:
    monomials, coefficients, p, block_pairs = args
    return count_block(monomials, coefficients, p, block_pairs)


def _check_fields(points: PointSet, curves: CurveSet) -> int:
    if points.modulus.p != curves.modulus.p:
        raise ModulusMismatchError(
            f"points over GF({points.modulus.p}) and curves over GF({curves.modulus.p})"
        )
    return points.modulus.p


def incidence_counts_per_curve(
    points: PointSet, curves: CurveSet, threads: int | None = None
) -> list[int]:
    """Exact |curve cap P| for every curve, in CurveSet order.

    Args:
        points: The point set
        curves: The curve set
        threads: Worker processes (defaults to the configured engine threads)

    Returns:
        One count per curve; the result does not depend on threads

    Raises:
        ModulusMismatchError: If the sets live over different fields
    """
    p = _check_fields(points, curves)
    engine = get_settings().engine
    workers = engine.threads if threads is None else threads
    if workers < 1:
        raise InvalidInputError(f"threads must be at least 1, got {workers}")

    monomials = points.monomials
    coefficients = curves.coefficients
    if workers == 1 or len(curves) < 2:
        return [int(c) for c in count_block(monomials, coefficients, p, engine.block_pairs)]

    chunks = [chunk for chunk in np.array_split(coefficients, workers) if chunk.shape[0]]
    logger.debug(f"Counting {len(points)} x {len(curves)} pairs over {len(chunks)} workers")
    with worker_pool(len(chunks)) as executor:
        results = list(
            executor.map(
                _count_worker,
                [(monomials, chunk, p, engine.block_pairs) for chunk in chunks],
            )
        )
    return [int(c) for result in results for c in result]


def count_incidences(points: PointSet, curves: CurveSet, threads: int | None = None) -> int:
    """I(P, C): the number of (point, curve) pairs with the point on the curve."""
    return sum(incidence_counts_per_curve(points, curves, threads))


def incident_points_per_curve(points: PointSet, curves: CurveSet) -> list[list[int]]:
    """Indices of the points of P on each curve, in CurveSet order."""
    p = _check_fields(points, curves)
    if len(points) == 0:
        return [[] for _ in curves]

    incident: list[list[int]] = []
    block = get_settings().engine.block_pairs
    rows_per_block = max(1, block // max(1, len(points)))
    for start in range(0, len(curves), rows_per_block):
        chunk = curves.coefficients[start : start + rows_per_block]
        values = evaluate_block(points.monomials, chunk, p)
        for column in range(chunk.shape[0]):
            incident.append([int(i) for i in np.flatnonzero(values[:, column] == 0)])
    return incident


def write_counts(path: Path, counts: list[int]) -> None:
    """Write per-curve counts as "curve_index,count" rows."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(COUNTS_CSV_HEADER)
        writer.writerows(enumerate(counts))
