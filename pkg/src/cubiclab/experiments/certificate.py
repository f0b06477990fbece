"""End-to-end certificate of the rich-curve counting argument on one instance.

For a richness class C_k and every examined 7-subset S with C_{k,S} nonempty,
the certificate checks that S cuts out a 2-flat of cubics, that no relevant
point gives a degenerate dual line, that each dual line comes from at most two
points, and that every curve of C_{k,S} becomes a dual point on at least
ceil((k - 7) / 2) distinct dual lines. Asymptotic bounds are recorded as
ratios only.
"""

import csv
import logging
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Any

import mpmath as mp
import numpy as np

from cubiclab.bounds import (
    MIN_RICHNESS,
    BoundReport,
    build_bound_report,
    ck_bound,
    cks_bound,
    sdz_line_bound,
    sdz_rich_points_bound,
)
from cubiclab.dual import (
    Degenerate,
    DualLine,
    Flat2,
    dual_incidence,
    flat_of,
    line_multiplicities,
    phi,
    psi,
)
from cubiclab.env import get_settings
from cubiclab.errors import InvalidInputError
from cubiclab.incidence import (
    CurveSet,
    PointSet,
    SubsetMode,
    incidence_counts_per_curve,
    incident_points_per_curve,
    rich_curves,
    rich_dual_points,
    richness_histogram,
    seven_subsets,
)

logger = logging.getLogger(__name__)

SUBSET_CSV_HEADER = (
    "subset",
    "rich_through",
    "rank",
    "dual_lines",
    "degenerate",
    "max_multiplicity",
    "min_dual_richness",
    "rich_dual_points",
    "dual_incidences",
    "ratio_rich_points",
    "ratio_dual_incidences",
)


def richness_floor(k: int) -> int:
    """ceil((k - 7) / 2): the dual lines every curve of C_{k,S} must meet."""
    return (k - 6) // 2


@dataclass(frozen=True)
class SubsetRecord:
    """Measurements for one 7-subset S with C_{k,S} nonempty.

    Attributes:
        subset: Indices of S in the point set
        rich_through: |C_{k,S}|
        rank: Rank of the seven point conditions
        dual_lines: Distinct dual lines from the relevant points
        degenerate: Relevant points whose dual line is the whole flat
        max_multiplicity: Most points behind a single dual line
        min_dual_richness: Fewest distinct dual lines through any curve of C_{k,S}
        rich_dual_points: Points of the flat on at least richness_floor(k) dual lines
        dual_incidences: Incidences between the curves of C_{k,S} and the dual lines
        ratio_rich_points: rich_dual_points / sdz_rich_points_bound
        ratio_dual_incidences: dual_incidences / sdz_line_bound
    """

    subset: tuple[int, ...]
    rich_through: int
    rank: int
    dual_lines: int = 0
    degenerate: int = 0
    max_multiplicity: int = 0
    min_dual_richness: int = 0
    rich_dual_points: int = 0
    dual_incidences: int = 0
    ratio_rich_points: mp.mpf | None = None
    ratio_dual_incidences: mp.mpf | None = None

    def csv_row(self, digits: int) -> list[str]:
        def fmt(value: mp.mpf | None) -> str:
            return "" if value is None else mp.nstr(value, digits)

        return [
            " ".join(str(i) for i in self.subset),
            str(self.rich_through),
            str(self.rank),
            str(self.dual_lines),
            str(self.degenerate),
            str(self.max_multiplicity),
            str(self.min_dual_richness),
            str(self.rich_dual_points),
            str(self.dual_incidences),
            fmt(self.ratio_rich_points),
            fmt(self.ratio_dual_incidences),
        ]


@dataclass
class CertificateReport:
    """Everything the certificate verified and measured on one instance.

    Attributes:
        p: Field size
        k: Richness threshold
        seed: Subset sampling seed
        size_p: |P|
        size_c: |C|
        histogram: |C_{=j}| for every j that occurs
        rich_count: |C_k|
        subset_mode: Exhaustive or sampled 7-subsets
        subsets_examined: Number of 7-subsets examined
        records: One record per examined S with C_{k,S} nonempty
        counting_identity: (sum over S of |C_{k,S}|, sum over C_k of C(|curve cap P|, 7),
            C(k, 7) * |C_k|) in exhaustive mode
        ratio_ck: |C_k| / ck_bound(|P|, k)
        ratio_cks: max |C_{k,S}| / cks_bound(|P|, k)
        bounds: Bound report for the instance
        violations: Failed checks, expected empty
    """

    p: int
    k: int
    seed: int
    size_p: int
    size_c: int
    histogram: dict[int, int]
    rich_count: int
    subset_mode: SubsetMode
    subsets_examined: int
    bounds: BoundReport
    records: list[SubsetRecord] = field(default_factory=list)
    counting_identity: tuple[int, int, int] | None = None
    ratio_ck: mp.mpf | None = None
    ratio_cks: mp.mpf | None = None
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def rank_outcomes(self) -> dict[int, int]:
        return dict(sorted(Counter(record.rank for record in self.records).items()))

    @property
    def flat_successes(self) -> int:
        return sum(1 for record in self.records if record.rank == 7)

    @property
    def degenerate_count(self) -> int:
        return sum(record.degenerate for record in self.records)

    @property
    def max_multiplicity(self) -> int:
        return max((record.max_multiplicity for record in self.records), default=0)

    @property
    def max_rich_through(self) -> int:
        return max((record.rich_through for record in self.records), default=0)

    @property
    def max_ratio_rich_points(self) -> mp.mpf | None:
        ratios = [r.ratio_rich_points for r in self.records if r.ratio_rich_points is not None]
        return max(ratios, default=None)

    def to_context(self) -> dict[str, Any]:
        """Values for the certificate summary template."""
        digits = get_settings().bounds.csv_digits

        def fmt(value: mp.mpf | None) -> str:
            return "n/a" if value is None else mp.nstr(value, min(digits, 8))

        return {
            "report": self,
            "mode": self.subset_mode.value,
            "rank_outcomes": self.rank_outcomes,
            "ratio_ck": fmt(self.ratio_ck),
            "ratio_cks": fmt(self.ratio_cks),
            "max_ratio_rich_points": fmt(self.max_ratio_rich_points),
            "bound_ratios": {name: fmt(v) for name, v in self.bounds.ratios.items()},
        }


def _ratio(measured: int, bound: mp.mpf) -> mp.mpf | None:
    if bound == 0:
        return None
    with mp.workprec(get_settings().bounds.precision_bits):
        return mp.mpf(measured) / bound


def _examine_subset(
    subset: tuple[int, ...],
    through: list[int],
    points: PointSet,
    curves: CurveSet,
    incidences: dict[int, set[int]],
    k: int,
    violations: list[str],
) -> SubsetRecord:
    """Run every per-S check for one S with C_{k,S} = through (nonempty)."""
    label = f"S={subset}"
    flat = flat_of([points[i] for i in subset])
    if not isinstance(flat, Flat2):
        violations.append(f"{label}: rank {flat.rank} < 7 although |C_k,S| = {len(through)}")
        return SubsetRecord(subset, len(through), flat.rank)

    members = set(subset)
    relevant = sorted(set().union(*(incidences[c] for c in through)) - members)

    lines: list[DualLine] = []
    degenerate = 0
    for i in relevant:
        outcome = psi(points[i], flat)
        if isinstance(outcome, Degenerate):
            degenerate += 1
            violations.append(f"{label}: psi({points[i]}) is degenerate")
        else:
            lines.append(outcome)

    multiplicities = line_multiplicities(lines)
    max_multiplicity = max(multiplicities.values(), default=0)
    if max_multiplicity > 2:
        violations.append(f"{label}: a dual line comes from {max_multiplicity} points")

    t = richness_floor(k)
    distinct = list({dl.covector: dl for dl in lines}.values())
    min_richness: int | None = None
    dual_incidences = 0
    for c in through:
        dp = phi(curves[c])
        meeting = set()
        for dl in lines:
            on_line = dual_incidence(dp, dl, flat)
            if on_line != (points.index[dl.source] in incidences[c]):
                violations.append(f"{label}: dual incidence disagrees at {dl.source}, curve {c}")
            if on_line:
                meeting.add(dl.covector)
        dual_incidences += len(meeting)
        min_richness = len(meeting) if min_richness is None else min(min_richness, len(meeting))
        if len(meeting) < t:
            violations.append(f"{label}: curve {c} meets {len(meeting)} < {t} dual lines")

    rich = rich_dual_points(distinct, t)
    if len(through) > rich:
        violations.append(f"{label}: |C_k,S| = {len(through)} exceeds {rich} rich dual points")

    record = SubsetRecord(
        subset=subset,
        rich_through=len(through),
        rank=7,
        dual_lines=len(distinct),
        degenerate=degenerate,
        max_multiplicity=max_multiplicity,
        min_dual_richness=min_richness or 0,
        rich_dual_points=rich,
        dual_incidences=dual_incidences,
        ratio_rich_points=_ratio(rich, sdz_rich_points_bound(len(distinct), t)),
        ratio_dual_incidences=_ratio(
            dual_incidences, sdz_line_bound(len(through), len(distinct))
        ),
    )
    logger.debug(f"{label}: |C_k,S|={len(through)}, {len(distinct)} dual lines, {rich} rich")
    return record


def pipeline_certificate(
    points: PointSet,
    curves: CurveSet,
    k: int,
    subset_samples: int | None = None,
    seed: int = 0,
    threads: int | None = None,
) -> CertificateReport:
    """Verify every step of the rich-curve argument on (P, C) and record the measured ratios.

    Args:
        points: The point set
        curves: A CurveSet flagged irreducible
        k: Richness threshold, at least 11
        subset_samples: Draws per sampling mode (defaults to the configured value)
        seed: Seed of the subset sampler
        threads: Worker processes for counting

    Returns:
        The report; violations is empty iff every check held

    Raises:
        InvalidInputError: If k < 11 or the curves are not flagged irreducible
    """
    if k < MIN_RICHNESS:
        raise InvalidInputError(f"k must be at least {MIN_RICHNESS}, got {k}")
    if not curves.irreducible:
        raise InvalidInputError("the certificate needs a CurveSet flagged irreducible")

    sampling = get_settings().sampling
    samples = sampling.subset_samples if subset_samples is None else subset_samples
    logger.info(
        f"Certifying |P|={len(points)}, |C|={len(curves)}, k={k} over GF({points.modulus.p})"
    )

    counts = incidence_counts_per_curve(points, curves, threads)
    richclass = rich_curves(points, curves, k, counts)
    members = CurveSet(tuple(richclass.member_curves()), curves.modulus)
    anchors = incident_points_per_curve(points, members)
    incidences = {c: set(anchor) for c, anchor in zip(richclass.members, anchors, strict=True)}

    rng = np.random.default_rng(seed)
    plan = seven_subsets(len(points), anchors, samples, rng, sampling.subset_enumeration_limit)
    logger.info(f"|C_{k}|={len(richclass)}; {len(plan.subsets)} subsets ({plan.mode.value})")

    report = CertificateReport(
        p=points.modulus.p,
        k=k,
        seed=seed,
        size_p=len(points),
        size_c=len(curves),
        histogram=richness_histogram(points, curves, counts),
        rich_count=len(richclass),
        subset_mode=plan.mode,
        subsets_examined=len(plan.subsets),
        bounds=build_bound_report(points.modulus.p, len(points), len(curves), sum(counts)),
    )

    total_through = 0
    for subset in plan.subsets:
        members_of_s = set(subset)
        through = [c for c in richclass.members if members_of_s <= incidences[c]]
        if not through:
            continue
        total_through += len(through)
        report.records.append(
            _examine_subset(subset, through, points, curves, incidences, k, report.violations)
        )

    if plan.mode is SubsetMode.EXHAUSTIVE:
        expected = sum(comb(len(incidences[c]), 7) for c in richclass.members)
        floor = comb(k, 7) * len(richclass)
        report.counting_identity = (total_through, expected, floor)
        if total_through != expected or expected < floor:
            report.violations.append(
                f"subset count {total_through} vs {expected} (floor {floor}) does not match"
            )

    report.ratio_ck = _ratio(len(richclass), ck_bound(len(points), k))
    report.ratio_cks = _ratio(report.max_rich_through, cks_bound(len(points), k))

    for violation in report.violations:
        logger.warning(violation)
    logger.info(
        f"Certificate finished: {len(report.records)} subsets, "
        f"{len(report.violations)} violations"
    )
    return report


def write_subset_records(path: Path, records: list[SubsetRecord]) -> None:
    """Write per-subset records under SUBSET_CSV_HEADER."""
    digits = get_settings().bounds.csv_digits
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(SUBSET_CSV_HEADER)
        for record in records:
            writer.writerow(record.csv_row(digits))
