"""Measured incidence counts scored against every bound, with CSV emission."""

import csv
import io
import logging
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path

import mpmath as mp

from cubiclab.bounds.evaluators import (
    admissible,
    delta_branch,
    delta_opt,
    dyadic_bound,
    kst_branch,
    kst_bound,
    theorem1_bound,
    theorem1_branch,
    theorem2_bound,
)
from cubiclab.env import get_settings
from cubiclab.errors import InvalidInputError

logger = logging.getLogger(__name__)

BOUND_CSV_HEADER = (
    "p",
    "sizeP",
    "sizeC",
    "measured_I",
    "kst",
    "thm1",
    "thm2",
    "delta",
    "dyadic_at_delta",
    "admissible",
    "active_branch",
    "ratio_kst",
    "ratio_thm1",
    "ratio_thm2",
    "ratio_dyadic",
)


@dataclass(frozen=True)
class BoundReport:
    """One instance scored against the closed-form bounds.

    Values that are undefined for the instance (delta without curves, a ratio
    against a zero bound) are None.

    Attributes:
        p: Field characteristic
        size_p: |P|
        size_c: |C|
        measured: Measured I(P, C)
        kst: kst_bound(|P|, |C|)
        thm1: theorem1_bound(|P|, |C|)
        thm2: theorem2_bound(|P|, |C|)
        delta: delta_opt(|P|, |C|)
        dyadic_at_delta: dyadic_bound(|P|, |C|, delta)
        admissible: |P| <= p^(15/13)
        active_branch: Active min/max branches, e.g. "thm1=joint;kst=first;delta=floor"
    """

    p: int
    size_p: int
    size_c: int
    measured: int
    kst: mp.mpf
    thm1: mp.mpf
    thm2: mp.mpf
    delta: mp.mpf | None
    dyadic_at_delta: mp.mpf | None
    admissible: bool
    active_branch: str

    @staticmethod
    def _ratio(measured: int, bound: mp.mpf | None) -> mp.mpf | None:
        if bound is None or bound == 0:
            return None
        with mp.workprec(get_settings().bounds.precision_bits):
            return mp.mpf(measured) / bound

    @property
    def ratios(self) -> dict[str, mp.mpf | None]:
        """measured / bound for each bound, keyed by the bound's column name."""
        return {
            "kst": self._ratio(self.measured, self.kst),
            "thm1": self._ratio(self.measured, self.thm1),
            "thm2": self._ratio(self.measured, self.thm2),
            "dyadic": self._ratio(self.measured, self.dyadic_at_delta),
        }

    def csv_row(self, digits: int) -> list[str]:
        """Row matching BOUND_CSV_HEADER, numbers at the given significant digits."""

        def fmt(value: mp.mpf | None) -> str:
            return "" if value is None else mp.nstr(value, digits)

        ratios = self.ratios
        return [
            str(self.p),
            str(self.size_p),
            str(self.size_c),
            str(self.measured),
            fmt(self.kst),
            fmt(self.thm1),
            fmt(self.thm2),
            fmt(self.delta),
            fmt(self.dyadic_at_delta),
            "true" if self.admissible else "false",
            self.active_branch,
            fmt(ratios["kst"]),
            fmt(ratios["thm1"]),
            fmt(ratios["thm2"]),
            fmt(ratios["dyadic"]),
        ]


def build_bound_report(p: int, m: int, n: int, measured: int) -> BoundReport:
    """Evaluate every bound for |P| = m, |C| = n and attach the measured count.

    Raises:
        InvalidInputError: If a size or the measured count is negative
    """
    if min(m, n, measured) < 0:
        raise InvalidInputError(f"sizes and counts must be nonnegative, got {m}, {n}, {measured}")

    branches = [f"thm1={theorem1_branch(m, n)}", f"kst={kst_branch(m, n)}"]
    delta = dyadic = None
    if n >= 1:
        delta = delta_opt(m, n)
        dyadic = dyadic_bound(m, n, delta)
        branches.append(f"delta={delta_branch(m, n)}")

    thm1 = theorem1_bound(m, n)
    thm2 = theorem2_bound(m, n)
    if thm1 > thm2 + m:
        logger.info(f"theorem1 exceeds theorem2 + |P| at m={m}, n={n}: {thm1} > {thm2 + m}")

    return BoundReport(
        p=p,
        size_p=m,
        size_c=n,
        measured=measured,
        kst=kst_bound(m, n),
        thm1=thm1,
        thm2=thm2,
        delta=delta,
        dyadic_at_delta=dyadic,
        admissible=admissible(m, p),
        active_branch=";".join(branches),
    )


def bound_reports_csv(reports: Iterable[BoundReport]) -> str:
    """Reports as CSV text under BOUND_CSV_HEADER."""
    digits = get_settings().bounds.csv_digits
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(BOUND_CSV_HEADER)
    for report in reports:
        writer.writerow(report.csv_row(digits))
    return buffer.getvalue()


def write_bound_reports(path: Path, reports: Iterable[BoundReport]) -> None:
    """Write reports as a CSV file."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        f.write(bound_reports_csv(reports))
