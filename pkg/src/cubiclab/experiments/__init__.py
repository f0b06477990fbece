"""Instance generation, certificates, bound reports, campaigns and benchmarks."""

from cubiclab.experiments.bench import BENCH_CSV_HEADER, BenchRow, bench, write_bench_rows
from cubiclab.experiments.campaigns import (
    CAMPAIGNS,
    CampaignParams,
    CampaignSummary,
    get_campaign,
)
from cubiclab.experiments.certificate import (
    SUBSET_CSV_HEADER,
    CertificateReport,
    SubsetRecord,
    pipeline_certificate,
    richness_floor,
    write_subset_records,
)
from cubiclab.experiments.instances import (
    CurveKind,
    InstanceSpec,
    PointKind,
    generate_instance,
    grid_points,
    uniform_points,
)
from cubiclab.experiments.progress import (
    ProgressReporter,
    ProgressStep,
    ProgressTracker,
    StepStatus,
)
from cubiclab.experiments.render import ReportRenderer
from cubiclab.experiments.reports import bound_report, bound_report_sweep

__all__ = [
    "BENCH_CSV_HEADER",
    "CAMPAIGNS",
    "SUBSET_CSV_HEADER",
    "BenchRow",
    "CampaignParams",
    "CampaignSummary",
    "CertificateReport",
    "CurveKind",
    "InstanceSpec",
    "PointKind",
    "ProgressReporter",
    "ProgressStep",
    "ProgressTracker",
    "ReportRenderer",
    "StepStatus",
    "SubsetRecord",
    "bench",
    "bound_report",
    "bound_report_sweep",
    "generate_instance",
    "get_campaign",
    "grid_points",
    "pipeline_certificate",
    "richness_floor",
    "uniform_points",
    "write_bench_rows",
    "write_subset_records",
]
