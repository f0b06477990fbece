"""Tests for bound reports, benchmarks, progress and rendering."""

import io

from cubiclab.bounds import build_bound_report
from cubiclab.experiments import (
    BENCH_CSV_HEADER,
    ProgressReporter,
    ProgressStep,
    ProgressTracker,
    ReportRenderer,
    StepStatus,
    bench,
    bound_report,
    bound_report_sweep,
    write_bench_rows,
)
from cubiclab.incidence import CurveSet, PointSet


def test_bound_report_measures_incidences(f13, cubic_graph, graph_points):
    points = PointSet(tuple(graph_points(f13)), f13)
    curves = CurveSet((cubic_graph(f13),), f13)
    report = bound_report(points, curves)
    assert report == build_bound_report(13, 13, 1, 13)


def test_bound_report_sweep_order():
    reports = bound_report_sweep(13, [9, 16], [1, 3], seed=2)
    assert [(r.size_p, r.size_c) for r in reports] == [(9, 1), (9, 3), (16, 1), (16, 3)]
    assert all(r.p == 13 for r in reports)
    assert all(0 <= r.measured <= r.size_p * r.size_c for r in reports)
    assert reports == bound_report_sweep(13, [9, 16], [1, 3], seed=2)


def test_bench_threads_agree(tmp_path):
    rows = bench([20, 40], 31, [1, 2], seed=0)
    assert [(row.size, row.threads) for row in rows] == [(20, 1), (20, 2), (40, 1), (40, 2)]
    assert rows[0].incidences == rows[1].incidences
    assert rows[2].incidences == rows[3].incidences

    path = tmp_path / "bench.csv"
    write_bench_rows(path, rows)
    lines = path.read_text().splitlines()
    assert lines[0] == ",".join(BENCH_CSV_HEADER)
    assert lines[1].startswith(f"20,1,{rows[0].incidences},")


def test_progress_checklists():
    tracker = ProgressTracker(
        command="verify lemma",
        run_id="p=13",
        steps=[ProgressStep("Run trials"), ProgressStep("Summarize")],
    )
    stream = io.StringIO()
    progress = ProgressReporter(tracker, stream=stream)

    progress.update(0, StepStatus.RUNNING)
    assert "  [ ] Run trials <- running" in stream.getvalue()

    progress.update(0, StepStatus.COMPLETED, 1.5)
    progress.update(1, StepStatus.FAILED)
    progress.fail("2 violations")
    final = stream.getvalue().split("verify lemma")[-1]
    assert final.startswith(" failed [p=13]")
    assert "  [x] Run trials (1.50s)" in final
    assert "  [ ] Summarize <- failed" in final
    assert "  error: 2 violations" in final


def test_completed_checklist():
    tracker = ProgressTracker("bench", "seed=0", [ProgressStep("Count", StepStatus.COMPLETED)])
    assert tracker.format_completed() == "bench completed [seed=0]\n  [x] Count"


def test_disabled_reporter_is_silent():
    stream = io.StringIO()
    tracker = ProgressTracker("bench", "seed=0", [ProgressStep("Count")])
    progress = ProgressReporter(tracker, stream=stream, enabled=False)
    progress.start()
    progress.complete()
    assert stream.getvalue() == ""


def test_renderer_custom_directory(tmp_path):
    (tmp_path / "hello.md").write_text("Hello {{ name }}\n")
    assert ReportRenderer(tmp_path).render("hello.md", {"name": "GF(7)"}) == "Hello GF(7)\n"


def test_violations_listed():
    text = ReportRenderer().render("violations.md", {"violations": ["trial 0: rank-7 failed"]})
    assert "- trial 0: rank-7 failed" in text
    assert "None." not in text
