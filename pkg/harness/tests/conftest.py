"""Harness fixtures plus a terminal summary for its acceptance tests.

Mirrors the main suite's reporting: tests marked @pytest.mark.ac("AC-n")
feed a registry and one PASS/FAIL/SKIP line per criterion prints after
the run. The long-running criteria here stay SKIP unless explicitly
enabled through environment variables.
"""

from __future__ import annotations

import pytest

import hsynth

_AC_OUTCOMES: dict[str, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "ac(criterion): test backs the named acceptance criterion"
    )


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    marker = item.get_closest_marker("ac")
    if marker is not None:
        criterion = marker.args[0]
        if report.when == "call" or (report.when == "setup" and report.outcome == "skipped"):
            _AC_OUTCOMES.setdefault(criterion, []).append(report.outcome)
    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _AC_OUTCOMES:
        return
    terminalreporter.section("acceptance criteria (harness)")
    for criterion in sorted(_AC_OUTCOMES):
        outcomes = _AC_OUTCOMES[criterion]
        if "failed" in outcomes:
            status = "FAIL"
        elif "passed" in outcomes:
            status = "PASS"
        else:
            status = "SKIP"
        detail = ", ".join(
            f"{outcomes.count(kind)} {kind}"
            for kind in ("passed", "failed", "skipped")
            if outcomes.count(kind)
        )
        terminalreporter.write_line(f"{criterion}: {status} ({detail})")


@pytest.fixture(scope="session")
def tiny_model_dir(tmp_path_factory):
    """Small randomly initialized checkpoint shared across the session."""
    return hsynth.save_tiny_model(tmp_path_factory.mktemp("tiny-model"))


@pytest.fixture(scope="session")
def smoke_corpus(tmp_path_factory):
    path = tmp_path_factory.mktemp("smoke") / "smoke.jsonl"
    return hsynth.write_corpus(path, hsynth.smoke_records())
