"""Shared fixtures plus a terminal summary of acceptance-criterion results.

Tests marked @pytest.mark.ac("AC-n") report into a registry; after the run
one PASS/FAIL/SKIP line per criterion is printed. A criterion fails if any
of its tests fail, passes if at least one passes and none fail, and is
skipped only when every backing test skipped (for instance when the real
SNLI files are not fetched).
"""

from __future__ import annotations

from pathlib import Path

import pytest

import synth

REPO_ROOT = Path(__file__).resolve().parent.parent
SNLI_DEV = REPO_ROOT / "data" / "snli_dev.jsonl"
SNLI_TRAIN = REPO_ROOT / "data" / "snli_train.jsonl"
FETCH_HINT = "run scripts/fetch_snli.py on a machine with network access"

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
    terminalreporter.section("acceptance criteria")
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
def surrogate_dev(tmp_path_factory) -> Path:
    """10,000-example validation stand-in with exactly 3,620 cued examples."""
    path = tmp_path_factory.mktemp("synth") / "surrogate_dev.jsonl"
    return synth.write_jsonl(path, synth.validation_records())


@pytest.fixture(scope="session")
def surrogate_train(tmp_path_factory) -> Path:
    path = tmp_path_factory.mktemp("synth") / "surrogate_train.jsonl"
    return synth.write_jsonl(path, synth.train_records())


@pytest.fixture(scope="session")
def snli_dev() -> Path:
    if not SNLI_DEV.exists():
        pytest.skip(f"{SNLI_DEV} not present; {FETCH_HINT}")
    return SNLI_DEV


@pytest.fixture(scope="session")
def snli_train() -> Path:
    if not SNLI_TRAIN.exists():
        pytest.skip(f"{SNLI_TRAIN} not present; {FETCH_HINT}")
    return SNLI_TRAIN
