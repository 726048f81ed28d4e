import random

import pytest

from multihilb.catalog import builtin_example, random_point_set


def random_config(arity, seed, sizes=(1, 12), pools=(3, 5), allow_infinity=False):
    """Seeded configuration: pool drawn from ``pools``, size from ``sizes``."""
    rng = random.Random(seed)
    pool = rng.randint(*pools)
    cap = (pool + allow_infinity) ** arity
    count = rng.randint(sizes[0], min(sizes[1], cap))
    return random_point_set(arity, count, pool, seed, allow_infinity=allow_infinity)


@pytest.fixture(scope="session")
def ex33():
    return builtin_example("3.3")


@pytest.fixture(scope="session")
def ex35():
    return builtin_example("3.5")


_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion n")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for mark in getattr(report, "criterion_marks", ()):
        n, text = mark
        status = "PASS" if report.passed else "FAIL"
        if _criteria.get(n, ("PASS",))[0] != "FAIL":
            _criteria[n] = (status, text)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    report.criterion_marks = [tuple(m.args) for m in item.iter_markers("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        status, text = _criteria[n]
        terminalreporter.write_line(f"criterion {n:2d} {status}: {text}")
