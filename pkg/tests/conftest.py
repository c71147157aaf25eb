import random

import pytest

from splinedim.meshes import random_disk


def corpus(n, seed=2024, **kwargs):
    """Deterministic list of random valid disks."""
    rng = random.Random(seed)
    return [random_disk(rng, **kwargs) for _ in range(n)]


@pytest.fixture(scope="session")
def small_corpus():
    return corpus(12, seed=7, n_interior=(1, 6), max_triangles=24)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    verdicts = getattr(mod, "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(verdicts):
        terminalreporter.write_line(verdicts[n])
