import functools

import pytest

from artinlab.io import parse_algebra_file
from artinlab.linalg import QQ, Field
from artinlab.suite import fixture_dir

F101 = Field.prime(101)

QUIVER_FIXTURES = [
    "a1", "a1prime", "a2", "tilting_A", "tilting_B",
    "sect31_A", "sect31_B", "sect32_A", "sect32_B", "sect32_C", "truncated_t3",
]
ALL_FIXTURES = QUIVER_FIXTURES + ["a2prime", "centralizer_identity2", "centralizer_jordan3", "centralizer_diag01"]
NODE_FIXTURES = ["a1", "a2", "tilting_B", "sect32_A", "sect32_B"]
SELF_INJECTIVE = ["a1", "truncated_t3", "centralizer_jordan3"]


@functools.lru_cache(maxsize=None)
def load(name, field=QQ):
    return parse_algebra_file(fixture_dir() / f"{name}.json", None if field == QQ else field)


@pytest.fixture(params=ALL_FIXTURES)
def any_algebra(request):
    return load(request.param)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
