import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from partita.corpus import builtin_manifest  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return builtin_manifest()


@pytest.fixture(scope="session")
def G(corpus):
    """Corpus groups by name."""
    return {e.name: e.group for e in corpus}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
        terminalreporter.write_line(line)
