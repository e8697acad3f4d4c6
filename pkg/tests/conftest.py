from pathlib import Path

import pytest

from bootperc import graph as G

_VERDICTS = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_VERDICTS] = {}


def pytest_terminal_summary(terminalreporter, config):
    verdicts = config.stash.get(_VERDICTS, {})
    if not verdicts:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(verdicts):
        ok, detail = verdicts[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="session")
def verdict(request):
    """Record one pass/fail line per acceptance criterion (printed at the end)."""
    table = request.config.stash[_VERDICTS]

    def record(number: int, ok: bool, detail: str) -> None:
        table[number] = (ok, detail)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")

    return record


@pytest.fixture(scope="session")
def corpus_dir(request) -> Path:
    """Isomorphism-class corpora are slow to grow, so they live in the pytest cache."""
    return Path(request.config.cache.mkdir("corpora"))


@pytest.fixture
def c4():
    return G.cycle_graph(4)


@pytest.fixture
def p3():
    return G.path_graph(3)


@pytest.fixture
def p4():
    return G.path_graph(4)


@pytest.fixture
def p5():
    return G.path_graph(5)


@pytest.fixture
def k2():
    return G.path_graph(2)


@pytest.fixture
def t8():
    return G.delay_tree(3)


@pytest.fixture
def t10():
    return G.delay_tree(4)
