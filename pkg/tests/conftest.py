import os

import pytest
from hypothesis import HealthCheck, settings

from sumsetlab.io import builtin_corpus

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def corpus():
    return builtin_corpus()


@pytest.fixture(scope="session")
def simplex_corpus(corpus):
    from sumsetlab.polytope import is_simplex
    return [inst for inst in corpus if is_simplex(inst.points) is not None]


_CRITERIA = []


class _Criterion:
    def __init__(self, number, title):
        self.number, self.title, self.notes = number, title, []

    def note(self, text):
        self.notes.append(str(text))

    def __enter__(self):
        return self

    def __exit__(self, kind, exc, tb):
        status = "PASS" if exc is None else "FAIL"
        detail = "; ".join(self.notes)
        if exc is not None:
            detail = f"{detail}; {type(exc).__name__}: {exc}".lstrip("; ")
        line = f"[{status}] criterion {self.number:>2}: {self.title}" + (f" ({detail})" if detail else "")
        _CRITERIA.append((self.number, line))
        print(line)
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_CRITERIA):
            terminalreporter.write_line(line)
