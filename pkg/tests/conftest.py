import random

import pytest

ACCEPTANCE_LINES: list[str] = []


def record(criterion: int, ok: bool, detail: str):
    ACCEPTANCE_LINES.append(f"criterion {criterion:>2}: {'PASS' if ok else 'FAIL'}  {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_relabel(s, rng: random.Random):
    p = list(range(s.v))
    q = list(range(s.b))
    rng.shuffle(p)
    rng.shuffle(q)
    return s.relabel(p, q)


@pytest.fixture
def rng():
    return random.Random(20240607)
