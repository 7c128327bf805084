import numpy as np
import pytest

from tambara.exactla import GF, Matrix

F7 = GF(7)


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


def rand_matrix(F, r, c, rng, density=0.7):
    a = [[F.random_scalar(rng) if rng.random() < density else 0 for _ in range(c)] for _ in range(r)]
    return Matrix.of(F, a) if r and c else Matrix.zeros(F, r, c)


# acceptance criterion -> (ok, detail), filled by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
