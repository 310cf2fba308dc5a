import random

import pytest
from hypothesis import strategies as st

from qmlen.groups import S_MATRIX, T_MATRIX, FreeWord, IntMatrix2, Permutation, ProjMatrix2

SL_LETTERS = [S_MATRIX, S_MATRIX.inverse(), T_MATRIX, T_MATRIX.inverse()]


def sl_word(letters):
    m = IntMatrix2(1, 0, 0, 1)
    for i in letters:
        m = m * SL_LETTERS[i]
    return m


def sl2z_elements(max_len=12):
    return st.lists(st.integers(0, 3), max_size=max_len).map(sl_word)


def psl2z_elements(max_len=12):
    return sl2z_elements(max_len).map(ProjMatrix2)


def permutations(degree):
    return st.permutations(list(range(degree))).map(lambda p: Permutation(tuple(p)))


def free_words(rank=2, max_len=10):
    letters = st.sampled_from([i for k in range(1, rank + 1) for i in (k, -k)])
    return st.lists(letters, max_size=max_len).map(lambda ls: FreeWord(rank, tuple(ls)))


def random_sl(rng: random.Random, max_len: int = 10) -> IntMatrix2:
    return sl_word([rng.randrange(4) for _ in range(rng.randrange(max_len + 1))])


@pytest.fixture
def rng():
    return random.Random(20061016)


# Acceptance summary: one PASS/FAIL line per criterion after the run.
_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
