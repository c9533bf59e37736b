from itertools import permutations

import pytest
from hypothesis import strategies as st

from younghull.partitions import enumerate_young


def leibniz_det(m):
    """Determinant by the permutation expansion; independent of elimination."""
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i, p in enumerate(perm):
            prod *= m[i][p]
            if prod == 0:
                break
        total += -prod if inversions % 2 else prod
    return total


def diagram(lam):
    return {(r, c) for r, p in enumerate(lam) for c in range(p)}


def young_members(lo=2, hi=9):
    """Strategy for (N, lam) with lam in Y_N."""
    return st.integers(lo, hi).flatmap(
        lambda n: st.tuples(st.just(n), st.sampled_from(enumerate_young(n))))


@pytest.fixture(scope="session")
def young():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = enumerate_young(n)
        return cache[n]
    return get


# acceptance criteria append (number, title, ok, detail) here
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num:>2}. {title} ({detail})")
