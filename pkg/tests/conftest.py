import random
from fractions import Fraction
from itertools import combinations

import pytest

from hdx.complexes import build_from_facets
from hdx.generators import complete_complex, fixture, flag_complex


@pytest.fixture(scope="session")
def delta4():
    return complete_complex(4, 2)


@pytest.fixture(scope="session")
def delta5():
    return complete_complex(5, 2)


@pytest.fixture(scope="session")
def delta6():
    return complete_complex(6, 2)


@pytest.fixture(scope="session")
def k4():
    return complete_complex(4, 1)


@pytest.fixture(scope="session")
def rp2():
    return fixture("rp2_6")


@pytest.fixture(scope="session")
def flag23():
    return flag_complex(2, 3)


@pytest.fixture
def rng():
    return random.Random(20260809)


def coset_min_reference(target, basis_rows, weights):
    """Plain enumeration of the full coset with Fraction arithmetic; ties
    toward the lexicographically smallest vector (coordinate 0 first)."""
    k = len(basis_rows)
    m = len(weights)
    best = None
    for g in range(1 << k):
        v = target
        for j in range(k):
            if (g >> j) & 1:
                v ^= basis_rows[j]
        w = sum(Fraction(weights[b]) for b in range(m) if (v >> b) & 1)
        if best is None or w < best[0] or (w == best[0] and _lex_less(v, best[1])):
            best = (w, v)
    return best


def _lex_less(a, b):
    if a == b:
        return False
    d = a ^ b
    return (a & (d & -d)) == 0


def random_graph_complex(rng, n_lo=3, n_hi=10):
    """Random connected-ish graph as a pure 1-complex."""
    n = rng.randint(n_lo, n_hi)
    labels = [f"g{j}" for j in range(n)]
    edges = [[labels[j], labels[j + 1]] for j in range(n - 1)]
    for u, v in combinations(range(n), 2):
        if v > u + 1 and rng.random() < 0.4:
            edges.append([labels[u], labels[v]])
    return build_from_facets(edges)
