"""Shared hypothesis strategies and helpers."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from hypothesis import strategies as st

from tropigraph import NEG_INF, POS_INF, Graph, TropicalValue


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    edges = [p for p in pairs if draw(st.booleans())]
    return Graph(n, edges)


def fractions(max_num: int = 50, max_den: int = 12):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


def finite_values():
    return fractions().map(TropicalValue.finite)


def tropical_values(allow_pos_inf: bool = True, allow_neg_inf: bool = True):
    options = [finite_values()]
    if allow_pos_inf:
        options.append(st.just(POS_INF))
    if allow_neg_inf:
        options.append(st.just(NEG_INF))
    return st.one_of(*options)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def random_threshold_graph(rng: random.Random, n: int) -> Graph:
    """Build a threshold graph from a random creation sequence."""
    order = list(range(n))
    rng.shuffle(order)
    added: list[int] = []
    edges = []
    for v in order:
        if added and rng.random() < 0.5:
            edges.extend((u, v) for u in added)
        added.append(v)
    return Graph(n, edges)
