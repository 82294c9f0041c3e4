"""Two worked applications of graph realization from rating vectors.

Students are rated 0-3 in four skill areas; a min-plus dot of two rating
vectors is the pair's weakest combined skill, so with threshold 3 an edge
means "every skill is covered at combined level 3".  Mutual funds carry
0/1 holding indicators over five securities; a max-plus dot reaches 2
exactly when two funds share a holding, so with threshold 2 non-adjacency
means fully disjoint portfolios.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import Graph
from .tropical import MAX_PLUS, MIN_PLUS, TropicalVector
from .verify import realize_graph

STUDENT_NAMES = "ABCDEF"
STUDENT_RATINGS = {
    "A": (2, 2, 1, 0),
    "B": (1, 2, 2, 1),
    "C": (1, 1, 3, 3),
    "D": (3, 3, 0, 0),
    "E": (2, 1, 3, 2),
    "F": (1, 2, 2, 3),
}
STUDENT_THRESHOLD = 3

FUND_NAMES = "ABCDEFH"
FUND_HOLDINGS = {
    "A": (1, 0, 0, 1, 0),
    "B": (1, 1, 0, 0, 0),
    "C": (0, 0, 1, 1, 0),
    "D": (0, 0, 1, 1, 1),
    "E": (0, 1, 1, 0, 1),
    "F": (1, 0, 0, 0, 1),
    "H": (0, 1, 0, 1, 0),
}
FUND_THRESHOLD = 2


def _letter_edges(g: Graph, names: str) -> list[tuple[str, str]]:
    return sorted((names[u], names[v]) for u, v in g.edges)


def student_pairing() -> dict:
    """Realize the student graph and greedily pair from the lowest degree up."""
    vectors = [TropicalVector.of(STUDENT_RATINGS[name]) for name in STUDENT_NAMES]
    g = realize_graph(vectors, STUDENT_THRESHOLD, MIN_PLUS)
    unmatched = set(range(g.n))
    pairs = []
    while unmatched:
        candidates = [v for v in sorted(unmatched) if any(u in unmatched for u in g.neighbors(v))]
        if not candidates:
            break
        v = min(candidates, key=lambda x: (sum(1 for u in g.neighbors(x) if u in unmatched), x))
        partner = min(u for u in g.neighbors(v) if u in unmatched)
        pairs.append(tuple(sorted((STUDENT_NAMES[v], STUDENT_NAMES[partner]))))
        unmatched -= {v, partner}
    return {
        "names": STUDENT_NAMES,
        "vectors": {name: STUDENT_RATINGS[name] for name in STUDENT_NAMES},
        "threshold": STUDENT_THRESHOLD,
        "algebra": MIN_PLUS,
        "graph": g,
        "edges": _letter_edges(g, STUDENT_NAMES),
        "pairs": sorted(pairs),
    }


def fund_overlap() -> dict:
    """Realize the fund graph and enumerate its maximum independent sets."""
    vectors = [TropicalVector.of(FUND_HOLDINGS[name]) for name in FUND_NAMES]
    g = realize_graph(vectors, FUND_THRESHOLD, MAX_PLUS)
    best: list[tuple[int, ...]] = []
    for size in range(g.n, 0, -1):
        for subset in combinations(range(g.n), size):
            if all(not g.has_edge(u, v) for u, v in combinations(subset, 2)):
                best.append(subset)
        if best:
            break
    independent = sorted(tuple(FUND_NAMES[v] for v in s) for s in best)
    return {
        "names": FUND_NAMES,
        "vectors": {name: FUND_HOLDINGS[name] for name in FUND_NAMES},
        "threshold": FUND_THRESHOLD,
        "algebra": MAX_PLUS,
        "graph": g,
        "edges": _letter_edges(g, FUND_NAMES),
        "max_independent_sets": independent,
        "diverse_pick": independent[0],
    }
