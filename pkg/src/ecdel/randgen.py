"""Seeded random instance generation for stress tests and benchmarks."""

from __future__ import annotations

import itertools
import random

from .graph import ColoredGraph


def random_colored_graph(
    rng: random.Random, n_max: int = 7, m_max: int = 12, c_max: int = 3
) -> ColoredGraph:
    n = rng.randint(1, n_max)
    c = rng.randint(1, c_max)
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    m = rng.randint(0, min(m_max, len(pairs)))
    return ColoredGraph(n, c, [(u, v, rng.randint(1, c)) for u, v in pairs[:m]])


def random_bicolored_graph(rng: random.Random, n: int, p: float = 0.4) -> ColoredGraph:
    edges = []
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.append((u, v, rng.randint(1, 2)))
    return ColoredGraph(n, 2, edges)


def random_t_graph(rng: random.Random, n_max: int = 12, m_max: int = 24) -> ColoredGraph:
    """A random disjoint union of rb-fences and rb-clique-stars.

    Sized so the brute-force oracle stays applicable (default <= 24 edges).
    """
    while True:
        edges: list[tuple[int, int, int]] = []
        nxt = 0
        for _ in range(rng.randint(1, 3)):
            if nxt >= n_max - 1:
                break
            room = n_max - nxt
            if rng.random() < 0.5 and room >= 4:
                # fence: two blue cliques joined by a red matching
                s1 = rng.randint(2, min(3, room - 2))
                s2 = rng.randint(2, min(3, room - s1))
                k1 = list(range(nxt, nxt + s1))
                k2 = list(range(nxt + s1, nxt + s1 + s2))
                nxt += s1 + s2
                for a, b in itertools.combinations(k1, 2):
                    edges.append((a, b, 1))
                for a, b in itertools.combinations(k2, 2):
                    edges.append((a, b, 1))
                match = rng.randint(1, min(s1, s2))
                for a, b in zip(rng.sample(k1, match), rng.sample(k2, match)):
                    edges.append((a, b, 2))
            else:
                # clique-star: red clique with blue cliques hanging off it
                cs = rng.randint(1, min(3, room))
                centers = list(range(nxt, nxt + cs))
                nxt += cs
                for a, b in itertools.combinations(centers, 2):
                    edges.append((a, b, 2))
                for cvert in centers:
                    extra = rng.randint(0, min(2, n_max - nxt))
                    members = [cvert] + list(range(nxt, nxt + extra))
                    nxt += extra
                    for a, b in itertools.combinations(members, 2):
                        edges.append((a, b, 1))
        if nxt == 0:
            continue
        if len(edges) <= m_max:
            return ColoredGraph(nxt, 2, edges)
