"""Random MAG corpora: independent pairs plus single-edit mutations."""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator

from magpath.graph import Edge, MixedGraph, is_ancestral, is_maximal, random_mag


def single_edits(g: MixedGraph, x: str, y: str) -> list[MixedGraph]:
    """Graphs differing from ``g`` only at the pair {x, y}."""
    variants = [Edge.directed(x, y), Edge.directed(y, x), Edge.bidirected(x, y)]
    if g.adjacent(x, y):
        current = g.edge(x, y).oriented()
        out = [g.with_edges(remove=[(x, y)])]
        out += [g.with_edges(remove=[(x, y)], add=[e]) for e in variants if e.oriented() != current]
        return out
    return [g.with_edges(add=[e]) for e in variants]


def mutations(g: MixedGraph, rng: random.Random, tries: int = 3) -> list[MixedGraph]:
    """Valid MAGs one edge addition, removal or re-marking away from ``g``."""
    pairs = list(itertools.combinations(g.vertices, 2))
    if not pairs:
        return []
    out = []
    for x, y in rng.sample(pairs, min(tries, len(pairs))):
        out += [h for h in single_edits(g, x, y) if is_ancestral(h) and is_maximal(h, method="inducing")]
    return out


def corpus_graphs(count: int, seed: int = 0, max_n: int = 7) -> list[MixedGraph]:
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        graphs.append(random_mag(rng.randrange(2**32), n, rng.uniform(0.1, 0.6), rng.uniform(0.1, 0.5)))
    return graphs


def mag_pairs(seed: int = 0, max_n: int = 7, n_base: int = 60) -> Iterator[tuple[MixedGraph, MixedGraph]]:
    """Pairs on a shared vertex set: mutated near-duplicates and independent draws."""
    rng = random.Random(seed)
    for g in corpus_graphs(n_base, seed, max_n):
        for h in mutations(g, rng):
            yield g, h
        other = random_mag(rng.randrange(2**32), len(g), rng.uniform(0.1, 0.6), rng.uniform(0.1, 0.5))
        yield g, other
        yield g, g
