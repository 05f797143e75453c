"""Text renderings of a lattice: DOT graph or ASCII truth table.

Both renderings list nodes in canonical order (descending bit code, i.e.
truth-table order with the all-true row first) regardless of how the
lattice was assembled, so output is byte-stable for a given lattice.
"""

from __future__ import annotations

import numpy as np

from .model import Lattice


def _canonical_ranks(lattice: Lattice) -> np.ndarray:
    # position of each node after sorting by descending code
    order = np.argsort(-lattice.codes.astype(np.int64), kind="stable")
    ranks = np.empty(lattice.node_count, dtype=np.int64)
    ranks[order] = np.arange(lattice.node_count, dtype=np.int64)
    return ranks


def to_dot(lattice: Lattice) -> str:
    ranks = _canonical_ranks(lattice)
    by_rank = np.argsort(ranks)
    lines = ["graph lattice {"]
    for idx in by_rank:
        lines.append(f'  "{lattice.node(int(idx))}";')
    edge_keys = []
    for i, j in lattice.edges:
        a, b = sorted((int(ranks[int(i)]), int(ranks[int(j)])))
        edge_keys.append((a, b))
    for a, b in sorted(edge_keys):
        left = lattice.node(int(by_rank[a]))
        right = lattice.node(int(by_rank[b]))
        lines.append(f'  "{left}" -- "{right}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_ascii(lattice: Lattice) -> str:
    """Truth table: one header row of names, one T/F row per node."""
    names = lattice.vocabulary.names
    if not names:
        return "(empty)\n" * max(lattice.node_count, 1)
    ranks = _canonical_ranks(lattice)
    by_rank = np.argsort(ranks)
    lines = [" ".join(names)]
    for idx in by_rank:
        world = lattice.node(int(idx))
        cells = [
            ("T" if world.value(name) else "F").ljust(len(name)) for name in names
        ]
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines) + "\n"
