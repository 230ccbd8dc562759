import re
from dataclasses import dataclass
from typing import Tuple

import networkx as nx
import numpy as np

_QUIVER_PATTERN = re.compile(r"^\s*(\d+)\s*;\s*(.*)$")
_ARROW_PATTERN = re.compile(r"^\s*(\d+)\s*>\s*(\d+)\s*$")


@dataclass(frozen=True)
class Quiver:
    """A finite quiver on the vertices 1..n; arrows are (source, target) pairs, repeated for multiplicity."""

    n: int
    arrows: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"A quiver needs at least one vertex; got n={self.n}!")
        arrows = tuple(sorted((int(source), int(target)) for source, target in self.arrows))
        for source, target in arrows:
            if not (1 <= source <= self.n and 1 <= target <= self.n):
                raise ValueError(f"Arrow {source}>{target} leaves the vertex set 1..{self.n}!")
            if source == target:
                raise ValueError(f"Loops are not allowed (found {source}>{target})!")
        object.__setattr__(self, "arrows", arrows)
        if not nx.is_connected(self.to_digraph().to_undirected(as_view=True)):
            raise ValueError(f"Quiver '{self.to_text()}' is not connected!")

    @classmethod
    def from_text(cls, text: str) -> "Quiver":
        """Parse the text format 'n; i>j, i>j, ...' (order-insensitive)."""
        match = _QUIVER_PATTERN.match(text)
        if match is None:
            raise ValueError(f"'{text}' is not a quiver of the form 'n; i>j, i>j, ...'!")
        arrows = []
        for token in filter(None, (token.strip() for token in match.group(2).split(","))):
            arrow = _ARROW_PATTERN.match(token)
            if arrow is None:
                raise ValueError(f"'{token}' is not an arrow of the form 'i>j'!")
            arrows.append((int(arrow.group(1)), int(arrow.group(2))))
        return cls(n=int(match.group(1)), arrows=tuple(arrows))

    @classmethod
    def from_exchange_matrix(cls, exchange_matrix: np.ndarray) -> "Quiver":
        exchange_matrix = np.asarray(exchange_matrix, dtype=int)
        n = exchange_matrix.shape[0]
        arrows = [
            (i + 1, j + 1)
            for i in range(n)
            for j in range(n)
            if exchange_matrix[i, j] > 0
            for _ in range(int(exchange_matrix[i, j]))
        ]
        return cls(n=n, arrows=tuple(arrows))

    def to_text(self) -> str:
        return f"{self.n}; " + ",".join(f"{source}>{target}" for source, target in self.arrows)

    def to_digraph(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.arrows)
        return graph

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.to_digraph())

    def arrow_matrix(self) -> np.ndarray:
        """A with A[i, j] = number of arrows i -> j (0-based indices)."""
        matrix = np.zeros((self.n, self.n), dtype=int)
        for source, target in self.arrows:
            matrix[source - 1, target - 1] += 1
        return matrix

    def exchange_matrix(self) -> np.ndarray:
        arrows = self.arrow_matrix()
        return arrows - arrows.T

    def __str__(self) -> str:
        return self.to_text()


def parse_quiver(text: str) -> Quiver:
    return Quiver.from_text(text)
