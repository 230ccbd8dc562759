"""Exceptional tubes of a tame hereditary algebra: derivation for type A-tilde, tables otherwise."""
import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import networkx as nx

from ..exactgeom.linalg import as_vec, dot, rank, vec_sum
from ..exceptions import InvariantViolation, MissingTubeTable
from ..quivercore.model import HereditaryModel
from ..quivercore.quiver import Quiver
from ..utils.dict import load_dict_from_file
from ..utils.json_schema import validate_against_schema
from ..utils.types import FilePathType, RatVec

_TUBE_HEADER = re.compile(r"^tube\s+(\d+)$")

TubeTable = Sequence[Sequence[Sequence]]


@dataclass(frozen=True)
class Tube:
    rank: int
    quasi_simple_dims: Tuple[RatVec, ...]


@dataclass(frozen=True)
class TubeData:
    """
    The exceptional tubes of a Euclidean model.

    quasi_simple_dims of each tube are listed so that tau X_{j,1} = X_{j-1,1} (indices modulo the rank).
    eta and g_eta are carried along so that the regular domains can be formed from the table alone.
    """

    tubes: Tuple[Tube, ...]
    eta: RatVec
    g_eta: RatVec

    @property
    def n(self) -> int:
        return len(self.eta)

    @property
    def ranks(self) -> Tuple[int, ...]:
        return tuple(tube.rank for tube in self.tubes)

    def tube(self, index: int) -> Tube:
        if not 1 <= index <= len(self.tubes):
            raise ValueError(f"There is no exceptional tube number {index}; the model has {len(self.tubes)}!")
        return self.tubes[index - 1]

    def quasi_simple(self, tube: int, socle: int) -> RatVec:
        tube_ = self.tube(tube)
        return tube_.quasi_simple_dims[(socle - 1) % tube_.rank]


@dataclass(frozen=True, order=True)
class TubeModule:
    """X^i_{j,l}: tube i, quasi-socle X^i_{j,1}, quasi-length l (all indices 1-based)."""

    tube: int
    socle: int
    qlen: int

    def is_brick(self, td: TubeData) -> bool:
        return self.qlen <= td.tube(self.tube).rank

    def is_tau_rigid(self, td: TubeData) -> bool:
        return self.qlen < td.tube(self.tube).rank

    def label(self) -> str:
        return f"X{self.tube}({self.socle},{self.qlen})"


def check_tube_module(td: TubeData, module: TubeModule) -> None:
    rank_ = td.tube(module.tube).rank
    if not 1 <= module.socle <= rank_ or module.qlen < 1:
        raise ValueError(f"{module.label()} is not a module of tube {module.tube} (rank {rank_})!")


def is_a_tilde(quiver: Quiver) -> bool:
    """The underlying graph is a single cycle through every vertex."""
    graph = nx.MultiGraph(quiver.to_digraph())
    return quiver.n >= 2 and graph.number_of_edges() == quiver.n and all(d == 2 for _, d in graph.degree())


def _walk_cycle(graph: nx.MultiGraph) -> List[Tuple[int, int, int]]:
    """The edges of the cycle, walked from vertex 1 towards its smallest neighbour."""
    walk, used, vertex = [], set(), 1
    while len(walk) < graph.number_of_edges():
        other, key = min((other, key) for _, other, key in graph.edges(vertex, keys=True) if key not in used)
        walk.append((vertex, other, key))
        used.add(key)
        vertex = other
    return walk


def _arc_tubes(quiver: Quiver) -> List[List[RatVec]]:
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(1, quiver.n + 1))
    for key, (source, target) in enumerate(quiver.arrows):
        graph.add_edge(source, target, key=key, source=source)
    cycle = _walk_cycle(graph)
    forward = [(u, v) for u, v, key in cycle if graph.edges[u, v, key]["source"] == u]
    backward = [(u, v) for u, v, key in cycle if graph.edges[u, v, key]["source"] != u]

    tubes = []
    for removed, kept in ((forward, backward), (backward, forward)):
        arcs = nx.Graph()
        arcs.add_nodes_from(range(1, quiver.n + 1))
        arcs.add_edges_from(kept)
        components = list(nx.connected_components(arcs))
        if len(removed) >= 2 and len(components) >= 2:
            vertices = range(1, quiver.n + 1)
            tubes.append([tuple(Fraction(int(vertex in arc)) for vertex in vertices) for arc in components])
    return tubes


def _order_by_coxeter(model: HereditaryModel, dims: Sequence[RatVec]) -> List[RatVec]:
    """Start at the lexicographically smallest dimension vector and apply tau^{-1} around the tube."""
    remaining = set(dims)
    ordered = [min(remaining)]
    remaining.remove(ordered[0])
    while remaining:
        successors = [d for d in remaining if model.tau_dim(d) == ordered[-1]]
        if len(successors) != 1:
            raise InvariantViolation(
                f"Quasi-simple {ordered[-1]} of '{model.quiver}' has {len(successors)} inverse translates in its tube."
            )
        ordered.append(successors[0])
        remaining.remove(successors[0])
    return ordered


def parse_tube_table(text: str) -> List[List[RatVec]]:
    """Line-oriented tables: 'tube <rank>' followed by rank lines of integers; '#' starts a comment."""
    tubes: List[List[RatVec]] = []
    expected = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        header = _TUBE_HEADER.match(line)
        if header is not None:
            if expected:
                raise ValueError(f"Line {number}: the previous tube is missing {expected} quasi-simple rows!")
            expected = int(header.group(1))
            tubes.append([])
            continue
        if not expected:
            raise ValueError(f"Line {number}: expected 'tube <rank>' but found '{line}'!")
        tubes[-1].append(as_vec(int(token) for token in line.split()))
        expected -= 1
    if expected:
        raise ValueError(f"The last tube is missing {expected} quasi-simple rows!")
    return tubes


def load_tube_table(file_path: FilePathType) -> List[List[RatVec]]:
    file_path = Path(file_path)
    assert file_path.is_file(), f"{file_path} is not a file."
    if file_path.suffix in (".json", ".yml", ".yaml"):
        table = load_dict_from_file(file_path=file_path)
        validate_against_schema(table, "tube_table_schema.json")
        for tube in table["tubes"]:
            listed = len(tube["quasi_simple_dims"])
            assert listed == tube["rank"], f"Tube of rank {tube['rank']} in {file_path} lists {listed} quasi-simples."
        return [[as_vec(dim) for dim in tube["quasi_simple_dims"]] for tube in table["tubes"]]
    return parse_tube_table(file_path.read_text())


def validate_tube_data(model: HereditaryModel, td: TubeData) -> None:
    """Raise InvariantViolation unless td describes the exceptional tubes of model."""
    n = model.n
    if td.eta != model.eta or td.g_eta != model.g_eta:
        raise InvariantViolation(f"Tube data does not carry the null root of '{model.quiver}'.")
    for index, tube in enumerate(td.tubes, start=1):
        dims = tube.quasi_simple_dims
        if tube.rank < 2 or len(dims) != tube.rank:
            raise InvariantViolation(f"Tube {index} has rank {tube.rank} and {len(dims)} quasi-simples.")
        for d in dims:
            if len(d) != n or any(value < 0 or value.denominator != 1 for value in d):
                raise InvariantViolation(f"Tube {index} lists {d}, which is not a dimension vector for n={n}.")
            if dot(model.g_eta, d) != 0:
                raise InvariantViolation(f"Quasi-simple {d} of tube {index} is not regular.")
        for j in range(tube.rank):
            if model.tau_dim(dims[j]) != dims[j - 1]:
                raise InvariantViolation(f"Tube {index} is not listed in tau-order at position {j + 1}.")
        if vec_sum(dims, n) != model.eta:
            raise InvariantViolation(f"The quasi-simples of tube {index} do not sum to the null root.")
    if sum(rank_ - 1 for rank_ in td.ranks) != n - 2:
        raise InvariantViolation(f"Tube ranks {td.ranks} do not satisfy sum(r_i - 1) = n - 2 for n={n}.")
    spanning = [model.eta] + [d for tube in td.tubes for d in tube.quasi_simple_dims[1:]]
    if rank(spanning, n) != n - 1:
        raise InvariantViolation("The null root and the quasi-simples do not span the orthogonal of g(eta).")


def tube_data(model: HereditaryModel, table: Optional[Union[FilePathType, TubeTable]] = None) -> TubeData:
    """
    Exceptional tube data of a Euclidean model.

    For type A-tilde the tubes are derived: removing the arrows of one direction from the cycle leaves
    arcs whose indicator vectors are the quasi-simples of one tube. Other types need a table, given as
    a file path or as a list of tubes, each a list of quasi-simple dimension vectors in tau-order.
    """
    if is_a_tilde(model.quiver):
        if table is not None:
            warnings.warn(f"Ignoring the tube table supplied for the A-tilde quiver '{model.quiver}'.")
        tubes = [_order_by_coxeter(model, dims) for dims in _arc_tubes(model.quiver)]
    elif table is None:
        raise MissingTubeTable(f"'{model.quiver}' is not of type A-tilde; please supply a tube table!")
    elif isinstance(table, (str, Path)):
        tubes = load_tube_table(table)
    else:
        tubes = [[as_vec(d) for d in dims] for dims in table]

    td = TubeData(
        tubes=tuple(Tube(rank=len(dims), quasi_simple_dims=tuple(dims)) for dims in tubes),
        eta=model.eta,
        g_eta=model.g_eta,
    )
    validate_tube_data(model, td)
    return td
