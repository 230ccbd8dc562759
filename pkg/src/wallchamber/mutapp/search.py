import itertools
from collections import deque
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from tqdm import tqdm

from .transport import PictureState, mutate_null_data, mutate_picture
from ..exceptions import InvariantViolation
from ..quivercore.model import build_model
from ..quivercore.mutation import check_exchange_matrix
from ..quivercore.quiver import Quiver
from ..tame.tubes import tube_data
from ..utils.dict import DeepDict
from ..utils.report import make_report, merge_reports, record_violation
from ..utils.types import FilePathType


def _is_oriented(exchange_matrix: np.ndarray, cycle: Sequence[int]) -> bool:
    steps = [exchange_matrix[a - 1, b - 1] for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]])]
    return all(step > 0 for step in steps) or all(step < 0 for step in steps)


def minimal_unoriented_cycle(exchange_matrix) -> FrozenSet[int]:
    """
    Vertex set of the shortest cycle of the underlying graph that is not an oriented cycle.

    Raises ValueError when there is no such cycle or when the shortest one is not unique.
    """
    matrix = check_exchange_matrix(exchange_matrix)
    graph = nx.Graph()
    graph.add_nodes_from(range(1, matrix.shape[0] + 1))
    graph.add_edges_from((i + 1, j + 1) for i, j in zip(*np.nonzero(matrix)) if i < j)
    cycles = [cycle for cycle in nx.simple_cycles(graph) if not _is_oriented(matrix, cycle)]
    if not cycles:
        raise ValueError("The quiver has no unoriented cycle!")
    shortest = min(len(cycle) for cycle in cycles)
    minimal = {frozenset(cycle) for cycle in cycles if len(cycle) == shortest}
    if len(minimal) != 1:
        raise ValueError(f"The quiver has {len(minimal)} minimal unoriented cycles; expected a unique one!")
    return minimal.pop()


def acyclic_cycle_orientations(n: int) -> Iterator[Quiver]:
    """Every acyclic orientation of every n-cycle on the vertices 1..n (the quivers of type A~_{n-1})."""
    if n < 3:
        raise ValueError(f"Cycle orientations need at least three vertices; got {n}!")
    seen = set()
    for rest in itertools.permutations(range(2, n + 1)):
        if rest[0] > rest[-1]:
            continue
        order = (1,) + rest
        edges = list(zip(order, order[1:] + order[:1]))
        for flips in itertools.product((False, True), repeat=n):
            if all(flips) or not any(flips):
                continue
            arrows = tuple((b, a) if flip else (a, b) for (a, b), flip in zip(edges, flips))
            quiver = Quiver(n=n, arrows=arrows)
            if quiver.arrows not in seen:
                seen.add(quiver.arrows)
                yield quiver


def search_null_data(
    target, max_depth: int = 3, display_progress: bool = False
) -> Optional[Tuple[Quiver, Tuple[int, ...], PictureState]]:
    """
    Breadth-first search for a mutation sequence from an acyclic A~ orientation to the target quiver.

    Returns the starting quiver, the sequence and the state carrying the transported null data, or
    None when no sequence of length at most max_depth reaches the target.
    """
    target = target.exchange_matrix() if isinstance(target, Quiver) else check_exchange_matrix(target)
    queue = deque()
    for quiver in acyclic_cycle_orientations(target.shape[0]):
        model = build_model(quiver)
        start = PictureState(exchange_matrix=quiver.exchange_matrix(), eta=model.eta, g_eta=model.g_eta)
        queue.append((quiver, (), start))

    with tqdm(desc="Searching mutation sequences", disable=not display_progress) as progress_bar:
        while queue:
            quiver, sequence, state = queue.popleft()
            progress_bar.update(1)
            if np.array_equal(state.exchange_matrix, target):
                return quiver, sequence, state
            if len(sequence) == max_depth:
                continue
            for k in range(1, state.n + 1):
                if sequence and sequence[-1] == k:
                    continue
                queue.append((quiver, sequence + (k,), mutate_null_data(state, k)))
    return None


def verify_mutation_invariance(
    quiver: Quiver,
    sequence: Sequence[int],
    tube_table_file_path: Optional[FilePathType] = None,
    display_progress: bool = False,
) -> DeepDict:
    """
    Transport the regular picture of quiver along sequence and compare each step with the start.

    The chamber count must not change and every transported picture must satisfy the wall-and-chamber
    axioms. Wall and piece counts are recorded per step.
    """
    model = build_model(quiver)
    td = tube_data(model, tube_table_file_path)
    state = PictureState.from_regular(model, td)
    structure = state.verify(display_progress=display_progress)
    reports = [("start", structure.report)]
    chamber_count = len(structure.chambers)

    steps: List[dict] = []
    for index, k in enumerate(sequence, start=1):
        step = make_report(vertex=k)
        try:
            state = mutate_picture(state, k, verify=False, display_progress=display_progress)
        except InvariantViolation as error:
            record_violation(step, "transport", message=str(error))
            reports.append((f"step_{index}", step))
            break
        current = state.verify(display_progress=display_progress)
        step["quiver"] = state.quiver.to_text()
        step["wall_count"] = len(state.walls)
        step["label_count"] = len(set(state.labels()))
        step["chamber_count"] = len(current.chambers)
        if not current.verified:
            record_violation(step, "axioms", violations=current.report["violations"])
        if len(current.chambers) != chamber_count:
            record_violation(step, "chamber_count", expected=chamber_count, found=len(current.chambers))
        steps.append(dict(vertex=k, chamber_count=len(current.chambers)))
        reports.append((f"step_{index}", step))

    return merge_reports(
        reports, quiver=quiver.to_text(), sequence=list(sequence), chamber_count=chamber_count, steps=steps
    )
