from collections import deque
from functools import lru_cache
from typing import Dict, Iterable, List, Literal, Tuple

import networkx as nx
from tqdm import tqdm

from .domains import bricks_containing
from .modules import (
    NakModule,
    NullSign,
    SttObject,
    check_module,
    check_rank,
    g_vector,
    indecomposables,
    projective,
    tau,
)
from .representation import fac_included, hom_dim, trace_submodule_length
from ..exactgeom.cone import Cone
from ..exceptions import InvariantViolation

Summand = Tuple[NakModule, bool]


def _rigid_with(r: int, first: NakModule, second: NakModule) -> bool:
    """Hom(first, tau second) = 0."""
    translate = tau(r, second)
    return translate is None or hom_dim(r, first, translate) == 0


def summands_compatible(r: int, first: Summand, second: Summand) -> bool:
    (module_a, shifted_a), (module_b, shifted_b) = first, second
    if shifted_a and shifted_b:
        return True
    if shifted_a:
        return hom_dim(r, module_a, module_b) == 0
    if shifted_b:
        return hom_dim(r, module_b, module_a) == 0
    if module_a == module_b:
        return _rigid_with(r, module_a, module_a)
    return _rigid_with(r, module_a, module_b) and _rigid_with(r, module_b, module_a)


def is_support_tau_rigid(r: int, stt: SttObject) -> bool:
    for module in stt.modules:
        check_module(r, module)
    for module in stt.shifted:
        check_module(r, module)
        if not module.is_projective(r):
            return False
    summands = stt.summands
    if not all(summands_compatible(r, summand, summand) for summand in summands):
        return False
    return all(
        summands_compatible(r, summands[a], summands[b])
        for a in range(len(summands))
        for b in range(a + 1, len(summands))
    )


def is_support_tau_tilting(r: int, stt: SttObject) -> bool:
    return len(stt) == r and is_support_tau_rigid(r, stt)


@lru_cache(maxsize=None)
def tau_rigid_candidates(r: int) -> Tuple[Summand, ...]:
    """Indecomposable tau-rigid modules together with the shifted projectives."""
    modules = [(module, False) for module in indecomposables(r) if _self_rigid(r, module)]
    shifts = [(projective(r, vertex), True) for vertex in range(1, r + 1)]
    return tuple(sorted(modules + shifts))


def _self_rigid(r: int, module: NakModule) -> bool:
    return _rigid_with(r, module, module)


@lru_cache(maxsize=None)
def _compatibility(r: int) -> Dict[Summand, frozenset]:
    candidates = tau_rigid_candidates(r)
    return {
        first: frozenset(second for second in candidates if second != first and summands_compatible(r, first, second))
        for first in candidates
    }


def _enumerate_by_subsets(r: int, display_progress: bool = False) -> List[SttObject]:
    candidates = list(tau_rigid_candidates(r))
    compatible = _compatibility(r)
    found = []

    def extend(chosen: List[Summand], start: int):
        if len(chosen) == r:
            found.append(SttObject.from_summands(chosen))
            return
        for index in range(start, len(candidates)):
            candidate = candidates[index]
            if all(candidate in compatible[member] for member in chosen):
                chosen.append(candidate)
                extend(chosen, index + 1)
                chosen.pop()

    for index in tqdm(range(len(candidates)), desc="Searching tau-rigid subsets", disable=not display_progress):
        extend([candidates[index]], index + 1)
    return found


def exchange_partner(r: int, stt: SttObject, summand: Summand) -> SttObject:
    """The unique other support tau-tilting object containing stt minus summand."""
    remaining = [member for member in stt.summands if member != summand]
    compatible = _compatibility(r)
    partners = [
        candidate
        for candidate in tau_rigid_candidates(r)
        if candidate != summand
        and candidate not in remaining
        and all(candidate in compatible[member] for member in remaining)
    ]
    if len(partners) != 1:
        raise InvariantViolation(
            f"Almost complete object {SttObject.from_summands(remaining).label()} over Lambda_{r} has "
            f"{len(partners) + 1} completions instead of two."
        )
    return SttObject.from_summands(remaining + partners)


def _enumerate_by_mutation(r: int, display_progress: bool = False) -> List[SttObject]:
    start = SttObject(modules=frozenset(projective(r, vertex) for vertex in range(1, r + 1)))
    seen = {start.encode(): start}
    queue = deque([start])
    with tqdm(desc="Exploring the exchange graph", disable=not display_progress) as progress_bar:
        while queue:
            current = queue.popleft()
            for summand in current.summands:
                partner = exchange_partner(r, current, summand)
                if partner.encode() not in seen:
                    seen[partner.encode()] = partner
                    queue.append(partner)
            progress_bar.update(1)
    return list(seen.values())


@lru_cache(maxsize=None)
def _enumerate_stt_cached(r: int) -> Tuple[SttObject, ...]:
    by_subsets = {stt.encode(): stt for stt in _enumerate_by_subsets(r)}
    by_mutation = {stt.encode(): stt for stt in _enumerate_by_mutation(r)}
    if set(by_subsets) != set(by_mutation):
        raise InvariantViolation(
            f"Subset search found {len(by_subsets)} support tau-tilting objects over Lambda_{r} but the exchange "
            f"graph has {len(by_mutation)}."
        )
    return tuple(by_subsets[key] for key in sorted(by_subsets))


def enumerate_stt(r: int, display_progress: bool = False) -> List[SttObject]:
    """
    All support tau-tilting objects of Lambda_r, each with exactly r summands.

    They are found twice, by a clique search over pairwise-compatible tau-rigid summands and by
    breadth-first exploration of the exchange graph from Lambda; the two lists must agree.
    """
    check_rank(r)
    if display_progress:
        _enumerate_by_subsets(r, display_progress=True)
        _enumerate_by_mutation(r, display_progress=True)
    return list(_enumerate_stt_cached(r))


def null_sign(r: int, stt: SttObject) -> NullSign:
    if not is_support_tau_rigid(r, stt):
        raise ValueError(f"{stt.label()} is not support tau-rigid over Lambda_{r}!")
    if stt.shifted:
        return NullSign.NONPOSITIVE_ONLY
    if any(module.is_projective(r) for module in stt.modules):
        return NullSign.NONNEGATIVE_ONLY
    return NullSign.BOTH


def complete_to_stt(
    r: int,
    modules: Iterable[NakModule],
    sign: Literal["positive", "negative"],
    shifted: Iterable[NakModule] = (),
) -> SttObject:
    """
    A support tau-tilting object of the requested null sign containing the given summands.

    positive: no shifted summands (null-nonnegative); negative: no projective module summands
    (null-nonpositive). Among the candidates the one with the most projective (resp. shifted) summands
    is returned, so the empty object completes to Lambda (resp. Lambda[1]).
    """
    if sign not in ("positive", "negative"):
        raise ValueError(f"sign must be 'positive' or 'negative'; got '{sign}'!")
    partial = SttObject(modules=frozenset(modules), shifted=frozenset(shifted))
    if not is_support_tau_rigid(r, partial):
        raise ValueError(f"{partial.label()} is not support tau-rigid over Lambda_{r}!")

    def matches(stt: SttObject) -> bool:
        if not (partial.modules <= stt.modules and partial.shifted <= stt.shifted):
            return False
        if sign == "positive":
            return not stt.shifted
        return not any(module.is_projective(r) for module in stt.modules)

    def preference(stt: SttObject):
        if sign == "positive":
            return (-sum(module.is_projective(r) for module in stt.modules), stt.encode())
        return (-len(stt.shifted), stt.encode())

    candidates = sorted(filter(matches, enumerate_stt(r)), key=preference)
    if not candidates:
        raise InvariantViolation(f"{partial.label()} has no {sign} support tau-tilting completion over Lambda_{r}.")
    return candidates[0]


def g_cone(r: int, stt: SttObject) -> Cone:
    """C(M + P[1]): the nonnegative span of the g-vectors of the summands."""
    return Cone.from_generators(r, [g_vector(r, module, shifted) for module, shifted in stt.summands])


def exchange_brick(r: int, first: SttObject, second: SttObject) -> NakModule:
    """
    Brick labelling the wall shared by an exchange pair of support tau-tilting objects.

    The pair is oriented so that Fac M_1 is contained in Fac M_2. If X is the summand of M_2 that is not
    in the other object, the right add(M_1)-approximation of M_2 has cokernel X / trace_{M_1}(X), which is
    Y_{j+s, l-s} for X = Y_{j,l} and s the length of the trace. Over the local algebra Lambda_1 the radical
    endomorphisms of X are added to the approximation. The result is checked against the unique brick
    whose semi-invariant domain contains the shared cone.
    """
    common = set(first.summands) & set(second.summands)
    if len(common) != r - 1 or len(first) != r or len(second) != r:
        raise ValueError(f"{first.label()} and {second.label()} are not an exchange pair over Lambda_{r}!")
    if fac_included(r, second.modules, first.modules) and not fac_included(r, first.modules, second.modules):
        first, second = second, first
    elif not fac_included(r, first.modules, second.modules):
        raise ValueError(f"The torsion classes of {first.label()} and {second.label()} are not nested!")

    exchanged = [module for module, shifted in second.summands if (module, shifted) not in common and not shifted]
    if len(exchanged) != 1:
        raise InvariantViolation(f"{second.label()} has no exchanged module summand.")
    module = exchanged[0]
    trace_length = trace_submodule_length(r, first.modules, module)
    trace_length = max(trace_length, module.length - r)
    brick = NakModule(socle=(module.socle + trace_length - 1) % r + 1, length=module.length - trace_length)
    if not brick.is_brick(r) or brick.length < 1:
        raise InvariantViolation(f"Approximation cokernel {brick.label()} is not a brick over Lambda_{r}.")

    shared = Cone.from_generators(r, [g_vector(r, member, shifted) for member, shifted in sorted(common)])
    containing = bricks_containing(r, shared)
    if containing != [brick]:
        raise InvariantViolation(
            f"Exchange brick {brick.label()} disagrees with the bricks {[b.label() for b in containing]} whose "
            "domains contain the shared wall."
        )
    return brick


def stt_exchange_graph(r: int, display_progress: bool = False) -> nx.Graph:
    """Exchange graph of support tau-tilting objects; every edge carries its exchange brick."""
    objects = enumerate_stt(r)
    graph = nx.Graph()
    graph.add_nodes_from(objects)
    for stt in tqdm(objects, desc="Labelling exchange edges", disable=not display_progress):
        for summand in stt.summands:
            partner = exchange_partner(r, stt, summand)
            if not graph.has_edge(stt, partner):
                graph.add_edge(stt, partner, brick=exchange_brick(r, stt, partner))
    return graph
