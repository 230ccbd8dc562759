import itertools
from typing import Dict, List, Optional

from tqdm import tqdm

from .triples import SrrTriple, check_is_cluster, composition_hypothesis, iota, pc, tp
from ..nakayama.modules import SttObject
from ..nakayama.tilting import enumerate_stt
from ..quivercore.model import HereditaryModel
from ..tame.tubes import TubeData

_SIGNS = ("positive", "negative")


def _signed_stt(r: int, sign: str) -> List[SttObject]:
    if sign == "positive":
        return [stt for stt in enumerate_stt(r) if not stt.shifted]
    return [stt for stt in enumerate_stt(r) if not any(module.is_projective(r) for module in stt.modules)]


def enumerate_clusters(model: HereditaryModel, td: TubeData, display_progress: bool = False) -> List[SrrTriple]:
    """
    All support regular clusters, as iota-images of tuples of support tau-tilting objects.

    For each null sign the tuples run over the objects of that sign in every Lambda_{r_i}; only tuples
    meeting the composition hypothesis are kept. Every image is checked to be a cluster.
    """
    found: Dict[tuple, SrrTriple] = {}
    for sign in _SIGNS:
        per_tube = [_signed_stt(rank, sign) for rank in td.ranks]
        total = 1
        for objects in per_tube:
            total *= len(objects)
        for objects in tqdm(
            itertools.product(*per_tube),
            total=total,
            desc=f"Composing {sign} clusters",
            disable=not display_progress,
        ):
            if not composition_hypothesis(objects, td.ranks, sign):
                continue
            triple = iota(model, td, objects, sign)
            check_is_cluster(model, td, triple)
            found.setdefault(triple.encode(), triple)
    return [found[key] for key in sorted(found)]


def subtriples(model: HereditaryModel, td: TubeData, triple: SrrTriple) -> List[SrrTriple]:
    """The projectively closed triples (M', pc(Y')) with M' in M and Y' in tp(P)."""
    quasi_simples = sorted(tp(triple.projective_vectors))
    modules = sorted(triple.modules)
    found: Dict[tuple, SrrTriple] = {}
    for size in range(len(modules) + 1):
        for chosen_modules in itertools.combinations(modules, size):
            for count in range(len(quasi_simples) + 1):
                for chosen in itertools.combinations(quasi_simples, count):
                    vectors = pc(model, td, chosen)
                    if triple.pplus:
                        candidate = SrrTriple(modules=frozenset(chosen_modules), pplus=vectors)
                    else:
                        candidate = SrrTriple(modules=frozenset(chosen_modules), pminus=vectors)
                    found.setdefault(candidate.encode(), candidate)
    return list(found.values())


def enumerate_closed_triples(
    model: HereditaryModel, td: TubeData, clusters: Optional[List[SrrTriple]] = None, display_progress: bool = False
) -> List[SrrTriple]:
    """Every projectively closed support regular rigid triple, found below the clusters."""
    clusters = enumerate_clusters(model, td) if clusters is None else clusters
    found: Dict[tuple, SrrTriple] = {}
    for cluster in tqdm(clusters, desc="Collecting closed subtriples", disable=not display_progress):
        for triple in subtriples(model, td, cluster):
            found.setdefault(triple.encode(), triple)
    return [found[key] for key in sorted(found)]
