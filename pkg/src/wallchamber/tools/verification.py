"""Verification suites driven by the command line; each returns a report and never raises on failure."""
import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from ..coamalg.regular import verify_thm_b
from ..exactgeom.linalg import dot, vec_scale, vec_sub, vec_sum
from ..exceptions import InvariantViolation
from ..mutapp.search import verify_mutation_invariance
from ..nakayama.domains import domain
from ..nakayama.modules import bricks
from ..nakayama.tilting import enumerate_stt
from ..quivercore.model import build_model
from ..quivercore.quiver import Quiver
from ..srr.cones import build_srr_fan
from ..srr.walls import verify_chamber_bijection
from ..tame.infinitesimal import infinitesimal_membership, vperp_domain_membership
from ..tame.tubes import tube_data
from ..utils import DeepDict, FilePathType, dict_deep_update, load_dict_from_file, validate_against_schema
from ..utils.report import make_report, merge_reports, record_violation

DEFAULT_SETTINGS = dict(
    seed=0,
    samples=200,
    max_stt_rank=5,
    mutation_sequence_length=5,
    max_search_depth=3,
    display_progress=False,
)
QUIVER_SUITES = ("thmB", "fan", "thmC", "mutation")
RANK_SUITES = ("thmA", "stt")
SUITES = RANK_SUITES + QUIVER_SUITES


def load_verification_settings(file_path: Optional[FilePathType] = None, **overrides) -> dict:
    """Package defaults, updated by a YAML/JSON settings file and then by keyword overrides."""
    settings = dict(DEFAULT_SETTINGS)
    if file_path is not None:
        settings = dict_deep_update(settings, load_dict_from_file(file_path))
    settings = dict_deep_update(settings, {key: value for key, value in overrides.items() if value is not None})
    validate_against_schema(settings, "verification_settings_schema.json")
    return settings


def num_threads() -> int:
    value = os.environ.get("WALLCHAMBER_NUM_THREADS", "1")
    assert value.isdigit() and int(value) >= 1, f"WALLCHAMBER_NUM_THREADS must be a positive integer; got '{value}'."
    return int(value)


def _random_point(rng: np.random.Generator, generators: Sequence, ambient_dim: int) -> tuple:
    weights = rng.integers(0, 5, size=len(generators))
    return vec_sum((vec_scale(int(weight), generator) for weight, generator in zip(weights, generators)), ambient_dim)


def thm_a_suite(rank: int, settings: dict) -> DeepDict:
    """The infinitesimal and v-perp oracles agree on random pairs (v, w) for every brick of Lambda_2..Lambda_rank."""
    rng = np.random.default_rng(settings["seed"])
    report = make_report(ranks=list(range(2, rank + 1)), samples=settings["samples"])
    for r in range(2, rank + 1):
        for brick in bricks(r):
            cone = domain(r, brick)
            for _ in range(settings["samples"]):
                v = _random_point(rng, cone.generators, r)
                w = tuple(Fraction(int(value)) for value in rng.integers(-4, 5, size=r))
                if dot(v, v) != 0:
                    w = vec_sub(vec_scale(dot(v, v), w), vec_scale(dot(w, v), v))
                if infinitesimal_membership(r, w, brick, v) != vperp_domain_membership(r, w, brick, v):
                    record_violation(
                        report, "oracle_agreement", rank=r, brick=brick.label(), v=list(v), w=list(w)
                    )
    return report


def stt_suite(rank: int, settings: dict) -> DeepDict:
    """Clique search and exchange-graph exploration find the same support tau-tilting objects."""
    report = make_report(counts={})
    for r in range(1, min(rank, settings["max_stt_rank"]) + 1):
        try:
            report["counts"][str(r)] = len(enumerate_stt(r))
        except InvariantViolation as error:
            record_violation(report, "dual_enumeration", rank=r, message=str(error))
    return report


def _quiver_suite(name: str, quiver: Quiver, tube_table_file_path, settings: dict) -> DeepDict:
    model = build_model(quiver)
    td = tube_data(model, tube_table_file_path)
    progress = settings["display_progress"]
    if name == "thmB":
        return verify_thm_b(model, td, display_progress=progress)
    if name == "thmC":
        return verify_chamber_bijection(model, td, display_progress=progress)
    if name == "fan":
        try:
            _, report = build_srr_fan(model, td, display_progress=progress)
        except InvariantViolation as error:
            report = make_report()
            record_violation(report, "fan", message=str(error))
        return report
    rng = np.random.default_rng(settings["seed"])
    sequence = []
    for _ in range(settings["mutation_sequence_length"]):
        choices = [k for k in range(1, model.n + 1) if not sequence or k != sequence[-1]]
        sequence.append(int(rng.choice(choices)))
    return verify_mutation_invariance(quiver, sequence, tube_table_file_path, display_progress=progress)


def run_suites(
    suites: Sequence[str],
    quiver: Optional[Quiver] = None,
    rank: Optional[int] = None,
    tube_table_file_path: Optional[FilePathType] = None,
    settings: Optional[dict] = None,
) -> DeepDict:
    """
    Run the selected suites on a thread pool of WALLCHAMBER_NUM_THREADS workers.

    Reports are merged in suite-name order so that the output does not depend on scheduling.
    """
    settings = settings or load_verification_settings()
    for name in suites:
        if name not in SUITES:
            raise ValueError(f"Unknown suite '{name}'; choose from {list(SUITES)}!")
        if name in QUIVER_SUITES and quiver is None:
            raise ValueError(f"Suite '{name}' needs a quiver!")
        if name in RANK_SUITES and rank is None:
            raise ValueError(f"Suite '{name}' needs a rank!")

    jobs: Dict[str, Callable[[], DeepDict]] = {}
    for name in suites:
        if name == "thmA":
            jobs[name] = lambda: thm_a_suite(rank, settings)
        elif name == "stt":
            jobs[name] = lambda: stt_suite(rank, settings)
        else:
            jobs[name] = lambda name=name: _quiver_suite(name, quiver, tube_table_file_path, settings)

    with ThreadPoolExecutor(max_workers=num_threads()) as executor:
        futures = {name: executor.submit(job) for name, job in jobs.items()}
        reports: List = [(name, futures[name].result()) for name in sorted(futures)]
    return merge_reports(reports, suites=sorted(jobs), seed=settings["seed"])
