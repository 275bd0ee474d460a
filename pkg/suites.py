# suites.py
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import config
from affine import GradingDatum, build_affine, flip, involutions
from errors import LieTheoryError, NotApplicable
from hermitian import (
    HermitianPair,
    antichain_below,
    entails,
    expected_antichain_type,
    expected_rank,
    harish_chandra_cascade,
    hermitian_pair,
    hermitian_pairs,
    is_antichain,
    is_tube_type,
    ort_subsets,
    unique_max_antichain,
)
from iab import components, enumerate_iab, special_node
from oracle import ad_power_height, bracket_dim, standard_pairs
from orbits import (
    adding_roots_holds,
    check_A1A2A3,
    enumerate_orbits,
    orbit_dimension,
    orthogonal_subsets,
)
from rootsys import parse_label, unit
from sphericity import (
    SPECIAL_DIAGRAMS,
    ad_heights,
    grade_heights,
    height_four_identity,
    is_spherical_subalgebra,
    label_sum_identity,
    mt_criterion,
    nonspherical_exists,
    pi_S_matrix,
    projection_identity,
    special_grading_check,
    special_subsets,
    sum_eta_identity,
    weighted_dynkin,
)

logger = logging.getLogger(__name__)

# Grading keys are what crosses the process boundary
GradingKey = Tuple[str, int, Tuple[int, ...], bool, Optional[int]]

FLIP_TYPES = ("A1", "A2", "A3", "A4", "B2", "G2")


# ============== REPORTS ==============

@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    failures: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, checked: int, failures: List[dict]) -> None:
        self.checked += checked
        self.failures.extend(failures)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "ok": self.ok, "checked": self.checked, "failures": self.failures}


def _failure(where: str, subject: Optional[str] = None, detail: str = "", witness=None) -> dict:
    return {
        "where": where,
        "subject": subject,
        "detail": detail,
        "witness": repr(witness) if witness is not None else None,
    }


# ============== GRADING KEYS ==============

def grading_key(g: GradingDatum) -> GradingKey:
    return (g.system.finite_type, g.system.twist, tuple(g.s), g.flip, g.level_bound)


def grading_from_key(key: GradingKey) -> GradingDatum:
    finite_type, twist, s, is_flip, level_bound = key
    if is_flip:
        return flip(finite_type, level_bound=level_bound)
    return GradingDatum(build_affine(finite_type, twist), s, level_bound=level_bound)


def _call(func: Callable[[GradingDatum], object], key: GradingKey):
    return func(grading_from_key(key))


def _guarded(check: Callable[[GradingDatum], Tuple[int, List[dict]]], g: GradingDatum) -> Tuple[int, List[dict]]:
    try:
        return check(g)
    except LieTheoryError as e:
        return 1, [_failure(g.label, detail=f"{type(e).__name__}: {e.detail}", witness=e.witness)]


def map_gradings(func: Callable, gradings: Sequence[GradingDatum], jobs: int = None) -> list:
    """Run func on every grading; results keep the sweep order"""
    jobs = config.SWEEP_JOBS if jobs is None else jobs
    keys = [grading_key(g) for g in gradings]
    if jobs <= 1:
        return [_call(func, key) for key in keys]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(partial(_call, func), keys))


def _sweep(name: str, check: Callable, max_rank: int, types=None, level_bound=None, jobs=None,
           only_special: bool = False) -> SuiteReport:
    gradings = involutions(max_rank, types=types, level_bound=level_bound)
    if only_special:
        gradings = [g for g in gradings if nonspherical_exists(g)]
    report = SuiteReport(name)
    for checked, failures in map_gradings(partial(_guarded, check), gradings, jobs):
        report.merge(checked, failures)
    logger.info(f"Suite {name}: {report.checked} checks, {len(report.failures)} failures")
    return report


# ============== PER-GRADING CHECKS ==============

def check_height_bounds(g: GradingDatum) -> Tuple[int, List[dict]]:
    checked, failures = 0, []
    for idx, a in enumerate(enumerate_iab(g).subalgebras()):
        for S in orthogonal_subsets(a):
            checked += 1
            try:
                h0, h1 = grade_heights(a, S)
            except LieTheoryError as e:
                failures.append(_failure(g.label, str(idx), e.detail, S.weights))
                continue
            if max(h0, h1) == 4 and not height_four_identity(a, S):
                failures.append(_failure(g.label, str(idx), "grade-4 identity fails", S.weights))
    return checked, failures


def check_mt(g: GradingDatum) -> Tuple[int, List[dict]]:
    checked, failures = 0, []
    for idx, a in enumerate(enumerate_iab(g).subalgebras()):
        checked += 1
        verdict = is_spherical_subalgebra(a, str(idx))
        contained = mt_criterion(g, a)
        if verdict.spherical == contained:
            failures.append(_failure(g.label, str(idx), f"spherical={verdict.spherical} with abar contained={contained}"))
        if verdict.max_h1 != verdict.heights[1]:
            failures.append(_failure(g.label, str(idx), "open representative does not attain the largest h1", verdict.open_rep.weights))
    return checked, failures


def check_special_diagrams(g: GradingDatum) -> Tuple[int, List[dict]]:
    checked, failures = 0, []
    top = g.neg(unit(g.system.rank, special_node(g)))
    for S in special_subsets(g):
        checked += 1
        if len(S) > 4:
            failures.append(_failure(g.label, detail=f"|S| = {len(S)}", witness=S))
        cartan, verdict = pi_S_matrix(g, S, top)
        if not verdict.is_affine or verdict.label not in SPECIAL_DIAGRAMS:
            failures.append(_failure(g.label, detail=f"Pi_S is {verdict.verdict} {verdict.label}", witness=S))
        elif not label_sum_identity(cartan, verdict):
            failures.append(_failure(g.label, detail=f"label sum of {verdict.label} is not 4", witness=S))
    return checked, failures


def check_weighted_dynkin(g: GradingDatum) -> Tuple[int, List[dict]]:
    checked, failures = 0, []
    values = set()
    for S in special_subsets(g, maximum=False):
        checked += 1
        values.add(tuple(sorted(weighted_dynkin(g, S).items())))
        if not sum_eta_identity(g, S):
            failures.append(_failure(g.label, detail="sum of <alpha_p, eta^vee> eta differs", witness=S))
        if not projection_identity(g, S):
            failures.append(_failure(g.label, detail="component projections differ", witness=S))
    if len(values) > 1:
        failures.append(_failure(g.label, detail="weighted Dynkin values depend on S", witness=sorted(values)))
    for report in special_grading_check(g):
        checked += 1
        if not report.ok:
            failures.append(_failure(g.label, detail="special grade scan fails", witness=report.to_dict()))
    p = special_node(g)
    for comp in components(g, p):
        checked += 1
        if not is_tube_type(HermitianPair(comp.system, comp.local_attach)):
            failures.append(_failure(g.label, detail=f"component {comp.nodes} is not of tube type"))
    return checked, failures


def check_nonspherical_predicate(g: GradingDatum) -> Tuple[int, List[dict]]:
    observed = any(not is_spherical_subalgebra(a).spherical for a in enumerate_iab(g).subalgebras())
    predicted = nonspherical_exists(g)
    if observed != predicted:
        return 1, [_failure(g.label, detail=f"predicate {predicted}, sweep {observed}")]
    return 1, []


def check_orbits(g: GradingDatum) -> Tuple[int, List[dict]]:
    checked, failures = 0, []
    for idx, a in enumerate(enumerate_iab(g).subalgebras()):
        checked += 1
        report = check_A1A2A3(a)
        if not report:
            failures.append(_failure(g.label, str(idx), f"property {report.prop} fails", report.witness))
            continue
        if not adding_roots_holds(a):
            failures.append(_failure(g.label, str(idx), "adding-roots property fails"))
        records = enumerate_orbits(a)
        open_records = [r for r in records if r.dim == a.dim]
        if len(open_records) != 1 or not open_records[0].is_open:
            failures.append(_failure(g.label, str(idx), f"{len(open_records)} orbits of full dimension"))
    return checked, failures


# ============== SUITES ==============

def suite_height_bounds(max_rank: int = None, types=None, level_bound=None, jobs=None) -> SuiteReport:
    return _sweep("cor73", check_height_bounds, max_rank, types, level_bound, jobs)


def suite_abar_criterion(max_rank: int = None, types=None, level_bound=None, jobs=None) -> SuiteReport:
    return _sweep("mt", check_mt, max_rank, types, level_bound, jobs, only_special=True)


def suite_special_diagrams(max_rank: int = None, types=None, level_bound=None, jobs=None) -> SuiteReport:
    return _sweep("p63", check_special_diagrams, max_rank, types, level_bound, jobs, only_special=True)


def suite_weighted_dynkin(max_rank: int = None, types=None, level_bound=None, jobs=None) -> SuiteReport:
    return _sweep("weighted-dynkin", check_weighted_dynkin, max_rank, types, level_bound, jobs, only_special=True)


def suite_nonspherical_predicate(max_rank: int = None, types=None, level_bound=None, jobs=None) -> SuiteReport:
    return _sweep("panyushev", check_nonspherical_predicate, max_rank, types, level_bound, jobs)


def suite_orbit_dim(max_rank: int = None, types=None, level_bound=None, jobs=None) -> SuiteReport:
    return _sweep("orbit-dim", check_orbits, max_rank, types, level_bound, jobs)


def _pairs(max_rank: int, types) -> List[HermitianPair]:
    max_rank = config.MAX_RANK if max_rank is None else max_rank
    pairs = []
    for label, node in hermitian_pairs(max_rank):
        if types and not any(label == t or label[0] == t for t in types):
            continue
        pairs.append(hermitian_pair(label, node))
    return pairs


def suite_hermitian_ranks(max_rank: int = None, types=None, level_bound=None, jobs=None) -> SuiteReport:
    report = SuiteReport("hermitian-ranks")
    for p in _pairs(max_rank, types):
        letter, n = parse_label(p.system.bourbaki_type)
        expected = expected_rank(letter, n, p.q + 1)
        got = len(harish_chandra_cascade(p))
        failures = [] if got == expected else [_failure(p.label, detail=f"rank {got}, expected {expected}")]
        report.merge(1, failures)
    return report


def suite_antichain(max_rank: int = None, types=None, level_bound=None, jobs=None) -> SuiteReport:
    report = SuiteReport("antichain")
    for p in _pairs(max_rank, types):
        for B in ort_subsets(p):
            try:
                A = antichain_below(p, B.roots)
            except LieTheoryError as e:
                report.merge(1, [_failure(p.label, detail=e.detail, witness=B.roots)])
                continue
            failures = []
            if not is_antichain(p, A.roots) or not entails(p, A.roots, B.roots):
                failures.append(_failure(p.label, detail=f"{A.roots} is not an antichain below B", witness=B.roots))
            elif A.type != expected_antichain_type(p, B):
                failures.append(_failure(p.label, detail=f"type {A.type}, expected {expected_antichain_type(p, B)}", witness=B.roots))
            report.merge(1, failures)
        if is_tube_type(p):
            try:
                unique_max_antichain(p)
                report.merge(1, [])
            except LieTheoryError as e:
                report.merge(1, [_failure(p.label, detail=e.detail, witness=e.witness)])
    return report


def suite_flip_count(max_rank: int = None, types=None, level_bound=None, jobs=None) -> SuiteReport:
    report = SuiteReport("flip-count")
    max_rank = config.MAX_RANK if max_rank is None else max_rank
    for finite_type in FLIP_TYPES:
        _, n = parse_label(finite_type)
        if n > max_rank or (types and not any(finite_type == t or finite_type[0] == t for t in types)):
            continue
        g = flip(finite_type, level_bound=level_bound)
        try:
            count = len(enumerate_iab(g, cross_check=True))
        except LieTheoryError as e:
            report.merge(1, [_failure(g.label, detail=e.detail)])
            continue
        failures = [] if count == 2 ** n else [_failure(g.label, detail=f"{count} elements, expected {2 ** n}")]
        report.merge(1, failures)
    return report


def suite_oracle(max_rank: int = None, types=None, level_bound=None, jobs=None) -> SuiteReport:
    report = SuiteReport("oracle")
    for pair in standard_pairs():
        for idx, a in enumerate(enumerate_iab(pair.grading).subalgebras()):
            for S in orthogonal_subsets(a):
                failures = []
                if ad_power_height(pair, S) != ad_heights(a, S):
                    failures.append(_failure(pair.family, str(idx), "ad-power and grade heights differ", S.weights))
                if bracket_dim(pair, S) != orbit_dimension(a, S):
                    failures.append(_failure(pair.family, str(idx), "tangent dimension differs", S.weights))
                report.merge(1, failures)
    return report


SUITES: Dict[str, Callable[..., SuiteReport]] = {
    "cor73": suite_height_bounds,
    "mt": suite_abar_criterion,
    "p63": suite_special_diagrams,
    "weighted-dynkin": suite_weighted_dynkin,
    "antichain": suite_antichain,
    "hermitian-ranks": suite_hermitian_ranks,
    "panyushev": suite_nonspherical_predicate,
    "orbit-dim": suite_orbit_dim,
    "flip-count": suite_flip_count,
    "oracle": suite_oracle,
}


def run_suite(name: str, **kwargs) -> SuiteReport:
    if name not in SUITES:
        raise NotApplicable(f"Unknown suite {name}")
    return SUITES[name](**kwargs)
