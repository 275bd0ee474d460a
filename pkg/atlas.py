# atlas.py
import json
import logging
from typing import Iterable, List, Optional

from affine import GradingDatum, involutions
from errors import TheoremViolation
from hermitian import (
    antichain_below,
    expected_rank,
    harish_chandra_cascade,
    hermitian_pair,
    is_tube_type,
    ort_subsets,
    unique_max_antichain,
)
from iab import abar, enumerate_iab
from orbits import enumerate_orbits
from rootsys import parse_label, to_dot
from sphericity import is_spherical_subalgebra, nonspherical_exists
from suites import map_gradings

logger = logging.getLogger(__name__)


def _vectors(roots: Iterable) -> List[list]:
    return [list(r) for r in sorted(roots)]


# ============== PER-GRADING RECORDS ==============

def grading_header(g: GradingDatum) -> dict:
    return {**g.to_dict(), "label": g.label, "name": g.system.name}


def subalgebra_rows(g: GradingDatum) -> List[dict]:
    """One sphericity row per element of I_ab"""
    header = grading_header(g)
    rows = []
    for idx, a in enumerate(enumerate_iab(g).subalgebras()):
        rows.append(is_spherical_subalgebra(a, str(idx)).to_dict(header))
    return rows


def grading_record(g: GradingDatum) -> dict:
    """Full I_ab poset of one involution with orbit counts and sphericity verdicts"""
    poset = enumerate_iab(g)
    special = nonspherical_exists(g)
    abar_id = None
    if special:
        minimal = abar(g)
        if minimal not in poset.elements:
            raise TheoremViolation(f"{g.label}: abar is not sigma-minuscule", witness=minimal.sorted())
        abar_id = str(poset.index(minimal))

    subalgebras = []
    for idx, (inversion, a) in enumerate(zip(poset.elements, poset.subalgebras())):
        verdict = is_spherical_subalgebra(a, str(idx))
        subalgebras.append({
            "id": str(idx),
            "dim": a.dim,
            "inversion_set": _vectors(inversion.roots),
            "weights": _vectors(a.weights),
            "maximal": poset.is_maximal(inversion),
            "orbits": len(enumerate_orbits(a)),
            "open_rep": _vectors(verdict.open_rep.weights),
            "heights": list(verdict.heights),
            "spherical": verdict.spherical,
            "abar_contained": verdict.abar_contained,
            "witness": list(verdict.witness) if verdict.witness is not None else None,
        })
    logger.info(f"{g.label}: {len(subalgebras)} subalgebras, abar = {abar_id}")
    return {
        "grading": grading_header(g),
        "nonspherical_exists": special,
        "abar": abar_id,
        "iab_size": len(poset),
        "covers": sorted([str(u), str(v)] for u, v in poset.graph.edges()),
        "subalgebras": subalgebras,
    }


def grading_dot(g: GradingDatum) -> str:
    """Affine diagram with the Kac marks as node labels"""
    name = g.label.replace("[", "_").replace("]", "").replace(", ", "_").replace(":", "_")
    return to_dot(g.system.cartan, offset=0, labels=g.s, name=name)


# ============== SWEEPS ==============

def build_atlas(max_rank: int = None, types=None, level_bound: Optional[int] = None, jobs: int = None) -> List[dict]:
    gradings = involutions(max_rank, types=types, level_bound=level_bound)
    return map_gradings(grading_record, gradings, jobs)


def classify_rows(max_rank: int = None, types=None, level_bound: Optional[int] = None, jobs: int = None) -> List[dict]:
    gradings = involutions(max_rank, types=types, level_bound=level_bound)
    rows = []
    for chunk in map_gradings(subalgebra_rows, gradings, jobs):
        rows.extend(chunk)
    return rows


def atlas_dot(max_rank: int = None, types=None, level_bound: Optional[int] = None) -> str:
    return "\n".join(grading_dot(g) for g in involutions(max_rank, types=types, level_bound=level_bound))


def dumps(payload) -> str:
    """Canonical JSON so repeated runs are byte-identical"""
    return json.dumps(payload, sort_keys=True, indent=2)


# ============== HERMITIAN RECORDS ==============

def hermitian_record(label: str, node: int, all_ort: bool = False, antichains: bool = False) -> dict:
    """Cascade, rank and tube type of (label, alpha_node), optionally with every orthogonal subset"""
    p = hermitian_pair(label, node)
    letter, n = parse_label(label)
    cascade = harish_chandra_cascade(p)
    tube = is_tube_type(p)
    row = {
        "label": p.label,
        "rank": len(cascade),
        "expected_rank": expected_rank(letter, n, node),
        "tube_type": tube,
        "cascade": _vectors(cascade.roots),
        "unique_antichain": _vectors(unique_max_antichain(p).roots) if tube else None,
    }
    if all_ort or antichains:
        subsets = []
        for B in ort_subsets(p):
            entry = {"roots": _vectors(B.roots), "type": list(B.type)}
            if antichains:
                A = antichain_below(p, B.roots)
                entry["antichain"] = {"roots": _vectors(A.roots), "type": list(A.type)}
            subsets.append(entry)
        row["ort"] = subsets
    return row


def orbit_listing(g: GradingDatum, subalgebra: Optional[int] = None) -> dict:
    """Orbit records for every element of I_ab, or for the one at the given index"""
    subalgebras = enumerate_iab(g).subalgebras()
    if subalgebra is not None and not 0 <= subalgebra < len(subalgebras):
        raise ValueError(f"{g.label} has {len(subalgebras)} subalgebras")
    listing = []
    for idx, a in enumerate(subalgebras):
        if subalgebra is not None and idx != subalgebra:
            continue
        listing.append({"id": str(idx), "dim": a.dim, "orbits": [r.to_dict() for r in enumerate_orbits(a)]})
    return {"grading": g.label, "subalgebras": listing}
