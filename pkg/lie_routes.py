# lie_routes.py
import logging
from typing import List

from fastapi import APIRouter, Depends, HTTPException
from fastapi.responses import PlainTextResponse

from affine import GradingDatum, build_affine
from atlas import build_atlas, grading_dot, hermitian_record, orbit_listing, subalgebra_rows
from atlas_schemas import (
    CartanMatrixIn,
    DiagramResponse,
    GradingIn,
    HermitianResponse,
    SubalgebraVerdict,
    SuiteResponse,
    SweepConfig,
)
from rootsys import GeneralizedCartanMatrix, cartan_matrix, classify_gcm, to_dot
from suites import SUITES, run_suite

logger = logging.getLogger(__name__)

router = APIRouter(tags=["Lie Theory"])


# Grading dependency
def get_grading(body: GradingIn) -> GradingDatum:
    return GradingDatum(build_affine(body.type, body.twist), body.marks, level_bound=body.level_bound)


# ============== DIAGRAM ROUTES ==============

@router.post("/diagrams/classify", response_model=DiagramResponse)
def classify_diagram(matrix: CartanMatrixIn):
    """Finite / Affine / Indefinite verdict for a generalized Cartan matrix"""
    cartan = GeneralizedCartanMatrix(matrix.entries)
    verdict = classify_gcm(cartan)
    logger.info(f"Classified {len(matrix.entries)}x{len(matrix.entries)} matrix as {verdict.verdict} {verdict.label}")
    return DiagramResponse(
        verdict=verdict.verdict,
        label=verdict.label,
        labels=list(verdict.labels) if verdict.labels else None,
        twist=verdict.twist,
        dot=to_dot(cartan, name=verdict.label or "dynkin"),
    )


@router.get("/diagrams/{label}", response_class=PlainTextResponse)
def diagram_dot(label: str, twist: int = 0):
    """DOT text of a finite diagram, or of its affine diagram when twist is given"""
    if twist:
        return build_affine(label, twist).to_dot()
    return to_dot(cartan_matrix(label), name=label)


# ============== HERMITIAN ROUTES ==============

@router.get("/hermitian/{label}/{node}", response_model=HermitianResponse)
def hermitian_info(label: str, node: int):
    """Cascade, rank and tube type of (label, alpha_node)"""
    return hermitian_record(label, node)


# ============== GRADING ROUTES ==============

@router.post("/gradings/subalgebras", response_model=List[SubalgebraVerdict])
def grading_subalgebras(g: GradingDatum = Depends(get_grading)):
    """Sphericity verdict for every abelian B_0-stable subalgebra of g_1"""
    return subalgebra_rows(g)


@router.post("/gradings/orbits")
def grading_orbits(g: GradingDatum = Depends(get_grading)):
    """Orbit representatives for every abelian B_0-stable subalgebra of g_1"""
    return orbit_listing(g)


@router.post("/gradings/dot", response_class=PlainTextResponse)
def grading_diagram(g: GradingDatum = Depends(get_grading)):
    return grading_dot(g)


# ============== SWEEP ROUTES (rate limited) ==============

@router.post("/sweeps/atlas")
def sweep_atlas(cfg: SweepConfig):
    """Atlas records for every involution allowed by the sweep options"""
    return build_atlas(cfg.max_rank, cfg.types, cfg.level_bound, cfg.jobs)


@router.post("/sweeps/verify/{suite}", response_model=SuiteResponse)
def sweep_verify(suite: str, cfg: SweepConfig):
    if suite not in SUITES:
        raise HTTPException(status_code=404, detail=f"Unknown suite {suite}")
    report = run_suite(suite, max_rank=cfg.max_rank, types=cfg.types, level_bound=cfg.level_bound, jobs=cfg.jobs)
    return report.to_dict()
