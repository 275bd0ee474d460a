# sphericity.py
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import sympy

from affine import GradingDatum
from errors import BoundViolation, NotApplicable, NotFiniteOrAffine, NotMaximal, TheoremViolation
from iab import (
    AbelianSubalgebra,
    abar,
    c1_sigma,
    components,
    special_node,
    upsilon,
)
from orbits import OrthogonalSubset, open_orbit_rep, orthogonal_subsets
from rootsys import (
    DiagramClass,
    GeneralizedCartanMatrix,
    RootVector,
    classify_gcm,
    kernel_labels,
    support,
    unit,
    vadd,
    vneg,
    vscale,
    vsub,
)

logger = logging.getLogger(__name__)

# Affine diagrams allowed for Pi_S over C^1 minus alpha_p
SPECIAL_DIAGRAMS = ("D4^(1)", "B3^(1)", "D3^(2)", "G2^(1)", "A2^(2)")


# ============== TRIPLE GRADINGS ==============

@dataclass(frozen=True)
class TripleGrading:
    """Eigenvalues of h_S = sum of gamma^vee over S"""

    S: Tuple[RootVector, ...]
    grading: object = field(compare=False, repr=False)

    def grade(self, alpha: Sequence[int]) -> int:
        if not any(alpha):
            return 0
        total = sum((Fraction(self.grading.pairing(alpha, gamma)) for gamma in self.S), Fraction(0))
        if total.denominator != 1:
            raise TheoremViolation(f"Non-integral h_S eigenvalue {total} on {tuple(alpha)}")
        return int(total)

    def positive_support(self, alpha: Sequence[int]) -> Tuple[RootVector, ...]:
        """S^+(alpha): elements of S pairing positively with alpha"""
        return tuple(gamma for gamma in self.S if self.grading.pairing(alpha, gamma) > 0)


def triple_grading(a, S: Iterable[Sequence[int]]) -> TripleGrading:
    g = a.grading if isinstance(a, AbelianSubalgebra) else a
    return TripleGrading(S=tuple(sorted(tuple(s) for s in S)), grading=g)


def grade_heights(a, S: Iterable[Sequence[int]]) -> Tuple[int, int]:
    """(h0, h1): max h_S grade on Phi_0 plus zero, and on Phi_1"""
    tg = triple_grading(a, S)
    g = tg.grading
    h0 = max([0] + [tg.grade(w) for w in g.weights(0)])
    h1 = max([0] + [tg.grade(w) for w in g.weights(1)])
    if h0 > 3 or h1 > 4:
        raise BoundViolation(f"Heights ({h0}, {h1}) exceed (3, 4) for S = {tg.S}", witness=tg.S)
    return h0, h1


def ad_heights(a, S: Iterable[Sequence[int]]) -> Tuple[int, int, int]:
    """(height, height_0, height_1) of x_S read off the sl_2-strings of the grading"""
    tg = triple_grading(a, S)
    g = tg.grading
    grades = {i: [tg.grade(w) for w in g.weights(i)] for i in (0, 1)}
    top = max([0] + grades[0] + grades[1])
    if top == 0:
        return 0, 0, 0
    top_classes = {i for i in (0, 1) if top in grades[i]}
    heights = tuple(top if (i + top) % 2 in top_classes else top - 1 for i in (0, 1))
    return (top,) + heights


def height_four_identity(a, S: Iterable[Sequence[int]]) -> bool:
    """A weight of grade 4 lies in Phi_1 only, and S^+(alpha) sums to twice its coroot action"""
    tg = triple_grading(a, S)
    g = tg.grading
    tops = [w for w in g.weights(1) if tg.grade(w) == 4]
    if any(tg.grade(w) >= 4 for w in g.weights(0)):
        return False
    every_weight = list(g.weights(0)) + list(g.weights(1))
    for alpha in tops:
        if isinstance(g, GradingDatum) and g.delta_prime is not None:
            if g.is_weight(vsub(alpha, g.delta_prime), 0):
                return False
        plus = tg.positive_support(alpha)
        for beta in every_weight:
            lhs = sum((Fraction(g.pairing(beta, gamma)) for gamma in plus), Fraction(0))
            if lhs != 2 * Fraction(g.pairing(beta, alpha)):
                return False
    return True


# ============== VERDICTS ==============

@dataclass(frozen=True)
class SphericityVerdict:
    subalgebra: str
    dim: int
    heights: Tuple[int, int]
    max_h1: int
    spherical: bool
    witness: Optional[RootVector]
    abar_contained: bool
    open_rep: OrthogonalSubset

    def to_dict(self, grading: Optional[dict] = None) -> dict:
        return {
            "grading": grading,
            "subalgebra": self.subalgebra,
            "dim": self.dim,
            "heights": list(self.heights),
            "spherical": self.spherical,
            "abar_contained": self.abar_contained,
            "witness": list(self.witness) if self.witness is not None else None,
        }


def is_spherical_subalgebra(a: AbelianSubalgebra, ident: str = "0") -> SphericityVerdict:
    """Spherical iff every orthogonal subset has h1 <= 3"""
    rep = open_orbit_rep(a)
    heights = grade_heights(a, rep)
    best_h1, best_S = heights[1], rep
    for S in orthogonal_subsets(a):
        h1 = grade_heights(a, S)[1]
        if h1 > best_h1:
            best_h1, best_S = h1, S
    spherical = best_h1 <= 3
    witness = None
    if not spherical:
        tg = triple_grading(a, best_S)
        witness = min(w for w in a.grading.weights(1) if tg.grade(w) >= 4)
    contained = False
    g = a.grading
    if isinstance(g, GradingDatum) and nonspherical_exists(g):
        contained = mt_criterion(g, a)
    return SphericityVerdict(
        subalgebra=ident,
        dim=a.dim,
        heights=heights,
        max_h1=best_h1,
        spherical=spherical,
        witness=witness,
        abar_contained=contained,
        open_rep=rep,
    )


def nonspherical_exists(g: GradingDatum) -> bool:
    """Pi_1 = {alpha_p} with alpha_p long and non-complex"""
    if g.order != 2 or len(g.pi1) != 1:
        return False
    p = g.pi1[0]
    return g.is_long(p) and not g.is_complex(p)


def mt_criterion(g: GradingDatum, a: AbelianSubalgebra) -> bool:
    """a-bar is contained in a"""
    special_node(g)
    minimal = abar(g)
    if a.source is not None:
        return minimal.roots <= a.source.roots
    return {g.neg(b) for b in minimal.roots} <= set(a.weights)


# ============== PI_S DIAGRAMS ==============

def pi_S_matrix(g, S: Iterable[Sequence[int]], alpha: Sequence[int]) -> Tuple[GeneralizedCartanMatrix, DiagramClass]:
    """Cartan matrix of S^+(alpha) together with -alpha-hat"""
    tg = triple_grading(g, S)
    nodes = list(tg.positive_support(alpha)) + [vneg(g.reduce(alpha))]
    entries = [[int(g.pairing(u, v)) for v in nodes] for u in nodes]
    cartan = GeneralizedCartanMatrix(entries)
    verdict = classify_gcm(cartan)
    if verdict.verdict == "Indefinite":
        raise NotFiniteOrAffine(f"Pi_S is indefinite for S = {tg.S}", witness=entries)
    return cartan, verdict


def label_sum_identity(cartan: GeneralizedCartanMatrix, verdict: DiagramClass) -> bool:
    """k times the labels of the nodes other than -alpha-hat add up to 4"""
    if not verdict.is_affine:
        return False
    labels = kernel_labels(cartan)
    return verdict.twist * sum(labels[:-1]) == 4


# ============== SPECIAL GRADINGS ==============

def special_weights(g: GradingDatum) -> Dict[RootVector, RootVector]:
    """-bar(eta) for eta in C^1 minus alpha_p, mapped back to eta"""
    p = special_node(g)
    alpha_p = unit(g.system.rank, p)
    return {g.neg(eta): eta for eta in c1_sigma(g).roots if eta != alpha_p}


def _special_graph(g: GradingDatum) -> nx.Graph:
    weights = sorted(special_weights(g))
    G = nx.Graph()
    G.add_nodes_from(weights)
    for i, u in enumerate(weights):
        for v in weights[i + 1:]:
            if g.inner(u, v) == 0:
                G.add_edge(u, v)
    return G


def special_subsets(g: GradingDatum, maximum: bool = True) -> List[Tuple[RootVector, ...]]:
    """Maximal orthogonal subsets of {-bar(eta)}; only those of largest size when maximum"""
    cliques = sorted(tuple(sorted(c)) for c in nx.find_cliques(_special_graph(g)))
    if maximum and cliques:
        top = max(len(c) for c in cliques)
        cliques = [c for c in cliques if len(c) == top]
    return cliques


def _require_maximal(g: GradingDatum, S: Tuple[RootVector, ...]) -> None:
    for w in special_weights(g):
        if w not in S and all(g.inner(w, s) == 0 for s in S):
            raise NotMaximal(f"{w} is orthogonal to every element of S", witness=w)


def weighted_dynkin(g: GradingDatum, S: Iterable[Sequence[int]]) -> Dict[int, int]:
    """alpha_i(h_S) on Pi_0, checked against -2 <alpha, alpha_p^vee> on every weight"""
    p = special_node(g)
    S = tuple(sorted(tuple(s) for s in S))
    _require_maximal(g, S)
    tg = triple_grading(g, S)
    alpha_p = unit(g.system.rank, p)
    for w in list(g.weights(0)) + list(g.weights(1)):
        if tg.grade(w) != -2 * g.pairing(w, alpha_p):
            raise TheoremViolation(f"{g.label}: grade of {w} is {tg.grade(w)}", witness=w)
    return {i: tg.grade(unit(g.system.rank, i)) for i in g.pi0}


def sum_eta_identity(g: GradingDatum, S: Iterable[Sequence[int]]) -> bool:
    """sum of <alpha_p, eta^vee> eta over S equals k delta + 2 alpha_p"""
    p = special_node(g)
    alpha_p = unit(g.system.rank, p)
    pool = special_weights(g)
    total = (0,) * g.system.rank
    for w in S:
        eta = pool[tuple(w)]
        c = g.pairing(alpha_p, eta)
        if Fraction(c).denominator != 1:
            return False
        total = vadd(total, vscale(int(c), eta))
    return total == vadd(vscale(g.k, g.system.delta), vscale(2, alpha_p))


def _to_fraction(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def span_projection(g: GradingDatum, v: Sequence[int], nodes: Sequence[int]) -> Dict[int, Fraction]:
    """Orthogonal projection of v onto Span(alpha_i, i in nodes), over those simple roots"""
    rank = g.system.rank
    basis = [unit(rank, i) for i in nodes]
    gram = sympy.Matrix(len(nodes), len(nodes), lambda i, j: sympy.Rational(str(g.inner(basis[i], basis[j]))))
    rhs = sympy.Matrix([sympy.Rational(str(g.inner(v, b))) for b in basis])
    coeffs = gram.LUsolve(rhs)
    return {node: _to_fraction(coeffs[idx]) for idx, node in enumerate(nodes)}


def projection_identity(g: GradingDatum, S: Iterable[Sequence[int]]) -> bool:
    """Per component Sigma of Pi_0: sum over Upsilon(eta) in Sigma of <alpha_p, eta^vee>/e_Sigma Upsilon(eta)
    equals the projection of k delta - 2 alpha_p onto Span(Sigma) divided by e_Sigma.

    The weight <alpha_p, eta^vee>/e_Sigma is 1 when Upsilon(eta) is as long as alpha_Sigma and 2 when it is
    short against a long alpha_Sigma. S must be maximal in {-bar(eta) : eta in C^1 minus alpha_p}.
    """
    if not nonspherical_exists(g):
        raise NotApplicable(f"{g.label}: needs Pi_1 = {{alpha_p}} with alpha_p long and non-complex")
    p = special_node(g)
    rank = g.system.rank
    alpha_p = unit(rank, p)
    S = tuple(sorted(tuple(s) for s in S))
    _require_maximal(g, S)
    pool = special_weights(g)
    etas = [pool[w] for w in S]
    target = vsub(vscale(g.k, g.system.delta), vscale(2, alpha_p))
    for comp in components(g, p):
        e_sigma = -Fraction(g.pairing(alpha_p, unit(rank, comp.attach)))
        lhs = {node: Fraction(0) for node in comp.nodes}
        for eta in etas:
            image = upsilon(g, p, eta)
            if not any(image) or not set(support(image)) <= set(comp.nodes):
                continue
            weight = Fraction(g.pairing(alpha_p, eta)) / e_sigma
            for node in comp.nodes:
                lhs[node] += weight * image[node]
        projection = span_projection(g, target, comp.nodes)
        if any(projection[node] / e_sigma != lhs[node] for node in comp.nodes):
            logger.debug(f"{g.label}: projection over {comp.nodes} is {projection}, images add to {lhs}")
            return False
    return True


@dataclass
class SpecialGradingReport:
    S: Tuple[RootVector, ...]
    grade3_phi1: List[RootVector]
    grade4_phi0: List[RootVector]
    grade4_phi1: List[RootVector]
    phi0_grades: List[int]
    pi00: List[int]
    top_pairs_trivially: bool
    expected_top: RootVector

    @property
    def ok(self) -> bool:
        return (
            not self.grade3_phi1
            and not self.grade4_phi0
            and self.grade4_phi1 == [self.expected_top]
            and self.top_pairs_trivially
        )

    def to_dict(self) -> dict:
        return {
            "S": [list(s) for s in self.S],
            "grade3_phi1": [list(w) for w in self.grade3_phi1],
            "grade4_phi0": [list(w) for w in self.grade4_phi0],
            "grade4_phi1": [list(w) for w in self.grade4_phi1],
            "phi0_grades": self.phi0_grades,
            "pi00": self.pi00,
            "ok": self.ok,
        }


def special_grading_check(g: GradingDatum) -> List[SpecialGradingReport]:
    """Grade scan for every special subset S: nothing at 3 in Phi_1, nothing at 4 in Phi_0, one line at 4"""
    p = special_node(g)
    rank = g.system.rank
    phi0, phi1 = g.weights(0), g.weights(1)
    top = g.neg(unit(rank, p))
    pi00 = sorted(i for comp in components(g, p) for i in comp.nodes if i != comp.attach)
    top_pairs_trivially = all(g.inner(top, unit(rank, i)) == 0 for i in pi00)
    reports = []
    for S in special_subsets(g):
        tg = triple_grading(g, S)
        reports.append(SpecialGradingReport(
            S=S,
            grade3_phi1=[w for w in phi1 if tg.grade(w) == 3],
            grade4_phi0=[w for w in phi0 if tg.grade(w) == 4],
            grade4_phi1=[w for w in phi1 if tg.grade(w) == 4],
            phi0_grades=sorted({tg.grade(w) for w in phi0}),
            pi00=pi00,
            top_pairs_trivially=top_pairs_trivially,
            expected_top=top,
        ))
    return reports
