# orbits.py
import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from affine import GradingDatum
from errors import NotDistinct, NotInPsi, PropertiesViolated, TheoremViolation
from rootsys import RootVector, vadd, vsub

logger = logging.getLogger(__name__)


# ============== VALUE TYPES ==============

@dataclass(frozen=True)
class OrthogonalSubset:
    weights: Tuple[RootVector, ...]

    @classmethod
    def of(cls, weights: Iterable[Sequence[int]]) -> "OrthogonalSubset":
        return cls(tuple(sorted(tuple(w) for w in weights)))

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)


@dataclass(frozen=True)
class OrbitRecord:
    rep: OrthogonalSubset
    psi_s: Tuple[RootVector, ...]
    dim: int
    is_open: bool

    def to_dict(self) -> dict:
        return {"rep": [list(w) for w in self.rep], "dim": self.dim, "open": self.is_open}


@dataclass(frozen=True)
class PropertyReport:
    """Result of the (A1)-(A3) scan; falsy when a property fails"""

    ok: bool
    prop: Optional[str] = None
    witness: Tuple = ()

    def __bool__(self) -> bool:
        return self.ok


# ============== ORTHOGONALITY ==============

def _strongly_orthogonal(g, u: Sequence[int], v: Sequence[int]) -> bool:
    if g.inner(u, v) != 0:
        return False
    if isinstance(g, GradingDatum):
        return not g.is_root(vadd(u, v)) and not g.is_root(vsub(u, v))
    return not any(g.is_weight(x, g.grade(x)) for x in (vadd(u, v), vsub(u, v)) if any(x))


def is_orthogonal_pair(a, alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """(alpha, beta) = 0, alpha - beta not in Phi_0, and the lifts strongly orthogonal"""
    g = a.grading
    alpha, beta = g.reduce(alpha), g.reduce(beta)
    for w in (alpha, beta):
        if w not in a.weights:
            raise NotInPsi(f"{w} is not a weight of the subalgebra", witness=w)
    if alpha == beta:
        raise NotDistinct(f"{alpha} compared with itself", witness=alpha)
    by_form = g.inner(alpha, beta) == 0
    by_difference = not g.is_weight(vsub(alpha, beta), 0)
    verdicts = [by_form, by_difference]
    if g.order == 2:
        verdicts.append(_strongly_orthogonal(g, alpha, beta))
    if len(set(verdicts)) != 1:
        raise TheoremViolation(f"Orthogonality tests disagree on {alpha}, {beta}: {verdicts}")
    return by_form


def orthogonality_graph(a) -> nx.Graph:
    g = a.grading
    weights = a.sorted()
    G = nx.Graph()
    G.add_nodes_from(weights)
    for i, u in enumerate(weights):
        for v in weights[i + 1:]:
            if g.inner(u, v) == 0:
                G.add_edge(u, v)
    return G


def orthogonal_subsets(a) -> List[OrthogonalSubset]:
    """All pairwise orthogonal subsets of Psi(a), the empty set included"""
    subsets = [OrthogonalSubset(())]
    subsets += [OrthogonalSubset.of(c) for c in nx.enumerate_all_cliques(orthogonality_graph(a))]
    return sorted(subsets, key=lambda s: (len(s), s.weights))


def maximal_orthogonal_subsets(a) -> List[OrthogonalSubset]:
    if not a.weights:
        return [OrthogonalSubset(())]
    return sorted((OrthogonalSubset.of(c) for c in nx.find_cliques(orthogonality_graph(a))),
                  key=lambda s: (len(s), s.weights))


# ============== ORBIT DATA ==============

def psi_s(a, S: Iterable[Sequence[int]]) -> FrozenSet[RootVector]:
    """{beta in Phi_1 : beta - alpha in Phi_0^+ for some alpha in S}"""
    g = a.grading
    result = set()
    for alpha in S:
        for gamma in g.positive0():
            beta = g.add(alpha, gamma)
            if g.is_weight(beta, 1):
                result.add(beta)
    return frozenset(result)


def orbit_dimension(a, S: Iterable[Sequence[int]]) -> int:
    S = list(S)
    return len(S) + len(psi_s(a, S))


def minimal_elements(g, weights: Iterable[Sequence[int]]) -> List[RootVector]:
    pool = sorted(set(tuple(w) for w in weights))
    return [x for x in pool if not any(y != x and g.leq0(y, x) for y in pool)]


def _require_orthogonal(g, S: Sequence[RootVector], context: str) -> None:
    for i, u in enumerate(S):
        for v in S[i + 1:]:
            if g.inner(u, v) != 0:
                raise TheoremViolation(f"{context}: {u} and {v} are not orthogonal")


def open_orbit_rep(a) -> OrthogonalSubset:
    """S_1 = min Psi, S_i = min of what is left after removing S_j and Psi_{S_j}"""
    g = a.grading
    remaining = set(a.weights)
    chosen: List[RootVector] = []
    while remaining:
        layer = minimal_elements(g, remaining)
        chosen.extend(layer)
        remaining -= set(layer) | psi_s(a, layer)
    _require_orthogonal(g, chosen, "open orbit representative")
    rep = OrthogonalSubset.of(chosen)
    if orbit_dimension(a, rep) != a.dim:
        raise TheoremViolation(f"Open orbit representative has dimension {orbit_dimension(a, rep)} != {a.dim}")
    return rep


def generic_normal_form(a, support: Iterable[Sequence[int]]) -> OrthogonalSubset:
    """Orbit of a generic vector with the given support"""
    g = a.grading
    work = {g.reduce(w) for w in support}
    for w in work:
        if w not in a.weights:
            raise NotInPsi(f"{w} is not a weight of the subalgebra", witness=w)
    chosen: set = set()
    while True:
        candidates = work - chosen
        if not candidates:
            break
        chosen |= set(minimal_elements(g, candidates))
        work -= psi_s(a, chosen)
    result = sorted(chosen)
    _require_orthogonal(g, result, "generic normal form")
    return OrthogonalSubset.of(result)


def enumerate_orbits(a) -> List[OrbitRecord]:
    report = check_A1A2A3(a)
    if not report:
        raise PropertiesViolated(f"Property {report.prop} fails", witness=report.witness)
    open_rep = open_orbit_rep(a)
    records = []
    for S in orthogonal_subsets(a):
        psi = psi_s(a, S)
        records.append(OrbitRecord(rep=S, psi_s=tuple(sorted(psi)), dim=len(S) + len(psi), is_open=S == open_rep))
    return records


# ============== PROPERTY CHECKS ==============

def check_A1A2A3(a) -> PropertyReport:
    g = a.grading
    weights = a.sorted()
    for alpha in weights:
        if g.neg(alpha) in a.weights:
            return PropertyReport(False, "A1", (alpha,))
    for i, alpha in enumerate(weights):
        for beta in weights[i:]:
            if g.is_weight(g.add(alpha, beta), 2):
                return PropertyReport(False, "A2", (alpha, beta))
    for alpha in weights:
        for gamma in g.positive0():
            total = g.add(alpha, gamma)
            if g.is_weight(total, 1) and total not in a.weights:
                return PropertyReport(False, "A3", (alpha, gamma))
    return PropertyReport(True)


def adding_roots_holds(a) -> bool:
    """alpha, beta orthogonal in Psi and alpha + gamma in Psi for gamma in Phi_0 force beta + gamma outside Psi"""
    g = a.grading
    weights = a.sorted()
    phi0 = g.weights(0)
    for i, alpha in enumerate(weights):
        for beta in weights[i + 1:]:
            if g.inner(alpha, beta) != 0:
                continue
            for gamma in phi0:
                if g.add(alpha, gamma) in a.weights and g.add(beta, gamma) in a.weights:
                    return False
    return True
