# iab.py
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from affine import GradedWeights, GradingDatum, imaginary_tail, is_biconvex
from errors import NotApplicable, NotInvolution, TheoremViolation
from rootsys import (
    FiniteRootSystem,
    RootVector,
    dominance_leq,
    generate_roots,
    is_positive,
    support,
    unit,
    vadd,
    vsub,
)

logger = logging.getLogger(__name__)


# ============== VALUE TYPES ==============

@dataclass(frozen=True)
class InversionSet:
    roots: FrozenSet[RootVector]

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, root) -> bool:
        return tuple(root) in self.roots

    def sorted(self) -> List[RootVector]:
        return sorted(self.roots)

    def issubset(self, other: "InversionSet") -> bool:
        return self.roots <= other.roots

    @property
    def key(self) -> Tuple[int, Tuple[RootVector, ...]]:
        return len(self.roots), tuple(sorted(self.roots))


@dataclass(frozen=True)
class AbelianSubalgebra:
    """Weight set Psi(a) of an abelian subalgebra of g_1"""

    weights: FrozenSet[RootVector]
    grading: GradedWeights = field(compare=False, repr=False)
    source: Optional[InversionSet] = None

    @property
    def dim(self) -> int:
        return len(self.weights)

    def sorted(self) -> List[RootVector]:
        return sorted(self.weights)


@dataclass
class IabPoset:
    """Sigma-minuscule inversion sets ordered by inclusion; graph edges are covers"""

    grading: GradingDatum
    elements: Tuple[InversionSet, ...]
    graph: nx.DiGraph

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, inversion: InversionSet) -> int:
        return self.elements.index(inversion)

    def maximal(self) -> List[InversionSet]:
        return [e for i, e in enumerate(self.elements) if self.graph.out_degree(i) == 0]

    def is_maximal(self, inversion: InversionSet) -> bool:
        return self.graph.out_degree(self.index(inversion)) == 0

    def subalgebras(self) -> List[AbelianSubalgebra]:
        return [theta(self.grading, e) for e in self.elements]


# ============== ENUMERATION ==============

def enumerate_iab(g: GradingDatum, cross_check: bool = False) -> IabPoset:
    """Breadth-first walk up the weak order, keeping inversions of sigma-height 1"""
    if g.order != 2:
        raise NotInvolution(f"{g.label} has order {g.order}")
    A = g.system.cartan.entries
    n = g.system.rank
    start = tuple(unit(n, i) for i in range(n))
    found: Dict[FrozenSet[RootVector], Tuple[RootVector, ...]] = {frozenset(): start}
    edges = []
    queue = deque([frozenset()])
    while queue:
        inversions = queue.popleft()
        images = found[inversions]
        for i in range(n):
            beta = images[i]
            if not is_positive(beta) or g.sigma_height(beta) != 1:
                continue
            extended = inversions | {beta}
            edges.append((inversions, extended))
            if extended in found:
                continue
            # (w s_i)(alpha_j) = w(alpha_j) - A_ji w(alpha_i)
            found[extended] = tuple(
                vsub(images[j], tuple(A[j][i] * c for c in beta)) if A[j][i] else images[j]
                for j in range(n)
            )
            queue.append(extended)

    elements = tuple(sorted((InversionSet(k) for k in found), key=lambda e: e.key))
    position = {e.roots: idx for idx, e in enumerate(elements)}
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(elements)))
    graph.add_edges_from((position[a], position[b]) for a, b in edges)
    logger.info(f"{g.label}: {len(elements)} sigma-minuscule elements")

    if cross_check:
        brute = enumerate_biconvex(g)
        if {e.roots for e in brute} != set(position):
            raise TheoremViolation(f"{g.label}: weak-order walk and biconvex search disagree")
    return IabPoset(grading=g, elements=elements, graph=graph)


def enumerate_biconvex(g: GradingDatum) -> List[InversionSet]:
    """Independent search: biconvex subsets of the positive roots of sigma-height 1"""
    level_one = [b for b in g.delta_hat(1) if not imaginary_tail(g, b)]
    level_one.sort(key=lambda r: (sum(r), r))
    members = set(level_one)
    below = {
        gamma: [vsub(gamma, beta) for beta in g.positive0() if vsub(gamma, beta) in members]
        for gamma in level_one
    }
    clash = {
        gamma: {other for other in level_one if g.is_root(vadd(gamma, other))}
        for gamma in level_one
    }
    result = []

    def extend(idx: int, chosen: FrozenSet[RootVector]) -> None:
        if idx == len(level_one):
            if is_biconvex(g, chosen):
                result.append(InversionSet(chosen))
            return
        extend(idx + 1, chosen)
        gamma = level_one[idx]
        if gamma in clash[gamma]:
            return
        if all(b in chosen for b in below[gamma]) and not (clash[gamma] & chosen):
            extend(idx + 1, chosen | {gamma})

    extend(0, frozenset())
    return sorted(result, key=lambda e: e.key)


def theta(g: GradedWeights, w: InversionSet) -> AbelianSubalgebra:
    """Psi = { -bar(beta) : beta in N(w) }"""
    return AbelianSubalgebra(weights=frozenset(g.neg(b) for b in w.roots), grading=g, source=w)


# ============== SPECIAL ELEMENTS ==============

def special_node(g: GradingDatum) -> int:
    """alpha_p with Pi_1 = {alpha_p}, alpha_p long and non-complex"""
    if g.order != 2:
        raise NotApplicable(f"{g.label} is not an involution")
    if len(g.pi1) != 1:
        raise NotApplicable(f"{g.label}: Pi_1 has {len(g.pi1)} elements, g_0 is not semisimple")
    p = g.pi1[0]
    if not g.is_long(p):
        raise NotApplicable(f"{g.label}: alpha_{p} is short")
    if g.is_complex(p):
        raise NotApplicable(f"{g.label}: alpha_{p} is complex")
    return p


@dataclass(frozen=True)
class Component:
    """Connected component Sigma of Pi_0 with the node attached to alpha_p"""

    nodes: Tuple[int, ...]
    attach: int
    system: FiniteRootSystem = field(compare=False, repr=False)

    @property
    def local_attach(self) -> int:
        return self.nodes.index(self.attach)

    def embed(self, local: Sequence[int], rank: int) -> RootVector:
        vec = [0] * rank
        for c, node in zip(local, self.nodes):
            vec[node] = c
        return tuple(vec)

    def restrict(self, v: Sequence[int]) -> Optional[RootVector]:
        """Local coordinates when v is supported on this component"""
        if any(i not in self.nodes for i in support(v)):
            return None
        return tuple(v[i] for i in self.nodes)


def components(g: GradingDatum, p: int) -> List[Component]:
    A = g.system.cartan
    result = []
    for comp in A.submatrix(g.pi0).components():
        nodes = tuple(g.pi0[i] for i in comp)
        attached = [i for i in nodes if A[i, p]]
        if len(attached) != 1:
            logger.warning(f"{g.label}: component {nodes} meets alpha_{p} at {attached}")
        system = generate_roots(A.submatrix(nodes))
        result.append(Component(nodes=nodes, attach=attached[0], system=system))
    return result


def c1_sigma(g: GradingDatum) -> InversionSet:
    """{alpha > 0 : [alpha:alpha_p] = 1, alpha_p + k delta - alpha a positive root}"""
    p = special_node(g)
    alpha_p = unit(g.system.rank, p)
    top = vadd(alpha_p, tuple(g.k * a for a in g.system.delta))
    roots = set()
    for alpha in g.delta_hat(1):
        if alpha[p] != 1:
            continue
        rest = vsub(top, alpha)
        if is_positive(rest) and g.is_root(rest):
            roots.add(alpha)
    return InversionSet(frozenset(roots))


def is_maximal(g: GradingDatum, w: InversionSet) -> bool:
    """No single root of sigma-height 1 extends w to another inversion set"""
    for beta in g.delta_hat(1):
        if beta not in w.roots and is_biconvex(g, w.roots | {beta}):
            return False
    return True


def special_wp(g: GradingDatum) -> InversionSet:
    p = special_node(g)
    rank = g.system.rank
    alpha_p = unit(rank, p)
    roots = {alpha_p}
    for comp in components(g, p):
        q = comp.local_attach
        for gamma in comp.system.positive_roots:
            if gamma[q] == 1:
                roots.add(vadd(comp.embed(gamma, rank), alpha_p))
    result = InversionSet(frozenset(roots))
    if result != c1_sigma(g):
        raise TheoremViolation(f"{g.label}: N(w_p) differs from C^1", witness=result.sorted())
    if not is_biconvex(g, result.roots) or not is_maximal(g, result):
        raise TheoremViolation(f"{g.label}: N(w_p) is not a maximal inversion set")
    return result


def upsilon(g: GradingDatum, p: int, eta: Sequence[int]) -> RootVector:
    """eta - alpha_p"""
    return vsub(eta, unit(g.system.rank, p))


def upsilon_inverse(g: GradingDatum, p: int, root: Sequence[int]) -> RootVector:
    return vadd(root, unit(g.system.rank, p))


def abar_antichain(g: GradingDatum) -> FrozenSet[RootVector]:
    """Union over components of the lifted unique maximal antichains"""
    from hermitian import HermitianPair, unique_max_antichain

    p = special_node(g)
    rank = g.system.rank
    antichain = set()
    for comp in components(g, p):
        pair = HermitianPair(comp.system, comp.local_attach)
        for root in unique_max_antichain(pair).roots:
            antichain.add(upsilon_inverse(g, p, comp.embed(root, rank)))
    return frozenset(antichain)


def abar(g: GradingDatum) -> InversionSet:
    """N(w-bar): dominance down-closure of the antichain inside C^1"""
    return _abar_cached(g)


@lru_cache(maxsize=None)
def _abar_cached(g: GradingDatum) -> InversionSet:
    antichain = abar_antichain(g)
    c1 = c1_sigma(g)
    if not antichain <= c1.roots:
        raise TheoremViolation(f"{g.label}: lifted antichain leaves C^1", witness=sorted(antichain - c1.roots))
    roots = frozenset(
        beta for beta in c1.roots if any(dominance_leq(beta, a, g.pi0) for a in antichain)
    )
    if not is_biconvex(g, roots):
        raise TheoremViolation(f"{g.label}: N(w-bar) is not biconvex", witness=sorted(roots))
    logger.debug(f"{g.label}: N(w-bar) has {len(roots)} roots")
    return InversionSet(roots)
