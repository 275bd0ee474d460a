# hermitian.py
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from affine import GradedWeights
from errors import (
    NoDecomposition,
    NotApplicable,
    NotSimplyLaced,
    NotTubeType,
    NoShortRoots,
    TheoremViolation,
)
from iab import AbelianSubalgebra
from orbits import maximal_orthogonal_subsets, open_orbit_rep, orthogonal_subsets
from rootsys import (
    FiniteRootSystem,
    RootVector,
    dominance_leq,
    finite_system,
    unit,
    vadd,
    vneg,
    vsub,
)

logger = logging.getLogger(__name__)


def expected_rank(letter: str, n: int, q: int) -> Optional[int]:
    """Symmetric-space rank of a Hermitian pair, Bourbaki node q (1-based)"""
    if letter == "A":
        return min(q, n + 1 - q)
    if letter == "B" and q == 1:
        return 2
    if letter == "C" and q == n:
        return n
    if letter == "D" and q == 1:
        return 2
    if letter == "D" and q in (n - 1, n):
        return n // 2
    if (letter, n) == ("E", 6) and q in (1, 6):
        return 2
    if (letter, n) == ("E", 7) and q == 7:
        return 3
    return None


# ============== GRADING ==============

class HermitianGrading(GradedWeights):
    """Z_2-grading of g by the parity of the alpha_q coefficient"""

    order = 2

    def __init__(self, system: FiniteRootSystem, q: int):
        self.system = system
        self.q = q

    def weights(self, i: int) -> Tuple[RootVector, ...]:
        return tuple(r for r in self.system.roots if r[self.q] % 2 == i % 2)

    def positive0(self) -> Tuple[RootVector, ...]:
        return tuple(r for r in self.system.positive_roots if r[self.q] == 0)

    @property
    def simple0_indices(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self.system.rank) if i != self.q)

    def grade(self, v: Sequence[int]) -> int:
        return v[self.q] % 2

    def reduce(self, v: Sequence[int]) -> RootVector:
        return tuple(v)

    def inner(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        return self.system.inner(u, v)

    def finite_coords(self, v: Sequence[int]) -> RootVector:
        return tuple(v)


# ============== PAIRS ==============

@dataclass(frozen=True)
class OrtSubset:
    roots: Tuple[RootVector, ...]
    type: Tuple[int, int]

    def __len__(self) -> int:
        return len(self.roots)

    def as_set(self) -> FrozenSet[RootVector]:
        return frozenset(self.roots)


class HermitianPair:
    """(Pi, alpha_q) with [theta : alpha_q] = 1; q is a 0-based node index"""

    def __init__(self, system: FiniteRootSystem, q: int):
        if len(system.cartan.components()) != 1:
            raise NotApplicable(f"{system.bourbaki_type} is not irreducible")
        if system.highest_root[q] != 1:
            raise NotApplicable(f"[theta : alpha_{q + 1}] = {system.highest_root[q]} in {system.bourbaki_type}")
        self.system = system
        self.q = q
        self.phi1plus: Tuple[RootVector, ...] = tuple(r for r in system.positive_roots if r[q] > 0)
        self.grading = HermitianGrading(system, q)
        self.nilradical = AbelianSubalgebra(weights=frozenset(self.phi1plus), grading=self.grading)
        self.alpha_q = unit(system.rank, q)

    @property
    def label(self) -> str:
        return f"({self.system.bourbaki_type}, alpha_{self.q + 1})"

    def __repr__(self) -> str:
        return f"HermitianPair{self.label}"

    @property
    def rank_r(self) -> int:
        return len(harish_chandra_cascade(self))

    @property
    def short_roots(self) -> Tuple[RootVector, ...]:
        return tuple(r for r in self.phi1plus if not self.system.is_long(r))

    def ort(self, roots: Iterable[Sequence[int]]) -> OrtSubset:
        roots = tuple(sorted(tuple(r) for r in roots))
        short = sum(1 for r in roots if not self.system.is_long(r))
        return OrtSubset(roots=roots, type=(short, len(roots) - short))

    def leq(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return dominance_leq(a, b, self.grading.simple0_indices)


@lru_cache(maxsize=None)
def hermitian_pair(label: str, node: int) -> HermitianPair:
    """Pair from a Bourbaki label and a 1-based node"""
    system = finite_system(label)
    if not 1 <= node <= system.rank:
        raise NotApplicable(f"{label} has no node {node}")
    return HermitianPair(system, node - 1)


def hermitian_pairs(max_rank: int) -> List[Tuple[str, int]]:
    """Every (label, node) Hermitian pair up to max_rank"""
    pairs = []
    for n in range(1, max_rank + 1):
        pairs += [(f"A{n}", q) for q in range(1, n + 1)]
    for n in range(2, max_rank + 1):
        pairs.append((f"B{n}", 1))
    for n in range(3, max_rank + 1):
        pairs.append((f"C{n}", n))
    for n in range(4, max_rank + 1):
        pairs += [(f"D{n}", 1), (f"D{n}", n - 1), (f"D{n}", n)]
    if max_rank >= 6:
        pairs += [("E6", 1), ("E6", 6)]
    if max_rank >= 7:
        pairs.append(("E7", 7))
    return pairs


# ============== ORTHOGONAL SUBSETS ==============

def harish_chandra_cascade(p: HermitianPair) -> OrtSubset:
    cascade = p.ort(open_orbit_rep(p.nilradical).weights)
    if any(not p.system.is_long(r) for r in cascade.roots):
        raise TheoremViolation(f"{p.label}: cascade contains a short root")
    return cascade


def ort_subsets(p: HermitianPair) -> List[OrtSubset]:
    return [p.ort(S.weights) for S in orthogonal_subsets(p.nilradical)]


def ort_max(p: HermitianPair) -> List[OrtSubset]:
    """Inclusion-maximal orthogonal subsets of Phi_1^+"""
    return [p.ort(S.weights) for S in maximal_orthogonal_subsets(p.nilradical)]


def is_antichain(p: HermitianPair, roots: Iterable[Sequence[int]]) -> bool:
    roots = list(roots)
    for i, a in enumerate(roots):
        for b in roots[i + 1:]:
            if p.leq(a, b) or p.leq(b, a):
                return False
    return True


def up_closure(p: HermitianPair, roots: Iterable[Sequence[int]]) -> FrozenSet[RootVector]:
    roots = list(roots)
    return frozenset(beta for beta in p.phi1plus if any(p.leq(b, beta) for b in roots))


def down_closure(p: HermitianPair, roots: Iterable[Sequence[int]]) -> FrozenSet[RootVector]:
    roots = list(roots)
    return frozenset(beta for beta in p.phi1plus if any(p.leq(beta, b) for b in roots))


def entails(p: HermitianPair, A: Iterable[Sequence[int]], B: Iterable[Sequence[int]]) -> bool:
    """A |- B: every element of A dominates some element of B"""
    return frozenset(tuple(a) for a in A) <= up_closure(p, B)


# ============== ANTICHAIN REDUCTION ==============

def _comparable_pair(p: HermitianPair, roots: Sequence[RootVector]) -> Optional[Tuple[RootVector, RootVector]]:
    """(beta, beta') with beta < beta' and beta minimal in roots"""
    for beta in sorted(roots):
        if any(b != beta and p.leq(b, beta) for b in roots):
            continue
        for other in sorted(roots):
            if other != beta and p.leq(beta, other):
                return beta, other
    return None


def _is_orthogonal_set(p: HermitianPair, roots: Sequence[RootVector]) -> bool:
    return all(p.system.inner(a, b) == 0 for i, a in enumerate(roots) for b in roots[i + 1:])


def _accept(p: HermitianPair, current: List[RootVector], candidate: List[RootVector]) -> bool:
    phi1 = set(p.phi1plus)
    if len(set(candidate)) != len(candidate) or any(r not in phi1 for r in candidate):
        return False
    if not _is_orthogonal_set(p, candidate) or not entails(p, candidate, current):
        return False
    return len(up_closure(p, candidate)) < len(up_closure(p, current))


def _reflect_all(p: HermitianPair, roots: Sequence[RootVector], gamma: RootVector) -> List[RootVector]:
    return [p.system.reflect(r, gamma) for r in roots]


def _search_step(p: HermitianPair, current: List[RootVector], beta: RootVector, beta_prime: RootVector) -> Optional[List[RootVector]]:
    gap = vsub(beta_prime, beta)
    for gamma in p.grading.positive0():
        if any(g > d for g, d in zip(gamma, gap)):
            continue
        candidate = _reflect_all(p, current, gamma)
        if _accept(p, current, candidate):
            return candidate
    return None


def _simply_laced_step(p: HermitianPair, current: List[RootVector], beta: RootVector, beta_prime: RootVector) -> Optional[List[RootVector]]:
    try:
        steps = p.system.decompose_orthogonal(beta, beta_prime)
    except (NotSimplyLaced, NoDecomposition):
        return None
    if not steps:
        return None
    candidate = _reflect_all(p, current, steps[0])
    return candidate if _accept(p, current, candidate) else None


def antichain_below(p: HermitianPair, B: Iterable[Sequence[int]]) -> OrtSubset:
    """Antichain A with A |- B, obtained by reflect-and-descend"""
    current = sorted(tuple(b) for b in (B.roots if isinstance(B, OrtSubset) else B))
    if not _is_orthogonal_set(p, current):
        raise NotApplicable(f"{current} is not orthogonal")
    original = list(current)
    shorts = p.short_roots

    if len(shorts) == 1 and len(current) == 2:
        # single short root dominates every orthogonal pair
        return p.ort(shorts)

    if len(shorts) > 1:
        longs = [r for r in current if p.system.is_long(r)]
        while len(longs) >= 2:
            a, b = longs[0], longs[1]
            middle = tuple((x + y) // 2 for x, y in zip(a, b))
            current = sorted([r for r in current if r not in (a, b)] + [middle])
            longs = longs[2:]

    while True:
        pair = _comparable_pair(p, current)
        if pair is None:
            break
        beta, beta_prime = pair
        candidate = None
        if p.system.simply_laced:
            candidate = _simply_laced_step(p, current, beta, beta_prime)
        if candidate is None:
            candidate = _search_step(p, current, beta, beta_prime)
        if candidate is None:
            raise NoDecomposition(f"{p.label}: no reduction step below {current}", witness=(beta, beta_prime))
        current = sorted(candidate)

    if not entails(p, current, original):
        raise TheoremViolation(f"{p.label}: {current} does not entail {original}")
    return p.ort(current)


def expected_antichain_type(p: HermitianPair, B: OrtSubset) -> Tuple[int, int]:
    h, k = B.type
    if p.system.simply_laced:
        return B.type
    return (h + k // 2, k - 2 * (k // 2))


# ============== TUBE TYPE ==============

def longest_element_image(system: FiniteRootSystem, v: Sequence[int]) -> RootVector:
    """w_0(v), with w_0 read off from the walk taking 2 rho to its antidominant image"""
    rho2 = system.rho2
    word = []
    while True:
        step = next((i for i in range(system.rank) if system.pairing(rho2, unit(system.rank, i)) > 0), None)
        if step is None:
            break
        rho2 = system.simple_reflect(rho2, step)
        word.append(step)
    image = tuple(v)
    for i in word:
        image = system.simple_reflect(image, i)
    return image


def is_tube_type(p: HermitianPair) -> bool:
    tube = longest_element_image(p.system, p.alpha_q) == vneg(p.alpha_q)
    if tube:
        total = (0,) * p.system.rank
        for gamma in harish_chandra_cascade(p).roots:
            total = vadd(total, gamma)
        norm = p.system.norm2(p.alpha_q)
        for alpha in p.system.positive_roots:
            if alpha[p.q] in (0, 1) and p.system.inner(total, alpha) != alpha[p.q] * norm:
                raise TheoremViolation(f"{p.label}: cascade sum rule fails at {alpha}")
    return tube


def unique_max_antichain(p: HermitianPair) -> OrtSubset:
    """The only antichain among the maximal orthogonal subsets"""
    return _unique_max_antichain(p)


@lru_cache(maxsize=None)
def _unique_max_antichain(p: HermitianPair) -> OrtSubset:
    if not is_tube_type(p):
        raise NotTubeType(f"{p.label} is not of tube type")
    maxima = ort_max(p)
    antichains = [B for B in maxima if is_antichain(p, B.roots)]
    if len(antichains) != 1:
        raise TheoremViolation(f"{p.label}: {len(antichains)} antichains in Ort_max")
    star = antichains[0]
    for B in maxima:
        if not star.as_set() <= up_closure(p, B.roots) or not star.as_set() <= down_closure(p, B.roots):
            raise TheoremViolation(f"{p.label}: {star.roots} escapes the closures of {B.roots}")
    return star


def short_root_decomposition(p: HermitianPair, beta: Sequence[int], S: Iterable[Sequence[int]]) -> Tuple[RootVector, RootVector]:
    """Distinct gamma, gamma' in S with beta = (gamma + gamma') / 2"""
    if not p.short_roots:
        raise NoShortRoots(f"{p.label} has no short roots in Phi_1^+")
    beta = tuple(beta)
    if beta not in p.short_roots:
        raise NotApplicable(f"{beta} is not a short root of Phi_1^+")
    if not is_tube_type(p):
        raise NotTubeType(f"{p.label} is not of tube type")
    members = sorted((tuple(s) for s in (S.roots if isinstance(S, OrtSubset) else S)), reverse=True)
    target = tuple(2 * c for c in beta)
    for i, gamma in enumerate(members):
        for other in members[i + 1:]:
            if vadd(gamma, other) == target:
                return gamma, other
    raise NoDecomposition(f"{beta} is not a midpoint of two elements of {members}")
