# affine.py
import logging
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

import config
from errors import IllegalTwist, IsotropicCoroot, LevelBoundTooSmall, NotApplicable, NotCoprime, UnknownType
from rootsys import (
    RootVector,
    Scalar,
    affine_cartan_matrix,
    affine_catalog,
    affine_name,
    as_scalar,
    dominance_leq,
    generate_roots,
    is_positive,
    kernel_labels,
    parse_label,
    vadd,
    vneg,
    vscale,
    vsub,
)

logger = logging.getLogger(__name__)

TYPE_FILTER = re.compile(r"^[A-G](\d+)?(\^\(\d\))?$")

# Legal (letter, twist) pairs beyond the untwisted ones
TWISTED = {
    ("A", 2): lambda n: n >= 2,
    ("D", 2): lambda n: n >= 3,
    ("E", 2): lambda n: n == 6,
    ("D", 3): lambda n: n == 4,
}


# ============== GRADED WEIGHT SETS ==============

class GradedWeights(ABC):
    """Weights of a Z_m-graded algebra, each stored as a canonical representative"""

    order: int

    @abstractmethod
    def weights(self, i: int) -> Tuple[RootVector, ...]:
        """Nonzero weights of g_i, sorted"""

    @abstractmethod
    def positive0(self) -> Tuple[RootVector, ...]:
        """Positive roots of g_0"""

    @property
    @abstractmethod
    def simple0_indices(self) -> Tuple[int, ...]:
        pass

    @abstractmethod
    def grade(self, v: Sequence[int]) -> int:
        pass

    @abstractmethod
    def reduce(self, v: Sequence[int]) -> RootVector:
        pass

    @abstractmethod
    def inner(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        pass

    @abstractmethod
    def finite_coords(self, v: Sequence[int]) -> RootVector:
        """Coordinates of the weight over the simple roots of g"""

    def add(self, u: Sequence[int], v: Sequence[int]) -> RootVector:
        return self.reduce(vadd(u, v))

    def sub(self, u: Sequence[int], v: Sequence[int]) -> RootVector:
        return self.reduce(vsub(u, v))

    def neg(self, u: Sequence[int]) -> RootVector:
        return self.reduce(vneg(u))

    def pairing(self, lam: Sequence[int], mu: Sequence[int]) -> Scalar:
        denom = self.inner(mu, mu)
        if denom == 0:
            raise IsotropicCoroot(f"Isotropic coroot {tuple(mu)}", witness=tuple(mu))
        return as_scalar(2 * self.inner(lam, mu) / denom)

    def weight_set(self, i: int) -> FrozenSet[RootVector]:
        cache = self.__dict__.setdefault("_weight_sets", {})
        i %= self.order
        if i not in cache:
            cache[i] = frozenset(self.weights(i))
        return cache[i]

    def is_weight(self, v: Sequence[int], i: int) -> bool:
        v = self.reduce(v)
        return self.grade(v) == i % self.order and v in self.weight_set(i)

    def is_positive0(self, v: Sequence[int]) -> bool:
        cache = self.__dict__.setdefault("_positive0_set", frozenset(self.positive0()))
        return self.reduce(v) in cache

    def leq0(self, lam: Sequence[int], mu: Sequence[int]) -> bool:
        """Dominance order: mu - lam is a sum of positive roots of g_0"""
        lam, mu = self.reduce(lam), self.reduce(mu)
        if self.grade(lam) != self.grade(mu):
            return False
        return dominance_leq(lam, mu, self.simple0_indices)

    def is_orthogonal(self, u: Sequence[int], v: Sequence[int]) -> bool:
        return self.inner(u, v) == 0


# ============== AFFINE ROOT SYSTEMS ==============

class AffineRootSystem:
    """Real roots of X_n^(k) over the Kac-numbered simple roots alpha_0..alpha_l"""

    def __init__(self, finite_type: str, twist: int = 1):
        letter, n = parse_label(finite_type)
        if twist != 1 and not TWISTED.get((letter, twist), lambda _: False)(n):
            raise IllegalTwist(f"({finite_type}, {twist}) is not a legal Kac pair")
        self.finite_type = finite_type
        self.letter = letter
        self.algebra_rank = n
        self.twist = twist
        self.cartan = affine_cartan_matrix(letter, n, twist)
        self.name = affine_name(letter, n, twist)
        self.rank = self.cartan.rank
        self.labels: Tuple[int, ...] = kernel_labels(self.cartan)
        self.delta: RootVector = self.labels
        self.half_levels = twist == 2 and letter == "A" and n % 2 == 0

        scale = 1
        for row in self.cartan.form:
            for x in row:
                scale = scale * x.denominator // gcd(scale, x.denominator)
        self._scale = scale
        self._gram = tuple(tuple(int(x * scale) for x in row) for row in self.cartan.form)

        finite = generate_roots(self.cartan.submatrix(range(1, self.rank)))
        self.finite_roots: Tuple[RootVector, ...] = tuple((0,) + r for r in finite.roots)
        self._finite_long_norm = max(self.inner_int(r, r) for r in self.finite_roots)
        self._max_simple_norm = max(self.cartan.lengths)
        logger.debug(f"Built {self.name} with labels {self.labels}")

    def __repr__(self) -> str:
        return f"AffineRootSystem({self.name})"

    def inner_int(self, u: Sequence[int], v: Sequence[int]) -> int:
        G = self._gram
        total = 0
        for i, ui in enumerate(u):
            if ui:
                row = G[i]
                total += ui * sum(row[j] * vj for j, vj in enumerate(v) if vj)
        return total

    def inner(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        return Fraction(self.inner_int(u, v), self._scale)

    def is_long_simple(self, i: int) -> bool:
        return self.cartan.lengths[i] == self._max_simple_norm

    def is_long_finite(self, alpha: Sequence[int]) -> bool:
        return self.inner_int(alpha, alpha) == self._finite_long_norm

    def is_imaginary(self, v: Sequence[int]) -> bool:
        """Nonzero multiple of delta"""
        j = Fraction(v[0], self.delta[0])
        return j != 0 and j.denominator == 1 and tuple(v) == vscale(int(j), self.delta)

    def real_roots(self, level: int) -> FrozenSet[RootVector]:
        """Real roots alpha + j delta with |j| <= level, per the twist type"""
        roots = set()
        for alpha in self.finite_roots:
            long = self.is_long_finite(alpha)
            step = self.twist if (long and self.twist > 1) else 1
            for j in range(-level, level + 1):
                if j % step == 0:
                    roots.add(vadd(alpha, vscale(j, self.delta)))
            if self.half_levels and long:
                for t in range(-2 * level + 1, 2 * level, 2):
                    doubled = vadd(alpha, vscale(t, self.delta))
                    roots.add(tuple(c // 2 for c in doubled))
        return frozenset(roots)

    def to_dot(self) -> str:
        from rootsys import to_dot
        return to_dot(self.cartan, offset=0, labels=self.labels, name=self.name)


@lru_cache(maxsize=None)
def build_affine(finite_type: str, twist: int = 1) -> AffineRootSystem:
    return AffineRootSystem(finite_type, twist)


def real_roots_up_to_level(system, level: int = 3) -> FrozenSet[RootVector]:
    """Real roots with delta-translation index at most level in absolute value"""
    if isinstance(system, GradingDatum):
        system = system.system
    return system.real_roots(level)


# ============== GRADINGS ==============

@dataclass(frozen=True)
class BarWeight:
    representative: RootVector
    class_index: int


class GradingDatum(GradedWeights):
    """Automorphism of Kac type (eta; s_0, ..., s_l) with its sigma-height window"""

    def __init__(self, system: AffineRootSystem, s: Sequence[int], flip: bool = False, level_bound: Optional[int] = None):
        s = tuple(int(x) for x in s)
        if len(s) != system.rank:
            raise NotCoprime(f"Expected {system.rank} marks, got {len(s)}")
        if any(x < 0 for x in s):
            raise NotCoprime(f"Marks must be nonnegative: {s}")
        g = 0
        for x in s:
            g = gcd(g, x)
        if g != 1:
            raise NotCoprime(f"Marks {s} have gcd {g}")
        self.system = system
        self.s = s
        self.flip = flip
        self.k = 2 if flip else system.twist
        self.delta_height = sum(si * ai for si, ai in zip(s, system.labels))
        self.order = self.k * self.delta_height
        self.m = self.order
        self.pi0 = tuple(i for i, x in enumerate(s) if x == 0)
        self.pi1 = tuple(i for i, x in enumerate(s) if x != 0)
        self.level_bound = config.LEVEL_BOUND if level_bound is None else level_bound
        self._period = vscale(self.k, system.delta)

        finite_max = max(abs(self.sigma_height(r)) for r in system.finite_roots)
        translations = (self.level_bound + finite_max) // self.delta_height + 1
        window = [r for r in system.real_roots(translations) if abs(self.sigma_height(r)) <= self.level_bound]
        self._real = frozenset(window)
        self.positive_real: Tuple[RootVector, ...] = tuple(sorted(r for r in window if is_positive(r)))
        logger.debug(f"Grading {self.label} of order {self.order}: {len(window)} real roots in window")

    # ---------- identity ----------

    @property
    def label(self) -> str:
        prefix = "flip:" if self.flip else ""
        return f"{prefix}{self.system.name}{list(self.s)}"

    def __repr__(self) -> str:
        return f"GradingDatum({self.label})"

    def to_dict(self) -> dict:
        return {
            "type": self.system.finite_type,
            "twist": self.system.twist,
            "flip": self.flip,
            "s": list(self.s),
            "m": self.order,
            "pi0": list(self.pi0),
            "pi1": list(self.pi1),
        }

    # ---------- heights and window ----------

    def sigma_height(self, v: Sequence[int]) -> int:
        return sum(si * vi for si, vi in zip(self.s, v))

    def check_window(self, v: Sequence[int]) -> None:
        if abs(self.sigma_height(v)) > self.level_bound:
            raise LevelBoundTooSmall(
                f"sigma-height {self.sigma_height(v)} of {tuple(v)} exceeds level bound {self.level_bound}",
                witness=tuple(v),
            )

    def is_real_root(self, v: Sequence[int]) -> bool:
        self.check_window(v)
        return tuple(v) in self._real

    def is_root(self, v: Sequence[int]) -> bool:
        return self.system.is_imaginary(v) or self.is_real_root(v)

    def delta_hat(self, i: int) -> Tuple[RootVector, ...]:
        """Positive real roots of sigma-height i"""
        return tuple(r for r in self.positive_real if self.sigma_height(r) == i)

    @property
    def delta_prime(self) -> Optional[RootVector]:
        """(k/m) delta when it is integral over the simple roots"""
        scaled = [self.k * a for a in self.system.delta]
        if any(x % self.order for x in scaled):
            return None
        return tuple(x // self.order for x in scaled)

    # ---------- bar map ----------

    def reduce(self, v: Sequence[int]) -> RootVector:
        t = self.sigma_height(v) // self.order
        return vsub(v, vscale(t, self._period)) if t else tuple(v)

    def grade(self, v: Sequence[int]) -> int:
        return self.sigma_height(v) % self.order

    def bar(self, alpha: Sequence[int]) -> BarWeight:
        rep = self.reduce(alpha)
        return BarWeight(representative=rep, class_index=self.grade(rep))

    def inner(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        return self.system.inner(u, v)

    def weights(self, i: int) -> Tuple[RootVector, ...]:
        i %= self.order
        return tuple(sorted(r for r in self._real if self.sigma_height(r) == i))

    def positive0(self) -> Tuple[RootVector, ...]:
        return self.delta_hat(0)

    @property
    def simple0_indices(self) -> Tuple[int, ...]:
        return self.pi0

    def finite_coords(self, v: Sequence[int]) -> RootVector:
        """Rewrite alpha_0 as delta - theta and drop the delta part"""
        if self.system.twist != 1:
            raise NotApplicable(f"{self.label}: weights of a twisted grading have no coordinates over the simple roots of g")
        v = tuple(v)
        return vsub(v[1:], vscale(v[0], self.system.delta[1:]))

    # ---------- node data ----------

    def is_long(self, i: int) -> bool:
        return self.system.is_long_simple(i)

    def is_complex(self, i: int) -> bool:
        """alpha_i shares its bar with a root of the other parity"""
        shift = self.delta_prime
        if shift is None:
            return False
        alpha = tuple(1 if j == i else 0 for j in range(self.system.rank))
        return any(self.is_real_root(v) for v in (vadd(alpha, shift), vsub(alpha, shift)))


def build_grading(system: AffineRootSystem, s: Sequence[int], level_bound: Optional[int] = None) -> GradingDatum:
    return GradingDatum(system, s, level_bound=level_bound)


def flip(finite_type: str, level_bound: Optional[int] = None) -> GradingDatum:
    """g + g with the swap, on the untwisted algebra of g with delta as the period"""
    system = build_affine(finite_type, 1)
    s = (1,) + (0,) * (system.rank - 1)
    return GradingDatum(system, s, flip=True, level_bound=level_bound)


def sigma_height(alpha: Sequence[int], g: GradingDatum) -> int:
    return g.sigma_height(alpha)


# ============== BICONVEXITY ==============

def is_biconvex(g: GradingDatum, roots: Iterable[Sequence[int]]) -> bool:
    """Both the set and its complement in the positive roots are closed under addition"""
    A = {tuple(r) for r in roots}
    if not A:
        return True
    for r in A:
        if not is_positive(r) or not g.is_real_root(r):
            return False
    members = sorted(A)
    for i, a in enumerate(members):
        for b in members[i:]:
            total = vadd(a, b)
            if g.system.is_imaginary(total):
                return False
            g.check_window(total)
            if total in g._real and total not in A:
                return False
    top = max(g.sigma_height(r) for r in A)
    lower = [r for r in g.positive_real if g.sigma_height(r) <= top]
    for gamma in members:
        h = g.sigma_height(gamma)
        for alpha in lower:
            if alpha == gamma or g.sigma_height(alpha) > h:
                continue
            beta = vsub(gamma, alpha)
            if is_positive(beta) and beta in g._real and alpha not in A and beta not in A:
                return False
        if imaginary_tail(g, gamma, A):
            return False
    return True


def imaginary_tail(g: GradingDatum, gamma: Sequence[int], exclude: Iterable = ()) -> bool:
    """gamma - j delta is a positive real root outside exclude for some j >= 1"""
    j = 1
    while True:
        beta = vsub(gamma, vscale(j, g.system.delta))
        if g.sigma_height(beta) < 0:
            return False
        if is_positive(beta) and beta in g._real and beta not in exclude:
            return True
        j += 1


# ============== INVOLUTION SWEEP ==============

def _families(max_rank: int) -> List[Tuple[str, int]]:
    """(finite type, twist) pairs whose algebra g has rank at most max_rank"""
    pairs = []
    for letter, n, k in affine_catalog(max_rank):
        if n <= max_rank:
            pairs.append((f"{letter}{n}", k))
    # C2 and B2 coincide; catalog starts untwisted B at 3
    return sorted(set(pairs), key=lambda p: (p[0][0], int(p[0][1:]), p[1]))


def _matches(token: str, finite_type: str, twist: int) -> bool:
    name = affine_name(finite_type[0], int(finite_type[1:]), twist)
    return token in (finite_type[0], finite_type, name)


def validate_type_filter(types: Optional[Iterable[str]]) -> Optional[List[str]]:
    if types is None:
        return None
    tokens = [t.strip() for t in types if t.strip()]
    for token in tokens:
        if not TYPE_FILTER.match(token):
            raise UnknownType(f"Invalid type filter: {token}")
    return tokens


def _automorphisms(system: AffineRootSystem) -> List[Dict[int, int]]:
    G = system.cartan.graph()
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(G, G, edge_match=lambda x, y: x["a"] == y["a"])
    return list(matcher.isomorphisms_iter())


def involution_marks(system: AffineRootSystem) -> List[Tuple[int, ...]]:
    """Kac marks of order 2, one per orbit of diagram automorphisms"""
    labels = system.labels
    n = system.rank
    candidates = []
    if system.twist == 1:
        for i in range(n):
            if labels[i] == 2:
                candidates.append(tuple(1 if j == i else 0 for j in range(n)))
        ones = [i for i in range(n) if labels[i] == 1]
        for x, i in enumerate(ones):
            for j in ones[x + 1:]:
                candidates.append(tuple(1 if t in (i, j) else 0 for t in range(n)))
    elif system.twist == 2:
        for i in range(n):
            if labels[i] == 1:
                candidates.append(tuple(1 if j == i else 0 for j in range(n)))
    autos = _automorphisms(system)
    chosen = {}
    for s in candidates:
        key = max(tuple(s[perm[j]] for j in range(n)) for perm in autos)
        chosen.setdefault(key, key)
    return sorted(chosen.values(), reverse=True)


def involutions(max_rank: int = None, types: Optional[Iterable[str]] = None, level_bound: Optional[int] = None) -> List[GradingDatum]:
    """Every involution of a simple g of rank <= max_rank, up to diagram automorphism"""
    max_rank = config.MAX_RANK if max_rank is None else max_rank
    tokens = validate_type_filter(types)
    result = []
    for finite_type, twist in _families(max_rank):
        if tokens is not None and not any(_matches(t, finite_type, twist) for t in tokens):
            continue
        system = build_affine(finite_type, twist)
        for s in involution_marks(system):
            result.append(GradingDatum(system, s, level_bound=level_bound))
    logger.info(f"Sweep over rank <= {max_rank}: {len(result)} involutions")
    return result
