# rootsys.py
import logging
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
import sympy

import config
from errors import (
    InvalidCartanMatrix,
    IllegalTwist,
    IsotropicCoroot,
    NoDecomposition,
    NotDominated,
    NotFiniteType,
    NotSimplyLaced,
    NotSymmetrizable,
    SameRootLine,
    UnknownType,
)

logger = logging.getLogger(__name__)

RootVector = Tuple[int, ...]
Scalar = Union[int, Fraction]

LABEL_PATTERN = re.compile(r"^([A-G])(\d+)$")


# ============== VECTOR HELPERS ==============

def vadd(u: Sequence[int], v: Sequence[int]) -> RootVector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence[int], v: Sequence[int]) -> RootVector:
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: Sequence[int]) -> RootVector:
    return tuple(-a for a in u)


def vscale(c: int, u: Sequence[int]) -> RootVector:
    return tuple(c * a for a in u)


def unit(n: int, i: int) -> RootVector:
    return tuple(1 if j == i else 0 for j in range(n))


def is_positive(v: Sequence[int]) -> bool:
    """Sign-uniform positivity: all coefficients >= 0 and not all zero"""
    return any(v) and all(c >= 0 for c in v)


def height(v: Sequence[int]) -> int:
    return sum(v)


def support(v: Sequence[int]) -> Tuple[int, ...]:
    return tuple(i for i, c in enumerate(v) if c)


def as_scalar(value: Fraction) -> Scalar:
    return value.numerator if value.denominator == 1 else value


# ============== CARTAN MATRICES ==============

class GeneralizedCartanMatrix:
    """Entry (i, j) is <alpha_i, alpha_j^vee> = 2(alpha_i, alpha_j)/(alpha_j, alpha_j)."""

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise InvalidCartanMatrix("Cartan matrix must be square and nonempty")
        for i in range(n):
            if rows[i][i] != 2:
                raise InvalidCartanMatrix(f"Diagonal entry {i} is {rows[i][i]}, expected 2")
            for j in range(n):
                if i == j:
                    continue
                if rows[i][j] > 0:
                    raise InvalidCartanMatrix(f"Entry ({i},{j}) is positive")
                if (rows[i][j] == 0) != (rows[j][i] == 0):
                    raise InvalidCartanMatrix(f"Entries ({i},{j}) and ({j},{i}) break the zero pattern")
        self.entries = rows
        self.rank = n
        self._classification = None
        self._submatrices = {}
        self.lengths = self._symmetrize()
        # symmetric form: B_ij = A_ij * l_j, so (alpha_i, alpha_i) = 2 l_i
        self.form = tuple(
            tuple(Fraction(rows[i][j]) * self.lengths[j] for j in range(n)) for i in range(n)
        )

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, GeneralizedCartanMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"GeneralizedCartanMatrix({[list(r) for r in self.entries]})"

    def graph(self) -> nx.DiGraph:
        """Directed Dynkin graph; edge (i, j) carries a = A_ij"""
        G = nx.DiGraph()
        G.add_nodes_from(range(self.rank))
        for i in range(self.rank):
            for j in range(self.rank):
                if i != j and self.entries[i][j]:
                    G.add_edge(i, j, a=self.entries[i][j])
        return G

    def components(self) -> List[Tuple[int, ...]]:
        comps = nx.connected_components(self.graph().to_undirected())
        return sorted(tuple(sorted(c)) for c in comps)

    def submatrix(self, nodes: Sequence[int]) -> "GeneralizedCartanMatrix":
        nodes = tuple(nodes)
        if nodes not in self._submatrices:
            self._submatrices[nodes] = GeneralizedCartanMatrix([[self.entries[i][j] for j in nodes] for i in nodes])
        return self._submatrices[nodes]

    def symmetric_matrix(self) -> sympy.Matrix:
        return sympy.Matrix(self.rank, self.rank, lambda i, j: sympy.Rational(
            self.form[i][j].numerator, self.form[i][j].denominator))

    def _symmetrize(self) -> Tuple[Fraction, ...]:
        """Half squared lengths l_i, the longest node of each component at 1"""
        n = len(self.entries)
        lengths: List[Optional[Fraction]] = [None] * n
        undirected = self.graph().to_undirected()
        for comp in nx.connected_components(undirected):
            root = min(comp)
            lengths[root] = Fraction(1)
            for i, j in nx.bfs_edges(undirected, root):
                lengths[j] = lengths[i] * self.entries[j][i] / self.entries[i][j]
            top = max(lengths[i] for i in comp)
            for i in comp:
                lengths[i] = lengths[i] / top
        for i in range(n):
            for j in range(n):
                if self.entries[i][j] * lengths[j] != self.entries[j][i] * lengths[i]:
                    raise NotSymmetrizable(f"No diagonal symmetrizer: cycle through nodes {i}, {j} is inconsistent")
        return tuple(lengths)


def _form_to_gcm(sq: Sequence[Fraction], bonds: Dict[Tuple[int, int], Fraction]) -> GeneralizedCartanMatrix:
    """Build A from squared lengths and off-diagonal inner products"""
    n = len(sq)
    B = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        B[i][i] = Fraction(sq[i])
    for (i, j), value in bonds.items():
        B[i][j] = B[j][i] = Fraction(value)
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            a = 2 * B[i][j] / B[j][j]
            if a.denominator != 1:
                raise InvalidCartanMatrix(f"Non-integral Cartan entry at ({i},{j})")
            row.append(int(a))
        entries.append(row)
    return GeneralizedCartanMatrix(entries)


# ============== BOURBAKI CATALOG ==============

def parse_label(label: str) -> Tuple[str, int]:
    match = LABEL_PATTERN.match(label.strip())
    if not match:
        raise UnknownType(f"Unknown type label: {label}")
    letter, n = match.group(1), int(match.group(2))
    valid = {
        "A": n >= 1,
        "B": n >= 2,
        "C": n >= 2,
        "D": n >= 3,
        "E": n in (6, 7, 8),
        "F": n == 4,
        "G": n == 2,
    }
    if not valid[letter]:
        raise UnknownType(f"Unknown type label: {label}")
    return letter, n


def _finite_form(letter: str, n: int) -> Tuple[List[Fraction], Dict[Tuple[int, int], Fraction]]:
    """Squared lengths and bonds of the Bourbaki simple roots (0-based nodes)"""
    two, one, half = Fraction(2), Fraction(1), Fraction(1, 2)
    sq = [two] * n
    bonds: Dict[Tuple[int, int], Fraction] = {}
    if letter == "A":
        bonds = {(i, i + 1): -one for i in range(n - 1)}
    elif letter == "B":
        sq[n - 1] = one
        bonds = {(i, i + 1): -one for i in range(n - 1)}
    elif letter == "C":
        sq = [one] * (n - 1) + [two]
        bonds = {(i, i + 1): -half for i in range(n - 2)}
        bonds[(n - 2, n - 1)] = -one
    elif letter == "D":
        bonds = {(i, i + 1): -one for i in range(n - 2)}
        bonds[(n - 3, n - 1)] = -one
    elif letter == "E":
        bonds = {(0, 2): -one, (1, 3): -one}
        bonds.update({(i, i + 1): -one for i in range(2, n - 1)})
    elif letter == "F":
        sq = [two, two, one, one]
        bonds = {(0, 1): -one, (1, 2): -one, (2, 3): -half}
    elif letter == "G":
        sq = [Fraction(2, 3), two]
        bonds = {(0, 1): -one}
    return sq, bonds


def cartan_matrix(label: str) -> GeneralizedCartanMatrix:
    """Cartan matrix of a Bourbaki type such as 'E6'"""
    letter, n = parse_label(label)
    return _form_to_gcm(*_finite_form(letter, n))


def expected_root_count(letter: str, n: int) -> int:
    counts = {
        "A": n * (n + 1),
        "B": 2 * n * n,
        "C": 2 * n * n,
        "D": 2 * n * (n - 1),
        "F": 48,
        "G": 12,
    }
    if letter == "E":
        return {6: 72, 7: 126, 8: 240}[n]
    return counts[letter]


def _reflection_closure(cartan: GeneralizedCartanMatrix, limit: int = 100000) -> List[RootVector]:
    n = cartan.rank
    A = cartan.entries
    seen = {unit(n, i) for i in range(n)}
    queue = deque(sorted(seen))
    while queue:
        beta = queue.popleft()
        for i in range(n):
            c = sum(beta[j] * A[j][i] for j in range(n))
            if c == 0:
                continue
            image = tuple(b - c if j == i else b for j, b in enumerate(beta))
            if image not in seen:
                seen.add(image)
                queue.append(image)
        if len(seen) > limit:
            raise NotFiniteType("Reflection closure does not terminate")
    return sorted(seen)


# ============== AFFINE CATALOG ==============

def affine_form(letter: str, n: int, k: int) -> Tuple[List[Fraction], Dict[Tuple[int, int], Fraction]]:
    """Squared lengths and bonds of the affine diagram X_n^(k), Kac numbering 0..l"""
    one, two, half = Fraction(1), Fraction(2), Fraction(1, 2)
    if k == 1:
        sq, bonds = _finite_form(letter, n)
        finite = _form_to_gcm(sq, bonds)
        theta = max(_reflection_closure(finite), key=lambda v: (height(v), v))
        gram = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            gram[i][i] = sq[i]
        for (i, j), value in bonds.items():
            gram[i][j] = gram[j][i] = value
        # alpha_0 = delta - theta, bonded by -(theta, alpha_j)
        full_sq = [max(sq)] + list(sq)
        full_bonds = {(i + 1, j + 1): v for (i, j), v in bonds.items()}
        for j in range(n):
            value = sum(theta[i] * gram[i][j] for i in range(n))
            if value:
                full_bonds[(0, j + 1)] = -value
        return full_sq, full_bonds
    if k == 2 and letter == "A" and n % 2 == 0:
        l = n // 2
        sq = [one] + [two] * (l - 1) + [Fraction(4)]
        if l == 1:
            return [one, Fraction(4)], {(0, 1): -two}
        bonds = {(0, 1): -one}
        bonds.update({(i, i + 1): -one for i in range(1, l - 1)})
        bonds[(l - 1, l)] = -two
        return sq, bonds
    if k == 2 and letter == "A" and n % 2 == 1 and n >= 3:
        l = (n + 1) // 2
        sq = [one] * l + [two]
        if l == 2:
            return sq, {(0, 2): -one, (1, 2): -one}
        bonds = {(0, 2): -half}
        bonds.update({(i, i + 1): -half for i in range(1, l - 1)})
        bonds[(l - 1, l)] = -one
        return sq, bonds
    if k == 2 and letter == "D" and n >= 3:
        l = n - 1
        sq = [one] + [two] * (l - 1) + [one]
        bonds = {(i, i + 1): -one for i in range(l)}
        return sq, bonds
    if k == 2 and letter == "E" and n == 6:
        return [one, one, one, two, two], {(0, 1): -half, (1, 2): -half, (2, 3): -one, (3, 4): -one}
    if k == 3 and letter == "D" and n == 4:
        third = Fraction(2, 3)
        return [third, third, two], {(0, 1): -Fraction(1, 3), (1, 2): -one}
    raise IllegalTwist(f"No affine diagram for ({letter}{n}, {k})")


def affine_name(letter: str, n: int, k: int) -> str:
    return f"{letter}{n}^({k})"


def affine_cartan_matrix(letter: str, n: int, k: int) -> GeneralizedCartanMatrix:
    return _form_to_gcm(*affine_form(letter, n, k))


def kernel_labels(cartan: GeneralizedCartanMatrix) -> Tuple[int, ...]:
    """Primitive positive integer vector spanning the kernel of the symmetric form"""
    kernel = cartan.symmetric_matrix().nullspace()
    if len(kernel) != 1:
        raise NotSymmetrizable(f"Form has corank {len(kernel)}, expected 1")
    vec = kernel[0]
    denom = lcm(*[int(sympy.Rational(x).q) for x in vec])
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    if ints[0] < 0:
        ints = [-x for x in ints]
    return tuple(ints)


@lru_cache(maxsize=None)
def _finite_table(cap: int) -> Tuple[Tuple[str, GeneralizedCartanMatrix], ...]:
    table = []
    for n in range(1, cap + 1):
        table.append((f"A{n}", cartan_matrix(f"A{n}")))
    for n in range(2, cap + 1):
        table.append((f"B{n}", cartan_matrix(f"B{n}")))
    for n in range(3, cap + 1):
        table.append((f"C{n}", cartan_matrix(f"C{n}")))
    for n in range(4, cap + 1):
        table.append((f"D{n}", cartan_matrix(f"D{n}")))
    for label in ("E6", "E7", "E8", "F4", "G2"):
        if parse_label(label)[1] <= cap:
            table.append((label, cartan_matrix(label)))
    return tuple(table)


def affine_catalog(cap: int) -> List[Tuple[str, int, int]]:
    """(letter, n, k) triples of the affine tables with at most cap + 1 nodes"""
    entries = []
    ranges = {"A": 1, "B": 3, "C": 2, "D": 4}
    for letter, start in ranges.items():
        entries += [(letter, n, 1) for n in range(start, cap + 1)]
    entries += [(label[0], int(label[1]), 1) for label in ("E6", "E7", "E8", "F4", "G2") if int(label[1]) <= cap]
    entries += [("A", 2 * l, 2) for l in range(1, cap + 1)]
    entries += [("A", 2 * l - 1, 2) for l in range(3, cap + 1)]
    entries += [("D", l + 1, 2) for l in range(2, cap + 1)]
    if cap >= 4:
        entries.append(("E", 6, 2))
    if cap >= 2:
        entries.append(("D", 4, 3))
    return entries


@lru_cache(maxsize=None)
def _affine_table(cap: int) -> Tuple[Tuple[str, int, GeneralizedCartanMatrix], ...]:
    return tuple(
        (affine_name(letter, n, k), k, affine_cartan_matrix(letter, n, k))
        for letter, n, k in affine_catalog(cap)
    )


def _same_diagram(a: GeneralizedCartanMatrix, b: GeneralizedCartanMatrix) -> bool:
    if a.rank != b.rank or sorted(map(sorted, a.entries)) != sorted(map(sorted, b.entries)):
        return False
    return nx.is_isomorphic(a.graph(), b.graph(), edge_match=lambda x, y: x["a"] == y["a"])


# ============== CLASSIFICATION ==============

@dataclass(frozen=True)
class DiagramClass:
    verdict: str
    label: Optional[str] = None
    labels: Optional[Tuple[int, ...]] = None
    twist: Optional[int] = None
    components: Tuple["DiagramClass", ...] = ()

    @property
    def is_finite(self) -> bool:
        return self.verdict == "Finite"

    @property
    def is_affine(self) -> bool:
        return self.verdict == "Affine"


def classify_gcm(cartan: GeneralizedCartanMatrix) -> DiagramClass:
    """Finite / Affine / Indefinite verdict with a Bourbaki or Kac name when known; cached on the matrix"""
    if cartan._classification is None:
        cartan._classification = _classify(cartan)
    return cartan._classification


def _classify(cartan: GeneralizedCartanMatrix) -> DiagramClass:
    comps = cartan.components()
    if len(comps) > 1:
        parts = tuple(classify_gcm(cartan.submatrix(c)) for c in comps)
        verdicts = {p.verdict for p in parts}
        if "Indefinite" in verdicts:
            verdict = "Indefinite"
        elif "Affine" in verdicts:
            verdict = "Affine"
        else:
            verdict = "Finite"
        names = [p.label for p in parts]
        label = "+".join(names) if all(names) else None
        return DiagramClass(verdict=verdict, label=label, components=parts)

    B = cartan.symmetric_matrix()
    if B.is_positive_definite:
        label = None
        for name, candidate in _finite_table(config.RANK_CAP):
            if _same_diagram(cartan, candidate):
                label = name
                break
        if label is None:
            logger.warning(f"Finite diagram of rank {cartan.rank} is beyond the naming table")
        return DiagramClass(verdict="Finite", label=label)

    if B.is_positive_semidefinite and B.rank() == cartan.rank - 1:
        labels = kernel_labels(cartan)
        for name, k, candidate in _affine_table(config.RANK_CAP):
            if _same_diagram(cartan, candidate):
                return DiagramClass(verdict="Affine", label=name, labels=labels, twist=k)
        logger.warning(f"Affine diagram of rank {cartan.rank} is beyond the naming table")
        return DiagramClass(verdict="Affine", labels=labels)

    return DiagramClass(verdict="Indefinite")


# ============== FINITE ROOT SYSTEMS ==============

class FiniteRootSystem:
    """Roots of a finite-type Cartan matrix, with exact form arithmetic"""

    def __init__(self, cartan: GeneralizedCartanMatrix, roots: Sequence[RootVector], bourbaki_type: Optional[str]):
        self.cartan = cartan
        self.rank = cartan.rank
        self.roots: Tuple[RootVector, ...] = tuple(sorted(roots))
        self.positive_roots = tuple(r for r in self.roots if is_positive(r))
        self.bourbaki_type = bourbaki_type
        self._root_set = frozenset(self.roots)
        denoms = [x.denominator for row in cartan.form for x in row]
        scale = 1
        for d in denoms:
            scale = scale * d // gcd(scale, d)
        self._scale = scale
        self._gram = tuple(tuple(int(x * scale) for x in row) for row in cartan.form)

    @property
    def form(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self.cartan.form

    def __repr__(self) -> str:
        return f"FiniteRootSystem({self.bourbaki_type}, {len(self.roots)} roots)"

    def _inner_int(self, u: Sequence[int], v: Sequence[int]) -> int:
        G = self._gram
        total = 0
        for i, ui in enumerate(u):
            if ui:
                row = G[i]
                total += ui * sum(row[j] * vj for j, vj in enumerate(v) if vj)
        return total

    def inner(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        return Fraction(self._inner_int(u, v), self._scale)

    def norm2(self, v: Sequence[int]) -> Fraction:
        return self.inner(v, v)

    def pairing(self, lam: Sequence[int], mu: Sequence[int]) -> Scalar:
        """<lam, mu^vee> = 2(lam, mu)/(mu, mu)"""
        denom = self._inner_int(mu, mu)
        if denom == 0:
            raise IsotropicCoroot(f"Isotropic coroot {tuple(mu)}", witness=tuple(mu))
        return as_scalar(Fraction(2 * self._inner_int(lam, mu), denom))

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._root_set

    def is_long(self, v: Sequence[int]) -> bool:
        top = max(self.cartan.lengths[i] for i in support(v))
        return self.norm2(v) == 2 * top

    @property
    def simply_laced(self) -> bool:
        lengths = self.cartan.lengths
        return all(len({lengths[i] for i in comp}) == 1 for comp in self.cartan.components())

    def simple_root(self, i: int) -> RootVector:
        return unit(self.rank, i)

    def reflect(self, v: Sequence[int], root: Sequence[int]) -> RootVector:
        c = self.pairing(v, root)
        return vsub(v, vscale(int(c), root))

    def simple_reflect(self, v: Sequence[int], i: int) -> RootVector:
        A = self.cartan.entries
        c = sum(v[j] * A[j][i] for j in range(self.rank))
        return tuple(x - c if j == i else x for j, x in enumerate(v))

    @property
    def highest_root(self) -> RootVector:
        return max(self.positive_roots, key=lambda v: (height(v), v))

    @property
    def rho2(self) -> RootVector:
        """2 rho as a sum of positive roots"""
        total = (0,) * self.rank
        for r in self.positive_roots:
            total = vadd(total, r)
        return total

    def root_string(self, mu: Sequence[int], lam: Sequence[int]) -> Tuple[int, int]:
        return root_string(self, mu, lam)

    def decompose_orthogonal(self, beta: Sequence[int], beta_prime: Sequence[int]) -> List[RootVector]:
        """Positive orthogonal roots gamma_1..gamma_m with beta + gamma_1 + ... a root at every step"""
        if not self.simply_laced:
            raise NotSimplyLaced(f"{self.bourbaki_type} is not simply laced")
        beta, beta_prime = tuple(beta), tuple(beta_prime)
        diff = vsub(beta_prime, beta)
        if any(c < 0 for c in diff):
            raise NotDominated(f"{beta_prime} - {beta} has a negative coefficient", witness=diff)
        if not any(diff):
            return []
        parents: Dict[RootVector, Tuple[RootVector, RootVector]] = {beta: None}
        queue = deque([beta])
        while queue:
            x = queue.popleft()
            if x == beta_prime:
                break
            for gamma in self.positive_roots:
                y = vadd(x, gamma)
                if y in parents or not self.is_root(y):
                    continue
                if any(c < 0 for c in vsub(beta_prime, y)):
                    continue
                parents[y] = (x, gamma)
                queue.append(y)
        if beta_prime not in parents:
            raise NotDominated(f"{beta_prime} is not reachable from {beta} by root steps", witness=diff)
        steps = []
        node = beta_prime
        while parents[node] is not None:
            node, gamma = parents[node]
            steps.append(gamma)
        steps.reverse()
        for i, g in enumerate(steps):
            for h in steps[i + 1:]:
                if self._inner_int(g, h) != 0:
                    raise NoDecomposition(f"Minimal decomposition of {diff} is not orthogonal", witness=steps)
        return steps


def generate_roots(cartan: GeneralizedCartanMatrix, label: Optional[str] = None) -> FiniteRootSystem:
    """Close the simple roots under simple reflections"""
    verdict = classify_gcm(cartan)
    if not verdict.is_finite:
        raise NotFiniteType(f"Cartan matrix classifies as {verdict.verdict}")
    roots = _reflection_closure(cartan)
    name = label or verdict.label
    if name and "+" not in name:
        letter, n = parse_label(name)
        expected = expected_root_count(letter, n)
        if len(roots) != expected:
            raise NotFiniteType(f"{name} produced {len(roots)} roots, expected {expected}")
    logger.debug(f"Generated {len(roots)} roots for {name}")
    return FiniteRootSystem(cartan, roots, name)


@lru_cache(maxsize=None)
def finite_system(label: str) -> FiniteRootSystem:
    return generate_roots(cartan_matrix(label), label)


# ============== ORDER AND STRINGS ==============

def root_string(system, mu: Sequence[int], lam: Sequence[int]) -> Tuple[int, int]:
    """(p, q) with mu - p lam, ..., mu + q lam the unbroken lam-string through mu"""
    mu, lam = tuple(mu), tuple(lam)
    if mu == lam or mu == vneg(lam):
        raise SameRootLine(f"{mu} lies on the line of {lam}")
    p = 0
    while system.is_root(vsub(mu, vscale(p + 1, lam))):
        p += 1
    q = 0
    while system.is_root(vadd(mu, vscale(q + 1, lam))):
        q += 1
    return p, q


def dominance_leq(lam: Sequence[int], mu: Sequence[int], pi0: Iterable[int]) -> bool:
    """lam <=_0 mu: mu - lam is a nonnegative combination of the nodes in pi0"""
    allowed = set(pi0)
    for i, c in enumerate(vsub(mu, lam)):
        if c < 0 or (c > 0 and i not in allowed):
            return False
    return True


# ============== DOT EXPORT ==============

def dynkin_graph(cartan: GeneralizedCartanMatrix, offset: int = 1, labels: Optional[Sequence[int]] = None) -> nx.Graph:
    G = nx.Graph()
    for i in range(cartan.rank):
        attrs = {"label": f'"{i + offset}"'}
        if labels is not None:
            attrs["xlabel"] = f'"{labels[i]}"'
        G.add_node(str(i + offset), **attrs)
    lengths = cartan.lengths
    for i in range(cartan.rank):
        for j in range(i + 1, cartan.rank):
            if not cartan.entries[i][j]:
                continue
            mult = cartan.entries[i][j] * cartan.entries[j][i]
            if lengths[i] > lengths[j]:
                arrow = f'"{i + offset}->{j + offset}"'
            elif lengths[i] < lengths[j]:
                arrow = f'"{j + offset}->{i + offset}"'
            else:
                arrow = "none"
            G.add_edge(str(i + offset), str(j + offset), mult=mult, arrow=arrow)
    return G


def to_dot(cartan: GeneralizedCartanMatrix, offset: int = 1, labels: Optional[Sequence[int]] = None, name: str = "dynkin") -> str:
    """DOT text with edge attributes mult and arrow (long -> short)"""
    graph = nx.nx_pydot.to_pydot(dynkin_graph(cartan, offset, labels))
    graph.set_name(name.replace("^", "_").replace("(", "").replace(")", "").replace("+", "_"))
    return graph.to_string()


# ============== EPSILON NOTATION ==============

def epsilon_simple_roots(label: str) -> List[RootVector]:
    """Classical simple roots in the standard epsilon basis"""
    letter, n = parse_label(label)
    if letter not in "ABCD":
        raise UnknownType(f"No epsilon realization for {label}")
    dim = n + 1 if letter == "A" else n
    roots = []
    for i in range(n if letter == "A" else n - 1):
        roots.append(tuple(1 if j == i else -1 if j == i + 1 else 0 for j in range(dim)))
    if letter == "B":
        roots.append(unit(dim, n - 1))
    elif letter == "C":
        roots.append(vscale(2, unit(dim, n - 1)))
    elif letter == "D":
        roots.append(tuple(1 if j in (n - 2, n - 1) else 0 for j in range(dim)))
    return roots


def to_epsilon(label: str, v: Sequence[int]) -> RootVector:
    total = None
    for c, root in zip(v, epsilon_simple_roots(label)):
        term = vscale(c, root)
        total = term if total is None else vadd(total, term)
    return total


def from_epsilon(label: str, e: Sequence[int]) -> RootVector:
    basis = sympy.Matrix([list(r) for r in epsilon_simple_roots(label)]).T
    solution = basis.solve_least_squares(sympy.Matrix(list(e)))
    if basis * solution != sympy.Matrix(list(e)) or any(not x.is_integer for x in solution):
        raise ValueError(f"{tuple(e)} is not in the root lattice of {label}")
    return tuple(int(x) for x in solution)
