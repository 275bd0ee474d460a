# oracle.py
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import sympy

from affine import GradingDatum, build_affine, build_grading
from errors import DictionaryMismatch, NotApplicable
from rootsys import RootVector, from_epsilon

logger = logging.getLogger(__name__)

# Iteration guard for ad(x)^n; nilpotent x on N x N matrices dies well before 2N
_MAX_POWER_FACTOR = 2


# ============== MATRIX HELPERS ==============

def _unit_matrix(size: int, a: int, b: int) -> sympy.Matrix:
    m = sympy.zeros(size, size)
    m[a, b] = 1
    return m


def _bracket(x: sympy.Matrix, y: sympy.Matrix) -> sympy.Matrix:
    return x * y - y * x


def _eps(dim: int, plus: Sequence[int] = (), minus: Sequence[int] = ()) -> Tuple[int, ...]:
    vec = [0] * dim
    for i in plus:
        vec[i] += 1
    for i in minus:
        vec[i] -= 1
    return tuple(vec)


# ============== MATRIX PAIRS ==============

@dataclass
class MatrixPair:
    """Matrix model of a classical symmetric pair, root vectors keyed by combinatorial weights"""

    family: str
    label: str
    grading: GradingDatum = field(repr=False)
    size: int
    cartan: List[sympy.Matrix] = field(repr=False)
    basis0: Dict[RootVector, sympy.Matrix] = field(repr=False)
    basis1: Dict[RootVector, sympy.Matrix] = field(repr=False)
    involution: sympy.Matrix = field(repr=False)

    @property
    def borel(self) -> List[sympy.Matrix]:
        """Cartan plus positive g_0 root vectors"""
        return list(self.cartan) + [self.basis0[w] for w in self.grading.positive0()]

    def x_of(self, S: Iterable[Sequence[int]]) -> sympy.Matrix:
        x = sympy.zeros(self.size, self.size)
        for w in S:
            w = self.grading.reduce(w)
            if w not in self.basis1:
                raise DictionaryMismatch(f"{self.label}: no g_1 root vector for {w}", witness=w)
            x += self.basis1[w]
        return x

    def parity(self, x: sympy.Matrix) -> int:
        """0 when x commutes with the involution, 1 when it anticommutes"""
        conj = self.involution * x * self.involution
        if conj == x:
            return 0
        if conj == -x:
            return 1
        raise DictionaryMismatch(f"{self.label}: matrix is not homogeneous for the involution")

    def check_closure(self) -> bool:
        """[g_i, g_j] lands in g_(i+j mod 2) on every pair of basis vectors"""
        graded = [(0, x) for x in self.cartan] + [(0, x) for x in self.basis0.values()] + [(1, x) for x in self.basis1.values()]
        for i, x in graded:
            for j, y in graded:
                z = _bracket(x, y)
                if z.is_zero_matrix:
                    continue
                if self.parity(z) != (i + j) % 2:
                    return False
        return True


def _realize(family: str, label: str, s: Sequence[int], size: int,
             roots: List[Tuple[Tuple[int, ...], sympy.Matrix]],
             cartan: List[sympy.Matrix], odd: Iterable[int],
             level_bound: Optional[int] = None) -> MatrixPair:
    """Attach every root vector to its combinatorial weight, checking parity against the grading"""
    grading = build_grading(build_affine(label, 1), s, level_bound=level_bound)
    odd = set(odd)
    involution = sympy.diag(*[-1 if i in odd else 1 for i in range(size)])

    lookup: Dict[RootVector, Tuple[int, RootVector]] = {}
    for cls in (0, 1):
        for w in grading.weights(cls):
            lookup[grading.finite_coords(w)] = (cls, w)

    basis = {0: {}, 1: {}}
    for eps, matrix in roots:
        coords = from_epsilon(label, eps)
        if coords not in lookup:
            raise DictionaryMismatch(f"{label}: root {eps} has no combinatorial weight", witness=eps)
        cls, w = lookup[coords]
        conj = involution * matrix * involution
        parity = 0 if conj == matrix else 1
        if parity != cls:
            raise DictionaryMismatch(f"{label}: root {eps} has parity {parity} but weight class {cls}", witness=w)
        basis[cls][w] = matrix
    if len(basis[0]) + len(basis[1]) != len(lookup):
        raise DictionaryMismatch(f"{label}: {len(roots)} root vectors for {len(lookup)} weights")
    logger.debug(f"Realized {family} as {grading.label}: dim g_1 = {len(basis[1])}")
    return MatrixPair(family=family, label=label, grading=grading, size=size, cartan=cartan,
                      basis0=basis[0], basis1=basis[1], involution=involution)


@lru_cache(maxsize=None)
def sl_pair(p: int, q: int) -> MatrixPair:
    """(sl(p+q), s(gl_p + gl_q)) as the Hermitian pair (A_{p+q-1}, alpha_p)"""
    if p < 1 or q < 1:
        raise NotApplicable(f"sl({p}+{q}) needs p, q >= 1")
    n = p + q
    roots = [
        (_eps(n, plus=[a], minus=[b]), _unit_matrix(n, a, b))
        for a in range(n) for b in range(n) if a != b
    ]
    cartan = [_unit_matrix(n, k, k) - _unit_matrix(n, k + 1, k + 1) for k in range(n - 1)]
    s = [0] * n
    s[0] = s[p] = 1
    return _realize(f"sl({p}+{q})", f"A{n - 1}", s, n, roots, cartan, odd=range(p, n))


@lru_cache(maxsize=None)
def sp_pair(n: int) -> MatrixPair:
    """(sp(2n), gl_n) as the Hermitian pair (C_n, alpha_n)"""
    if n < 2:
        raise NotApplicable(f"sp({2 * n}) needs n >= 2")
    size = 2 * n
    E = lambda a, b: _unit_matrix(size, a, b)
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                roots.append((_eps(n, plus=[i], minus=[j]), E(i, j) - E(n + j, n + i)))
        for j in range(i + 1, n):
            roots.append((_eps(n, plus=[i, j]), E(i, n + j) + E(j, n + i)))
            roots.append((_eps(n, minus=[i, j]), E(n + j, i) + E(n + i, j)))
        roots.append((_eps(n, plus=[i, i]), E(i, n + i)))
        roots.append((_eps(n, minus=[i, i]), E(n + i, i)))
    cartan = [E(i, i) - E(n + i, n + i) for i in range(n)]
    s = [0] * (n + 1)
    s[0] = s[n] = 1
    return _realize(f"sp({size})", f"C{n}", s, size, roots, cartan, odd=range(n, size))


def _so_roots(size: int) -> Tuple[List[Tuple[Tuple[int, ...], sympy.Matrix]], List[sympy.Matrix], int]:
    """Root vectors E_ab - E_(b' a') of so(N) for the antidiagonal form, i' = N - 1 - i"""
    n = size // 2
    E = lambda a, b: _unit_matrix(size, a, b)

    def weight(a: int) -> Tuple[int, ...]:
        if a < n:
            return _eps(n, plus=[a])
        if a >= size - n:
            return _eps(n, minus=[size - 1 - a])
        return _eps(n)

    seen = set()
    roots = []
    for a in range(size):
        for b in range(size):
            if a == b or a + b == size - 1:
                continue
            eps = tuple(x - y for x, y in zip(weight(a), weight(b)))
            if not any(eps) or eps in seen:
                continue
            seen.add(eps)
            roots.append((eps, E(a, b) - E(size - 1 - b, size - 1 - a)))
    cartan = [E(i, i) - E(size - 1 - i, size - 1 - i) for i in range(n)]
    return roots, cartan, n


@lru_cache(maxsize=None)
def so_pair(size: int) -> MatrixPair:
    """(so(N), so_2 + so_(N-2)) as the Hermitian pair (B_n or D_n, alpha_1)"""
    if size < 7:
        raise NotApplicable(f"so({size}) is not realized below N = 7")
    roots, cartan, n = _so_roots(size)
    label = f"B{n}" if size % 2 else f"D{n}"
    s = [0] * (n + 1)
    s[0] = s[1] = 1
    return _realize(f"so({size})", label, s, size, roots, cartan, odd=(0, size - 1))


@lru_cache(maxsize=None)
def so8_special_pair() -> MatrixPair:
    """(so_8, so_4 + so_4): the D4^(1) grading with s_2 = 1"""
    roots, cartan, _ = _so_roots(8)
    return _realize("so(4+4)", "D4", (0, 0, 1, 0, 0), 8, roots, cartan, odd=(0, 1, 6, 7))


def standard_pairs() -> List[MatrixPair]:
    """Every realization the concordance checks sweep"""
    return [sl_pair(2, 2), sl_pair(3, 3), sp_pair(3), so_pair(8), so8_special_pair()]


# ============== HEIGHTS AND TANGENT SPACES ==============

def _ad_power(x: sympy.Matrix, vectors: List[sympy.Matrix], size: int) -> int:
    current = [v for v in vectors if not v.is_zero_matrix]
    if not current:
        return 0
    n = 0
    while n <= _MAX_POWER_FACTOR * size:
        current = [_bracket(x, v) for v in current]
        current = [v for v in current if not v.is_zero_matrix]
        if not current:
            return n
        n += 1
    raise DictionaryMismatch(f"ad(x) is not nilpotent after {n} steps")


def ad_power_height(pair: MatrixPair, S: Iterable[Sequence[int]]) -> Tuple[int, int, int]:
    """(height, height_0, height_1) of x_S by iterating ad(x_S) on g_0 and g_1"""
    x = pair.x_of(S)
    g0 = list(pair.cartan) + list(pair.basis0.values())
    h0 = _ad_power(x, g0, pair.size)
    h1 = _ad_power(x, list(pair.basis1.values()), pair.size)
    return max(h0, h1), h0, h1


def bracket_dim(pair: MatrixPair, S: Iterable[Sequence[int]]) -> int:
    """Rank of b -> [b, x_S] on the Borel of g_0"""
    x = pair.x_of(S)
    if x.is_zero_matrix:
        return 0
    rows = [list(_bracket(b, x)) for b in pair.borel]
    return sympy.Matrix(rows).rank()
