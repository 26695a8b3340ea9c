"""The nine sl3 generator derivations on K[A, X, U].

Generators and the matrix units they represent::

    D1 = E12   D2 = E23   D3 = E13          (raising)
    Dh1 = E21  Dh2 = E32  Dh3 = E31         (lowering, "hat D")
    E1 = E11 - E22   E2 = E22 - E33   E3 = E11 - E33

Each generator maps every variable to a scalar multiple of a single variable
(or to zero), and is extended to the ring by linearity and the Leibniz rule.
On x the action is E_ij -> -x_j d/dx_i; on u it is the contragredient
E_ij -> u_i d/du_j, so x1*u1 + x2*u2 + x3*u3 is killed by everything.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .ring import (Monomial, Polynomial, RingConfig,
                   Var, avar, degree_profile, uvar, xvar, NotHomogeneous)

RAISING = ("D1", "D2", "D3")
LOWERING = ("Dh1", "Dh2", "Dh3")
DIAGONAL = ("E1", "E2", "E3")
NON_DIAGONAL = RAISING + LOWERING
GENERATORS = RAISING + LOWERING + DIAGONAL

# generator -> 3x3 matrix as {(row, col): entry}, 1-based
MATRIX_UNITS: Dict[str, Dict[Tuple[int, int], int]] = {
    "D1": {(1, 2): 1}, "D2": {(2, 3): 1}, "D3": {(1, 3): 1},
    "Dh1": {(2, 1): 1}, "Dh2": {(3, 2): 1}, "Dh3": {(3, 1): 1},
    "E1": {(1, 1): 1, (2, 2): -1},
    "E2": {(2, 2): 1, (3, 3): -1},
    "E3": {(1, 1): 1, (3, 3): -1},
}

# x_k -> (coefficient, x_m); u images are fixed by contragredience
_X_IMAGES = {
    "D1": {1: (-1, 2)}, "D2": {2: (-1, 3)}, "D3": {1: (-1, 3)},
    "Dh1": {2: (-1, 1)}, "Dh2": {3: (-1, 2)}, "Dh3": {3: (-1, 1)},
}
_U_IMAGES = {
    "D1": {2: (1, 1)}, "D2": {3: (1, 2)}, "D3": {3: (1, 1)},
    "Dh1": {1: (1, 2)}, "Dh2": {2: (1, 3)}, "Dh3": {1: (1, 3)},
}
_X_EIGEN = {"E1": (-1, 1, 0), "E2": (0, -1, 1), "E3": (-1, 0, 1)}


class NotIsobaric(ValueError):
    pass


def _a_image(g: str, n: int, i: int, j: int) -> Optional[Tuple[int, Var]]:
    s = n - (i + j)
    if g == "D1":
        return (i, avar(i - 1, j)) if i else None
    if g == "D2":
        return (j, avar(i + 1, j - 1)) if j else None
    if g == "D3":
        return (j, avar(i, j - 1)) if j else None
    if g == "Dh1":
        return (s, avar(i + 1, j)) if s else None
    if g == "Dh2":
        return (i, avar(i - 1, j + 1)) if i else None
    if g == "Dh3":
        return (s, avar(i, j + 1)) if s else None
    raise ValueError(g)


def _a_eigen(g: str, n: int, i: int, j: int) -> int:
    if g == "E1":
        return n - (2 * i + j)
    if g == "E2":
        return i - j
    return n - (i + 2 * j)


@dataclass(frozen=True)
class ActionTable:
    """Images of every variable of K[A, X, U] under the nine generators."""

    ring: RingConfig
    images: Dict[str, Dict[Var, Tuple[Fraction, Var]]] = field(init=False, repr=False, compare=False)
    eigen: Dict[str, Dict[Var, int]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.ring.n
        images: Dict[str, Dict[Var, Tuple[Fraction, Var]]] = {}
        for g in NON_DIAGONAL:
            table = {}
            for v in self.ring.a_variables:
                img = _a_image(g, n, v[2], v[3])
                if img:
                    table[v] = (Fraction(img[0]), img[1])
            for k, (c, m) in _X_IMAGES[g].items():
                table[xvar(k)] = (Fraction(c), xvar(m))
            for k, (c, m) in _U_IMAGES[g].items():
                table[uvar(k)] = (Fraction(c), uvar(m))
            images[g] = table
        eigen: Dict[str, Dict[Var, int]] = {}
        for g in DIAGONAL:
            table = {v: _a_eigen(g, n, v[2], v[3]) for v in self.ring.a_variables}
            for k in (1, 2, 3):
                table[xvar(k)] = _X_EIGEN[g][k - 1]
                table[uvar(k)] = -_X_EIGEN[g][k - 1]
            eigen[g] = table
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "eigen", eigen)

    def on_variable(self, g: str, v: Var) -> Polynomial:
        """Image of a single variable as a polynomial."""
        _check_generator(g)
        if g in DIAGONAL:
            return Polynomial.var(v).scale(self._eigenvalue(g, v))
        img = self.images[g].get(v)
        if img is None:
            return Polynomial()
        return Polynomial.var(img[1]).scale(img[0])

    def _eigenvalue(self, g: str, v: Var) -> int:
        val = self.eigen[g].get(v)
        if val is None:
            raise ValueError(f"variable {v} is outside the ring with n={self.ring.n}")
        return val

    def monomial_eigenvalue(self, g: str, m: Monomial) -> int:
        return sum(e * self._eigenvalue(g, v) for v, e in m)

    def apply(self, g: str, p: Polynomial) -> Polynomial:
        _check_generator(g)
        if g in DIAGONAL:
            out = {}
            for m, c in p.items():
                lam = self.monomial_eigenvalue(g, m)
                if lam:
                    out[m] = c * lam
            return Polynomial._raw(out)
        table = self.images[g]
        out: Dict[Monomial, Fraction] = {}
        for m, c in p.items():
            for idx, (v, e) in enumerate(m):
                img = table.get(v)
                if img is None:
                    continue
                coef, w = img
                new = _swap_one(m, idx, w)
                s = out.get(new, 0) + c * e * coef
                if s:
                    out[new] = s
                else:
                    out.pop(new, None)
        return Polynomial._raw(out)


def _swap_one(m: Monomial, idx: int, w: Var) -> Monomial:
    """Lower the exponent at position idx by one and raise w by one."""
    v, e = m[idx]
    d = dict(m)
    if e == 1:
        del d[v]
    else:
        d[v] = e - 1
    d[w] = d.get(w, 0) + 1
    return tuple(sorted(d.items()))


def _check_generator(g: str) -> None:
    if g not in GENERATORS:
        raise ValueError(f"unknown generator {g!r}; expected one of {', '.join(GENERATORS)}")


@lru_cache(maxsize=None)
def action_table(ring: RingConfig) -> ActionTable:
    return ActionTable(ring)


def apply_generator(g: str, p: Polynomial, ring: RingConfig) -> Polynomial:
    return action_table(ring).apply(g, p)


Word = Sequence[Tuple[str, int]]

_FACTOR = re.compile(r"^(D1|D2|D3|Dh1|Dh2|Dh3|E1|E2|E3)(?:\^(\d+))?$")


def parse_word(text: str) -> List[Tuple[str, int]]:
    """Parse ``"Dh1^2 Dh3"`` into ``[("Dh1", 2), ("Dh3", 1)]``."""
    word = []
    for factor in text.split():
        m = _FACTOR.match(factor)
        if not m:
            raise ValueError(f"bad word factor {factor!r}")
        word.append((m.group(1), int(m.group(2) or 1)))
    return word


def format_word(word: Word) -> str:
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in word if e)


def apply_word(word, p: Polynomial, ring: RingConfig) -> Polynomial:
    """Apply a word of generator powers; the rightmost factor acts first."""
    if isinstance(word, str):
        word = parse_word(word)
    table = action_table(ring)
    for g, e in reversed(list(word)):
        if e < 0:
            raise ValueError("word exponents must be nonnegative")
        for _ in range(e):
            if p.is_zero():
                return p
            p = table.apply(g, p)
    return p


def weight_of(p: Polynomial, ring: RingConfig) -> Tuple[int, int]:
    """[E1, E2] eigenvalues of an isobaric polynomial."""
    if p.is_zero():
        raise NotIsobaric("the zero polynomial has no weight")
    table = action_table(ring)
    weights = {(table.monomial_eigenvalue("E1", m), table.monomial_eigenvalue("E2", m))
               for m in p.terms}
    if len(weights) > 1:
        raise NotIsobaric(f"not isobaric: monomials carry weights {sorted(weights)}")
    return weights.pop()


def is_isobaric(p: Polynomial, ring: RingConfig) -> bool:
    try:
        weight_of(p, ring)
    except NotIsobaric:
        return False
    return True


def nilpotency_order(g: str, p: Polynomial, ring: RingConfig, cap: int) -> int:
    """Largest s with g^s(p) != 0."""
    table = action_table(ring)
    s = 0
    q = table.apply(g, p)
    while q:
        s += 1
        if s > cap:
            raise RuntimeError(f"{g} did not annihilate the polynomial within {cap} steps")
        q = table.apply(g, q)
    return s


def order_of(p: Polynomial, ring: RingConfig) -> Tuple[int, int]:
    """[ord1, ord2]: nilpotency orders of p under Dh1 and Dh2."""
    if p.is_zero():
        raise ValueError("order of the zero polynomial is undefined")
    cap = _order_cap(p, ring)
    return nilpotency_order("Dh1", p, ring, cap), nilpotency_order("Dh2", p, ring, cap)


def _order_cap(p: Polynomial, ring: RingConfig) -> int:
    deg = [0, 0, 0]
    for m in p.terms:
        for k, d in enumerate(_degrees(m)):
            deg[k] = max(deg[k], d)
    return (deg[0] + 1) * ring.n + deg[1] + deg[2]


def _degrees(m: Monomial):
    d = [0, 0, 0]
    for v, e in m:
        d[v[0]] += e
    return d


def is_highest_vector(p: Polynomial, ring: RingConfig) -> bool:
    """Isobaric, A-homogeneous and killed by D1, D2 and D3."""
    if p.is_zero() or not is_isobaric(p, ring):
        return False
    try:
        degree_profile(p)
    except NotHomogeneous:
        return False
    table = action_table(ring)
    return all(table.apply(g, p).is_zero() for g in RAISING)


def structure_constants(g: str, h: str) -> Dict[str, int]:
    """[g, h] as a combination of the generators, from matrix units.

    Off-diagonal entries map to the corresponding raising/lowering
    generator; a traceless diagonal diag(p, q, r) becomes p*E1 + (p+q)*E2.
    """
    a, b = MATRIX_UNITS[g], MATRIX_UNITS[h]
    comm: Dict[Tuple[int, int], int] = {}
    for (i, j), x in a.items():
        for (k, l), y in b.items():
            if j == k:
                comm[(i, l)] = comm.get((i, l), 0) + x * y
            if l == i:
                comm[(k, j)] = comm.get((k, j), 0) - x * y
    by_unit = {tuple(next(iter(m))): name for name, m in MATRIX_UNITS.items() if name in NON_DIAGONAL}
    out: Dict[str, int] = {}
    for (i, j), c in comm.items():
        if c and i != j:
            out[by_unit[(i, j)]] = c
    p_, q_ = comm.get((1, 1), 0), comm.get((2, 2), 0)
    if p_:
        out["E1"] = p_
    if p_ + q_:
        out["E2"] = p_ + q_
    return out
