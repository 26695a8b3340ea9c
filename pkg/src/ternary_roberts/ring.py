"""Exact sparse polynomials over Q in the variables a[i,j], x1..x3, u1..u3.

Variables are plain tuples whose natural ordering is the global variable
order used everywhere in the package:

    a[i,j]  ->  (0, i + j, i, j)
    x_k     ->  (1, k)
    u_k     ->  (2, k)

so a[0,0] < a[0,1] < a[1,0] < a[0,2] < ... < x1 < x2 < x3 < u1 < u2 < u3.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable,
with strictly positive exponents.  A polynomial maps monomials to
``fractions.Fraction`` coefficients and never stores zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

Rational = Fraction
Var = Tuple[int, ...]
Monomial = Tuple[Tuple[Var, int], ...]

KIND_A, KIND_X, KIND_U = 0, 1, 2

ONE: Monomial = ()
_SENTINEL = ((9,), 0)

Scalar = Union[int, Fraction]


def avar(i: int, j: int) -> Var:
    if i < 0 or j < 0:
        raise ValueError(f"negative index in a[{i},{j}]")
    return (KIND_A, i + j, i, j)


def xvar(k: int) -> Var:
    if k not in (1, 2, 3):
        raise ValueError(f"x index must be 1, 2 or 3, got {k}")
    return (KIND_X, k)


def uvar(k: int) -> Var:
    if k not in (1, 2, 3):
        raise ValueError(f"u index must be 1, 2 or 3, got {k}")
    return (KIND_U, k)


def var_name(v: Var) -> str:
    if v[0] == KIND_A:
        return f"a[{v[2]},{v[3]}]"
    return ("x", "u")[v[0] - 1] + str(v[1])


def monomial(*pairs: Tuple[Var, int]) -> Monomial:
    """Build a normalized monomial from (variable, exponent) pairs."""
    exps: Dict[Var, int] = {}
    for v, e in pairs:
        if e < 0:
            raise ValueError("negative exponent")
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in exps.items() if e))


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_degrees(m: Monomial) -> Tuple[int, int, int]:
    """Degrees of a monomial in the A, X and U variables."""
    deg = [0, 0, 0]
    for v, e in m:
        deg[v[0]] += e
    return deg[0], deg[1], deg[2]


def mono_split(m: Monomial) -> Tuple[Monomial, Monomial]:
    """Split into (A-part, X/U-part)."""
    return (tuple(p for p in m if p[0][0] == KIND_A),
            tuple(p for p in m if p[0][0] != KIND_A))


def mono_sort_key(m: Monomial):
    # lexicographic on exponent vectors, larger exponent on an earlier variable first
    return tuple((v, -e) for v, e in m) + (_SENTINEL,)


@dataclass(frozen=True)
class RingConfig:
    """K[A, X, U] for ternary forms of degree ``n``."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"form degree must be a positive integer, got {self.n!r}")

    @property
    def a_variables(self) -> list:
        return [avar(i, s - i) for s in range(self.n + 1) for i in range(s + 1)]

    def contains(self, v: Var) -> bool:
        return v[0] != KIND_A or v[1] <= self.n

    def check(self, p: "Polynomial") -> None:
        for m in p.terms:
            for v, _ in m:
                if not self.contains(v):
                    raise ValueError(f"{var_name(v)} is out of range for n={self.n}")


class NotHomogeneous(ValueError):
    pass


class Polynomial:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = Fraction(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls({ONE: c})

    @classmethod
    def var(cls, v: Var) -> "Polynomial":
        return cls._raw({((v, 1),): Fraction(1)})

    @classmethod
    def a(cls, i: int, j: int) -> "Polynomial":
        return cls.var(avar(i, j))

    @classmethod
    def x(cls, k: int) -> "Polynomial":
        return cls.var(xvar(k))

    @classmethod
    def u(cls, k: int) -> "Polynomial":
        return cls.var(uvar(k))

    @classmethod
    def from_monomial(cls, m: Monomial, c: Scalar = 1) -> "Polynomial":
        return cls({m: c})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda t: mono_sort_key(t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    # arithmetic

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "Polynomial":
        if not c:
            return Polynomial()
        c = Fraction(c)
        return Polynomial._raw({m: k * c for m, k in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int) -> "Polynomial":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        from .render import render_text
        return f"Polynomial({render_text(self)!r})"

    def __str__(self) -> str:
        from .render import render_text
        return render_text(self)


def poly_arith(op: str, *operands):
    """Dispatch ``add``, ``sub``, ``mul``, ``pow`` or ``scale`` on operands."""
    if op == "add":
        out = Polynomial()
        for p in operands:
            out = out + p
        return out
    if op == "sub":
        p, q = operands
        return p - q
    if op == "mul":
        out = Polynomial.constant(1)
        for p in operands:
            out = out * p
        return out
    if op == "pow":
        p, e = operands
        return p ** e
    if op == "scale":
        p, c = operands
        return p.scale(c)
    raise ValueError(f"unknown operation {op!r}")


def extract_xu_coefficient(p: Polynomial, xu: Monomial) -> Polynomial:
    """Coefficient of the X/U monomial ``xu`` in ``p``, a polynomial in A."""
    if any(v[0] == KIND_A for v, _ in xu):
        raise ValueError("extraction monomial must contain only x/u variables")
    out: Dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        a_part, rest = mono_split(m)
        if rest == xu:
            out[a_part] = c
    return Polynomial._raw(out)


def xu_decomposition(p: Polynomial) -> Dict[Monomial, Polynomial]:
    """All X/U monomials of ``p`` with their A-coefficients."""
    parts: Dict[Monomial, Dict[Monomial, Fraction]] = {}
    for m, c in p.terms.items():
        a_part, rest = mono_split(m)
        parts.setdefault(rest, {})[a_part] = c
    return {k: Polynomial._raw(v) for k, v in parts.items()}


def degree_profile(p: Polynomial) -> Tuple[int, int, int]:
    """(degree in A, order in X, class in U) of a tri-homogeneous polynomial.

    Raises NotHomogeneous naming the first grading (A, X, then U) on which
    two terms disagree.  The zero polynomial has profile (0, 0, 0).
    """
    profile: Optional[Tuple[int, int, int]] = None
    for m in p.terms:
        degs = mono_degrees(m)
        if profile is None:
            profile = degs
            continue
        for name, d0, d1 in zip("AXU", profile, degs):
            if d0 != d1:
                raise NotHomogeneous(f"not homogeneous in {name} (degrees {d0} and {d1})")
    return profile or (0, 0, 0)


def a_degree(p: Polynomial) -> int:
    return degree_profile(p)[0]


def is_pure_a(p: Polynomial) -> bool:
    return all(v[0] == KIND_A for m in p.terms for v, _ in m)


def a_monomials(n: int, degree: int) -> Iterable[Monomial]:
    """All A-monomials of the given total degree for forms of degree n."""
    vars_ = RingConfig(n).a_variables

    def rec(start: int, left: int, acc: list):
        if left == 0:
            yield tuple(acc)
            return
        for idx in range(start, len(vars_)):
            v = vars_[idx]
            for e in range(left, 0, -1):
                yield from rec(idx + 1, left - e, acc + [(v, e)])

    yield from rec(0, degree, [])


def derivative(p: Polynomial, v: Var) -> Polynomial:
    """Partial derivative with respect to the variable ``v``."""
    out: Dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        d = dict(m)
        e = d.get(v)
        if not e:
            continue
        if e == 1:
            del d[v]
        else:
            d[v] = e - 1
        key = tuple(sorted(d.items()))
        out[key] = out.get(key, 0) + c * e
    return Polynomial(out)
