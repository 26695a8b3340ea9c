"""Reconstruction of concomitants of ternary forms from their lead coefficients.

A covariant of order d is recovered from its coefficient at x1^d, a
contravariant of class d from its coefficient at u3^d, and a mixed
concomitant of class [d1, d2] from its coefficient at x1^d1 u3^d2.  Every
reconstruction is checked against the six non-diagonal sl3 derivations
before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Tuple

from .action import (DIAGONAL, NON_DIAGONAL, NotIsobaric, action_table,
                     is_highest_vector, weight_of)
from .linalg import INCONSISTENT, RationalMatrix, solve
from .render import polynomial_to_json, render_text
from .ring import (Monomial, NotHomogeneous, Polynomial, RingConfig, a_monomials,
                   avar, degree_profile, derivative, extract_xu_coefficient,
                   is_pure_a, monomial, uvar, var_name, xvar)

Index = Tuple[int, int, int, int]


class PreconditionError(ValueError):
    """The seed cannot head a concomitant of the requested kind."""


class SolverError(RuntimeError):
    """The mixed-concomitant system has no unique solution."""

    def __init__(self, message: str, status: str, free: Optional[List[str]] = None):
        super().__init__(message)
        self.status = status
        self.free = free or []


class VerificationError(RuntimeError):
    """A reconstruction was not annihilated by the sl3 derivations."""


@dataclass
class ConcomitantReport:
    kind: str
    polynomial: Polynomial
    degree: int
    order: int
    class_: int
    seed: Polynomial
    verified: Dict[str, bool]
    n: int
    coefficients: Dict[Index, Polynomial] = field(default_factory=dict, repr=False)

    @property
    def ok(self) -> bool:
        return all(self.verified.values())

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "degree": self.degree,
            "order": self.order,
            "class": self.class_,
            "seed": render_text(self.seed),
            "verified": dict(self.verified),
            "polynomial": render_text(self.polynomial),
            "terms": polynomial_to_json(self.polynomial),
        }


def universal_covariant() -> Polynomial:
    """x1*u1 + x2*u2 + x3*u3."""
    return sum((Polynomial.x(k) * Polynomial.u(k) for k in (1, 2, 3)), Polynomial())


def generic_form(ring: RingConfig) -> Polynomial:
    """The ternary form of degree n with coefficients a[i,j] and multinomial weights."""
    n = ring.n
    terms = {}
    for s in range(n + 1):
        for i in range(s + 1):
            j = s - i
            m = monomial((avar(i, j), 1), (xvar(1), n - s), (xvar(2), i), (xvar(3), j))
            terms[m] = factorial(n) // (factorial(i) * factorial(j) * factorial(n - s))
    return Polynomial(terms)


def verify_concomitant(f: Polynomial, ring: RingConfig) -> Dict[str, bool]:
    """Per-generator check that f is killed by D1..Dh3 and has E1, E2 weight 0."""
    table = action_table(ring)
    report = {g: table.apply(g, f).is_zero() for g in NON_DIAGONAL}
    for g in DIAGONAL[:2]:
        report[g] = table.apply(g, f).is_zero()
    return report


def lead_coefficient(f: Polynomial, ring: Optional[RingConfig] = None) -> Polynomial:
    """Coefficient of x1^order * u3^class in a tri-homogeneous f."""
    _, dx, du = degree_profile(f)
    xu = monomial((xvar(1), dx), (uvar(3), du))
    return extract_xu_coefficient(f, xu)


def _checked_seed(seed: Polynomial, ring: RingConfig) -> Tuple[int, int, int]:
    if seed.is_zero():
        raise PreconditionError("seed is zero")
    if not is_pure_a(seed):
        raise PreconditionError("seed must be a polynomial in the a-variables only")
    ring.check(seed)
    try:
        delta = degree_profile(seed)[0]
        d1, d2 = weight_of(seed, ring)
    except (NotHomogeneous, NotIsobaric) as exc:
        raise PreconditionError(str(exc)) from None
    if not is_highest_vector(seed, ring):
        raise PreconditionError("seed is not a highest vector (not killed by D1, D2, D3)")
    return delta, d1, d2


def _finish(kind: str, f: Polynomial, seed: Polynomial, ring: RingConfig,
            coefficients=None) -> ConcomitantReport:
    verified = verify_concomitant(f, ring)
    if not all(verified.values()):
        failed = ", ".join(g for g, ok in verified.items() if not ok)
        raise VerificationError(f"reconstruction is not invariant under {failed}")
    degree, order, klass = degree_profile(f)
    if lead_coefficient(f) != seed:
        raise VerificationError("lead coefficient of the reconstruction differs from the seed")
    if order == 0 and klass == 0:
        kind = "invariant"
    return ConcomitantReport(kind, f, degree, order, klass, seed, verified, ring.n,
                             coefficients or {})


def _x_monomial(d: int, i: int, j: int) -> Monomial:
    return monomial((xvar(1), d - i - j), (xvar(2), i), (xvar(3), j))


def _u_monomial(d: int, k: int, l: int) -> Monomial:
    return monomial((uvar(3), d - k - l), (uvar(1), k), (uvar(2), l))


def _times(p: Polynomial, m: Monomial, c) -> Polynomial:
    return Polynomial._raw({_mul_mono(a, m): k * c for a, k in p.items()}) if c else Polynomial()


def _mul_mono(a: Monomial, b: Monomial) -> Monomial:
    return tuple(sorted(a + b))


def reconstruct_covariant(seed: Polynomial, ring: RingConfig) -> ConcomitantReport:
    """Covariant with lead coefficient ``seed`` (a highest vector of weight [d, 0]).

    f = sum over i + j <= d of Dh1^i Dh3^j(seed) / (i! j!) * x1^(d-i-j) x2^i x3^j
    """
    _, d, lam2 = _checked_seed(seed, ring)
    if lam2 != 0:
        raise PreconditionError(f"covariant seed needs weight [d, 0], got [{d}, {lam2}]")
    table = action_table(ring)
    f = Polynomial()
    column = seed
    for j in range(d + 1):
        if j:
            column = table.apply("Dh3", column)
        cur = column
        for i in range(d - j + 1):
            if i:
                cur = table.apply("Dh1", cur)
            if cur.is_zero():
                break
            f = f + _times(cur, _x_monomial(d, i, j), Fraction(1, factorial(i) * factorial(j)))
    return _finish("covariant", f, seed, ring)


def reconstruct_contravariant(seed: Polynomial, ring: RingConfig) -> ConcomitantReport:
    """Contravariant with lead coefficient ``seed`` (a highest vector of weight [0, d]).

    f = sum over i + j <= d of (-1)^(i+j) Dh2^j Dh3^i(seed) / (i! j!) * u3^(d-i-j) u1^i u2^j
    """
    _, lam1, d = _checked_seed(seed, ring)
    if lam1 != 0:
        raise PreconditionError(f"contravariant seed needs weight [0, d], got [{lam1}, {d}]")
    table = action_table(ring)
    f = Polynomial()
    column = seed
    for i in range(d + 1):
        if i:
            column = table.apply("Dh3", column)
        cur = column
        for j in range(d - i + 1):
            if j:
                cur = table.apply("Dh2", cur)
            if cur.is_zero():
                break
            c = Fraction((-1) ** (i + j), factorial(i) * factorial(j))
            f = f + _times(cur, _u_monomial(d, i, j), c)
    return _finish("contravariant", f, seed, ring)


# Action of the six generators on the coefficients B[i,j,k,l] of a mixed
# concomitant of class [d1, d2]:  g(B[i,j,k,l]) = sum of coef * B[index].
def recurrence(g: str, idx: Index, d1: int, d2: int) -> List[Tuple[int, Index]]:
    i, j, k, l = idx
    r1, r2 = d1 - (i + j), d2 - (k + l)
    if g == "Dh1":
        terms = [(r1, (i + 1, j, k, l)), (-l, (i, j, k + 1, l - 1))]
    elif g == "Dh2":
        terms = [(i, (i - 1, j + 1, k, l)), (-r2, (i, j, k, l + 1))]
    elif g == "Dh3":
        terms = [(r1, (i, j + 1, k, l)), (-r2, (i, j, k + 1, l))]
    elif g == "D1":
        terms = [(i, (i - 1, j, k, l)), (-k, (i, j, k - 1, l + 1))]
    elif g == "D2":
        terms = [(j, (i + 1, j - 1, k, l)), (-l, (i, j, k, l - 1))]
    elif g == "D3":
        terms = [(j, (i, j - 1, k, l)), (-k, (i, j, k - 1, l))]
    else:
        raise ValueError(f"no recurrence for {g}")
    return [(c, t) for c, t in terms if c and _in_range(t, d1, d2)]


def _in_range(idx: Index, d1: int, d2: int) -> bool:
    i, j, k, l = idx
    return min(idx) >= 0 and i + j <= d1 and k + l <= d2


def mixed_indices(d1: int, d2: int) -> List[Index]:
    return [(i, s - i, k, t - k)
            for s in range(d1 + 1) for i in range(s + 1)
            for t in range(d2 + 1) for k in range(t + 1)]


def coefficient_weight(idx: Index, d1: int, d2: int) -> Tuple[int, int]:
    """Weight B[i,j,k,l] must carry for its summand of f to have weight [0, 0]."""
    i, j, k, l = idx
    return (d1 - 2 * i - j - k + l, d2 + i - j - k - 2 * l)


def mixed_multiplier(idx: Index, d1: int, d2: int) -> Fraction:
    i, j, k, l = idx
    return Fraction(factorial(d1) * factorial(d2),
                    factorial(i) * factorial(j) * factorial(k) * factorial(l)
                    * factorial(d1 - i - j) * factorial(d2 - k - l))


def formal_word_image(word: List[Tuple[str, int]], d1: int, d2: int) -> Dict[Index, Fraction]:
    """word(B[0,0,0,0]) as a combination of the B[i,j,k,l], via the recurrences."""
    combo: Dict[Index, Fraction] = {(0, 0, 0, 0): Fraction(1)}
    for g, e in reversed(word):
        for _ in range(e):
            nxt: Dict[Index, Fraction] = {}
            for idx, c in combo.items():
                for coef, t in recurrence(g, idx, d1, d2):
                    nxt[t] = nxt.get(t, 0) + c * coef
            combo = {t: c for t, c in nxt.items() if c}
    return combo


def _mixed_coefficients(seed: Polynomial, ring: RingConfig, delta: int,
                        d1: int, d2: int) -> Dict[Index, Polynomial]:
    table = action_table(ring)
    by_weight: Dict[Tuple[int, int], List[Monomial]] = {}
    for m in a_monomials(ring.n, delta):
        w = (table.monomial_eigenvalue("E1", m), table.monomial_eigenvalue("E2", m))
        by_weight.setdefault(w, []).append(m)

    indices = mixed_indices(d1, d2)
    columns: Dict[Tuple[Index, Monomial], int] = {}
    support: Dict[Index, List[Monomial]] = {}
    for idx in indices:
        support[idx] = by_weight.get(coefficient_weight(idx, d1, d2), [])
        for m in support[idx]:
            columns[(idx, m)] = len(columns)

    # image of each unknown basis monomial under each generator, cached per monomial
    images: Dict[Tuple[str, Monomial], Polynomial] = {}

    def image(g: str, m: Monomial) -> Polynomial:
        key = (g, m)
        if key not in images:
            images[key] = table.apply(g, Polynomial._raw({m: Fraction(1)}))
        return images[key]

    rows: List[Dict[int, Fraction]] = []
    rhs: List[Fraction] = []
    for m in support[(0, 0, 0, 0)]:
        rows.append({columns[((0, 0, 0, 0), m)]: Fraction(1)})
        rhs.append(seed.coefficient(m))
    for g in NON_DIAGONAL:
        for idx in indices:
            eqs: Dict[Monomial, Dict[int, Fraction]] = {}
            for m in support[idx]:
                col = columns[(idx, m)]
                for mm, c in image(g, m).items():
                    row = eqs.setdefault(mm, {})
                    row[col] = row.get(col, 0) + c
            for coef, t in recurrence(g, idx, d1, d2):
                for m in support[t]:
                    col = columns[(t, m)]
                    row = eqs.setdefault(m, {})
                    row[col] = row.get(col, 0) - coef
            for mm in sorted(eqs):
                row = {c: v for c, v in eqs[mm].items() if v}
                if row:
                    rows.append(row)
                    rhs.append(Fraction(0))

    entries = {(r, c): v for r, row in enumerate(rows) for c, v in row.items()}
    matrix = RationalMatrix(len(rows), len(columns), entries)
    report = solve(matrix, rhs)
    if report.status != "unique":
        names = {col: key for key, col in columns.items()}
        free = [f"B{names[c][0]}@{_render_mono(names[c][1])}" for c in report.free_columns]
        if report.status == INCONSISTENT:
            raise SolverError("constraint system is inconsistent; seed does not head a "
                              "mixed concomitant of this class", report.status)
        raise SolverError(f"constraint system is underdetermined ({len(free)} free columns: "
                          f"{', '.join(free[:8])}{' ...' if len(free) > 8 else ''})",
                          report.status, free)
    x = report.solution
    return {idx: Polynomial({m: x[columns[(idx, m)]] for m in support[idx]}) for idx in indices}


def _render_mono(m: Monomial) -> str:
    return "*".join(var_name(v) if e == 1 else f"{var_name(v)}^{e}" for v, e in m) or "1"


def reconstruct_mixed(seed: Polynomial, ring: RingConfig) -> ConcomitantReport:
    """Mixed concomitant of class [d1, d2] with lead coefficient ``seed``.

    The coefficients B[i,j,k,l] (i+j <= d1, k+l <= d2) are unknown
    A-polynomials of the right degree and weight.  Pinning B[0,0,0,0] to
    the seed and imposing the action of all six non-diagonal generators on
    them gives one linear system, which must have a unique solution.
    """
    delta, d1, d2 = _checked_seed(seed, ring)
    if d2 == 0:
        return reconstruct_covariant(seed, ring)
    if d1 == 0:
        return reconstruct_contravariant(seed, ring)
    coeffs = _mixed_coefficients(seed, ring, delta, d1, d2)
    f = Polynomial()
    for idx, b in coeffs.items():
        if b.is_zero():
            continue
        i, j, k, l = idx
        xu = _mul_mono(_x_monomial(d1, i, j), _u_monomial(d2, k, l))
        f = f + _times(b, xu, mixed_multiplier(idx, d1, d2))
    return _finish("mixed", f, seed, ring, coeffs)


KINDS = ("auto", "covariant", "contravariant", "mixed")


def reconstruct(seed: Polynomial, ring: RingConfig, kind: str = "auto") -> ConcomitantReport:
    """Dispatch on ``kind``; ``auto`` picks by the seed weight."""
    if kind == "covariant":
        return reconstruct_covariant(seed, ring)
    if kind == "contravariant":
        return reconstruct_contravariant(seed, ring)
    if kind in ("mixed", "auto"):
        return reconstruct_mixed(seed, ring)
    raise ValueError(f"unknown kind {kind!r}")


def _det3(m) -> Polynomial:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def hessian_covariant(ring: RingConfig) -> Polynomial:
    """Determinant of the matrix of second partials of the generic form."""
    if ring.n < 2:
        raise PreconditionError("the Hessian needs n >= 2")
    u = generic_form(ring)
    xs = [xvar(k) for k in (1, 2, 3)]
    first = [derivative(u, v) for v in xs]
    hess = [[derivative(first[r], xs[c]) for c in range(3)] for r in range(3)]
    return _det3(hess)


def conic_matrix() -> List[List[Polynomial]]:
    a = Polynomial.a
    return [[a(0, 0), a(1, 0), a(0, 1)],
            [a(1, 0), a(2, 0), a(1, 1)],
            [a(0, 1), a(1, 1), a(0, 2)]]


def dual_conic_oracle(ring: Optional[RingConfig] = None) -> Polynomial:
    """u^T adj(M) u for the symmetric coefficient matrix M of the conic."""
    if ring is not None and ring.n != 2:
        raise PreconditionError("the dual conic is defined for n = 2")
    m = conic_matrix()
    us = [Polynomial.u(k) for k in (1, 2, 3)]
    f = Polynomial()
    for r in range(3):
        for c in range(3):
            rows = [x for x in range(3) if x != c]
            cols = [y for y in range(3) if y != r]
            minor = (m[rows[0]][cols[0]] * m[rows[1]][cols[1]]
                     - m[rows[0]][cols[1]] * m[rows[1]][cols[0]])
            cof = minor if (r + c) % 2 == 0 else -minor
            f = f + cof * us[r] * us[c]
    return f


def proportionality(p: Polynomial, q: Polynomial) -> Optional[Fraction]:
    """The scalar c with p == c * q, or None if there is none."""
    if p.is_zero() or q.is_zero():
        return Fraction(1) if p == q else None
    if set(p.terms) != set(q.terms):
        return None
    m0 = next(iter(q.terms))
    c = p.coefficient(m0) / q.coefficient(m0)
    return c if p == q.scale(c) else None
