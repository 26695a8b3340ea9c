"""Weight diagrams of sl3-modules generated by highest vectors in K[A]."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .action import action_table, format_word, is_highest_vector, weight_of
from .linalg import EchelonBasis
from .ring import Polynomial, RingConfig, mono_sort_key
from .render import render_text

Weight = Tuple[int, int]


def irrep_dim(m1: int, m2: int) -> int:
    """Dimension of the irreducible sl3-module with highest weight [m1, m2]."""
    if m1 < 0 or m2 < 0:
        raise ValueError("highest weight components must be nonnegative")
    return (m1 + 1) * (m2 + 1) * (m1 + m2 + 2) // 2


def falling_factorial(d: int, t: int) -> int:
    """d (d-1) ... (d-t+1), with t factors."""
    if t < 0:
        raise ValueError("number of factors must be nonnegative")
    out = 1
    for k in range(t):
        out *= d - k
    return out


def word_shift(alpha: int, beta: int, gamma: int) -> Weight:
    """Weight change produced by Dh1^alpha Dh2^beta Dh3^gamma."""
    return (-2 * alpha + beta - gamma, alpha - 2 * beta - gamma)


class NotHighestVector(ValueError):
    pass


@dataclass
class WeightDiagram:
    seed: Polynomial
    ring: RingConfig
    highest_weight: Weight
    spaces: Dict[Weight, List[Tuple[str, Polynomial]]] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return sum(len(v) for v in self.spaces.values())

    def weights(self) -> List[Weight]:
        return sorted(self.spaces, reverse=True)

    def to_json(self) -> list:
        return [
            {"weight": list(w), "dim": len(self.spaces[w]),
             "basis": [{"word": word, "poly": render_text(p)} for word, p in self.spaces[w]]}
            for w in self.weights()
        ]


def lowering_span(seed: Polynomial, ring: RingConfig) -> WeightDiagram:
    """Span of all Dh1^a Dh2^b Dh3^c (seed), split into weight spaces.

    Words are bounded by height a + b + 2c <= 2 (d1 + d2), the distance from
    the highest to the lowest weight of the module.  Within each weight space
    words are visited shortest first, then alphabetically, and a word is kept
    only if its image is independent of the ones already kept.
    """
    if not is_highest_vector(seed, ring):
        raise NotHighestVector("seed is not a highest vector")
    d1, d2 = weight_of(seed, ring)
    table = action_table(ring)
    height = 2 * (d1 + d2)

    images: Dict[Tuple[int, int, int], Polynomial] = {}
    by_gamma = seed
    for gamma in range(height // 2 + 1):
        if gamma:
            by_gamma = table.apply("Dh3", by_gamma)
        if by_gamma.is_zero():
            break
        by_beta = by_gamma
        for beta in range(height - 2 * gamma + 1):
            if beta:
                by_beta = table.apply("Dh2", by_beta)
            if by_beta.is_zero():
                break
            cur = by_beta
            for alpha in range(height - 2 * gamma - beta + 1):
                if alpha:
                    cur = table.apply("Dh1", cur)
                if cur.is_zero():
                    break
                images[(alpha, beta, gamma)] = cur

    def word_of(abc):
        return format_word([("Dh1", abc[0]), ("Dh2", abc[1]), ("Dh3", abc[2])])

    order = sorted(images, key=lambda abc: (sum(abc), word_of(abc)))
    diagram = WeightDiagram(seed, ring, (d1, d2))
    bases: Dict[Weight, EchelonBasis] = {}
    for abc in order:
        shift = word_shift(*abc)
        w = (d1 + shift[0], d2 + shift[1])
        basis = bases.setdefault(w, EchelonBasis(order=mono_sort_key))
        if basis.add(images[abc].terms):
            diagram.spaces.setdefault(w, []).append((word_of(abc), images[abc]))
    return diagram


def weight_space_dims(diagram: WeightDiagram) -> Dict[Weight, int]:
    return {w: len(diagram.spaces[w]) for w in diagram.weights()}
