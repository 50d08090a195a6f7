"""Scalar and triple invariants of invertible polynomials."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import NonIntegral, NotCoprime
from .invertible import TypedForm, WeightSystem, normal_form_polynomial, reduce_weights
from .poly import Polynomial


@dataclass(frozen=True)
class Triple:
    """Three positive integers in table order, with the form's permutation attached."""

    values: Tuple[int, int, int]
    perm: Tuple[int, int, int] = (0, 1, 2)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) != 3 or min(self.values) < 1:
            raise ValueError(f"triple entries must be >= 1: {self.values}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def sorted(self) -> Tuple[int, int, int]:
        return tuple(sorted(self.values))

    def by_input_variable(self) -> Tuple[int, int, int]:
        out = [0, 0, 0]
        for k, v in enumerate(self.perm):
            out[v] = self.values[k]
        return tuple(out)

    def same_multiset(self, other: Sequence[int]) -> bool:
        return self.sorted() == tuple(sorted(other))

    def to_json(self) -> dict:
        return {"table_order": list(self.values), "sorted": list(self.sorted())}


@dataclass(frozen=True)
class OrbitInvariants:
    pairs: Tuple[Tuple[int, int], ...]

    def to_json(self) -> List[List[int]]:
        return [list(p) for p in self.pairs]


def dolgachev(tf: TypedForm) -> Triple:
    """Orders of the isotropic points of the orbifold line attached to (f, G_f)."""
    t, (a, b, c) = tf.type_tag, tf.params
    if t == "I":
        v = (a, b, c)
    elif t == "II":
        v = (a, c // b, (b - 1) * a)
    elif t == "III":
        v = (a, a * b, a * c)
    elif t == "IV":
        v = (c // b, (a - 1) * (c // b), b - a + 1)
    else:
        v = (b * c - c + 1, c * a - a + 1, a * b - b + 1)
    return Triple(v, tf.perm)


def gabrielov(tf: TypedForm) -> Triple:
    """Indices of the cusp polynomial T reached from f + xyz."""
    t, (a, b, c) = tf.type_tag, tf.params
    if t == "I":
        v = (a, b, c)
    elif t == "II":
        v = (a, b, (c // b - 1) * a)
    elif t == "III":
        v = (a, a * b, a * c)
    elif t == "IV":
        v = (a, (c // b - 1) * a, c // a - c // b + 1)
    else:
        v = (b * c - b + 1, c * a - c + 1, a * b - a + 1)
    return Triple(v, tf.perm)


def delta(t: Sequence[int]) -> int:
    """abc - ab - bc - ca: negative for ADE, zero for simply elliptic triples.

    >>> delta((2, 3, 5)), delta((3, 3, 3)), delta((2, 3, 7))
    (-1, 0, 1)
    """
    a, b, c = t
    return a * b * c - a * b - b * c - c * a


def gorenstein_parameter(W: WeightSystem) -> int:
    return W.d - W.w1 - W.w2 - W.w3


def milnor_number(W: WeightSystem) -> int:
    """prod (d - w_i) / w_i, evaluated on the reduced system."""
    R, _ = reduce_weights(W)
    mu = Fraction(1)
    for w in R.weights:
        mu *= Fraction(R.d - w, w)
    if mu.denominator != 1 or mu <= 0:
        raise NonIntegral(f"Milnor number of {W} would be {mu}")
    return mu.numerator


def orbifold_euler(t: Sequence[int]) -> Fraction:
    return sum(Fraction(1, a) for a in t) - 1


def orbit_invariants(alpha: Sequence[int], a: int) -> OrbitInvariants:
    """Pairs (alpha_i, beta_i) with beta_i * a = 1 mod alpha_i; alpha_i = 1 is skipped."""
    if a < 1:
        raise ValueError(f"orbit invariants need a >= 1, got {a}")
    pairs = []
    for al in alpha:
        if al < 2:
            continue
        if math.gcd(a, al) != 1:
            raise NotCoprime(f"gcd({a}, {al}) > 1")
        pairs.append((al, pow(a, -1, al)))
    return OrbitInvariants(tuple(pairs))


def _v(name: str) -> Polynomial:
    return Polynomial.var(name)


def cusp_substitution(tf: TypedForm) -> dict:
    """Coordinate change taking f + xyz (normal form) towards T_{γ1,γ2,γ3}."""
    t, (a, b, c) = tf.type_tag, tf.params
    x, y, z = _v("x"), _v("y"), _v("z")
    if t == "I":
        return {}
    if t == "II":
        return {"x": x - z ** (c // b - 1)}
    if t == "III":
        return {"x": x - y ** b - z ** c}
    if t == "IV":
        return {"x": x - z ** (c // b - 1), "z": z - y ** (b // a - 1)}
    return {"x": x - y ** (b - 1), "y": y - z ** (c - 1), "z": z - x ** (a - 1)}


def cusp_transform(tf: TypedForm) -> Polynomial:
    """Substituted f + xyz, in normal-form variables with unit coefficients."""
    f = normal_form_polynomial(tf) + Polynomial.monomial((1, 1, 1))
    return f.substitute(cusp_substitution(tf))


def cusp_support(tf: TypedForm, g: Optional[Polynomial] = None) -> Optional[Tuple[int, int, int]]:
    """Assignment of the Gabrielov numbers to x, y, z found in the transform.

    Returns the exponents (e_x, e_y, e_z), a permutation of the Gabrielov
    triple, such that x^e_x, y^e_y, z^e_z and xyz all occur with nonzero
    coefficient; None if no such assignment exists.
    """
    g = cusp_transform(tf) if g is None else g
    if (1, 1, 1) not in g:
        return None
    gamma = gabrielov(tf).values
    for cand in sorted(set(itertools.permutations(gamma)), key=lambda c: c != gamma):
        if all(tuple(cand[k] if j == k else 0 for j in range(3)) in g for k in range(3)):
            return cand
    return None
