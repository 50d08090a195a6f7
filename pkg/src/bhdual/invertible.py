"""Invertible polynomials in three variables.

Every invertible polynomial is, after permuting variables, one of five
normal forms (rows are the exponent vectors of the three monomials, row k
"belongs" to normal-form variable k)::

    I    x^p1 + y^p2 + z^p3                 (p1, p2, p3)
    II   x^p1 + y^p2 + y z^(p3/p2)          (p1, p2, p3), p2 | p3
    III  x^p1 + z y^(q2+1) + y z^(q3+1)     (p1, q2, q3)
    IV   x^p1 + x y^(p2/p1) + y z^(p3/p2)   (p1, p2, p3), p1 | p2 | p3
    V    x^q1 y + y^q2 z + z^q3 x           (q1, q2, q3)

A ``TypedForm`` records the type, its parameters, the permutation taking
normal-form variables to input variables (``perm[k]`` is the input variable
playing the role of normal-form variable ``k``) and the three coefficients
in normal-form row order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import NonPositiveWeight, NotInvertible, SingularMatrix, ZeroCoefficient
from .poly import VARS, Polynomial, exponent_matrix

TYPES = ("I", "II", "III", "IV", "V")

Row = Tuple[int, int, int]
Matrix = Tuple[Row, Row, Row]


@dataclass(frozen=True)
class WeightSystem:
    w1: int
    w2: int
    w3: int
    d: int

    def __post_init__(self):
        if min(self.w1, self.w2, self.w3, self.d) <= 0:
            raise NonPositiveWeight(f"weights must be positive: {self.as_list()}")

    @property
    def weights(self) -> Tuple[int, int, int]:
        return (self.w1, self.w2, self.w3)

    def as_list(self) -> List[int]:
        return [self.w1, self.w2, self.w3, self.d]

    def is_reduced(self) -> bool:
        return math.gcd(self.w1, self.w2, self.w3, self.d) == 1

    def scaled(self, c: int) -> "WeightSystem":
        return WeightSystem(c * self.w1, c * self.w2, c * self.w3, c * self.d)

    def permuted(self, perm: Sequence[int]) -> "WeightSystem":
        """Weights listed by input variable, given normal-form weights and a perm."""
        w = [0, 0, 0]
        for k, v in enumerate(perm):
            w[v] = self.weights[k]
        return WeightSystem(w[0], w[1], w[2], self.d)

    def degree_of(self, exps: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(self.weights, exps))

    def __str__(self) -> str:
        return f"({self.w1},{self.w2},{self.w3};{self.d})"


@dataclass(frozen=True)
class TypedForm:
    type_tag: str
    params: Tuple[int, int, int]
    perm: Tuple[int, int, int] = (0, 1, 2)
    coeffs: Tuple = (1, 1, 1)

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.type_tag not in TYPES:
            raise ValueError(f"unknown type {self.type_tag!r}")
        if sorted(self.perm) != [0, 1, 2]:
            raise ValueError(f"not a permutation: {self.perm}")
        if not _params_ok(self.type_tag, self.params):
            raise ValueError(f"parameters {self.params} out of range for type {self.type_tag}")

    @property
    def perm_text(self) -> str:
        return "xyz→" + "".join(VARS[v] for v in self.perm)

    def to_json(self) -> dict:
        return {
            "type": self.type_tag,
            "params": list(self.params),
            "perm": self.perm_text,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "TypedForm":
        perm_text = obj.get("perm", "xyz→xyz").split("→")[-1]
        return cls(obj["type"], tuple(obj["params"]),
                   tuple(VARS.index(ch) for ch in perm_text),
                   tuple(Fraction(c) for c in obj.get("coeffs", ("1", "1", "1"))))

    def sort_key(self):
        return (TYPES.index(self.type_tag), self.params, self.perm)


def _params_ok(t: str, p: Tuple[int, int, int]) -> bool:
    a, b, c = p
    if t == "I":
        return min(p) >= 2
    if t == "II":
        return a >= 2 and b >= 2 and c % b == 0 and c // b >= 2
    if t == "III":
        return a >= 2 and b >= 1 and c >= 1
    if t == "IV":
        return a >= 2 and b % a == 0 and b // a >= 2 and c % b == 0 and c // b >= 2
    return min(p) >= 1


def normal_form_rows(type_tag: str, params: Sequence[int]) -> Matrix:
    """Exponent rows of the normal form, row k owned by normal-form variable k."""
    a, b, c = params
    if type_tag == "I":
        return ((a, 0, 0), (0, b, 0), (0, 0, c))
    if type_tag == "II":
        return ((a, 0, 0), (0, b, 0), (0, 1, c // b))
    if type_tag == "III":
        return ((a, 0, 0), (0, b + 1, 1), (0, 1, c + 1))
    if type_tag == "IV":
        return ((a, 0, 0), (1, b // a, 0), (0, 1, c // b))
    if type_tag == "V":
        return ((a, 1, 0), (0, b, 1), (1, 0, c))
    raise ValueError(type_tag)


def _match(type_tag: str, r1: Row, r2: Row, r3: Row) -> Optional[Tuple[int, int, int]]:
    """Parameters if the ordered normal-form rows fit the type's pattern."""
    if type_tag == "I":
        if r1[1:] == (0, 0) and (r2[0], r2[2]) == (0, 0) and r3[:2] == (0, 0):
            p = (r1[0], r2[1], r3[2])
            return p if min(p) >= 2 else None
    elif type_tag == "II":
        if r1[1:] == (0, 0) and (r2[0], r2[2]) == (0, 0) and r3[:2] == (0, 1):
            a, b, r = r1[0], r2[1], r3[2]
            if min(a, b, r) >= 2:
                return (a, b, b * r)
    elif type_tag == "III":
        if r1[1:] == (0, 0) and r2[0] == 0 and r2[2] == 1 and r3[:2] == (0, 1):
            a, m, n = r1[0], r2[1], r3[2]
            if a >= 2 and m >= 2 and n >= 2:
                return (a, m - 1, n - 1)
    elif type_tag == "IV":
        if r1[1:] == (0, 0) and r2[0] == 1 and r2[2] == 0 and r3[:2] == (0, 1):
            a, s, r = r1[0], r2[1], r3[2]
            if min(a, s, r) >= 2:
                return (a, a * s, a * s * r)
    elif type_tag == "V":
        if r1[1:] == (1, 0) and r2[0] == 0 and r2[2] == 1 and r3[0] == 1 and r3[1] == 0:
            q = (r1[0], r2[1], r3[2])
            if min(q) >= 1:
                return q
    return None


def det3(m: Sequence[Sequence[int]]) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def classify(p: Polynomial) -> TypedForm:
    """Find the normal form of an invertible polynomial.

    Tries all six variable permutations and every assignment of terms to
    normal-form rows; types are tried in order I..V and within the first
    matching type the lexicographically smallest (params, perm) wins.

    >>> from bhdual.poly import parse_polynomial
    >>> tf = classify(parse_polynomial("x^3+y^2+yz^5"))
    >>> tf.type_tag, tf.params
    ('II', (3, 2, 10))
    """
    rows = exponent_matrix(p)
    coeff_of = {r: p.coeff(r) for r in rows}
    if any(c == 0 for c in coeff_of.values()):
        raise ZeroCoefficient(f"zero coefficient in {p}")
    if det3(rows) == 0:
        raise SingularMatrix(f"exponent matrix of {p} is singular")
    for t in TYPES:
        found = []
        for perm in itertools.permutations(range(3)):
            # exponent vector seen from the normal-form variables
            nf = {r: tuple(r[perm[k]] for k in range(3)) for r in rows}
            for order in itertools.permutations(rows):
                params = _match(t, *(nf[r] for r in order))
                if params is not None:
                    coeffs = tuple(coeff_of[r] for r in order)
                    found.append((params, perm, coeffs))
        if found:
            params, perm, coeffs = min(found, key=lambda f: (f[0], f[1]))
            return TypedForm(t, params, perm, coeffs)
    raise NotInvertible(f"{p} matches none of the five invertible types")


def normal_form_matrix(tf: TypedForm) -> Matrix:
    return normal_form_rows(tf.type_tag, tf.params)


def input_rows(tf: TypedForm) -> Matrix:
    """Exponent rows in input variables; row i is the monomial owned by variable i."""
    nf = normal_form_matrix(tf)
    rows: List[Optional[Row]] = [None, None, None]
    for k, r in enumerate(nf):
        e = [0, 0, 0]
        for j in range(3):
            e[tf.perm[j]] = r[j]
        rows[tf.perm[k]] = tuple(e)
    return tuple(rows)


def _input_coeffs(tf: TypedForm) -> Tuple:
    out = [None, None, None]
    for k, c in enumerate(tf.coeffs):
        out[tf.perm[k]] = c
    return tuple(out)


def _poly_from_rows(rows: Sequence[Row], coeffs: Sequence) -> Polynomial:
    return Polynomial({r: c for r, c in zip(rows, coeffs)})


def normal_form_polynomial(tf: TypedForm, unit: bool = True) -> Polynomial:
    coeffs = (1, 1, 1) if unit else tf.coeffs
    return _poly_from_rows(normal_form_matrix(tf), coeffs)


def input_polynomial(tf: TypedForm) -> Polynomial:
    """The polynomial in the caller's variables that ``tf`` describes."""
    return _poly_from_rows(input_rows(tf), _input_coeffs(tf))


def transpose_rows(rows: Sequence[Row]) -> Matrix:
    return tuple(tuple(rows[i][j] for i in range(3)) for j in range(3))


def transpose(p: Polynomial) -> Polynomial:
    """Berglund–Hübsch transpose, in the input's variables.

    Monomials are matched to variables through the classification so the
    exponent matrix has the dominant exponents on its diagonal; the transpose
    then keeps each variable's name (x^2+y^3+yz^5 -> x^2+zy^3+z^5).
    """
    tf = classify(p)
    rows = input_rows(tf)
    return _poly_from_rows(transpose_rows(rows), _input_coeffs(tf))


def canonical_weights(tf: TypedForm) -> WeightSystem:
    """Canonical (possibly non-reduced) weights of f, normal-form variable order."""
    t, (a, b, c) = tf.type_tag, tf.params
    if t == "I":
        w = WeightSystem(b * c, c * a, a * b, a * b * c)
    elif t == "II":
        w = WeightSystem(c, a * c // b, (b - 1) * a, a * c)
    elif t == "III":
        p2 = (b + 1) * (c + 1) - 1
        w = WeightSystem(p2, a * c, a * b, a * p2)
    elif t == "IV":
        w = WeightSystem(c // a, (a - 1) * c // b, b - a + 1, c)
    else:
        w = WeightSystem(b * c - c + 1, c * a - a + 1, a * b - b + 1, a * b * c + 1)
    for row in normal_form_matrix(tf):
        assert w.degree_of(row) == w.d, (tf, w, row)
    return w


def transpose_weights(tf: TypedForm) -> WeightSystem:
    """Canonical weights of f^t in closed form, indexed like ``canonical_weights``."""
    t, (a, b, c) = tf.type_tag, tf.params
    if t == "I":
        return WeightSystem(b * c, c * a, a * b, a * b * c)
    if t == "II":
        return WeightSystem(c, (c // b - 1) * a, a * b, a * c)
    if t == "III":
        p2 = (b + 1) * (c + 1) - 1
        return WeightSystem(p2, a * c, a * b, a * p2)
    if t == "IV":
        return WeightSystem(c // a - c // b + 1, (c // b - 1) * a, b, c)
    return WeightSystem(b * c - b + 1, c * a - c + 1, a * b - a + 1, a * b * c + 1)


def _cross(u: Row, v: Row) -> Row:
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def weights_by_cramer(E: Sequence[Sequence[int]]) -> WeightSystem:
    """((E2×E3)·1, (E3×E1)·1, (E1×E2)·1; det E), sign-normalized.

    Applied to the exponent matrix of f this yields the weights of f^t; applied
    to its transpose it yields the weights of f.
    """
    E1, E2, E3 = (tuple(r) for r in E)
    d = det3((E1, E2, E3))
    if d == 0:
        raise SingularMatrix(f"singular exponent matrix {E}")
    w = [sum(_cross(E2, E3)), sum(_cross(E3, E1)), sum(_cross(E1, E2))]
    if d < 0:
        w, d = [-x for x in w], -d
    if min(w) <= 0:
        raise NonPositiveWeight(f"Cramer weights {w} of {E} are not all positive")
    return WeightSystem(w[0], w[1], w[2], d)


def reduce_weights(W: WeightSystem) -> Tuple[WeightSystem, int]:
    c = math.gcd(W.w1, W.w2, W.w3, W.d)
    return WeightSystem(W.w1 // c, W.w2 // c, W.w3 // c, W.d // c), c
