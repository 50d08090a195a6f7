"""Products of the form prod (1 - t^i)^e(i) and their eigenvalue bookkeeping.

Text form: numerator indices ascending (repeated by multiplicity) joined by
``*``, then ``/``, then the denominator indices; an empty side is ``[]``.
The index 1 stands for the factor (1 - t), so ``17/1`` is
(1 - t^17)/(1 - t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from .errors import IndexNotDividing, NotPolynomial, NotReduced
from .invertible import TypedForm, WeightSystem, transpose_weights


@dataclass(frozen=True)
class CycloProduct:
    factors: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_map(cls, exps: Mapping[int, int]) -> "CycloProduct":
        for i in exps:
            if i < 1:
                raise ValueError(f"factor index must be positive, got {i}")
        return cls(tuple(sorted((i, e) for i, e in exps.items() if e)))

    @classmethod
    def from_lists(cls, num=(), den=()) -> "CycloProduct":
        exps: Dict[int, int] = {}
        for i in num:
            exps[i] = exps.get(i, 0) + 1
        for i in den:
            exps[i] = exps.get(i, 0) - 1
        return cls.from_map(exps)

    @classmethod
    def parse(cls, text: str) -> "CycloProduct":
        text = text.replace("·", "*").replace(" ", "")
        num, sep, den = text.partition("/")
        if not sep:
            den = "[]"

        def side(s: str) -> List[int]:
            if s in ("", "[]"):
                return []
            return [int(tok) for tok in s.split("*")]

        return cls.from_lists(side(num), side(den))

    @property
    def exponents(self) -> Dict[int, int]:
        return dict(self.factors)

    @property
    def degree(self) -> int:
        return sum(i * e for i, e in self.factors)

    def __mul__(self, other: "CycloProduct") -> "CycloProduct":
        exps = self.exponents
        for i, e in other.factors:
            exps[i] = exps.get(i, 0) + e
        return CycloProduct.from_map(exps)

    def inverse(self) -> "CycloProduct":
        return CycloProduct(tuple((i, -e) for i, e in self.factors))

    def __truediv__(self, other: "CycloProduct") -> "CycloProduct":
        return self * other.inverse()

    def render(self) -> str:
        num = [str(i) for i, e in self.factors if e > 0 for _ in range(e)]
        den = [str(i) for i, e in self.factors if e < 0 for _ in range(-e)]
        return ("*".join(num) or "[]") + "/" + ("*".join(den) or "[]")

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class EigMult:
    """Multiplicity of each d-th root of unity exp(2 pi i j / d), j = 0..d-1."""

    level: int
    mult: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.mult)

    def lift(self, level: int) -> "EigMult":
        if level % self.level:
            raise ValueError(f"cannot lift level {self.level} to {level}")
        step = level // self.level
        out = [0] * level
        for j, m in enumerate(self.mult):
            out[j * step] = m
        return EigMult(level, tuple(out))

    def roots(self) -> List[int]:
        """Exponents j with multiplicity; only meaningful when all mult >= 0."""
        return [j for j, m in enumerate(self.mult) for _ in range(max(m, 0))]


def poincare_series(W: WeightSystem) -> CycloProduct:
    """Graded dimensions of C[x,y,z]/(f): (1 - t^d) / prod (1 - t^w_i)."""
    return CycloProduct.from_lists([W.d], W.weights)


def characteristic_function(W: WeightSystem, alpha) -> CycloProduct:
    """p_f(t) (1-t)^2 prod (1 - t^alpha_i)/(1 - t), cancelled."""
    return poincare_series(W) * CycloProduct.from_lists(list(alpha), [1])


def saito_dual(phi: CycloProduct, d: int) -> CycloProduct:
    """Replace each (1 - t^i)^e by (1 - t^(d/i))^(-e).

    >>> saito_dual(CycloProduct.parse("3*5*30/1*10*15"), 30).render()
    '2*3*30/1*6*10'
    """
    exps: Dict[int, int] = {}
    for i, e in phi.factors:
        if d % i:
            raise IndexNotDividing(i, d)
        exps[d // i] = exps.get(d // i, 0) - e
    return CycloProduct.from_map(exps)


def expand(c: CycloProduct, n: int) -> List[int]:
    """Power-series coefficients of degrees 0..n."""
    a = [0] * (n + 1)
    a[0] = 1
    for i, e in c.factors:
        for _ in range(abs(e)):
            if e > 0:
                for k in range(n, i - 1, -1):
                    a[k] -= a[k - i]
            else:
                for k in range(i, n + 1):
                    a[k] += a[k - i]
    return a


def _poly_of(indices: Mapping[int, int]) -> List[int]:
    deg = sum(i * e for i, e in indices.items())
    a = [0] * (deg + 1)
    a[0] = 1
    top = 0
    for i, e in sorted(indices.items()):
        for _ in range(e):
            top += i
            for k in range(top, i - 1, -1):
                a[k] -= a[k - i]
    return a


def _divide_one_minus(a: List[int], j: int) -> Optional[List[int]]:
    """Quotient of a by (1 - t^j), or None if the division is not exact."""
    n = len(a) - 1
    if n < j:
        return None if any(a) else [0]
    q = [0] * (n - j + 1)
    for k in range(n - j + 1):
        q[k] = a[k] + (q[k - j] if k >= j else 0)
    for k in range(n - j + 1, n + 1):
        if a[k] + (q[k - j] if k >= j else 0) != 0:
            return None
    return q


def as_polynomial(c: CycloProduct) -> Optional[List[int]]:
    """Coefficients (ascending) if the product is a polynomial, else None."""
    num = _poly_of({i: e for i, e in c.factors if e > 0})
    for i, e in c.factors:
        for _ in range(-e):
            num = _divide_one_minus(num, i)
            if num is None:
                return None
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num


def eig_mult(c: CycloProduct, d: int) -> EigMult:
    mult = [0] * d
    for i, e in c.factors:
        if d % i:
            raise IndexNotDividing(i, d)
        for j in range(0, d, d // i):
            mult[j] += e
    return EigMult(d, tuple(mult))


def power_transform(m: EigMult, c: int) -> EigMult:
    """Eigenvalue map lambda -> lambda^c at the same level."""
    out = [0] * m.level
    for j, k in enumerate(m.mult):
        out[(c * j) % m.level] += k
    return EigMult(m.level, tuple(out))


def monodromy_charpoly(tf: TypedForm) -> CycloProduct:
    """Characteristic polynomial of the Milnor monodromy of f^t in closed form."""
    t, (a, b, c) = tf.type_tag, tf.params
    Wt = transpose_weights(tf)
    g = math.gcd(Wt.w1, Wt.w2, Wt.w3, Wt.d)
    num: List[int] = []
    den: List[int] = [1]
    if t == "I":
        c1, c2, c3 = math.gcd(b, c), math.gcd(a, c), math.gcd(a, b)
        num = [a, b, c] + [a * b * c // g] * g
        den += [b * c // c1] * c1 + [c * a // c2] * c2 + [a * b // c3] * c3
    elif t == "II":
        r = c // b
        c1, c2 = math.gcd(b, r - 1), math.gcd(a, r)
        num = [a, r] + [a * c // g] * g
        den += [c // c1] * c1 + [a * c // (b * c2)] * c2
    elif t == "III":
        p2 = (b + 1) * (c + 1) - 1
        c1 = math.gcd(b, c)
        num = [a] + [a * p2 // g] * g
        den += [p2 // c1] * c1
    elif t == "IV":
        s, r = b // a, c // b
        c1 = math.gcd(s, r - 1)
        num = [r] + [c // g] * g
        den += [c // (a * c1)] * c1
    else:
        d = a * b * c + 1
        num = [d // g] * g
    return CycloProduct.from_lists(num, den)


def milnor_algebra_oracle(W: WeightSystem) -> EigMult:
    """Monodromy eigenvalues straight from the monomial basis of the Milnor algebra.

    Expands prod (1 - t^(d - w_i)) / (1 - t^w_i) = sum n_k t^k and puts n_k
    at the root exp(2 pi i (k + w1 + w2 + w3) / d).
    """
    if not W.is_reduced():
        raise NotReduced(f"{W} is not reduced")
    # numerator prod (1 - t^(d - w_i)), expanded term by term
    num = [1]
    for w in W.weights:
        e = W.d - w
        nxt = num + [0] * e
        for k, v in enumerate(num):
            nxt[k + e] -= v
        num = nxt
    for w in W.weights:
        num = _divide_one_minus(num, w)
        if num is None:
            raise NotPolynomial(f"Milnor algebra series of {W} is not a polynomial")
    if any(v < 0 for v in num):
        raise NotPolynomial(f"Milnor algebra series of {W} has negative coefficients")
    return _bin(num, W)


def _bin(hilb: List[int], W: WeightSystem) -> EigMult:
    shift = sum(W.weights)
    mult = [0] * W.d
    for k, n in enumerate(hilb):
        mult[(k + shift) % W.d] += n
    return EigMult(W.d, tuple(mult))
