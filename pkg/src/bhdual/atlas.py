"""Golden dataset of named invertible polynomials and their strange duals.

The data lives in ``data/atlas.txt``. Rows are stored values, never
computed here. The ``tables`` module regenerates the
numbers from the polynomials and diffs them against these rows.
"""

from __future__ import annotations

import ast
import operator
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Dict, List, Optional, Tuple

from .errors import BadParameter, UnknownName
from .invertible import TypedForm, classify
from .poly import parse_polynomial

COLUMNS = ("name", "group", "family", "f", "ft", "alpha", "gamma", "dual", "a_W", "c_f",
           "c_ft", "mu_ft", "beta_pairs", "delta_pairs", "phi_f", "phi_ft", "notes")
GROUPS = ("simple", "elliptic", "arnold", "bimodal", "series", "dual")

Pair = Tuple[int, int]


@dataclass(frozen=True)
class AtlasEntry:
    name: str
    group: str
    family: str = ""
    f: str = ""
    ft: str = ""
    alpha: Optional[Tuple[int, ...]] = None
    gamma: Optional[Tuple[int, ...]] = None
    dual: str = ""
    a_W: Optional[int] = None
    c_f: Optional[int] = None
    c_ft: Optional[int] = None
    mu_ft: Optional[int] = None
    beta_pairs: Optional[Tuple[Pair, ...]] = None
    delta_pairs: Optional[Tuple[Pair, ...]] = None
    phi_f: str = ""
    phi_ft: str = ""
    notes: Dict[str, str] = field(default_factory=dict, compare=False, hash=False)

    @property
    def is_dual_only(self) -> bool:
        return self.group == "dual"

    @property
    def key(self) -> Tuple[str, str]:
        """Entries are unique by (name, f); a name alone may label two polynomials."""
        return (self.name, self.f)

    def to_json(self) -> dict:
        out = {}
        for col in COLUMNS:
            v = getattr(self, col)
            if isinstance(v, tuple):
                v = [list(x) if isinstance(x, tuple) else x for x in v]
            if v in (None, "", {}):
                continue
            out[col] = v
        return out


# -- parsing ---------------------------------------------------------------

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul}


def _eval_expr(expr: str, env: Dict[str, int]) -> int:
    """Evaluate a small integer expression; juxtaposition means product (2k, kl)."""
    text = re.sub(r"(?<=[0-9a-z])(?=[a-z])", "*", expr.replace(" ", ""))

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name) and node.id in env:
            return env[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        raise ValueError(f"unsupported expression {expr!r}")

    return ev(ast.parse(text, mode="eval"))


def _triple(text: str, env: Dict[str, int]) -> Optional[Tuple[int, ...]]:
    if not text:
        return None
    return tuple(_eval_expr(t, env) for t in text.split(","))


def _pairs(text: str) -> Optional[Tuple[Pair, ...]]:
    if not text:
        return None
    return tuple((int(a), int(b)) for a, b in re.findall(r"\((\d+),(\d+)\)", text))


def _int(text: str) -> Optional[int]:
    return int(text) if text else None


def _notes(text: str) -> Dict[str, str]:
    out = {}
    for item in filter(None, text.split(";")):
        k, _, v = item.partition("=")
        out[k.strip()] = v.strip()
    return out


def _subst_name(text: str, env: Dict[str, int]) -> str:
    """Replace parenthesised parameter expressions: D(2k+1) -> D(7)."""
    if not env:
        return text
    return re.sub(r"\(([^)]*)\)",
                  lambda m: "(" + ",".join(str(_eval_expr(p, env)) for p in m.group(1).split(",")) + ")",
                  text)


def _subst_poly(text: str, env: Dict[str, int]) -> str:
    return re.sub(r"\^([a-z])", lambda m: "^" + str(env[m.group(1)]), text) if env else text


@dataclass(frozen=True)
class _Row:
    cells: Tuple[str, ...]

    def instantiate(self, env: Dict[str, int]) -> AtlasEntry:
        c = dict(zip(COLUMNS, self.cells))
        return AtlasEntry(
            name=_subst_name(c["name"], env),
            group=c["group"],
            family=c["family"],
            f=_subst_poly(c["f"], env),
            ft=_subst_poly(c["ft"], env),
            alpha=_triple(c["alpha"], env),
            gamma=_triple(c["gamma"], env),
            dual=_subst_name(c["dual"], env),
            a_W=_int(c["a_W"]),
            c_f=_int(c["c_f"]),
            c_ft=_int(c["c_ft"]),
            mu_ft=_int(c["mu_ft"]),
            beta_pairs=_pairs(c["beta_pairs"]),
            delta_pairs=_pairs(c["delta_pairs"]),
            phi_f=c["phi_f"],
            phi_ft=c["phi_ft"],
            notes=_notes(c["notes"]),
        )


def _read_rows(text: str) -> List[_Row]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        cells = tuple(cell.strip() for cell in line.split("|"))
        if len(cells) != len(COLUMNS):
            raise ValueError(f"atlas line {lineno}: expected {len(COLUMNS)} columns, got {len(cells)}")
        if cells[1] not in GROUPS:
            raise ValueError(f"atlas line {lineno}: unknown group {cells[1]!r}")
        rows.append(_Row(cells))
    return rows


def normalize_name(name: str) -> str:
    """'Z_{1,0}' -> 'Z1,0', 'A_{2,3}' stays distinct from family syntax 'A(2,3)'."""
    return re.sub(r"[\s_{}]", "", name)


# -- the atlas -------------------------------------------------------------


class Atlas:
    """Read-only view of the dataset."""

    def __init__(self, text: str):
        self._rows = _read_rows(text)
        self._templates: Dict[str, _Row] = {}
        self._entries: List[AtlasEntry] = []
        for row in self._rows:
            if re.search(r"[kl]", row.cells[0]):
                self._templates[row.cells[0]] = row
            else:
                self._entries.append(row.instantiate({}))
        # a name resolves to its table row; dual-only rows fill the gaps
        self._primary: Dict[str, AtlasEntry] = {}
        for e in self._entries:
            if not e.is_dual_only:
                self._primary[e.name] = e
        for e in self._entries:
            self._primary.setdefault(e.name, e)

    # family members -------------------------------------------------------

    def family_A(self, k: int, l: int) -> AtlasEntry:
        if k < 1 or l < 1:
            raise BadParameter(f"A(k,l) needs k, l >= 1, got ({k},{l})")
        return self._templates["A(k,l)"].instantiate({"k": k, "l": l})

    def family_D(self, n: int) -> AtlasEntry:
        if n < 4:
            raise BadParameter(f"D(k) needs k >= 4, got {n}")
        if n % 2 == 0:
            return self._templates["D(2k)"].instantiate({"k": n // 2})
        return self._templates["D(2k+1)"].instantiate({"k": (n - 1) // 2})

    def simple_family(self, max_kl: int = 5, max_d: int = 10) -> List[AtlasEntry]:
        out = [self.family_A(k, l) for k in range(1, max_kl + 1) for l in range(1, max_kl + 1)]
        out += [self.family_D(n) for n in range(4, max_d + 1)]
        return out

    # lookup ---------------------------------------------------------------

    def entries(self, group: Optional[str] = None) -> List[AtlasEntry]:
        """Concrete rows in file order (family templates excluded)."""
        return [e for e in self._entries if group is None or e.group == group]

    def names(self) -> List[str]:
        return sorted(self._primary)

    def lookup(self, name: str) -> AtlasEntry:
        name = normalize_name(name)
        m = re.fullmatch(r"A\((-?\d+),(-?\d+)\)", name)
        if m:
            return self.family_A(int(m.group(1)), int(m.group(2)))
        m = re.fullmatch(r"D\(?(-?\d+)\)?", name)
        if m:
            return self.family_D(int(m.group(1)))
        try:
            return self._primary[name]
        except KeyError:
            raise UnknownName(f"no atlas entry named {name!r}") from None

    def find_polynomial(self, text: str) -> AtlasEntry:
        """Entry whose f is the given polynomial up to renaming the variables."""
        tf = classify(parse_polynomial(text))
        target = (tf.type_tag, tf.params)
        for e in self._entries:
            if _form_of(e.f) == target:
                return e
        fam = self._family_member(tf)
        if fam is not None:
            return fam
        raise UnknownName(f"no atlas entry for the polynomial {text!r}")

    def _family_member(self, tf: TypedForm) -> Optional[AtlasEntry]:
        t, p = tf.type_tag, tf.params
        if t == "V" and 1 in p:
            for r in range(3):
                q = p[r:] + p[:r]
                if q[0] == 1:
                    e = self.family_A(q[1], q[2])
                    if _form_of(e.f) == (t, p):
                        return e
        if t == "III" and p[0] == 2 and 1 in p[1:]:
            e = self.family_D(2 * max(p[1], p[2]) + 2)
            if _form_of(e.f) == (t, p):
                return e
        if t == "IV" and p[0] == 2 and p[2] == 2 * p[1] and p[1] % 2 == 0:
            e = self.family_D(p[1] + 1)
            if _form_of(e.f) == (t, p):
                return e
        return None

    def dual_entry(self, entry: AtlasEntry) -> AtlasEntry:
        """The entry whose f is this entry's f^t (same-name entries first)."""
        target = _form_of(entry.ft)
        candidates = [e for e in self._entries if e.name == entry.dual] + self._entries
        for e in candidates:
            if e.f and _form_of(e.f) == target:
                return e
        if re.match(r"[AD]\(", entry.name):
            return self.lookup(entry.dual)
        raise UnknownName(f"dual of {entry.name} is not in the atlas")

    def dual_name(self, name_or_poly: str) -> str:
        text = name_or_poly.strip()
        if re.search(r"[xyz]", text):
            return self.find_polynomial(text).dual
        return self.lookup(text).dual


@lru_cache(maxsize=None)
def _form_of(text: str) -> Tuple[str, Tuple[int, int, int]]:
    tf = classify(parse_polynomial(text))
    return (tf.type_tag, tf.params)


@lru_cache(maxsize=1)
def default_atlas() -> Atlas:
    text = resources.files("bhdual").joinpath("data/atlas.txt").read_text(encoding="utf-8")
    return Atlas(text)


def lookup(name: str) -> AtlasEntry:
    return default_atlas().lookup(name)


def dual_name(name_or_poly: str) -> str:
    """Strange dual of a named entry or of a polynomial found in the atlas.

    >>> dual_name("E14"), dual_name("x^2+y^3+yz^5")
    ('Q10', 'Z11')
    """
    return default_atlas().dual_name(name_or_poly)
