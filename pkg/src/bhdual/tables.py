"""Regenerate the named-singularity tables from their polynomials and diff them.

Each table is rendered twice in the same normalized layout: once from the
stored atlas rows and once from values computed out of the polynomial ``f``
alone. A formula regression shows up as a unified diff between the two.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from .atlas import Atlas, AtlasEntry, default_atlas
from .invariants import dolgachev, gabrielov, gorenstein_parameter, milnor_number, orbit_invariants
from .invertible import TypedForm, canonical_weights, classify, reduce_weights, transpose
from .poly import parse_polynomial, render
from .series import CycloProduct, as_polynomial, characteristic_function

WHICH = ("simple", "elliptic", "arnold", "bimodal", "series", "table8", "phi")


@dataclass(frozen=True)
class TableDiff:
    which: str
    stored: Tuple[str, ...]
    regenerated: Tuple[str, ...]

    @property
    def diff(self) -> List[str]:
        return list(difflib.unified_diff(self.stored, self.regenerated, "atlas", "regenerated",
                                         lineterm="", n=0))

    @property
    def ok(self) -> bool:
        return self.stored == self.regenerated

    def mismatched_rows(self) -> List[Tuple[str, str]]:
        return [(a, b) for a, b in zip(self.stored, self.regenerated) if a != b]


# -- computed side -----------------------------------------------------------


@dataclass(frozen=True)
class Computed:
    """Everything derivable from one polynomial f."""

    tf: TypedForm
    tft: TypedForm
    ft_text: str
    alpha: Tuple[int, ...]
    gamma: Tuple[int, ...]
    alpha_t: Tuple[int, ...]
    a_W: int
    c_f: int
    c_ft: int
    mu_ft: int
    phi_f: CycloProduct
    phi_ft: CycloProduct
    key: Tuple[Fraction, ...]
    key_t: Tuple[Fraction, ...]


def singularity_key(text: str) -> Tuple[Fraction, ...]:
    """Normalized weights of the variables that survive the splitting lemma.

    Variables occurring in a degree-2 monomial are dropped; the remaining
    weights divided by the degree identify the singularity up to stable
    equivalence among the polynomials we tabulate.
    """
    p = parse_polynomial(text)
    tf = classify(p)
    W = canonical_weights(tf).permuted(tf.perm)
    quadratic = {j for m, _ in p.items() if m.degree == 2 for j in range(3) if m[j]}
    return tuple(sorted(Fraction(w, W.d) for j, w in enumerate(W.weights) if j not in quadratic))


@lru_cache(maxsize=None)
def compute(f_text: str) -> Computed:
    f = parse_polynomial(f_text)
    tf = classify(f)
    ft = transpose(f)
    ft_text = render(ft)
    tft = classify(ft)
    Wf, Wft = canonical_weights(tf), canonical_weights(tft)
    af, aft = dolgachev(tf), dolgachev(tft)
    return Computed(
        tf=tf, tft=tft, ft_text=ft_text,
        alpha=af.sorted(), gamma=gabrielov(tf).sorted(), alpha_t=aft.sorted(),
        a_W=gorenstein_parameter(Wf),
        c_f=reduce_weights(Wf)[1], c_ft=reduce_weights(Wft)[1],
        mu_ft=milnor_number(Wft),
        phi_f=characteristic_function(Wf, af), phi_ft=characteristic_function(Wft, aft),
        key=singularity_key(f_text), key_t=singularity_key(ft_text),
    )


def regenerate_dual(entry: AtlasEntry, atlas: Atlas) -> str:
    """Name of the singularity f^t defines, found among the atlas polynomials."""
    c = compute(entry.f)
    if c.key_t == c.key:
        return entry.name
    names = sorted({e.name for e in atlas.entries() if e.f and singularity_key(e.f) == c.key_t})
    return "/".join(names) if names else "?"


# -- rendering ---------------------------------------------------------------


def _t(v) -> str:
    return ",".join(str(x) for x in v) if v is not None else "-"


def _pairs(v) -> str:
    return ",".join(f"({a},{b})" for a, b in v) if v is not None else "-"


def _canon_poly(text: str) -> str:
    return render(parse_polynomial(text))


def _canon_phi(text: str) -> str:
    return CycloProduct.parse(text).render() if text else "-"


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _row_stored(e: AtlasEntry, which: str) -> str:
    if which == "table8":
        return " | ".join([e.name, _pairs(e.beta_pairs), f"a_W={e.a_W}", _pairs(e.delta_pairs),
                           f"c_ft={e.c_ft}", f"mu_ft={e.mu_ft}", e.dual])
    if which == "phi":
        return " | ".join([e.name, _canon_phi(e.phi_f), _canon_phi(e.phi_ft), e.dual])
    cells = [e.name, _t(sorted(e.alpha)), _canon_poly(e.f), _canon_poly(e.ft), _t(sorted(e.gamma)),
             e.dual]
    if e.a_W is not None:
        cells.append(f"a_W={e.a_W}")
    if e.c_f is not None:
        cells.append(f"c_f={e.c_f}")
    for k in ("phi_f_poly", "phi_ft_poly"):
        if k in e.notes:
            cells.append(f"{k}={e.notes[k]}")
    return " | ".join(cells)


def _row_computed(e: AtlasEntry, which: str, atlas: Atlas) -> str:
    c = compute(e.f)
    dual = regenerate_dual(e, atlas)
    if which == "table8":
        beta = orbit_invariants(c.alpha, c.a_W).pairs if c.a_W >= 1 else None
        # δ has no closed form; it is carried over from the data, paired by position
        deltas = [d for _, d in e.delta_pairs] if e.delta_pairs else []
        delta_pairs = tuple(zip(c.gamma, deltas)) if deltas else None
        return " | ".join([e.name, _pairs(beta), f"a_W={c.a_W}", _pairs(delta_pairs),
                           f"c_ft={c.c_ft}", f"mu_ft={c.mu_ft}", dual])
    if which == "phi":
        return " | ".join([e.name, c.phi_f.render(), c.phi_ft.render(), dual])
    cells = [e.name, _t(c.alpha), _canon_poly(e.f), c.ft_text, _t(c.gamma), dual]
    if e.a_W is not None:
        cells.append(f"a_W={c.a_W}")
    if e.c_f is not None:
        cells.append(f"c_f={c.c_f}")
    flags = {"phi_f_poly": as_polynomial(c.phi_f) is not None,
             "phi_ft_poly": as_polynomial(c.phi_ft) is not None}
    for k, v in flags.items():
        if k in e.notes:
            cells.append(f"{k}={_yn(v)}")
    return " | ".join(cells)


_SELECT: Dict[str, Callable[[Atlas], List[AtlasEntry]]] = {
    "simple": lambda a: a.simple_family() + a.entries("simple"),
    "elliptic": lambda a: a.entries("elliptic"),
    "arnold": lambda a: a.entries("arnold"),
    "bimodal": lambda a: a.entries("bimodal"),
    "series": lambda a: a.entries("series"),
    "table8": lambda a: a.entries("bimodal"),
    "phi": lambda a: a.entries("bimodal"),
}


def regenerate(which: str, atlas: Optional[Atlas] = None) -> TableDiff:
    if which not in WHICH:
        raise ValueError(f"unknown table {which!r}; choose from {', '.join(WHICH)}")
    atlas = atlas or default_atlas()
    rows = _SELECT[which](atlas)
    stored = tuple(_row_stored(e, which) for e in rows)
    regenerated = tuple(_row_computed(e, which, atlas) for e in rows)
    return TableDiff(which, stored, regenerated)


def regenerate_all(atlas: Optional[Atlas] = None) -> List[TableDiff]:
    return [regenerate(w, atlas) for w in WHICH]
