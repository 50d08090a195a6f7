"""Exhaustive enumeration of invertible forms and machine checks of the duality.

``check_form`` classifies f^t independently from its rendered polynomial and
then runs the lettered checks below; failures become report entries, never
exceptions.

    a  Dolgachev numbers of f and f^t against Gabrielov numbers of f^t and f
    b  Δ of both Dolgachev triples agree
    c  Gorenstein parameters of f and f^t agree
    d  Cramer weights from the exponent matrix equal the closed form for f^t
    e  Saito dual of φ_f equals φ_{f^t}
    f  eigenvalues of φ*_f equal the Milnor algebra oracle (W_f reduced)
    g  φ_f raised to the power c_{f^t} gives the closed-form Φ_{f^t} (W_f reduced)
    h  expansion of p_f equals the lattice-point count
    i  f + xyz transforms to a polynomial carrying the cusp monomials
    j  tree discriminant of T(γ) equals ±Δ(γ) (all γ_i >= 2)
    k  closed-form Φ_{f^t} equals the Milnor algebra oracle of reduced W_{f^t}
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional

from . import dynkin
from .invariants import (cusp_support, delta, dolgachev, gabrielov, gorenstein_parameter)
from .invertible import (TypedForm, WeightSystem, canonical_weights, classify, input_polynomial,
                         input_rows, reduce_weights, transpose, transpose_weights,
                         weights_by_cramer)
from .series import (characteristic_function, eig_mult, expand, milnor_algebra_oracle,
                     monodromy_charpoly, poincare_series, power_transform, saito_dual)

CHECKS = "abcdefghijk"


def enumerate_forms(bound: int) -> Iterator[TypedForm]:
    """Every normal form with parameters up to ``bound``, type by type."""
    if bound < 2:
        raise ValueError(f"bound must be >= 2, got {bound}")
    big = range(2, bound + 1)
    small = range(1, bound + 1)
    for p in ((a, b, c) for a in big for b in big for c in big):
        yield TypedForm("I", p)
    for a in big:
        for b in big:
            for r in big:
                yield TypedForm("II", (a, b, b * r))
    for a in big:
        for q2 in small:
            for q3 in small:
                yield TypedForm("III", (a, q2, q3))
    for a in big:
        for s in big:
            for r in big:
                yield TypedForm("IV", (a, a * s, a * s * r))
    for p in ((a, b, c) for a in small for b in small for c in small):
        yield TypedForm("V", p)


def partition_count_oracle(W: WeightSystem, k: int) -> int:
    """Graded dimension of C[x,y,z]/(f) in degree k by direct lattice counting."""

    def count(n: int) -> int:
        if n < 0:
            return 0
        total = 0
        w1, w2, w3 = W.weights
        for a in range(n // w1 + 1):
            rest = n - a * w1
            for b in range(rest // w2 + 1):
                if (rest - b * w2) % w3 == 0:
                    total += 1
        return total

    return count(k) - count(k - W.d)


def default_depth(W: WeightSystem) -> int:
    return min(2 * W.d, 400)


def _hilbert_matches(W: WeightSystem, depth: int) -> bool:
    # one pass of lattice counting for all degrees, then difference
    counts = [0] * (depth + 1)
    w1, w2, w3 = W.weights
    for a in range(depth // w1 + 1):
        for b in range((depth - a * w1) // w2 + 1):
            base = a * w1 + b * w2
            for deg in range(base, depth + 1, w3):
                counts[deg] += 1
    oracle = [counts[k] - (counts[k - W.d] if k >= W.d else 0) for k in range(depth + 1)]
    return expand(poincare_series(W), depth) == oracle


@dataclass
class FormRecord:
    index: int
    form: TypedForm
    results: Dict[str, Optional[bool]] = field(default_factory=dict)
    ordered_alpha_gamma: Optional[bool] = None
    failures: Dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v is not False for v in self.results.values())

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "form": self.form.to_json(),
            "checks": {k: self.results.get(k) for k in CHECKS},
            "ordered_alpha_gamma": self.ordered_alpha_gamma,
            "failures": dict(sorted(self.failures.items())),
        }


def check_form(tf: TypedForm, expansion_depth: Optional[int] = None, index: int = 0,
               checks: str = CHECKS) -> FormRecord:
    rec = FormRecord(index, tf)

    def record(key: str, ok: Optional[bool], detail: str = "") -> None:
        if key not in checks:
            return
        rec.results[key] = ok
        if ok is False:
            rec.failures[key] = detail

    f = input_polynomial(tf)
    try:
        ft_poly = transpose(f)
        tft = classify(ft_poly)
    except Exception as exc:  # pragma: no cover - reported, not raised
        for k in checks:
            record(k, False, f"transpose failed: {exc}")
        return rec

    Wf, Wft = canonical_weights(tf), canonical_weights(tft)
    af, aft = dolgachev(tf), dolgachev(tft)
    gf, gft = gabrielov(tf), gabrielov(tft)
    d = Wf.d

    record("a", af.same_multiset(gft) and aft.same_multiset(gf),
           f"alpha_f={af.values} gamma_ft={gft.values} alpha_ft={aft.values} gamma_f={gf.values}")
    rec.ordered_alpha_gamma = af.values == gft.values and aft.values == gf.values
    record("b", delta(af) == delta(aft), f"{delta(af)} vs {delta(aft)}")
    record("c", gorenstein_parameter(Wf) == gorenstein_parameter(Wft),
           f"{gorenstein_parameter(Wf)} vs {gorenstein_parameter(Wft)}")

    cramer = weights_by_cramer(input_rows(tf))
    closed = transpose_weights(tf).permuted(tf.perm)
    record("d", cramer == closed, f"{cramer} vs {closed}")

    phi_f = characteristic_function(Wf, af)
    phi_ft = characteristic_function(Wft, aft)
    dual = saito_dual(phi_f, d)
    record("e", Wft.d == d and dual == phi_ft, f"{dual} vs {phi_ft}")

    big_phi = monodromy_charpoly(tf)
    if Wf.is_reduced():
        try:
            oracle = milnor_algebra_oracle(Wf)
            got = eig_mult(dual, d)
            record("f", got == oracle, f"{got.mult} vs {oracle.mult}")
        except Exception as exc:
            record("f", False, str(exc))
        _, c_ft = reduce_weights(Wft)
        lhs = power_transform(eig_mult(phi_f, d), c_ft)
        rhs = eig_mult(big_phi, d)
        record("g", lhs == rhs, f"{lhs.mult} vs {rhs.mult}")
    else:
        record("f", None)
        record("g", None)

    if "h" in checks:
        depth = default_depth(Wf) if expansion_depth is None else expansion_depth
        record("h", _hilbert_matches(Wf, depth), f"depth {depth}")

    if "i" in checks:
        record("i", cusp_support(tf) is not None, "cusp monomials missing")

    if "j" not in checks:
        pass
    elif min(gf.values) >= 2:
        g = dynkin.t_graph(gf.values)
        want = (-1) ** (sum(gf.values) - 1) * delta(gf)
        got_disc = dynkin.reduced_discriminant(g)
        record("j", got_disc == want, f"{got_disc} vs {want}")
    else:
        record("j", None)

    if "k" not in checks:
        return rec
    try:
        Rt, _ = reduce_weights(Wft)
        oracle_t = milnor_algebra_oracle(Rt).lift(d)
        mine = eig_mult(big_phi, d)
        record("k", mine == oracle_t, f"{mine.mult} vs {oracle_t.mult}")
    except Exception as exc:
        record("k", False, str(exc))
    return rec


@dataclass
class VerifyReport:
    records: List[FormRecord]

    @property
    def counts(self) -> Dict[str, Dict[str, int]]:
        out = {k: {"pass": 0, "fail": 0, "skip": 0} for k in CHECKS}
        for r in self.records:
            for k, v in r.results.items():
                out[k]["pass" if v else "fail" if v is False else "skip"] += 1
        return out

    @property
    def failures(self) -> int:
        return sum(c["fail"] for c in self.counts.values())

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def summary(self) -> dict:
        return {"forms": len(self.records), "failures": self.failures, "checks": self.counts}

    def lines(self) -> Iterator[str]:
        for r in self.records:
            yield json.dumps(r.to_json(), sort_keys=True, ensure_ascii=False)
        yield json.dumps({"summary": self.summary()}, sort_keys=True)


def _check_star(args):
    return check_form(*args)


def run(forms: Iterable[TypedForm], depth: Optional[int] = None, workers: int = 1,
        checks: str = CHECKS) -> VerifyReport:
    """Check every form; results come back in enumeration order regardless of ``workers``."""
    jobs = [(tf, depth, i, checks) for i, tf in enumerate(forms)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_check_star, jobs, chunksize=16))
    else:
        records = [check_form(*j) for j in jobs]
    return VerifyReport(records)


def verify_bound(bound: int, depth: Optional[int] = None, workers: int = 1,
                 checks: str = CHECKS) -> VerifyReport:
    return run(enumerate_forms(bound), depth, workers, checks)


def sample_forms(bound: int, per_type: int) -> List[TypedForm]:
    """A deterministic spread of forms: evenly spaced picks from each type."""
    by_type: Dict[str, List[TypedForm]] = {}
    for tf in enumerate_forms(bound):
        by_type.setdefault(tf.type_tag, []).append(tf)
    out = []
    for forms in by_type.values():
        step = max(1, len(forms) // per_type)
        out.extend(forms[::step][:per_type])
    return out


def first_failures(report: VerifyReport, limit: int = 5) -> List[dict]:
    return [r.to_json() for r in report.records if not r.ok][:limit]

