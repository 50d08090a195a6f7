"""Command-line front end: ``bhdual <subcommand> ...``.

Exit status is 0 on success, 1 on unparsable or unclassifiable input and 2
when a verification run or a table regeneration finds a mismatch.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional, Sequence, TextIO

from . import dynkin, tables, verify
from .atlas import default_atlas
from .errors import DualityError, PolynomialSyntaxError
from .invariants import (dolgachev, delta, gabrielov, gorenstein_parameter, milnor_number,
                         orbit_invariants)
from .invertible import (canonical_weights, classify, normal_form_polynomial, reduce_weights,
                         transpose)
from .poly import parse_polynomial, render
from .series import characteristic_function, monodromy_charpoly, saito_dual

SCHEMA = 1


def _is_polynomial(text: str) -> bool:
    return re.search(r"[xyz]", text) is not None


def _resolve(text: str) -> str:
    """Polynomial text, either given directly or through an atlas name."""
    return text if _is_polynomial(text) else default_atlas().lookup(text).f


def _emit(out: TextIO, fmt: str, record: dict, text_lines: Sequence[str]) -> None:
    if fmt == "json":
        out.write(json.dumps({"schema": SCHEMA, **record}, ensure_ascii=False) + "\n")
    else:
        for line in text_lines:
            out.write(line + "\n")


def _t(v) -> str:
    return ",".join(str(x) for x in v)


# -- subcommands ---------------------------------------------------------------


def cmd_classify(args, out: TextIO) -> int:
    p = parse_polynomial(_resolve(args.input))
    tf = classify(p)
    W = canonical_weights(tf)
    rec = {**tf.to_json(), "normal_form": render(normal_form_polynomial(tf)),
           "weights": W.as_list()}
    _emit(out, args.format, rec, [
        f"type: {tf.type_tag}",
        f"params: {_t(tf.params)}",
        f"perm: {tf.perm_text}",
        f"normal form: {rec['normal_form']}",
        f"weights: {W}",
    ])
    return 0


def invariants_record(text: str) -> dict:
    p = parse_polynomial(text)
    tf = classify(p)
    ft = transpose(p)
    tft = classify(ft)
    Wf, Wft = canonical_weights(tf), canonical_weights(tft)
    af, aft = dolgachev(tf), dolgachev(tft)
    gf = gabrielov(tf)
    a_W = gorenstein_parameter(Wf)
    phi = characteristic_function(Wf, af)
    rec = {
        "f": render(p),
        "ft": render(ft),
        "type": tf.type_tag,
        "params": list(tf.params),
        "perm": tf.perm_text,
        "alpha": list(af.sorted()),
        "alpha_table_order": list(af.values),
        "gamma": list(gf.sorted()),
        "gamma_table_order": list(gf.values),
        "W_f": Wf.as_list(),
        "W_ft": Wft.as_list(),
        "c_f": reduce_weights(Wf)[1],
        "c_ft": reduce_weights(Wft)[1],
        "a_W": a_W,
        "Delta": delta(af),
        "mu": milnor_number(Wf),
        "mu_ft": milnor_number(Wft),
        "beta": (orbit_invariants(af.sorted(), a_W).to_json() if a_W >= 1 else None),
        "phi": phi.render(),
        "phi_star": saito_dual(phi, Wf.d).render(),
        "phi_ft": characteristic_function(Wft, aft).render(),
        "Phi_ft": monodromy_charpoly(tf).render(),
    }
    return rec


def cmd_invariants(args, out: TextIO) -> int:
    rec = invariants_record(_resolve(args.input))
    lines = []
    for k, v in rec.items():
        if isinstance(v, list):
            v = " ".join(f"({_t(x)})" for x in v) if v and isinstance(v[0], list) else _t(v)
        lines.append(f"{k}: {'-' if v is None else v}")
    _emit(out, args.format, rec, lines)
    return 0


def cmd_transpose(args, out: TextIO) -> int:
    ft = render(transpose(parse_polynomial(_resolve(args.input))))
    _emit(out, args.format, {"ft": ft}, [ft])
    return 0


def cmd_dual(args, out: TextIO) -> int:
    name = default_atlas().dual_name(args.input)
    _emit(out, args.format, {"input": args.input, "dual": name}, [name])
    return 0


def cmd_dynkin(args, out: TextIO) -> int:
    if args.gamma is None and args.extend is None:
        raise SystemExit("dynkin: give --gamma, --extend, or both")
    entry = default_atlas().lookup(args.extend) if args.extend else None
    if args.gamma is not None:
        gamma = tuple(int(x) for x in args.gamma.split(","))
    else:
        gamma = tuple(g for g, _ in entry.delta_pairs)
    g = dynkin.t_graph(gamma, double_weight=args.double_weight)
    if entry is not None:
        if not entry.delta_pairs or entry.a_W is None:
            raise SystemExit(f"dynkin: {entry.name} has no extension data")
        pairs = list(entry.delta_pairs)
        if sorted(gamma) != sorted(p[0] for p in pairs):
            raise SystemExit(f"dynkin: --gamma {_t(gamma)} does not match {entry.name}")
        # line the (γ, δ) pairs up with the arms in the order given
        ordered = []
        for gam in gamma:
            k = next(i for i, p in enumerate(pairs) if p[0] == gam)
            ordered.append(pairs.pop(k))
        g = dynkin.extend_bimodal(g, entry.a_W, ordered)
    if args.format == "dot":
        out.write(dynkin.to_dot(g))
        return 0
    rec = {**g.to_json(), "gamma": list(gamma),
           "gram_determinant": dynkin.gram_determinant(g), "corank": dynkin.corank(g)}
    if entry is None:
        rec["reduced_discriminant"] = dynkin.reduced_discriminant(g)
    lines = [f"vertices: {g.n}", f"edges: {len(g.edges)}"]
    lines += [f"  {i} -- {j}" + ("" if w == dynkin.SOLID else f" ({w})") for i, j, w in g.edges]
    lines += [f"gram determinant: {rec['gram_determinant']}", f"corank: {rec['corank']}"]
    if "reduced_discriminant" in rec:
        lines.append(f"reduced discriminant: {rec['reduced_discriminant']}")
    _emit(out, args.format, rec, lines)
    return 0


def cmd_verify(args, out: TextIO) -> int:
    report = verify.verify_bound(args.bound, args.depth, workers=args.workers)
    if args.format == "json":
        for line in report.lines():
            out.write(line + "\n")
    else:
        s = report.summary()
        out.write(f"forms: {s['forms']}\nfailures: {s['failures']}\n")
        for k, c in s["checks"].items():
            out.write(f"  {k}: pass {c['pass']} fail {c['fail']} skip {c['skip']}\n")
        for rec in verify.first_failures(report):
            out.write(json.dumps(rec, ensure_ascii=False) + "\n")
    return 0 if report.ok else 2


def cmd_tables(args, out: TextIO) -> int:
    which = tables.WHICH if args.which == "all" else (args.which,)
    diffs = [tables.regenerate(w) for w in which]
    if args.format == "json":
        rec = {d.which: {"ok": d.ok, "diff": d.diff} for d in diffs}
        _emit(out, "json", {"tables": rec}, [])
    else:
        for d in diffs:
            out.write(f"{d.which}: {'ok' if d.ok else 'MISMATCH'} ({len(d.stored)} rows)\n")
            for line in d.diff:
                out.write(line + "\n")
    return 0 if all(d.ok for d in diffs) else 2


# -- plumbing ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bhdual", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, formats=("text", "json"), default="text"):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=formats, default=default)
        p.set_defaults(func=func)
        return p

    for name, func, help_text in (
        ("classify", cmd_classify, "type, parameters and weights of a polynomial"),
        ("invariants", cmd_invariants, "full invariant record"),
        ("transpose", cmd_transpose, "transposed polynomial"),
        ("dual", cmd_dual, "name of the strange dual"),
    ):
        p = add(name, func, help_text)
        p.add_argument("input", help="polynomial such as 'x^2+y^3+z^7', or an atlas name")

    p = add("dynkin", cmd_dynkin, "T-graph and bimodal extensions", ("text", "json", "dot"))
    p.add_argument("--gamma", help="comma-separated γ1,γ2,γ3")
    p.add_argument("--extend", metavar="NAME", help="extend by the atlas entry's chain")
    p.add_argument("--double-weight", type=int, default=dynkin.DOUBLE,
                   help="Gram entry of the double edge (default %(default)s)")

    p = add("verify", cmd_verify, "check every enumerated form")
    p.add_argument("--bound", type=int, default=6)
    p.add_argument("--depth", type=int, default=None,
                   help="Poincaré expansion depth (default min(2d, 400))")
    p.add_argument("--workers", type=int, default=1)

    p = add("tables", cmd_tables, "regenerate the tables and diff against the atlas")
    p.add_argument("--which", choices=("all",) + tables.WHICH, default="all")
    return parser


def _report_error(exc: Exception, fmt: str, err: TextIO) -> None:
    payload = {"kind": type(exc).__name__, "message": str(exc).splitlines()[0]}
    if isinstance(exc, PolynomialSyntaxError):
        payload["position"] = exc.position
    if fmt == "json":
        err.write(json.dumps({"schema": SCHEMA, "error": payload}, ensure_ascii=False) + "\n")
    else:
        err.write(f"error: {payload['kind']}: {exc}\n")


def run(argv: Optional[List[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except DualityError as exc:
        _report_error(exc, args.format, err)
        return 1


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
