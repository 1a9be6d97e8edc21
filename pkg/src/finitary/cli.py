"""Command line front end.

Exit status: 0 on success, 1 on domain errors (non-invertible input, bad
witness, ...), 2 on I/O or parse errors.  Output is JSON unless
``--format table`` is given.
"""

import argparse
import json
import os
import random
import sys

from . import io
from .errors import DomainError, InvalidWitness, NotAWitness, ParseError, PosetMismatch
from .field import parse_field
from .isomorphism import conjugation_iso, identity_iso, induced_iso, recover_poset_map
from .poset import IsoWitness, chain, enumerate_posets, order_sum, poset_isomorphism
from .series import (
    c_alpha, convolve, extend_by_zero, invert, is_invertible, is_radical, mobius, zeta,
)
from .structure import (
    conjugate_to_diagonal, debug_identities, regular_factorization, regular_witness,
    restrict_to_component,
)

VERBS = ["mobius", "invert", "multiply", "radical-check", "idempotent-diagonalize",
         "regular-factor", "superregular-check", "iso", "recover-iso",
         "demo-finitarity", "enumerate"]


def _read_series(path, field):
    d = io.load_json(path)
    s = io.series_from_dict(d, field, base_dir=os.path.dirname(os.path.abspath(path)),
                            where=path)
    return s, d.get("poset")


def _series_doc(s, ref):
    return io.series_to_dict(s, ref)


def _series_rows(s):
    return [{"lo": x, "hi": y, "value": str(v)} for (x, y), v in s.items()]


# -- verbs: each returns (json document, table rows or sections) ----------

def cmd_mobius(args, field):
    p = io.load_poset(args.poset)
    mu = mobius(p, field)
    # list every segment, zeros included, so the table is complete
    doc = {"poset": args.poset,
           "entries": [[x, y, str(mu[x, y])] for x, y in p.segments()]}
    rows = [{"lo": x, "hi": y, "mu": str(mu[x, y])} for x, y in p.segments()]
    return doc, rows


def cmd_invert(args, field):
    s, ref = _read_series(args.series, field)
    inv = invert(s)
    return _series_doc(inv, ref), _series_rows(inv)


def cmd_multiply(args, field):
    s, ref = _read_series(args.series[0], field)
    for path in args.series[1:]:
        t, _ = _read_series(path, field)
        s = convolve(s, t)
    return _series_doc(s, ref), _series_rows(s)


def cmd_radical_check(args, field):
    s, _ = _read_series(args.series, field)
    bad = [x for x, v in s.diagonal().items() if not v.is_zero()]
    doc = {"radical": is_radical(s), "nonzero_diagonal": bad}
    return doc, [{"radical": str(doc["radical"]).lower(), "nonzero_diagonal": " ".join(bad)}]


def cmd_idempotent_diagonalize(args, field):
    s, ref = _read_series(args.series, field)
    eps, beta = conjugate_to_diagonal(s)
    doc = {"epsilon": _series_doc(eps, ref), "conjugator": _series_doc(beta, ref)}
    return doc, {"epsilon": _series_rows(eps), "conjugator": _series_rows(beta)}


def cmd_regular_factor(args, field):
    s, ref = _read_series(args.series, field)
    if args.witness:
        chi, _ = _read_series(args.witness, field)
    else:
        chi = regular_witness(s)
        if chi is None:
            raise NotAWitness("element is not regular: a * chi * a = a has no solution")
    fac = regular_factorization(s, chi)
    doc = {"witness": _series_doc(chi, ref), "beta": _series_doc(fac.beta, ref),
           "epsilon": _series_doc(fac.epsilon, ref), "gamma": _series_doc(fac.gamma, ref)}
    return doc, {k: _series_rows(v) for k, v in
                 (("witness", chi), ("beta", fac.beta), ("epsilon", fac.epsilon),
                  ("gamma", fac.gamma))}


def cmd_superregular_check(args, field):
    s, _ = _read_series(args.series, field)
    comps = []
    for comp in s.poset.connected_components():
        r = restrict_to_component(s, comp)
        status = "zero" if r.is_zero() else "invertible" if is_invertible(r) else "neither"
        comps.append({"elements": comp, "status": status})
    ok = all(c["status"] != "neither" for c in comps)
    doc = {"superregular": ok, "components": comps}
    rows = [{"component": " ".join(c["elements"]), "status": c["status"]} for c in comps]
    return doc, rows


def cmd_iso(args, field):
    p, q = io.load_poset(args.p), io.load_poset(args.q)
    w = poset_isomorphism(p, q)
    doc = {"isomorphic": w is not None, "mapping": None if w is None else w.mapping}
    if w is None:
        rows = [{"isomorphic": "false"}]
    else:
        rows = [{"source": k, "target": v} for k, v in w.mapping.items()]
    return doc, rows


def _build_iso(p, q, specs, field):
    iso = identity_iso(p)
    for path in specs:
        d = io.load_json(path)
        if not isinstance(d, dict):
            raise ParseError(f"{path}: expected a JSON object")
        base = os.path.dirname(os.path.abspath(path))
        if "entries" in d and "poset_map" not in d and "conjugator" not in d:
            d = {"conjugator": d}
        if not ("poset_map" in d or "conjugator" in d):
            raise ParseError(f"{path}: expected 'poset_map' and/or 'conjugator'")
        for key, val in d.items():
            cur = iso.target
            if key == "poset_map":
                if not isinstance(val, dict) or not all(
                        isinstance(k, str) and isinstance(v, str) for k, v in val.items()):
                    raise ParseError(f"{path}: 'poset_map' must map ids to ids")
                iso = iso.then(induced_iso(IsoWitness(cur, q, dict(val))))
            elif key == "conjugator":
                if isinstance(val, str):
                    sp = os.path.join(base, val)
                    u = io.series_from_dict(io.load_json(sp), field, poset=cur, where=sp)
                else:
                    u = io.series_from_dict(val, field, poset=cur, where=path)
                iso = iso.then(conjugation_iso(u))
            else:
                raise ParseError(f"{path}: unknown key {key!r}")
    if iso.target != q:
        raise PosetMismatch("composed isomorphism does not end on the target poset")
    return iso


def cmd_recover_iso(args, field):
    p, q = io.load_poset(args.p), io.load_poset(args.q)
    iso = _build_iso(p, q, args.specs, field)
    if args.seed is not None:
        bad = iso.spot_check(field, random.Random(args.seed))
        if bad:
            raise InvalidWitness(f"mapping fails the spot check: not {', '.join(bad)}")
    phi = recover_poset_map(iso, field)
    doc = {"mapping": phi.mapping}
    return doc, [{"source": k, "target": v} for k, v in phi.mapping.items()]


def cmd_demo_finitarity(args, field):
    rows = []
    for k in range(1, args.n + 1):
        lower, upper = chain(k, "a"), chain(k, "b")
        P = order_sum(lower, upper)
        # zeta of the lower chain, extended by zero to the order sum
        z = extend_by_zero(zeta(lower, field), P)
        cross = sum(1 for x, y in P.segments() if x in lower and y in upper)
        rows.append({"n": k, "c_alpha": c_alpha(z, "a0", f"b{k - 1}"),
                     "cross_segments": cross})
    return {"n": args.n, "rows": rows}, rows


def cmd_enumerate(args, field):
    reps = enumerate_posets(args.n)
    doc = {"n": args.n, "count": len(reps), "posets": [p.to_dict() for p in reps]}
    rows = [{"index": i, "hasse": " ".join(f"{a}<{b}" for a, b in p.hasse) or "-"}
            for i, p in enumerate(reps)]
    return doc, rows


def render_table(rows):
    if not rows:
        return "(empty)\n"
    cols = list(rows[0])
    cells = [[str(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip(),
             "  ".join("-" * w for w in widths)]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def _render(table):
    if isinstance(table, dict):
        return "".join(f"[{name}]\n{render_table(rows)}" for name, rows in table.items())
    return render_table(table)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help="coefficient field: q or fp:<p>")
    common.add_argument("--format", choices=["json", "table"], default="json")
    common.add_argument("--debug-identities", action="store_true",
                        help="check intermediate identities inside idempotent diagonalization")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized verification")

    ap = argparse.ArgumentParser(prog="finitary", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="verb", required=True)

    def verb(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    verb("mobius", cmd_mobius, "Mobius function of a poset").add_argument("poset")
    verb("invert", cmd_invert, "inverse of a series").add_argument("series")
    verb("multiply", cmd_multiply, "convolution product of series").add_argument(
        "series", nargs="+")
    verb("radical-check", cmd_radical_check, "is the series in the radical").add_argument("series")
    verb("idempotent-diagonalize", cmd_idempotent_diagonalize,
         "conjugate an idempotent to its diagonal").add_argument("series")
    sp = verb("regular-factor", cmd_regular_factor, "factor a regular element")
    sp.add_argument("series")
    sp.add_argument("--witness", help="series chi with a chi a = a (searched if omitted)")
    verb("superregular-check", cmd_superregular_check,
         "componentwise invertible-or-zero test").add_argument("series")
    sp = verb("iso", cmd_iso, "order isomorphism between two posets")
    sp.add_argument("p")
    sp.add_argument("q")
    sp = verb("recover-iso", cmd_recover_iso, "recover the poset map of an algebra isomorphism")
    sp.add_argument("p")
    sp.add_argument("q")
    sp.add_argument("specs", nargs="+", help="poset_map / conjugator files, applied in order")
    verb("demo-finitarity", cmd_demo_finitarity,
         "c_alpha growth on truncated order sums").add_argument("--n", type=int, default=6)
    verb("enumerate", cmd_enumerate, "posets up to isomorphism").add_argument(
        "--n", type=int, required=True)
    return ap


def run(argv, out=None, err=None):
    """Run one command; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        field = parse_field(args.field)
        with debug_identities(args.debug_identities):
            doc, table = args.func(args, field)
    except ParseError as e:
        print(f"error: {e}", file=err)
        return 2
    except OSError as e:
        print(f"error: {e.filename or ''}: {e.strerror or e}", file=err)
        return 2
    except DomainError as e:
        print(f"error: {type(e).__name__}: {e}", file=err)
        return 1
    if args.format == "json":
        out.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(_render(table))
    return 0


def main(argv=None):
    try:
        code = run(sys.argv[1:] if argv is None else argv)
    except SystemExit as e:
        code = e.code
    sys.exit(code)


if __name__ == "__main__":
    main()
