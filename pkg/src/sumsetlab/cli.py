"""sumsetlab command line.

Every subcommand builds a ``Report`` and writes it as JSON or CSV to --out
(stdout by default). With --out and without --no-figure a PNG with the same
stem is written next to it. Exit codes: 0 success, 1 a verification
failed, 2 usage, input or budget error.
"""

import argparse
import csv
import io as _io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import repeat
from pathlib import Path

from . import __version__
from .errors import (BudgetExceeded, IncompleteFamilyError, InconclusiveError, SumsetLabError,
                     VerificationError, default_budget)
from .io import (SCHEMA_VERSION, Instance, InstanceError, atomic_write, builtin_corpus_dir,
                 dump_json, instance_from_obj, load_corpus, load_instance)
from .khovanskii import (fit_polynomial, general_pipeline, growth_consistency,
                         khovanskii_poly_simplex, khovanskii_thresholds, onset_refinement)
from .lattice import abstract_group, quotient_group
from .minimal import (K_of, b_minimal_elements, certified_useless_family, davenport_constant,
                      davenport_upper_bound, k_constant)
from .plotting import (bar_figure, growth_figure, speculate_figure, sumset_figure,
                       threshold_figure, verdict_figure)
from .points import PointSet, vsub
from .polytope import convex_hull, is_simplex, normalized_volume
from .solve import (bounded_kernel_basis, minimal_positive_solutions, positive_solution,
                    small_kernel_vector)
from .structure import (empirical_structure_onset, structure_thresholds, structure_verdicts,
                        verdict_consistency)
from .sumset import generated_lattice, growth_table, sumset_layers

EXIT_OK, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2


@dataclass
class Report:
    command: str
    results: dict
    provenance: dict
    table: tuple = ((), ())          # (header, rows) for CSV output
    caveats: list = field(default_factory=list)
    instance: Instance = None
    figure: object = None            # callable(path) or None
    failed: bool = False

    def to_json(self, argv, budget, elapsed=None):
        out = {
            "schema_version": SCHEMA_VERSION,
            "tool": f"sumsetlab {__version__}",
            "command": self.command,
            "argv": list(argv),
            "budget": budget,
            "results": self.results,
            "provenance": self.provenance,
            "caveats": self.caveats,
            "status": "verification_failed" if self.failed else "ok",
        }
        if self.instance is not None:
            out["instance"] = {"name": self.instance.name, "digest": self.instance.digest(),
                               "dim": self.instance.dim, "size": len(self.instance.points)}
        if elapsed is not None:
            out["wall_time_s"] = round(elapsed, 3)
        return out

    def to_csv(self):
        header, rows = self.table
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_cell(c) for c in row])
        return buf.getvalue()


def _cell(c):
    if isinstance(c, (list, tuple)):
        return " ".join(str(x) for x in c)
    if isinstance(c, bool):
        return "true" if c else "false"
    return "" if c is None else str(c)


def _points(ps):
    return [list(p) for p in ps]


def _frac(x):
    return str(x)


# ---------------------------------------------------------------- instances

def _instance(args):
    if getattr(args, "points", None):
        try:
            obj = {"name": "inline", "points": json.loads(args.points)}
        except json.JSONDecodeError as exc:
            raise InstanceError("--points", f"column {exc.colno}", exc.msg) from None
        return instance_from_obj(obj, "--points")
    if getattr(args, "instance", None):
        return load_instance(args.instance)
    raise InstanceError("arguments", "--instance", "an instance file (or --points) is required")


def _instances(args):
    if getattr(args, "corpus", None):
        return load_corpus(args.corpus)
    if getattr(args, "instance", None) or getattr(args, "points", None):
        return [_instance(args)]
    return load_corpus(builtin_corpus_dir())


def _simplex_frame(inst, basis_arg=None):
    """(A translated so a vertex is 0, B, the vertex) from a declared or detected simplex."""
    A = inst.points
    verts = None
    if basis_arg:
        verts = [tuple(v) for v in json.loads(basis_arg)]
    elif inst.basis is not None:
        verts = list(inst.basis)
    else:
        found = is_simplex(A)
        if found is None:
            raise InstanceError(inst.name, "$.basis", "hull is not a simplex; declare a basis")
        verts = list(found)
    for v in verts:
        if v not in A:
            raise InstanceError(inst.name, "$.basis", f"{list(v)} is not a point of A")
    v0 = verts[0]
    A0 = A.translate(tuple(-c for c in v0))
    B = [vsub(v, v0) for v in verts[1:]]
    return A0, B, v0


def _default_horizon(A, n_max, floor=None):
    d = A.dim
    return max(n_max, d + 3) if floor is None else max(n_max, floor)


# ---------------------------------------------------------------- commands

def cmd_sumset(args, budget):
    inst = _instance(args)
    A = inst.points
    N = args.n_max
    NA = sumset_layers(A, N, budget)[-1]
    res = {"N": N, "size": len(NA), "points": _points(NA)}
    rep = Report("sumset", res, {"size": "enumerated", "points": "enumerated"},
                 (("x",), [(p,) for p in NA]), instance=inst)
    if A.dim <= 2:
        rep.figure = lambda path: sumset_figure(path, A, NA, title=f"{inst.name}: {N}A")
    return rep


def cmd_growth(args, budget):
    inst = _instance(args)
    A = inst.points
    tab = growth_table(A, args.n_max, budget)
    res = {"n_max": args.n_max, "sizes": list(tab.sizes)}
    rep = Report("growth", res, {"sizes": "enumerated"},
                 (("N", "size", "source"), [(n, s, "enumerated") for n, s in
                                            enumerate(tab.sizes, 1)]), instance=inst)
    rep.figure = lambda path: growth_figure(path, tab.sizes, title=inst.name)
    return rep


def _fit(A, n_max, budget):
    r = convex_hull(A).affine_dim
    tab = growth_table(A, _default_horizon(A, n_max, r + 3), budget)
    return tab, fit_polynomial(tab, r)


def cmd_fit(args, budget):
    inst = _instance(args)
    tab, fit = _fit(inst.points, args.n_max, budget)
    P = fit.polynomial
    res = {"horizon": fit.horizon, "onset": fit.onset, "polynomial": str(P),
           "coefficients": P.to_json(), "sizes": list(tab.sizes)}
    rows = [(n, s, _frac(P(n)), P(n) == s) for n, s in enumerate(tab.sizes, 1)]
    rep = Report("fit", res, {"sizes": "enumerated", "polynomial": "enumerated",
                              "onset": "enumerated"},
                 (("N", "size", "polynomial", "agrees"), rows), instance=inst,
                 caveats=[f"onset is empirical: the fit is only checked up to N = {fit.horizon}"])
    rep.figure = lambda path: growth_figure(path, tab.sizes, P, fit.onset, inst.name)
    return rep


def cmd_poly_general(args, budget):
    inst = _instance(args)
    A = inst.points
    fam = certified_useless_family(A, max_cap=args.cap, budget=budget)
    gp = general_pipeline(fam, budget)
    tab, fit = _fit(A, args.n_max, budget)
    agrees = gp.polynomial == fit.polynomial
    res = {"ordering": _points(fam.ordering), "minimal_useless": [list(x) for x in fam.minimal_useless],
           "cap_used": fam.cap_used, "certified": fam.certified, "polynomial": str(gp.polynomial),
           "coefficients": gp.polynomial.to_json(), "onset": gp.onset,
           "fit_polynomial": str(fit.polynomial), "agrees_with_fit": agrees}
    rows = [(n, s, gp.counts.evaluate(n), _frac(gp.polynomial(n))) for n, s in enumerate(tab.sizes, 1)]
    rep = Report("poly-general", res,
                 {"minimal_useless": "enumerated", "polynomial": "formula", "onset": "formula",
                  "fit_polynomial": "enumerated"},
                 (("N", "enumerated", "formula_count", "polynomial"), rows), instance=inst)
    if not fam.certified:
        rep.caveats.append(f"useless family not certified up to l1 norm {fam.cap_used}")
    elif not agrees:
        rep.failed = True
    rep.figure = lambda path: growth_figure(path, tab.sizes, gp.polynomial, gp.onset, inst.name)
    return rep


def cmd_poly_simplex(args, budget):
    inst = _instance(args)
    A = inst.points
    sp = khovanskii_poly_simplex(A, cap=args.cap, budget=budget)
    tab = growth_table(A, _default_horizon(A, args.n_max), budget)
    cosets = []
    for c in sp.cosets:
        h, refined = onset_refinement(c)
        cosets.append({"key": [_frac(x) for x in c.key], "elements": _points(c.elements),
                       "lengths": list(c.lengths), "deltas": list(c.deltas), "n_full": c.n_full,
                       "h": h, "refined_onset": refined,
                       "polynomial": str(c.counts.polynomial()), "terms": c.counts.to_json()})
    res = {"vertex": list(sp.vertex), "basis": _points(sp.basis), "K": sp.K,
           "cosets": cosets, "polynomial": str(sp.total), "coefficients": sp.total.to_json(),
           "onset_bound": sp.onset, "refined_onset": sp.refined_onset}
    rows = [(n, s, sp.counts.evaluate(n), _frac(sp.total(n))) for n, s in enumerate(tab.sizes, 1)]
    rep = Report("poly-simplex", res,
                 {"cosets": "enumerated", "polynomial": "formula", "onset_bound": "formula",
                  "refined_onset": "formula"},
                 (("N", "enumerated", "formula_count", "polynomial"), rows), instance=inst)
    if any(r[1] != r[2] for r in rows):
        rep.failed = True
        rep.caveats.append("coset formula disagrees with enumeration")
    rep.figure = lambda path: growth_figure(path, tab.sizes, sp.total,
                                            max(1, sp.refined_onset), inst.name)
    return rep


def cmd_structure(args, budget):
    inst = _instance(args)
    A = inst.points
    verdicts = structure_verdicts(A, args.n_max, budget)
    so = empirical_structure_onset(A, args.n_max, verdicts=verdicts)
    checks = {t.name: verdict_consistency(t, verdicts) for t in structure_thresholds(A)}
    res = {"n_max": args.n_max, "onset": so.onset,
           "verdicts": [{"N": v.N, "size": v.size, "rhs_size": v.rhs_size, "equal": v.equal,
                         "inclusion": v.inclusion,
                         "witness": list(v.witness) if v.witness else None} for v in verdicts],
           "threshold_checks": checks}
    rows = [(v.N, v.size, v.rhs_size, v.equal, v.inclusion, v.witness) for v in verdicts]
    rep = Report("structure", res, {"verdicts": "enumerated", "onset": "enumerated"},
                 (("N", "size", "rhs_size", "equal", "inclusion", "witness"), rows), instance=inst)
    if so.onset is None:
        rep.caveats.append(f"identity does not hold at N = {args.n_max}")
    if not all(v.inclusion for v in verdicts) or "violated" in checks.values():
        rep.failed = True
    rep.figure = lambda path: verdict_figure(path, verdicts, inst.name)
    return rep


def cmd_thresholds(args, budget):
    inst = _instance(args)
    A = inst.points
    kh = khovanskii_thresholds(A)
    st = structure_thresholds(A)
    tab, fit = _fit(A, args.n_max, budget)
    verdicts = structure_verdicts(A, args.n_max, budget)
    so = empirical_structure_onset(A, args.n_max, verdicts=verdicts)
    rows = []
    for family, ts, check in (("khovanskii", kh, lambda t: growth_consistency(t, tab.sizes, fit)),
                              ("structure", st, lambda t: verdict_consistency(t, verdicts))):
        for t in ts:
            rows.append((family, t.name, str(t.value), t.kind, t.applicable, check(t), "formula"))
    res = {"khovanskii": [t.to_json() for t in kh], "structure": [t.to_json() for t in st],
           "empirical": {"n_kh": fit.onset, "n_kh_horizon": fit.horizon, "n_str": so.onset,
                         "n_str_horizon": args.n_max},
           "checks": [{"family": r[0], "name": r[1], "status": r[5]} for r in rows]}
    rep = Report("thresholds", res, {"khovanskii": "formula", "structure": "formula",
                                     "empirical": "enumerated"},
                 (("family", "name", "value", "kind", "applicable", "status", "source"), rows),
                 instance=inst)
    rep.failed = any(r[5] == "violated" for r in rows)
    rep.figure = lambda path: threshold_figure(path, kh + st, fit.onset, inst.name)
    return rep


def _group_from_args(args):
    if args.group:
        return abstract_group([int(x) for x in args.group.split(",")]), None, None
    inst = _instance(args)
    A0, B, _ = _simplex_frame(inst, args.basis)
    G = quotient_group(generated_lattice(A0), generated_lattice(PointSet(B, A0.dim)))
    return G, A0, B


def cmd_davenport(args, budget):
    G, A0, B = _group_from_args(args)
    inst = None if args.group else _instance(args)
    D = davenport_constant(G, budget)
    bound = davenport_upper_bound(G)
    res = {"invariant_factors": list(G.invariant_factors), "order": G.order,
           "exponent": G.exponent, "D": D, "upper_bound": f"{bound:.6f}"}
    prov = {"D": "enumerated", "upper_bound": "bound"}
    rows = [("D", D, "enumerated"), ("upper_bound", f"{bound:.6f}", "bound")]
    failed = D > bound + 1e-9
    if A0 is not None:
        H = sorted({G.project(a) for a in A0} - {G.zero()})
        k = k_constant(G, H, budget)
        fam = b_minimal_elements(A0, B, args.cap, budget)
        K = K_of(A0, B, family=fam) if fam.complete else None
        res.update({"H": [list(h) for h in H], "k": k, "K": K,
                    "k_below_D": k < D, "k_within_saving": k <= G.order - len(H),
                    "K_within_k": None if K is None else K <= k})
        prov.update({"k": "enumerated", "K": "enumerated"})
        rows += [("k", k, "enumerated"), ("K", K, "enumerated")]
        failed = failed or k >= D or k > G.order - len(H) or (K is not None and K > k)
    rep = Report("davenport", res, prov, (("quantity", "value", "source"), rows), instance=inst)
    rep.failed = failed
    return rep


def cmd_minimal(args, budget):
    inst = _instance(args)
    A0, B, v0 = _simplex_frame(inst, args.basis)
    fam = b_minimal_elements(A0, B, args.cap, budget)
    res = {"translated_by": list(v0), "B": _points(B), "complete": fam.complete, "cap": fam.cap,
           "elements": [{"u": list(u), "length": n} for u, n in fam.elements],
           "K": fam.max_length() if fam.complete else None}
    rep = Report("minimal", res, {"elements": "enumerated", "K": "enumerated"},
                 (("u", "length", "source"), [(u, n, "enumerated") for u, n in fam.elements]),
                 instance=inst)
    if not fam.complete:
        rep.caveats.append(f"S(A,B) did not close within {args.cap} layers")
    lengths = [n for _, n in fam.elements]
    rep.figure = lambda path: bar_figure(path, sorted(set(lengths)),
                                         [lengths.count(n) for n in sorted(set(lengths))],
                                         "representation length", inst.name)
    return rep


def _matrix(text, what):
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(what, f"column {exc.colno}", exc.msg) from None
    return value


def cmd_solve(args, budget):
    if not args.matrix:
        raise InstanceError("arguments", "--matrix", "a matrix is required")
    M = _matrix(args.matrix, "--matrix")
    op = args.op
    if op == "kernel":
        X = small_kernel_vector(M)
        res = {"op": op, "vector": list(X)}
        rows = [("vector", list(X))]
    elif op == "positive":
        b = _matrix(args.rhs, "--rhs")
        x = _matrix(args.witness, "--witness")
        y = positive_solution(M, b, x)
        res = {"op": op, "solution": list(y)}
        rows = [("solution", list(y))]
    elif op == "minimal":
        b = _matrix(args.rhs, "--rhs")
        fam = minimal_positive_solutions(M, b, args.n1, args.box_cap, budget)
        res = {"op": op, "solutions": [list(s) for s in fam.solutions], "box": fam.box,
               "lemma_bound": str(fam.lemma_bound), "certified": fam.certified}
        rows = [("solution", list(s)) for s in fam.solutions]
    else:
        kb = bounded_kernel_basis(M)
        res = {"op": op, "vectors": [list(v) for v in kb.vectors], "norm_product": kb.norm_product,
               "bound_squared": str(kb.bound_squared), "within_bound": kb.within_bound}
        rows = [("vector", list(v)) for v in kb.vectors]
    rep = Report("solve", res, {k: "enumerated" for k in res if k != "op"},
                 (("kind", "value"), rows))
    if op == "minimal" and not res["certified"]:
        rep.caveats.append("box cap is below the lemma bound; family may be incomplete")
    if op == "basis" and not res["within_bound"]:
        rep.failed = True
    return rep


def _speculate_row(inst, n_cap, budget):
    A = inst.points
    nvol = normalized_volume(A)
    r = convex_hull(A).affine_dim
    horizon = min(n_cap, max(r + 3, nvol + r + 2))
    tab = growth_table(A, horizon, budget)
    fit = fit_polynomial(tab, r)
    so = empirical_structure_onset(A, horizon, budget)
    chain = None if so.onset is None else so.onset <= fit.onset <= nvol
    return {"name": inst.name, "d": A.dim, "nvol": nvol, "horizon": horizon,
            "n_str": so.onset, "n_kh": fit.onset, "chain_holds": chain}


def _fan_out(fn, instances, n_max, budget, jobs):
    """Per-instance rows in input order; worker processes when jobs > 1."""
    if jobs <= 1 or len(instances) < 2:
        return [fn(inst, n_max, budget) for inst in instances]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, instances, repeat(n_max), repeat(budget)))


def cmd_speculate(args, budget):
    rows = _fan_out(_speculate_row, _instances(args), args.n_max, budget, args.jobs)
    res = {"rows": rows, "all_consistent": all(r["chain_holds"] is not False for r in rows)}
    rep = Report("speculate", res, {"rows": "enumerated"},
                 (("name", "d", "nvol", "horizon", "n_str", "n_kh", "chain_holds"),
                  [tuple(r[k] for k in ("name", "d", "nvol", "horizon", "n_str", "n_kh",
                                        "chain_holds")) for r in rows]),
                 caveats=["the inequality chain is open; it is recorded, not asserted",
                          "empirical onsets are only valid up to each horizon"])
    rep.figure = lambda path: speculate_figure(path, rows)
    return rep


def _corpus_row(inst, n_max, budget):
    A = inst.points
    exp = inst.expected or {}
    r = convex_hull(A).affine_dim
    want = exp.get("sizes")
    horizon = max(n_max, r + 3, len(want or ()))
    if "n_kh" in exp:
        horizon = max(horizon, exp["n_kh"] + r + 2)
    tab = growth_table(A, horizon, budget)
    fit = fit_polynomial(tab, r)
    verdicts = structure_verdicts(A, min(horizon, n_max), budget)
    so = empirical_structure_onset(A, min(horizon, n_max), verdicts=verdicts)
    problems = []
    if want is not None and list(tab.sizes[:len(want)]) != list(want):
        problems.append("sizes")
    if "n_kh" in exp and fit.onset != exp["n_kh"]:
        problems.append("n_kh")
    if "n_str" in exp and so.onset != exp["n_str"]:
        problems.append("n_str")
    if not all(v.inclusion for v in verdicts):
        problems.append("inclusion")
    for t in khovanskii_thresholds(A):
        if growth_consistency(t, tab.sizes, fit) == "violated":
            problems.append(f"khovanskii:{t.name}")
    for t in structure_thresholds(A):
        if verdict_consistency(t, verdicts) == "violated":
            problems.append(f"structure:{t.name}")
    return {"name": inst.name, "digest": inst.digest(), "n_kh": fit.onset, "n_str": so.onset,
            "polynomial": str(fit.polynomial), "ok": not problems, "problems": problems}


def cmd_corpus(args, budget):
    rows = _fan_out(_corpus_row, _instances(args), args.n_max, budget, args.jobs)
    rep = Report("corpus", {"rows": rows, "all_ok": all(r["ok"] for r in rows)},
                 {"rows": "enumerated"},
                 (("name", "n_kh", "n_str", "polynomial", "ok", "problems"),
                  [(r["name"], r["n_kh"], r["n_str"], r["polynomial"], r["ok"], r["problems"])
                   for r in rows]))
    rep.failed = not rep.results["all_ok"]
    rep.figure = lambda path: bar_figure(path, [r["name"] for r in rows],
                                         [r["n_kh"] for r in rows], "", "empirical onset")
    return rep


COMMANDS = {
    "sumset": (cmd_sumset, "the sumset NA for N = --n-max"),
    "growth": (cmd_growth, "|NA| for N = 1..n-max"),
    "fit": (cmd_fit, "interpolated polynomial and empirical onset"),
    "poly-general": (cmd_poly_general, "polynomial from minimally useless vectors"),
    "poly-simplex": (cmd_poly_simplex, "per-coset polynomials for a simplex hull"),
    "structure": (cmd_structure, "verify the structure identity for N = 1..n-max"),
    "thresholds": (cmd_thresholds, "evaluate onset bounds and check them"),
    "davenport": (cmd_davenport, "D(G), k(G,H) and K(A,B)"),
    "minimal": (cmd_minimal, "B-minimal elements and K(A,B)"),
    "solve": (cmd_solve, "bounded integer linear algebra"),
    "speculate": (cmd_speculate, "record empirical onsets against the normalized volume"),
    "corpus": (cmd_corpus, "regression run over an instance directory"),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--instance", metavar="PATH")
    common.add_argument("--points", metavar="JSON", help="inline point list, e.g. '[[0],[2],[3]]'")
    common.add_argument("--corpus", metavar="DIR")
    common.add_argument("--n-max", type=int, default=10)
    common.add_argument("--budget", type=int, default=None,
                        help="work budget (default: $SUMSETLAB_BUDGET or 10^7)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--no-figure", action="store_true")
    common.add_argument("--timing", action="store_true", help="include wall time (breaks byte stability)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for corpus runs")
    common.add_argument("--cap", type=int, default=64, help="layer / norm cap for searches")
    common.add_argument("--basis", metavar="JSON", help="simplex vertices, e.g. '[[0,0],[2,0],[0,3]]'")

    parser = argparse.ArgumentParser(prog="sumsetlab", description="Exact iterated sumsets in Z^d.")
    parser.add_argument("--version", action="version", version=f"sumsetlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "davenport":
            p.add_argument("--group", metavar="FACTORS", help="invariant factors, e.g. 2,2")
        if name == "solve":
            p.add_argument("--op", choices=("kernel", "positive", "minimal", "basis"), default="kernel")
            p.add_argument("--matrix", metavar="JSON")
            p.add_argument("--rhs", metavar="JSON", default="null")
            p.add_argument("--witness", metavar="JSON", default="null")
            p.add_argument("--n1", type=int, default=1)
            p.add_argument("--box-cap", type=int, default=50)
    return parser


def _emit(rep, args, argv, budget, elapsed):
    if args.format == "csv":
        text = rep.to_csv()
    else:
        text = dump_json(rep.to_json(argv, budget, elapsed if args.timing else None))
    if args.out:
        atomic_write(args.out, text)
        if rep.figure is not None and not args.no_figure:
            rep.figure(str(Path(args.out).with_suffix(".png")))
    else:
        sys.stdout.write(text)


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    budget = args.budget if args.budget is not None else default_budget()
    if args.n_max < 1:
        print("error: --n-max must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    handler = COMMANDS[args.command][0]
    start = time.perf_counter()
    try:
        rep = handler(args, budget)
    except InstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (IncompleteFamilyError, InconclusiveError, SumsetLabError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(rep, args, argv, budget, time.perf_counter() - start)
    return EXIT_VERIFY if rep.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
