"""Command-line front end.  Every command prints one JSON record on stdout and a summary on stderr.

Exit status: 0 success, 1 domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .core import DivisorClass, FloatRejected, ParabolicWeight, Wall, fmt, rational
from . import cone, crossing, quantum, schubert, walls, weights

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


# --- input parsing -------------------------------------------------------------

def _reject_floats(obj, where="input"):
    if isinstance(obj, float):
        raise FloatRejected(f"{where}: float {obj!r} is not exact; write it as a \"p/q\" string")
    if isinstance(obj, list):
        for k, x in enumerate(obj):
            _reject_floats(x, f"{where}[{k}]")
    if isinstance(obj, dict):
        for k, x in obj.items():
            _reject_floats(x, f"{where}.{k}")


def _load_json(path: str):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc
    _reject_floats(data, path)
    return data


def load_weight(path: str, formal: bool = False) -> ParabolicWeight:
    data = _load_json(path)
    try:
        r, n = int(data["r"]), int(data["n"])
        rows = [[rational(x) for x in row] for row in data["weights"]]
    except KeyError as exc:
        raise UsageError(f"{path}: missing field {exc}") from exc
    if len(rows) != n:
        raise weights.InvalidWeight(f"{path}: n={n} but {len(rows)} weight rows")
    if any(len(row) != r - 1 for row in rows):
        raise weights.InvalidWeight(f"{path}: every row needs r-1 = {r - 1} entries")
    if formal:
        return walls._formal(rows)
    return ParabolicWeight(r, tuple(map(tuple, rows)))


def load_divisor(path: str) -> DivisorClass:
    data = _load_json(path)
    try:
        r, n = int(data["r"]), int(data["n"])
        level, lambdas = data["level"], data["lambdas"]
    except KeyError as exc:
        raise UsageError(f"{path}: missing field {exc}") from exc
    if len(lambdas) != n:
        raise ValueError(f"{path}: n={n} but {len(lambdas)} partitions")
    for x in [level] + [v for lam in lambdas for v in lam]:
        if not isinstance(x, int) or isinstance(x, bool):
            raise FloatRejected(f"{path}: divisor entries must be integers, got {x!r}")
    return DivisorClass(r, level, tuple(tuple(lam) for lam in lambdas))


def parse_wall(text: str, r: int) -> Wall:
    """Inline JSON {"s":..,"d":..,"J":[[..],..]} or a path to such a file."""
    text = text.strip()
    data = json.loads(text) if text.startswith("{") else _load_json(text)
    _reject_floats(data, "wall")
    data.setdefault("r", r)
    if int(data["r"]) != r:
        raise ValueError(f"wall has r={data['r']} but the weight has r={r}")
    return Wall.from_record(data)


def parse_partition(text: str) -> tuple:
    text = text.strip().strip("()").strip()
    if not text:
        return ()
    if any(c in text for c in ".eE"):
        raise FloatRejected(f"partition {text!r} must list integers")
    return schubert.partition(int(x) for x in text.split(","))


def parse_pair(text: str) -> tuple:
    try:
        s, r = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"expected 's,r', got {text!r}") from exc
    return s, r


# --- commands ------------------------------------------------------------------

def _wall_group(g: walls.Crossing, key: str) -> dict:
    return {key: fmt(g.param), "simple": g.simple,
            "walls": [dict(W.to_record(), label=W.label()) for W in g.walls]}


def cmd_dim(a):
    dim = weights.moduli_dimension(a.rank, a.points)
    return {"r": a.rank, "n": a.points, "dimension": dim}, f"dim M = {dim}"


def cmd_lr(a):
    lam, mu, nu = parse_partition(a.lam), parse_partition(a.mu), parse_partition(a.nu)
    c = schubert.lr_coefficient(lam, mu, nu)
    return {"lam": list(lam), "mu": list(mu), "nu": list(nu), "coefficient": c}, f"c = {c}"


def cmd_gw(a):
    s, r = parse_pair(a.grassmannian)
    classes = [parse_partition(x) for x in a.classes.split(";")]
    value = quantum.gw_invariant(classes, a.degree, s, r)
    return ({"s": s, "r": r, "degree": a.degree, "classes": [list(p) for p in classes], "invariant": value},
            f"<...>_{a.degree} = {value} on Gr({s},{r})")


def cmd_walls(a):
    w0, w1 = load_weight(a.start), load_weight(a.end)
    groups = walls.segment_walls(w0, w1, a.dmax)
    rec = {"r": w0.r, "n": w0.n, "crossings": [_wall_group(g, "t") for g in groups],
           "bounded_search": a.dmax is not None}
    return rec, f"{sum(len(g.walls) for g in groups)} walls in {len(groups)} groups"


def cmd_scaling(a):
    base = load_weight(a.weights, formal=True)
    path = walls.ScalingPath(base, rational(a.cmax))
    groups = walls.scaling_walls(path, a.dmax, realized_only=not a.all)
    records = []
    for g in groups:
        item = _wall_group(g, "c")
        if g.simple and not a.all:
            item["kind"] = crossing.classify(g.wall, path.at(g.param), check_simple=False).kind
        records.append(item)
    rec = {"r": base.r, "n": base.n, "c_max": fmt(path.c_max), "realized_only": not a.all,
           "crossings": records, "bounded_search": a.dmax is not None}
    return rec, f"{len(groups)} crossing groups up to c = {fmt(path.c_max)}"


def cmd_first_wall(a):
    base = load_weight(a.weights, formal=True)
    c, W = walls.first_wall(walls.ScalingPath(base, rational(a.cmax)), a.dmax)
    rep = crossing.classify(W, walls.ScalingPath(base, rational(a.cmax)).at(c), check_simple=False)
    return {"c": fmt(c), "wall": W.to_record(), "label": W.label(), "report": rep.to_record()}, \
        f"first wall {W.label()} at c = {fmt(c)}: {rep.kind}"


def cmd_classify(a):
    w = load_weight(a.weights)
    W = parse_wall(a.wall, w.r)
    rep = crossing.classify(W, w, check_simple=not a.skip_simple_check)
    return rep.to_record(), f"{W.label()}: {rep.kind}"


def cmd_dominant(a):
    w = load_weight(a.weights)
    res = crossing.is_dominant(w, a.dmax)
    rec = {"dominant": res.dominant, "rho_start": res.rho_start, "rho_final": res.rho_final,
           "emptied": res.emptied, "trace": [dict(rep.to_record(), c=fmt(c)) for c, rep in res.trace],
           "bounded_search": a.dmax is not None}
    return rec, f"dominant={res.dominant}, rho {res.rho_start} -> {res.rho_final}"


def cmd_effective(a):
    w = load_weight(a.weights)
    eff = weights.is_effective(w, a.dmax, a.strict)
    rec = {"effective": eff.effective, "strict": a.strict, "bounded_search": eff.bounded_search,
           "certificate": None}
    if eff.certificate is not None:
        W = eff.certificate
        classes = [schubert.subset_to_partition(schubert.SchubertIndex(W.r, Ji)) for Ji in W.J]
        rec["certificate"] = dict(W.to_record(), label=W.label(),
                                  gw_value=quantum.gw_invariant(classes, -W.d, W.s, W.r),
                                  slope_sub=fmt(weights.slope_sub(w, W.s, W.d, W.J)),
                                  slope_total=fmt(weights.slope_total(w)))
    msg = "effective" if eff else f"not effective: {eff.certificate.label()}"
    return rec, msg


def cmd_effcone(a):
    C = cone.effective_cone(a.rank, a.points, a.dmax)
    rec = {"r": C.r, "n": C.n, "bounded_search": C.bounded_search,
           "counts": {k: len(C.of_kind(k)) for k in ("ordering", "level", "gw")},
           "inequalities": [q.to_record() for q in C.inequalities]}
    return rec, f"{len(C.inequalities)} inequalities ({rec['counts']['gw']} GW facets)"


def cmd_model(a):
    D = load_divisor(a.divisor)
    C = cone.effective_cone(D.r, D.n, a.dmax)
    model = cone.projective_model(D, C)
    return model.to_record(), f"model: {model.to_record()['type']}"


def cmd_anticanonical(a):
    D = cone.anticanonical_class(a.rank, a.points)
    git = cone.canonical_git_class(a.rank, a.points).anticanonical
    w = weights.pauly_weight(D)
    rec = {"r": D.r, "n": D.n, "level": D.level, "lambdas": [list(l) for l in D.lambdas],
           "pauly_weight": w.as_strings(),
           "git_anticanonical": {"level": git.level, "lambdas": [list(l) for l in git.lambdas]}}
    return rec, f"-K = (l={D.level}, lambda={D.lambdas[0]})"


def cmd_fano_report(a):
    rep = cone.weak_fano_report(a.rank, a.points, a.dmax)
    rec = rep.to_record()
    rec["bounded_search"] = a.dmax is not None
    return rec, f"dominant={rep.dominant}, rho={rep.rho_final}, blow-downs={rep.blowdowns}, boundaries={rep.boundaries}"


# --- driver --------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="parabolic", description=__doc__.splitlines()[0])
    p.add_argument("--dmax", type=int, default=None,
                   help="cap on |d| in enumerations; outputs are then marked bounded_search")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def rank_points(q):
        q.add_argument("--rank", "-r", type=int, required=True)
        q.add_argument("--points", "-n", type=int, required=True)

    q = sub.add_parser("dim", help="dimension of the moduli space")
    rank_points(q)
    q.set_defaults(func=cmd_dim)

    q = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    q.add_argument("--lam", required=True)
    q.add_argument("--mu", required=True)
    q.add_argument("--nu", required=True)
    q.set_defaults(func=cmd_lr)

    q = sub.add_parser("gw", help="Gromov-Witten invariant of Gr(s, r)")
    q.add_argument("--grassmannian", required=True, help="s,r")
    q.add_argument("--classes", required=True, help='e.g. "(1);(1);(1)"')
    q.add_argument("--degree", type=int, required=True)
    q.set_defaults(func=cmd_gw)

    q = sub.add_parser("walls", help="walls crossed by a segment between two weights")
    q.add_argument("--from", dest="start", required=True)
    q.add_argument("--to", dest="end", required=True)
    q.set_defaults(func=cmd_walls)

    q = sub.add_parser("scaling", help="walls met along c * base, 0 < c <= cmax")
    q.add_argument("--weights", required=True)
    q.add_argument("--cmax", required=True)
    q.add_argument("--all", action="store_true", help="also list hyperplanes along which nothing changes")
    q.set_defaults(func=cmd_scaling)

    q = sub.add_parser("first-wall", help="first wall along the scaling path")
    q.add_argument("--weights", required=True)
    q.add_argument("--cmax", required=True)
    q.set_defaults(func=cmd_first_wall)

    q = sub.add_parser("classify", help="classify a simple wall-crossing")
    q.add_argument("--weights", required=True, help="weight on the wall")
    q.add_argument("--wall", required=True, help='inline JSON {"s":1,"d":-1,"J":[[1],...]} or a file')
    q.add_argument("--skip-simple-check", action="store_true")
    q.set_defaults(func=cmd_classify)

    q = sub.add_parser("dominant", help="Picard-number trace along the scaling ray")
    q.add_argument("--weights", required=True)
    q.set_defaults(func=cmd_dominant)

    q = sub.add_parser("effective", help="effectiveness test with a GW certificate")
    q.add_argument("--weights", required=True)
    q.add_argument("--strict", action="store_true")
    q.set_defaults(func=cmd_effective)

    q = sub.add_parser("effcone", help="H-representation of the effective cone")
    rank_points(q)
    q.set_defaults(func=cmd_effcone)

    q = sub.add_parser("model", help="projective model of a divisor class")
    q.add_argument("--divisor", required=True)
    q.set_defaults(func=cmd_model)

    q = sub.add_parser("anticanonical", help="anticanonical class and its weight")
    rank_points(q)
    q.set_defaults(func=cmd_anticanonical)

    q = sub.add_parser("fano-report", help="dominance and blow-down check at the perturbed a_c")
    rank_points(q)
    q.set_defaults(func=cmd_fano_report)
    return p


def _emit(rec: dict, out):
    json.dump(rec, out, indent=2, sort_keys=True)
    out.write("\n")


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return 2
    try:
        rec, summary = args.func(args)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return 2
    except (ValueError, TypeError, LookupError, AssertionError, ZeroDivisionError) as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        _emit({"schema_version": SCHEMA_VERSION, "command": args.command, "ok": False,
               "error": {"type": type(exc).__name__, "message": str(exc)}}, stdout)
        return 1
    rec = dict(rec, schema_version=SCHEMA_VERSION, command=args.command, ok=True)
    _emit(rec, stdout)
    stderr.write(summary + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
