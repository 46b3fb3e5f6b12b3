"""Command-line interface.  Every command prints one JSON report on stdout.

Exit codes: 0 property holds, 1 property fails, 2 usage or input error,
3 unknown (budget exhausted).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import __version__
from .certificate import Certificate
from .errors import DigitalTopologyError, ReplayError
from .generators import cycle, enumerate_connected_graphs, minimal_sphere, random_sphere, torus_grid
from .homotopy import is_contractible, replay
from .invariants import profile
from .io import GraphDocument, emit_graph, read_graph
from .pairs import PairContraction, SplitSpec, contract_pair, contracted, random_split, split_point
from .recognizers import (
    DEFAULT_BUDGET,
    SphereCertificate,
    cone,
    is_n_disk,
    is_n_sphere,
    verify_sphere_certificate,
)
from .separation import Separation, manifold_separation_check, separate, verify_sphere_separation
from .simply_connected import (
    SearchLimits,
    is_locally_simply_connected,
    is_simply_connected,
    is_simple_closed_curve,
)
from .space import CANONICAL_CAP, DigitalSpace, canonical_key, is_connected, rim
from .verdict import FALSE, TRUE, UNKNOWN, Verdict

log = logging.getLogger("digitopo")

EXIT = {TRUE: 0, FALSE: 1, UNKNOWN: 3}


class UsageError(Exception):
    pass


def _csv(text):
    return [t for t in text.split(",") if t] if text else []


def _digest(G: DigitalSpace, name=""):
    key = canonical_key(G).hex() if len(G) <= CANONICAL_CAP else None
    return {"name": name, "key": key, "vertices": len(G), "edges": G.n_edges}


def _verdict_dict(v: Verdict, ctype=None, cert=None):
    d = {"status": v.status, "explored": v.explored}
    if cert is not None:
        d["certificate_type"] = ctype
        d["certificate"] = cert
    if v.witness is not None:
        d["witness"] = _jsonable(v.witness)
    return d


def _jsonable(x):
    if isinstance(x, (frozenset, set)):
        return sorted(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _limits(args):
    return SearchLimits(max_curve=args.max_curve, max_disk=args.max_disk,
                        budget=args.budget or SearchLimits().budget)


def _load(args):
    if not args.input:
        raise UsageError("--in is required")
    doc = read_graph(args.input)
    return doc, doc.to_space()


def _write_graph(doc: GraphDocument, args):
    text = emit_graph(doc, args.format)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)


# -- gen ----------------------------------------------------------------------


def cmd_gen(args):
    kind = args.kind
    if kind == "minimal-sphere":
        G, name = minimal_sphere(_need(args, "dim")), f"S{args.dim}min"
    elif kind == "cycle":
        G, name = cycle(_need(args, "k")), f"C{args.k}"
    elif kind == "random-sphere":
        _need(args, "seed")
        G, specs = random_sphere(_need(args, "dim"), _need(args, "steps"), args.seed)
        name = f"S{args.dim}-random-{args.steps}-{args.seed}"
        G.metadata["splits"] = [s.to_dict() for s in specs]
    else:
        G, name = torus_grid(_need(args, "m"), _need(args, "n")), f"T{args.m}x{args.n}"
    _write_graph(GraphDocument.from_space(G, name), args)
    return None, 0


def _need(args, attr):
    v = getattr(args, attr)
    if v is None:
        raise UsageError(f"--{attr.replace('_', '-')} is required")
    return v


# -- check --------------------------------------------------------------------


def _check(prop, G, args):
    budget = args.budget or DEFAULT_BUDGET
    if prop == "contractible":
        v = is_contractible(G)
        return v, "steps", v.certificate.to_dict() if v else None
    if prop == "sphere":
        v = is_n_sphere(G, _need(args, "dim"), budget)
        return v, "sphere", v.certificate.to_dict() if v else None
    if prop == "manifold":
        n = _need(args, "dim")
        if not is_connected(G) or len(G) == 0:
            return Verdict.no(witness="disconnected"), None, None
        rims = {}
        for x in G.vertices:
            r = is_n_sphere(rim(G, x), n - 1, budget)
            if not r:
                status = r.status
                w = f"rim of {x!r}: {r.witness}"
                return Verdict(status, witness=w, explored=r.explored), None, None
            rims[x] = r.certificate.to_dict()
        return Verdict.yes(), "manifold", rims
    if prop == "disk":
        n = _need(args, "dim")
        boundary = _csv(_need(args, "boundary"))
        K, apex = cone(G, boundary)
        v = is_n_sphere(K, n, budget)
        cert = None
        if v:
            cert = {"apex": apex, "boundary": sorted(boundary), "sphere": v.certificate.to_dict()}
        return v, "disk", cert
    if prop == "simply-connected":
        v = is_simply_connected(G, _limits(args))
        cert = None
        if v:
            cert = [{"curve": sorted(c), "disk": list(d.disk.vertices)} for c, d in v.certificate["disks"]]
        return v, "disks", cert
    if prop == "locally-simply-connected":
        v = is_locally_simply_connected(G, _limits(args))
        return v, "recompute", v.certificate if v else None
    raise UsageError(f"unknown property {prop!r}")


def cmd_check(args):
    doc, G = _load(args)
    v, ctype, cert = _check(args.property, G, args)
    report = {"input": _digest(G, doc.name),
              "verdicts": {args.property: _verdict_dict(v, ctype, cert)}}
    if args.dim is not None:
        report["dim"] = args.dim
    return report, EXIT[v.status]


# -- transform ----------------------------------------------------------------


def cmd_transform(args):
    doc, G = _load(args)
    if args.op == "contract-pair":
        H, pc = contract_pair(G, _need(args, "x"), _need(args, "y"))
        cert_type, cert = "pair-contraction", pc.to_dict()
    else:
        if args.z is not None:
            spec = SplitSpec(args.z, frozenset(_csv(args.part_x)), frozenset(_csv(args.part_y)))
            H, _ = split_point(G, spec)
        else:
            H, spec = random_split(G, _need(args, "seed"))
        cert_type, cert = "split", spec.to_dict()
    out = GraphDocument.from_space(H, f"{doc.name}-{args.op}")
    if args.out not in (None, "-"):
        _write_graph(out, args)
    report = {"input": _digest(G, doc.name), "result": out.to_dict(),
              "verdicts": {args.op: _verdict_dict(Verdict.yes(), cert_type, cert)}}
    return report, 0


# -- separate -----------------------------------------------------------------


def cmd_separate(args):
    doc, G = _load(args)
    S = _csv(_need(args, "sep"))
    if args.dim is None:
        sep = separate(G, S)
        v = Verdict.yes() if isinstance(sep, Separation) else Verdict.no()
        body = {"kind": type(sep).__name__ if sep is not None else "connected",
                "separation": None if sep is None else sep.to_dict()}
    else:
        from .recognizers import sphere

        if sphere(G, args.dim):
            rep = verify_sphere_separation(G, S, args.dim, verify=False)
        else:
            rep = manifold_separation_check(G, S, args.dim)
        v = Verdict.yes() if rep.ok else Verdict.no()
        body = rep.to_dict()
    cert = body["separation"] if v else None
    report = {"input": _digest(G, doc.name), "separation": body,
              "verdicts": {"separate": _verdict_dict(v, "separation" if cert else None, cert)}}
    return report, EXIT[v.status]


# -- invariants ---------------------------------------------------------------


def cmd_invariants(args):
    doc, G = _load(args)
    return {"input": _digest(G, doc.name), "invariants": profile(G).to_dict()}, 0


# -- verify -------------------------------------------------------------------


def _replay_one(G, ctype, cert, args):
    if ctype == "steps":
        replay(G, Certificate.from_dict(cert))
    elif ctype == "sphere":
        verify_sphere_certificate(G, SphereCertificate.from_dict(cert))
    elif ctype == "manifold":
        if set(cert) != set(G.vertices):
            raise ReplayError("rim certificates do not cover the vertices")
        for x, c in cert.items():
            verify_sphere_certificate(rim(G, x), SphereCertificate.from_dict(c))
    elif ctype == "disk":
        K = G.with_vertex(cert["apex"], cert["boundary"])
        verify_sphere_certificate(K, SphereCertificate.from_dict(cert["sphere"]))
    elif ctype == "disks":
        from .simply_connected import enumerate_simple_closed_curves

        covered = {frozenset(d["curve"]) for d in cert}
        if covered != set(enumerate_simple_closed_curves(G)):
            raise ReplayError("disks do not cover every simple closed curve")
        for d in cert:
            if not set(d["curve"]) <= set(d["disk"]) or not is_simple_closed_curve(G, d["curve"]):
                raise ReplayError(f"bad curve {d['curve']}")
            if not is_n_disk(G.induced_mask(G.mask(d["disk"])), d["curve"], 2):
                raise ReplayError(f"{d['disk']} is not a disk bounded by {d['curve']}")
    elif ctype == "pair-contraction":
        pc = PairContraction.from_dict(cert)
        H = replay(G, pc.certificate)
        if H != contracted(G, pc.x, pc.y, pc.z):
            raise ReplayError("replayed contraction differs from the contracted space")
    elif ctype == "split":
        split_point(G, SplitSpec.from_dict(cert))
    elif ctype == "separation":
        Separation(G, frozenset(cert["A"]), frozenset(cert["S"]), frozenset(cert["B"])).check()
    elif ctype == "recompute":
        ns = argparse.Namespace(**vars(args))
        ns.max_curve = ns.max_disk = None
        v, _, _ = _check("locally-simply-connected", G, ns)
        if v.status != TRUE:
            raise ReplayError("recomputed verdict differs")
    else:
        raise ReplayError(f"unknown certificate type {ctype!r}")


def cmd_verify(args):
    doc, G = _load(args)
    with open(_need(args, "cert")) as fh:
        rep = json.load(fh)
    verdicts = rep.get("verdicts", {})
    results = {}
    for name, entry in verdicts.items():
        if "certificate" not in entry:
            continue
        try:
            _replay_one(G, entry["certificate_type"], entry["certificate"], args)
            results[name] = {"status": TRUE}
        except DigitalTopologyError as e:
            results[name] = {"status": FALSE, "error": str(e)}
    if not results:
        raise UsageError("report carries no certificate")
    ok = all(r["status"] == TRUE for r in results.values())
    report = {"input": _digest(G, doc.name), "verdicts": {"verify": {"status": TRUE if ok else FALSE}},
              "replayed": results}
    return report, 0 if ok else 1


# -- enumerate ----------------------------------------------------------------


def cmd_enumerate(args):
    from .generators import cone_over, suspension
    from .homotopy import simple_points

    n = _need(args, "max_vertices")
    sizes: dict[int, dict] = {}
    failures = []
    for G in enumerate_connected_graphs(n):
        row = sizes.setdefault(len(G), {"graphs": 0, "contractible": 0})
        row["graphs"] += 1
        c = bool(is_contractible(G))
        if c:
            row["contractible"] += 1
            if len(G) > 1 and len(simple_points(G)) < 2:
                failures.append(("two-simple-points", list(G.edges())))
            if not is_contractible(suspension(G)):
                failures.append(("suspension", list(G.edges())))
        if len(G) < 7 and not is_contractible(cone_over(G)):
            failures.append(("cone", list(G.edges())))
    v = Verdict.no(witness=failures) if failures else Verdict.yes()
    return {"sizes": {str(k): r for k, r in sorted(sizes.items())},
            "verdicts": {"enumerate": _verdict_dict(v)}}, EXIT[v.status]


# -- plumbing -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input")
    common.add_argument("--out")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--dim", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--budget", type=int)
    common.add_argument("--max-curve", type=int)
    common.add_argument("--max-disk", type=int)
    common.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="digitopo", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a space")
    g.add_argument("kind", choices=("minimal-sphere", "cycle", "random-sphere", "torus"))
    g.add_argument("--k", type=int)
    g.add_argument("--steps", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--n", type=int)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", parents=[common], help="decide a property")
    c.add_argument("property", choices=("contractible", "sphere", "manifold", "disk",
                                        "simply-connected", "locally-simply-connected"))
    c.add_argument("--boundary", help="comma-separated boundary vertices (disk)")
    c.set_defaults(func=cmd_check)

    t = sub.add_parser("transform", parents=[common], help="contract a simple pair or split a point")
    t.add_argument("op", choices=("contract-pair", "split"))
    t.add_argument("--x")
    t.add_argument("--y")
    t.add_argument("--z")
    t.add_argument("--part-x")
    t.add_argument("--part-y")
    t.set_defaults(func=cmd_transform)

    s = sub.add_parser("separate", parents=[common], help="separate a space by a subspace")
    s.add_argument("--sep", help="comma-separated separating vertices")
    s.set_defaults(func=cmd_separate)

    i = sub.add_parser("invariants", parents=[common], help="clique counts, Euler characteristic, Betti numbers")
    i.set_defaults(func=cmd_invariants)

    v = sub.add_parser("verify", parents=[common], help="replay the certificates in a report")
    v.add_argument("--cert", help="report JSON produced by another command")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", parents=[common], help="sweep all small connected graphs")
    e.add_argument("--max-vertices", type=int)
    e.set_defaults(func=cmd_enumerate)
    return p


def run_command(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    start = time.perf_counter()
    try:
        report, code = args.func(args)
    except UsageError as e:
        print(f"digitopo: error: {e}", file=sys.stderr)
        return 2
    except (DigitalTopologyError, OSError, ValueError) as e:
        print(f"digitopo: error: {e}", file=sys.stderr)
        return 2
    if report is not None:
        full = {"tool": "digitopo", "version": __version__, "command": argv, "seed": args.seed}
        full.update(report)
        if args.timing:
            full["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
        json.dump(full, sys.stdout, indent=1, sort_keys=True)
        sys.stdout.write("\n")
    log.info("exit %d", code)
    return code


def main():
    sys.exit(run_command())

