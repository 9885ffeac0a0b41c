"""Command-line interface: validate, analyze, transform, and emit reports.

All machine output is JSON with sorted keys and a fixed enumeration order,
so identical inputs produce byte-identical bytes; the human-readable text is
a rendering of the same record.  Exit codes: 0 success, 1 validation or
usage error, 2 enumeration guard exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from . import catalog as _catalog
from .errors import GraphError, GuardExceeded
from .leapfrog import leapfrog
from .plane_graph import (
    FullereneGraph,
    canonical_code,
    emit_graph,
    parse_graph,
    validate_fullerene,
)
from .resonance import (
    clar,
    find_g_star,
    fries,
    hexagon_dichotomy_report,
    resonance_order,
    sextet,
)
from .rings_fragments import (
    ANY,
    PENTAGONS_ONLY,
    find_polygonal_rings,
    maximal_pentagonal_fragments,
)

SCHEMA = "resonantk-report/1"


class _Parser(argparse.ArgumentParser):
    """argparse variant whose usage errors exit with status 1, not 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class AnalysisReport:
    """Everything `analyze` reports for one graph; JSON-ready."""

    identity: str
    counts: dict
    sextet_descending: tuple[int, ...]
    clar: int
    order: dict
    tau: int | None
    psi: dict
    rings: dict
    fragments: tuple[dict, ...]
    g_star: dict | None
    dichotomy: dict
    fries: int | None = None

    def as_dict(self) -> dict:
        out = {
            "schema": SCHEMA,
            "identity": self.identity,
            "counts": self.counts,
            "sextet": list(self.sextet_descending),
            "clar": self.clar,
            "order": self.order,
            "tau": self.tau,
            "psi": self.psi,
            "rings": self.rings,
            "fragments": [dict(f) for f in self.fragments],
            "g_star": self.g_star,
            "dichotomy": self.dichotomy,
        }
        if self.fries is not None:
            out["fries"] = self.fries
        return out


def graph_identity(f: FullereneGraph) -> str:
    return hashlib.sha256(canonical_code(f)).hexdigest()


def _load(path: str) -> FullereneGraph:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise GraphError(f"cannot read {path}: {e.strerror}") from None
    return validate_fullerene(parse_graph(text))


def analyze_graph(f: FullereneGraph, with_fries: bool = False, pm_cap: int | None = None) -> AnalysisReport:
    poly = sextet(f)
    rep = resonance_order(f)
    pent_rings = find_polygonal_rings(f, max_len=12, face_filter=PENTAGONS_ONLY)
    psi_table: dict[str, int] = {}
    for ring in pent_rings:
        key = str(ring.l)
        psi_table[key] = min(psi_table.get(key, ring.s), ring.s)
    by_len: dict[str, int] = {}
    for ring in pent_rings:
        by_len[str(ring.l)] = by_len.get(str(ring.l), 0) + 1
    frags = tuple(
        {
            "faces": list(fr.faces),
            "shape": fr.shape,
            "maximal": fr.maximal,
            "gamma": fr.gamma,
            "boundary_cycles": len(fr.boundary),
        }
        for fr in maximal_pentagonal_fragments(f)
    )
    witness = find_g_star(f)
    dich = hexagon_dichotomy_report(f)
    tau_value = min((r.l for r in pent_rings), default=None)
    return AnalysisReport(
        identity=graph_identity(f),
        counts={
            "vertices": f.n,
            "edges": 3 * f.n // 2,
            "faces": len(f.faces),
            "pentagons": len(f.pentagon_ids),
            "hexagons": len(f.hexagon_ids),
        },
        sextet_descending=poly.descending(),
        clar=poly.degree,
        order={"order": rep.order, "failing": list(rep.failing) if rep.failing else None},
        tau=tau_value,
        psi=psi_table,
        rings={"pentagonal_by_length": by_len, "pentagonal_total": len(pent_rings)},
        fragments=frags,
        g_star=(
            {"vertex": witness.vertex, "hexagons": list(witness.hexagons)}
            if witness
            else None
        ),
        dichotomy={
            "hexagons": len(dich),
            "resonant": sum(1 for h in dich if h.resonant),
            "non_bipartite_deletions": sum(1 for h in dich if not h.deletion_bipartite),
        },
        fries=fries(f, pm_cap) if with_fries else None,
    )


def _dump_json(obj: object) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _render_text(report: AnalysisReport) -> str:
    lines = [
        f"identity: {report.identity}",
        "counts: " + ", ".join(f"{k}={v}" for k, v in report.counts.items()),
        "sextet (descending): " + " ".join(str(c) for c in report.sextet_descending),
        f"clar: {report.clar}",
        f"order: {report.order['order']}"
        + (
            f" (failing set: {' '.join(map(str, report.order['failing']))})"
            if report.order["failing"]
            else ""
        ),
        f"tau: {report.tau}",
        f"pentagonal rings: {report.rings['pentagonal_total']}",
        f"fragments: "
        + (
            ", ".join(f"{f['shape']}x{len(f['faces'])}" for f in report.fragments)
            or "none"
        ),
        f"g_star: "
        + (
            f"vertex {report.g_star['vertex']} hexagons {report.g_star['hexagons']}"
            if report.g_star
            else "none"
        ),
        f"dichotomy: {report.dichotomy['resonant']}/{report.dichotomy['hexagons']} hexagons resonant, "
        f"{report.dichotomy['non_bipartite_deletions']} non-bipartite deletions",
    ]
    if report.fries is not None:
        lines.append(f"fries: {report.fries}")
    return "\n".join(lines) + "\n"


def _write_output(text: str, path: str | None) -> None:
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _build_parser() -> _Parser:
    p = _Parser(prog="resonantk", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="parse and check a rotation-system file")
    sp.add_argument("paths", nargs="+")

    sp = sub.add_parser("analyze", help="full structural report")
    sp.add_argument("paths", nargs="+")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--fries", action="store_true", help="include the enumeration-heavy fries number")
    sp.add_argument("--pm-cap", type=int, default=None, metavar="N")
    sp.add_argument("-o", "--output", default=None)

    sp = sub.add_parser("order", help="resonance order with a failing witness")
    sp.add_argument("path")
    sp.add_argument("--max-k", type=int, default=None, metavar="K")

    for name, help_text in (
        ("sextet", "resonant-set counting polynomial"),
        ("clar", "largest resonant set size"),
        ("fries", "most alternating hexagons over all perfect matchings"),
        ("gstar", "three-disjoint-hexagon obstruction at a vertex"),
    ):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("path")
        if name == "fries":
            sp.add_argument("--pm-cap", type=int, default=None, metavar="N")

    sp = sub.add_parser("leapfrog", help="leapfrog image, matching, and provenance")
    sp.add_argument("path")
    sp.add_argument("-o", "--output", default=None)
    sp.add_argument("--emit-matching", default=None, metavar="FILE")
    sp.add_argument("--provenance", default=None, metavar="FILE")

    sp = sub.add_parser("rings", help="polygonal ring scan")
    sp.add_argument("path")
    sp.add_argument("--max-len", type=int, default=12)
    sp.add_argument("--pentagonal", action="store_true")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("fragments", help="pentagon cluster classification")
    sp.add_argument("path")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("catalog", help="built-in graphs")
    csub = sp.add_subparsers(dest="catalog_command", required=True)
    csub.add_parser("list")
    sp2 = csub.add_parser("emit")
    sp2.add_argument("name")
    sp2.add_argument("-o", "--output", default=None)
    csub.add_parser("verify")

    sp = sub.add_parser("nanotube", help="capped tube construction")
    sp.add_argument("--cap", choices=["r5", "r6"], required=True)
    sp.add_argument("--rings", type=int, required=True, metavar="K")
    sp.add_argument("-o", "--output", default=None)

    return p


def run(argv: Sequence[str] | None = None) -> int:
    """Execute one command line; returns the exit status."""
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    try:
        return _dispatch(args)
    except GuardExceeded as e:
        print(f"guard exceeded: {e}", file=sys.stderr)
        return 2
    except GraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def _dispatch(args: argparse.Namespace) -> int:
    cmd = args.command

    if cmd == "validate":
        status = 0
        for path in args.paths:
            try:
                f = _load(path)
            except GraphError as e:
                print(f"{path}: INVALID: {e}")
                status = 1
                continue
            print(
                f"{path}: fullerene graph, {f.n} vertices, "
                f"{len(f.pentagon_ids)} pentagons, {len(f.hexagon_ids)} hexagons"
            )
        return status

    if cmd == "analyze":
        reports = []
        for path in args.paths:
            f = _load(path)
            reports.append(analyze_graph(f, with_fries=args.fries, pm_cap=args.pm_cap))
        if args.json:
            payload = [r.as_dict() for r in reports]
            text = _dump_json(payload[0] if len(payload) == 1 else payload)
        else:
            text = "\n".join(_render_text(r) for r in reports)
        _write_output(text, args.output)
        return 0

    if cmd == "order":
        f = _load(args.path)
        rep = resonance_order(f, max_k=args.max_k)
        if rep.capped:
            print(f">= {rep.order}")
        else:
            print(rep.order)
        if rep.failing:
            print(f"failing set: {' '.join(map(str, rep.failing))}")
        return 0

    if cmd == "sextet":
        f = _load(args.path)
        poly = sextet(f)
        print(f"degree: {poly.degree}")
        print("coefficients (descending): " + " ".join(str(c) for c in poly.descending()))
        return 0

    if cmd == "clar":
        print(clar(_load(args.path)))
        return 0

    if cmd == "fries":
        print(fries(_load(args.path), cap=args.pm_cap))
        return 0

    if cmd == "gstar":
        witness = find_g_star(_load(args.path))
        if witness is None:
            print("none")
        else:
            print(f"vertex {witness.vertex}: hexagons {' '.join(map(str, witness.hexagons))}")
        return 0

    if cmd == "leapfrog":
        f = _load(args.path)
        lf = leapfrog(f)
        comments = [
            f"leapfrog image: {lf.image.n} vertices from a {f.n}-vertex fullerene",
            f"source identity: {graph_identity(f)}",
        ]
        _write_output(emit_graph(lf.image.graph, comments), args.output)
        if args.emit_matching:
            _write_output(lf.m0.serialize() + "\n", args.emit_matching)
        if args.provenance:
            prov = {
                "heritable": {str(k): v for k, v in sorted(lf.heritable.items())},
                "fresh": {str(k): v for k, v in sorted(lf.fresh.items())},
            }
            _write_output(_dump_json(prov), args.provenance)
        return 0

    if cmd == "rings":
        f = _load(args.path)
        rings = find_polygonal_rings(
            f,
            max_len=args.max_len,
            face_filter=PENTAGONS_ONLY if args.pentagonal else ANY,
        )
        if args.json:
            payload = [
                {
                    "faces": list(r.faces),
                    "l": r.l,
                    "s": r.s,
                    "s_prime": r.s_prime,
                    "r": r.r,
                    "n5": r.n5,
                    "n6": r.n6,
                    "all_pentagons": r.all_pentagons,
                    "inner_cycle": list(r.inner_cycle),
                    "outer_cycle": list(r.outer_cycle),
                }
                for r in rings
            ]
            sys.stdout.write(_dump_json(payload))
        else:
            for r in rings:
                kind = "pentagonal" if r.all_pentagons else "mixed"
                print(
                    f"l={r.l} s={r.s} s'={r.s_prime} r={r.r} n5={r.n5} n6={r.n6} "
                    f"({kind}) faces: {' '.join(map(str, r.faces))}"
                )
            print(f"total: {len(rings)}")
        return 0

    if cmd == "fragments":
        f = _load(args.path)
        frags = maximal_pentagonal_fragments(f)
        if args.json:
            payload = [
                {
                    "faces": list(fr.faces),
                    "shape": fr.shape,
                    "maximal": fr.maximal,
                    "gamma": fr.gamma,
                    "pentagonal": fr.pentagonal,
                    "boundary": [list(c) for c in fr.boundary],
                    "w_vertices": sorted(fr.w_vertices),
                }
                for fr in frags
            ]
            sys.stdout.write(_dump_json(payload))
        else:
            for fr in frags:
                print(
                    f"{fr.shape}: {len(fr.faces)} faces, maximal={fr.maximal}, "
                    f"gamma={fr.gamma}, boundary cycles={len(fr.boundary)}"
                )
        return 0

    if cmd == "catalog":
        if args.catalog_command == "list":
            for name in _catalog.catalog_names():
                entry = _catalog.catalog_graph(name)
                print(f"{name}: {entry.graph.n} vertices, {len(entry.graph.hexagon_ids)} hexagons")
            return 0
        if args.catalog_command == "emit":
            entry = _catalog.catalog_graph(args.name)
            _write_output(
                emit_graph(
                    entry.graph.graph,
                    [f"catalog entry {entry.name}", f"identity: {graph_identity(entry.graph)}"],
                ),
                args.output,
            )
            return 0
        # verify
        status = 0
        for name in _catalog.catalog_names():
            entry = _catalog.catalog_graph(name)
            results = _catalog.verify_entry(entry)
            bad = {k: v for k, v in results.items() if not v[2]}
            if bad:
                status = 1
                detail = "; ".join(f"{k}: expected {v[0]}, got {v[1]}" for k, v in bad.items())
                print(f"{name}: FAIL ({detail})")
            else:
                print(f"{name}: ok")
        return status

    if cmd == "nanotube":
        f = _catalog.nanotube(args.cap.upper(), args.rings)
        _write_output(
            emit_graph(
                f.graph,
                [
                    f"nanotube: {args.cap.upper()} caps, {args.rings} hexagon rings, {f.n} vertices"
                ],
            ),
            args.output,
        )
        return 0

    raise AssertionError(f"unhandled command {cmd}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
