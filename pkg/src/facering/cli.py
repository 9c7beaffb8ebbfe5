"""Command-line surface.

Every command delegates to one library operation and renders either a
tab-delimited table or a structured JSON document.  Output is byte-identical
across runs with the same configuration: all randomness flows through
explicit seeds and JSON is emitted with sorted keys.

Exit codes: 0 computed, 1 a property flag was raised (a theorem-level check
failed or a certificate search stayed inconclusive), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import complexes, face_ring, homology, lefschetz, moment_angle
from .complexes import SimplicialComplex

FLAG_EXIT = 1
USAGE_EXIT = 2


class UsageError(Exception):
    pass


def parse_generator(spec: str) -> SimplicialComplex:
    name, _, rest = spec.partition(":")
    try:
        args = [int(x) for x in rest.split(",")] if rest else []
        if name == "cross":
            return complexes.cross_polytope_boundary(*args)
        if name == "cyclic":
            return complexes.cyclic_polytope_boundary(*args)
        if name == "simplex-boundary":
            return complexes.boundary_simplex(*args)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad generator spec {spec!r}: {exc}") from exc
    raise UsageError(f"unknown generator {name!r} "
                     "(use cross:D, cyclic:D,N or simplex-boundary:N)")


def load_input(args) -> SimplicialComplex:
    if getattr(args, "gen", None):
        return parse_generator(args.gen)
    if getattr(args, "input", None):
        try:
            return complexes.read_complex(args.input)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read complex from {args.input}: {exc}") from exc
    raise UsageError("provide --input FILE or --gen SPEC")


def parse_face(text: str) -> tuple[int, ...]:
    try:
        return tuple(sorted(int(x) for x in text.split(",")))
    except ValueError as exc:
        raise UsageError(f"bad face {text!r}; expected comma-separated integers") from exc


def sample_lsop(complex, args):
    try:
        return face_ring.random_lsop(complex, args.bound, args.seed, args.max_tries)
    except face_ring.LsopSearchError as exc:
        raise UsageError(str(exc)) from exc


# -- output rendering ----------------------------------------------------------


def _flatten(prefix: str, value, lines: list[str]) -> None:
    if isinstance(value, dict):
        for k in value:
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], lines)
    elif isinstance(value, (list, tuple)):
        if value and isinstance(value[0], (dict, list, tuple)):
            for idx, item in enumerate(value):
                _flatten(f"{prefix}[{idx}]", item, lines)
        else:
            lines.append(f"{prefix}\t{' '.join(str(v) for v in value)}")
    else:
        lines.append(f"{prefix}\t{value}")


def render(payload: dict, fmt: str) -> str:
    if fmt == "structured":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    lines: list[str] = []
    _flatten("", payload, lines)
    return "\n".join(lines) + "\n"


def emit(args, payload: dict, text_override: str | None = None) -> None:
    out = text_override if (text_override is not None and args.format == "table") \
        else render(payload, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


# -- command handlers ------------------------------------------------------------


def cmd_fvec(args) -> int:
    c = load_input(args)
    emit(args, {"command": "fvec", "complex_sha256": complexes.complex_hash(c),
                "f": list(complexes.f_vector(c)),
                "h": list(complexes.h_vector(c)),
                "g": list(complexes.g_vector(c))})
    return 0


def cmd_homology(args) -> int:
    c = load_input(args)
    betti = homology.reduced_betti(c)
    emit(args, {"command": "homology",
                "complex_sha256": complexes.complex_hash(c),
                "reduced_betti_from_degree_minus1": list(betti),
                "euler_reduced": homology.euler_characteristic_reduced(c)})
    return 0


def cmd_classify(args) -> int:
    c = load_input(args)
    manifold = homology.is_homology_manifold(c)
    ball, bfaces = homology.is_homology_ball(c)
    payload = {
        "command": "classify",
        "complex_sha256": complexes.complex_hash(c),
        "dim": c.dim,
        "cohen_macaulay": homology.is_cohen_macaulay(c),
        "buchsbaum": homology.is_buchsbaum(c),
        "homology_manifold": manifold,
        "homology_sphere": homology.is_homology_sphere(c),
        "homology_ball": ball,
    }
    if ball:
        ridges = sorted(tuple(sorted(f)) for f in bfaces if len(f) == c.dim)
        payload["boundary_facets"] = [list(r) for r in ridges]
    if manifold and homology.is_connected(c):
        payload["orientation_class_dim"] = homology.orientation_class_dim(c)
    emit(args, payload)
    return 0


def cmd_lsop(args) -> int:
    c = load_input(args)
    sample = sample_lsop(c, args)
    emit(args, {"command": "lsop",
                "complex_sha256": complexes.complex_hash(c),
                "lambda": [[str(x) for x in row] for row in sample.matrix.rows],
                "seed": sample.seed, "bound": sample.bound, "tries": sample.tries,
                "is_integral_characteristic":
                    face_ring.is_integral_characteristic(c, sample.matrix)})
    return 0


def cmd_dims(args) -> int:
    c = load_input(args)
    sample = sample_lsop(c, args)
    cert = face_ring.reduction_certificate(c, sample)
    cert["command"] = "dims"
    cert["h"] = list(complexes.h_vector(c))
    emit(args, cert)
    return 0


def cmd_socle(args) -> int:
    c = load_input(args)
    sample = sample_lsop(c, args)
    cert = face_ring.reduction_certificate(c, sample, include_socle=True)
    cert["command"] = "socle"
    emit(args, cert)
    return 0


def cmd_schenzel(args) -> int:
    c = load_input(args)
    h = complexes.h_vector(c)
    betti = homology.reduced_betti(c)
    predicted = face_ring.schenzel_predicted(h, betti, c.dim + 1)
    emit(args, {"command": "schenzel",
                "complex_sha256": complexes.complex_hash(c),
                "h": list(h), "reduced_betti_from_degree_minus1": list(betti),
                "predicted_dims": list(predicted)})
    return 0


def cmd_wlp(args) -> int:
    c = load_input(args)
    sample = sample_lsop(c, args)
    cert = lefschetz.find_wle(c, sample.matrix, args.trials, args.bound,
                              args.seed, jobs=args.jobs)
    payload = cert.as_dict()
    payload["command"] = "wlp"
    emit(args, payload)
    return 0 if cert.verdict == lefschetz.WLP_CERTIFIED else FLAG_EXIT


def cmd_gcheck(args) -> int:
    c = load_input(args)
    try:
        verdict = lefschetz.g_conjecture_check(c)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    emit(args, {"command": "gcheck",
                "complex_sha256": complexes.complex_hash(c),
                "g": list(complexes.g_vector(c)), "verdict": verdict})
    return 0 if verdict == lefschetz.M_VECTOR else FLAG_EXIT


def cmd_mvec(args) -> int:
    try:
        seq = [int(x) for x in args.sequence.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad sequence {args.sequence!r}") from exc
    emit(args, {"command": "mvec", "sequence": seq,
                "is_m_vector": face_ring.is_m_vector(seq)})
    return 0


def cmd_subdivide(args) -> int:
    c = load_input(args)
    try:
        if args.mode == "stellar":
            if not args.face:
                raise UsageError("stellar subdivision needs --face")
            result = complexes.stellar_subdivide(c, parse_face(args.face))
        elif args.mode == "bary":
            result = complexes.barycentric(c)
        else:
            if args.i is None:
                raise UsageError("partial subdivision needs --i")
            result = complexes.partial_barycentric(c, args.i)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = complexes.to_json_obj(result)
    payload["command"] = "subdivide"
    payload["f"] = list(complexes.f_vector(result))
    emit(args, payload, text_override=complexes.to_text(result))
    return 0


def cmd_hochster(args) -> int:
    c = load_input(args)
    try:
        table = moment_angle.hochster_table(c, cap=args.cap, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    crosscheck = moment_angle.euler_hilbert_crosscheck(c, cap=args.cap)
    payload = {"command": "hochster",
               "complex_sha256": complexes.complex_hash(c),
               "bigraded_rows": [list(r) for r in table.rows()],
               "poincare": list(table.poincare_coefficients()),
               "euler_hilbert_crosscheck": crosscheck}
    if args.detail:
        payload["subsets"] = {
            " ".join(map(str, s)) or "-": list(b)
            for s, b in table.subset_betti}
    emit(args, payload)
    return 0 if crosscheck else FLAG_EXIT


def cmd_union_product(args) -> int:
    c = load_input(args)
    j1, j2 = parse_face(args.j1), parse_face(args.j2)
    basis1 = moment_angle.cohomology_basis(c, j1, args.p1)
    basis2 = moment_angle.cohomology_basis(c, j2, args.p2)
    if not basis1 or not basis2:
        raise UsageError("a requested cohomology group is zero")
    a, b = basis1[0], basis2[0]
    product = moment_angle.union_product(c, a, b)
    emit(args, {"command": "union-product",
                "complex_sha256": complexes.complex_hash(c),
                "factor_a": a.as_dict(), "factor_b": b.as_dict(),
                "product": product.as_dict(),
                "product_is_zero": product.is_zero})
    return 0


def cmd_toric_dims(args) -> int:
    c = load_input(args)
    sample = sample_lsop(c, args)
    try:
        dims = moment_angle.buchsbaum_toric_dims(c, sample.matrix)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    emit(args, {"command": "toric-dims",
                "complex_sha256": complexes.complex_hash(c),
                "dims": list(dims)})
    return 0


def cmd_duality(args) -> int:
    c = load_input(args)
    sample = sample_lsop(c, args)
    variant = args.variant
    if variant == "auto":
        variant = "sphere" if homology.is_homology_sphere(c) else "manifold"
    try:
        if variant == "sphere":
            ok = lefschetz.duality_pairing_check(c, sample.matrix)
            payload = {"command": "duality", "variant": "sphere",
                       "nondegenerate": ok}
        else:
            dims, ok = lefschetz.pd_quotient_dims(c, sample.matrix)
            payload = {"command": "duality", "variant": "manifold",
                       "quotient_dims": list(dims), "nondegenerate": ok}
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload["complex_sha256"] = complexes.complex_hash(c)
    emit(args, payload)
    return 0 if ok else FLAG_EXIT


def cmd_star_inject(args) -> int:
    c = load_input(args)
    sample = sample_lsop(c, args)
    d = c.dim + 1
    try:
        if args.i is not None and args.k is not None:
            pairs = [(args.i, args.k)]
        else:
            pairs = [(i, k) for i in range(1, d + 1) for k in range(d - i + 1)]
        checks = [{"i": i, "k": k,
                   "injective": lefschetz.star_injection_check(c, sample.matrix, i, k)}
                  for i, k in pairs]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    all_ok = all(ch["injective"] for ch in checks)
    emit(args, {"command": "star-inject",
                "complex_sha256": complexes.complex_hash(c),
                "checks": checks, "all_injective": all_ok})
    return 0 if all_ok else FLAG_EXIT


def cmd_experiment(args) -> int:
    c = load_input(args)
    try:
        if args.mode == "partial-bary-wlp":
            if args.k is None:
                raise UsageError("partial-bary-wlp needs --k")
            report = lefschetz.partial_bary_wlp(c, args.k, args.trials,
                                                args.bound, args.seed)
        elif args.mode == "stellar-set-wlp":
            if args.k is None:
                raise UsageError("stellar-set-wlp needs --k")
            report = lefschetz.stellar_set_wlp(c, args.k, args.trials,
                                               args.bound, args.seed)
        else:
            if not args.face:
                raise UsageError("stellar-transfer needs --face")
            report = lefschetz.stellar_wlp_transfer(c, parse_face(args.face),
                                                    args.direction, args.trials,
                                                    args.bound, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = report.as_dict()
    payload["command"] = f"experiment {args.mode}"
    emit(args, payload)
    return 0 if report.ok else FLAG_EXIT


# -- parser ------------------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="complex file (text or JSON)")
    p.add_argument("--gen", help="inline generator, e.g. cross:4, cyclic:4,7, "
                                 "simplex-boundary:3")


def _add_seeded(p: argparse.ArgumentParser, trials: bool = False) -> None:
    p.add_argument("--seed", type=int, required=True,
                   help="seed (mandatory for randomized commands)")
    p.add_argument("--bound", type=int, default=10,
                   help="coefficient bound for sampling (default 10)")
    p.add_argument("--max-tries", type=int, default=200,
                   help="l.s.o.p. rejection budget (default 200)")
    if trials:
        p.add_argument("--trials", type=int, default=50,
                       help="certificate search budget (default 50)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="facering",
        description="Exact face-ring computations on simplicial complexes.")
    parser.add_argument("--format", choices=("table", "structured"),
                        default="table", help="output format (default table)")
    parser.add_argument("--output", help="write output to a file instead of stdout")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker threads for parallelizable operations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fvec", help="f-, h- and g-vectors")
    _add_input(p)
    p.set_defaults(handler=cmd_fvec)

    p = sub.add_parser("homology", help="reduced Betti numbers over Q")
    _add_input(p)
    p.set_defaults(handler=cmd_homology)

    p = sub.add_parser("classify", help="CM / Buchsbaum / sphere / manifold / ball")
    _add_input(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("lsop", help="sample a linear system of parameters")
    _add_input(p)
    _add_seeded(p)
    p.set_defaults(handler=cmd_lsop)

    p = sub.add_parser("dims", help="graded dimensions of the Artinian reduction")
    _add_input(p)
    _add_seeded(p)
    p.set_defaults(handler=cmd_dims)

    p = sub.add_parser("socle", help="socle dimensions of the Artinian reduction")
    _add_input(p)
    _add_seeded(p)
    p.set_defaults(handler=cmd_socle)

    p = sub.add_parser("schenzel", help="closed-form Buchsbaum dimensions")
    _add_input(p)
    p.set_defaults(handler=cmd_schenzel)

    p = sub.add_parser("wlp", help="weak Lefschetz certificate search")
    _add_input(p)
    _add_seeded(p, trials=True)
    p.set_defaults(handler=cmd_wlp)

    p = sub.add_parser("gcheck", help="Macaulay verdict for the g-vector")
    _add_input(p)
    p.set_defaults(handler=cmd_gcheck)

    p = sub.add_parser("mvec", help="Macaulay test for an integer sequence")
    p.add_argument("--sequence", required=True, help="comma-separated entries")
    p.set_defaults(handler=cmd_mvec)

    p = sub.add_parser("subdivide", help="stellar / barycentric / partial subdivision")
    p.add_argument("mode", choices=("stellar", "bary", "partial"))
    _add_input(p)
    p.add_argument("--face", help="face for stellar subdivision, e.g. 1,2")
    p.add_argument("--i", type=int, help="stage for partial subdivision")
    p.set_defaults(handler=cmd_subdivide)

    p = sub.add_parser("hochster", help="bigraded table of full-subcomplex cohomology")
    _add_input(p)
    p.add_argument("--cap", type=int, default=20,
                   help="vertex-count cap for subset enumeration (default 20)")
    p.add_argument("--detail", action="store_true",
                   help="include per-subset reduced Betti vectors")
    p.set_defaults(handler=cmd_hochster)

    p = sub.add_parser("union-product", help="product of two full-subcomplex classes")
    _add_input(p)
    p.add_argument("--j1", required=True, help="first vertex subset, e.g. 1,3")
    p.add_argument("--p1", type=int, required=True, help="first cochain degree")
    p.add_argument("--j2", required=True, help="second vertex subset")
    p.add_argument("--p2", type=int, required=True, help="second cochain degree")
    p.set_defaults(handler=cmd_union_product)

    p = sub.add_parser("toric-dims", help="toric-space cohomology dimensions")
    _add_input(p)
    _add_seeded(p)
    p.set_defaults(handler=cmd_toric_dims)

    p = sub.add_parser("duality", help="Poincare duality pairing checks")
    _add_input(p)
    _add_seeded(p)
    p.add_argument("--variant", choices=("auto", "sphere", "manifold"),
                   default="auto")
    p.set_defaults(handler=cmd_duality)

    p = sub.add_parser("star-inject", help="star-restriction injectivity checks")
    _add_input(p)
    _add_seeded(p)
    p.add_argument("--i", type=int, help="face dimension index (1-based)")
    p.add_argument("--k", type=int, help="degree index")
    p.set_defaults(handler=cmd_star_inject)

    p = sub.add_parser("experiment", help="subdivision theorem experiments")
    p.add_argument("mode", choices=("partial-bary-wlp", "stellar-set-wlp",
                                    "stellar-transfer"))
    _add_input(p)
    _add_seeded(p, trials=True)
    p.add_argument("--k", type=int, help="stage / face dimension")
    p.add_argument("--face", help="face for stellar-transfer")
    p.add_argument("--direction", choices=("a", "b"), default="a")
    p.set_defaults(handler=cmd_experiment)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
