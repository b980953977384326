"""Command-line surface: parse ideal specs, run polynomial pipelines, select
engines, verify engine pairs, emit JSON/LaTeX/text, and cache results.

Exit codes: 0 success, 1 validation error, 2 guard refusal, 3 verification
mismatch.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
import time

from . import crapo, ffmethod, specialize
from .errors import (
    ConstraintError,
    GuardExceeded,
    IdealTutteError,
    UnsupportedTypeError,
    VerificationMismatch,
)
from .exactpoly import BivariatePolynomial
from .ideals import (
    arrangement_of,
    complement,
    enumerate_ideals,
    ideal_from_boxes,
    ideal_from_mask,
    ideal_from_root_coords,
    iter_ideals,
)
from .rootsystems import (
    hyperplane_tuple,
    linear_order_key,
    root_poset,
    root_system_type,
)

ENGINE_CHOICES = ("auto", "ffmethod", "crapo", "oracle")
FORMAT_CHOICES = ("json", "latex", "text")
CACHE_ENV = "TUTTE_CACHE_DIR"
CACHE_VERSION = "1"

IDEAL_SPEC_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "ideal specification",
    "type": "object",
    "properties": {
        "type": {"enum": ["A", "B", "C", "D", "G2", "F4", "E6"]},
        "rank": {"type": "integer", "minimum": 1},
        "generating_boxes": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "roots": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
    },
    "required": ["type"],
    "additionalProperties": False,
}

POLYNOMIAL_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "exact polynomial",
    "type": "object",
    "properties": {
        "variables": {
            "type": "array",
            "items": {"type": "string"},
            "minItems": 2,
            "maxItems": 2,
        },
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "dx": {"type": "integer", "minimum": 0},
                    "dy": {"type": "integer", "minimum": 0},
                    "c": {"type": "string", "pattern": "^-?[0-9]+$"},
                },
                "required": ["dx", "dy", "c"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["terms"],
    "additionalProperties": True,
}


def parse_ideal_spec(data):
    """Turn a validated ideal-spec dict into an Ideal."""
    try:
        import jsonschema

        jsonschema.validate(data, IDEAL_SPEC_SCHEMA)
    except ImportError:
        pass
    except Exception as exc:  # jsonschema.ValidationError
        raise ConstraintError(f"ideal spec rejected by schema: {exc}") from None
    rst = root_system_type(data["type"], data.get("rank"))
    poset = root_poset(rst)
    has_boxes = "generating_boxes" in data
    has_roots = "roots" in data
    if has_boxes and has_roots:
        raise ConstraintError("give either generating_boxes or roots, not both")
    if has_boxes:
        return ideal_from_boxes(poset, [tuple(b) for b in data["generating_boxes"]])
    if has_roots:
        return ideal_from_root_coords(poset, [tuple(r) for r in data["roots"]])
    raise ConstraintError("ideal spec needs generating_boxes or roots")


def _ideal_from_args(args):
    if getattr(args, "ideal_file", None):
        with open(args.ideal_file) as fh:
            return parse_ideal_spec(json.load(fh))
    spec = {"type": args.type}
    if args.rank is not None:
        spec["rank"] = args.rank
    if getattr(args, "boxes", None):
        spec["generating_boxes"] = json.loads(args.boxes)
    elif getattr(args, "roots", None):
        spec["roots"] = json.loads(args.roots)
    elif getattr(args, "full", False):
        rst = root_system_type(args.type, args.rank)
        return ideal_from_mask(root_poset(rst), 0)
    else:
        raise ConstraintError("need --boxes, --roots, --ideal-file, or --full")
    return parse_ideal_spec(spec)


def _emit(args, payload_poly, provenance):
    fmt = args.format
    if fmt == "json":
        body = payload_poly.to_json_dict()
        body["provenance"] = provenance
        text = json.dumps(body, indent=2, sort_keys=True)
    elif fmt == "latex":
        text = payload_poly.to_latex()
    else:
        text = payload_poly.to_text()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


class _Cache:
    def __init__(self, args):
        self.enabled = not args.no_cache
        self.dir = args.cache_dir or os.environ.get(CACHE_ENV) or os.path.join(
            os.path.expanduser("~"), ".cache", "idealtutte"
        )

    def key(self, ideal, command, engine):
        comp_bits = ideal.complement_mask()
        raw = json.dumps(
            [
                CACHE_VERSION,
                command,
                str(ideal.rst),
                format(comp_bits, "x"),
                engine,
            ]
        )
        return hashlib.sha256(raw.encode()).hexdigest()

    def get(self, key):
        if not self.enabled:
            return None
        path = os.path.join(self.dir, key + ".json")
        if not os.path.exists(path):
            return None
        with open(path) as fh:
            return json.load(fh)

    def put(self, key, value):
        if not self.enabled:
            return
        os.makedirs(self.dir, exist_ok=True)
        path = os.path.join(self.dir, key + ".json")
        fd, tmp = tempfile.mkstemp(dir=self.dir, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(value, fh, sort_keys=True)
        os.replace(tmp, path)


def _compute_polynomial(ideal, command, engine, args):
    cache = _Cache(args)
    key = cache.key(ideal, command, engine)
    hit = cache.get(key)
    if hit is not None:
        return BivariatePolynomial.from_json_dict(hit["polynomial"]), hit["provenance"]
    primes = json.loads(args.primes) if getattr(args, "primes", None) else None
    t0 = time.time()
    if command == "coboundary":
        poly = specialize.coboundary_of_ideal(ideal, engine=engine)
    else:
        poly = specialize.tutte_of_ideal(
            ideal, engine=engine, primes=primes, max_subsets=args.max_subsets
        )
    prov = {
        "engine": engine,
        "system": str(ideal.rst),
        "hyperplanes": len(ideal.complement_indices()),
        "wall_time_s": round(time.time() - t0, 4),
    }
    if engine == "ffmethod" or (engine == "auto" and ideal.rst.is_classical):
        rank = arrangement_of(ideal).rank()
        prov["primes"] = list(ffmethod.prime_plan("A" if ideal.rst.family == "A" else ideal.rst.family, rank).primes)
    cache.put(key, {"polynomial": poly.to_json_dict(), "provenance": prov})
    return poly, prov


def _resolve_engine(engine, rst):
    if engine == "ffmethod" and not rst.is_classical:
        raise ConstraintError(f"engine ffmethod rejects exceptional type {rst.family}")
    if engine == "auto":
        return "ffmethod" if rst.is_classical else "crapo"
    return engine


def cmd_roots(args):
    rst = root_system_type(args.type, args.rank)
    poset = root_poset(rst)
    rows = []
    for r in poset.roots:
        row = {
            "index": r.index,
            "simple_coords": list(r.simple_coords),
            "ambient2": list(r.ambient2),
            "height": r.height,
            "word": linear_order_key(r),
        }
        if rst.is_classical:
            row["tuple"] = list(hyperplane_tuple(rst, r.ambient2))
        rows.append(row)
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        for row in rows:
            extra = f" tuple={tuple(row['tuple'])}" if "tuple" in row else ""
            print(
                f"{row['index']:3d} coords={tuple(row['simple_coords'])} "
                f"height={row['height']} word={row['word']}{extra}"
            )
    return 0


def cmd_ideals(args):
    rst = root_system_type(args.type, args.rank)
    poset = root_poset(rst)
    if args.count_only:
        print(sum(1 for _ in iter_ideals(poset)))
        return 0
    out = []
    for ideal in iter_ideals(poset):
        out.append(sorted(list(r.simple_coords) for r in ideal.roots()))
    if args.format == "json":
        print(json.dumps(out))
    else:
        for roots in out:
            print(roots)
    return 0


def cmd_polynomial(args, command):
    ideal = _ideal_from_args(args)
    engine = _resolve_engine(args.engine, ideal.rst)
    poly, prov = _compute_polynomial(ideal, command, engine, args)
    _emit(args, poly, prov)
    return 0


def cmd_charpoly(args):
    ideal = _ideal_from_args(args)
    engine = _resolve_engine(args.engine, ideal.rst)
    chi = specialize.characteristic_polynomial(ideal, engine=engine)
    text = chi.to_text("q")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_minors(args):
    rst = root_system_type(args.type, args.rank)
    poset = root_poset(rst)
    vectors = []
    for r in poset.roots:
        if any(c % 2 for c in r.ambient2):
            vectors.append(r.ambient2)
        else:
            vectors.append(tuple(c // 2 for c in r.ambient2))
    profile = ffmethod.minor_set(vectors)
    mags = profile.magnitudes()
    if args.format == "json":
        print(json.dumps({"system": str(rst), "minor_magnitudes": mags}))
    else:
        body = ", ".join(
            ["0"] * (1 if 0 in mags else 0)
            + [f"±{m}" for m in mags if m]
        )
        print("{" + body + "}")
    return 0


def cmd_verify(args):
    rst = root_system_type(args.type, args.rank)
    poset = root_poset(rst)
    engines = [e.strip() for e in args.engines.split(",")]
    for e in engines:
        if e not in ENGINE_CHOICES:
            raise ConstraintError(f"unknown engine {e!r}")
    if len(engines) < 2:
        raise ConstraintError("verify needs at least two engines")
    if args.all_ideals:
        ideals = enumerate_ideals(poset)
    else:
        ideals = [_ideal_from_args(args)]
    checked = 0
    counted = 0
    for ideal in ideals:
        polys = []
        for e in engines:
            eng = _resolve_engine(e, rst)
            polys.append((e, specialize.tutte_of_ideal(ideal, engine=eng)))
        base_name, base = polys[0]
        for name, poly in polys[1:]:
            if poly != base:
                raise VerificationMismatch(
                    f"{base_name} and {name} disagree on {ideal!r}: "
                    f"{base.to_text()} vs {poly.to_text()}"
                )
        if rst.is_classical and "ffmethod" in engines:
            # additionally cross-check the coboundary profile at the first
            # plan prime against exhaustive point counting, guard permitting
            from .ideals import arrangement_of, complement

            comp = complement(ideal)
            if comp.roots:
                rank = arrangement_of(ideal).rank()
                p = ffmethod.prime_plan(rst.family, rank).primes[0]
                n = rst.ambient_dim
                if p ** n <= args.max_points:
                    model = ffmethod.CountingModel(n, comp.hyperplanes)
                    bf = ffmethod.count_points_bruteforce(
                        comp.hyperplanes, n, p, max_points=args.max_points
                    )
                    if model.point_count_profile(p) != list(bf.counts):
                        raise VerificationMismatch(
                            f"counting model and brute force disagree at p={p} on {ideal!r}"
                        )
                    counted += 1
        checked += 1
    extra = f" (+{counted} brute-force point-count checks)" if counted else ""
    print(
        f"verified {checked} ideal(s) of {rst} across engines "
        f"{', '.join(engines)}{extra}"
    )
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="idealtutte",
        description="Exact Tutte/coboundary/characteristic polynomials of ideal "
        "arrangements of root systems",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, ideal_input=True):
        p.add_argument("--type", required=True, help="A, B, C, D, G2, F4, or E6")
        p.add_argument("--rank", type=int, default=None)
        if ideal_input:
            p.add_argument("--boxes", help="JSON list of generating boxes, e.g. [[1,4],[2,0]]")
            p.add_argument("--roots", help="JSON list of simple-coordinate root vectors")
            p.add_argument("--ideal-file", help="path to a JSON ideal spec")
            p.add_argument("--full", action="store_true", help="the full arrangement (empty ideal)")
            p.add_argument("--engine", choices=ENGINE_CHOICES, default="auto")
        p.add_argument("--format", choices=FORMAT_CHOICES, default="text")
        p.add_argument("--out", help="write the result to this file")
        p.add_argument("--primes", help="override interpolation primes (JSON list)")
        p.add_argument("--max-points", type=int, default=ffmethod.DEFAULT_MAX_POINTS)
        p.add_argument("--max-subsets", type=int, default=crapo.DEFAULT_MAX_BASIS_SUBSETS)
        p.add_argument("--no-cache", action="store_true")
        p.add_argument("--cache-dir")

    p = sub.add_parser("roots", help="list the positive roots")
    common(p, ideal_input=False)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("ideals", help="enumerate ideals")
    common(p, ideal_input=False)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("tutte", help="Tutte polynomial of an ideal arrangement")
    common(p)
    p.set_defaults(func=lambda a: cmd_polynomial(a, "tutte"))

    p = sub.add_parser("coboundary", help="coboundary polynomial of an ideal arrangement")
    common(p)
    p.set_defaults(func=lambda a: cmd_polynomial(a, "coboundary"))

    p = sub.add_parser("charpoly", help="characteristic polynomial of an ideal arrangement")
    common(p)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("verify", help="cross-check engines on one or all ideals")
    common(p)
    p.add_argument("--all-ideals", action="store_true")
    p.add_argument("--engines", default="auto,oracle")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("minors", help="minor set of the positive-root matrix")
    common(p, ideal_input=False)
    p.set_defaults(func=cmd_minors)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except VerificationMismatch as exc:
        print(f"verification mismatch: {exc}", file=sys.stderr)
        return 3
    except GuardExceeded as exc:
        print(f"guard refused: {exc}", file=sys.stderr)
        return 2
    except (ConstraintError, UnsupportedTypeError, IdealTutteError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
