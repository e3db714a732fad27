"""Command-line entry point: gen, color, verify, exact, bench.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass

from .circle import cf_color_circle_graph
from .errors import (
    DegenerateCrossingError,
    GeneralPositionError,
    ImproperClassesError,
    PartitionConditionError,
    PatternHypothesisError,
    ResampleBudgetExceeded,
    SearchCapExceeded,
)
from .geometry import intersection_graph
from .grounded import cf_color_grounded
from .hypergraph import Coloring, degeneracy_color, first_k_cf_violation, neighborhood_hypergraph, neighborhood_owners
from .instances import (
    complete_graph,
    gen_circle_lower_bound,
    gen_frames_clique_gadget,
    gen_gbonc,
    gen_interval_filaments,
    random_bipartite_strings,
    random_corner_lshapes,
    random_frames,
    random_grounded_lshapes,
    random_hypergraph,
    random_intervals,
)
from .lll import k_cf_color_general
from .oracle import ExceedsLimit, exact_k_cf_chromatic
from .patterns import (
    cf_color_bounded_chromatic,
    compute_patterns,
    frame_curves,
    k_cf_color_frames,
    k_cf_color_lshapes,
    lshape_curves,
    s_cf_color,
)
from .serialization import (
    Instance,
    InstanceFormatError,
    coloring_to_json,
    dumps,
    instance_to_json,
    read_coloring,
    read_instance,
    write_text,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------- gen

GEN_KINDS = {
    "intervals-random": ("n",),
    "grounded-random": ("n",),
    "frames-random": ("n",),
    "lshapes-random": ("n",),
    "strings-random": ("n",),
    "hypergraph-random": ("n", "m"),
    "lb-circle": ("t", "k"),
    "frames-gadget": ("m",),
    "gbonc": ("t", "k"),
    "filaments": ("t", "k"),
}


def _params(kind: str, raw: list[str]) -> dict[str, int]:
    if kind not in GEN_KINDS:
        raise UsageError(f"unknown kind {kind!r}; expected one of {', '.join(GEN_KINDS)}")
    out = {}
    for tok in raw:
        key, sep, val = tok.partition("=")
        if not sep:
            raise UsageError(f"parameter {tok!r} is not key=value")
        try:
            out[key] = int(val)
        except ValueError as exc:
            raise UsageError(f"parameter {key} needs an integer, got {val!r}") from exc
    need = GEN_KINDS[kind]
    missing = [p for p in need if p not in out]
    extra = [p for p in out if p not in need]
    if missing or extra:
        raise UsageError(f"{kind} takes {', '.join(need)}; missing {missing}, unexpected {extra}")
    return out


def generate(kind: str, params: dict[str, int], seed: int = 0) -> Instance:
    try:
        if kind == "intervals-random":
            return Instance("intervals", random_intervals(params["n"], seed))
        if kind == "grounded-random":
            return Instance("grounded_lshapes", random_grounded_lshapes(params["n"], seed))
        if kind == "frames-random":
            return Instance("frames", random_frames(params["n"], seed))
        if kind == "lshapes-random":
            return Instance("corner_lshapes", random_corner_lshapes(params["n"], seed))
        if kind == "strings-random":
            inst = random_bipartite_strings(params["n"], seed)
            return Instance("strings", list(inst.strings), inst.classes)
        if kind == "hypergraph-random":
            return Instance("hypergraph", random_hypergraph(params["n"], params["m"], seed))
        if kind == "lb-circle":
            return Instance("intervals", gen_circle_lower_bound(params["t"], params["k"]))
        if kind == "frames-gadget":
            return Instance("frames", gen_frames_clique_gadget(params["m"]))
        if kind == "gbonc":
            return Instance("hypergraph", gen_gbonc(complete_graph(params["t"]), params["k"]))
        if kind == "filaments":
            fil = gen_interval_filaments(params["t"], params["k"])
            desc = {
                "nested": [[iv.a, iv.b] for iv in fil.nested],
                "feet": [[list(s), [iv.a, iv.b]] for s, iv in fil.feet.items()],
            }
            return Instance("hypergraph", fil.hypergraph, descriptor=desc)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    raise UsageError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------- color

ALGOS = {
    "circle-cf": ("intervals",),
    "grounded-cf": ("grounded_lshapes",),
    "lshapes-2cf": ("corner_lshapes",),
    "frames-4cf": ("frames",),
    "pattern-scf": ("frames", "corner_lshapes"),
    "bounded-chromatic": ("strings",),
    "general-kcf": ("intervals", "grounded_lshapes", "corner_lshapes", "frames", "strings", "hypergraph"),
}

DEFAULT_K = {"circle-cf": 1, "grounded-cf": 1, "lshapes-2cf": 2, "frames-4cf": 4, "bounded-chromatic": 1, "general-kcf": 2}


@dataclass
class ColorResult:
    coloring: Coloring
    k: int
    verified: bool
    violation: tuple[int, ...] | None  # first violated hyperedge
    owner: int | None  # vertex whose neighborhood it is, for geometric instances


def string_classes(inst: Instance) -> tuple[int, ...]:
    """Classes from the file, else a degeneracy coloring of the intersection graph."""
    if inst.classes is not None:
        return inst.classes
    return degeneracy_color(intersection_graph(inst.items)).colors


def run_algo(inst: Instance, algo: str, k: int | None = None, seed: int = 0) -> tuple[Coloring, int]:
    """Color ``inst`` with ``algo``; returns the coloring and the k it is claimed to be k-CF for."""
    if algo not in ALGOS:
        raise UsageError(f"unknown algo {algo!r}; expected one of {', '.join(ALGOS)}")
    if inst.kind not in ALGOS[algo]:
        raise UsageError(f"algo {algo} does not accept instances of kind {inst.kind}")
    if algo == "pattern-scf":
        curves = frame_curves(inst.items) if inst.kind == "frames" else lshape_curves(inst.items)
        fam = compute_patterns(curves, curves)
        return s_cf_color(fam), (max(fam.s, 1) if k is None else k)
    kk = DEFAULT_K[algo] if k is None else k
    if algo == "circle-cf":
        col = cf_color_circle_graph(inst.items)
    elif algo == "grounded-cf":
        col = cf_color_grounded(inst.items)
    elif algo == "lshapes-2cf":
        col = k_cf_color_lshapes(inst.items)
    elif algo == "frames-4cf":
        col = k_cf_color_frames(inst.items)
    elif algo == "bounded-chromatic":
        col = cf_color_bounded_chromatic(inst.items, string_classes(inst))
    else:
        if kk < 2:
            raise UsageError("general-kcf needs k >= 2")
        col = k_cf_color_general(inst.hypergraph(), kk, seed)
    return col, kk


def check(inst: Instance, col: Coloring, k: int) -> ColorResult:
    if len(col) != len(inst):
        raise UsageError(f"coloring has {len(col)} entries for an instance of size {len(inst)}")
    if inst.kind == "hypergraph":
        h, owners = inst.items, None
    else:
        g = intersection_graph(inst.items)
        h = neighborhood_hypergraph(g)
        owners = neighborhood_owners(g)
    bad = first_k_cf_violation(h, col.colors, k)
    if bad is None:
        return ColorResult(col, k, True, None, None)
    return ColorResult(col, k, False, h.edges[bad], None if owners is None else owners[bad])


def _describe(res: ColorResult) -> str:
    if res.verified:
        return f"pass: {res.k}-CF with {res.coloring.palette_size} colors"
    where = f" (neighborhood of {res.owner})" if res.owner is not None else ""
    return f"fail: hyperedge {list(res.violation)}{where} has no color used between 1 and {res.k} times"


# ---------------------------------------------------------------- bench

BENCH_SUITES = {
    "circle-growth": ("intervals-random", "circle-cf", (16, 64, 256, 1024)),
    "grounded-growth": ("grounded-random", "grounded-cf", (100, 500, 2000)),
    "lshapes-growth": ("lshapes-random", "lshapes-2cf", (100, 500, 2000)),
    "frames-growth": ("frames-random", "frames-4cf", (100, 500, 2000)),
    "strings-growth": ("strings-random", "bounded-chromatic", (100, 300, 1000)),
    "general-kcf": ("hypergraph-random", "general-kcf", (50, 100, 200)),
}

BENCH_COLUMNS = ("suite", "instance_kind", "n", "seed", "algo", "k", "colors", "verified", "millis")


def bench_rows(suite: str, seeds: int = 3, sizes: tuple[int, ...] | None = None):
    if suite not in BENCH_SUITES:
        raise UsageError(f"unknown suite {suite!r}; expected one of {', '.join(BENCH_SUITES)}")
    kind, algo, ladder = BENCH_SUITES[suite]
    for n in sizes or ladder:
        for seed in range(seeds):
            params = {"n": n, "m": 2 * n} if kind == "hypergraph-random" else {"n": n}
            inst = generate(kind, params, seed)
            t0 = time.perf_counter()
            col, k = run_algo(inst, algo, seed=seed)
            millis = (time.perf_counter() - t0) * 1000
            res = check(inst, col, k)
            yield {
                "suite": suite, "instance_kind": inst.kind, "n": n, "seed": seed, "algo": algo,
                "k": k, "colors": col.palette_size, "verified": res.verified, "millis": f"{millis:.1f}",
            }


# ---------------------------------------------------------------- entry


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cfcolor", description="Conflict-free colorings of geometric intersection graphs and hypergraphs.")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="write an instance file")
    g.add_argument("kind", help=", ".join(GEN_KINDS))
    g.add_argument("params", nargs="*", help="key=value, e.g. n=100 or t=3 k=1")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", help="output file (default stdout)")

    c = sub.add_parser("color", help="color an instance and write a verified coloring")
    c.add_argument("--algo", required=True, choices=sorted(ALGOS))
    c.add_argument("--k", type=int)
    c.add_argument("--in", dest="inp", required=True)
    c.add_argument("--out")
    c.add_argument("--seed", type=int, default=0)

    v = sub.add_parser("verify", help="check a coloring against an instance")
    v.add_argument("--in", dest="inp", required=True)
    v.add_argument("--coloring", required=True)
    v.add_argument("--k", type=int)

    e = sub.add_parser("exact", help="exact k-CF chromatic number of a small instance")
    e.add_argument("--in", dest="inp", required=True)
    e.add_argument("--k", type=int, default=1)
    e.add_argument("--limit", type=int)
    e.add_argument("--node-cap", type=int, default=50_000_000)

    b = sub.add_parser("bench", help="run a benchmark suite and write CSV rows")
    b.add_argument("--suite", required=True, choices=sorted(BENCH_SUITES))
    b.add_argument("--out", help="CSV file (default stdout)")
    b.add_argument("--seeds", type=int, default=3)
    b.add_argument("--sizes", type=lambda s: tuple(int(x) for x in s.split(",")), help="comma-separated ladder override")
    return p


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        write_text(path, text)


def _run(args) -> int:
    if args.cmd == "gen":
        inst = generate(args.kind, _params(args.kind, args.params), args.seed)
        _emit(dumps(instance_to_json(inst)), args.out)
        return EXIT_OK

    if args.cmd == "color":
        inst = read_instance(args.inp)
        col, k = run_algo(inst, args.algo, args.k, args.seed)
        res = check(inst, col, k)
        if not res.verified:
            print(_describe(res), file=sys.stderr)
            return EXIT_FAIL
        _emit(dumps(coloring_to_json(col, args.algo, k, True)), args.out)
        if args.out is not None:
            print(_describe(res))
        return EXIT_OK

    if args.cmd == "verify":
        inst = read_instance(args.inp)
        col, doc = read_coloring(args.coloring)
        k = args.k if args.k is not None else int(doc.get("k", 1))
        res = check(inst, col, k)
        print(_describe(res))
        return EXIT_OK if res.verified else EXIT_FAIL

    if args.cmd == "exact":
        inst = read_instance(args.inp)
        val = exact_k_cf_chromatic(inst.hypergraph(), args.k, args.limit, args.node_cap)
        print("exceeds limit" if isinstance(val, ExceedsLimit) else val)
        return EXIT_OK

    if args.cmd == "bench":
        out = open(args.out, "w", newline="") if args.out else sys.stdout
        try:
            w = csv.DictWriter(out, fieldnames=BENCH_COLUMNS)
            w.writeheader()
            ok = True
            for row in bench_rows(args.suite, args.seeds, args.sizes):
                w.writerow(row)
                ok &= row["verified"]
        finally:
            if args.out:
                out.close()
        return EXIT_OK if ok else EXIT_FAIL
    return EXIT_INPUT


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except (SearchCapExceeded, ResampleBudgetExceeded) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (
        UsageError, InstanceFormatError, GeneralPositionError, DegenerateCrossingError,
        ImproperClassesError, PartitionConditionError, PatternHypothesisError,
    ) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
