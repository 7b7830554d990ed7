"""Command-line workbench: manifest-driven sampling, spectra, limits, recovery.

Subcommands
-----------
sample     draw graphs, write edge lists + sample manifests
spectrum   sample -> build -> center/scale -> eigenvalues, with aggregates
limit      combinatorial moment tables and/or spectral density of the limit law
compare    empirical vs limit: per-order relative errors, KS distance
recover    sociability-moment recovery from edge lists / sample manifests
maxent     solve soft-configuration multipliers for a degree file

Replicates are distributed over a process pool; per-replicate seeds are
derived from the base seed by hashing, and aggregation is done in replicate
order, so outputs are byte-identical for any worker count.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import freeprob, maxent, sampler, spectra, stieltjes
from .errors import SpeclabError
from .kernel import Kernel, kernel_from_dict, load_kernel
from .sampler import SociabilityLaw, digest_of, replicate_seed
from .spectra import SpectralMeasure

DEFAULT_MOMENT_ORDERS = list(range(1, 9))


# ---------------------------------------------------------------------------
# manifest handling


def _load_manifest(args, require_model=True) -> dict:
    if args.manifest:
        with open(args.manifest) as fh:
            manifest = json.load(fh)
    else:
        manifest = {}
        if getattr(args, "kernel_file", None):
            manifest["model"] = {"kind": "kernel", "kernel": json.loads(Path(args.kernel_file).read_text())}
        elif getattr(args, "constant", None) is not None:
            manifest["model"] = {"kind": "kernel", "kernel": {"kind": "constant", "c": args.constant}}
        elif require_model:
            raise SystemExit("error: need --manifest, --kernel-file, or --constant")
        if getattr(args, "n", None):
            manifest["N"] = args.n
        manifest["eps"] = getattr(args, "eps", None) or "inv_sqrt_n"
        manifest["seeds"] = {"base": args.seed, "count": args.replicates}
        if getattr(args, "pipeline", None):
            manifest["pipeline"] = args.pipeline
    if args.seed is not None and args.manifest:
        manifest.setdefault("seeds", {})["base"] = args.seed
    if args.replicates is not None and args.manifest:
        manifest.setdefault("seeds", {})["count"] = args.replicates
    if args.out_dir:
        manifest["out_dir"] = args.out_dir
    manifest.setdefault("out_dir", "speclab_out")
    manifest.setdefault("eps", "inv_sqrt_n")
    manifest.setdefault("seeds", {"base": 0, "count": 1})
    manifest["seeds"].setdefault("base", 0)
    manifest["seeds"].setdefault("count", 1)
    ns = manifest.get("N", [])
    manifest["N"] = [int(v) for v in (ns if isinstance(ns, list) else [ns])]
    if require_model:
        for n in manifest["N"]:
            if n < 2:
                raise SystemExit("error: manifest N entries must be >= 2")
        if manifest["seeds"]["count"] < 1:
            raise SystemExit("error: manifest needs seed count >= 1")
    return manifest


def _manifest_digest(manifest: dict) -> str:
    clean = {k: v for k, v in manifest.items() if k != "out_dir"}
    return digest_of(clean)


def _resolve_eps(rule, n: int) -> float:
    if rule == "inv_sqrt_n":
        return 1.0 / math.sqrt(n)
    return float(rule)


def _model_kernel(model: dict) -> Kernel | None:
    if model["kind"] != "kernel":
        return None
    spec = model.get("kernel")
    if isinstance(spec, str):
        return load_kernel(spec)
    return kernel_from_dict(spec)


def _model_degrees(model: dict) -> np.ndarray:
    if "degrees_file" in model:
        return maxent.read_degree_file(model["degrees_file"])
    return np.asarray(model["degrees"], dtype=float)


def _draw(manifest: dict, n: int, seed: int):
    model = manifest["model"]
    kind = model["kind"]
    if kind == "kernel":
        kernel = _model_kernel(model)
        eps = _resolve_eps(manifest["eps"], n)
        return sampler.sample_adjacency(kernel, n, eps, seed), kernel
    if kind == "sociability":
        law = SociabilityLaw.from_dict(model["law"])
        eps = _resolve_eps(manifest["eps"], n)
        return sampler.sample_sociability(law, n, eps, seed), None
    if kind == "chung_lu":
        return sampler.sample_chung_lu(_model_degrees(model), seed), None
    if kind == "soft_config":
        return maxent.sample_soft_config(_model_degrees(model), seed), None
    raise SystemExit(f"error: unknown model kind {kind!r}")


def _workers(args) -> int:
    if args.workers is not None:
        return max(1, args.workers)
    env = os.environ.get("SPECLAB_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _run_tasks(tasks, fn, workers: int):
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def _write_run_record(out_dir: Path, command: str, digest: str, records, elapsed: float) -> bool:
    ok = all(r["ok"] for r in records)
    record = {
        "command": command,
        "manifest_digest": digest,
        "replicates": records,
        "all_ok": ok,
        "elapsed_s": round(elapsed, 3),
    }
    with open(out_dir / "run_record.json", "w") as fh:
        json.dump(record, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return ok


# ---------------------------------------------------------------------------
# sample


def _sample_task(task: dict) -> dict:
    manifest, n, rep = task["manifest"], task["n"], task["replicate"]
    seed = replicate_seed(manifest["seeds"]["base"], rep)
    out_dir = Path(manifest["out_dir"])
    record = {"n": n, "replicate": rep, "seed": seed, "files": [], "ok": True, "error": None}
    try:
        sample, kernel = _draw(manifest, n, seed)
        digest = task["digest"]
        stem = f"N{n}_r{rep}"
        edges_path = out_dir / f"edges_{stem}.csv"
        sampler.write_edge_list(sample, edges_path, header=f"manifest={digest} units=vertex-index")
        meta = sampler.sample_manifest(sample, kernel.digest() if kernel else digest_of(manifest["model"]))
        meta["edges_file"] = edges_path.name
        meta["manifest_digest"] = digest
        meta_path = out_dir / f"sample_{stem}.json"
        with open(meta_path, "w") as fh:
            json.dump(meta, fh, sort_keys=True)
            fh.write("\n")
        record["files"] = [str(edges_path), str(meta_path)]
    except SpeclabError as exc:
        record["ok"] = False
        record["error"] = str(exc)
    return record


def cmd_sample(args) -> int:
    manifest = _load_manifest(args)
    digest = _manifest_digest(manifest)
    out_dir = Path(manifest["out_dir"])
    out_dir.mkdir(parents=True, exist_ok=True)
    tasks = [
        {"manifest": manifest, "n": n, "replicate": rep, "digest": digest}
        for n in manifest["N"]
        for rep in range(manifest["seeds"]["count"])
    ]
    t0 = time.time()
    records = _run_tasks(tasks, _sample_task, _workers(args))
    ok = _write_run_record(out_dir, "sample", digest, records, time.time() - t0)
    for r in records:
        if not r["ok"]:
            print(f"replicate {r['replicate']} (N={r['n']}): {r['error']}", file=sys.stderr)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# spectrum


def _spectrum_task(task: dict) -> dict:
    manifest, n, rep = task["manifest"], task["n"], task["replicate"]
    seed = replicate_seed(manifest["seeds"]["base"], rep)
    out_dir = Path(manifest["out_dir"])
    record = {"n": n, "replicate": rep, "seed": seed, "files": [], "ok": True, "error": None}
    try:
        sample, kernel = _draw(manifest, n, seed)
        pipeline = manifest.get("pipeline", "adjacency")
        subtract_mean = manifest.get("subtract_mean", True)
        if pipeline == "adjacency":
            scaled = spectra.center_scale_adjacency(sample, kernel, subtract_mean=subtract_mean and kernel is not None)
        elif pipeline == "laplacian":
            if kernel is None:
                raise SystemExit("error: laplacian pipeline needs a kernel model")
            scaled = spectra.center_scale_laplacian(sample, kernel, subtract_mean=subtract_mean)
        elif pipeline == "self_normalized":
            scaled = spectra.self_normalized_scaling(sample)
        else:
            raise SystemExit(f"error: unknown pipeline {pipeline!r}")
        measure = spectra.eigenvalues(scaled)
        outputs = manifest.get("outputs", ["eigenvalues", "histogram", "moments"])
        if "eigenvalues" in outputs:
            path = out_dir / f"eigs_N{n}_r{rep}.txt"
            spectra.write_eigenvalues(measure, path, header=f"manifest={task['digest']} units=scaled-eigenvalue")
            record["files"].append(str(path))
        record["eigenvalues"] = measure.eigenvalues.tolist()
    except SpeclabError as exc:
        record["ok"] = False
        record["error"] = str(exc)
    return record


def _aggregate_spectrum(manifest: dict, digest: str, n: int, records: list) -> list[str]:
    out_dir = Path(manifest["out_dir"])
    outputs = manifest.get("outputs", ["eigenvalues", "histogram", "moments"])
    orders = [int(p) for p in manifest.get("moment_orders", DEFAULT_MOMENT_ORDERS)]
    good = [r for r in records if r["ok"]]
    files = []
    if not good:
        return files
    pooled = SpectralMeasure(np.concatenate([np.asarray(r["eigenvalues"]) for r in good]))
    if "histogram" in outputs:
        edges, masses = pooled.histogram(int(manifest.get("bins", 50)))
        path = out_dir / f"hist_N{n}.csv"
        spectra.write_histogram(edges, masses, path, header=f"manifest={digest} units=probability-mass")
        files.append(str(path))
    if "moments" in outputs:
        per_rep = [[SpectralMeasure(np.asarray(r["eigenvalues"])).moment(p) for p in orders] for r in good]
        rows = []
        for j, p in enumerate(orders):
            vals = [m[j] for m in per_rep]
            mean = math.fsum(vals) / len(vals)
            se = (
                math.sqrt(math.fsum((v - mean) ** 2 for v in vals) / (len(vals) - 1) / len(vals))
                if len(vals) > 1
                else 0.0
            )
            rows.append((p, mean, se))
        path = out_dir / f"moments_N{n}.csv"
        spectra.write_moments(rows, path, header=f"manifest={digest} units=raw-moment")
        files.append(str(path))
        if "limit_comparison" in outputs:
            limit = _limit_moments_for(manifest, orders)
            if limit is not None:
                report = {}
                for (p, mean, _), ref in zip(rows, limit):
                    if ref is None:
                        continue
                    delta = abs(mean - ref) / abs(ref) if ref != 0 else abs(mean)
                    report[str(p)] = {"empirical": mean, "limit": ref, "relative_error": delta}
                path = out_dir / f"compare_N{n}.json"
                with open(path, "w") as fh:
                    json.dump({"manifest_digest": digest, "orders": report}, fh, indent=2, sort_keys=True)
                    fh.write("\n")
                files.append(str(path))
    return files


def _limit_moments_for(manifest: dict, orders) -> list | None:
    """Limit-law moments matching the manifest's pipeline, where defined."""
    model = manifest["model"]
    pipeline = manifest.get("pipeline", "adjacency")
    grid_n = int(manifest.get("grid", 200))
    if model["kind"] == "kernel":
        kg = _model_kernel(model).discretize(grid_n)
        if pipeline == "adjacency":
            return [freeprob.mu_moments(kg, p) if p <= freeprob.MAX_MU_ORDER else None for p in orders]
        if pipeline == "laplacian":
            return [freeprob.nu_moments(kg, p) if p <= freeprob.MAX_NU_ORDER else None for p in orders]
        return None
    if model["kind"] == "sociability" and pipeline == "self_normalized":
        law = SociabilityLaw.from_dict(model["law"])
        need = max(orders) // 2
        rho = freeprob.MomentSequence.from_values([law.moment(p) for p in range(need + 1)], "closed_form")
        return [
            freeprob.boxtimes_semicircle_moments(rho, p) if p % 2 == 0 else 0.0
            for p in orders
        ]
    return None


def cmd_spectrum(args) -> int:
    manifest = _load_manifest(args)
    digest = _manifest_digest(manifest)
    out_dir = Path(manifest["out_dir"])
    out_dir.mkdir(parents=True, exist_ok=True)
    tasks = [
        {"manifest": manifest, "n": n, "replicate": rep, "digest": digest}
        for n in manifest["N"]
        for rep in range(manifest["seeds"]["count"])
    ]
    t0 = time.time()
    records = _run_tasks(tasks, _spectrum_task, _workers(args))
    for n in manifest["N"]:
        extra = _aggregate_spectrum(manifest, digest, n, [r for r in records if r["n"] == n])
        for r in records:
            if r["n"] == n and r["ok"]:
                r["files"] = r["files"] + extra
                break
    for r in records:
        r.pop("eigenvalues", None)
    ok = _write_run_record(out_dir, "spectrum", digest, records, time.time() - t0)
    for r in records:
        if not r["ok"]:
            print(f"replicate {r['replicate']} (N={r['n']}): {r['error']}", file=sys.stderr)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# limit


def cmd_limit(args) -> int:
    if args.kernel_file:
        kernel = load_kernel(args.kernel_file)
    elif args.constant is not None:
        kernel = kernel_from_dict({"kind": "constant", "c": args.constant})
    else:
        raise SystemExit("error: need --kernel-file or --constant")
    out_dir = Path(args.out_dir or "speclab_out")
    out_dir.mkdir(parents=True, exist_ok=True)
    digest = kernel.digest()
    kg = kernel.discretize(args.grid)
    if args.mu_orders:
        orders = _parse_orders(args.mu_orders)
        rows = [(p, freeprob.mu_moments(kg, p), "combinatorial") for p in orders]
        freeprob.write_moment_table(rows, out_dir / "mu_moments.csv", header=f"manifest={digest} units=raw-moment")
    if args.nu_orders:
        orders = _parse_orders(args.nu_orders)
        rows = [(p, freeprob.nu_moments(kg, p), "combinatorial") for p in orders]
        freeprob.write_moment_table(rows, out_dir / "nu_moments.csv", header=f"manifest={digest} units=raw-moment")
    if args.energies:
        lo, hi, step = (float(v) for v in args.energies.split(":"))
        energies = np.arange(lo, hi + step / 2, step)
        try:
            density, diagnostics = stieltjes.density_profile(kg, energies, eta=args.eta, tol=args.tol)
        except SpeclabError as exc:
            print(f"density solve failed: {exc}", file=sys.stderr)
            return 1
        stieltjes.write_density(
            energies, density, args.eta, out_dir / "density.csv", header=f"manifest={digest} units=density"
        )
        with open(out_dir / "solver.json", "w") as fh:
            json.dump(diagnostics, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0


def _parse_orders(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


# ---------------------------------------------------------------------------
# compare


def _read_table(path):
    """Rows of a small CSV with '#' headers skipped; returns (colnames, rows)."""
    names, rows = None, []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(",")
            if names is None and not _is_float(parts[0]):
                names = parts
                continue
            if names is None:
                names = []
            rows.append(parts)
    return names or [], rows


def _is_float(text: str) -> bool:
    try:
        float(text)
        return True
    except ValueError:
        return False


def _load_empirical(path):
    """Eigenvalue list or moments CSV, sniffed by its header row."""
    names, rows = _read_table(path)
    if names and names[0] in ("p", "order"):
        return {"moments": {int(r[0]): float(r[1]) for r in rows}}
    return {"eigenvalues": np.asarray([float(r[0]) for r in rows])}


def cmd_compare(args) -> int:
    empirical = _load_empirical(args.empirical)
    report: dict = {"empirical": str(args.empirical)}
    if args.limit_moments:
        names, rows = _read_table(args.limit_moments)
        if not names or names[0] != "order":
            raise SystemExit(f"error: {args.limit_moments} is not an order,value,method table")
        limit = {int(r[0]): float(r[1]) for r in rows}
        if "moments" in empirical:
            emp = empirical["moments"]
            missing = sorted(set(limit) - set(emp))
            if missing:
                raise SystemExit(f"error: empirical table lacks orders {missing} present in the limit table")
        else:
            measure = SpectralMeasure(empirical["eigenvalues"])
            emp = {p: measure.moment(p) for p in limit}
        deltas = {}
        for p, ref in sorted(limit.items()):
            err = abs(emp[p] - ref) / abs(ref) if ref != 0 else abs(emp[p])
            deltas[str(p)] = {"empirical": emp[p], "limit": ref, "relative_error": err}
        report["moment_deltas"] = deltas
    if args.limit_density:
        if "eigenvalues" not in empirical:
            raise SystemExit("error: KS comparison needs an eigenvalue file as the empirical input")
        names, rows = _read_table(args.limit_density)
        if not names or names[0] != "E":
            raise SystemExit(f"error: {args.limit_density} is not an E,density,eta table")
        energy = np.asarray([float(r[0]) for r in rows])
        dens = np.asarray([float(r[1]) for r in rows])
        cum = np.concatenate([[0.0], np.cumsum((dens[1:] + dens[:-1]) / 2 * np.diff(energy))])
        cum /= cum[-1]
        measure = SpectralMeasure(empirical["eigenvalues"])
        report["ks_distance"] = measure.ks_distance(lambda x: float(np.interp(x, energy, cum)))
    payload = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(payload)
    else:
        sys.stdout.write(payload)
    return 0


# ---------------------------------------------------------------------------
# recover


def _load_sample_for_recovery(path, n_override):
    path = Path(path)
    if path.suffix == ".json":
        meta = json.loads(path.read_text())
        edges_path = path.parent / meta["edges_file"]
        n = int(meta["N"])
        eps = float(meta["eps"])
    else:
        edges_path, eps = path, float("nan")
        if not n_override:
            raise SystemExit("error: raw edge lists need --n")
        n = int(n_override)
    _, rows = _read_table(edges_path)
    pairs = np.asarray([[int(r[0]), int(r[1])] for r in rows], dtype=np.int64)
    upper = np.zeros(n * (n - 1) // 2, dtype=np.uint8)
    if pairs.size:
        i, j = pairs[:, 0], pairs[:, 1]
        flat = i * (2 * n - i - 1) // 2 + (j - i - 1)
        upper[flat] = 1
    return sampler.GraphSample(n, upper, eps, "file", 0)


def cmd_recover(args) -> int:
    if args.n_max < 1:
        raise SystemExit("error: --n-max must be at least 1 (nothing to recover otherwise)")
    out_dir = Path(args.out_dir or "speclab_out")
    out_dir.mkdir(parents=True, exist_ok=True)
    per_replicate = []
    for path in args.inputs:
        sample = _load_sample_for_recovery(path, args.n)
        scaled = spectra.self_normalized_scaling(sample)
        measure = spectra.eigenvalues(scaled)
        if not args.keep_top:
            # the conditional mean is rank one: one Perron outlier escapes the
            # bulk and would pollute every moment of order >= 4
            measure = SpectralMeasure(measure.eigenvalues[:-1])
        boxtimes = freeprob.MomentSequence.from_values(
            [measure.moment(p) for p in range(2 * args.n_max + 1)], "empirical"
        )
        per_replicate.append(freeprob.recover_rho_moments(boxtimes))
    digest = digest_of({"inputs": [str(p) for p in args.inputs], "n_max": args.n_max})
    rows = []
    for p in range(1, args.n_max + 1):
        vals = [rec[p] for rec in per_replicate]
        mean = math.fsum(vals) / len(vals)
        se = (
            math.sqrt(math.fsum((v - mean) ** 2 for v in vals) / (len(vals) - 1) / len(vals))
            if len(vals) > 1
            else 0.0
        )
        rows.append((p, mean, se))
    spectra.write_moments(rows, out_dir / "recovered_moments.csv", header=f"manifest={digest} units=raw-moment")
    return 0


# ---------------------------------------------------------------------------
# maxent


def cmd_maxent(args) -> int:
    degrees = maxent.read_degree_file(args.degrees_file)
    out_dir = Path(args.out_dir or "speclab_out")
    out_dir.mkdir(parents=True, exist_ok=True)
    digest = digest_of({"degrees": degrees.tolist(), "tol": args.tol})
    try:
        solution = maxent.solve_multipliers(degrees, tol=args.tol)
    except SpeclabError as exc:
        print(f"maxent solve failed: {exc}", file=sys.stderr)
        return 1
    maxent.write_solution(solution, out_dir / "solution.csv", header=f"manifest={digest} units=multiplier")
    with open(out_dir / "maxent_report.json", "w") as fh:
        json.dump(
            {"residual": solution.residual, "iterations": solution.iterations, "tol": args.tol},
            fh,
            indent=2,
            sort_keys=True,
        )
        fh.write("\n")
    if args.sample:
        for rep in range(args.replicates or 1):
            seed = replicate_seed(args.seed or 0, rep)
            graph = maxent.sample_soft_config(degrees, seed, tol=args.tol)
            sampler.write_edge_list(
                graph, out_dir / f"edges_r{rep}.csv", header=f"manifest={digest} units=vertex-index"
            )
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=None, help="base seed (replicate seeds are derived)")
    p.add_argument("--replicates", type=int, default=None, help="number of replicates")
    p.add_argument("--workers", type=int, default=None, help="process pool size (env SPECLAB_WORKERS)")
    p.add_argument("--out-dir", default=None, help="output directory")
    p.add_argument("--manifest", default=None, help="experiment manifest (JSON)")


def _add_model_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kernel-file", default=None, help="kernel spec file (JSON)")
    p.add_argument("--constant", type=float, default=None, help="shortcut: constant kernel value")
    p.add_argument("--n", type=int, nargs="+", default=None, help="vertex counts")
    p.add_argument("--eps", default=None, help="edge-scale rule: a number or 'inv_sqrt_n'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="speclab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="draw graphs and write edge lists")
    _add_common(p)
    _add_model_flags(p)
    p.set_defaults(fn=cmd_sample)

    p = sub.add_parser("spectrum", help="eigenvalue pipeline with aggregates")
    _add_common(p)
    _add_model_flags(p)
    p.add_argument("--pipeline", choices=["adjacency", "laplacian", "self_normalized"], default=None)
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("limit", help="combinatorial moments / spectral density of the limit")
    _add_common(p)
    p.add_argument("--kernel-file", default=None)
    p.add_argument("--constant", type=float, default=None)
    p.add_argument("--grid", type=int, default=200, help="spatial grid resolution")
    p.add_argument("--mu-orders", default=None, help="comma-separated adjacency-limit orders")
    p.add_argument("--nu-orders", default=None, help="comma-separated Laplacian-limit orders")
    p.add_argument("--energies", default=None, help="density grid lo:hi:step")
    p.add_argument("--eta", type=float, default=1e-3, help="imaginary offset for the density")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(fn=cmd_limit)

    p = sub.add_parser("compare", help="empirical vs limit report")
    _add_common(p)
    p.add_argument("--empirical", required=True, help="eigenvalue file or moments CSV")
    p.add_argument("--limit-moments", default=None, help="order,value,method CSV")
    p.add_argument("--limit-density", default=None, help="E,density,eta CSV")
    p.add_argument("--out", default=None, help="report path (default: stdout)")
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("recover", help="sociability moment recovery")
    _add_common(p)
    p.add_argument("--inputs", nargs="+", required=True, help="sample manifests or edge lists")
    p.add_argument("--n", type=int, default=None, help="vertex count for raw edge lists")
    p.add_argument("--n-max", type=int, default=4, help="highest recovered moment order")
    p.add_argument("--keep-top", action="store_true", help="keep the Perron outlier in the moments")
    p.set_defaults(fn=cmd_recover)

    p = sub.add_parser("maxent", help="soft configuration model solver")
    _add_common(p)
    p.add_argument("--degrees-file", required=True, help="target degrees, one per line")
    p.add_argument("--tol", type=float, default=1e-8, help="degree residual tolerance")
    p.add_argument("--sample", action="store_true", help="also draw graphs from the solution")
    p.set_defaults(fn=cmd_maxent)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SpeclabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
