"""Command-line entry point: compress, decompose, benchmark, compare.

Every subcommand is deterministic byte-for-byte given identical inputs,
flags, and seed. Wall-clock timings are therefore opt-in (``--timing``);
without the flag, report runtime columns are 0.0.

Exit codes: 0 success, 1 domain error (one-line diagnostic on stderr),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .bench import (
    DEFAULT_SEED,
    centering_sensitivity,
    reconstruction_error,
    run_benchmark,
    stability_experiment,
)
from .errors import DegenerateSpectrumError, DimreduceError
from .image_io import read_pgm, read_ppm, write_pgm, write_ppm
from .linalg import matrix_from_csv, matrix_to_csv
from .lowrank import reconstruct, truncate
from .pca import PCA
from .svd import svd


def _fmt(x: float) -> str:
    """Full round-trip decimal formatting of a double."""
    return repr(float(x))


def _parse_ranks(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"ranks must be comma-separated integers, got {text!r}")


def _add_common(parser: argparse.ArgumentParser, *, ranks=False, report=False, seed=True):
    if ranks:
        parser.add_argument(
            "--rank",
            "--ranks",
            dest="ranks",
            type=_parse_ranks,
            required=True,
            metavar="K[,K2,...]",
            help="retained rank(s); a single rank is a one-element list",
        )
    if report:
        parser.add_argument("--report", choices=("csv", "json"), default="csv")
        parser.add_argument(
            "--timing",
            action="store_true",
            help="measure wall-clock runtimes (non-reproducible output)",
        )
    if seed:
        parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--output", metavar="PATH", help="write results here instead of stdout")


def _add_input(parser: argparse.ArgumentParser):
    parser.add_argument("--input", required=True, metavar="PATH")
    parser.add_argument(
        "--input-format",
        choices=("auto", "pgm", "ppm", "csv"),
        default="auto",
        help="override type inference from the file extension",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dimreduce",
        description="Low-rank compression, PCA/SVD decomposition, and benchmarking "
        "for dense matrices and PGM/PPM images.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("compress", help="write a rank-k approximation of an image or matrix")
    _add_input(p)
    _add_common(p, ranks=True)
    p.add_argument("--method", choices=("pca", "svd"), default="svd")
    p.add_argument("--binary", action="store_true", help="write binary (P5/P6) image output")
    p.set_defaults(func=_cmd_compress)

    p = sub.add_parser("pca", help="report the covariance eigenvalue spectrum")
    _add_input(p)
    p.add_argument("--rank", "--ranks", dest="ranks", type=_parse_ranks, metavar="S",
                   help="number of components to retain (default: all features)")
    p.add_argument("--report", choices=("csv", "json"), default="csv")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=_cmd_pca)

    p = sub.add_parser("svd", help="report singular values and numerical rank")
    _add_input(p)
    p.add_argument("--report", choices=("csv", "json"), default="csv")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=_cmd_svd)

    p = sub.add_parser("bench", help="per-rank error/energy/runtime report")
    _add_input(p)
    _add_common(p, ranks=True, report=True)
    p.add_argument("--method", choices=("pca", "svd"), default="svd")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("stability", help="singular values via SVD vs covariance eigenvalues")
    p.add_argument("--size", type=int, default=8, metavar="N")
    p.add_argument("--cond", type=float, default=1e8)
    p.add_argument("--report", choices=("csv", "json"), default="csv")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=_cmd_stability)

    p = sub.add_parser("compare", help="PCA and SVD benchmark rows plus centering sensitivity")
    _add_input(p)
    _add_common(p, ranks=True, report=True)
    p.add_argument("--with-stability", action="store_true")
    p.add_argument("--size", type=int, default=8, metavar="N")
    p.add_argument("--cond", type=float, default=1e8)
    p.set_defaults(func=_cmd_compare)
    return parser


def _infer_format(path: str, override: str) -> str:
    if override != "auto":
        return override
    suffix = Path(path).suffix.lower()
    if suffix in (".pgm", ".ppm", ".csv"):
        return suffix[1:]
    raise DimreduceError(
        f"cannot infer input type from {path!r}; pass --input-format pgm|ppm|csv"
    )


def _load_matrix(args) -> tuple[np.ndarray, str]:
    """Load a single-plane input as (matrix, kind) where kind is pgm or csv."""
    kind = _infer_format(args.input, args.input_format)
    data = Path(args.input).read_bytes()
    if kind == "pgm":
        return read_pgm(data), "pgm"
    if kind == "csv":
        return matrix_from_csv(data.decode("utf-8")), "csv"
    raise DimreduceError(f"{args.subcommand} requires a single-plane input (PGM or CSV)")


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _single_rank(args, parser_hint: str) -> int:
    if len(args.ranks) != 1:
        raise DimreduceError(f"{parser_hint} takes exactly one rank, got {len(args.ranks)}")
    return args.ranks[0]


def _compress_plane(mat: np.ndarray, k: int, method: str):
    """Rank-k reconstruction of one plane.

    Returns (x_hat, rel_error, energy_kept, energy_total) where the energy
    terms are squared singular values for SVD and covariance eigenvalues for
    PCA, so multi-plane callers can aggregate consistently.
    """
    limit = min(mat.shape)
    if not 1 <= k <= limit:
        raise DimreduceError(
            f"rank must be in [1, {limit}] for a {mat.shape[0]}x{mat.shape[1]} input, got {k}"
        )
    if method == "pca":
        model = PCA(n_components=k).fit(mat)
        x_hat = model.inverse_transform(model.transform(mat))
        total = float(model.eigenvalues_.sum())
        if total <= 0.0:
            raise DegenerateSpectrumError("total variance is zero (constant data)")
        kept = float(model.eigenvalues_[:k].sum())
    else:
        factors = svd(mat)
        x_hat = reconstruct(truncate(factors, k))
        sq = np.square(factors.sigma)
        kept = float(sq[: min(k, factors.rank)].sum())
        total = float(sq.sum())
    _, rel = reconstruction_error(mat, x_hat)
    return x_hat, rel, kept, total


def _cmd_compress(args) -> int:
    k = _single_rank(args, "compress")
    kind = _infer_format(args.input, args.input_format)
    data = Path(args.input).read_bytes()
    lines = []
    if kind == "ppm":
        image = read_ppm(data)
        planes = []
        sq_err = 0.0
        sq_ref = 0.0
        kept_all = 0.0
        total_all = 0.0
        for name, idx in (("red", 0), ("green", 1), ("blue", 2)):
            plane = np.ascontiguousarray(image[:, :, idx])
            x_hat, rel, kept, total = _compress_plane(plane, k, args.method)
            planes.append(x_hat)
            lines.append(
                f"k={k} channel={name} rel_error={_fmt(rel)} energy={_fmt(kept / total)}"
            )
            sq_err += float(np.sum(np.square(plane - x_hat)))
            sq_ref += float(np.sum(np.square(plane)))
            kept_all += kept
            total_all += total
        rel_all = float(np.sqrt(sq_err / sq_ref))
        lines.append(
            f"k={k} channel=all rel_error={_fmt(rel_all)} energy={_fmt(kept_all / total_all)}"
        )
        if args.output:
            Path(args.output).write_bytes(
                write_ppm(np.stack(planes, axis=2), binary=args.binary)
            )
    else:
        mat = read_pgm(data) if kind == "pgm" else matrix_from_csv(data.decode("utf-8"))
        x_hat, rel, kept, total = _compress_plane(mat, k, args.method)
        lines.append(f"k={k} rel_error={_fmt(rel)} energy={_fmt(kept / total)}")
        if args.output:
            if kind == "pgm":
                Path(args.output).write_bytes(write_pgm(x_hat, binary=args.binary))
            else:
                Path(args.output).write_text(matrix_to_csv(x_hat), encoding="utf-8")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_pca(args) -> int:
    mat, _ = _load_matrix(args)
    s = None
    if args.ranks is not None:
        s = _single_rank(args, "pca")
    model = PCA(n_components=s).fit(mat)
    ratios = model.explained_variance_ratio_
    if args.report == "json":
        obj = {
            "n_components": model.n_components_,
            "means": [float(v) for v in model.mean_],
            "spectrum": [float(v) for v in model.eigenvalues_],
            "explained_variance_ratio": [float(v) for v in ratios],
            "components": [[float(v) for v in row] for row in model.components_],
        }
        text = json.dumps(obj, indent=2) + "\n"
    else:
        rows = ["index,eigenvalue,explained_variance_ratio"]
        for i, (lam, r) in enumerate(zip(model.eigenvalues_, ratios)):
            rows.append(f"{i},{_fmt(lam)},{_fmt(r)}")
        text = "\n".join(rows) + "\n"
    _emit(text, args.output)
    return 0


def _cmd_svd(args) -> int:
    mat, _ = _load_matrix(args)
    factors = svd(mat)
    if args.report == "json":
        obj = {"rank": factors.rank, "sigma": [float(v) for v in factors.sigma]}
        text = json.dumps(obj, indent=2) + "\n"
    else:
        rows = ["index,sigma"]
        for i, s in enumerate(factors.sigma):
            rows.append(f"{i},{_fmt(s)}")
        text = "\n".join(rows) + "\n"
    _emit(text, args.output)
    return 0


def _cmd_bench(args) -> int:
    mat, _ = _load_matrix(args)
    report = run_benchmark(mat, args.method, args.ranks, timing=args.timing)
    text = report.to_json() if args.report == "json" else report.to_csv()
    _emit(text, args.output)
    return 0


def _cmd_stability(args) -> int:
    report = stability_experiment(args.size, args.cond, seed=args.seed)
    text = report.to_json() if args.report == "json" else report.to_csv()
    _emit(text, args.output)
    return 0


def _cmd_compare(args) -> int:
    mat, _ = _load_matrix(args)
    pca_report = run_benchmark(mat, "pca", args.ranks, timing=args.timing)
    svd_report = run_benchmark(mat, "svd", args.ranks, timing=args.timing)
    k0 = min(args.ranks)
    svd_shift, pca_shift = centering_sensitivity(mat, k0)
    stability = None
    if args.with_stability:
        stability = stability_experiment(args.size, args.cond, seed=args.seed)

    if args.report == "json":
        obj = {
            "rows": pca_report.to_objects() + svd_report.to_objects(),
            "centering": {"k": k0, "svd_shift": svd_shift, "pca_shift": pca_shift},
            "stability": None if stability is None else json.loads(stability.to_json()),
        }
        text = json.dumps(obj, indent=2) + "\n"
    else:
        sections = [pca_report.to_csv() + svd_report.to_csv(include_header=False)]
        sections.append(f"k,svd_shift,pca_shift\n{k0},{_fmt(svd_shift)},{_fmt(pca_shift)}\n")
        if stability is not None:
            sections.append(stability.to_csv())
        text = "\n".join(sections)
    _emit(text, args.output)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DimreduceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
