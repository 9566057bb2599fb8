"""Command-line front end.

Subcommands map one-to-one onto the library: ``dims`` (level-count table),
``construct`` (exact bases), ``upb`` (product bases with embedded audit),
``verify`` (finite-field or numerical check of a named space), ``classify``
(product vectors in the complement over a prime field), and ``onb``
(per-level character basis).  Exit codes: 0 success, 2 invalid input,
3 verification contradiction.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from .construct import (
    INFINITY,
    antidiagonal_zero_space,
    character_basis,
    entangled_complement,
    entangled_level,
    entangled_subspace,
    minimal_upb,
    split_antidiagonal_spaces,
    upb_of_size,
)
from .fields import COMPLEX, RATIONAL
from .grading import Dims, level_counts, parse_dims
from .linalg import span
from .serialize import (
    csv_matrices,
    encode_classify_report,
    encode_report,
    encode_upb_report,
    encode_upb_recipe,
    json_dumps,
    product_vectors_document,
    subspace_document,
    vectors_document,
)
from .verify import (
    DEFAULT_MAX_SWEEPS,
    DEFAULT_RESTARTS,
    DEFAULT_TOL,
    NO_WITNESS,
    WITNESS,
    BudgetExceededError,
    classify_product_vectors_fp,
    ff_verify,
    max_product_overlap,
    orthonormal_basis,
    verify_upb,
)

SPACES = ("S", "Sperp", "level:n", "example1", "example2-M", "example2-R")


@dataclass
class RunConfig:
    """Everything a run needs, resolved from flags once."""

    dims: Dims
    command: str
    field: str = "rational"
    fmt: str = "json"
    out: str | None = None
    seed: int = 0
    primes: tuple[int, ...] | None = None
    restarts: int = DEFAULT_RESTARTS
    tol: float = DEFAULT_TOL
    max_sweeps: int = DEFAULT_MAX_SWEEPS

    @staticmethod
    def from_args(args: argparse.Namespace) -> "RunConfig":
        primes = None
        if getattr(args, "primes", None):
            primes = tuple(int(p) for p in args.primes.split(","))
        return RunConfig(
            dims=parse_dims(args.dims),
            command=args.command,
            fmt=getattr(args, "format", "json"),
            out=getattr(args, "out", None),
            seed=getattr(args, "seed", 0),
            primes=primes,
            restarts=getattr(args, "restarts", DEFAULT_RESTARTS),
            tol=getattr(args, "tol", DEFAULT_TOL),
            max_sweeps=getattr(args, "max_sweeps", DEFAULT_MAX_SWEEPS),
        )


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve_space(dims: Dims, name: str):
    """Named space -> (subspace or product-vector list, expected verdict)."""
    if name == "S":
        return entangled_subspace(dims), NO_WITNESS
    if name == "Sperp":
        return entangled_complement(dims), WITNESS
    if name.startswith("level:"):
        try:
            n = int(name[len("level:"):])
        except ValueError:
            raise ValueError(f"bad level selector {name!r}") from None
        return entangled_level(dims, n), NO_WITNESS
    if name == "example1":
        if dims.k != 2:
            raise ValueError("example1 needs exactly two factors")
        return antidiagonal_zero_space(dims.d[0], dims.d[1]), NO_WITNESS
    if name in ("example2-M", "example2-R"):
        if dims.d != (4, 4):
            raise ValueError("example2 is defined for dims 4,4")
        ex = split_antidiagonal_spaces()
        if name == "example2-M":
            return ex.m_space, NO_WITNESS
        return ex.spanning_set, WITNESS
    raise ValueError(f"unknown space {name!r}; choose from {SPACES}")


def _parse_points(text: str) -> list:
    pts = []
    for part in text.split(","):
        part = part.strip()
        if part in ("inf", "oo"):
            pts.append(INFINITY)
        else:
            pts.append(Fraction(part))
    return pts


def cmd_dims(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    d = cfg.dims
    counts = level_counts(d)
    lines = [
        f"dims: {','.join(str(x) for x in d.d)}",
        f"N: {d.max_level}",
        f"total: {d.total}",
        f"dim entangled subspace: {d.total - (d.max_level + 1)}",
        f"{'n':>4} {'a_n':>6} {'a_n-1':>6} {'cumulative':>11}",
    ]
    run = 0
    for n, a in enumerate(counts):
        run += a
        lines.append(f"{n:>4} {a:>6} {a - 1:>6} {run:>11}")
    _write("\n".join(lines) + "\n", cfg.out)
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    target, _ = _resolve_space(cfg.dims, args.space)
    if isinstance(target, list):  # product vectors (example2-R)
        if cfg.fmt == "csv":
            expansions = [pv.expand() for pv in target]
            _write(csv_matrices(expansions, cfg.dims), cfg.out)
        else:
            doc = product_vectors_document(
                cfg.dims, RATIONAL, target, {"space": args.space}
            )
            _write(json_dumps(doc), cfg.out)
        return 0
    if cfg.fmt == "csv":
        if cfg.dims.k != 2:
            raise ValueError("csv output needs exactly two factors")
        _write(csv_matrices(list(target.rows), cfg.dims), cfg.out)
    else:
        _write(json_dumps(subspace_document(target, {"space": args.space})), cfg.out)
    return 0


def cmd_upb(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    points = _parse_points(args.lambdas) if args.lambdas else None
    if args.min:
        vectors = minimal_upb(cfg.dims, points)
        recipe_entry = {
            "size": len(vectors),
            "levels": [],
            "points": [
                "inf" if p is INFINITY else str(RATIONAL.coerce(p))
                for p in (points or [Fraction(t) for t in range(cfg.dims.max_level + 1)])
            ],
            "dropped": [],
        }
    else:
        record, vectors = upb_of_size(cfg.dims, args.size, points)
        recipe_entry = encode_upb_recipe(record, RATIONAL)
    report = verify_upb(vectors, cfg.dims, primes=cfg.primes, seed=cfg.seed)
    doc = product_vectors_document(
        cfg.dims, RATIONAL, vectors,
        {"upb": recipe_entry, "report": encode_upb_report(report)},
    )
    _write(json_dumps(doc), cfg.out)
    return 0 if report.is_upb else 3


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    target, expected = _resolve_space(cfg.dims, args.space)
    if isinstance(target, list):
        target = span([pv.expand() for pv in target])
    reports = []
    if args.method == "ff":
        reports = ff_verify(target, cfg.dims, cfg.primes)
    else:
        result = max_product_overlap(
            orthonormal_basis(target), cfg.dims,
            restarts=cfg.restarts, max_sweeps=cfg.max_sweeps,
            tol=cfg.tol, seed=cfg.seed,
        )
        reports = [result.report]
    verdict = WITNESS if any(r.verdict == WITNESS for r in reports) else NO_WITNESS
    doc = {
        "dims": list(cfg.dims.d),
        "space": args.space,
        "method": args.method,
        "verdict": verdict,
        "expected": expected,
        "reports": [encode_report(r) for r in reports],
    }
    _write(json_dumps(doc), cfg.out)
    return 0 if verdict == expected else 3


def cmd_classify(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    report = classify_product_vectors_fp(cfg.dims, args.prime)
    _write(json_dumps(encode_classify_report(report)), cfg.out)
    return 0 if report.passed else 3


def cmd_onb(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    basis = character_basis(cfg.dims, args.level)
    doc = vectors_document(cfg.dims, COMPLEX, basis, {"level": args.level})
    _write(json_dumps(doc), cfg.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entspace",
        description="Completely entangled subspaces and unextendible "
                    "product bases, with exact and numerical verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--dims", required=True, help="comma-separated local dimensions, e.g. 2,3")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("dims", help="level-count table and dimensions")
    add_common(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("construct", help="write a basis of a named space")
    add_common(p)
    p.add_argument("--space", required=True, help=f"one of {SPACES}")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("upb", help="build and audit an unextendible product basis")
    add_common(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--min", action="store_true", help="minimal size N+1")
    group.add_argument("--size", type=int, help="requested size (two factors only)")
    p.add_argument("--lambdas", default=None,
                   help="comma-separated parameter points, rationals or inf")
    p.add_argument("--primes", default=None, help="comma-separated oracle primes")
    p.set_defaults(func=cmd_upb)

    p = sub.add_parser("verify", help="hunt for product vectors in a named space")
    add_common(p)
    p.add_argument("--space", required=True, help=f"one of {SPACES}")
    p.add_argument("--method", choices=("ff", "als"), default="ff")
    p.add_argument("--primes", default=None)
    p.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-sweeps", dest="max_sweeps", type=int, default=DEFAULT_MAX_SWEEPS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="product vectors in the complement over F_p")
    add_common(p)
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("onb", help="character orthonormal basis of one level")
    add_common(p)
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=cmd_onb)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
