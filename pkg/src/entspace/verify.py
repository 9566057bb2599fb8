"""Two independent verifiers for complete entanglement.

The finite-field route enumerates every projective product tuple over F_p
and tests exact membership, giving a definitive statement about the reduced
subspace.  The numerical route runs alternating single-site maximization of
the product overlap over complex floats and reports a margin; it can certify
the presence of a product vector (overlap near 1) but never the absence.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

import numpy as np

from .construct import INFINITY, ProductVector, entangled_subspace, \
    level_sum_vector, vandermonde_vector
from .fields import COMPLEX, Fp, RATIONAL, is_prime, prime_field
from .grading import Dims
from .linalg import StateVector, Subspace, integer_generators, orthocomplement, \
    reduce_mod_p, span

ENUMERATION_BUDGET = 10**7
DEFAULT_PRIME_POOL = (5, 7, 11)
DEFAULT_RESTARTS = 64
DEFAULT_MAX_SWEEPS = 500
DEFAULT_TOL = 1e-10

NO_WITNESS = "no-product-vector-found"
WITNESS = "witness-found"


class BudgetExceededError(RuntimeError):
    """Enumeration would need more membership tests than allowed."""

    def __init__(self, estimate: int, budget: int):
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"enumeration needs {estimate} membership tests, budget is {budget}"
        )


@dataclass
class VerificationReport:
    method: str                 # "finite-field" | "als"
    params: dict
    verdict: str                # NO_WITNESS | WITNESS
    witness: ProductVector | None
    metrics: dict
    certified_dims: dict

    def __post_init__(self) -> None:
        if (self.witness is not None) != (self.verdict == WITNESS):
            raise ValueError("witness must be present exactly when found")


def default_primes(dims: Dims, want: int = 2) -> list[int]:
    """Primes exceeding the top level, drawn from the default pool.

    The pool extends upward when the top level is large enough to exhaust it;
    at least ``want`` primes are always returned.
    """
    top = dims.max_level
    out = [p for p in DEFAULT_PRIME_POOL if p > top]
    q = max(DEFAULT_PRIME_POOL[-1], top) + 1
    while len(out) < want:
        if is_prime(q):
            out.append(q)
        q += 1
    return out


def _integer_rows(generators, dims: Dims) -> list[StateVector]:
    if isinstance(generators, Subspace):
        if generators.dims != dims:
            raise TypeError(f"subspace dims {generators.dims} do not match {dims}")
        if generators.field == RATIONAL:
            return integer_generators(generators)
        return list(generators.rows)
    return list(generators)


def candidate_count(dims: Dims, p: int) -> int:
    """Number of projective product tuples over F_p."""
    return math.prod((p**d - 1) // (p - 1) for d in dims.d)


def _projective_site_vectors(d: int, p: int) -> list[tuple[int, ...]]:
    # first nonzero coordinate pinned to 1: (p^d - 1)/(p - 1) vectors
    out = []
    for lead in range(d):
        for rest in itertools.product(range(p), repeat=d - lead - 1):
            out.append((0,) * lead + (1,) + rest)
    return out


def find_product_vectors_fp(
    generators, dims: Dims, p: int, budget: int = ENUMERATION_BUDGET
) -> list[ProductVector]:
    """All projective product vectors lying in the given subspace over F_p.

    The subspace is spanned from the (integer) generators after reduction
    mod p.  An empty result is an exact statement about F_p; it supports the
    complex-field claim only for p above the top level, which is why smaller
    primes are rejected outright.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p <= dims.max_level:
        raise ValueError(
            f"prime {p} must exceed the top level {dims.max_level}"
        )
    estimate = candidate_count(dims, p)
    if estimate > budget:
        raise BudgetExceededError(estimate, budget)

    rows_fp = reduce_mod_p(_integer_rows(generators, dims), dims, p)
    rows = [[c.value for c in r.coeffs] for r in rows_fp.rows]
    pivots = [next(i for i, c in enumerate(row) if c) for row in rows]

    sites = [_projective_site_vectors(d, p) for d in dims.d]
    fld = prime_field(p)
    found = []
    for combo in itertools.product(*sites):
        coeffs = [1]
        for f in combo:
            coeffs = [(c * a) % p for c in coeffs for a in f]
        work = coeffs
        for row, piv in zip(rows, pivots):
            x = work[piv]
            if x:
                work = [(a - x * b) % p for a, b in zip(work, row)]
        if not any(work):
            factors = tuple(tuple(Fp(a, p) for a in f) for f in combo)
            found.append(ProductVector(dims, fld, factors))
    return found


def ff_verify(
    generators, dims: Dims, primes=None, budget: int = ENUMERATION_BUDGET
) -> list[VerificationReport]:
    """One finite-field report per prime; witness recorded where found."""
    if primes is None:
        primes = default_primes(dims)
    rows = _integer_rows(generators, dims)
    rational_dim = None
    if rows and rows[0].field == RATIONAL:
        rational_dim = span(rows, dims=dims, field=RATIONAL).dim
    reports = []
    for p in primes:
        found = find_product_vectors_fp(rows, dims, p, budget)
        certified = {f"fp({p})": reduce_mod_p(rows, dims, p).dim}
        if rational_dim is not None:
            certified["rational"] = rational_dim
        reports.append(VerificationReport(
            method="finite-field",
            params={"p": p},
            verdict=WITNESS if found else NO_WITNESS,
            witness=found[0] if found else None,
            metrics={"tests": candidate_count(dims, p), "found": len(found)},
            certified_dims=certified,
        ))
    return reports


@dataclass
class ClassifyReport:
    dims: Dims
    p: int
    passed: bool
    expected_count: int
    found: list[ProductVector]
    missing: list[ProductVector]
    extraneous: list[ProductVector]


def _factor_key(pv: ProductVector):
    return tuple(tuple(c.value for c in f) for f in pv.factors)


def classify_product_vectors_fp(
    dims: Dims, p: int, budget: int = ENUMERATION_BUDGET
) -> ClassifyReport:
    """Check that the product vectors in the entangled complement over F_p
    are exactly the p+1 projective Vandermonde points (one per field element
    plus the point at infinity)."""
    # level sums have 0/1 coefficients, so reduction mod p is exact
    gens = [level_sum_vector(dims, n) for n in range(dims.max_level + 1)]
    found = find_product_vectors_fp(gens, dims, p, budget)
    fld = prime_field(p)
    expected = {}
    for lam in range(p):
        pv = vandermonde_vector(dims, lam, fld)
        expected[_factor_key(pv)] = pv
    inf = vandermonde_vector(dims, INFINITY, fld)
    expected[_factor_key(inf)] = inf

    found_keys = {_factor_key(pv): pv for pv in found}
    missing = [pv for key, pv in expected.items() if key not in found_keys]
    extraneous = [pv for key, pv in found_keys.items() if key not in expected]
    passed = not missing and not extraneous
    return ClassifyReport(
        dims=dims, p=p, passed=passed, expected_count=p + 1,
        found=found, missing=missing, extraneous=extraneous,
    )


def orthonormal_basis(s: Subspace) -> np.ndarray:
    """Complex-float orthonormal rows spanning the same subspace.

    Modified Gram-Schmidt with one reorthogonalization pass; plenty at these
    sizes since the input rows are exact and well conditioned.
    """
    if s.field.kind == "fp":
        raise TypeError("prime-field subspaces have no complex embedding")
    rows = np.array(
        [[complex(c) for c in r.coeffs] for r in s.rows], dtype=complex
    ).reshape(s.dim, s.dims.total)
    basis = []
    for v in rows:
        for _ in range(2):
            for b in basis:
                v = v - np.vdot(b, v) * b
        norm = np.linalg.norm(v)
        if norm < 1e-12:
            raise ValueError("input rows are numerically dependent")
        basis.append(v / norm)
    return np.array(basis).reshape(len(basis), s.dims.total)


def _site_update_matrix(w_conj: np.ndarray, factors: list[np.ndarray], r: int) -> np.ndarray:
    # contraction of the conjugated basis against all factors except site r;
    # returns c with <w_j, x> = (c @ x_r)_j
    k = len(factors)
    operands: list = [w_conj, list(range(k + 1))]
    for s in range(k):
        if s != r:
            operands.extend([factors[s], [s + 1]])
    c = np.einsum(*operands, [0, r + 1])
    return c


def _top_eigvec(a: np.ndarray, previous: np.ndarray) -> tuple[float, np.ndarray]:
    vals, vecs = np.linalg.eigh(a)
    top = float(vals[-1])
    # degenerate top eigenvalue: stay close to the previous iterate so the
    # sweep remains deterministic
    near = vals > top - 1e-12 * max(1.0, abs(top))
    if int(near.sum()) > 1:
        sub = vecs[:, near]
        proj = sub @ (sub.conj().T @ previous)
        norm = np.linalg.norm(proj)
        if norm > 1e-8:
            return top, proj / norm
    return top, vecs[:, -1]


@dataclass
class AlsResult:
    best_overlap: float
    witness: ProductVector | None
    histories: list[list[float]]
    report: VerificationReport

    def __iter__(self):
        return iter((self.best_overlap, self.witness, self.report))


def _fix_phases(factors: list[np.ndarray]) -> list[np.ndarray]:
    out = []
    for f in factors:
        i = int(np.argmax(np.abs(f)))
        ph = f[i] / abs(f[i])
        out.append(f / ph)
    return out


def max_product_overlap(
    basis: np.ndarray,
    dims: Dims,
    restarts: int = DEFAULT_RESTARTS,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
    tol: float = DEFAULT_TOL,
    seed: int = 0,
) -> AlsResult:
    """Maximize the squared projection of a unit product vector on a subspace.

    basis holds orthonormal rows (checked to 1e-8).  Each restart draws
    fresh factors from an isotropic complex Gaussian, then cycles over the
    sites; the optimal single-site update is the top eigenvector of a small
    Hermitian matrix, so the overlap never decreases.  Restart seeds derive
    from (seed, restart index) alone, making the outcome independent of
    execution order.
    """
    if restarts < 1:
        raise ValueError("need at least one restart")
    basis = np.asarray(basis, dtype=complex)
    m = basis.shape[0]
    if m == 0:
        report = VerificationReport(
            method="als",
            params={"restarts": restarts, "max_sweeps": max_sweeps,
                    "tol": tol, "seed": seed},
            verdict=NO_WITNESS, witness=None,
            metrics={"best_overlap": 0.0, "total_sweeps": 0, "best_restart": -1},
            certified_dims={"complex": 0},
        )
        return AlsResult(0.0, None, [], report)
    if basis.shape[1] != dims.total:
        raise ValueError(f"basis width {basis.shape[1]} != total {dims.total}")
    gram = basis @ basis.conj().T
    if np.max(np.abs(gram - np.eye(m))) > 1e-8:
        raise ValueError("basis rows are not orthonormal")

    w_conj = basis.conj().reshape((m,) + dims.d)
    k = dims.k
    best = -1.0
    best_factors: list[np.ndarray] | None = None
    best_restart = -1
    histories: list[list[float]] = []
    total_sweeps = 0

    for t in range(restarts):
        rng = np.random.default_rng([seed, t])
        factors = []
        for d in dims.d:
            raw = rng.standard_normal((d, 2))
            x = raw[:, 0] + 1j * raw[:, 1]
            factors.append(x / np.linalg.norm(x))
        history: list[float] = []
        current = 0.0
        for _ in range(max_sweeps):
            sweep_start = current
            for r in range(k):
                c = _site_update_matrix(w_conj, factors, r)
                a = c.conj().T @ c
                current, factors[r] = _top_eigvec(a, factors[r])
                history.append(current)
            total_sweeps += 1
            if current - sweep_start < tol:
                break
        histories.append(history)
        if current > best:
            best = current
            best_factors = [f.copy() for f in factors]
            best_restart = t

    best = min(max(best, 0.0), 1.0)
    witness_pv = ProductVector.from_values(
        dims, COMPLEX, [tuple(f) for f in _fix_phases(best_factors)]
    )
    verdict = WITNESS if best > 1.0 - tol else NO_WITNESS
    report = VerificationReport(
        method="als",
        params={"restarts": restarts, "max_sweeps": max_sweeps,
                "tol": tol, "seed": seed},
        verdict=verdict,
        witness=witness_pv if verdict == WITNESS else None,
        metrics={"best_overlap": best, "total_sweeps": total_sweeps,
                 "best_restart": best_restart},
        certified_dims={"complex": m},
    )
    return AlsResult(best, witness_pv, histories, report)


def nearest_vandermonde(witness: ProductVector, dims: Dims):
    """Best-fit parameter point for a numerically found product vector.

    Returns (point, distance): the distance is between unit expansions after
    optimizing the global phase, so an exact match gives 0.
    """
    num = 0j
    den = 0.0
    for f in witness.factors:
        arr = np.asarray([complex(c) for c in f])
        if len(arr) < 2:
            continue
        num += complex(np.vdot(arr[:-1], arr[1:]))
        den += float(np.vdot(arr[:-1], arr[:-1]).real)
    candidates: list = [INFINITY]
    if den > 1e-30:
        candidates.append(num / den)
    w = np.asarray([complex(c) for c in witness.expand().coeffs])
    w = w / np.linalg.norm(w)
    best_pt, best_dist = None, float("inf")
    for pt in candidates:
        z = vandermonde_vector(dims, pt, COMPLEX).expand()
        zv = np.asarray([complex(c) for c in z.coeffs])
        zv = zv / np.linalg.norm(zv)
        overlap = abs(complex(np.vdot(zv, w)))
        dist = math.sqrt(max(0.0, 2.0 - 2.0 * overlap))
        if dist < best_dist:
            best_pt, best_dist = pt, dist
    return best_pt, best_dist


@dataclass
class UpbReport:
    size: int
    span_dim: int
    independent: bool
    meets_min_size: bool
    complement_dim: int
    complement_in_entangled: bool
    ff_reports: list[VerificationReport] = dataclass_field(default_factory=list)
    als_report: VerificationReport | None = None
    is_upb: bool = False
    witness: ProductVector | None = None


def verify_upb(
    vectors: list[ProductVector],
    dims: Dims,
    primes=None,
    use_als: bool = False,
    restarts: int = DEFAULT_RESTARTS,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
    tol: float = DEFAULT_TOL,
    seed: int = 0,
    budget: int = ENUMERATION_BUDGET,
) -> UpbReport:
    """Full audit of a claimed unextendible product basis.

    Checks exact linear independence, the minimal-size bound, and then hunts
    for a product vector in the orthocomplement of the span.  Size below the
    minimum already disqualifies the set, but the oracle still runs so a
    failure comes with an explicit witness.
    """
    if not vectors:
        raise ValueError("empty product-vector set")
    for v in vectors:
        if v.dims != dims:
            raise TypeError(f"vector dims {v.dims} do not match {dims}")
    fld = vectors[0].field
    if not fld.exact:
        raise TypeError("exact coefficients required for the rank audit")
    expansions = [v.expand() for v in vectors]
    spanned = span(expansions, dims=dims, field=fld)
    independent = spanned.dim == len(vectors)
    meets_min = spanned.dim >= dims.max_level + 1
    complement = orthocomplement(spanned)
    entangled = entangled_subspace(dims, fld)
    inside = all(entangled.contains(row) for row in complement.rows)

    report = UpbReport(
        size=len(vectors),
        span_dim=spanned.dim,
        independent=independent,
        meets_min_size=meets_min,
        complement_dim=complement.dim,
        complement_in_entangled=inside,
    )
    witness = None
    if complement.dim > 0:
        if fld == RATIONAL:
            report.ff_reports = ff_verify(complement, dims, primes, budget)
            for rep in report.ff_reports:
                if rep.verdict == WITNESS and witness is None:
                    witness = rep.witness
        if use_als:
            als = max_product_overlap(
                orthonormal_basis(complement), dims,
                restarts=restarts, max_sweeps=max_sweeps, tol=tol, seed=seed,
            )
            report.als_report = als.report
            if als.report.verdict == WITNESS and witness is None:
                witness = als.report.witness
    report.witness = witness
    report.is_upb = independent and meets_min and witness is None
    return report
