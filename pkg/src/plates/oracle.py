"""Geometric ground truth for plate identities.

Identities between plates hold almost everywhere, not on the shared walls of
the closed regions, so every check here happens at *generic* rational points:
points of the simplex slice where no proper subset of coordinates sums to an
integer.  Sampling is seeded and exact (fixed prime denominator), so runs are
reproducible and all linear algebra stays over the rationals.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

from .core import Plate, evaluate
from .exactnum import CyclotomicNumber
from .linalg import Echelon, solve_square

Point = tuple[Fraction, ...]


class GenericSamplingError(RuntimeError):
    """No generic point found within the retry cap; raise the denominator."""


class SpanError(RuntimeError):
    """Target is not in the almost-everywhere span of the basis."""


def next_prime_above(n: int) -> int:
    c = n + 1
    while True:
        if c >= 2 and all(c % d for d in range(2, int(c**0.5) + 1)):
            return c
        c += 1


@dataclass(frozen=True)
class SamplePlan:
    """Deterministic sampling configuration for one (n, r) slice."""

    n: int
    r: int
    seed: int = 0
    denominator: int | None = None  # default: first prime > n
    batch: int = 16
    stable_window: int = 3
    max_points_factor: int = 50
    max_tries_per_point: int = 100_000

    def __post_init__(self) -> None:
        if self.n < 1 or self.r < 1:
            raise ValueError("need n >= 1 and r >= 1")
        if self.batch < 1:
            raise ValueError("batch must be >= 1")
        d = self.resolved_denominator
        if d <= self.n or any(d % p == 0 for p in range(2, int(d**0.5) + 1)):
            raise ValueError(f"denominator must be a prime > n, got {d}")

    @property
    def resolved_denominator(self) -> int:
        return self.denominator if self.denominator is not None else next_prime_above(self.n)

    def key(self) -> tuple:
        return (self.n, self.r, self.seed, self.resolved_denominator, self.batch)


def _is_generic(numerators: Sequence[int], d: int) -> bool:
    """No proper nonempty subset of a/d coordinates sums to an integer.

    Complementary subsets are equivalent (the total is an integer), so only
    subsets containing the first coordinate are checked.
    """
    n = len(numerators)
    if n == 1:
        return True
    sums = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & (-mask)
        sums[mask] = sums[mask ^ low] + numerators[low.bit_length() - 1]
    full = (1 << n) - 1
    for mask in range(1, full, 2):  # odd masks contain coordinate 1
        if sums[mask] % d == 0:
            return False
    return True


def _seed_int(plan: SamplePlan) -> int:
    # process-independent seed (tuple hashing is randomized per process)
    tag = f"plate-oracle:{plan.seed}:{plan.n}:{plan.r}:{plan.resolved_denominator}"
    return int.from_bytes(hashlib.sha256(tag.encode()).digest()[:8], "big")


# one RNG stream and point list per plan, so repeated requests are prefixes
_point_cache: dict = {}


def sample_generic(plan: SamplePlan, count: int) -> list[Point]:
    """Deterministic generic points on {x >= 0, sum(x) = r} with denominator D.

    The same plan yields the same list; shorter requests are prefixes of
    longer ones.
    """
    d = plan.resolved_denominator
    total = plan.r * d
    key = plan.key()
    entry = _point_cache.get(key)
    if entry is None:
        entry = (random.Random(_seed_int(plan)), [])
        _point_cache[key] = entry
    rng, points = entry
    while len(points) < count:
        for _ in range(plan.max_tries_per_point):
            cuts = sorted(rng.randint(0, total) for _ in range(plan.n - 1))
            bounds = [0] + cuts + [total]
            nums = [b - a for a, b in zip(bounds, bounds[1:])]
            if _is_generic(nums, d):
                break
        else:
            raise GenericSamplingError(
                f"no generic point in {plan.max_tries_per_point} tries for "
                f"n={plan.n}, r={plan.r}, denominator={d}; use a larger denominator"
            )
        points.append(tuple(Fraction(a, d) for a in nums))
    return list(points[:count])


@dataclass(frozen=True)
class EvaluationMatrix:
    """Rows indexed by sample points, columns by plates; 0/1 entries."""

    plates: tuple[Plate, ...]
    points: tuple[Point, ...]
    rows: tuple[tuple[int, ...], ...]


def evaluation_matrix(plates: Sequence[Plate], points: Sequence[Point]) -> EvaluationMatrix:
    plates = tuple(plates)
    points = tuple(points)
    rows = tuple(tuple(evaluate(p, x) for p in plates) for x in points)
    return EvaluationMatrix(plates, points, rows)


@dataclass
class RankReport:
    rank: int
    points_used: int
    stabilized: bool


def rank_report(plates: Sequence[Plate], plan: SamplePlan) -> RankReport:
    """Exact rank of the sampled evaluation matrix, grown batch by batch until
    the rank is unchanged for ``stable_window`` consecutive batches."""
    plates = list(plates)
    if not plates:
        return RankReport(0, 0, True)
    n, r = plates[0].n, plates[0].r
    if any(p.n != n or p.r != r for p in plates):
        raise ValueError("all plates must share n and r")
    cap = plan.max_points_factor * (r ** (n - 1))
    ech = Echelon(len(plates))
    used = 0
    stable = 0
    last = -1
    while used < cap:
        take = min(plan.batch, cap - used)
        pts = sample_generic(plan, used + take)[used:]
        for x in pts:
            ech.add_row([Fraction(evaluate(p, x)) for p in plates])
        used += take
        if ech.rank == last:
            stable += 1
            if stable >= plan.stable_window:
                return RankReport(ech.rank, used, True)
        else:
            stable = 0
            last = ech.rank
    return RankReport(ech.rank, used, False)


def rank_of_span(plates: Sequence[Plate], plan: SamplePlan) -> int:
    return rank_report(plates, plan).rank


# cached square solver per (basis, plan): points with independent basis rows
_solver_cache: dict = {}

# Internal acceleration: solves run modulo a fixed prime with rational
# reconstruction, then every answer is certified by exact integer arithmetic
# on the full system (with a pure-Fraction fallback).  Nothing inexact can
# escape: a nonzero determinant mod P implies exact invertibility, and the
# reconstructed coefficients are only returned after exact validation.
_P = (1 << 61) - 1  # Mersenne prime


class _ModEchelon:
    def __init__(self, width: int) -> None:
        self.width = width
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    def add_row(self, row: list[int]) -> bool:
        row = [v % _P for v in row]
        for prow, pcol in zip(self.rows, self.pivots):
            c = row[pcol]
            if c:
                row = [(a - c * b) % _P for a, b in zip(row, prow)]
        for col, val in enumerate(row):
            if val:
                inv = pow(val, -1, _P)
                self.rows.append([a * inv % _P for a in row])
                self.pivots.append(col)
                return True
        return False


def _mod_invert(matrix: list[list[int]]) -> list[list[int]] | None:
    m = len(matrix)
    aug = [
        [v % _P for v in row] + [1 if i == j else 0 for j in range(m)]
        for i, row in enumerate(matrix)
    ]
    for col in range(m):
        pr = next((i for i in range(col, m) if aug[i][col]), None)
        if pr is None:
            return None
        aug[col], aug[pr] = aug[pr], aug[col]
        inv = pow(aug[col][col], -1, _P)
        aug[col] = [a * inv % _P for a in aug[col]]
        for i in range(m):
            if i != col and aug[i][col]:
                c = aug[i][col]
                aug[i] = [(a - c * b) % _P for a, b in zip(aug[i], aug[col])]
    return [row[m:] for row in aug]


def _rational_reconstruct(c: int) -> Fraction | None:
    """Smallest fraction a/b with a = b*c mod P (Wang's algorithm)."""
    bound = isqrt(_P // 2)
    r0, r1 = _P, c % _P
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if gcd(abs(r1), abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


class _BasisSolver:
    def __init__(self, basis: tuple[Plate, ...], plan: SamplePlan) -> None:
        dim = len(basis)
        n, r = basis[0].n, basis[0].r
        cap = plan.max_points_factor * max(dim, r ** (n - 1))
        ech = _ModEchelon(dim)
        chosen: list[Point] = []
        used = 0
        while len(chosen) < dim:
            if used >= cap:
                raise SpanError(
                    f"basis evaluation matrix reached rank {len(chosen)} < {dim} "
                    f"within {used} points; the plate list is a.e. dependent"
                )
            take = min(plan.batch, cap - used)
            pts = sample_generic(plan, used + take)[used:]
            for x in pts:
                if ech.add_row([evaluate(p, x) for p in basis]):
                    chosen.append(x)
                    if len(chosen) == dim:
                        break
            used += take
        self.basis = basis
        self.plan = plan
        self.points = chosen
        self.matrix = [[evaluate(p, x) for p in basis] for x in chosen]
        self.mod_inverse = _mod_invert(self.matrix)
        # every sampled point participates in validation, plus a fresh batch
        self.check_points = sample_generic(plan, used + plan.batch)

    def _solve_fast(self, rhs: list[int]) -> list[Fraction] | None:
        if self.mod_inverse is None:
            return None
        coeffs = []
        for row in self.mod_inverse:
            acc = 0
            for a, b in zip(row, rhs):
                if b:
                    acc += a * b
            rec = _rational_reconstruct(acc % _P)
            if rec is None:
                return None
            coeffs.append(rec)
        # exact certification on the fitted system
        for row, want in zip(self.matrix, rhs):
            if sum(c * a for c, a in zip(coeffs, row) if a) != want:
                return None
        return coeffs

    def solve(self, target: Plate) -> list[Fraction]:
        rhs = [evaluate(target, x) for x in self.points]
        coeffs = self._solve_fast(rhs)
        if coeffs is None:
            coeffs = solve_square(
                [[Fraction(v) for v in row] for row in self.matrix],
                [Fraction(v) for v in rhs],
            )
            assert coeffs is not None, "chosen rows are independent by construction"
        for x in self.check_points:
            predicted = sum(
                c * evaluate(p, x) for c, p in zip(coeffs, self.basis) if c
            )
            if predicted != evaluate(target, x):
                raise SpanError(
                    f"target {target} not in almost-everywhere span: point "
                    f"({', '.join(str(v) for v in x)}) disagrees"
                )
        return coeffs


def solve_in_basis(target: Plate, basis: Sequence[Plate], plan: SamplePlan) -> list[Fraction]:
    """Coefficients of the target over the basis, fitted at generic points and
    validated at every sampled point including a fresh held-out batch."""
    basis = tuple(basis)
    if any(p.n != target.n or p.r != target.r for p in basis):
        raise ValueError("target and basis must share n and r")
    key = (basis, plan.key())
    solver = _solver_cache.get(key)
    if solver is None:
        solver = _BasisSolver(basis, plan)
        _solver_cache[key] = solver
    return solver.solve(target)


def _combination_terms(side) -> list[tuple[object, Plate]]:
    """Normalize a formal combination: a Plate, a list of (coeff, Plate)
    pairs, or anything with .items() yielding (Plate, coeff)."""
    if isinstance(side, Plate):
        return [(1, side)]
    if hasattr(side, "items"):
        return [(c, p) for p, c in side.items()]
    return [(c, p) for c, p in side]


def verify_identity_ae(lhs, rhs, plan: SamplePlan, batches: int | None = None):
    """Check two formal plate combinations agree at every sampled generic
    point (``stable_window`` batches by default).  Returns (ok, witness)."""
    lterms = _combination_terms(lhs)
    rterms = _combination_terms(rhs)
    count = plan.batch * (batches if batches is not None else plan.stable_window)
    for x in sample_generic(plan, count):
        if _eval_combination(lterms, x) != _eval_combination(rterms, x):
            return False, x
    return True, None


def _eval_combination(terms: Iterable[tuple[object, Plate]], x: Point):
    acc = None
    for coeff, plate in terms:
        if not evaluate(plate, x):
            continue
        acc = coeff if acc is None else acc + coeff
    if acc is None:
        return Fraction(0)
    if isinstance(acc, (CyclotomicNumber, Fraction)):
        return acc
    return Fraction(acc)
