"""Rank certificates: multiplicative independence of leading monomials and
the Jacobian criterion at random rational points.

Rank over the rationals suffices for multiplicative independence of
Laurent monomials (the target group is torsion-free), so plain exact
Gaussian elimination with a deterministic pivot scan does all the work.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import List, Optional, Sequence

from .binforms import BinaryForm, DegeneratePivotError, dr_series
from .brackets import derive_seed
from .laurent import (DegreeMatrix, LaurentMonomial, PolygonModel,
                      degree_matrix_P, dr_rows, lm_dr_closed_form, var_name)
from .rationals import DualScalar


def _eliminate(M: Sequence[Sequence[Fraction]]):
    """Forward elimination; returns (rank, pivot trail).

    Pivots are chosen by a row-major scan for the first nonzero entry in
    the current column, so certificates are byte-for-byte reproducible.
    """
    A = [[Fraction(x) for x in row] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    rank = 0
    trail = []
    for c in range(cols):
        pivot = None
        for r in range(rank, rows):
            if A[r][c]:
                pivot = r
                break
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        trail.append((pivot, c))
        pv = A[rank][c]
        for r in range(rank + 1, rows):
            if A[r][c]:
                f = A[r][c] / pv
                A[r] = [x - f * y for x, y in zip(A[r], A[rank])]
        rank += 1
        if rank == rows:
            break
    return rank, trail


def integer_matrix_rank(M: Sequence[Sequence[int]]):
    """Rank over the rationals plus the deterministic pivot trail."""
    if not M:
        return 0, []
    return _eliminate(M)


def _left_kernel_vector(M: Sequence[Sequence[int]]) -> Optional[List[int]]:
    """A nonzero integer v with v.M = 0, or None if the rows are independent."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    # eliminate the rows of M while tracking the row combination
    combo = [[Fraction(1 if i == j else 0) for j in range(rows)]
             for i in range(rows)]
    A = [[Fraction(x) for x in row] for row in M]
    rank = 0
    for c in range(cols):
        pivot = None
        for r in range(rank, rows):
            if A[r][c]:
                pivot = r
                break
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        combo[rank], combo[pivot] = combo[pivot], combo[rank]
        pv = A[rank][c]
        for r in range(rank + 1, rows):
            if A[r][c]:
                f = A[r][c] / pv
                A[r] = [x - f * y for x, y in zip(A[r], A[rank])]
                combo[r] = [x - f * y for x, y in zip(combo[r], combo[rank])]
        rank += 1
    for r in range(rank, rows):
        if all(x == 0 for x in A[r]):
            v = combo[r]
            denom_lcm = 1
            for x in v:
                denom_lcm = denom_lcm * x.denominator // _gcd(denom_lcm, x.denominator)
            ints = [int(x * denom_lcm) for x in v]
            g = 0
            for x in ints:
                g = _gcd(g, abs(x))
            return [x // g for x in ints]
    return None


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a or 1


@dataclass(frozen=True)
class IndependenceCertificate:
    matrix: tuple          # integer exponent rows
    rank: int
    pivot_trail: tuple
    verdict: str           # "independent" | "dependent"
    kernel: Optional[tuple] = None

    def to_json(self) -> dict:
        out = {"matrix": [list(r) for r in self.matrix],
               "rank": self.rank,
               "pivots": [list(p) for p in self.pivot_trail],
               "verdict": self.verdict}
        if self.kernel is not None:
            out["kernel"] = list(self.kernel)
        return out


def multiplicative_independence(monomials: Sequence[LaurentMonomial],
                                variables: Sequence) -> IndependenceCertificate:
    """Independent iff the exponent matrix has full row rank; dependent
    verdicts carry a verified integer kernel vector."""
    if not monomials:
        raise ValueError("need at least one monomial")
    rows = []
    for m in monomials:
        d = m.as_dict()
        rows.append(tuple(d.get(v, 0) for v in variables))
    rank, trail = integer_matrix_rank(rows)
    if rank == len(rows):
        return IndependenceCertificate(tuple(rows), rank, tuple(trail),
                                       "independent")
    kernel = _left_kernel_vector(rows)
    assert kernel is not None
    check = [sum(k * row[c] for k, row in zip(kernel, rows))
             for c in range(len(rows[0]))]
    assert all(x == 0 for x in check), "kernel vector fails to annihilate"
    return IndependenceCertificate(tuple(rows), rank, tuple(trail),
                                   "dependent", tuple(kernel))


def jacobian_rank(n: int, points: int = 10, seed: int = 0,
                  bound: int = 20) -> dict:
    """Jacobian of {DR_{n,r} : r = 0, 2, ..., n} at random integer points.

    Partial derivatives run dual numbers through the numeric series, one
    direction per coefficient a_0..a_n, b_0..b_{n-2}.  One full-rank point
    certifies algebraic independence.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    rng = Random(derive_seed(seed, f"jacobian:{n}"))
    rows = dr_rows(n)
    ranks = []
    sampled = 0
    budget = 50 * points
    while len(ranks) < points and sampled < budget:
        sampled += 1
        a = [rng.randint(-bound, bound) for _ in range(n + 1)]
        b = [rng.randint(-bound, bound) for _ in range(n - 1)]
        if a[0] == 0 or a[n] == 0:
            continue
        try:
            jac_cols = []
            for direction in range(2 * n):
                ac = [DualScalar.seed(x, 1 if direction == i else 0)
                      for i, x in enumerate(a)]
                bc = [DualScalar.seed(x, 1 if direction == n + 1 + i else 0)
                      for i, x in enumerate(b)]
                series = dr_series(BinaryForm.from_coeffs(ac),
                                   BinaryForm.from_coeffs(bc), mode="numeric")
                jac_cols.append([series.entries[r].derivative for r in rows])
        except (DegeneratePivotError, ZeroDivisionError):
            continue
        jac = [[jac_cols[c][r] for c in range(2 * n)] for r in range(len(rows))]
        rank, _ = _eliminate(jac)
        ranks.append({"point": {"a": a, "b": b}, "rank": rank})
    return {"n": n, "seed": seed, "points": len(ranks),
            "expected_rank": len(rows),
            "max_rank": max((p["rank"] for p in ranks), default=0),
            "per_point": ranks}


def run_independence_suite(n_max: int, seed: int = 0,
                           jacobian_budget: int = 7,
                           jacobian_points: int = 10) -> dict:
    """Certificates for every 3 <= n <= n_max: degree matrix rank,
    multiplicative independence of the leading monomials, and (within
    budget) the Jacobian rank check."""
    if n_max < 3:
        raise ValueError("the suite starts at n = 3")
    per_n = []
    for n in range(3, n_max + 1):
        t0 = time.perf_counter()
        method = "direct" if n == 3 else "closed_form"
        P = degree_matrix_P(n, method)
        rank, trail = integer_matrix_rank(P.matrix())
        monos = ([lm_dr_closed_form(n, r) for r in dr_rows(n)]
                 if method == "closed_form" else None)
        if monos is None:
            # reuse the direct rows as exponent vectors
            monos = [LaurentMonomial.from_dict(
                {v: d for v, d in zip(P.columns, degrees) if d})
                for _, degrees in P.rows]
        cert = multiplicative_independence(monos, P.columns)
        entry = {
            "n": n,
            "method": method,
            "degree_matrix": P.to_json(),
            "rank": rank,
            "expected_rank": len(P.rows),
            "certificate": cert.to_json(),
            "verdict": cert.verdict,
        }
        if n <= jacobian_budget:
            jr = jacobian_rank(n, points=jacobian_points, seed=seed)
            entry["jacobian"] = jr
            if jr["max_rank"] != jr["expected_rank"]:
                entry["verdict"] = "dependent"
        entry["seconds"] = round(time.perf_counter() - t0, 4)
        per_n.append(entry)
    return {"n_max": n_max, "seed": seed, "results": per_n,
            "all_independent": all(e["verdict"] == "independent"
                                   for e in per_n)}
