"""Bracket symbols, canonical bracket polynomials, the Pluecker relation,
and the bracket-sum expression of the discriminant-resultants.

Symbols are ("a", i) for the alpha family and ("b", k) for the beta
family; tuple comparison realizes the total order a_1 < ... < a_n <
b_1 < ... < b_{n-2}.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .binforms import BinaryForm, dr_series
from .multipoly import MultiPoly
from .rationals import format_rational

Symbol = Tuple[str, int]
Assignment = Mapping[Symbol, Tuple[Fraction, Fraction]]


class BracketSumUndefinedError(ValueError):
    """The (n, r) = (2, 2) entry has no bracket-sum expression."""


def alpha(i: int) -> Symbol:
    return ("a", i)


def beta(k: int) -> Symbol:
    return ("b", k)


def symbol_name(s: Symbol) -> str:
    return f"{s[0]}{s[1]}"


def parse_symbol(name: str) -> Symbol:
    return (name[0], int(name[1:]))


def coordinate_vars(s: Symbol) -> Tuple[str, str]:
    """Names of the two coordinate variables of a symbol."""
    return (f"{s[0]}{s[1]}_0", f"{s[0]}{s[1]}_1")


def bracket_eval(s: Symbol, t: Symbol, assignment: Assignment) -> Fraction:
    """[s, t] = u_s*v_t - u_t*v_s."""
    us, vs = assignment[s]
    ut, vt = assignment[t]
    return us * vt - ut * vs


@dataclass(frozen=True)
class BracketMonomial:
    """Canonical product of brackets: ordered factors plus a sign.

    Each factor (s, t) satisfies s < t; a swap during canonicalization
    flips the sign; a repeated symbol collapses to the zero monomial
    (sign 0, no factors).
    """

    factors: Tuple[Tuple[Symbol, Symbol], ...]
    sign: int


def canonicalize(factors: Iterable[Tuple[Symbol, Symbol]]) -> BracketMonomial:
    sign = 1
    out = []
    for s, t in factors:
        if s == t:
            return BracketMonomial((), 0)
        if s > t:
            s, t = t, s
            sign = -sign
        out.append((s, t))
    return BracketMonomial(tuple(sorted(out)), sign)


class BracketPolynomial:
    """Rational combination of canonical bracket monomials."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Dict[tuple, Fraction] = None):
        self.n = n
        self.terms = dict(terms or {})

    def add_term(self, factors: Iterable[Tuple[Symbol, Symbol]], coeff=1) -> None:
        mono = canonicalize(factors)
        if mono.sign == 0:
            return
        c = Fraction(coeff) * mono.sign
        s = self.terms.get(mono.factors, Fraction(0)) + c
        if s:
            self.terms[mono.factors] = s
        else:
            self.terms.pop(mono.factors, None)

    def __eq__(self, other):
        return isinstance(other, BracketPolynomial) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def evaluate(self, assignment: Assignment) -> Fraction:
        cache: Dict[Tuple[Symbol, Symbol], Fraction] = {}
        total = Fraction(0)
        for factors, coeff in self.terms.items():
            prod = coeff
            for pair in factors:
                v = cache.get(pair)
                if v is None:
                    v = bracket_eval(pair[0], pair[1], assignment)
                    cache[pair] = v
                prod *= v
            total += prod
        return total

    def expand_to_coordinates(self) -> MultiPoly:
        """Expansion as a polynomial in the symbols' coordinate variables."""
        cache: Dict[Tuple[Symbol, Symbol], MultiPoly] = {}
        total = MultiPoly.zero()
        for factors, coeff in self.terms.items():
            prod = MultiPoly.constant(coeff)
            for pair in factors:
                b = cache.get(pair)
                if b is None:
                    u0, v0 = (MultiPoly.variable(x) for x in coordinate_vars(pair[0]))
                    u1, v1 = (MultiPoly.variable(x) for x in coordinate_vars(pair[1]))
                    b = u0 * v1 - u1 * v0
                    cache[pair] = b
                prod = prod * b
            total = total + prod
        return total

    def to_json(self) -> list:
        recs = []
        for factors, coeff in sorted(self.terms.items()):
            recs.append({
                "sign": 1 if coeff > 0 else -1,
                "factors": [[symbol_name(s), symbol_name(t)] for s, t in factors],
                "coefficient": format_rational(abs(coeff)),
            })
        return recs


def plucker_relation(a: Symbol, b: Symbol, c: Symbol, d: Symbol) -> BracketPolynomial:
    """[a,b][c,d] + [a,c][d,b] + [a,d][b,c]; vanishes identically."""
    if len({a, b, c, d}) != 4:
        raise ValueError("Pluecker relation needs four distinct symbols")
    n = max(i for _, i in (a, b, c, d))
    p = BracketPolynomial(n)
    p.add_term([(a, b), (c, d)])
    p.add_term([(a, c), (d, b)])
    p.add_term([(a, d), (b, c)])
    return p


def subsets_colex(n: int, r: int):
    """Size-r subsets of [n] in co-lexicographic order."""
    return sorted(itertools.combinations(range(1, n + 1), r),
                  key=lambda I: tuple(reversed(I)))


def dr_bracket_sum(n: int, r: int) -> BracketPolynomial:
    """Bracket-sum expression of the r-th discriminant-resultant.

    Sum over I disjoint-union J = [n] with |I| = r of
    prod_{j in J, i != j} [a_i, a_j] * prod_{i in I, k in [n-2]} [b_k, a_i].
    """
    if not (2 <= n and 0 <= r <= n):
        raise ValueError("need n >= 2 and 0 <= r <= n")
    if (n, r) == (2, 2):
        raise BracketSumUndefinedError(
            "the (n, r) = (2, 2) entry equals f_0^2, not a bracket sum")
    p = BracketPolynomial(n)
    full = set(range(1, n + 1))
    for I in subsets_colex(n, r):
        J = sorted(full - set(I))
        factors = []
        for j in J:
            for i in range(1, n + 1):
                if i != j:
                    factors.append((alpha(i), alpha(j)))
        for i in I:
            for k in range(1, n - 1):
                factors.append((beta(k), alpha(i)))
        p.add_term(factors)
    return p


def expand_form_coefficients(family: str, m: int) -> List[MultiPoly]:
    """Coefficients a_0..a_m of prod_j (s_{j,0} x - s_{j,1} y) as
    polynomials in the 2m coordinate variables of the family."""
    if m < 1:
        raise ValueError("need m >= 1")
    coeffs = [MultiPoly.constant(1)]
    for j in range(1, m + 1):
        u = MultiPoly.variable(f"{family}{j}_0")
        v = MultiPoly.variable(f"{family}{j}_1")
        nxt = [MultiPoly.zero() for _ in range(len(coeffs) + 1)]
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + c * u
            nxt[i] = nxt[i] - c * v
        coeffs = nxt
    return coeffs


def forms_from_assignment(assignment: Assignment, n: int):
    """Numeric (f_n, f_{n-2}) obtained by expanding the symbol products."""
    f_n = _expand_numeric([assignment[alpha(i)] for i in range(1, n + 1)])
    f_m = _expand_numeric([assignment[beta(k)] for k in range(1, n - 1)])
    return f_n, f_m


def _expand_numeric(pairs: Sequence[Tuple[Fraction, Fraction]]) -> BinaryForm:
    coeffs = [Fraction(1)]
    for u, v in pairs:
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c * u
            nxt[i] += -c * v
        coeffs = nxt
    return BinaryForm.from_coeffs(coeffs)


def derive_seed(master: int, index) -> int:
    """Stable per-trial seed (independent of interpreter hash salting)."""
    h = hashlib.sha256(f"{master}:{index}".encode()).digest()
    return int.from_bytes(h[:8], "big")


def all_symbols(n: int) -> List[Symbol]:
    return [alpha(i) for i in range(1, n + 1)] + [beta(k) for k in range(1, n - 1)]


def random_generic_assignment(n: int, seed: int, bound: int = 10,
                              budget: int = 10000) -> Dict[Symbol, tuple]:
    """Integer-coordinate assignment with all pairwise brackets nonzero and
    all alpha coordinates nonzero (so a_0*a_n != 0).  Deterministic per seed."""
    if bound < 2:
        raise ValueError("bound too small to find generic assignments")
    rng = Random(derive_seed(seed, "assignment"))
    symbols = all_symbols(n)
    for _ in range(budget):
        cand = {s: (Fraction(rng.randint(-bound, bound)),
                    Fraction(rng.randint(-bound, bound)))
                for s in symbols}
        if any(u == 0 or v == 0 for s, (u, v) in cand.items() if s[0] == "a"):
            continue
        ok = True
        for s, t in itertools.combinations(symbols, 2):
            if bracket_eval(s, t, cand) == 0:
                ok = False
                break
        if ok:
            return cand
    raise RuntimeError("resampling budget exhausted; raise the bound")


def verify_theorem1(n: int, trials: int = 100, seed: int = 0,
                    mode: str = "numeric") -> dict:
    """Check the bracket-sum expression against the resultant-based series.

    Numeric mode compares values at random generic assignments; symbolic
    mode compares full expansions over the 4n-4 coordinate variables.
    Failures are reported (with witnesses), never raised.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    report = {"n": n, "mode": mode, "trials": trials if mode == "numeric" else 1,
              "seed": seed, "failures": []}
    sums = {r: dr_bracket_sum(n, r)
            for r in range(n + 1) if (n, r) != (2, 2)}
    if mode == "symbolic":
        a_coeffs = expand_form_coefficients("a", n)
        f_n = BinaryForm.from_coeffs(a_coeffs)
        if n == 2:
            f_m = BinaryForm.from_coeffs([MultiPoly.constant(1)])
        else:
            f_m = BinaryForm.from_coeffs(expand_form_coefficients("b", n - 2))
        series = dr_series(f_n, f_m, mode="symbolic")
        for r in range(n + 1):
            if (n, r) == (2, 2):
                expected = f_m.coefficients[0] ** 2
            else:
                expected = sums[r].expand_to_coordinates()
            if series.entries[r] != expected:
                report["failures"].append({"r": r, "witness": "symbolic expansion"})
        return report
    for trial in range(trials):
        assignment = random_generic_assignment(n, derive_seed(seed, trial))
        f_n, f_m = forms_from_assignment(assignment, n)
        series = dr_series(f_n, f_m, mode="numeric")
        for r in range(n + 1):
            if (n, r) == (2, 2):
                expected = f_m.coefficients[0] ** 2
            else:
                expected = sums[r].evaluate(assignment)
            if series.entries[r] != expected:
                report["failures"].append({
                    "trial": trial, "r": r,
                    "assignment": assignment_to_json(assignment),
                    "series": format_rational(series.entries[r]),
                    "bracket_sum": format_rational(expected),
                })
    return report


def assignment_to_json(assignment: Assignment) -> dict:
    return {symbol_name(s): [format_rational(u), format_rational(v)]
            for s, (u, v) in sorted(assignment.items())}
