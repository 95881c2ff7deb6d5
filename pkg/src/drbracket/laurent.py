"""Triangulated-polygon Laurent model: bracket expansion, lexicographic
leading monomials, closed-form degree formulas and the degree matrix.

Vertices a_1..a_n, b_1..b_{n-2} sit counter-clockwise on a (2n-2)-gon;
the fan triangulation draws every diagonal through gamma = b_{n-2}.
Edge/diagonal brackets become the Laurent variables
    A_i = [gamma, a_i], B_k = [gamma, b_k],
    C_i = [a_i, a_{i+1}] (C_n = [a_n, b_1]), D_k = [b_k, b_{k+1}],
and every bracket is a Laurent polynomial with denominators only in the
invertible diagonals A_2..A_n, B_1..B_{n-4}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .brackets import BracketPolynomial, Symbol, alpha, beta, symbol_name
from .rationals import format_rational

Var = Tuple[str, int]  # ("A", i), ("B", k), ("C", i), ("D", k)

_FAMILY_RANK = {"A": 0, "B": 1, "C": 2, "D": 3}


def var_name(v: Var) -> str:
    return f"{v[0]}{v[1]}"


def _var_key(v: Var):
    return (_FAMILY_RANK[v[0]], v[1])


@dataclass(frozen=True)
class LaurentMonomial:
    """Integer-exponent monomial, canonically sorted, zero exponents dropped."""

    exponents: Tuple[Tuple[Var, int], ...]

    @classmethod
    def from_dict(cls, exps: Mapping[Var, int]) -> "LaurentMonomial":
        items = tuple(sorted(((v, e) for v, e in exps.items() if e),
                             key=lambda it: _var_key(it[0])))
        return cls(items)

    @classmethod
    def one(cls) -> "LaurentMonomial":
        return cls(())

    def as_dict(self) -> Dict[Var, int]:
        return dict(self.exponents)

    def degree(self, v: Var) -> int:
        return dict(self.exponents).get(v, 0)

    def __mul__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        exps = dict(self.exponents)
        for v, e in other.exponents:
            exps[v] = exps.get(v, 0) + e
        return LaurentMonomial.from_dict(exps)

    def __pow__(self, k: int) -> "LaurentMonomial":
        return LaurentMonomial.from_dict({v: e * k for v, e in self.exponents})

    def __str__(self):
        if not self.exponents:
            return "1"
        return "*".join(f"{var_name(v)}^{e}" if e != 1 else var_name(v)
                        for v, e in self.exponents)

    __repr__ = __str__


class LaurentPoly:
    """Mapping from monomials to nonzero rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[LaurentMonomial, Fraction] = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def monomial(cls, mono: LaurentMonomial, coeff=1) -> "LaurentPoly":
        return cls({mono: Fraction(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return LaurentPoly({m: c * v for m, v in self.terms.items()})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                s = out.get(m, Fraction(0)) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def evaluate(self, values: Mapping[Var, Fraction]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            prod = c
            for v, e in m.exponents:
                prod *= Fraction(values[v]) ** e
            total += prod
        return total

    def to_json(self) -> list:
        recs = []
        for m in sorted(self.terms, key=lambda m: tuple(m.exponents)):
            recs.append({"exponents": {var_name(v): e for v, e in m.exponents},
                         "coefficient": format_rational(self.terms[m])})
        return recs

    def __str__(self):
        if self.is_zero:
            return "0"
        return " + ".join(f"{format_rational(c)}*{m}"
                          for m, c in sorted(self.terms.items(),
                                             key=lambda it: tuple(it[0].exponents)))

    __repr__ = __str__


@dataclass(frozen=True)
class PolygonModel:
    """Labeled (2n-2)-gon with the fan triangulation through b_{n-2}."""

    n: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("polygon model needs n >= 3")

    @property
    def gamma(self) -> Symbol:
        return beta(self.n - 2)

    @property
    def vertices(self) -> List[Symbol]:
        return ([alpha(i) for i in range(1, self.n + 1)]
                + [beta(k) for k in range(1, self.n - 1)])

    @property
    def boundary(self) -> List[Symbol]:
        """Boundary walk from a_1 to b_{n-3}, avoiding gamma."""
        return [v for v in self.vertices if v != self.gamma]

    def all_vars(self) -> List[Var]:
        """Variables of the Laurent ring in lex priority order."""
        n = self.n
        return ([("A", i) for i in range(1, n + 1)]
                + [("B", k) for k in range(1, n - 2)]
                + [("C", i) for i in range(1, n + 1)]
                + [("D", k) for k in range(1, n - 3)])

    def invertible_vars(self) -> List[Var]:
        n = self.n
        return ([("A", i) for i in range(2, n + 1)]
                + [("B", k) for k in range(1, n - 3)])

    def diagonal_var(self, v: Symbol) -> Var:
        """Variable of the bracket [gamma, v]."""
        if v == self.gamma:
            raise ValueError("no diagonal from gamma to itself")
        if v[0] == "a":
            return ("A", v[1])
        return ("B", v[1])

    def edge_var(self, u: Symbol, v: Symbol) -> Tuple[Var, int]:
        """Variable and sign of the bracket [u, v] of a boundary edge."""
        n = self.n
        bnd = self.boundary
        iu, iv = bnd.index(u), bnd.index(v)
        if abs(iu - iv) != 1:
            raise ValueError("not a boundary edge avoiding gamma")
        sign = 1
        if iu > iv:
            u, v, iu, iv = v, u, iv, iu
            sign = -1
        if u[0] == "a" and v[0] == "a":
            return ("C", u[1]), sign
        if u[0] == "a":  # (a_n, b_1)
            return ("C", n), sign
        return ("D", u[1]), sign

    def defining_brackets(self) -> Dict[Var, Tuple[Symbol, Symbol]]:
        """Which bracket each Laurent variable stands for."""
        n = self.n
        out: Dict[Var, Tuple[Symbol, Symbol]] = {}
        for i in range(1, n + 1):
            out[("A", i)] = (self.gamma, alpha(i))
        for k in range(1, n - 2):
            out[("B", k)] = (self.gamma, beta(k))
        for i in range(1, n):
            out[("C", i)] = (alpha(i), alpha(i + 1))
        out[("C", n)] = (alpha(n), beta(1))
        for k in range(1, n - 3):
            out[("D", k)] = (beta(k), beta(k + 1))
        return out


def boundary_path(model: PolygonModel, x: Symbol, y: Symbol) -> List[Symbol]:
    """Boundary walk from x to y on the side of the polygon avoiding gamma."""
    if x == model.gamma or y == model.gamma:
        raise ValueError("path endpoints must differ from gamma")
    if x == y:
        raise ValueError("path endpoints must be distinct")
    bnd = model.boundary
    ix, iy = bnd.index(x), bnd.index(y)
    if ix < iy:
        return bnd[ix:iy + 1]
    return list(reversed(bnd[iy:ix + 1]))


def laurent_expand_bracket(model: PolygonModel, x: Symbol, y: Symbol) -> LaurentPoly:
    """Laurent expansion of [x, y] in the triangulation's variables.

    Brackets touching gamma are single variables; otherwise one term per
    edge of the gamma-avoiding boundary path, with the endpoint diagonal
    factors cancelled so only invertible variables are ever inverted.
    """
    if x == y:
        return LaurentPoly.zero()
    if x == model.gamma:
        return LaurentPoly.monomial(
            LaurentMonomial.from_dict({model.diagonal_var(y): 1}))
    if y == model.gamma:
        return LaurentPoly.monomial(
            LaurentMonomial.from_dict({model.diagonal_var(x): 1}), -1)
    path = boundary_path(model, x, y)
    k = len(path) - 1
    gx = model.diagonal_var(x)
    gy = model.diagonal_var(y)
    out = LaurentPoly.zero()
    for i in range(k):
        exps: Dict[Var, int] = {}
        if i > 0:
            exps[gx] = exps.get(gx, 0) + 1
            dv = model.diagonal_var(path[i])
            exps[dv] = exps.get(dv, 0) - 1
        if i < k - 1:
            exps[gy] = exps.get(gy, 0) + 1
            dv = model.diagonal_var(path[i + 1])
            exps[dv] = exps.get(dv, 0) - 1
        edge, sign = model.edge_var(path[i], path[i + 1])
        exps[edge] = exps.get(edge, 0) + 1
        out = out + LaurentPoly.monomial(LaurentMonomial.from_dict(exps), sign)
    return out


def laurent_expand_poly(model: PolygonModel, bp: BracketPolynomial) -> LaurentPoly:
    """Multiplicative-additive extension of the per-bracket expansion."""
    cache: Dict[tuple, LaurentPoly] = {}
    total = LaurentPoly.zero()
    for factors, coeff in bp.terms.items():
        prod = LaurentPoly.monomial(LaurentMonomial.one(), coeff)
        for pair in factors:
            b = cache.get(pair)
            if b is None:
                b = laurent_expand_bracket(model, pair[0], pair[1])
                cache[pair] = b
            prod = prod * b
        total = total + prod
    return total


def _exp_vector(mono: LaurentMonomial, ordered_vars: Sequence[Var]) -> tuple:
    d = mono.as_dict()
    return tuple(d.get(v, 0) for v in ordered_vars)


def lex_leading_monomial(p: LaurentPoly, model: PolygonModel) -> LaurentMonomial:
    """Exponent-vector maximum under lex with priority A > B > C > D."""
    if p.is_zero:
        raise ValueError("zero polynomial has no leading monomial")
    ordered = model.all_vars()
    return max(p.terms, key=lambda m: _exp_vector(m, ordered))


def lm_bracket_closed_form(model: PolygonModel, x: Symbol, y: Symbol) -> LaurentMonomial:
    """Closed form of the leading monomial of a bracket expansion.

    Signs are ignored; [x, y] and [y, x] share a leading monomial.
    """
    n = model.n
    if x > y:
        x, y = y, x

    def mono(*pairs) -> LaurentMonomial:
        exps: Dict[Var, int] = {}
        for v, e in pairs:
            exps[v] = exps.get(v, 0) + e
        return LaurentMonomial.from_dict(exps)

    if x[0] == "a" and y[0] == "a":
        i, j = x[1], y[1]
        if i == j or not (1 <= i < j <= n):
            raise ValueError("invalid alpha indices")
        return mono((("A", i), 1), (("A", j - 1), -1), (("C", j - 1), 1))
    if x[0] == "a" and y[0] == "b":
        i, k = x[1], y[1]
        if not (1 <= i <= n and 1 <= k <= n - 2):
            raise ValueError("invalid indices")
        if k == n - 2:  # takes precedence when n = 3 makes the cases overlap
            return mono((("A", i), 1))
        if k == 1:
            return mono((("A", i), 1), (("A", n), -1), (("C", n), 1))
        return mono((("A", i), 1), (("B", k - 1), -1), (("D", k - 1), 1))
    raise ValueError("closed form covers [a_i, a_j] and [a_i, b_k] only")


def _b0_var(n: int) -> Var:
    return ("A", n)  # convention B_0 := A_n


def _d0_var(n: int) -> Var:
    return ("C", n)  # convention D_0 := C_n


def lm_dr_closed_form(n: int, r: int) -> LaurentMonomial:
    """Leading monomial of the r-th discriminant-resultant (the I = [r]
    term of the bracket sum), via the closed product formula."""
    if n < 3:
        raise ValueError("need n >= 3")
    if r == 1 or not (0 <= r <= n):
        raise ValueError("valid r is 0 or 2..n (the r = 1 entry vanishes)")
    exps: Dict[Var, int] = {}

    def bump(v: Var, e: int):
        exps[v] = exps.get(v, 0) + e

    for j in range(r + 1, n + 1):
        for i in range(1, j):
            bump(("A", i), 1)
            bump(("A", j - 1), -1)
            bump(("C", j - 1), 1)
        for i in range(j + 1, n + 1):
            bump(("A", j), 1)
            bump(("A", i - 1), -1)
            bump(("C", i - 1), 1)
    for k in range(1, n - 2):  # k in [n-3], with B_0 = A_n and D_0 = C_n
        b = _b0_var(n) if k == 1 else ("B", k - 1)
        d = _d0_var(n) if k == 1 else ("D", k - 1)
        bump(b, -r)
        bump(d, r)
    for i in range(1, r + 1):
        bump(("A", i), n - 2)
    return LaurentMonomial.from_dict(exps)


def degree_formulas(n: int, r: int, l: int) -> dict:
    """Closed-form degrees on lm(DR_{n,r}): c = deg_{C_l}, and the
    auxiliary a_prime with deg_{A_l} = a_prime - c.

    The closed forms assume n >= 4 (for n = 3 the B/D block of the
    product is empty and the l = n cases degenerate; use the direct
    method there).
    """
    if not (1 <= l <= n):
        raise ValueError("l out of range")
    if r == 1 or not (0 <= r <= n):
        raise ValueError("valid r is 0 or 2..n")
    if n < 4 and l == n:
        raise ValueError("the l = n closed forms need n >= 4")
    if l <= r - 1:
        c = 0
    elif l <= n - 1:
        c = 2 * l - r
    else:
        c = r
    if l <= r:
        a_prime = 2 * n - r - 2
    else:
        a_prime = 2 * n - 2 * l
    return {"c": c, "a_prime": a_prime}


def per_term_A_degree(n: int, I: Iterable[int], l: int) -> int:
    """deg_{A_l} of the leading monomial of the bracket-sum term for a
    subset I of [n] (piecewise closed form)."""
    I = set(I)
    if not (1 <= l <= n):
        raise ValueError("l out of range")
    r = len(I)
    J = set(range(1, n + 1)) - I
    t1 = (n - 2) if l in I else (n - l)
    t2 = l if (l + 1 in J) else 0
    if l <= n - 1:
        t3 = n - r - 2 * len(J & set(range(1, l + 1)))
    else:
        t3 = -r if n >= 4 else 0  # B_0 = A_n only occurs when n >= 4
    return t1 - t2 + t3


def _term_bracket_factors(n: int, I: Sequence[int]):
    J = sorted(set(range(1, n + 1)) - set(I))
    factors = []
    for j in J:
        for i in range(1, n + 1):
            if i != j:
                factors.append((alpha(i), alpha(j)))
    for i in I:
        for k in range(1, n - 1):
            factors.append((beta(k), alpha(i)))
    return factors


def term_leading_monomial(model: PolygonModel, n: int, I: Sequence[int]) -> LaurentMonomial:
    """lm of one bracket-sum term, as the product of per-bracket lms
    (leading monomials are multiplicative under lex)."""
    mono = LaurentMonomial.one()
    for s, t in _term_bracket_factors(n, I):
        p = laurent_expand_bracket(model, s, t)
        mono = mono * lex_leading_monomial(p, model)
    return mono


def dominance_check(n: int, r: int) -> dict:
    """Enumerate all C(n, r) subsets and confirm the I = [r] term's
    leading monomial strictly lex-dominates every other term's."""
    from .brackets import subsets_colex

    model = PolygonModel(n)
    ordered = model.all_vars()
    ranking = []
    for I in subsets_colex(n, r):
        mono = term_leading_monomial(model, n, I)
        ranking.append((list(I), mono))
    ranking.sort(key=lambda it: _exp_vector(it[1], ordered), reverse=True)
    lead = ranking[0]
    dominant = lead[0] == list(range(1, r + 1))
    strict = (len(ranking) == 1
              or _exp_vector(lead[1], ordered) > _exp_vector(ranking[1][1], ordered))
    return {
        "n": n, "r": r,
        "dominant": dominant and strict,
        "ranking": [{"I": I, "lm": str(m)} for I, m in ranking],
    }


def dr_rows(n: int) -> List[int]:
    return [0] + list(range(2, n + 1))


@dataclass(frozen=True)
class DegreeMatrix:
    """deg_X lm(DR_{n,r}) for r in {0, 2, ..., n} and X over the ring vars."""

    n: int
    columns: tuple
    rows: tuple  # (r, exponent tuple) pairs

    def matrix(self) -> List[List[int]]:
        return [list(degrees) for _, degrees in self.rows]

    def to_json(self) -> dict:
        return {"n": self.n,
                "columns": [var_name(v) for v in self.columns],
                "rows": [{"r": r, "degrees": list(d)} for r, d in self.rows]}


def degree_matrix_P(n: int, method: str = "closed_form",
                    budget: int = 6) -> DegreeMatrix:
    """Degree matrix of the leading monomials of all DR_{n,r}."""
    from .brackets import dr_bracket_sum

    model = PolygonModel(n)
    columns = tuple(model.all_vars())
    rows = []
    for r in dr_rows(n):
        if method == "closed_form":
            mono = lm_dr_closed_form(n, r)
        elif method == "direct":
            if n > budget:
                raise ValueError(f"direct expansion budget is n <= {budget}")
            p = laurent_expand_poly(model, dr_bracket_sum(n, r))
            mono = lex_leading_monomial(p, model)
        else:
            raise ValueError(f"unknown method: {method}")
        d = mono.as_dict()
        rows.append((r, tuple(d.get(v, 0) for v in columns)))
    return DegreeMatrix(n, columns, tuple(rows))
