"""Sparse multivariate polynomials with exact rational coefficients.

Terms are keyed by exponent tuples over a sorted variable namespace;
arithmetic union-merges namespaces so callers never pre-align them.
All values are immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .rationals import DualScalar, format_rational, parse_rational


class NotDivisibleError(ArithmeticError):
    """Raised when an exact polynomial quotient does not exist."""


class MissingVariableError(KeyError):
    """Raised when an evaluation point omits a variable."""


def _coeff(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational coefficient: {x!r}")


class MultiPoly:
    """Immutable sparse polynomial over Q."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Fraction]):
        vs = tuple(variables)
        if list(vs) != sorted(vs):
            raise ValueError("variable namespace must be sorted")
        clean = {}
        for exps, c in terms.items():
            c = _coeff(c)
            if len(exps) != len(vs):
                raise ValueError("exponent vector does not match namespace")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent in polynomial term")
            if c:
                clean[tuple(exps)] = c
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, c) -> "MultiPoly":
        c = _coeff(c)
        return cls((), {(): c} if c else {})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        return cls((name,), {(1,): Fraction(1)})

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls((), {})

    # -- structure ---------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if self.is_zero:
            return -1
        return max(sum(e) for e in self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = _align(self, other)
        return a.terms == b.terms

    def __hash__(self):
        p = self._trim()
        return hash((p.variables, frozenset(p.terms.items())))

    def _trim(self) -> "MultiPoly":
        """Drop variables that occur in no term (canonical for eq/hash)."""
        used = [i for i, v in enumerate(self.variables)
                if any(e[i] for e in self.terms)]
        if len(used) == len(self.variables):
            return self
        vs = tuple(self.variables[i] for i in used)
        terms = {tuple(e[i] for i in used): c for e, c in self.terms.items()}
        return MultiPoly(vs, terms)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = _align(self, other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(a.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            if not c:
                return MultiPoly(self.variables, {})
            return MultiPoly(self.variables,
                             {e: c * v for e, v in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = _align(self, other)
        out: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly(a.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a non-negative integer")
        out = MultiPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div(self, q: "MultiPoly") -> "MultiPoly":
        """Return r with self == q*r, or raise NotDivisibleError."""
        if isinstance(q, (int, Fraction)):
            q = MultiPoly.constant(q)
        if q.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        a, b = _align(self, q)
        rem = dict(a.terms)
        lt_q = max(b.terms)  # lex-leading exponent
        c_q = b.terms[lt_q]
        quo: dict = {}
        while rem:
            lt_r = max(rem)
            diff = tuple(x - y for x, y in zip(lt_r, lt_q))
            if any(d < 0 for d in diff):
                raise NotDivisibleError("no exact quotient")
            c = rem[lt_r] / c_q
            quo[diff] = c
            for e, cq in b.terms.items():
                tgt = tuple(x + y for x, y in zip(e, diff))
                s = rem.get(tgt, Fraction(0)) - c * cq
                if s:
                    rem[tgt] = s
                else:
                    rem.pop(tgt, None)
        return MultiPoly(a.variables, quo)

    def derivative(self, var: str) -> "MultiPoly":
        if var not in self.variables:
            return MultiPoly(self.variables, {})
        i = self.variables.index(var)
        out: dict = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[e2] = out.get(e2, Fraction(0)) + c * e[i]
        return MultiPoly(self.variables, out)

    # -- evaluation ----------------------------------------------------------
    def evaluate(self, point: Mapping[str, object]):
        """Exact value at a point; values may be Fraction, int or DualScalar."""
        vals = []
        for v in self.variables:
            if v not in point:
                raise MissingVariableError(v)
            vals.append(point[v])
        acc = None
        for e, c in sorted(self.terms.items()):
            term = c
            for x, k in zip(vals, e):
                if k:
                    term = term * x ** k
            acc = term if acc is None else acc + term
        if acc is None:
            return Fraction(0)
        return acc

    def eval_with_dual(self, point: Mapping[str, Fraction], direction: str) -> DualScalar:
        """Value and exact partial derivative along one variable."""
        if direction not in self.variables and direction not in point:
            raise MissingVariableError(direction)
        lifted = {v: DualScalar.seed(x, 1 if v == direction else 0)
                  for v, x in point.items()}
        out = self.evaluate(lifted)
        if not isinstance(out, DualScalar):
            out = DualScalar.lift(out)
        return out

    # -- serialization ---------------------------------------------------------
    def to_json(self) -> dict:
        p = self._trim()
        recs = [{"coefficient": format_rational(c),
                 "exponents": list(e)}
                for e, c in sorted(p.terms.items())]
        return {"variables": list(p.variables), "terms": recs}

    @classmethod
    def from_json(cls, data: dict) -> "MultiPoly":
        vs = list(data["variables"])
        terms = {tuple(rec["exponents"]): parse_rational(rec["coefficient"])
                 for rec in data["terms"]}
        return cls(vs, terms)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"{v}^{k}" if k > 1 else v
                            for v, k in zip(self.variables, e) if k)
            cs = format_rational(c)
            parts.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(parts)

    __repr__ = __str__


def _align(p: MultiPoly, q: MultiPoly):
    """Remap both polynomials onto the sorted union namespace."""
    if p.variables == q.variables:
        return p, q
    vs = tuple(sorted(set(p.variables) | set(q.variables)))
    return _remap(p, vs), _remap(q, vs)


def _remap(p: MultiPoly, vs: tuple) -> MultiPoly:
    if p.variables == vs:
        return p
    idx = [vs.index(v) for v in p.variables]
    terms = {}
    for e, c in p.terms.items():
        ne = [0] * len(vs)
        for i, k in zip(idx, e):
            ne[i] = k
        terms[tuple(ne)] = c
    return MultiPoly(vs, terms)


def interpolate_in_t(samples: Iterable[tuple]):
    """Lagrange interpolation through (node, value) samples.

    Nodes are rationals; values may be scalars or MultiPoly.  Returns the
    coefficient list of the unique polynomial of degree < #samples in the
    interpolation parameter, trailing zeros trimmed.
    """
    samples = [(Fraction(x), v) for x, v in samples]
    nodes = [x for x, _ in samples]
    if len(set(nodes)) != len(nodes):
        raise ValueError("interpolation nodes must be pairwise distinct")
    m = len(samples)
    coeffs = [None] * m
    for i, (xi, vi) in enumerate(samples):
        # basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j)
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            denom *= xi - xj
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, b in enumerate(basis):
                nxt[k] += -xj * b
                nxt[k + 1] += b
            basis = nxt
        for k, b in enumerate(basis):
            w = b / denom
            contrib = vi * w
            coeffs[k] = contrib if coeffs[k] is None else coeffs[k] + contrib
    while len(coeffs) > 1 and _value_is_zero(coeffs[-1]):
        coeffs.pop()
    return coeffs


def _value_is_zero(v) -> bool:
    if isinstance(v, MultiPoly):
        return v.is_zero
    return v == 0
