"""Binary forms, Sylvester matrices, fraction-free determinants and the
discriminant-resultant series.

A degree-m form is f = sum_i a_i x^i y^(m-i).  The resultant is
sign-normalized so that it agrees with the bracket product of the symbols
of the two forms: signed_resultant = (-1)^(d*e) * det(Sylvester).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .multipoly import MultiPoly, NotDivisibleError, interpolate_in_t
from .rationals import DualScalar, format_rational, parse_rational


class NumericDegenerateError(ArithmeticError):
    """a_0*a_n vanished where the construction needs to divide by it."""


class DegeneratePivotError(ArithmeticError):
    """Elimination hit a non-invertible pivot (dual-number path only)."""


@dataclass(frozen=True)
class BinaryForm:
    """Coefficients a_0..a_m of f = sum a_i x^i y^(m-i)."""

    degree: int
    coefficients: tuple

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("negative degree")
        if len(self.coefficients) != self.degree + 1:
            raise ValueError("coefficient count must be degree + 1")
        object.__setattr__(self, "coefficients", tuple(self.coefficients))

    @classmethod
    def from_coeffs(cls, coefficients: Sequence) -> "BinaryForm":
        coefficients = tuple(coefficients)
        return cls(len(coefficients) - 1, coefficients)

    @classmethod
    def generic(cls, degree: int, prefix: str = "a") -> "BinaryForm":
        """Form with fresh symbolic coefficients prefix0..prefixm."""
        return cls.from_coeffs(tuple(MultiPoly.variable(f"{prefix}{i}")
                                     for i in range(degree + 1)))

    def x_dx(self) -> "BinaryForm":
        """x * d/dx, coefficient-wise i*a_i (same formal degree)."""
        return BinaryForm.from_coeffs(tuple(c * Fraction(i)
                                            for i, c in enumerate(self.coefficients)))

    def scale(self, s) -> "BinaryForm":
        return BinaryForm.from_coeffs(tuple(c * s for c in self.coefficients))

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coefficients)

    def to_json(self) -> dict:
        return {"degree": self.degree,
                "coefficients": [format_rational(c) for c in self.coefficients]}

    @classmethod
    def from_json(cls, data: dict) -> "BinaryForm":
        coeffs = tuple(parse_rational(s) for s in data["coefficients"])
        form = cls.from_coeffs(coeffs)
        if form.degree != int(data["degree"]):
            raise ValueError("degree field disagrees with coefficient count")
        return form


def sl2_transform(f: BinaryForm, g: Sequence) -> BinaryForm:
    """(g.f)(x,y) := f(a*x + b*y, c*x + d*y) for g = (a, b, c, d)."""
    a, b, c, d = (Fraction(t) for t in g)
    m = f.degree
    # coefficients of (a*x + b*y)^i * (c*x + d*y)^(m-i), accumulated exactly
    out = [Fraction(0) * f.coefficients[0] for _ in range(m + 1)]
    for i, ci in enumerate(f.coefficients):
        if _is_zero(ci):
            continue
        fac = [Fraction(1)]
        for _ in range(i):
            fac = _lin_mul(fac, a, b)
        for _ in range(m - i):
            fac = _lin_mul(fac, c, d)
        for j, w in enumerate(fac):
            out[j] = out[j] + ci * w
    return BinaryForm.from_coeffs(tuple(out))


def _lin_mul(coeffs, u, v):
    """Multiply a coefficient list (in x^j y^(k-j)) by u*x + v*y."""
    out = [Fraction(0)] * (len(coeffs) + 1)
    for j, c in enumerate(coeffs):
        out[j + 1] += c * u
        out[j] += c * v
    return out


def sylvester_matrix(f: BinaryForm, g: BinaryForm):
    """(d+e) x (d+e) Sylvester matrix: e shifted rows of f, then d of g.

    Rows carry the coefficients of the forms read as degree-d (resp. e)
    polynomials in x at y = 1, highest power first.
    """
    d, e = f.degree, g.degree
    if d < 1 or e < 1:
        raise ValueError("sylvester_matrix needs both degrees >= 1")
    if f.is_zero() or g.is_zero():
        raise ValueError("zero form")
    n = d + e
    frow = list(reversed(f.coefficients))  # a_d .. a_0
    grow = list(reversed(g.coefficients))
    zero = Fraction(0)
    M = []
    for s in range(e):
        M.append([zero] * s + frow + [zero] * (n - d - 1 - s))
    for s in range(d):
        M.append([zero] * s + grow + [zero] * (n - e - 1 - s))
    return M


def det_fraction_free(M):
    """Exact determinant by Bareiss elimination.

    Works over any integral domain whose elements support *, - and exact
    division (ints, Fractions, MultiPoly); dual numbers work when every
    pivot has a nonzero value part.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not _is_unit_pivot(A[k][k]):
            swap = None
            for i in range(k + 1, n):
                if _is_unit_pivot(A[i][k]):
                    swap = i
                    break
            if swap is None:
                if all(_is_zero(A[i][k]) for i in range(k, n)):
                    return _zero_like(A[0][0])
                raise DegeneratePivotError("no invertible pivot available")
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        pivot = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * pivot - A[i][k] * A[k][j]
                A[i][j] = num if prev is None else _exact_div(num, prev)
            A[i][k] = _zero_like(pivot)
        prev = pivot
    det = A[n - 1][n - 1]
    return -det if sign < 0 else det


def _is_zero(x) -> bool:
    if isinstance(x, MultiPoly):
        return x.is_zero
    if isinstance(x, DualScalar):
        return x.value == 0 and x.derivative == 0
    return x == 0


def _is_unit_pivot(x) -> bool:
    if isinstance(x, MultiPoly):
        return not x.is_zero
    if isinstance(x, DualScalar):
        return x.value != 0
    return x != 0


def _zero_like(x):
    if isinstance(x, MultiPoly):
        return MultiPoly.zero()
    if isinstance(x, DualScalar):
        return DualScalar(Fraction(0))
    if isinstance(x, Fraction):
        return Fraction(0)
    return 0


def _exact_div(a, b):
    if isinstance(a, MultiPoly) or isinstance(b, MultiPoly):
        if not isinstance(a, MultiPoly):
            a = MultiPoly.constant(a)
        if not isinstance(b, MultiPoly):
            b = MultiPoly.constant(b)
        return a.exact_div(b)
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise NotDivisibleError(f"{a} not divisible by {b}")
        return q
    return a / b


def signed_resultant(f: BinaryForm, g: BinaryForm):
    """Resultant normalized to the bracket product of the forms' symbols.

    Equals (-1)^(d*e) * det(sylvester_matrix(f, g)); degree-0 arguments are
    handled as empty products: res(f, c) = c^d and res(c, g) = c^e.
    """
    d, e = f.degree, g.degree
    if f.is_zero() and g.is_zero():
        raise ValueError("resultant of two zero forms")
    if e == 0:
        return g.coefficients[0] ** d
    if d == 0:
        return f.coefficients[0] ** e
    det = det_fraction_free(sylvester_matrix(f, g))
    return -det if (d * e) % 2 else det


def discriminant(f: BinaryForm):
    """res(f, x*df/dx) / (a_0 * a_d), sign-normalized as above."""
    d = f.degree
    if d < 2:
        raise ValueError("discriminant needs degree >= 2")
    a0, ad = f.coefficients[0], f.coefficients[-1]
    denom = a0 * ad
    num = signed_resultant(f, f.x_dx())
    if isinstance(num, MultiPoly) or isinstance(denom, MultiPoly):
        return _exact_div(num, denom)
    if _is_zero(denom):
        raise NumericDegenerateError("a_0 * a_d = 0")
    return num / denom


@dataclass(frozen=True)
class DRSeries:
    """Coefficients DR_{n,0}..DR_{n,n} of the deformed-resultant series."""

    n: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.n + 1:
            raise ValueError("series must have n + 1 entries")

    def to_json(self) -> dict:
        ents = []
        for e in self.entries:
            if isinstance(e, MultiPoly):
                ents.append(e.to_json())
            else:
                ents.append(format_rational(e))
        return {"n": self.n, "entries": ents}


def dr_series(f_n: BinaryForm, f_m: BinaryForm, mode: str = "numeric") -> DRSeries:
    """Series of res(f_n, x*d/dx f_n + t*x*y*f_m) / (a_0*a_n) in t.

    f_m must have degree n-2.  Computed by evaluating at t = 0..n and
    Lagrange-interpolating; each sample is divided exactly by a_0*a_n.
    """
    n = f_n.degree
    if n < 2:
        raise ValueError("dr_series needs degree >= 2")
    if f_m.degree != n - 2:
        raise ValueError("second form must have degree n - 2")
    if mode not in ("numeric", "symbolic"):
        raise ValueError(f"unknown mode: {mode}")
    a0, an = f_n.coefficients[0], f_n.coefficients[-1]
    denom = a0 * an
    symbolic = isinstance(denom, MultiPoly)
    if not symbolic and _is_zero(denom):
        raise NumericDegenerateError("a_0 * a_n = 0")
    xdx = f_n.x_dx().coefficients
    samples = []
    for t in range(n + 1):
        # coefficient of x^j y^(n-j) in x*dx(f_n) + t*x*y*f_m is
        # j*a_j + t*b_{j-1} (b out of range contributes 0)
        gc = list(xdx)
        if t:
            for j in range(1, n):
                gc[j] = gc[j] + f_m.coefficients[j - 1] * Fraction(t)
        res = signed_resultant(f_n, BinaryForm.from_coeffs(gc))
        samples.append((Fraction(t), _exact_div(res, denom)))
    entries = interpolate_in_t(samples)
    pad = (MultiPoly.zero() if symbolic else
           _zero_like(entries[0]) if entries else Fraction(0))
    while len(entries) < n + 1:
        entries.append(pad)
    return DRSeries(n, tuple(entries))
