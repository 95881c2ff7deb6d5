import random
from fractions import Fraction as F

import pytest

from drbracket.binforms import (BinaryForm, NumericDegenerateError,
                                det_fraction_free, discriminant, dr_series,
                                signed_resultant, sl2_transform,
                                sylvester_matrix)
from drbracket.multipoly import MultiPoly


def form_from_roots(pairs):
    """prod (u*x - v*y), coefficients expanded exactly."""
    coeffs = [F(1)]
    for u, v in pairs:
        nxt = [F(0)] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j + 1] += c * u
            nxt[j] += -c * v
        coeffs = nxt
    return BinaryForm.from_coeffs(coeffs)


def rand_form(rng, degree, require_ends=False):
    while True:
        coeffs = [F(rng.randint(-9, 9)) for _ in range(degree + 1)]
        if any(coeffs) and (not require_ends or (coeffs[0] and coeffs[-1])):
            return BinaryForm.from_coeffs(coeffs)


def bracket(p, q):
    return p[0] * q[1] - q[0] * p[1]


class TestSylvester:
    def test_degree_one_pair(self):
        a = MultiPoly.variable("a")
        b = MultiPoly.variable("b")
        f = BinaryForm.from_coeffs((-a, MultiPoly.constant(1)))  # x - a*y
        g = BinaryForm.from_coeffs((-b, MultiPoly.constant(1)))
        M = sylvester_matrix(f, g)
        assert M == [[MultiPoly.constant(1), -a],
                     [MultiPoly.constant(1), -b]]
        assert det_fraction_free(M) == a - b

    def test_size(self):
        f = BinaryForm.generic(3)
        g = BinaryForm.generic(2, "b")
        M = sylvester_matrix(f, g)
        assert len(M) == 5 and all(len(row) == 5 for row in M)

    def test_zero_form_rejected(self):
        z = BinaryForm.from_coeffs((F(0), F(0)))
        with pytest.raises(ValueError):
            sylvester_matrix(z, BinaryForm.generic(1))


class TestDeterminant:
    def test_identity(self):
        I4 = [[F(int(i == j)) for j in range(4)] for i in range(4)]
        assert det_fraction_free(I4) == 1

    def test_repeated_row(self):
        a = MultiPoly.variable("a")
        M = [[a, a + 1], [a, a + 1]]
        assert det_fraction_free(M).is_zero

    def test_needs_pivot_swap(self):
        M = [[F(0), F(1)], [F(1), F(0)]]
        assert det_fraction_free(M) == -1

    def test_matches_permutation_expansion(self):
        import itertools
        rng = random.Random(3)
        M = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(4)]
        ref = 0
        for perm in itertools.permutations(range(4)):
            sgn = 1
            for i in range(4):
                for j in range(i + 1, 4):
                    if perm[i] > perm[j]:
                        sgn = -sgn
            term = sgn
            for i in range(4):
                term *= M[i][perm[i]]
            ref += term
        assert det_fraction_free(M) == ref


class TestSignedResultant:
    def test_linear_pair_bracket_oracle(self):
        # res(x - 1y, x - 2y) = [alpha, beta] = 1*2 - 1*1 = 1
        f = form_from_roots([(F(1), F(1))])
        g = form_from_roots([(F(1), F(2))])
        assert signed_resultant(f, g) == 1

    def test_res_with_x_is_a0(self):
        rng = random.Random(5)
        for _ in range(10):
            f = rand_form(rng, 3)
            g = BinaryForm.from_coeffs((F(0), F(1)))  # x
            assert signed_resultant(f, g) == f.coefficients[0]

    def test_common_factor_vanishes(self):
        common = (F(1), F(1))  # x - y
        f = form_from_roots([common, (F(1), F(2))])
        g = form_from_roots([common, (F(1), F(3))])
        assert signed_resultant(f, g) == 0

    def test_degree_zero_argument(self):
        f = BinaryForm.generic(2)
        c = BinaryForm.from_coeffs((MultiPoly.variable("b0"),))
        b0 = MultiPoly.variable("b0")
        assert signed_resultant(f, c) == b0 ** 2

    def test_swap_antisymmetry(self):
        rng = random.Random(9)
        for _ in range(20):
            d, e = rng.randint(1, 4), rng.randint(1, 4)
            f, g = rand_form(rng, d), rand_form(rng, e)
            lhs = signed_resultant(f, g)
            rhs = signed_resultant(g, f)
            assert lhs == (rhs if (d * e) % 2 == 0 else -rhs)

    def test_multiplicativity(self):
        rng = random.Random(13)
        for _ in range(20):
            f = rand_form(rng, rng.randint(1, 3))
            g = rand_form(rng, rng.randint(1, 2))
            h = rand_form(rng, rng.randint(1, 2))
            gh_coeffs = _mul_forms(g, h)
            assert (signed_resultant(f, gh_coeffs)
                    == signed_resultant(f, g) * signed_resultant(f, h))

    def test_bracket_product_consistency(self):
        rng = random.Random(17)
        for _ in range(20):
            d, e = rng.randint(1, 3), rng.randint(1, 3)
            als = [(F(rng.randint(1, 9)), F(rng.randint(-9, 9))) for _ in range(d)]
            bes = [(F(rng.randint(1, 9)), F(rng.randint(-9, 9))) for _ in range(e)]
            f, g = form_from_roots(als), form_from_roots(bes)
            prod = F(1)
            for a in als:
                for b in bes:
                    prod *= bracket(a, b)
            assert signed_resultant(f, g) == prod


def _mul_forms(g, h):
    coeffs = [F(0)] * (g.degree + h.degree + 1)
    for i, ci in enumerate(g.coefficients):
        for j, cj in enumerate(h.coefficients):
            coeffs[i + j] += ci * cj
    return BinaryForm.from_coeffs(coeffs)


class TestDiscriminant:
    def test_generic_degree_two(self):
        a0, a1, a2 = (MultiPoly.variable(f"a{i}") for i in range(3))
        f = BinaryForm.generic(2)
        assert discriminant(f) == a0 * a2 * 4 - a1 ** 2

    def test_three_rational_roots(self):
        f = form_from_roots([(F(1), F(1)), (F(1), F(2)), (F(1), F(3))])
        assert discriminant(f) == -4

    def test_multiple_factor_vanishes(self):
        f = form_from_roots([(F(1), F(1)), (F(1), F(1))])
        assert discriminant(f) == 0

    def test_bracket_product(self):
        rng = random.Random(21)
        for d in range(2, 7):
            als = [(F(rng.randint(1, 9)), F(rng.randint(1, 9) * rng.choice((1, -1))))
                   for _ in range(d)]
            f = form_from_roots(als)
            prod = F(1)
            for i in range(d):
                for j in range(d):
                    if i != j:
                        prod *= bracket(als[i], als[j])
            assert discriminant(f) == prod

    def test_numeric_degenerate(self):
        f = BinaryForm.from_coeffs((F(0), F(1), F(1)))
        with pytest.raises(NumericDegenerateError):
            discriminant(f)


class TestDRSeries:
    def test_n2_symbolic(self):
        f = BinaryForm.generic(2)
        g = BinaryForm.from_coeffs((MultiPoly.variable("b0"),))
        s = dr_series(f, g, mode="symbolic")
        a0, a1, a2 = (MultiPoly.variable(f"a{i}") for i in range(3))
        b0 = MultiPoly.variable("b0")
        assert s.entries == (a0 * a2 * 4 - a1 ** 2, MultiPoly.zero(), b0 ** 2)

    def test_entry_one_vanishes_numerically(self):
        rng = random.Random(23)
        for n in range(2, 7):
            f = rand_form(rng, n, require_ends=True)
            g = rand_form(rng, n - 2)
            assert dr_series(f, g).entries[1] == 0

    def test_endpoints(self):
        # entry 0 is the discriminant; entry n is the sign-normalized
        # resultant times (-1)^n (the bracket product over [b_k, a_i])
        rng = random.Random(29)
        for n in range(2, 6):
            f = rand_form(rng, n, require_ends=True)
            g = rand_form(rng, n - 2)
            s = dr_series(f, g)
            assert s.entries[0] == discriminant(f)
            res = signed_resultant(f, g)
            assert s.entries[n] == (res if n % 2 == 0 else -res)

    def test_multigrading(self):
        rng = random.Random(31)
        for n in (2, 3, 4):
            f = rand_form(rng, n, require_ends=True)
            g = rand_form(rng, n - 2)
            base = dr_series(f, g)
            lam, mu = F(3, 2), F(-5, 7)
            scaled = dr_series(f.scale(lam), g.scale(mu))
            for r in range(n + 1):
                assert scaled.entries[r] == lam ** (2 * n - 2 - r) * mu ** r * base.entries[r]

    def test_sl2_invariance(self):
        rng = random.Random(37)
        for n in (2, 3, 4, 5):
            f = rand_form(rng, n, require_ends=True)
            g = rand_form(rng, n - 2)
            base = dr_series(f, g)
            for _ in range(5):
                b, c = rng.randint(-3, 3), rng.randint(-3, 3)
                # shear product ((1, b), (0, 1)) @ ((1, 0), (c, 1)); det 1
                mat = (1 + b * c, b, c, 1)
                tf, tg = sl2_transform(f, mat), sl2_transform(g, mat)
                if tf.coefficients[0] == 0 or tf.coefficients[-1] == 0:
                    continue
                assert dr_series(tf, tg).entries == base.entries

    def test_numeric_degenerate(self):
        f = BinaryForm.from_coeffs((F(0), F(1), F(1)))
        with pytest.raises(NumericDegenerateError):
            dr_series(f, BinaryForm.from_coeffs((F(1),)))

    def test_common_factor_kills_top_entry(self):
        common = (F(1), F(2))
        f = form_from_roots([common, (F(1), F(1)), (F(1), F(3))])
        g = form_from_roots([common])
        assert dr_series(f, g).entries[3] == 0

    def test_json_roundtrip(self):
        f = BinaryForm.from_coeffs((F(1, 2), F(3), F(-1)))
        data = f.to_json()
        assert data == {"degree": 2, "coefficients": ["1/2", "3", "-1"]}
        assert BinaryForm.from_json(data) == f
