"""
Testing of :mod:`realforms.study.family`.
"""


import os
import unittest
from fractions import Fraction

try:
    import realforms
except ImportError:  # If run locally.
    import sys
    sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))
    import realforms

from realforms import sampling
from realforms.arith import LaurentPoly, OddRoot
from realforms.groups import (LMat2, LMat3, ProjElem2, in_G0n, is_cocycle,
                              j_matrix, proj_eq)
from realforms.study import family

t = LaurentPoly.t()


class TestFamilySpec(unittest.TestCase):

    def test_negative(self):
        with self.assertRaises(ValueError):
            family.FamilySpec(-1, 0)
        with self.assertRaises(ValueError):
            family.FamilySpec(0, -1)

    def test_name(self):
        spec = family.FamilySpec(2, 1)
        self.assertEqual(spec.nparams, 2)
        self.assertEqual(spec.name, 'n=2 m=1')


class TestIdentities(unittest.TestCase):

    def test_identity_grid(self):
        """ Identities, determinants and G0n membership for n, m <= 4. """
        for n in range(5):
            for m in range(5):
                spec = family.FamilySpec(n, m)
                with self.subTest(spec=spec.name):
                    report = family.process(spec, check_surface=False)
                    self.assertTrue(report.all(), report[~report])

    def test_process(self):
        for spec in (family.FamilySpec(0, 0), family.FamilySpec(1, 1),
                     family.FamilySpec(2, 0)):
            with self.subTest(spec=spec.name):
                report = family.process(spec)
                self.assertEqual(list(report.index),
                                 family.Columns.process())
                self.assertTrue(report.all())

    def test_mutation_is_caught(self):
        report = family.verify_identities(family.FamilySpec(1, 1),
                                          mutate=True)
        self.assertFalse(report[family.Columns.M_J_M])

    def test_batch(self):
        specs = [family.FamilySpec(n, 0) for n in range(3)]
        df = realforms.study.process(specs, by_module=family,
                                     check_surface=False)
        self.assertEqual(list(df.index), [spec.name for spec in specs])
        self.assertTrue(df.all().all())

    def test_M_in_G0n(self):
        for n in range(3):
            spec = family.FamilySpec(n, 1)
            self.assertTrue(in_G0n(family.build_M(spec), n))


class TestFibers(unittest.TestCase):

    def test_dimension_mismatch(self):
        spec = family.FamilySpec(1, 1)
        with self.assertRaises(ValueError):
            family.fiber_matrices(spec, [1])
        with self.assertRaises(ValueError):
            family.fiber_element(spec, [1, 2, 3])

    def test_specialization(self):
        spec = family.FamilySpec(2, 1)
        s = (Fraction(1, 2), -3)
        M, A = family.family_matrices(spec)
        M_s, A_s = family.fiber_matrices(spec, s)
        self.assertEqual(M.evaluate_params(s), M_s)
        self.assertEqual(A.evaluate_params(s), A_s)

    def test_fiber_cocycles(self):
        rng = sampling.generator(11)
        for n in (1, 2, 3):
            spec = family.FamilySpec(n, n - 1)
            for _ in range(100):
                s = sampling.random_fiber_point(rng, spec.nparams)
                with self.subTest(n=n, s=s):
                    psi = family.fiber_element(spec, s)
                    self.assertTrue(is_cocycle(psi))

    def test_fiber_preserves_surface(self):
        spec = family.FamilySpec(1, 1)
        M, _ = family.fiber_matrices(spec, (2, Fraction(-1, 3)))
        N = family.embed_N(M, spec.n)
        self.assertEqual(family.yn_multiplier(N, spec.n), 1)


class TestSurface(unittest.TestCase):

    def test_torus_embedding(self):
        lam = Fraction(3, 2)
        N = family.embed_N(ProjElem2(LMat2.diag(lam, 1)), 2)
        self.assertEqual(family.yn_multiplier(N, 2), lam * lam)

    def test_embedding_is_homomorphism(self):
        rng = sampling.generator(17)
        for _ in range(30):
            first = sampling.random_invertible(rng)
            second = sampling.random_invertible(rng)
            n = int(rng.integers(0, 4))
            with self.subTest(n=n):
                self.assertEqual(
                    family.embed_N(first.rep @ second.rep, n),
                    family.embed_N(first, n) @ family.embed_N(second, n))
                self.assertTrue(proj_eq(
                    family.embed_N(first * second, n),
                    family.embed_N(first, n) @ family.embed_N(second, n)))

    def test_not_preserved(self):
        self.assertFalse(family.preserves_Yn(LMat3.diag(2, 1, 1), 1))

    def test_torus_and_trivialization(self):
        for n in range(4):
            self.assertTrue(family.torus_and_trivialization_check(n).all())
        wrong = family.torus_and_trivialization_check(2, z_weight=-1)
        self.assertFalse(wrong[family.Columns.TORUS_ACTION])
        self.assertTrue(wrong[family.Columns.TRIVIALIZATION])


class TestRestriction(unittest.TestCase):

    def test_automorphism(self):
        result = family.restrict_t0(LMat3.identity())
        self.assertEqual(result.kind, family.Restriction.AUTOMORPHISM)
        self.assertEqual(result.rank, 3)
        self.assertIsNone(result.image)

    def test_contraction(self):
        N = family.embed_N(LMat2.diag(t, 1), 1)
        result = family.restrict_t0(N)
        self.assertEqual(result.kind, family.Restriction.CONTRACTION)
        self.assertEqual(result.image, (0, 1, 0))

    def test_rank_two(self):
        result = family.restrict_t0(LMat3.diag(1, 1, t))
        self.assertEqual(result.kind, family.Restriction.RANK2)

    def test_fibers_extend(self):
        """ Fibres with n >= 1 extend over the singular fibre. """
        rng = sampling.generator(5)
        for n in (1, 2):
            spec = family.FamilySpec(n, 1)
            for _ in range(10):
                s = sampling.random_fiber_point(rng, spec.nparams)
                M, _ = family.fiber_matrices(spec, s)
                result = family.restrict_t0(family.embed_N(M, n))
                self.assertEqual(result.kind,
                                 family.Restriction.AUTOMORPHISM)

    def test_contraction_dichotomy(self):
        """ N(A(s)) extends over t = 0 iff P(s) lies in t^n R[t];
        otherwise it contracts the singular fibre onto [0:0:1]. """
        rng = sampling.generator(13)
        for n in (1, 2, 3):
            spec = family.FamilySpec(n, n)
            for _ in range(100):
                s = list(sampling.random_fiber_point(rng, spec.nparams))
                zeros = int(rng.integers(0, spec.nparams + 1))
                s[:zeros] = [0] * zeros
                _, A = family.fiber_matrices(spec, s)
                result = family.restrict_t0(family.embed_N(A, n))
                with self.subTest(n=n, s=s):
                    if not any(s[:n]):
                        self.assertEqual(result.kind,
                                         family.Restriction.AUTOMORPHISM)
                        self.assertEqual(result.matrix,
                                         ((1, 0, 0), (0, 1, 0),
                                          (-s[n], -s[n], 1)))
                    else:
                        self.assertEqual(result.kind,
                                         family.Restriction.CONTRACTION)
                        self.assertEqual(result.rank, 1)
                        self.assertEqual(result.image, (0, 0, 1))

    def test_dichotomy_examples(self):
        _, A = family.fiber_matrices(family.FamilySpec(2, 2), [0, 0, 1])
        result = family.restrict_t0(family.embed_N(A, 2))
        self.assertEqual(result.kind, family.Restriction.AUTOMORPHISM)
        _, A = family.fiber_matrices(family.FamilySpec(3, 2), [0, 0, 1])
        result = family.restrict_t0(family.embed_N(A, 3))
        self.assertEqual(result.kind, family.Restriction.CONTRACTION)
        self.assertEqual(result.image, (0, 0, 1))

    def test_parametric(self):
        spec = family.FamilySpec(1, 0)
        N = family.embed_N(family.build_M(spec), 1)
        with self.assertRaises(ValueError):
            family.restrict_t0(N)


class TestExamples(unittest.TestCase):

    def test_P_h(self):
        spec = family.FamilySpec(0, 1)
        P, h = family.build_P_h(spec)
        self.assertEqual(P.evaluate_params([1, 2]), LaurentPoly({0: 1, 1: 2}))
        self.assertEqual(h.evaluate_params([1, 1]),
                         LaurentPoly({1: 1, 2: 2, 3: 1}))

    def test_smallest_M(self):
        spec = family.FamilySpec(0, 0)
        M = family.build_M(spec).rep
        a0 = LaurentPoly.parameter(0, 1)
        t_ = LaurentPoly.t(1)
        self.assertEqual(M.a, 1 - t_ * a0 * a0)
        self.assertEqual(M.b, t_ * a0)
        self.assertEqual(M.c, -a0)
        self.assertEqual(M.d, LaurentPoly.constant(1, 1))

    def test_A_without_sum(self):
        A = family.build_A(family.FamilySpec(0, 0)).rep
        self.assertFalse(A.c)
        self.assertEqual(A.det(), 1)

    def test_zero_fiber(self):
        element = family.fiber_element(family.FamilySpec(2, 2), [0, 0, 0])
        self.assertEqual(element.g, ProjElem2.identity())

    def test_fiber_in_G0n(self):
        rng = sampling.generator(8)
        spec = family.FamilySpec(2, 1)
        for _ in range(20):
            s = sampling.random_fiber_point(rng, spec.nparams)
            self.assertTrue(in_G0n(family.fiber_element(spec, s).g, 2))

    def test_swap(self):
        N = family.embed_N(ProjElem2(j_matrix()), 1)
        self.assertEqual(N, LMat3([[0, t, 0], [t, 0, 0], [0, 0, t]]))
        self.assertEqual(family.yn_multiplier(N, 1), t * t)
        self.assertEqual(family.embed_N(ProjElem2.identity(), 3),
                         LMat3.identity())

    def test_parametric_surface(self):
        for n in range(4):
            for m in range(4):
                spec = family.FamilySpec(n, m)
                N = family.embed_N(family.build_M(spec), n)
                with self.subTest(spec=spec.name):
                    self.assertEqual(family.yn_multiplier(N, n), 1)

    def test_restrict_M(self):
        M, _ = family.fiber_matrices(family.FamilySpec(2, 1), [1, 1])
        result = family.restrict_t0(family.embed_N(M, 2))
        self.assertEqual(result.kind, family.Restriction.AUTOMORPHISM)
        self.assertEqual(result.matrix[0], (1, 0, 0))
        self.assertEqual(result.matrix[1], (0, 1, 0))

    def test_restrict_A(self):
        for n in (1, 2, 3):
            _, A = family.fiber_matrices(family.FamilySpec(n, 1), [2, 1])
            result = family.restrict_t0(family.embed_N(A, n))
            self.assertEqual(result.kind, family.Restriction.CONTRACTION)
            self.assertEqual(result.image, (0, 0, 1))


class TestRealLocus(unittest.TestCase):

    def test_point(self):
        root, point = family.real_locus_point(1, 2, 2)
        self.assertEqual(root, 2)
        self.assertTrue(family.is_on_Xn(1, *point[:2], root, point[2]))

    def test_irrational_base(self):
        root, point = family.real_locus_point(1, 1, 0)
        self.assertEqual(root, OddRoot(1, 3))
        root, point = family.real_locus_point(2, 1, 1)
        self.assertFalse(root.is_rational())
        self.assertTrue(family.is_on_Xn(2, 1, 1, root, 1))

    def test_singular_point(self):
        self.assertTrue(family.is_on_Xn(2, 0, 0, 0, 1))
        self.assertFalse(family.is_on_Xn(0, 1, 0, 1, 0))

    def test_off_surface(self):
        self.assertFalse(family.is_on_Xn(1, 1, 1, 1, 1))
        with self.assertRaises(ValueError):
            family.is_on_Xn(1, 0, 0, 1, 0)


if __name__ == '__main__':
    unittest.main(exit=False)
