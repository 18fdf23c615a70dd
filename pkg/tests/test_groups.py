"""
Testing of :mod:`realforms.groups`.
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
from realforms.arith import GaussianRational, LaurentPoly
from realforms.groups import (LMat2, ProjElem2, SemidirectElem, bridge_holds,
                              galois_act, in_G0n, is_cocycle,
                              is_gamma_invariant, j_element, j_matrix,
                              proj_eq, proj_normalize, sd_mul, torus_element,
                              twisted_conj, twisted_torus_element)
from realforms.study.family import FamilySpec, fiber_element

t = LaurentPoly.t()


class TestMatrices(unittest.TestCase):

    def test_proj_eq(self):
        m = LMat2([[1, t], [2, 3]])
        self.assertTrue(proj_eq(m, m.scale(LaurentPoly.monomial(2, 3))))
        self.assertFalse(proj_eq(m, LMat2([[1, t], [2, 4]])))

    def test_det_adjugate(self):
        m = LMat2([[1 + t, t], [1, 1]])
        self.assertEqual(m.det(), 1)
        self.assertEqual(m @ m.adjugate(), LMat2.identity())

    def test_normalization(self):
        g = ProjElem2(LMat2([[t ** -2, 0], [0, t ** 3]]))
        self.assertEqual(g.rep.min_ord(), 0)
        self.assertEqual(g.rep, LMat2([[1, 0], [0, t ** 5]]))

    def test_not_invertible(self):
        with self.assertRaises(ValueError):
            ProjElem2(LMat2([[1, 0], [0, 1 + t]]))

    def test_inverse(self):
        rng = sampling.generator(1)
        for _ in range(20):
            g = sampling.random_invertible(rng)
            self.assertEqual(g * g.inverse(), ProjElem2.identity())

    def test_in_G0n(self):
        for n in range(4):
            self.assertTrue(in_G0n(ProjElem2.identity(), n))
        self.assertFalse(in_G0n(ProjElem2(j_matrix()), 1))
        g = ProjElem2(LMat2([[1, t ** 2], [t, 1 + t ** 3]]))
        self.assertTrue(in_G0n(g, 1))
        self.assertFalse(in_G0n(g, 2))
        with self.assertRaises(ValueError):
            in_G0n(g, -1)


class TestSemidirect(unittest.TestCase):

    def setUp(self):
        self.rng = sampling.generator(7)

    def draw(self):
        return sampling.random_semidirect(self.rng)

    def test_zero_nu(self):
        with self.assertRaises(ValueError):
            SemidirectElem(ProjElem2.identity(), 0)

    def test_law(self):
        x = SemidirectElem(ProjElem2(LMat2([[1, t], [0, 1]])), 2)
        y = SemidirectElem(ProjElem2(LMat2([[1, 0], [t, 1]])), 3)
        product = sd_mul(x, y)
        expected = LMat2([[1, t * 3], [0, 1]]) @ LMat2([[1, 0], [t, 1]])
        self.assertEqual(product.nu, 6)
        self.assertEqual(product.g, ProjElem2(expected))
        self.assertEqual(x * y, product)

    def test_group_axioms(self):
        identity = SemidirectElem.identity()
        for _ in range(15):
            x, y, z = self.draw(), self.draw(), self.draw()
            self.assertEqual((x * y) * z, x * (y * z))
            self.assertEqual(x * x.inverse(), identity)
            self.assertEqual(x.inverse() * x, identity)
            self.assertEqual(x * identity, x)

    def test_galois_involution(self):
        for _ in range(20):
            x = self.draw()
            self.assertEqual(galois_act(galois_act(x)), x)

    def test_galois_homomorphism(self):
        for _ in range(20):
            x, y = self.draw(), self.draw()
            self.assertEqual(galois_act(x * y),
                             galois_act(x) * galois_act(y))

    def test_j_is_cocycle(self):
        self.assertTrue(is_cocycle(j_element()))
        self.assertTrue(is_cocycle(SemidirectElem.identity()))
        self.assertFalse(is_cocycle(SemidirectElem(ProjElem2.identity(), 2)))

    def test_invariant_elements(self):
        for _ in range(50):
            lam = sampling.random_gaussian(self.rng, nonzero=True)
            self.assertTrue(is_gamma_invariant(torus_element(lam)))
            self.assertTrue(is_gamma_invariant(twisted_torus_element(lam)))

    def test_torus_nu(self):
        x = torus_element(GaussianRational(1, 2))
        self.assertEqual(x.nu, 5)

    def test_twisted_conj_closure(self):
        spec = FamilySpec(2, 1)
        for _ in range(20):
            s = sampling.random_fiber_point(self.rng, spec.nparams)
            psi = fiber_element(spec, s)
            self.assertTrue(is_cocycle(twisted_conj(self.draw(), psi)))

    def test_twisted_conj_rejects(self):
        with self.assertRaises(ValueError):
            twisted_conj(self.draw(),
                         SemidirectElem(ProjElem2.identity(), 2))

    def test_coboundary_is_cocycle(self):
        identity = SemidirectElem.identity()
        for _ in range(10):
            phi = self.draw()
            self.assertTrue(is_cocycle(twisted_conj(phi, identity)))


class TestExamples(unittest.TestCase):

    def test_proj_normalize(self):
        j = j_matrix()
        self.assertEqual(proj_normalize(j).rep, j)
        self.assertEqual(proj_normalize(LMat2.diag(t, t)).rep,
                         LMat2.identity())
        with self.assertRaises(ValueError):
            proj_normalize(LMat2([[t, t ** 2], [t, t]]))

    def test_galois_fixes_j(self):
        self.assertEqual(galois_act(j_element()), j_element())

    def test_torus_product(self):
        lam = GaussianRational(1, 1)
        mu = Fraction(2, 3)
        self.assertEqual(torus_element(lam) * torus_element(mu),
                         torus_element(lam * mu))

    def test_trivial_conjugator(self):
        psi = fiber_element(FamilySpec(1, 1), [1, 1])
        self.assertEqual(twisted_conj(SemidirectElem.identity(), psi), psi)

    def test_family_not_invariant(self):
        psi = fiber_element(FamilySpec(1, 1), [1, 1])
        self.assertTrue(is_cocycle(psi))
        self.assertFalse(is_gamma_invariant(psi))

    def test_generic_family_not_invariant(self):
        rng = sampling.generator(23)
        drawn = 0
        while drawn < 50:
            n = 1 + drawn % 3
            spec = FamilySpec(n, int(rng.integers(0, 3)))
            s = sampling.random_fiber_point(rng, spec.nparams)
            if not any(s):
                continue
            drawn += 1
            psi = fiber_element(spec, s)
            with self.subTest(n=n, s=s):
                self.assertTrue(is_cocycle(psi))
                self.assertFalse(is_gamma_invariant(psi))


class TestBridge(unittest.TestCase):

    def test_family_matrices(self):
        spec = FamilySpec(1, 1)
        element = fiber_element(spec, [Fraction(1, 2), 3])
        self.assertTrue(bridge_holds(element.g))
        self.assertTrue(is_cocycle(element))

    def test_real_matrices(self):
        """ For real matrices the bridge and the cocycle condition agree. """
        rng = sampling.generator(3)
        candidates = [ProjElem2(j_matrix()), ProjElem2.identity(),
                      ProjElem2(LMat2([[1, 0], [0, t]]))]
        for _ in range(20):
            upper = LMat2([[1, sampling.random_laurent(rng, real=True)],
                           [0, 1]])
            candidates.append(ProjElem2(upper))
        for g in candidates:
            with self.subTest(g=str(g)):
                self.assertEqual(bridge_holds(g),
                                 is_cocycle(SemidirectElem(g, 1)))


if __name__ == '__main__':
    unittest.main(exit=False)
