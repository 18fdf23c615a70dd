"""
Testing of :mod:`realforms.study.p1`.
"""


import os
import unittest
from fractions import Fraction

import sympy

try:
    import realforms
except ImportError:  # If run locally.
    import sys
    sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))
    import realforms

from realforms import sampling
from realforms.arith import GaussianRational
from realforms.study import p1
from realforms.study.p1 import FiberType, Orbit, ProjPoint4, QForm, SL2C

i = p1.IMAGINARY_UNIT


class TestLorentz(unittest.TestCase):

    def test_identity(self):
        self.assertEqual(p1.lorentz_of(SL2C.identity()), sympy.eye(4))

    def test_rotation(self):
        L = p1.lorentz_of(SL2C(i, 0, 0, -i))
        self.assertEqual(L, sympy.diag(-1, -1, 1, 1))

    def test_boost(self):
        L = p1.lorentz_of([[2, 0], [0, Fraction(1, 2)]])
        self.assertTrue(p1.preserves_q0(L))
        self.assertEqual(L[0, 0], 1)
        self.assertEqual(L[1, 1], 1)

    def test_determinant(self):
        with self.assertRaises(ValueError):
            SL2C(2, 0, 0, 1)
        with self.assertRaises(ValueError):
            p1.lorentz_of([[1, 1], [1, 1]])

    def test_random_pairs(self):
        rng = sampling.generator(2)
        for _ in range(20):
            M, N = sampling.random_sl2c(rng), sampling.random_sl2c(rng)
            L_M, L_N = p1.lorentz_of(M), p1.lorentz_of(N)
            self.assertEqual(p1.lorentz_of(M @ N), L_M * L_N)
            self.assertTrue(p1.preserves_q0(L_M))
            self.assertEqual(L_M.det(), 1)
            self.assertEqual(p1.lorentz_of(-M), L_M)

    def test_report(self):
        report = p1.lorentz_report([['i', 0], [0, '-i']])
        self.assertTrue(report[p1.Columns.PRESERVES_Q0])
        self.assertTrue(report[p1.Columns.DET_ONE])
        self.assertEqual(report[p1.Columns.LORENTZ][0], ['-1', '0', '0', '0'])


class TestOrbits(unittest.TestCase):

    def test_examples(self):
        cases = {
            (1, 0, 0, 0): (Orbit.Z_PLUS, FiberType.P1R),
            (0, 0, 0, 1): (Orbit.Z_MINUS, FiberType.CONIC_C),
            (2, 1, 1, 1): (Orbit.Z_PLUS, FiberType.P1R),
            (0, 0, 1, 2): (Orbit.Z_MINUS, FiberType.CONIC_C),
        }
        for coords, (orbit, fiber) in cases.items():
            point = ProjPoint4(coords)
            with self.subTest(point=str(point)):
                self.assertEqual(p1.orbit_classify(point), orbit)
                self.assertEqual(p1.fiber_form_type(point), fiber)

    def test_on_quadric(self):
        point = ProjPoint4.of(1, 0, 0, 1)
        self.assertEqual(p1.orbit_classify(point), Orbit.ON_QUADRIC)
        with self.assertRaises(ValueError):
            p1.fiber_form_type(point)
        report = p1.process(point)
        self.assertEqual(report[p1.Columns.ORBIT], 'OnQuadric')
        self.assertIsNone(report[p1.Columns.FIBER])

    def test_point(self):
        with self.assertRaises(ValueError):
            ProjPoint4.of(0, 0, 0, 0)
        with self.assertRaises(ValueError):
            ProjPoint4.of(1, 2, 3)
        self.assertTrue(ProjPoint4.of(1, 2, 0, 3).is_same(
            ProjPoint4.of(-2, -4, 0, -6)))
        self.assertEqual(str(ProjPoint4.of(1, Fraction(1, 2), 0, 3)),
                         '[1:1/2:0:3]')

    def test_random_points(self):
        """ Fibre type and orbit agree, and orbits are group invariant. """
        rng = sampling.generator(4)
        for _ in range(500):
            point = sampling.random_point(rng)
            orbit = p1.orbit_classify(point)
            if orbit is Orbit.ON_QUADRIC:
                continue
            fiber = p1.fiber_form_type(point)
            self.assertEqual(fiber is FiberType.P1R, orbit is Orbit.Z_PLUS)
        for _ in range(20):
            point = sampling.random_point(rng)
            L = p1.lorentz_of(sampling.random_sl2c(rng))
            self.assertEqual(p1.orbit_classify(point.transformed(L)),
                             p1.orbit_classify(point))

    def test_batch(self):
        points = [(1, 0, 0, 0), (0, 0, 0, 1), (1, 0, 0, 1)]
        df = realforms.study.process(points, by_module=p1)
        self.assertEqual(list(df[p1.Columns.ORBIT]),
                         ['Z+', 'Z-', 'OnQuadric'])
        self.assertEqual(list(df[p1.Columns.Q0]), ['1', '-1', '0'])


class TestQForm(unittest.TestCase):

    def test_symmetric(self):
        with self.assertRaises(ValueError):
            QForm([[1, 2], [0, 1]])

    def test_diagonalize(self):
        form = QForm([[0, 1], [1, 0]])
        self.assertEqual(form.signature(), (1, 1))
        form = QForm([[0, 0, 1], [0, 0, 0], [1, 0, 0]])
        self.assertEqual(form.signature(), (1, 1))
        self.assertEqual(form.rank(), 2)
        self.assertEqual(QForm.diagonal(2, 3, -1).signature(), (2, 1))

    def test_evaluate(self):
        form = QForm.diagonal(1, 1, 1, -1)
        self.assertEqual(form(1, 2, 3, 4), -2)

    def test_has_real_points(self):
        self.assertFalse(p1.has_real_points(QForm.diagonal(1, 1, 1)))
        self.assertFalse(p1.has_real_points(QForm.diagonal(-1, -2, -3)))
        self.assertTrue(p1.has_real_points(QForm.diagonal(1, -1, 1)))
        self.assertTrue(p1.has_real_points(QForm.diagonal(1, 1, 0)))

    def test_fiber_conic(self):
        self.assertEqual(p1.fiber_conic(ProjPoint4.of(0, 0, 0, 1)),
                         QForm.diagonal(1, 1, 1))
        self.assertEqual(p1.fiber_conic(ProjPoint4.of(1, 0, 0, 0)),
                         QForm.diagonal(1, 1, -1))
        self.assertEqual(
            p1.fiber_conic(ProjPoint4.of(0, 0, 1, 2)),
            QForm([[1, 0, 0], [0, 1, 0], [0, 0, Fraction(3, 4)]]))


class TestRealPoints(unittest.TestCase):

    def test_xi_coordinates(self):
        self.assertEqual(p1.xi_coordinates(SL2C.identity()), (1, 0, 0, 0))
        self.assertEqual(p1.xi_coordinates(SL2C(i, 0, 0, -i)),
                         (0, -1, 0, 0))

    def test_real_point(self):
        self.assertTrue(p1.real_point(SL2C(i, 0, 0, -i)).is_same(
            ProjPoint4.of(0, 1, 0, 0)))
        self.assertTrue(p1.real_point([[0, i], [i, 0]]).is_same(
            ProjPoint4.of(0, 0, 1, 0)))
        self.assertTrue(p1.real_point([[0, 1], [-1, 0]]).is_same(
            ProjPoint4.of(0, 0, 0, 1)))
        with self.assertRaises(ValueError):
            p1.real_point([[1, 1], [0, 1]])
        with self.assertRaises(ValueError):
            p1.real_point([[0, 0], [0, 0]])

    def test_scalar_multiple(self):
        point = p1.real_point([[GaussianRational(1, 1), 0],
                               [0, GaussianRational(1, 1)]])
        self.assertTrue(point.is_same(ProjPoint4.of(1, 0, 0, 0)))

    def test_conic_bundle(self):
        self.assertEqual(p1.conic_bundle_fiber(1, 2), FiberType.CONIC_C)
        self.assertEqual(p1.conic_bundle_fiber(-1, 2), FiberType.P1R)
        self.assertEqual(p1.conic_bundle_fiber(1, Fraction(-1, 3)),
                         FiberType.P1R)
        with self.assertRaises(ValueError):
            p1.conic_bundle_fiber(0, 1)

    def test_circle(self):
        self.assertTrue(p1.circle_has_real_points(4))
        self.assertTrue(p1.circle_has_real_points(0))
        self.assertFalse(p1.circle_has_real_points(-4))


if __name__ == '__main__':
    unittest.main(exit=False)
