"""
Testing of :mod:`realforms.study.toric`.
"""


import os
import unittest

try:
    import realforms
except ImportError:  # If run locally.
    import sys
    sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))
    import realforms

from realforms.study import toric
from realforms.study.toric import Cone2, LatticeVec


def vec(a, b):
    return LatticeVec(a, b)


class TestCones(unittest.TestCase):

    def test_side_cones(self):
        for n in range(2, 7):
            cone = Cone2(vec(0, 1), vec(-n, n + 1))
            kind = toric.cone_type(cone)
            self.assertEqual((kind.kind, kind.index), (toric.Kind.A, n))
            self.assertEqual(toric.hj_resolve(cone),
                             [vec(-j, j + 1) for j in range(1, n)])
        self.assertEqual(toric.cone_type(Cone2(vec(1, 0), vec(0, 1))).kind,
                         toric.Kind.SMOOTH)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            Cone2(vec(0, 1), vec(1, 0))  # clockwise
        with self.assertRaises(ValueError):
            Cone2(vec(2, 0), vec(0, 1))

    def test_gamma_reverses(self):
        cone = Cone2(vec(1, -1), vec(2, -1))
        image = cone.gamma()
        self.assertEqual(image, Cone2(vec(-1, 2), vec(-1, 1)))
        self.assertEqual(image.gamma(), cone)
        self.assertEqual(image.index, cone.index)

    def test_normal_form(self):
        cone = Cone2(vec(0, 1), vec(-2, 3))
        rows, d, k = toric.hj_normal_form(cone)
        top, bottom = rows
        self.assertEqual((d, k), (2, 1))
        self.assertEqual((top.dot(cone.u), bottom.dot(cone.u)), (0, 1))
        self.assertEqual((top.dot(cone.v), bottom.dot(cone.v)), (d, -k))
        self.assertEqual(top.a * bottom.b - top.b * bottom.a, -1)

    def test_resolve(self):
        self.assertEqual(toric.hj_resolve(Cone2(vec(0, 1), vec(-2, 3))),
                         [vec(-1, 2)])
        self.assertEqual(toric.hj_resolve(Cone2(vec(1, 0), vec(0, 1))), [])

    def test_resolve_cyclic(self):
        """ The cone of type 1/5(1, 2) needs the rays of 5/2 = [3, 2]. """
        cone = Cone2(vec(1, 0), vec(-2, 5))
        self.assertEqual(toric.hj_fraction(5, 2), [3, 2])
        self.assertEqual(toric.cone_type(cone).kind, toric.Kind.CYCLIC)
        rays = toric.hj_resolve(cone)
        self.assertEqual(len(rays), 2)
        chain = [cone.u] + rays + [cone.v]
        for u, v in zip(chain, chain[1:]):
            self.assertEqual(u.det(v), 1)
        self.assertEqual(toric.self_intersections(chain), [-3, -2])

    def test_hj_fraction(self):
        self.assertEqual(toric.hj_fraction(5, 4), [2, 2, 2, 2])
        self.assertEqual(toric.hj_fraction(7, 3), [3, 2, 2])
        self.assertEqual(toric.hj_fraction(1, 0), [])

    def test_cone_type_str(self):
        for n in range(1, 6):
            kind = toric.singularity(n)
            self.assertEqual(kind.kind, toric.Kind.A)
            self.assertEqual(kind.index, 2 * n + 1)
            self.assertEqual(str(kind), 'A_{}'.format(2 * n))
        self.assertEqual(str(toric.singularity(0)), 'smooth')


class TestSelfIntersections(unittest.TestCase):

    def test_projective_plane(self):
        rays = [vec(1, 0), vec(0, 1), vec(-1, -1)]
        self.assertEqual(toric.self_intersections(rays, closed=True),
                         [1, 1, 1])

    def test_hirzebruch(self):
        rays = [vec(1, 0), vec(0, 1), vec(-1, 2), vec(0, -1)]
        self.assertEqual(toric.self_intersections(rays, closed=True),
                         [0, -2, 0, 2])

    def test_malformed(self):
        with self.assertRaises(ValueError):
            toric.self_intersections([vec(1, 0), vec(1, 2), vec(0, 1)])


class TestFan(unittest.TestCase):

    def test_yn_fan(self):
        fan = toric.yn_fan(2)
        self.assertEqual(fan.ray('L_y'), vec(3, -2))
        self.assertEqual(fan.ray('L_x'), vec(-2, 3))
        self.assertEqual(fan.cone('C_0').index, 5)
        self.assertTrue(fan.cone('C_y').is_smooth())
        self.assertTrue(fan.is_gamma_stable())
        with self.assertRaises(ValueError):
            toric.yn_fan(-1)

    def test_subdivide(self):
        fan = toric.subdivide_step1(toric.yn_fan(3))
        self.assertEqual(fan.ray('E_0,y'), vec(1, 0))
        self.assertEqual(fan.ray('E_0,x'), vec(0, 1))
        self.assertTrue(fan.cone('C_10').is_smooth())
        self.assertEqual(fan.cone('C_1y').index, 3)
        self.assertTrue(fan.is_gamma_stable())

    def test_subdivide_small(self):
        self.assertTrue(toric.subdivide_step1(toric.yn_fan(1)).is_smooth())
        fan = toric.subdivide_step1(toric.yn_fan(2))
        self.assertEqual(fan.cone("C_1x").index, 2)
        self.assertEqual(fan.cone("C_1y").index, 2)

    def test_subdivide_errors(self):
        with self.assertRaises(ValueError):
            toric.subdivide_step1(toric.yn_fan(0))
        with self.assertRaises(ValueError):
            toric.subdivide_step1(toric.subdivide_step1(toric.yn_fan(1)))


class TestResolution(unittest.TestCase):

    def test_n0(self):
        resolution = toric.full_resolution(0)
        self.assertEqual(resolution.chain, (vec(0, 1), vec(1, 0)))
        self.assertEqual(resolution.labels, ("L'_x", "L'_y"))
        self.assertEqual(toric.self_intersections(resolution.flanked),
                         [-1, -1])

    def test_n1(self):
        resolution = toric.full_resolution(1)
        self.assertEqual(resolution.chain,
                         (vec(-1, 2), vec(0, 1), vec(1, 0), vec(2, -1)))
        self.assertEqual(resolution.labels,
                         ("L'_x", 'E_0,x', 'E_0,y', "L'_y"))

    def test_n2(self):
        resolution = toric.full_resolution(2)
        self.assertEqual(
            resolution.chain,
            (vec(-2, 3), vec(-1, 2), vec(0, 1), vec(1, 0), vec(2, -1),
             vec(3, -2)))
        self.assertEqual(
            resolution.labels,
            ("L'_x", 'E_1,x', 'E_0,x', 'E_0,y', 'E_1,y', "L'_y"))
        self.assertEqual(toric.self_intersections(resolution.flanked),
                         [-1, -2, -2, -2, -2, -1])

    def test_labels_count_down(self):
        labels = toric.full_resolution(3).labels
        self.assertEqual(labels[1:3], ('E_2,x', 'E_1,x'))
        self.assertEqual(labels[-3:-1], ('E_1,y', 'E_2,y'))

    def test_chain_lengths(self):
        for n in (1, 5, 50):
            self.assertEqual(len(toric.full_resolution(n).chain), 2 * n + 2)

    def test_verify_chain(self):
        for n in range(51):
            with self.subTest(n=n):
                self.assertTrue(toric.verify_chain(n).all())

    def test_process(self):
        report = toric.process(2)
        self.assertEqual(report[toric.Columns.SINGULARITY], 'A_4')
        self.assertEqual(report[toric.Columns.INDEX], 5)
        self.assertEqual(report[toric.Columns.SELF_INTERSECTIONS],
                         [-1, -2, -2, -2, -2, -1])
        self.assertTrue(report[toric.Columns.VERIFIED])

    def test_batch(self):
        df = realforms.study.process(range(4), by_module=toric)
        self.assertEqual(list(df[toric.Columns.INDEX]), [1, 3, 5, 7])
        self.assertTrue(df[toric.Columns.VERIFIED].all())


if __name__ == '__main__':
    unittest.main(exit=False)
