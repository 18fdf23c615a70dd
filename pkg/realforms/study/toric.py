"""
Equivariant toric model of :math:`Y_n` and its minimal resolution.

The lattice involution :math:`\\gamma(a, b) = (b, a)` is induced by complex
conjugation. Rays are kept in counterclockwise order and carry labels, so
that :math:`\\gamma` can be checked on labels as well as on vectors.

Resolution runs in two steps. First the rays :math:`(1, 0)` and
:math:`(0, 1)` are inserted into the central cone. Then the two remaining
:math:`A_{n-1}` cones are resolved by Hirzebruch-Jung continued fractions.
The result is the chain

| :math:`(L'_x, -1) - (E_{n-1,x}, -2) - \\dots - (E_{0,x}, -2) -
    (E_{0,y}, -2) - \\dots - (L'_y, -1)`.
"""


import enum
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import pandas as pd
try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

from realforms.utility import _ColumnsBase


logger = logging.getLogger(__name__)

_SWAP = str.maketrans('xy', 'yx')


def _mirror(label: str) -> str:
    """ Label of the :math:`\\gamma`-image. Cone labels ``u|v`` reverse. """
    parts = label.split('|')
    return '|'.join(part.translate(_SWAP) for part in reversed(parts))


@dataclass(frozen=True)
class LatticeVec:
    """ Element :math:`(a, b)` of the rank 2 lattice. """
    a: int
    b: int

    def det(self, other: 'LatticeVec') -> int:
        return self.a * other.b - self.b * other.a

    def gamma(self) -> 'LatticeVec':
        return LatticeVec(self.b, self.a)

    def is_primitive(self) -> bool:
        return math.gcd(self.a, self.b) == 1

    def dot(self, other: 'LatticeVec') -> int:
        return self.a * other.a + self.b * other.b

    def __add__(self, other):
        return LatticeVec(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return LatticeVec(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return LatticeVec(-self.a, -self.b)

    def __rmul__(self, k: int):
        return LatticeVec(k * self.a, k * self.b)

    def to_list(self) -> List[int]:
        return [self.a, self.b]

    def __str__(self):
        return '({}, {})'.format(self.a, self.b)


@dataclass(frozen=True)
class Cone2:
    """ Strictly convex cone :math:`\\langle u, v \\rangle` with
    :math:`\\det(u, v) > 0`.

    :raises ValueError: If a generator is not primitive or the pair is
        not positively oriented
    """
    u: LatticeVec
    v: LatticeVec

    def __post_init__(self):
        if not (self.u.is_primitive() and self.v.is_primitive()):
            raise ValueError('Cone generators must be primitive.')
        if self.u.det(self.v) <= 0:
            raise ValueError('Cone generators must satisfy det(u, v) > 0.')

    @property
    def index(self) -> int:
        return self.u.det(self.v)

    def is_smooth(self) -> bool:
        return self.index == 1

    def gamma(self) -> 'Cone2':
        # The involution reverses orientation.
        return Cone2(self.v.gamma(), self.u.gamma())

    def __str__(self):
        return '<{}, {}>'.format(self.u, self.v)


@dataclass(frozen=True)
class EquivFan:
    """ Two-dimensional fan with counterclockwise rays and labels.

    Non-complete fans keep the boundary rays :math:`(1, -1)` and
    :math:`(-1, 1)` as first and last ray.
    """
    rays: Tuple[LatticeVec, ...]
    ray_labels: Tuple[str, ...]
    cones: Tuple[Cone2, ...]
    cone_labels: Tuple[str, ...]

    def __post_init__(self):
        if len(self.rays) != len(self.ray_labels):
            raise ValueError('Every ray needs a label.')
        if len(self.cones) != len(self.cone_labels):
            raise ValueError('Every cone needs a label.')

    def gamma(self) -> 'EquivFan':
        """ Image under :math:`\\gamma`, again in counterclockwise order. """
        return EquivFan(
            tuple(ray.gamma() for ray in reversed(self.rays)),
            tuple(_mirror(label) for label in reversed(self.ray_labels)),
            tuple(cone.gamma() for cone in reversed(self.cones)),
            tuple(_mirror(label) for label in reversed(self.cone_labels)))

    def is_gamma_stable(self) -> bool:
        """ Rays, cones and their labels are mapped onto themselves. """
        return self.gamma() == self

    def ray(self, label: str) -> LatticeVec:
        return self.rays[self.ray_labels.index(label)]

    def cone(self, label: str) -> Cone2:
        return self.cones[self.cone_labels.index(label)]

    def is_smooth(self) -> bool:
        return all(cone.is_smooth() for cone in self.cones)


def _check_index(n: int):
    if n < 0:
        raise ValueError('Surface index must be nonnegative.')


def yn_fan(n: int) -> EquivFan:
    """ Fan of :math:`Y_n` with cones :math:`C_y, C_0, C_x`.

    :param int n: Surface index
    :raises ValueError: For negative :attr:`n`
    :rtype: EquivFan
    """
    _check_index(n)
    b_y, l_y = LatticeVec(1, -1), LatticeVec(n + 1, -n)
    l_x, b_x = LatticeVec(-n, n + 1), LatticeVec(-1, 1)
    return EquivFan(
        rays=(b_y, l_y, l_x, b_x),
        ray_labels=('B_y', 'L_y', 'L_x', 'B_x'),
        cones=(Cone2(b_y, l_y), Cone2(l_y, l_x), Cone2(l_x, b_x)),
        cone_labels=('C_y', 'C_0', 'C_x'))


class Kind(enum.Enum):
    SMOOTH = 'smooth'
    A = 'A'
    CYCLIC = 'cyclic'


@dataclass(frozen=True)
class ConeType:
    """ Singularity of a cone with normal form
    :math:`\\langle (0, 1), (d, -k) \\rangle`. """
    kind: Kind
    index: int
    k: int

    def __str__(self):
        if self.kind is Kind.SMOOTH:
            return 'smooth'
        if self.kind is Kind.A:
            return 'A_{}'.format(self.index - 1)
        return 'cyclic(d={}, k={})'.format(self.index, self.k)


def hj_normal_form(cone: Cone2) -> Tuple[Tuple[LatticeVec, LatticeVec],
                                         int, int]:
    """ Unimodular transform :math:`T` with :math:`Tu = (0, 1)` and
    :math:`Tv = (d, -k)`, :math:`0 \\le k < d`.

    :return: Rows of :math:`T`, index :math:`d` and :math:`k`
    :rtype: tuple
    """
    p, q = cone.u.a, cone.u.b
    row1 = LatticeVec(-q, p)
    x, y, _ = igcdex(p, q)
    row2 = LatticeVec(int(x), int(y))
    d = row1.dot(cone.v)
    second = row2.dot(cone.v)
    # Shift into (-d, 0]; this fixes row2 uniquely.
    shift = -((second + d - 1) // d)
    row2 = row2 + shift * row1
    k = -row2.dot(cone.v)
    return (row1, row2), d, k


def _apply_inverse(rows: Tuple[LatticeVec, LatticeVec],
                   w: LatticeVec) -> LatticeVec:
    top, bottom = rows
    # det T = -1
    return LatticeVec(-bottom.b * w.a + top.b * w.b,
                      bottom.a * w.a - top.a * w.b)


def cone_type(cone: Cone2) -> ConeType:
    """ Smooth, :math:`A_{d-1}`, or a general cyclic quotient.

    :rtype: ConeType
    """
    _, d, k = hj_normal_form(cone)
    if d == 1:
        return ConeType(Kind.SMOOTH, 1, 0)
    if k == d - 1:
        return ConeType(Kind.A, d, k)
    return ConeType(Kind.CYCLIC, d, k)


def hj_fraction(d: int, k: int) -> List[int]:
    """ Entries :math:`a_i \\ge 2` of
    :math:`d/k = a_1 - 1/(a_2 - 1/(\\dots))`. Empty for :math:`k = 0`. """
    entries = []
    x, y = d, k
    while y:
        a = -(-x // y)
        entries.append(a)
        x, y = y, a * y - x
    return entries


def hj_resolve(cone: Cone2) -> List[LatticeVec]:
    """ Rays of the minimal resolution of :attr:`cone`, from :math:`u`
    towards :math:`v`.

    :return: Inserted primitive rays, empty for a smooth cone
    :rtype: list[LatticeVec]
    """
    rows, d, k = hj_normal_form(cone)
    previous, current = LatticeVec(0, 1), LatticeVec(1, 0)
    inserted = []
    for a in hj_fraction(d, k):
        inserted.append(current)
        previous, current = current, a * current - previous
    if _apply_inverse(rows, current) != cone.v:
        raise ArithmeticError('Resolution of {} does not close up.'
                              .format(cone))
    return [_apply_inverse(rows, ray) for ray in inserted]


def subdivide_step1(fan: EquivFan) -> EquivFan:
    """ Insert :math:`(1, 0)` and :math:`(0, 1)` into :math:`C_0`.

    :param fan: Output of :func:`yn_fan`
    :raises ValueError: For any other fan, and for :math:`n = 0` where
        :math:`C_0` is already smooth
    :rtype: EquivFan
    """
    n = -fan.rays[1].b if len(fan.rays) == 4 else -1
    if n < 0 or fan != yn_fan(n):
        raise ValueError('Only the fan of Y_n can be subdivided.')
    if n == 0:
        raise ValueError('The fan of Y_0 is already smooth.')
    b_y, l_y, l_x, b_x = fan.rays
    e_y, e_x = LatticeVec(1, 0), LatticeVec(0, 1)
    return EquivFan(
        rays=(b_y, l_y, e_y, e_x, l_x, b_x),
        ray_labels=('B_y', "L'_y", 'E_0,y', 'E_0,x', "L'_x", 'B_x'),
        cones=(Cone2(b_y, l_y), Cone2(l_y, e_y), Cone2(e_y, e_x),
               Cone2(e_x, l_x), Cone2(l_x, b_x)),
        cone_labels=('C_y', 'C_1y', 'C_10', 'C_1x', 'C_x'))


def _resolved_fan(rays: Sequence[LatticeVec],
                  labels: Sequence[str]) -> EquivFan:
    pairs = list(zip(rays, rays[1:]))
    names = list(zip(labels, labels[1:]))
    return EquivFan(tuple(rays), tuple(labels),
                    tuple(Cone2(u, v) for u, v in pairs),
                    tuple('{}|{}'.format(a, b) for a, b in names))


@dataclass(frozen=True)
class Resolution:
    """ Resolved fan and its chain from :math:`L'_x` to :math:`L'_y`. """
    n: int
    fan: EquivFan

    @property
    def chain(self) -> Tuple[LatticeVec, ...]:
        return tuple(reversed(self.fan.rays[1:-1]))

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(reversed(self.fan.ray_labels[1:-1]))

    @property
    def flanked(self) -> Tuple[LatticeVec, ...]:
        """ Chain with the boundary rays :math:`(-1, 1)` and
        :math:`(1, -1)` at its ends. """
        return tuple(reversed(self.fan.rays))


def full_resolution(n: int) -> Resolution:
    """ Minimal equivariant resolution of :math:`Y_n`.

    For :math:`n = 0` the fan is already smooth and the chain is
    :math:`L'_x, L'_y` without exceptional curves.

    :param int n: Surface index
    :rtype: Resolution
    """
    _check_index(n)
    if n == 0:
        fan = yn_fan(0)
        labels = ('B_y', "L'_y", "L'_x", 'B_x')
        return Resolution(0, _resolved_fan(fan.rays, labels))

    step1 = subdivide_step1(yn_fan(n))
    x_side = hj_resolve(step1.cone('C_1x'))
    y_side = hj_resolve(step1.cone('C_1y'))
    rays = ([step1.ray('B_y'), step1.ray("L'_y")] + y_side
            + [step1.ray('E_0,y'), step1.ray('E_0,x')] + x_side
            + [step1.ray("L'_x"), step1.ray('B_x')])
    # Exceptional indices count down from L' to the centre.
    labels = (['B_y', "L'_y"]
              + ['E_{},y'.format(n - 1 - i) for i in range(len(y_side))]
              + ['E_0,y', 'E_0,x']
              + ['E_{},x'.format(i + 1) for i in range(len(x_side))]
              + ["L'_x", 'B_x'])
    resolution = Resolution(n, _resolved_fan(rays, labels))
    logger.debug('Resolved Y_%d with %d exceptional rays.',
                 n, len(rays) - 4)
    return resolution


def self_intersections(chain: Sequence[LatticeVec],
                       closed: bool = False) -> List[int]:
    """ Self-intersections :math:`D_i^2 = -k` from
    :math:`u_{i-1} + u_{i+1} = k u_i`.

    :param chain: Consecutive rays of a smooth fan
    :type chain: list[LatticeVec]
    :param closed: Treat :attr:`chain` as a complete fan, so that every
        ray has two neighbours. Otherwise the first and last ray only
        serve as neighbours, defaults to False
    :type closed: bool, optional
    :raises ValueError: For a malformed chain
    :rtype: list[int]
    """
    chain = list(chain)
    if closed:
        triples = [(chain[i - 1], chain[i], chain[(i + 1) % len(chain)])
                   for i in range(len(chain))]
    else:
        triples = list(zip(chain, chain[1:], chain[2:]))
    values = []
    for previous, ray, following in triples:
        if abs(previous.det(ray)) != 1 or abs(ray.det(following)) != 1:
            raise ValueError('Neighbours of {} are not unimodular.'
                             .format(ray))
        total = previous + following
        if total.det(ray) != 0:
            raise ValueError('Neighbour sum is not a multiple of {}.'
                             .format(ray))
        k = total.a // ray.a if ray.a else total.b // ray.b
        values.append(-k)
    return values


def expected_pattern(n: int) -> List[int]:
    return [-1] + [-2] * (2 * n) + [-1]


def verify_chain(n: int) -> pd.Series:
    """ Check the resolved chain of :math:`Y_n`.

    :param int n: Surface index
    :return: Pass/fail of chain length, self-intersection pattern,
        smoothness and :math:`\\gamma`-exchange of the labels
    :rtype: pandas.Series
    """
    resolution = full_resolution(n)
    fan, labels = resolution.fan, resolution.labels
    exchanged = all(
        fan.ray(label).gamma() == fan.ray(_mirror(label))
        for label in labels)
    checks = {
        Columns.LENGTH_OK: len(resolution.chain) == 2 * n + 2,
        Columns.PATTERN_OK: (self_intersections(resolution.flanked)
                             == expected_pattern(n)),
        Columns.UNIMODULAR: fan.is_smooth(),
        Columns.GAMMA_STABLE: fan.is_gamma_stable() and exchanged,
    }
    report = pd.Series(checks, name=n)
    if not report.all():
        logger.warning('Chain check failed for n=%d: %s', n,
                       list(report.index[~report]))
    return report


def singularity(n: int) -> ConeType:
    """ Type of the central cone :math:`C_0` of :math:`Y_n`. """
    return cone_type(yn_fan(n).cone('C_0'))


def process(data: Optional[int]):
    """ Bundle method.

    Supplying `None` for :attr:`data` returns the value types of the
    columns instead.

    :param data: Surface index. If None, return types instead
    :type data: int or None
    :return: Resolution report listed in :meth:`Columns.process` or types
    :rtype: pandas.Series
    """
    if data is None:
        from realforms.study import TYPES
        return pd.Series(
            data=('list(list(int))', 'list(str)', 'list(int)', 'str',
                  'int', 'bool'),
            index=Columns.process(), name=TYPES)

    n = data
    resolution = full_resolution(n)
    checks = verify_chain(n)
    values = (
        [ray.to_list() for ray in resolution.chain],
        list(resolution.labels),
        self_intersections(resolution.flanked),
        str(singularity(n)),
        yn_fan(n).cone('C_0').index,
        bool(checks.all()),
    )
    return pd.Series(data=values, index=Columns.process(), name=n)


class Columns(_ColumnsBase):
    """ Bases: :class:`realforms.utility._ColumnsBase`

    Column names.
    """
    RAYS = 'rays'
    LABELS = 'labels'
    SELF_INTERSECTIONS = 'self_intersections'
    SINGULARITY = 'singularity'
    INDEX = 'index'
    VERIFIED = 'verified'
    LENGTH_OK = 'length_ok'
    PATTERN_OK = 'pattern_ok'
    UNIMODULAR = 'unimodular'
    GAMMA_STABLE = 'gamma_stable'

    @classmethod
    def process(cls):
        """ Get the current values of the :func:`process` output column names.

        :rtype: list(str)
        """
        return [cls.RAYS, cls.LABELS, cls.SELF_INTERSECTIONS,
                cls.SINGULARITY, cls.INDEX, cls.VERIFIED]
