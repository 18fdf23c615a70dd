"""
Parametric family of real structures on :math:`Y_n`.

| :math:`Y_n = \\{xy - t^{2n+1} z^2 = 0\\}` over the punctured line.
| With :math:`P = \\sum_{i=0}^m a_i t^i` and :math:`h = tP^2` the family
    matrices are

.. math::

    M = \\begin{pmatrix} 1 - h & tPh^n \\\\ -Ph^n & \\sum_{j=0}^{2n} h^j
    \\end{pmatrix}, \\qquad
    A = \\begin{pmatrix} \\sum_{j=0}^{n} h^j & -tP \\\\
    -P\\sum_{j=0}^{n-1} h^j & 1 \\end{pmatrix}.

Every fibre :math:`(M(s), 1)` is a cocycle, i.e. a real structure on
:math:`Y_n`, and :math:`N(A(s))` describes how the fibre meets the
singular fibre over :math:`t = 0`.
"""


import enum
import functools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import pandas as pd
import sympy

from realforms.arith import (LaurentPoly, OddRoot, ParamPoly, parse_rational,
                             reciprocal, scalar)
from realforms.groups import (LMat2, LMat3, ProjElem2, SemidirectElem, in_G0n,
                              j_matrix, proj_eq)
from realforms.utility import _ColumnsBase, get_name, row_echelon


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FamilySpec:
    """ Surface index :math:`n` and parameter count :math:`m + 1`.

    :raises ValueError: If either is negative
    """
    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError('Family indices must be nonnegative.')

    @property
    def nparams(self) -> int:
        return self.m + 1

    @property
    def name(self) -> str:
        return 'n={} m={}'.format(self.n, self.m)


@dataclass(frozen=True)
class FiberPoint:
    """ Real rational point :math:`s = (s_0, \\ldots, s_m)` of the base. """
    s: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, 's', tuple(parse_rational(value) for value in self.s))

    def __len__(self):
        return len(self.s)

    def __iter__(self):
        return iter(self.s)

    def __getitem__(self, index):
        return self.s[index]


def _as_point(spec: FamilySpec, s) -> FiberPoint:
    point = s if isinstance(s, FiberPoint) else FiberPoint(tuple(s))
    if len(point) != spec.nparams:
        raise ValueError('Expected {} coordinates, got {}.'
                         .format(spec.nparams, len(point)))
    return point


@dataclass(frozen=True)
class SurfaceEq:
    """ The quadric :math:`q = xy - t^{2n+1} z^2`.

    A quadratic form in :math:`(x, y, z)` is a mapping from index pairs
    :math:`i \\le j` to the Laurent coefficient of :math:`X_i X_j`.
    """
    n: int

    def weight(self, nparams: Optional[int] = None) -> LaurentPoly:
        """ :math:`t^{2n+1}`. """
        return LaurentPoly.monomial(2 * self.n + 1, 1, nparams)

    def coefficients(self, nparams: Optional[int] = None) -> dict:
        zero = LaurentPoly.constant(0, nparams)
        form = {(i, j): zero for i in range(3) for j in range(i, 3)}
        form[(0, 1)] = LaurentPoly.constant(1, nparams)
        form[(2, 2)] = -self.weight(nparams)
        return form

    def pullback(self, matrix: LMat3) -> dict:
        """ Coefficients of :math:`q(N \\cdot (x, y, z))`. """
        rows = matrix.rows
        weight = self.weight(matrix.nparams)
        form = {}
        for i in range(3):
            for j in range(i, 3):
                xy = rows[0][i] * rows[1][j]
                zz = rows[2][i] * rows[2][j]
                if i != j:
                    xy = xy + rows[0][j] * rows[1][i]
                    zz = zz * 2
                form[(i, j)] = xy - weight * zz
        return form

    def evaluate(self, x, y, z, t):
        return x * y - t ** (2 * self.n + 1) * z * z


def build_P_h(spec: FamilySpec) -> Tuple[LaurentPoly, LaurentPoly]:
    """ :math:`P = \\sum_{i=0}^m a_i t^i` and :math:`h = tP^2`.

    :rtype: tuple(LaurentPoly, LaurentPoly)
    """
    nparams = spec.nparams
    P = LaurentPoly({i: ParamPoly.variable(i, nparams)
                     for i in range(nparams)}, nparams)
    return P, _h(P)


def _h(P: LaurentPoly) -> LaurentPoly:
    return LaurentPoly.t(P.nparams) * P * P


def _family_matrices(P: LaurentPoly, n: int) -> Tuple[LMat2, LMat2]:
    nparams = P.nparams
    zero = LaurentPoly.constant(0, nparams)
    t = LaurentPoly.t(nparams)
    h = _h(P)
    powers = [LaurentPoly.constant(1, nparams)]
    for _ in range(2 * n):
        powers.append(powers[-1] * h)
    ph_n = P * powers[n]
    M = LMat2([[1 - h, t * ph_n],
               [-ph_n, sum(powers[:2 * n + 1], zero)]], nparams)
    A = LMat2([[sum(powers[:n + 1], zero), -(t * P)],
               [-(P * sum(powers[:n], zero)), 1]], nparams)
    return M, A


@functools.lru_cache(maxsize=32)
def family_matrices(spec: FamilySpec) -> Tuple[LMat2, LMat2]:
    """ Raw parametric representatives :math:`(M, A)` over
    :math:`R[t]`.

    :rtype: tuple(LMat2, LMat2)
    """
    P, _ = build_P_h(spec)
    logger.debug('Building family matrices for %s.', spec.name)
    return _family_matrices(P, spec.n)


def fiber_matrices(spec: FamilySpec, s) -> Tuple[LMat2, LMat2]:
    """ Numeric :math:`(M(s), A(s))` built directly from :math:`P(s)`.

    :raises ValueError: On dimension mismatch
    """
    point = _as_point(spec, s)
    P = LaurentPoly(dict(enumerate(point)))
    return _family_matrices(P, spec.n)


def build_M(spec: FamilySpec) -> ProjElem2:
    """
    :return: Class of :math:`M`, determinant one and in :math:`G^0_n`
    :rtype: ProjElem2
    """
    return ProjElem2(family_matrices(spec)[0])


def build_A(spec: FamilySpec) -> ProjElem2:
    return ProjElem2(family_matrices(spec)[1])


def verify_identities(spec: FamilySpec, mutate: bool = False) -> pd.Series:
    """ Check the family identities over :math:`R[t]`.

    | ``M_J_M``: :math:`MJM = J` exactly.
    | ``A_M``: :math:`JAJ = t \\cdot AM` exactly.
    | ``A_M_projective``: :math:`AM` and :math:`JAJ` agree in
        :math:`PGL_2`.

    :param spec: Family
    :type spec: FamilySpec
    :param mutate: Flip the sign of the upper-right entry of :math:`M`
        first (negative control), defaults to False
    :type mutate: bool, optional
    :return: Pass/fail per identity
    :rtype: pandas.Series
    """
    M, A = family_matrices(spec)
    if mutate:
        M = LMat2([[M.a, -M.b], [M.c, M.d]])
    J = j_matrix(spec.nparams)
    t = LaurentPoly.t(spec.nparams)
    AM = A @ M
    JAJ = J @ A @ J
    report = pd.Series(
        data=(M @ J @ M == J, JAJ == AM.scale(t), proj_eq(AM, JAJ)),
        index=[Columns.M_J_M, Columns.A_M, Columns.A_M_PROJECTIVE],
        name=spec.name)
    if not report.all():
        logger.warning('Family identities fail for %s: %s', spec.name,
                       list(report.index[~report]))
    return report


def embed_N(g, n: int) -> LMat3:
    """ The matrix :math:`N(M)` acting on :math:`(x, y, z)`.

    Rows :math:`(a^2, b^2 t^{-1}, 2ab t^n)`,
    :math:`(c^2 t, d^2, 2cd t^{n+1})` and
    :math:`(ac t^{-n}, bd t^{-(n+1)}, ad + bc)`.

    :param g: Class or representative
    :type g: ProjElem2 or LMat2
    :param int n: Surface index
    :rtype: LMat3
    """
    rep = g.rep if isinstance(g, ProjElem2) else g
    a, b, c, d = rep
    return LMat3([
        [a * a, (b * b).shift(-1), (a * b).shift(n) * 2],
        [(c * c).shift(1), d * d, (c * d).shift(n + 1) * 2],
        [(a * c).shift(-n), (b * d).shift(-(n + 1)), a * d + b * c],
    ], rep.nparams)


def yn_multiplier(matrix: LMat3, n: int) -> Optional[LaurentPoly]:
    """ Unit :math:`u` with :math:`q \\circ N = u \\cdot q`, found by
    coefficient comparison; None if there is none. """
    surface = SurfaceEq(n)
    form = surface.pullback(matrix)
    u = form[(0, 1)]
    if not u.is_unit():
        return None
    if any(form[key] for key in form if key not in ((0, 1), (2, 2))):
        return None
    if form[(2, 2)] != -(surface.weight(matrix.nparams) * u):
        return None
    return u


def preserves_Yn(matrix: LMat3, n: int) -> bool:
    return yn_multiplier(matrix, n) is not None


def torus_and_trivialization_check(n: int,
                                   z_weight: int = None) -> pd.Series:
    """ Symbolic check of the torus action and the trivialization.

    | Torus: :math:`(\\lambda\\mu t, [\\lambda x : \\mu y :
        (\\lambda\\mu)^{-n} z])` multiplies :math:`q` by
        :math:`\\lambda\\mu`.
    | Trivialization: :math:`(t, [w_0^2 : t w_1^2 : t^{-n} w_0 w_1])`
        lies on :math:`Y_n`.

    :param int n: Surface index
    :param z_weight: Exponent of :math:`\\lambda\\mu` on :math:`z`,
        defaults to :math:`-n` (other values are negative controls)
    :type z_weight: int, optional
    :rtype: pandas.Series
    """
    lam, mu, t, x, y, z, w0, w1 = sympy.symbols('lambda mu t x y z w0 w1')
    weight = -n if z_weight is None else z_weight
    surface = SurfaceEq(n)
    q = surface.evaluate(x, y, z, t)
    torus = surface.evaluate(lam * x, mu * y, (lam * mu) ** weight * z,
                             lam * mu * t)
    image = surface.evaluate(w0 ** 2, t * w1 ** 2, t ** -n * w0 * w1, t)
    return pd.Series(
        data=(sympy.expand(torus - lam * mu * q) == 0,
              sympy.expand(image) == 0),
        index=[Columns.TORUS_ACTION, Columns.TRIVIALIZATION],
        name='n={}'.format(n))


class Restriction(enum.Enum):
    """ Behaviour of an automorphism at :math:`t = 0`. """
    AUTOMORPHISM = 'automorphism'
    CONTRACTION = 'contraction'
    RANK2 = 'rank2'


@dataclass(frozen=True)
class T0Restriction:
    """ Result of :func:`restrict_t0`.

    :attr:`image` is the projective image point for contractions.
    """
    kind: Restriction
    rank: int
    matrix: tuple
    image: Optional[tuple] = None


def restrict_t0(matrix: LMat3) -> T0Restriction:
    """ Evaluate :math:`t^k N` at :math:`t = 0`.

    The power :math:`t^k` is the unique one putting :math:`N` into
    :math:`Mat_3(\\mathbb{C}[t]) \\setminus Mat_3(t\\mathbb{C}[t])`.

    :param matrix: Numeric invertible matrix
    :type matrix: LMat3
    :raises ValueError: For parametric input
    :rtype: T0Restriction
    """
    if matrix.nparams is not None:
        raise ValueError('Restriction at t = 0 needs a numeric matrix.')
    constant = matrix.shift(-matrix.min_ord()).at_zero()
    _, pivots = row_echelon(constant)
    rank = len(pivots)
    if rank == 3:
        return T0Restriction(Restriction.AUTOMORPHISM, rank, constant)
    if rank == 1:
        column = next(col for col in zip(*constant) if any(col))
        inverse = reciprocal(next(x for x in column if x))
        image = tuple(scalar(x * inverse) for x in column)
        return T0Restriction(Restriction.CONTRACTION, rank, constant, image)
    logger.info('Rank %d restriction at t = 0.', rank)
    return T0Restriction(Restriction.RANK2, rank, constant)


def fiber_element(spec: FamilySpec, s) -> SemidirectElem:
    """ The cocycle :math:`(M(s), 1)`.

    :raises ValueError: On dimension mismatch
    """
    M, _ = fiber_matrices(spec, s)
    return SemidirectElem(ProjElem2(M), 1)


def is_on_Xn(n: int, u, v, t, w) -> bool:
    """ Exact test of :math:`u^2 + v^2 - t^{2n+1} w^2 = 0`.

    :param t: Base coordinate, possibly an exact odd root
    :type t: fractions.Fraction or OddRoot
    :raises ValueError: If :math:`(u, v, w)` is zero
    """
    u, v, w = (parse_rational(x) for x in (u, v, w))
    if not (u or v or w):
        raise ValueError('Projective coordinates must not all vanish.')
    degree = 2 * n + 1
    t_power = (t.power(degree) if isinstance(t, OddRoot)
               else parse_rational(t) ** degree)
    return u * u + v * v - t_power * w * w == 0


def real_locus_point(n: int, x1, x2) -> Tuple[OddRoot, tuple]:
    """ Image :math:`(\\sqrt[2n+1]{x_1^2 + x_2^2}, [x_1 : x_2 : 1])` of a
    plane point in the real locus of :math:`X_n`.

    :rtype: tuple(OddRoot, tuple)
    """
    x1, x2 = parse_rational(x1), parse_rational(x2)
    t = OddRoot(x1 * x1 + x2 * x2, 2 * n + 1)
    return t, (x1, x2, Fraction(1))


def process(data, check_surface: bool = True):
    """ Bundle method.

    Runs every check of the family over :math:`R[t]`. Supplying `None`
    for :attr:`data` returns the value types of the columns instead.

    :param data: Family to check. If None, return types instead
    :type data: FamilySpec or None
    :param check_surface: Include :func:`preserves_Yn` of
        :math:`N(M)`, the slowest check, defaults to True
    :type check_surface: bool, optional
    :return: Results listed in :meth:`Columns.process` or types
    :rtype: pandas.Series
    """
    if data is None:
        from realforms.study import TYPES
        return pd.Series(data=['bool'] * len(Columns.process()),
                         index=Columns.process(), name=TYPES)

    spec = data
    M, A = build_M(spec), build_A(spec)
    identities = verify_identities(spec)
    geometry = torus_and_trivialization_check(spec.n)
    preserved = (preserves_Yn(embed_N(M, spec.n), spec.n)
                 if check_surface else True)
    values = {
        Columns.DET_M: M.rep.det() == 1,
        Columns.DET_A: A.rep.det() == 1,
        Columns.IN_G0N: in_G0n(M, spec.n),
        Columns.PRESERVES_YN: preserved,
    }
    values.update(identities.to_dict())
    values.update(geometry.to_dict())
    return pd.Series(data=[bool(values[key]) for key in Columns.process()],
                     index=Columns.process(), name=get_name(spec))


class Columns(_ColumnsBase):
    """ Bases: :class:`realforms.utility._ColumnsBase`

    Column names.
    """
    DET_M = 'det_M'
    DET_A = 'det_A'
    M_J_M = 'M_J_M'
    A_M = 'A_M'
    A_M_PROJECTIVE = 'A_M_projective'
    IN_G0N = 'in_G0n'
    PRESERVES_YN = 'preserves_Yn'
    TORUS_ACTION = 'torus_action'
    TRIVIALIZATION = 'trivialization'

    @classmethod
    def process(cls):
        """ Get the current values of the :func:`process` output column names.

        :rtype: list(str)
        """
        return [cls.DET_M, cls.DET_A, cls.M_J_M, cls.A_M, cls.A_M_PROJECTIVE,
                cls.IN_G0N, cls.PRESERVES_YN, cls.TORUS_ACTION,
                cls.TRIVIALIZATION]
