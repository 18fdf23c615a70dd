"""
Random walk through the cocycles of the family.

Every sample starts from the cocycle :math:`(M(s), 1)` of a random fibre
and checks that

* twisted conjugation by a random element gives a cocycle again,
* the coboundary of the Galois invariant element
  :math:`(\\mathrm{diag}(\\lambda, 1), \\lambda^2)` maps it to the fibre
  over :math:`s''_i = \\lambda^{-(2i+1)} s_i`,
* the classifier calls the two fibres isomorphic.
"""


import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import pandas as pd

from realforms import sampling
from realforms.groups import (SemidirectElem, is_cocycle, is_gamma_invariant,
                              torus_element, twisted_conj)
from realforms.study.classifier import are_isomorphic
from realforms.study.family import FamilySpec, fiber_element
from realforms.utility import _ColumnsBase, parallel_map


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrbitSample:
    """ Fibre :attr:`point` of the family with :math:`m = n - 1`, the
    scaling :attr:`lam` and a random conjugator :attr:`phi`. """
    n: int
    point: Tuple[Fraction, ...]
    lam: Fraction
    phi: SemidirectElem

    @property
    def spec(self) -> FamilySpec:
        return FamilySpec(self.n, len(self.point) - 1)

    @property
    def rescaled(self) -> Tuple[Fraction, ...]:
        """ :math:`s''_i = e^{2i+1} s_i` with :math:`e = 1/\\lambda`. """
        e = 1 / self.lam
        return tuple(e ** (2 * i + 1) * x for i, x in enumerate(self.point))


def draw(n: int, count: int, seed: int = None) -> list:
    """ Draw :attr:`count` samples for the surface index :attr:`n`.

    :raises ValueError: For :math:`n < 1` or a negative :attr:`count`
    :rtype: list[OrbitSample]
    """
    if n < 1:
        raise ValueError('Orbit sampling needs n >= 1.')
    if count < 0:
        raise ValueError('Sample count must be nonnegative.')
    seed = sampling.DEFAULT_SEED if seed is None else seed
    logger.info('Drawing %d orbit samples for n=%d with seed %d.',
                count, n, seed)
    rng = sampling.generator(seed)
    samples = []
    for _ in range(count):
        point = sampling.random_fiber_point(rng, n)
        lam = sampling.random_rational(rng, nonzero=True)
        phi = sampling.random_semidirect(rng)
        samples.append(OrbitSample(n, point, lam, phi))
    return samples


def orbit_sample(n: int, count: int, seed: int = None,
                 threads: int = None) -> pd.DataFrame:
    """ Draw samples and check each of them with :func:`process`.

    :param int n: Surface index, at least 1
    :param int count: Number of samples
    :param seed: Seed, defaults to :data:`realforms.sampling.DEFAULT_SEED`
    :type seed: int, optional
    :param threads: Worker threads, see
        :func:`realforms.utility.max_workers`
    :type threads: int, optional
    :rtype: pandas.DataFrame
    """
    from realforms.study import TYPES
    rows = parallel_map(process, draw(n, count, seed), threads)
    table = pd.DataFrame(rows, columns=Columns.process())
    table.attrs[TYPES] = process(None)
    return table


def summary(table: pd.DataFrame) -> dict:
    """ Counts of passed checks per column of :func:`orbit_sample`. """
    checks = Columns.checks()
    result = {'samples': len(table)}
    for column in checks:
        result[column] = int(table[column].sum()) if len(table) else 0
    result['passed'] = bool(all(result[c] == len(table) for c in checks))
    return result


def process(data):
    """ Bundle method.

    Supplying `None` for :attr:`data` returns the value types of the
    columns instead.

    :param data: Sample. If None, return types instead
    :type data: OrbitSample or None
    :return: Checks listed in :meth:`Columns.process` or types
    :rtype: pandas.Series
    """
    if data is None:
        from realforms.study import TYPES
        return pd.Series(data=['str', 'str'] + ['bool'] * 5,
                         index=Columns.process(), name=TYPES)

    sample = data
    psi = fiber_element(sample.spec, sample.point)
    conjugate = twisted_conj(sample.phi, psi)
    invariant = torus_element(sample.lam)
    values = (
        '({})'.format(', '.join(str(x) for x in sample.point)),
        str(sample.lam),
        is_cocycle(psi),
        is_cocycle(conjugate),
        is_gamma_invariant(invariant),
        twisted_conj(invariant, psi) == fiber_element(sample.spec,
                                                      sample.rescaled),
        are_isomorphic(sample.n, sample.point, sample.rescaled),
    )
    logger.debug('Orbit sample %s: %s', values[0], values[2:])
    return pd.Series(data=values, index=Columns.process())


class Columns(_ColumnsBase):
    """ Bases: :class:`realforms.utility._ColumnsBase`

    Column names.
    """
    POINT = 'point'
    LAMBDA = 'lambda'
    COCYCLE = 'cocycle'
    CONJUGATE_COCYCLE = 'conjugate_cocycle'
    GAMMA_INVARIANT = 'gamma_invariant'
    COBOUNDARY = 'coboundary'
    ISOMORPHIC = 'isomorphic'

    @classmethod
    def checks(cls):
        return [cls.COCYCLE, cls.CONJUGATE_COCYCLE, cls.GAMMA_INVARIANT,
                cls.COBOUNDARY, cls.ISOMORPHIC]

    @classmethod
    def process(cls):
        """ Get the current values of the :func:`process` output column names.

        :rtype: list(str)
        """
        return [cls.POINT, cls.LAMBDA] + cls.checks()
