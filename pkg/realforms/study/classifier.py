"""
Isomorphism of real fibres of the family.

The fibres over :math:`s` and :math:`s'` are isomorphic iff some real
:math:`e \\neq 0` satisfies :math:`P(s')(t) \\equiv e P(s)(e^2 t)` modulo
:math:`t^n`, that is :math:`s'_i = e^{2i+1} s_i` for all :math:`i < n`.
Odd real roots are unique, so the existence of :math:`e` reduces to the
rational identities :math:`r_i^{2j+1} = r_j^{2i+1}` with
:math:`r_i = s'_i / s_i`.
"""


import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from realforms.arith import OddRoot, parse_rational
from realforms.utility import _ColumnsBase, parallel_map


logger = logging.getLogger(__name__)


def _check_index(n: int):
    if n < 1:
        raise ValueError('Fibre classification needs n >= 1.')


def _truncated(n: int, s: Sequence) -> Tuple[Fraction, ...]:
    """ First :math:`n` coefficients; missing ones are zero. """
    values = [parse_rational(x) for x in s][:n]
    return tuple(values) + (Fraction(0),) * (n - len(values))


def _support(values: Sequence[Fraction]) -> Tuple[int, ...]:
    return tuple(i for i, x in enumerate(values) if x)


@dataclass(frozen=True)
class ModuliInvariant:
    """ Complete invariant of a fibre up to isomorphism.

    :attr:`ratios` lists :math:`(j, \\rho_j)` with
    :math:`\\rho_j = s_j^{2i_0+1} / s_{i_0}^{2j+1}` for the anchor
    :math:`i_0 = \\min I`.
    """
    n: int
    support: Tuple[int, ...]
    anchor: Optional[int]
    ratios: Tuple[Tuple[int, Fraction], ...]

    def __str__(self):
        ratios = ', '.join('{}: {}'.format(j, rho) for j, rho in self.ratios)
        return 'I={} i0={} rho={{{}}}'.format(
            list(self.support), self.anchor, ratios)


def moduli_invariant(n: int, s: Sequence) -> ModuliInvariant:
    """
    :param int n: Surface index, at least 1
    :param s: Fibre coordinates (indices from :math:`n` on are ignored)
    :type s: list
    :rtype: ModuliInvariant
    """
    _check_index(n)
    values = _truncated(n, s)
    support = _support(values)
    if not support:
        return ModuliInvariant(n, (), None, ())
    anchor = support[0]
    base = values[anchor]
    ratios = tuple(
        (j, values[j] ** (2 * anchor + 1) / base ** (2 * j + 1))
        for j in support[1:])
    return ModuliInvariant(n, support, anchor, ratios)


def are_isomorphic(n: int, s: Sequence, s_other: Sequence) -> bool:
    """ Decide whether the real fibres over :math:`s` and :math:`s'` are
    isomorphic.

    :param int n: Surface index, at least 1
    :raises ValueError: For :math:`n = 0`
    :rtype: bool
    """
    _check_index(n)
    first, second = _truncated(n, s), _truncated(n, s_other)
    support = _support(first)
    if support != _support(second):
        return False
    ratios = {i: second[i] / first[i] for i in support}
    return all(ratios[i] ** (2 * j + 1) == ratios[j] ** (2 * i + 1)
               for i, j in itertools.combinations(support, 2))


def witness_e(n: int, s: Sequence,
              s_other: Sequence) -> Union[Fraction, OddRoot]:
    """ The scaling :math:`e` with :math:`s'_i = e^{2i+1} s_i`.

    :raises ValueError: If the fibres are not isomorphic or the support
        is empty
    :return: Exact rational, or the symbolic real root
        :math:`\\sqrt[2i_0+1]{r_{i_0}}`
    :rtype: fractions.Fraction or OddRoot
    """
    if not are_isomorphic(n, s, s_other):
        raise ValueError('Fibres are not isomorphic.')
    first, second = _truncated(n, s), _truncated(n, s_other)
    support = _support(first)
    if not support:
        raise ValueError('Every scaling works for the empty support.')
    anchor = support[0]
    root = OddRoot(second[anchor] / first[anchor], 2 * anchor + 1)
    for i in support:
        ratio = second[i] / first[i]
        if root.radicand ** (2 * i + 1) != ratio ** root.degree:
            raise ArithmeticError('Witness check failed at index {}.'
                                  .format(i))
    rational = root.rational()
    return root if rational is None else rational


def candidate_witnesses(n: int, s: Sequence, s_other: Sequence) -> set:
    """ Derived candidate set for :func:`brute_check`: :math:`\\pm 1` and
    :math:`\\pm` every rational odd root of a ratio :math:`r_i`. """
    first, second = _truncated(n, s), _truncated(n, s_other)
    candidates = {Fraction(1), Fraction(-1)}
    for i in range(n):
        if first[i] and second[i]:
            root = OddRoot(second[i] / first[i], 2 * i + 1).rational()
            if root is not None:
                candidates.update((root, -root))
    return candidates


def brute_check(n: int, s: Sequence, s_other: Sequence,
                candidates: Iterable) -> bool:
    """ Oracle: does some nonzero :math:`e` from :attr:`candidates`
    satisfy :math:`s'_i = e^{2i+1} s_i` for all :math:`i < n`? """
    first, second = _truncated(n, s), _truncated(n, s_other)
    for e in candidates:
        e = parse_rational(e)
        if e and all(second[i] == e ** (2 * i + 1) * first[i]
                     for i in range(n)):
            return True
    return False


def pairwise_matrix(n: int, points: List[Sequence],
                    threads: int = None) -> Tuple[np.ndarray, pd.DataFrame]:
    """ Pairwise isomorphism matrix and invariant table.

    :param int n: Surface index, at least 1
    :param points: Fibre coordinates
    :type points: list
    :param threads: Worker threads, defaults to
        :func:`realforms.utility.max_workers`
    :type threads: int, optional
    :return: Symmetric boolean matrix and the table from :func:`process`
        with an extra ``class`` column
    :rtype: tuple(numpy.ndarray, pandas.DataFrame)
    """
    _check_index(n)
    count = len(points)
    pairs = [(i, j) for i in range(count) for j in range(i, count)]
    verdicts = parallel_map(
        lambda pair: are_isomorphic(n, points[pair[0]], points[pair[1]]),
        pairs, threads)
    matrix = np.zeros((count, count), dtype=bool)
    for (i, j), verdict in zip(pairs, verdicts):
        matrix[i, j] = matrix[j, i] = verdict

    rows = [process(point, n) for point in points]
    table = pd.DataFrame(rows, columns=Columns.process())
    labels = {}
    for invariant in (moduli_invariant(n, point) for point in points):
        labels.setdefault(invariant, len(labels))
    table[Columns.CLASS] = [labels[moduli_invariant(n, point)]
                            for point in points]
    table.index = range(count)
    logger.info('Classified %d points into %d classes.', count, len(labels))
    return matrix, table


def classes(table: pd.DataFrame) -> List[List[int]]:
    """ Point indices grouped by isomorphism class, in order of first
    appearance. """
    if table.empty:
        return []
    groups = table.groupby(Columns.CLASS, sort=True).groups
    return [sorted(int(i) for i in groups[label]) for label in sorted(groups)]


def process(data, n: int = None):
    """ Bundle method.

    Supplying `None` for :attr:`data` returns the value types of the
    columns instead.

    :param data: Fibre coordinates. If None, return types instead
    :type data: list or None
    :param int n: Surface index, at least 1
    :return: Moduli invariant listed in :meth:`Columns.process` or types
    :rtype: pandas.Series
    """
    if data is None:
        from realforms.study import TYPES
        return pd.Series(data=('str', 'list(int)', 'int', 'dict(int, str)'),
                         index=Columns.process(), name=TYPES)

    invariant = moduli_invariant(n, data)
    point = '({})'.format(', '.join(str(parse_rational(x)) for x in data))
    return pd.Series(
        data=(point, list(invariant.support), invariant.anchor,
              {j: str(rho) for j, rho in invariant.ratios}),
        index=Columns.process(), name=point)


class Columns(_ColumnsBase):
    """ Bases: :class:`realforms.utility._ColumnsBase`

    Column names.
    """
    POINT = 'point'
    SUPPORT = 'support'
    ANCHOR = 'anchor'
    RATIOS = 'ratios'
    CLASS = 'class'

    @classmethod
    def process(cls):
        """ Get the current values of the :func:`process` output column names.

        :rtype: list(str)
        """
        return [cls.POINT, cls.SUPPORT, cls.ANCHOR, cls.RATIOS]
