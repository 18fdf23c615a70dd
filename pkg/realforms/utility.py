"""
Utility functions.
"""


import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Sequence

from realforms.arith import reciprocal, scalar


logger = logging.getLogger(__name__)

#: Environment variable capping worker threads.
THREADS_ENV = 'REALFORMS_THREADS'


def max_workers() -> int:
    """ Worker thread cap from :data:`THREADS_ENV`, defaults to 1.

    :rtype: int
    """
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        logger.warning('Ignoring %s=%r, using 1 thread.', THREADS_ENV, raw)
        return 1
    return value


def parallel_map(function: Callable, items: Iterable,
                 threads: int = None) -> List:
    """ Ordered :func:`map`, spread over a thread pool when allowed.

    :param threads: Worker count, defaults to :func:`max_workers`
    :type threads: int, optional
    :rtype: list
    """
    items = list(items)
    threads = max_workers() if threads is None else threads
    if threads <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(function, items))


def get_name(data):
    """ Find the object's name.

    :return: Name or None if name does not exist
    :rtype: str or None
    """
    return data.name if hasattr(data, 'name') else None


def row_echelon(rows: Sequence[Sequence]):
    """ Reduced row echelon form over :math:`\\mathbb{Q}(i)`.

    Exact Gauss-Jordan elimination with the first nonzero entry of each
    column as pivot.

    :param rows: Matrix of scalars
    :type rows: list[list]
    :return: Reduced rows and pivot column indices
    :rtype: tuple(list[list], list[int])
    """
    matrix = [[scalar(x) for x in row] for row in rows]
    n_rows = len(matrix)
    n_cols = len(matrix[0]) if matrix else 0
    pivots = []
    r = 0
    for col in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if matrix[i][col]), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        inverse = reciprocal(matrix[r][col])
        matrix[r] = [scalar(x * inverse) for x in matrix[r]]
        for i in range(n_rows):
            factor = matrix[i][col]
            if i != r and factor:
                matrix[i] = [scalar(x - factor * y)
                             for x, y in zip(matrix[i], matrix[r])]
        pivots.append(col)
        r += 1
        if r == n_rows:
            break
    return matrix, pivots


def rank(rows: Sequence[Sequence]) -> int:
    """ Exact rank over :math:`\\mathbb{Q}(i)`. """
    return len(row_echelon(rows)[1])


class _ColumnsBase:
    """ Abstract base class for :class:`realforms.study.[Any].Columns`
    classes. """
    @classmethod
    def list_all_names(cls):
        """
        :rtype: list[str]
        """
        return [name for name in dir(cls) if name.isupper()]
