"""
Studies of the real forms, one module per topic, and batch reports.
"""


from types import ModuleType
from typing import Union

import pandas as pd

from realforms.utility import get_name, parallel_map

from . import family
from . import classifier
from . import toric
from . import p1
from . import orbits


#: :attr:`pandas.DataFrame.attrs` tag.
TYPES = 'types'


def process(data_list: list, by_module: ModuleType, threads: int = None,
            **kwargs) -> pd.DataFrame:
    """ General process function calling appropriate :func:`process`
    function from selected :mod:`study` module.

    Include the column types attribute.

    :param data_list: Inputs, which are passed to the appropriate
        :func:`process` function
    :type data_list: list
    :param by_module: Submodule of :mod:`study` by which the individual
        inputs are to be processed
    :type by_module: :mod:`study` submodule
    :param threads: Worker threads, see
        :func:`realforms.utility.max_workers`
    :type threads: int, optional
    :param kwargs: Additional keyword arguments are forwarded to
        :func:`by_module.process` function
    :return: Collection of results indexed by the input's :attr:`name`
        or position
    :rtype: pandas.DataFrame
    """
    def run(item):
        i, data = item
        series = by_module.process(data, **kwargs)
        name = get_name(data)
        series.name = name if name is not None else i
        return series

    results = parallel_map(run, enumerate(data_list), threads)
    df = pd.DataFrame(results, columns=by_module.Columns.process())
    df.attrs[TYPES] = by_module.process(None)
    return df


def print_(df: Union[pd.DataFrame, pd.Series]) -> None:
    """ Print the data including the types row if available.

    | Does not change the input DataFrame.
    | If :class:`~pandas.Series` is supplied, it's printed in the
        :class:`~pandas.DataFrame` format.

    :param df: Data to be printed
    :type df: pandas.DataFrame or pandas.Series
    """
    types = df.attrs.get(TYPES) if df.attrs else None

    if isinstance(df, pd.Series):  # Must be after types readout.
        df = pd.DataFrame(df).transpose()

    if types is not None:
        df = pd.concat([pd.DataFrame(types).transpose(), df], axis=0)

    print(df)
