"""
JSON payloads and reports.

Scalars travel as strings (``"3/4"``, ``"1/2-3/4*i"``) so that no value is
ever rounded. Laurent polynomials are lists of ``{"deg", "coeff"}``
records.
"""


import enum
import json
import os
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from realforms.arith import (NUMERIC, GaussianRational, LaurentPoly, OddRoot,
                             ParamPoly, parse_rational, scalar)
from realforms.groups import LaurentMatrix, LMat2, ProjElem2, SemidirectElem


class SchemaError(ValueError):
    """ Malformed payload or textual number. """


def decode_rational(value) -> Fraction:
    """
    :raises SchemaError: If :attr:`value` is not an exact rational
    :rtype: fractions.Fraction
    """
    try:
        return parse_rational(value)
    except ValueError as error:
        raise SchemaError(str(error)) from None


def encode_scalar(value) -> str:
    return str(scalar(value))


def decode_scalar(value):
    """ Gaussian rational from a string or an exact number.

    :raises SchemaError: If :attr:`value` is malformed
    """
    try:
        return scalar(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise SchemaError('Not an exact scalar: {!r}.'.format(value)) from None


def encode_param(poly: ParamPoly) -> dict:
    """ ``{"nvars": m, "terms": [{"exp": [...], "coeff": "..."}]}`` with
    terms in lexicographic order of the exponent vectors. """
    return {'nvars': poly.nvars,
            'terms': [{'exp': list(exponents), 'coeff': encode_scalar(c)}
                      for exponents, c in sorted(poly.terms.items())]}


def decode_param(payload) -> ParamPoly:
    """
    :raises SchemaError: If :attr:`payload` is not an :func:`encode_param`
        object
    """
    if (not isinstance(payload, dict)
            or not isinstance(payload.get('nvars'), int)
            or not isinstance(payload.get('terms', []), list)):
        raise SchemaError('Expected an object with keys "nvars" and '
                          '"terms".')
    terms = {}
    for record in payload.get('terms', []):
        if not isinstance(record, dict) or 'exp' not in record:
            raise SchemaError('Parameter terms need "exp" and "coeff".')
        exponents = record['exp']
        if (not isinstance(exponents, list)
                or any(not _is_int(e) or e < 0 for e in exponents)):
            raise SchemaError('Exponents must be nonnegative integers.')
        key = tuple(exponents)
        if key in terms:
            raise SchemaError('Repeated exponents {}.'.format(exponents))
        terms[key] = decode_scalar(record.get('coeff'))
    try:
        return ParamPoly(payload['nvars'], terms)
    except ValueError as error:
        raise SchemaError(str(error)) from None


def encode_laurent(poly: LaurentPoly) -> List[dict]:
    """ ``[{"deg": k, "coeff": c}, ...]`` by increasing degree. Numeric
    coefficients are strings, parametric ones :func:`encode_param`
    objects. """
    if poly.mode == NUMERIC:
        return [{'deg': k, 'coeff': encode_scalar(c)}
                for k, c in sorted(poly.terms.items())]
    return [{'deg': k, 'coeff': encode_param(c)}
            for k, c in sorted(poly.terms.items())]


def decode_laurent(payload) -> LaurentPoly:
    """ Inverse of :func:`encode_laurent`. A bare scalar is a constant.

    The polynomial is parametric as soon as one coefficient is a
    parameter polynomial; scalar coefficients then become constants.

    :raises SchemaError: For malformed records or mixed parameter counts
    """
    if not isinstance(payload, list):
        return LaurentPoly.constant(decode_scalar(payload))
    terms = {}
    nparams = None
    for record in payload:
        if not isinstance(record, dict) or 'deg' not in record:
            raise SchemaError('Laurent terms need "deg" and "coeff".')
        if not _is_int(record['deg']):
            raise SchemaError('Exponents must be integers.')
        coefficient = record.get('coeff')
        if isinstance(coefficient, dict):
            coefficient = decode_param(coefficient)
            if nparams is not None and nparams != coefficient.nvars:
                raise SchemaError('Parameter counts differ: {} and {}.'
                                  .format(nparams, coefficient.nvars))
            nparams = coefficient.nvars
        else:
            coefficient = decode_scalar(coefficient)
        if record['deg'] in terms:
            raise SchemaError('Repeated degree {}.'.format(record['deg']))
        terms[record['deg']] = coefficient
    return LaurentPoly(terms, nparams)


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def encode_matrix(matrix) -> List[List[list]]:
    """ Rows of :func:`encode_laurent` records.

    :type matrix: LaurentMatrix or ProjElem2
    """
    if isinstance(matrix, ProjElem2):
        matrix = matrix.rep
    return [[encode_laurent(entry) for entry in row] for row in matrix.rows]


def decode_matrix(payload) -> LMat2:
    """ Entries without parameters are lifted to the parametric mode of
    the others.

    :raises SchemaError: Unless :attr:`payload` is a 2x2 array of one
        coefficient mode
    """
    if (not isinstance(payload, list) or len(payload) != 2
            or any(not isinstance(row, list) or len(row) != 2
                   for row in payload)):
        raise SchemaError('Expected a 2x2 matrix.')
    rows = [[decode_laurent(entry) for entry in row] for row in payload]
    counts = {x.nparams for row in rows for x in row} - {None}
    if len(counts) > 1:
        raise SchemaError('Mixed parameter counts {}.'.format(sorted(counts)))
    if counts:
        nparams = counts.pop()
        rows = [[LaurentPoly(x.terms, nparams) for x in row] for row in rows]
    return LMat2(rows)


def encode_semidirect(element: SemidirectElem) -> dict:
    return {'M': encode_matrix(element.g), 'nu': encode_scalar(element.nu)}


def decode_semidirect(payload) -> SemidirectElem:
    if not isinstance(payload, dict) or 'M' not in payload:
        raise SchemaError('Expected an object with keys "M" and "nu".')
    try:
        return SemidirectElem(ProjElem2(decode_matrix(payload['M'])),
                              decode_scalar(payload.get('nu', '1')))
    except SchemaError:
        raise
    except ValueError as error:
        raise SchemaError(str(error)) from None


def encode_root(root) -> dict:
    """ Exact value of an :class:`~realforms.arith.OddRoot`; plain
    rationals are passed through as strings. """
    if not isinstance(root, OddRoot):
        return {'value': encode_scalar(root)}
    return {'radicand': str(root.radicand), 'degree': root.degree,
            'value': str(root)}


def to_jsonable(value):
    """ ``default`` hook of :func:`json.dumps`. """
    if isinstance(value, (Fraction, GaussianRational)):
        return encode_scalar(value)
    if isinstance(value, OddRoot):
        return encode_root(value)
    if isinstance(value, LaurentPoly):
        return encode_laurent(value)
    if isinstance(value, (LaurentMatrix, ProjElem2)):
        return encode_matrix(value)
    if isinstance(value, SemidirectElem):
        return encode_semidirect(value)
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (tuple, set, frozenset)):
        return list(value)
    raise TypeError('Not serializable: {!r}.'.format(value))


def load_payload(source: str):
    """ Inline JSON, or the path of a UTF-8 JSON file. An empty file is
    an empty list.

    :raises SchemaError: For invalid JSON or a missing file
    """
    text = source.strip()
    if not text.startswith(('[', '{', '"')):
        if not os.path.isfile(source):
            raise SchemaError('No such file: {}.'.format(source))
        with open(source, encoding='utf-8') as file_:
            text = file_.read().strip()
        if not text:
            return []
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise SchemaError('Invalid JSON: {}.'.format(error)) from None


def parse_point(source) -> Tuple[Fraction, ...]:
    """ Rational vector from ``"1,0,1/2"``, a JSON array or a list. """
    if isinstance(source, str):
        text = source.strip()
        if text.startswith('['):
            source = load_payload(text)
        else:
            source = [x for x in text.split(',') if x.strip()]
    if not isinstance(source, (list, tuple)):
        raise SchemaError('Expected a list of rationals.')
    return tuple(decode_rational(x) for x in source)


def parse_points(payload) -> List[Tuple[Fraction, ...]]:
    """ Points from ``[[...], ...]`` or ``{"points": [[...], ...]}``. """
    if isinstance(payload, dict):
        payload = payload.get('points')
    if not isinstance(payload, list):
        raise SchemaError('Expected a list of points.')
    return [parse_point(point) for point in payload]


def parse_matrix(source) -> List[List]:
    """ 2x2 scalar rows from ``"id"``, inline JSON or a JSON file. """
    if isinstance(source, str) and source.strip() == 'id':
        return [[1, 0], [0, 1]]
    payload = load_payload(source) if isinstance(source, str) else source
    if (not isinstance(payload, list) or len(payload) != 2
            or any(not isinstance(row, list) or len(row) != 2
                   for row in payload)):
        raise SchemaError('Expected a 2x2 matrix.')
    return [[decode_scalar(x) for x in row] for row in payload]


def write_report(report: dict, out: Optional[str] = None) -> str:
    """ Serialize :attr:`report` and write it to :attr:`out` or return it.

    :param out: Output path. If None, nothing is written
    :type out: str, optional
    :return: The JSON text
    :rtype: str
    """
    text = json.dumps(report, indent=2, default=to_jsonable,
                      ensure_ascii=False)
    if out is not None:
        with open(out, 'w', encoding='utf-8') as file_:
            file_.write(text + '\n')
    return text
