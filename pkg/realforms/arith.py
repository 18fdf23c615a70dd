"""
Exact coefficient arithmetic.

| Rationals are plain :class:`fractions.Fraction` values (integers are
    accepted wherever a rational is expected).
| Elements of :math:`\\mathbb{Q}(i)` are *scalars*. They are stored in a
    canonical form: :class:`int` or :class:`~fractions.Fraction` when real
    and :class:`GaussianRational` otherwise, see :func:`scalar`.
| :class:`ParamPoly` is the parameter ring
    :math:`\\mathbb{Q}(i)[a_0, \\ldots, a_m]` with real parameters and
    :class:`LaurentPoly` the Laurent ring in :math:`t` over either scalars
    (numeric mode) or parameter polynomials (parametric mode).

Nothing here ever touches floating point.
"""


import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

import sympy


#: Coefficient modes of :class:`LaurentPoly`.
NUMERIC = 'numeric'
PARAMETRIC = 'parametric'


class CoefficientModeError(TypeError):
    """ Numeric and parametric Laurent polynomials (or parametric ones with
    different parameter counts) were combined. """


def parse_rational(value) -> Fraction:
    """ Parse ``"p/q"`` or ``"p"`` (or pass an exact number through).

    :param value: Textual or exact rational
    :type value: str or int or fractions.Fraction
    :raises ValueError: If :attr:`value` is not an exact rational
    :return: Reduced fraction
    :rtype: fractions.Fraction
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError('Not an exact rational: {!r}.'.format(value))
    try:
        return Fraction(value.strip() if isinstance(value, str) else value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise ValueError('Not a rational: {!r}.'.format(value)) from None


@dataclass(frozen=True, eq=False)
class GaussianRational:
    """ Exact element :math:`re + im \\cdot i` of :math:`\\mathbb{Q}(i)`.

    Compares equal to :class:`int` and :class:`~fractions.Fraction` values
    when :attr:`im` is zero.
    """
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 're', parse_rational(self.re))
        object.__setattr__(self, 'im', parse_rational(self.im))

    @classmethod
    def of(cls, value):
        """ Promote an exact number or a string to :class:`GaussianRational`.

        :rtype: GaussianRational
        """
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls(parse_rational(value))

    @classmethod
    def parse(cls, text: str):
        """ Parse ``"p/q+r/s*i"``; either part may be omitted.

        Accepted forms include ``"3"``, ``"-1/2"``, ``"i"``, ``"-2*i"``,
        ``"1/2-3/4*i"`` and ``"1+i"``.

        :raises ValueError: If :attr:`text` is malformed
        :rtype: GaussianRational
        """
        body = text.replace(' ', '')
        if not body:
            raise ValueError('Empty Gaussian rational.')
        if not body.endswith('i'):
            return cls(parse_rational(body))
        body = body[:-1]
        if body.endswith('*'):
            body = body[:-1]
        cut = max(body.rfind('+'), body.rfind('-'))
        real, imag = (body[:cut], body[cut:]) if cut > 0 else ('', body)
        if imag in ('', '+'):
            im = Fraction(1)
        elif imag == '-':
            im = Fraction(-1)
        else:
            im = parse_rational(imag)
        return cls(parse_rational(real) if real else 0, im)

    @property
    def is_real(self):
        return self.im == 0

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """ :math:`|z|^2 = z \\overline{z}`. """
        return self.re * self.re + self.im * self.im

    def inverse(self):
        """
        :raises ZeroDivisionError: For zero
        """
        norm = self.norm()
        if norm == 0:
            raise ZeroDivisionError('Zero has no inverse.')
        return GaussianRational(self.re / norm, -self.im / norm)

    @classmethod
    def _lift(cls, other):
        if isinstance(other, cls):
            return other
        if isinstance(other, numbers.Rational):
            return cls(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** -exponent
        result = GaussianRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __str__(self):
        if not self.im:
            return str(self.re)
        magnitude = abs(self.im)
        im = '' if magnitude == 1 else '{}*'.format(magnitude)
        if not self.re:
            return '{}{}i'.format('-' if self.im < 0 else '', im)
        sign = '-' if self.im < 0 else '+'
        return '{}{}{}i'.format(self.re, sign, im)

    def __repr__(self):
        return 'GaussianRational({!r})'.format(str(self))


def scalar(value):
    """ Canonical form of an element of :math:`\\mathbb{Q}(i)`.

    Integral values become :class:`int`, other real values
    :class:`~fractions.Fraction` and the rest :class:`GaussianRational`.
    Strings are parsed by :meth:`GaussianRational.parse`.

    :raises TypeError: For floats and other inexact types
    """
    if isinstance(value, str):
        value = GaussianRational.parse(value)
    if isinstance(value, GaussianRational):
        if value.im:
            return value
        value = value.re
    if isinstance(value, bool) or not isinstance(value, numbers.Rational):
        raise TypeError('Not an exact scalar: {!r}.'.format(value))
    if value.denominator == 1:
        return int(value.numerator)
    return Fraction(value)


def reciprocal(value):
    """ Exact inverse of a nonzero scalar. """
    if not value:
        raise ZeroDivisionError('Zero has no inverse.')
    return scalar(Fraction(1) / value)


def power(value, exponent: int):
    """ Exact integer power of a scalar, negative exponents included. """
    if exponent < 0:
        return scalar(reciprocal(value) ** -exponent)
    return scalar(value ** exponent)


def is_real(value) -> bool:
    return not isinstance(value, GaussianRational) or value.im == 0


# Exponent vectors are packed into one int, one fixed-width slot per
# parameter, so that monomial multiplication is integer addition.
_BITS = 24
_MASK = (1 << _BITS) - 1


def _pack(exponents: Iterable[int]) -> int:
    key = 0
    for i, e in enumerate(exponents):
        if not 0 <= e <= _MASK:
            raise ValueError('Exponent out of range: {}.'.format(e))
        key |= e << (_BITS * i)
    return key


def _unpack(key: int, nvars: int) -> Tuple[int, ...]:
    return tuple((key >> (_BITS * i)) & _MASK for i in range(nvars))


def _mul_packed(p: dict, q: dict, out: Optional[dict] = None) -> dict:
    out = {} if out is None else out
    get = out.get
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            out[e] = get(e, 0) + c1 * c2
    return out


class ParamPoly:
    """ Polynomial in the real parameters :math:`a_0, \\ldots, a_{m}` with
    coefficients in :math:`\\mathbb{Q}(i)`.

    Terms map exponent vectors (tuples of length :attr:`nvars`) to scalars;
    zero coefficients are never stored. Values are immutable.

    :param int nvars: Number of parameters, i.e. :math:`m + 1`
    :param terms: Exponent vector to coefficient, defaults to None
    :type terms: dict, optional
    """
    __slots__ = ('nvars', '_terms')

    def __init__(self, nvars: int, terms: Optional[dict] = None):
        if nvars < 0:
            raise ValueError('Parameter count must be nonnegative.')
        self.nvars = nvars
        packed = {}
        for exponents, coefficient in (terms or {}).items():
            if len(exponents) != nvars:
                raise ValueError('Exponent vector {} has wrong length.'
                                 .format(exponents))
            key = _pack(exponents)
            packed[key] = packed.get(key, 0) + scalar(coefficient)
        self._terms = self._clean(packed)

    @staticmethod
    def _clean(packed: dict) -> dict:
        return {key: scalar(c) for key, c in packed.items() if c}

    @classmethod
    def _from_packed(cls, nvars: int, packed: dict):
        poly = cls.__new__(cls)
        poly.nvars = nvars
        poly._terms = cls._clean(packed)
        return poly

    @classmethod
    def constant(cls, value, nvars: int):
        return cls._from_packed(nvars, {0: scalar(value)})

    @classmethod
    def variable(cls, index: int, nvars: int):
        """ The parameter :math:`a_{index}`. """
        if not 0 <= index < nvars:
            raise ValueError('No parameter a{} among {}.'.format(index, nvars))
        return cls._from_packed(nvars, {1 << (_BITS * index): 1})

    @property
    def terms(self) -> Dict[Tuple[int, ...], object]:
        return {_unpack(key, self.nvars): c for key, c in self._terms.items()}

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant_value(self):
        """ Coefficient of the empty monomial. """
        return self._terms.get(0, 0)

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError('Zero polynomial has no degree.')
        return max(sum(exps) for exps in self.terms)

    def _lift(self, other):
        if isinstance(other, ParamPoly):
            if other.nvars != self.nvars:
                raise CoefficientModeError(
                    'Parameter counts differ: {} and {}.'
                    .format(self.nvars, other.nvars))
            return other
        if isinstance(other, (numbers.Rational, GaussianRational)):
            return ParamPoly.constant(other, self.nvars)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        packed = dict(self._terms)
        for key, c in other._terms.items():
            packed[key] = packed.get(key, 0) + c
        return ParamPoly._from_packed(self.nvars, packed)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly._from_packed(
            self.nvars, {key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (numbers.Rational, GaussianRational)):
            return self.scale(other)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return ParamPoly._from_packed(
            self.nvars, _mul_packed(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError('Negative power of a polynomial.')
        result = ParamPoly.constant(1, self.nvars)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, value):
        value = scalar(value)
        return ParamPoly._from_packed(
            self.nvars, {key: c * value for key, c in self._terms.items()})

    def conjugate(self):
        """ Conjugate the coefficients; the parameters are real. """
        return ParamPoly._from_packed(
            self.nvars,
            {key: c.conjugate() for key, c in self._terms.items()})

    def evaluate(self, point: Sequence):
        """ Substitute :math:`a_i := point_i`.

        :param point: Exact values, one per parameter
        :type point: list
        :raises ValueError: On dimension mismatch
        :return: Canonical scalar
        """
        if len(point) != self.nvars:
            raise ValueError('Expected {} parameter values, got {}.'
                             .format(self.nvars, len(point)))
        values = [scalar(v) for v in point]
        total = 0
        for key, c in self._terms.items():
            term = c
            for value, e in zip(values, _unpack(key, self.nvars)):
                if e:
                    term = term * value ** e
            total = total + term
        return scalar(total)

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (numbers.Rational, GaussianRational)):
            return self == ParamPoly.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return '0'
        parts = []
        for exps, c in sorted(self.terms.items()):
            monomial = '*'.join(
                'a{}'.format(i) if e == 1 else 'a{}^{}'.format(i, e)
                for i, e in enumerate(exps) if e)
            if not monomial:
                parts.append(str(c))
            elif c == 1:
                parts.append(monomial)
            else:
                parts.append('({})*{}'.format(c, monomial))
        return ' + '.join(parts)

    def __repr__(self):
        return 'ParamPoly({}, {!r})'.format(self.nvars, str(self))


class LaurentPoly:
    """ Laurent polynomial in :math:`t`.

    In numeric mode (``nparams is None``) coefficients are scalars of
    :math:`\\mathbb{Q}(i)`; in parametric mode they are :class:`ParamPoly`
    over ``nparams`` real parameters. Zero coefficients are never stored, so
    structural equality is mathematical equality.

    :param terms: Degree to coefficient, defaults to None
    :type terms: dict, optional
    :param nparams: Parameter count, None for numeric mode
    :type nparams: int, optional
    """
    __slots__ = ('nparams', '_terms')

    def __init__(self, terms: Optional[dict] = None,
                 nparams: Optional[int] = None):
        self.nparams = nparams
        self._terms = self._clean(
            {int(k): self._coefficient(c) for k, c in (terms or {}).items()})

    def _coefficient(self, value):
        if self.nparams is None:
            if isinstance(value, ParamPoly):
                raise CoefficientModeError(
                    'Parameter polynomial in a numeric Laurent polynomial.')
            return scalar(value)
        if isinstance(value, ParamPoly):
            if value.nvars != self.nparams:
                raise CoefficientModeError(
                    'Parameter counts differ: {} and {}.'
                    .format(self.nparams, value.nvars))
            return value
        return ParamPoly.constant(value, self.nparams)

    def _clean(self, terms: dict) -> dict:
        if self.nparams is None:
            return {k: scalar(c) for k, c in terms.items() if c}
        return {k: c for k, c in terms.items() if c}

    @classmethod
    def _build(cls, terms: dict, nparams: Optional[int]):
        poly = cls.__new__(cls)
        poly.nparams = nparams
        poly._terms = poly._clean(terms)
        return poly

    @classmethod
    def monomial(cls, degree: int, coefficient=1,
                 nparams: Optional[int] = None):
        """ :math:`coefficient \\cdot t^{degree}`. """
        return cls({degree: coefficient}, nparams)

    @classmethod
    def t(cls, nparams: Optional[int] = None):
        return cls.monomial(1, 1, nparams)

    @classmethod
    def constant(cls, value, nparams: Optional[int] = None):
        return cls.monomial(0, value, nparams)

    @classmethod
    def parameter(cls, index: int, nparams: int):
        """ The parameter :math:`a_{index}` as a constant polynomial. """
        return cls.monomial(0, ParamPoly.variable(index, nparams), nparams)

    @property
    def mode(self) -> str:
        return NUMERIC if self.nparams is None else PARAMETRIC

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, degree: int):
        if self.nparams is None:
            return self._terms.get(degree, 0)
        return self._terms.get(degree, ParamPoly(self.nparams))

    def constant_term(self):
        return self.coeff(0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def ord(self) -> int:
        """ Smallest degree with a nonzero coefficient.

        :raises ValueError: For the zero polynomial
        """
        if not self._terms:
            raise ValueError('Zero has no order.')
        return min(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError('Zero has no degree.')
        return max(self._terms)

    def is_unit(self) -> bool:
        """ Units are single terms :math:`\\lambda t^k` with an invertible
        coefficient. """
        if len(self._terms) != 1:
            return False
        (coefficient,) = self._terms.values()
        if self.nparams is None:
            return True
        return coefficient.is_constant()

    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            if other.nparams != self.nparams:
                raise CoefficientModeError(
                    'Cannot combine {} and {} Laurent polynomials.'.format(
                        _mode_name(self.nparams), _mode_name(other.nparams)))
            return other
        if isinstance(other, (numbers.Rational, GaussianRational)):
            return LaurentPoly.constant(other, self.nparams)
        if isinstance(other, ParamPoly) and self.nparams is not None:
            return LaurentPoly.constant(other, self.nparams)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms[k] + c if k in terms else c
        return LaurentPoly._build(terms, self.nparams)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._build(
            {k: -c for k, c in self._terms.items()}, self.nparams)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.nparams is None:
            terms = {}
            for k1, c1 in self._terms.items():
                for k2, c2 in other._terms.items():
                    k = k1 + k2
                    terms[k] = terms.get(k, 0) + c1 * c2
            return LaurentPoly._build(terms, None)
        buckets = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                bucket = buckets.setdefault(k1 + k2, {})
                _mul_packed(c1._terms, c2._terms, bucket)
        return LaurentPoly._build(
            {k: ParamPoly._from_packed(self.nparams, bucket)
             for k, bucket in buckets.items()}, self.nparams)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            if not self.is_unit():
                raise ValueError('Only units have negative powers.')
            ((k, c),) = self._terms.items()
            if self.nparams is not None:
                c = c.constant_value()
            return LaurentPoly.monomial(-k, reciprocal(c),
                                        self.nparams) ** -exponent
        result = LaurentPoly.constant(1, self.nparams)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def shift(self, k: int):
        """ Multiply by :math:`t^k`. """
        return LaurentPoly._build(
            {d + k: c for d, c in self._terms.items()}, self.nparams)

    def scale(self, value):
        """ Multiply by a scalar. """
        value = scalar(value)
        return LaurentPoly._build(
            {d: c * value for d, c in self._terms.items()}, self.nparams)

    def conjugate(self):
        """ Coefficient-wise complex conjugation (parameters are real). """
        return LaurentPoly._build(
            {d: c.conjugate() for d, c in self._terms.items()}, self.nparams)

    def substitute_scale(self, value):
        """ Substitute :math:`t \\mapsto c\\,t`.

        :param value: Nonzero scalar :math:`c`
        :raises ValueError: If :attr:`value` is zero
        :rtype: LaurentPoly
        """
        value = scalar(value)
        if not value:
            raise ValueError('Scaling factor must be nonzero.')
        return LaurentPoly._build(
            {d: c * power(value, d) for d, c in self._terms.items()},
            self.nparams)

    def truncate_mod(self, n: int):
        """ Reduce modulo :math:`t^n`.

        :raises ValueError: For negative :attr:`n` or negative degrees
        """
        if n < 0:
            raise ValueError('Truncation order must be nonnegative.')
        if self._terms and self.ord() < 0:
            raise ValueError('Cannot truncate negative degrees.')
        return LaurentPoly._build(
            {d: c for d, c in self._terms.items() if d < n}, self.nparams)

    def evaluate_params(self, point: Sequence):
        """ Substitute :math:`a_i := s_i`, giving a numeric polynomial.

        :param point: Exact values :math:`s_0, \\ldots, s_m`
        :type point: list
        :raises CoefficientModeError: If already numeric
        :raises ValueError: On dimension mismatch
        :rtype: LaurentPoly
        """
        if self.nparams is None:
            raise CoefficientModeError('Numeric polynomial has no parameters.')
        if len(point) != self.nparams:
            raise ValueError('Expected {} parameter values, got {}.'
                             .format(self.nparams, len(point)))
        return LaurentPoly._build(
            {d: c.evaluate(point) for d, c in self._terms.items()}, None)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return (self.nparams == other.nparams
                    and self._terms == other._terms)
        if isinstance(other, (numbers.Rational, GaussianRational)):
            return self == LaurentPoly.constant(other, self.nparams)
        return NotImplemented

    def __hash__(self):
        return hash((self.nparams, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return '0'
        parts = []
        for d, c in sorted(self._terms.items()):
            text = str(c)
            if len(text.split()) > 1 or (d and ('+' in text[1:]
                                                or '-' in text[1:])):
                text = '({})'.format(text)
            if d == 0:
                parts.append(text)
                continue
            power_ = 't' if d == 1 else 't^{}'.format(d)
            if text == '1':
                parts.append(power_)
            elif text == '-1':
                parts.append('-' + power_)
            else:
                parts.append('{}*{}'.format(text, power_))
        return ' + '.join(parts)

    def __repr__(self):
        return 'LaurentPoly({!r}, mode={})'.format(str(self), self.mode)


def _mode_name(nparams):
    if nparams is None:
        return NUMERIC
    return '{} ({} parameters)'.format(PARAMETRIC, nparams)


@dataclass(frozen=True, eq=False)
class OddRoot:
    """ The real root :math:`\\sqrt[degree]{radicand}` of odd degree.

    Odd real roots exist and are unique, so two roots are equal iff
    :math:`r_1^{d_2} = r_2^{d_1}`; no approximation is ever made.
    """
    radicand: Fraction
    degree: int

    def __post_init__(self):
        object.__setattr__(self, 'radicand', parse_rational(self.radicand))
        if self.degree < 1 or self.degree % 2 == 0:
            raise ValueError('Root degree must be odd and positive.')

    def rational(self) -> Optional[Fraction]:
        """ The root as an exact rational, or None if it is irrational. """
        numerator, exact_n = sympy.integer_nthroot(
            abs(self.radicand.numerator), self.degree)
        denominator, exact_d = sympy.integer_nthroot(
            self.radicand.denominator, self.degree)
        if not (exact_n and exact_d):
            return None
        sign = -1 if self.radicand < 0 else 1
        return Fraction(sign * int(numerator), int(denominator))

    def is_rational(self) -> bool:
        return self.rational() is not None

    def power(self, exponent: int) -> Fraction:
        """ Exact :math:`root^{exponent}` for multiples of :attr:`degree`.

        :raises ValueError: If :attr:`degree` does not divide the exponent
        """
        if exponent % self.degree:
            rational = self.rational()
            if rational is None:
                raise ValueError('Power {} of an irrational root of degree {}.'
                                 .format(exponent, self.degree))
            return rational ** exponent
        return self.radicand ** (exponent // self.degree)

    def __eq__(self, other):
        if isinstance(other, OddRoot):
            return (self.radicand ** other.degree
                    == other.radicand ** self.degree)
        if isinstance(other, numbers.Rational):
            return self.radicand == Fraction(other) ** self.degree
        return NotImplemented

    __hash__ = None

    def __str__(self):
        rational = self.rational()
        if rational is not None:
            return str(rational)
        return '({})^(1/{})'.format(self.radicand, self.degree)
