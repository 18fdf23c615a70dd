"""
Matrices over Laurent rings, projective classes and the semidirect group.

| :class:`LMat2` and :class:`LMat3` are square matrices of
    :class:`~realforms.arith.LaurentPoly` entries; ``@`` is the matrix
    product.
| :class:`ProjElem2` is a class in :math:`PGL_2(A[t^{\\pm 1}])` kept in its
    normalized representative: entries in :math:`A[t]`, not all in
    :math:`tA[t]`.
| :class:`SemidirectElem` is a pair :math:`(M, \\nu)` of the group
    :math:`PGL_2(\\mathbb{C}[t^{\\pm 1}]) \\rtimes \\mathbb{C}^*` with the
    law :math:`(M', \\nu') \\cdot (M, \\nu) = (M'(\\nu t) M(t), \\nu' \\nu)`.
"""


from dataclasses import dataclass
from typing import Optional

from realforms.arith import (CoefficientModeError, LaurentPoly, ParamPoly,
                             reciprocal, scalar)


class LaurentMatrix:
    """ Square matrix over a Laurent ring.

    Entries that are not yet :class:`~realforms.arith.LaurentPoly` are
    promoted to constants of the matrix's coefficient mode.

    :param rows: Row-major entries
    :type rows: list[list]
    :param nparams: Parameter count, inferred from the entries if omitted
    :type nparams: int, optional
    :raises ValueError: If the shape is wrong
    """
    #: Fixed side length, None for any.
    size = None

    def __init__(self, rows, nparams: Optional[int] = None):
        rows = [list(row) for row in rows]
        n = len(rows)
        if not n or any(len(row) != n for row in rows):
            raise ValueError('Matrix must be square.')
        if self.size is not None and n != self.size:
            raise ValueError('Expected a {0}x{0} matrix.'.format(self.size))
        if nparams is None:
            nparams = next((x.nparams for row in rows for x in row
                            if isinstance(x, LaurentPoly)), None)
        self.nparams = nparams
        self.rows = tuple(tuple(self._entry(x) for x in row) for row in rows)

    def _entry(self, value):
        if isinstance(value, LaurentPoly):
            if value.nparams != self.nparams:
                raise CoefficientModeError('Mixed coefficient modes.')
            return value
        return LaurentPoly.constant(value, self.nparams)

    @classmethod
    def identity(cls, nparams: Optional[int] = None, size: int = None):
        size = cls.size if size is None else size
        return cls([[int(i == j) for j in range(size)] for i in range(size)],
                   nparams)

    @classmethod
    def diag(cls, *values, nparams: Optional[int] = None):
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)]
                    for i in range(n)], nparams)

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def __iter__(self):
        return (entry for row in self.rows for entry in row)

    def map(self, function):
        """ New matrix of the same kind with :attr:`function` applied to
        every entry. """
        rows = [[function(entry) for entry in row] for row in self.rows]
        return type(self)(rows)

    def __matmul__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        n = len(self.rows)
        if len(other.rows) != n:
            raise ValueError('Matrix sizes differ.')
        zero = LaurentPoly.constant(0, self.nparams)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                total = zero
                for k in range(n):
                    left, right = self.rows[i][k], other.rows[k][j]
                    if left and right:
                        total = total + left * right
                row.append(total)
            rows.append(row)
        return type(self)(rows, self.nparams)

    def scale(self, factor):
        """ Multiply every entry by a Laurent polynomial or a scalar. """
        return self.map(lambda entry: entry * factor)

    def shift(self, k: int):
        """ Multiply by :math:`t^k`. """
        return self.map(lambda entry: entry.shift(k))

    def conjugate(self):
        return self.map(LaurentPoly.conjugate)

    def substitute_scale(self, value):
        return self.map(lambda entry: entry.substitute_scale(value))

    def evaluate_params(self, point):
        """ Numeric matrix at :math:`a = point`. """
        return self.map(lambda entry: entry.evaluate_params(point))

    def minor(self, i: int, j: int):
        return [[x for c, x in enumerate(row) if c != j]
                for r, row in enumerate(self.rows) if r != i]

    def det(self) -> LaurentPoly:
        return _det(self.rows, self.nparams)

    def adjugate(self):
        """ Transposed cofactor matrix: :math:`M \\cdot adj(M) = det(M)`. """
        n = len(self.rows)
        if n == 1:
            return type(self)([[1]], self.nparams)
        rows = [[_det(self.minor(j, i), self.nparams) * (-1) ** (i + j)
                 for j in range(n)] for i in range(n)]
        return type(self)(rows, self.nparams)

    def is_invertible(self) -> bool:
        """ Invertible over the Laurent ring iff the determinant is a unit. """
        return self.det().is_unit()

    def min_ord(self) -> int:
        """
        :raises ValueError: For the zero matrix
        """
        orders = [entry.ord() for entry in self if entry]
        if not orders:
            raise ValueError('Zero matrix has no order.')
        return min(orders)

    def at_zero(self):
        """ Evaluate at :math:`t = 0`.

        :raises ValueError: If some entry has a pole at zero
        :return: Constant terms, row by row
        :rtype: tuple
        """
        if any(entry and entry.ord() < 0 for entry in self):
            raise ValueError('Matrix has a pole at t = 0.')
        return tuple(tuple(entry.constant_term() for entry in row)
                     for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return '\n'.join(
            '[' + ', '.join(str(entry) for entry in row) + ']'
            for row in self.rows)

    def __repr__(self):
        return '{}({})'.format(type(self).__name__,
                               [[str(x) for x in row] for row in self.rows])


def _det(rows, nparams):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = LaurentPoly.constant(0, nparams)
    for j, entry in enumerate(rows[0]):
        if entry:
            minor = [row[:j] + row[j + 1:] for row in rows[1:]]
            term = entry * _det(minor, nparams)
            total = total - term if j % 2 else total + term
    return total


class LMat2(LaurentMatrix):
    """ Bases: :class:`LaurentMatrix`

    :math:`\\begin{pmatrix} a & b \\\\ c & d \\end{pmatrix}`.
    """
    size = 2

    a = property(lambda self: self.rows[0][0])
    b = property(lambda self: self.rows[0][1])
    c = property(lambda self: self.rows[1][0])
    d = property(lambda self: self.rows[1][1])


class LMat3(LaurentMatrix):
    """ Bases: :class:`LaurentMatrix` """
    size = 3


def proj_eq(first: LaurentMatrix, second: LaurentMatrix) -> bool:
    """ Equality up to a nonzero scalar factor.

    Cross-multiplies against one pivot entry, so no division is needed.

    :rtype: bool
    """
    left, right = list(first), list(second)
    if len(left) != len(right):
        return False
    pivot = next((i for i, entry in enumerate(left) if entry), None)
    if pivot is None:
        return not any(right)
    p, q = left[pivot], right[pivot]
    if not q:
        return False
    return all(x * q == y * p for x, y in zip(left, right))


def j_matrix(nparams: Optional[int] = None) -> LMat2:
    """ :math:`J = \\begin{pmatrix} 0 & t \\\\ 1 & 0 \\end{pmatrix}`. """
    return LMat2([[0, LaurentPoly.t(nparams)], [1, 0]], nparams)


class ProjElem2:
    """ Class of an invertible :class:`LMat2` in :math:`PGL_2`.

    Stores the normalized representative: the unique :math:`t`-power
    multiple with entries in :math:`A[t]` and at least one nonzero constant
    term. Two classes are equal iff their representatives differ by a
    nonzero scalar.

    :param matrix: Any representative
    :type matrix: LMat2 or list[list]
    :raises ValueError: If the determinant is not a unit
    """
    __slots__ = ('rep',)

    def __init__(self, matrix):
        if isinstance(matrix, ProjElem2):
            matrix = matrix.rep
        if not isinstance(matrix, LMat2):
            matrix = LMat2(matrix)
        if not matrix.is_invertible():
            raise ValueError('Matrix is not invertible over the Laurent ring.')
        self.rep = matrix.shift(-matrix.min_ord())

    @classmethod
    def identity(cls, nparams: Optional[int] = None):
        return cls(LMat2.identity(nparams))

    nparams = property(lambda self: self.rep.nparams)
    a = property(lambda self: self.rep.a)
    b = property(lambda self: self.rep.b)
    c = property(lambda self: self.rep.c)
    d = property(lambda self: self.rep.d)

    def __mul__(self, other):
        if not isinstance(other, ProjElem2):
            return NotImplemented
        return ProjElem2(self.rep @ other.rep)

    def inverse(self):
        """ The adjugate represents the inverse class. """
        return ProjElem2(self.rep.adjugate())

    def substitute_scale(self, value):
        return ProjElem2(self.rep.substitute_scale(value))

    def evaluate_params(self, point):
        return ProjElem2(self.rep.evaluate_params(point))

    def __eq__(self, other):
        if not isinstance(other, ProjElem2):
            return NotImplemented
        return proj_eq(self.rep, other.rep)

    __hash__ = None

    def __str__(self):
        return str(self.rep)

    def __repr__(self):
        return 'ProjElem2({!r})'.format(self.rep)


def proj_normalize(matrix: LMat2) -> ProjElem2:
    """ Normalized projective class of an invertible matrix.

    :raises ValueError: If the determinant is not a unit
    :rtype: ProjElem2
    """
    return ProjElem2(matrix)


def _invertible_constant(value) -> bool:
    if isinstance(value, ParamPoly):
        return bool(value) and value.is_constant()
    return bool(value)


def in_G0n(g: ProjElem2, n: int) -> bool:
    """ Membership in the subgroup :math:`G^0_n`.

    The upper-right entry lies in :math:`t^{n+1}A[t]`, the lower-left one
    in :math:`t^n A[t]` and :math:`a(0)d(0)` is invertible in :math:`A`.

    :param g: Normalized class
    :type g: ProjElem2
    :param int n: Surface index
    :rtype: bool
    """
    if n < 0:
        raise ValueError('Surface index must be nonnegative.')

    def divisible(p, k):
        return not p or p.ord() >= k

    if not (divisible(g.b, n + 1) and divisible(g.c, n)):
        return False
    return _invertible_constant(g.a.constant_term() * g.d.constant_term())


@dataclass(frozen=True, eq=False)
class SemidirectElem:
    """ Pair :math:`(M, \\nu)` with :math:`\\nu \\neq 0` acting on the base
    by :math:`t \\mapsto \\nu t`.

    ``x * y`` is :func:`sd_mul`; equality is projective in :attr:`g` and
    exact in :attr:`nu`.
    """
    g: ProjElem2
    nu: object = 1

    def __post_init__(self):
        if not isinstance(self.g, ProjElem2):
            object.__setattr__(self, 'g', ProjElem2(self.g))
        nu = scalar(self.nu)
        if not nu:
            raise ValueError('Base rescaling factor must be nonzero.')
        object.__setattr__(self, 'nu', nu)

    @classmethod
    def identity(cls, nparams: Optional[int] = None):
        return cls(ProjElem2.identity(nparams), 1)

    def __mul__(self, other):
        if not isinstance(other, SemidirectElem):
            return NotImplemented
        return sd_mul(self, other)

    def inverse(self):
        """ :math:`(M^{-1}(\\nu^{-1} t), \\nu^{-1})`. """
        nu_inv = reciprocal(self.nu)
        return SemidirectElem(
            ProjElem2(self.g.rep.adjugate().substitute_scale(nu_inv)), nu_inv)

    def __eq__(self, other):
        if not isinstance(other, SemidirectElem):
            return NotImplemented
        return self.nu == other.nu and self.g == other.g

    __hash__ = None

    def __str__(self):
        return '({!r}, nu={})'.format(self.g.rep, self.nu)


def sd_mul(x: SemidirectElem, y: SemidirectElem) -> SemidirectElem:
    """ :math:`(M', \\nu') \\cdot (M, \\nu) = (M'(\\nu t) M(t), \\nu'\\nu)`,
    re-normalized.

    :rtype: SemidirectElem
    """
    product = x.g.rep.substitute_scale(y.nu) @ y.g.rep
    return SemidirectElem(ProjElem2(product), x.nu * y.nu)


def galois_act(x: SemidirectElem) -> SemidirectElem:
    """ Action of complex conjugation on the semidirect group.

    :math:`(\\begin{pmatrix} a & b \\\\ c & d \\end{pmatrix}, \\nu) \\mapsto
    (\\begin{pmatrix} \\bar\\nu \\bar d & \\bar\\nu t \\bar c \\\\
    t^{-1} \\bar b & \\bar a \\end{pmatrix}, \\bar\\nu)`, re-normalized.
    It is an involution and a group automorphism.

    :rtype: SemidirectElem
    """
    nu_bar = x.nu.conjugate()
    a, b, c, d = (entry.conjugate() for entry in x.g.rep)
    image = LMat2([[d.scale(nu_bar), c.shift(1).scale(nu_bar)],
                   [b.shift(-1), a]], x.g.nparams)
    return SemidirectElem(ProjElem2(image), nu_bar)


def is_cocycle(x: SemidirectElem) -> bool:
    """ Whether :math:`\\sigma(x) \\cdot x` is the identity. """
    return galois_act(x) * x == SemidirectElem.identity(x.g.nparams)


def twisted_conj(phi: SemidirectElem, psi: SemidirectElem) -> SemidirectElem:
    """ Twisted conjugation :math:`\\sigma(\\varphi) \\cdot \\psi \\cdot
    \\varphi^{-1}` of a cocycle; the result is again a cocycle.

    :raises ValueError: If :attr:`psi` is not a cocycle
    :rtype: SemidirectElem
    """
    if not is_cocycle(psi):
        raise ValueError('Twisted conjugation needs a cocycle.')
    return galois_act(phi) * psi * phi.inverse()


def is_gamma_invariant(x: SemidirectElem) -> bool:
    return galois_act(x) == x


def bridge_holds(matrix) -> bool:
    """ Whether :math:`M J M` projectively equals :math:`J`.

    For real-coefficient :math:`M` this is equivalent to
    :math:`(M, 1)` being a cocycle.

    :param matrix: Representative or class
    :type matrix: LMat2 or ProjElem2
    :rtype: bool
    """
    if isinstance(matrix, ProjElem2):
        matrix = matrix.rep
    j = j_matrix(matrix.nparams)
    return proj_eq(matrix @ j @ matrix, j)


def j_element(nparams: Optional[int] = None) -> SemidirectElem:
    """ :math:`(J, 1)`. """
    return SemidirectElem(ProjElem2(j_matrix(nparams)), 1)


def torus_element(lam) -> SemidirectElem:
    """ :math:`(diag(\\lambda, 1), \\lambda\\bar\\lambda)`, Galois
    invariant. """
    lam = scalar(lam)
    return SemidirectElem(ProjElem2(LMat2.diag(lam, 1)),
                          lam * lam.conjugate())


def twisted_torus_element(lam) -> SemidirectElem:
    """ :math:`(\\begin{pmatrix} 0 & \\lambda t \\\\ 1 & 0 \\end{pmatrix},
    \\lambda\\bar\\lambda)`, Galois invariant. """
    lam = scalar(lam)
    matrix = LMat2([[0, LaurentPoly.monomial(1, lam)], [1, 0]])
    return SemidirectElem(ProjElem2(matrix), lam * lam.conjugate())
