""" The unitary Fourier number theoretic transform (FNTT).

For a prime p, a length N dividing p - 1 and a quadratic residue modulo p, and
an element alpha of multiplicative order N, the pair

    X_k = (sqrt N)^-1 * sum_n x_n alpha^(kn)
    x_n = (sqrt N)^-1 * sum_k X_k alpha^(-kn)

is a unitary transform pair over GF(p). The transform is computed as a direct
matrix-vector product with the matrix F stored in the context.
"""

import logging

import numpy

from fourier_codes.core import gf
from fourier_codes.core import matrices


logger = logging.getLogger(__name__)

# Transform products are summed in int64, so N * (p - 1)^2 must stay below this.
INT64_LIMIT = 2 ** 63


class ContextError(ValueError):
    """ Raised for invalid transform parameters and mismatched sequences. """


class Sequence:
    """ An immutable sequence of residues x_0, ..., x_{N-1} in GF(p).

    Sequences carry signals, spectra, codewords, received words and error
    patterns alike. Indexing and iteration yield plain ints in [0, p-1].

    Attributes:
        entries (numpy.ndarray): Read-only int64 array of the values.
        modulus (PrimeModulus): The field of the values.
    """
    def __init__(self, entries, modulus):
        """ Build a sequence from ints, residues or a 1-dimensional array.

        Args:
            entries: The values; they are reduced modulo p.
            modulus (PrimeModulus or int): The field.
        """
        self.modulus = gf.PrimeModulus(modulus)
        self.entries = matrices.as_residue_array(entries, ndim=1) % \
            self.modulus.p
        self.entries.setflags(write=False)

    @staticmethod
    def zeros(n, modulus):
        return Sequence(numpy.zeros(n, dtype=numpy.int64), modulus)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries.tolist())

    def __getitem__(self, i):
        return int(self.entries[i])

    def residue(self, i):
        return gf.Residue(int(self.entries[i]), self.modulus)

    def __eq__(self, other):
        if isinstance(other, Sequence):
            return (self.modulus == other.modulus and
                    len(self) == len(other) and
                    numpy.array_equal(self.entries, other.entries))
        return NotImplemented

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.modulus.p, tuple(self.entries.tolist())))

    def __str__(self):
        return "(" + ", ".join(str(value) for value in self) + ")"

    def __repr__(self):
        return "Sequence(" + str(self) + ", " + repr(self.modulus) + ")"

    def to_list(self):
        return self.entries.tolist()

    def _check_compatible(self, other):
        if self.modulus != other.modulus:
            raise gf.FieldError("Modulus mismatch: " + repr(self.modulus) +
                                " and " + repr(other.modulus) + ".")
        if len(self) != len(other):
            raise ContextError("Length mismatch: " + str(len(self)) +
                               " and " + str(len(other)) + ".")

    def __add__(self, other):
        self._check_compatible(other)
        return Sequence(self.entries + other.entries, self.modulus)

    def __sub__(self, other):
        self._check_compatible(other)
        return Sequence(self.entries - other.entries, self.modulus)

    def __neg__(self):
        return Sequence(-self.entries, self.modulus)

    def scale(self, factor):
        """ Multiply every value by a scalar (int or Residue). """
        return Sequence(self.entries * (int(factor) % self.modulus.p),
                        self.modulus)

    def reversed_index(self):
        """ The sequence y with y_n = x_{(-n) mod N}. """
        return Sequence(numpy.roll(self.entries[::-1], 1), self.modulus)

    def with_entry(self, i, value):
        """ A copy with position ``i`` replaced by ``value``. """
        return self.with_entries({i: value})

    def with_entries(self, replacements):
        """ A copy with several positions replaced.

        Args:
            replacements (dict(int, int)): Position to new value.

        Returns:
            Sequence: The modified copy; this sequence is unchanged.
        """
        array = self.entries.copy()
        for i, value in replacements.items():
            array[i] = int(value) % self.modulus.p
        return Sequence(array, self.modulus)

    def is_zero(self):
        return not self.entries.any()

    def support(self):
        """ The positions holding nonzero values. """
        return numpy.nonzero(self.entries)[0].tolist()

    def hamming_weight(self):
        return int(numpy.count_nonzero(self.entries))

    def distance(self, other):
        """ The Hamming distance to another sequence of the same length. """
        self._check_compatible(other)
        return int(numpy.count_nonzero(self.entries != other.entries))


class FnttContext:
    """ A validated parameter bundle for the unitary FNTT of length N over
    GF(p), together with its transform matrix.

    Attributes:
        modulus (PrimeModulus): The field GF(p).
        n (int): The block length N.
        alpha (Residue): An element of multiplicative order N.
        sqrt_n (Residue): The chosen branch b of sqrt(N).
        inv_sqrt_n (Residue): The inverse of ``sqrt_n``.
        j (Residue): A square root of -1, or None if p = 3 (mod 4).
        half (Residue): The inverse of 2.
        transform_matrix (Matrix): F, with F[k][n] = inv_sqrt_n * alpha^(kn).
        inverse_matrix (Matrix): The inverse transform matrix,
            inv_sqrt_n * alpha^(-kn).
    """
    def __init__(self, modulus, n, alpha, sqrt_n, j=None):
        """ Validate the parameters and build the transform matrices.

        Use ``build_context`` to obtain canonical defaults.

        Raises:
            ContextError: If any parameter violates the transform conditions.
        """
        self.modulus = gf.PrimeModulus(modulus)
        self.n = n

        check_params(self.modulus, n)

        self.alpha = self.modulus(alpha)
        if not gf.has_order(self.alpha, n):
            raise ContextError(
                "alpha = " + str(self.alpha) + " does not have multiplicative "
                "order " + str(n) + " in " + repr(self.modulus) + ".")

        self.sqrt_n = self.modulus(sqrt_n)
        if self.sqrt_n * self.sqrt_n != n:
            raise ContextError(
                str(self.sqrt_n) + " is not a square root of N = " + str(n) +
                " in " + repr(self.modulus) + ".")
        self.inv_sqrt_n = self.sqrt_n.inverse()

        if j is not None:
            j = self.modulus(j)
            if self.modulus.p % 4 != 1 or j * j != self.minus_one:
                raise ContextError(
                    str(j) + " is not a square root of -1 in " +
                    repr(self.modulus) + ".")
        self.j = j

        self.half = self.modulus(2).inverse()

        p = self.modulus.p
        exponents = numpy.outer(numpy.arange(n), numpy.arange(n)) % n
        powers = numpy.array([pow(self.alpha.value, e, p) for e in range(n)],
                             dtype=numpy.int64)

        self.transform_matrix = matrices.Matrix(
            powers[exponents] * self.inv_sqrt_n.value, self.modulus)
        self.inverse_matrix = matrices.Matrix(
            powers[(-exponents) % n] * self.inv_sqrt_n.value, self.modulus)

    @property
    def p(self):
        return self.modulus.p

    @property
    def j_available(self):
        return self.j is not None

    @property
    def minus_one(self):
        return self.modulus(-1)

    def __eq__(self, other):
        if isinstance(other, FnttContext):
            return (self.modulus == other.modulus and self.n == other.n and
                    self.alpha == other.alpha and
                    self.sqrt_n == other.sqrt_n and self.j == other.j)
        return NotImplemented

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.p, self.n, self.alpha.value, self.sqrt_n.value,
                     None if self.j is None else self.j.value))

    def __repr__(self):
        return ("FnttContext(p=" + str(self.p) + ", N=" + str(self.n) +
                ", alpha=" + str(self.alpha) + ", sqrtN=" + str(self.sqrt_n) +
                ", j=" + str(self.j) + ")")

    def sequence(self, values):
        """ Build a sequence in this context's field, checking its length. """
        x = Sequence(values, self.modulus)
        self.check_sequence(x)
        return x

    def zeros(self):
        return Sequence.zeros(self.n, self.modulus)

    def check_sequence(self, x):
        if x.modulus != self.modulus:
            raise ContextError("Sequence over " + repr(x.modulus) +
                               " used with a transform over " +
                               repr(self.modulus) + ".")
        if len(x) != self.n:
            raise ContextError("Sequence of length " + str(len(x)) +
                               " used with a transform of length " +
                               str(self.n) + ".")

    def power_matrix(self, exponent):
        """ F raised to ``exponent``. """
        return self.transform_matrix.power(exponent)


def check_params(modulus, n):
    """ Check the transform conditions, naming the first one violated.

    Raises:
        ContextError: If N < 2, N does not divide p - 1, or N is not a
            quadratic residue modulo p, or if N * (p - 1)^2 overflows
            the int64 matrix arithmetic.
    """
    p = int(modulus)
    if n < 2:
        raise ContextError("Block length N must be at least 2, got " +
                           str(n) + ".")
    if (p - 1) % n != 0:
        raise ContextError("N = " + str(n) + " does not divide p - 1 = " +
                           str(p - 1) + ": no element of order N exists.")
    if not gf.is_valid_fntt_params(p, n):
        raise ContextError("N = " + str(n) + " is not a quadratic residue "
                           "modulo p = " + str(p) + ": sqrt(N) does not "
                           "exist.")
    if n * (p - 1) ** 2 >= INT64_LIMIT:
        raise ContextError("N * (p - 1)^2 = " + str(n * (p - 1) ** 2) +
                           " exceeds the int64 range of the transform "
                           "arithmetic for p = " + str(p) + ", N = " + str(n) +
                           ".")


def build_context(modulus, n, alpha=None, sqrt_branch=None, j_branch=None):
    """ Build a transform context with canonical defaults.

    The defaults are the smallest element of order N, and for sqrt(N) and j
    the square root in [1, (p-1)/2]. Explicit values override the defaults and
    are validated.

    Args:
        modulus (PrimeModulus or int): The field GF(p).
        n (int): The block length N.
        alpha (int, optional): An element of order N.
        sqrt_branch (int, optional): The square root of N to use.
        j_branch (int, optional): The square root of -1 to use.

    Returns:
        FnttContext: The validated context. Its ``j`` is None when
        p = 3 (mod 4).

    Raises:
        ContextError: If the parameters violate the transform conditions.
    """
    modulus = gf.PrimeModulus(modulus)
    check_params(modulus, n)

    if alpha is None:
        alpha = gf.element_of_order(n, modulus)

    if sqrt_branch is None:
        sqrt_branch = gf.sqrt_mod(modulus(n))[0]

    if modulus.p % 4 == 1:
        if j_branch is None:
            j_branch = gf.sqrt_mod(modulus(-1))[0]
    elif j_branch is not None:
        raise ContextError("-1 has no square root in " + repr(modulus) +
                           " (p = 3 mod 4), so no j can be chosen.")
    else:
        logger.debug("No j in %r: eigenvalues +-j are unavailable.", modulus)

    return FnttContext(modulus, n, alpha, sqrt_branch, j_branch)


def forward(ctx, x):
    """ Compute the spectrum X = F x.

    Raises:
        ContextError: If ``x`` does not fit the context.
    """
    ctx.check_sequence(x)
    return Sequence(ctx.transform_matrix @ x.entries, ctx.modulus)


def inverse(ctx, X):
    """ Recover x from its spectrum X.

    Raises:
        ContextError: If ``X`` does not fit the context.
    """
    ctx.check_sequence(X)
    return Sequence(ctx.inverse_matrix @ X.entries, ctx.modulus)


def _half(x):
    return x.modulus(2).inverse()


def even_part(x):
    """ E(x)_i = (x_i + x_{(N-i) mod N}) / 2. """
    return (x + x.reversed_index()).scale(_half(x))


def odd_part(x):
    """ O(x)_i = (x_i - x_{(N-i) mod N}) / 2. """
    return (x - x.reversed_index()).scale(_half(x))


def is_even(x):
    """ Whether x_i = x_{(N-i) mod N} for every i. """
    return x == x.reversed_index()


def is_odd(x):
    """ Whether x_i = -x_{(N-i) mod N} for every i. """
    return x == -x.reversed_index()
