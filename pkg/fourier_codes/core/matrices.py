""" Matrices over GF(p).

Entries are held in an int64 numpy array reduced modulo p. With p below 10^6
and dimensions of a few dozen, every intermediate product and sum stays far
below 2^63, so all arithmetic is exact.
"""

import numpy

from fourier_codes.core import gf


def as_residue_array(values, ndim=None):
    """ Convert nested lists of ints or residues to an int64 numpy array.

    Args:
        values: Nested lists (or an array) of ints or Residues.
        ndim (int, optional): If set, the required number of dimensions.

    Returns:
        numpy.ndarray: The values as int64 (not yet reduced).

    Raises:
        ValueError: If the shape is ragged or has the wrong dimension.
    """
    if isinstance(values, numpy.ndarray) and values.dtype != object:
        array = values.astype(numpy.int64)
    else:
        try:
            array = numpy.array(values, dtype=object)
            array = array.astype(numpy.int64)
        except (TypeError, ValueError) as e:
            raise ValueError("Not a rectangular array of integers: " +
                             str(e) + ".")

    if ndim is not None and array.ndim != ndim:
        raise ValueError("Expected " + str(ndim) + " dimensions, got " +
                         str(array.ndim) + ".")

    return array


class Matrix:
    """ An immutable matrix with entries in GF(p).

    Attributes:
        rows (int): Number of rows.
        cols (int): Number of columns.
        entries (numpy.ndarray): Read-only row-major int64 array of shape
            (rows, cols), every entry in [0, p-1].
        modulus (PrimeModulus): The field of the entries.
    """
    def __init__(self, entries, modulus):
        """ Build a matrix from nested lists, residues or an array.

        Args:
            entries: A rectangular nested list or a 2-dimensional array.
            modulus (PrimeModulus or int): The field.
        """
        self.modulus = gf.PrimeModulus(modulus)

        array = as_residue_array(entries)
        if array.ndim == 1 and array.size == 0:
            array = array.reshape(0, 0)
        if array.ndim != 2:
            raise ValueError("A matrix needs two dimensions, got " +
                             str(array.ndim) + ".")

        self.entries = array % self.modulus.p
        self.entries.setflags(write=False)
        self.rows, self.cols = self.entries.shape

    @staticmethod
    def identity(n, modulus):
        return Matrix(numpy.eye(n, dtype=numpy.int64), modulus)

    @staticmethod
    def zeros(rows, cols, modulus):
        return Matrix(numpy.zeros((rows, cols), dtype=numpy.int64), modulus)

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return (self.modulus == other.modulus and
                    self.entries.shape == other.entries.shape and
                    numpy.array_equal(self.entries, other.entries))
        return NotImplemented

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return "Matrix(" + repr(self.to_lists()) + ", " + \
            str(self.modulus.p) + ")"

    def __str__(self):
        return self.get_string_representation()

    def to_lists(self):
        return self.entries.tolist()

    def entry(self, i, j):
        return gf.Residue(int(self.entries[i, j]), self.modulus)

    def row(self, i):
        return self.entries[i].tolist()

    def _check_field(self, other):
        if self.modulus != other.modulus:
            raise gf.FieldError("Modulus mismatch: " + repr(self.modulus) +
                                " and " + repr(other.modulus) + ".")

    def __add__(self, other):
        self._check_field(other)
        return Matrix(self.entries + other.entries, self.modulus)

    def __sub__(self, other):
        self._check_field(other)
        return Matrix(self.entries - other.entries, self.modulus)

    def __neg__(self):
        return Matrix(-self.entries, self.modulus)

    def scale(self, factor):
        """ Multiply every entry by a scalar (int or Residue). """
        return Matrix(self.entries * (int(factor) % self.modulus.p),
                      self.modulus)

    def __matmul__(self, other):
        """ Matrix-matrix or matrix-vector product.

        A Matrix operand gives a Matrix; a 1-dimensional array gives a reduced
        1-dimensional array.
        """
        p = self.modulus.p
        if isinstance(other, Matrix):
            self._check_field(other)
            if self.cols != other.rows:
                raise ValueError("Shape mismatch: " + str(self.entries.shape) +
                                 " @ " + str(other.entries.shape) + ".")
            return Matrix(self.entries.dot(other.entries) % p, self.modulus)

        vector = as_residue_array(other, ndim=1) % p
        if vector.shape[0] != self.cols:
            raise ValueError("Shape mismatch: " + str(self.entries.shape) +
                             " @ (" + str(vector.shape[0]) + ",).")
        return self.entries.dot(vector) % p

    def transpose(self):
        return Matrix(self.entries.T, self.modulus)

    @property
    def T(self):
        return self.transpose()

    def power(self, exponent):
        """ Compute the matrix power by square-and-multiply.

        Args:
            exponent (int): A non-negative exponent.

        Returns:
            Matrix: This matrix raised to ``exponent``.
        """
        if self.rows != self.cols:
            raise ValueError("Only square matrices have powers.")
        if exponent < 0:
            raise ValueError("Exponent must be non-negative.")

        result = Matrix.identity(self.rows, self.modulus)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1

        return result

    def columns(self, start, stop=None):
        """ The submatrix of columns start..stop-1. """
        return Matrix(self.entries[:, start:stop], self.modulus)

    def take_rows(self, start, stop=None):
        return Matrix(self.entries[start:stop, :], self.modulus)

    @staticmethod
    def hstack(left, right):
        left._check_field(right)
        return Matrix(numpy.hstack((left.entries, right.entries)),
                      left.modulus)

    def is_zero(self):
        return not self.entries.any()

    def rref(self):
        """ Compute the reduced row echelon form by Gauss-Jordan elimination.

        Rows may be swapped; columns are never permuted.

        Returns:
            A tuple consisting of
                - **reduced** (*Matrix*): The reduced row echelon form, with the
                  same shape as this matrix (zero rows at the bottom),
                - **pivots** (*list(int)*): The pivot column of each nonzero
                  row, in increasing order.
        """
        p = self.modulus.p
        m = self.entries.copy()
        pivots = []
        row = 0

        for col in range(self.cols):
            if row == self.rows:
                break

            nonzero = numpy.nonzero(m[row:, col])[0]
            if len(nonzero) == 0:
                continue

            pivot_row = row + int(nonzero[0])
            if pivot_row != row:
                m[[row, pivot_row]] = m[[pivot_row, row]]

            m[row] = m[row] * pow(int(m[row, col]), p - 2, p) % p

            factors = m[:, col].copy()
            factors[row] = 0
            m = (m - numpy.outer(factors, m[row])) % p

            pivots.append(col)
            row += 1

        return Matrix(m, self.modulus), pivots

    def rank(self):
        return len(self.rref()[1])

    def get_string_representation(self):
        """ Render the matrix as right-aligned columns, one row per line. """
        if self.rows == 0 or self.cols == 0:
            return ""

        width = max(len(str(value)) for value in self.entries.flat)

        return "\n".join(
            " ".join(str(value).rjust(width) for value in row)
            for row in self.entries.tolist())
