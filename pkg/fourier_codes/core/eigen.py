""" Eigenvalues and eigensequences of the unitary FNTT.

Since F^4 = I, the eigenvalues of the transform are the fourth roots of unity
+1, -1, +j and -j, where j^2 = -1. Eigensequences for +-1 are even and those
for +-j are odd. Even and odd parts of arbitrary sequences generate
eigensequences, and the eigenvalue multiplicities follow a fixed pattern in
N mod 4 that determines the dimension of every Fourier code.
"""

import enum
import logging

from fourier_codes.core import fntt
from fourier_codes.core import matrices


logger = logging.getLogger(__name__)


class Symbol(enum.Enum):
    """ The four eigenvalue symbols. """
    PLUS_ONE = "+1"
    MINUS_ONE = "-1"
    PLUS_J = "+j"
    MINUS_J = "-j"

    @property
    def is_imaginary(self):
        return self in (Symbol.PLUS_J, Symbol.MINUS_J)

    @property
    def sign(self):
        return 1 if self in (Symbol.PLUS_ONE, Symbol.PLUS_J) else -1

    @property
    def partner(self):
        """ The symbol with the opposite sign. """
        return _PARTNERS[self]

    @staticmethod
    def parse(text):
        """ Parse '+1', '1', '-1', '+j', 'j' or '-j' (case-insensitive).

        Raises:
            ValueError: For any other text.
        """
        normalized = text.strip().lower()
        if normalized in ("1", "j"):
            normalized = "+" + normalized
        for symbol in Symbol:
            if symbol.value == normalized:
                return symbol
        raise ValueError("Unknown eigenvalue '" + text + "': use one of +1, "
                         "-1, +j, -j.")


_PARTNERS = {
    Symbol.PLUS_ONE: Symbol.MINUS_ONE,
    Symbol.MINUS_ONE: Symbol.PLUS_ONE,
    Symbol.PLUS_J: Symbol.MINUS_J,
    Symbol.MINUS_J: Symbol.PLUS_J,
}

# Table column order: 1, -1, -j, j
TABLE_ORDER = (Symbol.PLUS_ONE, Symbol.MINUS_ONE, Symbol.MINUS_J,
               Symbol.PLUS_J)


class Eigenvalue:
    """ One of the four fourth roots of unity, resolved to a residue.

    Attributes:
        symbol (Symbol): Which root this is.
        residue (Residue): Its value in GF(p). For +-j the value is derived
            from the context's j.
    """
    def __init__(self, symbol, residue):
        """ Pair a symbol with its residue, checking that they agree.

        Raises:
            ValueError: If the residue is not the root the symbol names.
        """
        square = residue * residue
        if symbol.is_imaginary and square != -1:
            raise ValueError(str(residue) + " is not a square root of -1.")
        if not symbol.is_imaginary and residue != symbol.sign:
            raise ValueError(str(residue) + " is not " + symbol.value + ".")

        self.symbol = symbol
        self.residue = residue

    @staticmethod
    def from_symbol(ctx, symbol):
        """ Resolve a symbol in a context.

        Raises:
            ContextError: If +-j is requested but p = 3 (mod 4).
        """
        if symbol.is_imaginary:
            if not ctx.j_available:
                raise fntt.ContextError(
                    "Eigenvalue " + symbol.value + " needs a square root of "
                    "-1, which does not exist in " + repr(ctx.modulus) +
                    " (p = 3 mod 4).")
            return Eigenvalue(symbol, ctx.j * symbol.sign)
        return Eigenvalue(symbol, ctx.modulus(symbol.sign))

    @staticmethod
    def parse(ctx, text):
        return Eigenvalue.from_symbol(ctx, Symbol.parse(text))

    @staticmethod
    def all_for(ctx):
        """ All eigenvalues realizable in a context, in table order. """
        return [Eigenvalue.from_symbol(ctx, symbol) for symbol in TABLE_ORDER
                if ctx.j_available or not symbol.is_imaginary]

    @property
    def symmetry_sign(self):
        """ +1 if eigensequences are even, -1 if they are odd. """
        return -1 if self.symbol.is_imaginary else 1

    def __eq__(self, other):
        if isinstance(other, Eigenvalue):
            return self.symbol == other.symbol and self.residue == other.residue
        return NotImplemented

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.symbol, self.residue))

    def __str__(self):
        return self.symbol.value

    def __repr__(self):
        return "Eigenvalue(" + self.symbol.value + " = " + str(self.residue) + \
            " mod " + str(self.residue.modulus.p) + ")"


def is_eigensequence(ctx, x, lam):
    """ Decide whether F x = lambda x.

    Args:
        ctx (FnttContext): The transform.
        x (Sequence): The candidate sequence.
        lam (Eigenvalue): The eigenvalue.

    Returns:
        True if ``x`` is an eigensequence for ``lam``, False otherwise.
    """
    return fntt.forward(ctx, x) == x.scale(lam.residue)


def make_even_eigensequence(ctx, x, sign):
    """ Generate an eigensequence for +1 or -1 from an arbitrary sequence.

    The result is y = E(x) + E(X) for sign = +1 and y = E(x) - E(X) for
    sign = -1, where X is the spectrum of x. For even x this is x +- X.

    Args:
        ctx (FnttContext): The transform.
        x (Sequence): Any sequence of length N.
        sign (int): +1 or -1, the eigenvalue to generate for.

    Returns:
        Sequence: An eigensequence (possibly zero) with eigenvalue ``sign``.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1, got " + str(sign) + ".")

    spectrum = fntt.forward(ctx, x)
    y = fntt.even_part(x) + fntt.even_part(spectrum).scale(sign)

    symbol = Symbol.PLUS_ONE if sign == 1 else Symbol.MINUS_ONE
    assert is_eigensequence(ctx, y, Eigenvalue.from_symbol(ctx, symbol))

    return y


def make_odd_eigensequence(ctx, x, sign):
    """ Generate an eigensequence for +j or -j from an arbitrary sequence.

    The result is y = O(x) - j O(X) for sign = +1 (eigenvalue +j) and
    y = O(x) + j O(X) for sign = -1 (eigenvalue -j).

    Args:
        ctx (FnttContext): The transform; it must provide j.
        x (Sequence): Any sequence of length N.
        sign (int): +1 or -1, selecting +j or -j.

    Returns:
        Sequence: An eigensequence (possibly zero) with eigenvalue sign * j.

    Raises:
        ContextError: If the context has no j.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1, got " + str(sign) + ".")

    symbol = Symbol.PLUS_J if sign == 1 else Symbol.MINUS_J
    lam = Eigenvalue.from_symbol(ctx, symbol)

    spectrum = fntt.forward(ctx, x)
    y = fntt.odd_part(x) - fntt.odd_part(spectrum).scale(lam.residue)

    assert is_eigensequence(ctx, y, lam)

    return y


def multiplicity(n, symbol):
    """ The eigenvalue multiplicity from the N mod 4 pattern.

    With N = 4m + s the multiplicities of (1, -1, -j, j) are
    (m+1, m, m, m-1) for s = 0, (m+1, m, m, m) for s = 1,
    (m+1, m+1, m, m) for s = 2 and (m+1, m+1, m+1, m) for s = 3.

    Args:
        n (int): The transform length, at least 2.
        symbol (Symbol): The eigenvalue.

    Returns:
        int: The multiplicity.
    """
    if n < 2:
        raise ValueError("N must be at least 2, got " + str(n) + ".")

    m, s = divmod(n, 4)
    table = {
        0: (m + 1, m, m, m - 1),
        1: (m + 1, m, m, m),
        2: (m + 1, m + 1, m, m),
        3: (m + 1, m + 1, m + 1, m),
    }
    value = table[s][TABLE_ORDER.index(symbol)]

    assert value >= 0
    return max(value, 0)


def branch_swapped_multiplicity(n, symbol):
    """ The multiplicity when the other branch of sqrt(N) is used.

    Choosing p - b instead of b negates F, which interchanges the +1 and -1
    columns and the +j and -j columns of the multiplicity pattern.
    """
    return multiplicity(n, symbol.partner)


def eigenspace_dimension(ctx, lam):
    """ The dimension N - rank(F - lambda I) of an eigenspace. """
    shifted = ctx.transform_matrix - \
        matrices.Matrix.identity(ctx.n, ctx.modulus).scale(lam.residue)
    return ctx.n - shifted.rank()


PRINTED = "printed"
INTERCHANGED = "interchanged"
EITHER = "either"
MISMATCH = "mismatch"


def _orientation(computed, n, first, second):
    expected = (multiplicity(n, first), multiplicity(n, second))
    if computed == expected and expected[0] == expected[1]:
        return EITHER
    if computed == expected:
        return PRINTED
    if computed == expected[::-1]:
        return INTERCHANGED
    return MISMATCH


class MultiplicityProfile:
    """ The computed eigenspace dimensions of a context compared with the
    N mod 4 pattern.

    The (+1, -1) pair and the (+j, -j) pair are oriented independently: a pair
    is PRINTED if it matches the pattern's column order, INTERCHANGED if it
    matches with the two columns swapped, EITHER if both columns agree and
    MISMATCH otherwise.

    Attributes:
        n (int): The transform length.
        dimensions (dict(Symbol, int)): Computed dimension per symbol; the
            imaginary symbols are missing when the context has no j.
        real_orientation (str): Orientation of the (+1, -1) pair.
        imaginary_orientation (str): Orientation of the (+j, -j) pair, or None
            when the context has no j.
    """
    def __init__(self, n, dimensions):
        self.n = n
        self.dimensions = dimensions

        self.real_orientation = _orientation(
            (dimensions[Symbol.PLUS_ONE], dimensions[Symbol.MINUS_ONE]),
            n, Symbol.PLUS_ONE, Symbol.MINUS_ONE)

        if Symbol.PLUS_J in dimensions:
            self.imaginary_orientation = _orientation(
                (dimensions[Symbol.MINUS_J], dimensions[Symbol.PLUS_J]),
                n, Symbol.MINUS_J, Symbol.PLUS_J)
        else:
            self.imaginary_orientation = None

    @property
    def total(self):
        return sum(self.dimensions.values())

    @property
    def complete(self):
        return len(self.dimensions) == 4

    def matches_pattern(self):
        """ Whether every pair matches the pattern in some orientation. """
        return MISMATCH not in (self.real_orientation,
                                self.imaginary_orientation)

    def matches_uniformly(self):
        """ Whether the dimensions equal ``multiplicity`` or
        ``branch_swapped_multiplicity`` for all computed symbols at once. """
        return any(
            all(self.dimensions[symbol] == function(self.n, symbol)
                for symbol in self.dimensions)
            for function in (multiplicity, branch_swapped_multiplicity))

    def column_symbol(self, column):
        """ The symbol whose code belongs under a pattern column.

        For an interchanged pair, the column labelled +1 holds the -1 code and
        so on.

        Args:
            column (Symbol): The column label.

        Returns:
            Symbol: The eigenvalue whose dimension the column reports.
        """
        if column.is_imaginary:
            orientation = self.imaginary_orientation
        else:
            orientation = self.real_orientation

        if orientation == INTERCHANGED:
            return column.partner
        return column


def multiplicity_profile(ctx):
    """ Compute all eigenspace dimensions of a context.

    Returns:
        MultiplicityProfile: The dimensions and their orientation.
    """
    dimensions = {}
    for lam in Eigenvalue.all_for(ctx):
        dimensions[lam.symbol] = eigenspace_dimension(ctx, lam)

    profile = MultiplicityProfile(ctx.n, dimensions)

    logger.debug("Dimensions for %r: %s (real pair %s, imaginary pair %s).",
                 ctx, {s.value: d for s, d in dimensions.items()},
                 profile.real_orientation, profile.imaginary_orientation)

    return profile
