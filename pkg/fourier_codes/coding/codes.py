""" Construct Fourier codes from the eigenstructure of the FNTT.

The codewords of the Fourier code for an eigenvalue lambda are the
eigensequences of F for lambda, so F - lambda I acts as a parity-check matrix.
Its reduced row echelon form is the parity-check matrix H = [I | P] in
standard form, and G = [-P^T | I] generates the code systematically: the last
k symbols of a codeword are the message.
"""

import json
import logging

import numpy

from fourier_codes.core import eigen
from fourier_codes.core import fntt
from fourier_codes.core import gf
from fourier_codes.core import matrices


logger = logging.getLogger(__name__)

# Largest p^k dmin_exact will enumerate.
MAX_SEARCH_SPACE = 10 ** 7
# Upper end of the search in smallest_valid_prime.
PRIME_SEARCH_LIMIT = 10 ** 6
# Messages per numpy batch during enumeration.
DEFAULT_BATCH = 2 ** 15

DOCUMENT_KEYS = ("p", "n", "k", "lambda", "alpha", "sqrtN", "j", "H", "G",
                 "d_bound", "d_exact")


class ConstructionError(ValueError):
    """ Raised when no code in standard form can be built.

    Attributes:
        pivots (list(int)): The pivot columns of the reduced F - lambda I, if
            the failure concerns the echelon form.
    """
    def __init__(self, message, pivots=None):
        super(ConstructionError, self).__init__(message)
        self.pivots = pivots


class EmptyCodeError(ConstructionError):
    """ Raised when the eigenvalue has multiplicity 0, so k = 0. """


class SearchSpaceError(ValueError):
    """ Raised when an exhaustive search would exceed its limit. """


def distance_bound(n, k, symbol):
    """ Upper bound on the minimum distance of a Fourier code.

    For lambda = +-1 the bound is n - 2k + 2. For lambda = +-j codewords are
    odd, so x_0 = 0 (and x_{n/2} = 0 for even n) and the bound drops to
    n - 2k for even n and n - 2k + 1 for odd n.

    Args:
        n (int): Block length.
        k (int): Dimension, at least 1.
        symbol (Symbol): The eigenvalue of the code.

    Returns:
        int: The bound.
    """
    if not symbol.is_imaginary:
        return n - 2 * k + 2
    elif n % 2 == 0:
        return n - 2 * k
    else:
        return n - 2 * k + 1


class FourierCode:
    """ A Fourier code: the eigensequences of F for one eigenvalue.

    Attributes:
        ctx (FnttContext): The transform the code is built from.
        lam (Eigenvalue): The eigenvalue.
        n (int): Block length (= N).
        k (int): Dimension (= multiplicity of ``lam``).
        parity_check (Matrix): H = [I_{n-k} | P], (n-k) x n.
        generator (Matrix): G = [-P^T | I_k], k x n.
        d_bound (int): Upper bound on the minimum distance.
        d_exact (int): The minimum distance if it has been computed, else
            None.
    """
    def __init__(self, ctx, lam, parity_check, generator, d_exact=None):
        """ Assemble a code from its matrices.

        Use ``construct`` to build a code from a context.

        Raises:
            ConstructionError: If G H^T is not zero or the shapes disagree.
        """
        self.ctx = ctx
        self.lam = lam
        self.n = ctx.n
        self.k = generator.rows
        self.parity_check = parity_check
        self.generator = generator

        if (parity_check.cols != self.n or generator.cols != self.n or
                parity_check.rows != self.n - self.k):
            raise ConstructionError("H and G do not fit a code of length " +
                                    str(self.n) + ".")
        if not (generator @ parity_check.T).is_zero():
            raise ConstructionError("G H^T is not zero.")

        self.d_bound = dmin_bound(self)
        self.d_exact = d_exact

    @property
    def H(self):
        return self.parity_check

    @property
    def G(self):
        return self.generator

    @property
    def redundancy(self):
        """ The submatrix P of H = [I | P]. """
        return self.parity_check.columns(self.n - self.k)

    @property
    def rate(self):
        return self.k / self.n

    @property
    def modulus(self):
        return self.ctx.modulus

    def with_exact_distance(self, d_exact):
        return FourierCode(self.ctx, self.lam, self.parity_check,
                           self.generator, d_exact)

    def __eq__(self, other):
        if isinstance(other, FourierCode):
            return (self.ctx == other.ctx and self.lam == other.lam and
                    self.parity_check == other.parity_check and
                    self.generator == other.generator and
                    self.d_bound == other.d_bound and
                    self.d_exact == other.d_exact)
        return NotImplemented

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def name(self):
        """ A short name such as 'F^+1(7, 2, 5)'; an unknown distance is
        shown as its bound, 'd<=5'. """
        if self.d_exact is None:
            distance = "d<=" + str(self.d_bound)
        else:
            distance = str(self.d_exact)
        return "F^" + str(self.lam) + "(" + str(self.n) + ", " + \
            str(self.k) + ", " + distance + ")"

    def __repr__(self):
        return self.name() + " over " + repr(self.modulus)

    def syndrome_vector(self, x):
        """ The parity-check syndrome H x^T as a sequence of length n - k. """
        self.ctx.check_sequence(x)
        return fntt.Sequence(self.parity_check @ x.entries, self.modulus)

    def is_codeword(self, x):
        return self.syndrome_vector(x).is_zero()

    def get_string_representation(self):
        """ A human-readable listing of the parameters and both matrices. """
        ctx = self.ctx
        lines = [
            self.name() + " over " + repr(self.modulus),
            "lambda = " + str(self.lam) + " = " + str(self.lam.residue) +
            ", alpha = " + str(ctx.alpha) + ", sqrtN = " + str(ctx.sqrt_n) +
            ", j = " + ("-" if ctx.j is None else str(ctx.j)),
            "n = " + str(self.n) + ", k = " + str(self.k) + ", d_bound = " +
            str(self.d_bound) + ", d_exact = " +
            ("-" if self.d_exact is None else str(self.d_exact)),
            "H =",
            self.parity_check.get_string_representation(),
            "G =",
            self.generator.get_string_representation(),
        ]
        return "\n".join(lines)

    def to_document(self):
        """ The structured form: a dict with exactly ``DOCUMENT_KEYS``. """
        ctx = self.ctx
        return {
            "p": ctx.p,
            "n": self.n,
            "k": self.k,
            "lambda": str(self.lam),
            "alpha": ctx.alpha.value,
            "sqrtN": ctx.sqrt_n.value,
            "j": None if ctx.j is None else ctx.j.value,
            "H": self.parity_check.to_lists(),
            "G": self.generator.to_lists(),
            "d_bound": self.d_bound,
            "d_exact": self.d_exact,
        }

    def to_json(self):
        return json.dumps(self.to_document(), sort_keys=True)

    @staticmethod
    def from_document(document):
        """ Rebuild a code from its structured form.

        The code is reconstructed from the stored parameters and compared with
        the stored matrices and bound.

        Args:
            document (dict or str): The structured form, or its JSON text.

        Returns:
            FourierCode: The rebuilt code.

        Raises:
            ValueError: If keys are missing or extra, or the stored matrices
                disagree with the reconstruction.
        """
        if isinstance(document, str):
            document = json.loads(document)

        if set(document) != set(DOCUMENT_KEYS):
            raise ValueError("Structured code must have exactly the keys " +
                             ", ".join(DOCUMENT_KEYS) + ".")

        ctx = fntt.build_context(document["p"], document["n"],
                                 alpha=document["alpha"],
                                 sqrt_branch=document["sqrtN"],
                                 j_branch=document["j"])
        lam = eigen.Eigenvalue.parse(ctx, document["lambda"])
        code = construct(ctx, lam)

        if (code.k != document["k"] or
                code.parity_check.to_lists() != document["H"] or
                code.generator.to_lists() != document["G"] or
                code.d_bound != document["d_bound"]):
            raise ValueError("Stored matrices do not match the code rebuilt "
                             "from p, n, alpha, sqrtN, j and lambda.")

        if document["d_exact"] is not None:
            code = code.with_exact_distance(document["d_exact"])

        return code


def construct(ctx, lam, exact=False):
    """ Build the Fourier code of an eigenvalue.

    F - lambda I is brought to reduced row echelon form without column
    permutations. Its nonzero rows are H = [I_{n-k} | P]; G = [-P^T | I_k].

    Args:
        ctx (FnttContext): The transform.
        lam (Eigenvalue): The eigenvalue; +-j requires the context's j.
        exact (bool): If True, also compute the exact minimum distance.

    Returns:
        FourierCode: The constructed code.

    Raises:
        EmptyCodeError: If the eigenvalue does not occur (k = 0).
        ConstructionError: If the pivots are not the leading columns.
    """
    n = ctx.n
    shifted = ctx.transform_matrix - \
        matrices.Matrix.identity(n, ctx.modulus).scale(lam.residue)

    reduced, pivots = shifted.rref()
    rank = len(pivots)
    k = n - rank

    if k == 0:
        raise EmptyCodeError(
            "Eigenvalue " + str(lam) + " = " + str(lam.residue) + " does not "
            "occur for N = " + str(n) + " over " + repr(ctx.modulus) +
            ": the code is empty.", pivots)

    if pivots != list(range(rank)):
        raise ConstructionError(
            "Pivot columns " + str(pivots) + " of F - lambda I are not the "
            "leading " + str(rank) + " columns: no standard form H = [I | P].",
            pivots)

    parity_check = reduced.take_rows(0, rank)
    p_part = parity_check.columns(rank)
    generator = matrices.Matrix.hstack(
        -p_part.T, matrices.Matrix.identity(k, ctx.modulus))

    code = FourierCode(ctx, lam, parity_check, generator)

    for i in range(k):
        assert eigen.is_eigensequence(
            ctx, fntt.Sequence(generator.row(i), ctx.modulus), lam)

    logger.debug("Constructed %r.", code)

    if exact:
        code = code.with_exact_distance(dmin_exact(code))

    return code


def dmin_bound(code):
    """ The distance bound of a code, see ``distance_bound``. """
    return distance_bound(code.n, code.k, code.lam.symbol)


def dmin_exact(code, max_search_space=MAX_SEARCH_SPACE, batch=DEFAULT_BATCH):
    """ Compute the minimum distance by enumerating the code.

    Weight is invariant under nonzero scaling, so only messages whose first
    nonzero symbol is 1 are enumerated, in numpy batches.

    Args:
        code (FourierCode): The code.
        max_search_space (int): Largest admissible p^k.
        batch (int): Messages per batch.

    Returns:
        int: The minimum Hamming weight of a nonzero codeword.

    Raises:
        SearchSpaceError: If p^k exceeds ``max_search_space``.
    """
    p, k = code.ctx.p, code.k
    if p ** k > max_search_space:
        raise SearchSpaceError(
            "Enumerating " + str(p) + "^" + str(k) + " messages exceeds the "
            "limit of " + str(max_search_space) + ".")

    logger.info("Enumerating %d codewords of %r.", (p ** k - 1) // (p - 1),
                code)

    rows = code.generator.entries
    best = code.n

    for lead in range(k):
        free = k - 1 - lead
        count = p ** free
        place_values = p ** numpy.arange(free - 1, -1, -1, dtype=numpy.int64)

        for start in range(0, count, batch):
            indices = numpy.arange(start, min(start + batch, count),
                                   dtype=numpy.int64)
            tails = (indices[:, None] // place_values) % p
            words = (rows[lead] + tails.dot(rows[lead + 1:])) % p
            best = min(best, int(numpy.count_nonzero(words, axis=1).min()))

    return best


def ds_check(code):
    """ Look for the secondary diagonal D_s in P.

    D_s is a k x k block of consecutive rows of P whose anti-diagonal holds m
    and whose other entries are zero, with m = p - 1 for lambda = +-1 and
    m = 1 for lambda = +-j. All row windows are scanned.

    Returns:
        True if some window of P is D_s, False otherwise.
    """
    k = code.k
    m = 1 if code.lam.symbol.is_imaginary else code.ctx.p - 1

    pattern = numpy.fliplr(numpy.eye(k, dtype=numpy.int64)) * m
    p_part = code.redundancy.entries

    for start in range(p_part.shape[0] - k + 1):
        if numpy.array_equal(p_part[start:start + k], pattern):
            logger.debug("D_s of %r at rows %d..%d of P.", code, start,
                         start + k - 1)
            return True

    return False


def encode(code, message):
    """ Encode a message systematically as u G.

    Args:
        code (FourierCode): The code.
        message: k ints or residues.

    Returns:
        Sequence: The codeword; its last k symbols are the message.

    Raises:
        ValueError: If the message does not have k symbols.
    """
    u = matrices.as_residue_array(list(message), ndim=1)
    if len(u) != code.k:
        raise ValueError("Message has " + str(len(u)) + " symbols, the code "
                         "needs k = " + str(code.k) + ".")

    p = code.ctx.p
    return fntt.Sequence((u % p).dot(code.generator.entries) % p, code.modulus)


def smallest_valid_prime(n, need_j, limit=PRIME_SEARCH_LIMIT):
    """ The smallest prime admitting a unitary transform of length n.

    Args:
        n (int): The transform length, at least 2.
        need_j (bool): Whether -1 must be a square (p = 1 mod 4).
        limit (int): Give up above this value.

    Returns:
        PrimeModulus: The smallest valid prime.

    Raises:
        SearchSpaceError: If no prime up to ``limit`` qualifies.
    """
    if n < 2:
        raise ValueError("N must be at least 2, got " + str(n) + ".")

    candidate = n + 1
    while candidate <= limit:
        if (candidate > 2 and gf.is_prime(candidate) and
                gf.is_valid_fntt_params(candidate, n) and
                (not need_j or candidate % 4 == 1)):
            return gf.PrimeModulus(candidate)
        candidate += n

    raise SearchSpaceError("No valid prime for N = " + str(n) + " below " +
                           str(limit) + ".")
