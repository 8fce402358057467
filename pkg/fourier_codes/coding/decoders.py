""" Decode Fourier codes using the eigenstructure of the transform.

A received word r is a codeword exactly when F r = lambda r. Every decoding
procedure here builds candidate words from r by repairing a few symbols, and
accepts the first candidate that is an eigensequence. Two relations drive the
repairs:

    - symmetry: codewords for +-1 are even (x_i = x_{N-i}), codewords for +-j
      are odd (x_i = -x_{N-i}),
    - the DC constraint: the first transform row gives
      sum_n x_n = lambda sqrt(N) x_0.

``decode`` chooses the procedures to try from the set of symbol pairs that
violate the symmetry, single errors before double errors.
"""

import logging

from fourier_codes.core import fntt


logger = logging.getLogger(__name__)


ALREADY_CODEWORD = "ALREADY_CODEWORD"
CORRECTED = "CORRECTED"
FAILURE = "FAILURE"

SINGLE_SYMMETRIC = "single_symmetric"
SINGLE_ASYMMETRIC = "single_asymmetric"
DOUBLE_SYMMETRIC = "double_symmetric"
A1 = "A1"
A2 = "A2"
A3 = "A3"


class DegenerateConstraintError(ValueError):
    """ Raised when lambda sqrt(N) = 1, so the DC constraint does not
    determine x_0. """


class Attempt:
    """ One candidate word tried during decoding.

    Attributes:
        method (str): The procedure that produced the candidate.
        candidate (Sequence): The candidate word.
        spectrum (Sequence): Its transform F candidate.
        passed (bool): Whether the candidate is an eigensequence.
    """
    def __init__(self, method, candidate, spectrum, passed):
        self.method = method
        self.candidate = candidate
        self.spectrum = spectrum
        self.passed = passed

    def __repr__(self):
        return "Attempt(" + self.method + ", " + str(self.candidate) + \
            (", passed)" if self.passed else ", failed)")


class DecodeOutcome:
    """ The result of decoding one received word.

    Attributes:
        status (str): ALREADY_CODEWORD, CORRECTED or FAILURE.
        codeword (Sequence): The decoded codeword, None on FAILURE.
        error_vector (Sequence): r - codeword, None on FAILURE.
        errors_corrected (int): Hamming weight of the error vector.
        method (str): The procedure that produced the codeword, None unless
            CORRECTED.
        attempts (list(Attempt)): All candidates tried, in order.
    """
    def __init__(self, status, codeword=None, error_vector=None,
                 errors_corrected=0, method=None, attempts=None):
        self.status = status
        self.codeword = codeword
        self.error_vector = error_vector
        self.errors_corrected = errors_corrected
        self.method = method
        self.attempts = [] if attempts is None else list(attempts)

    @property
    def succeeded(self):
        return self.status != FAILURE

    def error_positions(self):
        if self.error_vector is None:
            return []
        return self.error_vector.support()

    def with_attempts(self, attempts):
        return DecodeOutcome(self.status, self.codeword, self.error_vector,
                             self.errors_corrected, self.method, attempts)

    def to_document(self):
        """ The outcome as a dict of plain values. """
        document = {
            "status": self.status,
            "codeword": None,
            "error_positions": [],
            "error_values": [],
            "errors_corrected": self.errors_corrected,
            "method": self.method,
        }
        if self.codeword is not None:
            document["codeword"] = self.codeword.to_list()
            positions = self.error_positions()
            document["error_positions"] = positions
            document["error_values"] = [self.error_vector[i]
                                        for i in positions]
        return document

    def __repr__(self):
        return "DecodeOutcome(" + self.status + ", " + str(self.codeword) + \
            ", method=" + str(self.method) + ")"


def syndrome(ctx, lam, r):
    """ Compute S = F r - lambda r, which is zero exactly on codewords.

    Raises:
        ContextError: If ``r`` does not fit the context.
    """
    return fntt.forward(ctx, r) - r.scale(lam.residue)


def check_r0(ctx, lam, r):
    """ The value x_0 must take for the DC constraint, given x_1..x_{N-1}.

    r_0 = (lambda sqrt(N) - 1)^-1 (r_1 + ... + r_{N-1})

    Args:
        ctx (FnttContext): The transform.
        lam (Eigenvalue): The eigenvalue of the code.
        r (Sequence): The received word; r_0 itself is ignored.

    Returns:
        Residue: The repaired value of position 0.

    Raises:
        DegenerateConstraintError: If lambda sqrt(N) = 1.
    """
    factor = lam.residue * ctx.sqrt_n - 1
    if factor == 0:
        raise DegenerateConstraintError(
            "lambda sqrt(N) = 1 in " + repr(ctx.modulus) + ": the DC "
            "constraint does not determine r_0.")
    return ctx.modulus(int(r.entries[1:].sum())) * factor.inverse()


def _symmetry_sign(code):
    return code.lam.symmetry_sign


def _pair_range(n):
    return range(1, (n - 1) // 2 + 1)


def _check_pair_index(code, i):
    if i not in _pair_range(code.n):
        raise ValueError("Pair index must lie in [1, " +
                         str((code.n - 1) // 2) + "], got " + str(i) + ".")


def _repair_zero(code, r):
    # odd sequences have x_0 = 0
    if code.lam.symbol.is_imaginary:
        return r.with_entry(0, 0)
    return r.with_entry(0, check_r0(code.ctx, code.lam, r))


def _repair_middle(code, r):
    """ Recompute r_{N/2} (even N) from the DC constraint. """
    ctx, middle = code.ctx, code.n // 2
    if code.lam.symbol.is_imaginary:
        return r.with_entry(middle, 0)

    others = int(r.entries.sum()) - r[0] - r[middle]
    value = ctx.modulus(r[0]) * (code.lam.residue * ctx.sqrt_n - 1) - others
    return r.with_entry(middle, value)


def _substitute(code, r, target, source):
    """ r_target := sigma r_source. """
    return r.with_entry(target, _symmetry_sign(code) * r[source])


def _attempt(code, method, candidate, attempts):
    spectrum = fntt.forward(code.ctx, candidate)
    passed = spectrum == candidate.scale(code.lam.residue)
    attempts.append(Attempt(method, candidate, spectrum, passed))
    logger.debug("%s: %s %s", method, candidate,
                 "passes" if passed else "fails")
    return passed


def _first_passing(code, r, method, candidates, attempts):
    """ Try candidates in order and return the first eigensequence as a
    CORRECTED outcome, or a FAILURE outcome. """
    for candidate in candidates:
        if _attempt(code, method, candidate, attempts):
            error_vector = r - candidate
            return DecodeOutcome(CORRECTED, candidate, error_vector,
                                 error_vector.hamming_weight(), method,
                                 attempts)
    return DecodeOutcome(FAILURE, attempts=attempts)


def _already_codeword(code, r):
    if syndrome(code.ctx, code.lam, r).is_zero():
        return DecodeOutcome(ALREADY_CODEWORD, r, code.ctx.zeros(), 0)
    return None


def _single_symmetric_candidates(code, r):
    try:
        yield _repair_zero(code, r)
    except DegenerateConstraintError as e:
        logger.debug("Skipping repair of r_0: %s", e)

    if code.n % 2 == 0:
        yield _repair_middle(code, r)


def decode_single_symmetric(code, r):
    """ Correct a single error that left the symmetry of r intact.

    Such an error sits at position 0, or at N/2 for even N. Position 0 is
    repaired from the DC constraint first; for even N, r_{N/2} is then
    repaired on the received word instead. For +-j both positions are 0 in
    every codeword.

    Args:
        code (FourierCode): The code.
        r (Sequence): The received word.

    Returns:
        DecodeOutcome: ALREADY_CODEWORD, CORRECTED or FAILURE.
    """
    code.ctx.check_sequence(r)
    return _already_codeword(code, r) or _first_passing(
        code, r, SINGLE_SYMMETRIC, _single_symmetric_candidates(code, r), [])


def decode_single_asymmetric(code, r, i):
    """ Correct a single error in the pair (i, N - i).

    Tries r_i := sigma r_{N-i}, then r_{N-i} := sigma r_i, where sigma is +1
    for +-1 and -1 for +-j.
    """
    code.ctx.check_sequence(r)
    _check_pair_index(code, i)

    already = _already_codeword(code, r)
    if already:
        return already

    n = code.n
    candidates = (_substitute(code, r, i, n - i),
                  _substitute(code, r, n - i, i))
    return _first_passing(code, r, SINGLE_ASYMMETRIC, candidates, [])


def repair_pair(code, r, i):
    """ Recompute both symbols of the pair (i, N - i).

    For +-1 the pair gets the common value
    r_i = r_{N-i} = 1/2 (lambda sqrt(N) r_0 - sum_{m != i, N-i} r_m). For +-j
    the pair is (v, -v), which the DC row cannot see; v is taken from the
    first syndrome component on which the pair acts.

    Args:
        code (FourierCode): The code.
        r (Sequence): The received word.
        i (int): The pair index, 1 <= i <= (N-1)/2.

    Returns:
        Sequence: r with the pair replaced.
    """
    _check_pair_index(code, i)
    ctx, lam, n = code.ctx, code.lam, code.n

    if not lam.symbol.is_imaginary:
        others = int(r.entries.sum()) - r[i] - r[n - i]
        value = ctx.half * (lam.residue * ctx.sqrt_n * r[0] - others)
        return r.with_entries({i: value, n - i: value})

    base = r.with_entries({i: 0, n - i: 0})
    direction = ctx.zeros().with_entries({i: 1, n - i: -1})
    base_syndrome = syndrome(ctx, lam, base)
    direction_syndrome = syndrome(ctx, lam, direction)

    support = direction_syndrome.support()
    if not support:
        # (1, -1) on the pair is itself a codeword; any value fits
        return r
    m = support[0]
    value = -base_syndrome.residue(m) / direction_syndrome.residue(m)
    return r.with_entries({i: value, n - i: -value})


def _double_symmetric_candidates(code, r):
    for i in _pair_range(code.n):
        yield repair_pair(code, r, i)

    if code.n % 2 == 0:
        # For +-1 both r_0 and r_{N/2} enter the one DC equation, so the
        # composed repair only succeeds when one of them is intact. Errors at
        # both positions are left to the later stages or end in FAILURE.
        try:
            yield _repair_middle(code, _repair_zero(code, r))
            yield _repair_zero(code, _repair_middle(code, r))
        except DegenerateConstraintError as e:
            logger.debug("Skipping repair of r_0 and r_N/2: %s", e)


def decode_double_symmetric(code, r):
    """ Correct two errors that left the symmetry of r intact.

    Each pair (i, N - i) is repaired in turn. For even N the repairs of r_0
    and r_{N/2} are also composed, in both orders.
    """
    code.ctx.check_sequence(r)
    return _already_codeword(code, r) or _first_passing(
        code, r, DOUBLE_SYMMETRIC, _double_symmetric_candidates(code, r), [])


def _a1_candidates(code, r, i):
    n = code.n
    substituted = (_substitute(code, r, i, n - i),
                   _substitute(code, r, n - i, i))

    for candidate in substituted:
        try:
            yield _repair_zero(code, candidate)
        except DegenerateConstraintError as e:
            logger.debug("Skipping repair of r_0: %s", e)

    # errors at i and N/2
    if n % 2 == 0:
        for candidate in substituted:
            yield _repair_middle(code, candidate)


def decode_double_A1(code, r, i):
    """ Correct errors at position 0 and at one member of the pair i.

    The pair is made symmetric by substitution, either way round, and r_0 is
    then repaired from the DC constraint. For even N the same substitutions
    are also followed by a repair of r_{N/2}.
    """
    code.ctx.check_sequence(r)
    _check_pair_index(code, i)
    return _already_codeword(code, r) or _first_passing(
        code, r, A1, _a1_candidates(code, r, i), [])


def decode_double_A2(code, r, i):
    """ Correct independent errors on both members of the pair i. """
    code.ctx.check_sequence(r)
    return _already_codeword(code, r) or _first_passing(
        code, r, A2, [repair_pair(code, r, i)], [])


def _a3_candidates(code, r, i, j):
    n = code.n
    for first in ((n - i, i), (i, n - i)):
        for second in ((n - j, j), (j, n - j)):
            yield _substitute(code, _substitute(code, r, *first), *second)


def decode_double_A3(code, r, i, j):
    """ Correct one error in each of the pairs i and j.

    Four substitutions are tried in this order:

        1. r_{N-i} := sigma r_i, r_{N-j} := sigma r_j
        2. r_{N-i} := sigma r_i, r_j := sigma r_{N-j}
        3. r_i := sigma r_{N-i}, r_{N-j} := sigma r_j
        4. r_i := sigma r_{N-i}, r_j := sigma r_{N-j}
    """
    code.ctx.check_sequence(r)
    _check_pair_index(code, i)
    _check_pair_index(code, j)
    return _already_codeword(code, r) or _first_passing(
        code, r, A3, _a3_candidates(code, r, i, j), [])


def mismatched_pairs(code, r):
    """ The pair indices i in [1, (N-1)/2] with r_i != sigma r_{N-i}. """
    p, n, sigma = code.ctx.p, code.n, _symmetry_sign(code)
    return [i for i in _pair_range(n) if r[i] != (sigma * r[n - i]) % p]


def decode(code, r, t_max=2):
    """ Decode a received word with up to ``t_max`` errors.

    The procedures tried depend on the set A of mismatched pairs:

        - |A| = 0: single symmetric, then double symmetric,
        - |A| = 1: single asymmetric, then A1, then A2,
        - |A| = 2: A3,
        - otherwise nothing is tried.

    Double-error procedures are skipped when ``t_max`` is 1. The first
    candidate that is a codeword within distance ``t_max`` of r wins; a word
    with more errors may be miscorrected.

    Args:
        code (FourierCode): The code.
        r (Sequence): The received word.
        t_max (int): 1 or 2.

    Returns:
        DecodeOutcome: The outcome, with all attempts across procedures.
    """
    if t_max not in (1, 2):
        raise ValueError("t_max must be 1 or 2, got " + str(t_max) + ".")
    code.ctx.check_sequence(r)

    already = _already_codeword(code, r)
    if already:
        return already

    mismatched = mismatched_pairs(code, r)
    logger.debug("Decoding %s: mismatched pairs %s.", r, mismatched)

    procedures = []
    if len(mismatched) == 0:
        procedures.append(lambda: decode_single_symmetric(code, r))
        if t_max == 2:
            procedures.append(lambda: decode_double_symmetric(code, r))
    elif len(mismatched) == 1:
        i = mismatched[0]
        procedures.append(lambda: decode_single_asymmetric(code, r, i))
        if t_max == 2:
            procedures.append(lambda: decode_double_A1(code, r, i))
            procedures.append(lambda: decode_double_A2(code, r, i))
    elif len(mismatched) == 2 and t_max == 2:
        procedures.append(
            lambda: decode_double_A3(code, r, mismatched[0], mismatched[1]))

    attempts = []
    for procedure in procedures:
        outcome = procedure()
        attempts.extend(outcome.attempts)
        if (outcome.status == CORRECTED and
                outcome.errors_corrected <= t_max):
            return outcome.with_attempts(attempts)

    logger.debug("No hypothesis within distance %d of %s.", t_max, r)
    return DecodeOutcome(FAILURE, attempts=attempts)
