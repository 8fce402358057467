""" Worked examples of the transform, the codes and the decoder, as checks.

Each check recomputes a small example by hand-verifiable arithmetic and
compares every intermediate value with the known result. ``run_all`` runs
them all; the ``examples`` command of the executable prints the outcome.
"""

import logging

from fourier_codes.coding import codes
from fourier_codes.coding import decoders
from fourier_codes.core import eigen
from fourier_codes.core import fntt


logger = logging.getLogger(__name__)


class ExampleResult:
    """ The outcome of one worked example.

    Attributes:
        name (str): A short identifier.
        description (str): What the example shows.
        mismatches (list(str)): One message per value that differs from the
            expected one.
    """
    def __init__(self, name, description):
        self.name = name
        self.description = description
        self.mismatches = []

    @property
    def passed(self):
        return not self.mismatches

    def expect(self, what, computed, expected):
        """ Record a mismatch if ``computed`` != ``expected``.

        Sequences and matrices are compared through their list form.
        """
        if hasattr(computed, "to_list"):
            computed = computed.to_list()
        elif hasattr(computed, "to_lists"):
            computed = computed.to_lists()

        if computed != expected:
            self.mismatches.append(what + ": computed " + str(computed) +
                                   ", expected " + str(expected))

    def get_string_representation(self):
        status = "PASS" if self.passed else "FAIL"
        lines = [status + " " + self.name + " (" + self.description + ")"]
        lines += ["\t" + mismatch for mismatch in self.mismatches]
        return "\n".join(lines)


def transform_pair():
    """ The length-4 transform over GF(5) and eigensequences built from
    even and odd parts. """
    result = ExampleResult("transform-pair-gf5",
                           "N = 4 over GF(5), eigensequence builders")

    ctx = fntt.build_context(5, 4)
    result.expect("alpha", ctx.alpha.value, 2)
    result.expect("sqrt N", ctx.sqrt_n.value, 2)
    result.expect("j", ctx.j.value, 2)
    result.expect("F", ctx.transform_matrix,
                  [[3, 3, 3, 3], [3, 1, 2, 4], [3, 2, 3, 2], [3, 4, 2, 1]])

    x = ctx.sequence([4, 2, 1, 4])
    spectrum = fntt.forward(ctx, x)
    result.expect("X", spectrum, [3, 2, 2, 1])
    result.expect("inverse", fntt.inverse(ctx, spectrum), [4, 2, 1, 4])
    result.expect("E(x)", fntt.even_part(x), [4, 3, 1, 3])
    result.expect("O(x)", fntt.odd_part(x), [0, 4, 0, 1])
    result.expect("E(X)", fntt.even_part(spectrum), [3, 4, 2, 4])
    result.expect("O(X)", fntt.odd_part(spectrum), [0, 3, 0, 2])

    y1 = eigen.make_even_eigensequence(ctx, x, 1)
    result.expect("even eigensequence", y1, [2, 2, 3, 2])
    result.expect("F y1 = y1", eigen.is_eigensequence(
        ctx, y1, eigen.Eigenvalue.parse(ctx, "+1")), True)

    y2 = eigen.make_odd_eigensequence(ctx, x, 1)
    result.expect("odd eigensequence", y2, [0, 3, 0, 2])
    result.expect("F y2 = 2 y2", eigen.is_eigensequence(
        ctx, y2, eigen.Eigenvalue.parse(ctx, "+j")), True)

    return result


def length_five_codes():
    """ All four codes of length 5 over GF(41). """
    result = ExampleResult("codes-n5-gf41", "N = 5 over GF(41), four codes")

    ctx = fntt.build_context(41, 5)
    result.expect("alpha", ctx.alpha.value, 10)
    result.expect("sqrt N", ctx.sqrt_n.value, 13)
    result.expect("j", ctx.j.value, 9)

    expected = {
        "+1": ([[1, 0, 0, 34, 34], [0, 1, 0, 0, 40], [0, 0, 1, 40, 0]],
               [[7, 0, 1, 1, 0], [7, 1, 0, 0, 1]]),
        "-1": ([[1, 0, 0, 0, 12], [0, 1, 0, 0, 40], [0, 0, 1, 0, 40],
                [0, 0, 0, 1, 40]],
               [[29, 1, 1, 1, 1]]),
        "+j": ([[1, 0, 0, 0, 0], [0, 1, 0, 0, 1], [0, 0, 1, 0, 31],
                [0, 0, 0, 1, 10]],
               [[0, 40, 10, 31, 1]]),
        "-j": ([[1, 0, 0, 0, 0], [0, 1, 0, 0, 1], [0, 0, 1, 0, 37],
                [0, 0, 0, 1, 4]],
               [[0, 40, 4, 37, 1]]),
    }

    for symbol, (parity_check, generator) in sorted(expected.items()):
        code = codes.construct(ctx, eigen.Eigenvalue.parse(ctx, symbol))
        result.expect("H for " + symbol, code.parity_check, parity_check)
        result.expect("G for " + symbol, code.generator, generator)

    return result


def length_eight_codes():
    """ Two codes of length 8 over GF(17) and their secondary diagonals. """
    result = ExampleResult("codes-n8-gf17",
                           "N = 8 over GF(17), secondary diagonals")

    ctx = fntt.build_context(17, 8)

    plus_one = codes.construct(ctx, eigen.Eigenvalue.parse(ctx, "+1"))
    result.expect("H for +1", plus_one.parity_check,
                  [[1, 0, 0, 0, 0, 3, 5, 3],
                   [0, 1, 0, 0, 0, 0, 0, 16],
                   [0, 0, 1, 0, 0, 0, 16, 0],
                   [0, 0, 0, 1, 0, 16, 0, 0],
                   [0, 0, 0, 0, 1, 14, 5, 14]])
    result.expect("D_s for +1", codes.ds_check(plus_one), True)

    plus_j = codes.construct(ctx, eigen.Eigenvalue.parse(ctx, "+j"))
    result.expect("H for +j", plus_j.parity_check,
                  [[1, 0, 0, 0, 0, 0, 0, 0],
                   [0, 1, 0, 0, 0, 0, 0, 1],
                   [0, 0, 1, 0, 0, 0, 1, 0],
                   [0, 0, 0, 1, 0, 0, 6, 1],
                   [0, 0, 0, 0, 1, 0, 0, 0],
                   [0, 0, 0, 0, 0, 1, 11, 16]])
    result.expect("D_s for +j", codes.ds_check(plus_j), True)

    return result


def _length_seven_code():
    ctx = fntt.build_context(29, 7)
    return codes.construct(ctx, eigen.Eigenvalue.parse(ctx, "+1"))


TRANSMITTED = [16, 0, 1, 10, 10, 1, 0]


def length_seven_generator():
    """ The generator of the length-7 code over GF(29) and its encoding. """
    result = ExampleResult("generator-n7-gf29",
                           "N = 7 over GF(29), systematic generator")

    code = _length_seven_code()
    result.expect("alpha", code.ctx.alpha.value, 7)
    result.expect("sqrt N", code.ctx.sqrt_n.value, 6)
    result.expect("G", code.generator,
                  [[16, 0, 1, 10, 10, 1, 0], [20, 1, 0, 20, 20, 0, 1]])
    result.expect("encode (1, 0)", codes.encode(code, [1, 0]), TRANSMITTED)
    result.expect("d_exact", codes.dmin_exact(code), 5)

    return result


def _attempts_of(outcome, method):
    return [attempt for attempt in outcome.attempts
            if attempt.method == method]


def pair_repair():
    """ Two errors in one pair: r_0 repair fails, pair repair succeeds. """
    result = ExampleResult("pair-repair-gf29",
                           "two errors in the pair (1, 6)")

    code = _length_seven_code()
    received = code.ctx.sequence([16, 2, 1, 10, 10, 1, 3])
    result.expect("check_r0 after r_1 := r_6", decoders.check_r0(
        code.ctx, code.lam, received.with_entry(1, 3)).value, 23)
    result.expect("check_r0 after r_6 := r_1", decoders.check_r0(
        code.ctx, code.lam, received.with_entry(6, 2)).value, 11)

    outcome = decoders.decode(code, received, 2)

    r0_repairs = _attempts_of(outcome, decoders.A1)[:2]
    result.expect("r_0 repairs", [[a.candidate.to_list(), a.spectrum.to_list(),
                                   a.passed] for a in r0_repairs],
                  [[[23, 3, 1, 10, 10, 1, 3], [23, 22, 25, 25, 25, 25, 22],
                    False],
                   [[11, 2, 1, 10, 10, 1, 2], [11, 5, 17, 20, 20, 17, 5],
                    False]])
    result.expect("status", outcome.status, decoders.CORRECTED)
    result.expect("method", outcome.method, decoders.A2)
    result.expect("codeword", outcome.codeword, TRANSMITTED)
    result.expect("error positions", outcome.error_positions(), [1, 6])

    return result


def four_substitutions():
    """ One error in each of two pairs, found by the fourth substitution. """
    result = ExampleResult("substitutions-gf29",
                           "one error in each of the pairs 1 and 2")

    code = _length_seven_code()
    received = code.ctx.sequence([16, 2, 3, 10, 10, 1, 0])
    outcome = decoders.decode(code, received, 2)

    substitutions = _attempts_of(outcome, decoders.A3)
    result.expect("substitutions", [[a.candidate.to_list(),
                                     a.spectrum.to_list(), a.passed]
                                    for a in substitutions],
                  [[[16, 2, 3, 10, 10, 3, 2], [27, 13, 19, 17, 17, 19, 13],
                    False],
                   [[16, 2, 1, 10, 10, 1, 2], [7, 1, 13, 16, 16, 13, 1],
                    False],
                   [[16, 0, 3, 10, 10, 3, 0], [7, 12, 7, 11, 11, 7, 12],
                    False],
                   [TRANSMITTED, TRANSMITTED, True]])
    result.expect("status", outcome.status, decoders.CORRECTED)
    result.expect("codeword", outcome.codeword, TRANSMITTED)

    return result


EXAMPLES = (transform_pair, length_five_codes, length_eight_codes,
            length_seven_generator, pair_repair, four_substitutions)


def run_all():
    """ Run every worked example.

    Returns:
        list(ExampleResult): The results, in order.
    """
    results = []
    for example in EXAMPLES:
        result = example()
        logger.info("%s %s.", result.name,
                    "passed" if result.passed else "failed")
        results.append(result)
    return results
