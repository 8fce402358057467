""" Command-line interface for constructing, encoding and decoding Fourier
codes, for the multiplicity and parameter tables, and for simulations.

Exit codes: 0 on success, 1 for usage errors and malformed input, 2 when the
parameters admit no code, 3 when decoding (or a worked example) fails.
"""

import argparse
import json
import logging
import sys

from fourier_codes.analysis import tables
from fourier_codes.analysis import worked_examples
from fourier_codes.coding import codes
from fourier_codes.coding import decoders
from fourier_codes.coding import simulation
from fourier_codes.core import eigen
from fourier_codes.core import fntt
from fourier_codes.core import gf


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONSTRUCTION = 2
EXIT_FAILURE = 3


class UsageError(ValueError):
    """ Raised for malformed command-line input. """


class ArgumentParser(argparse.ArgumentParser):
    """ An argument parser that exits with EXIT_USAGE on errors. """
    def error(self, message):
        self.exit(EXIT_USAGE, self.prog + ": error: " + message + "\n")


def parse_residues(text):
    """ Parse comma-separated base-10 integers, ignoring whitespace.

    Raises:
        UsageError: If a field is not an integer.
    """
    fields = [field.strip() for field in text.split(",")]
    try:
        return [int(field) for field in fields]
    except ValueError:
        raise UsageError("Malformed residue list '" + text + "': expected "
                         "comma-separated integers.")


def format_residues(values):
    return ",".join(str(value) for value in values)


def _check_range(values, p, what):
    for value in values:
        if not 0 <= value < p:
            raise UsageError(what + " symbol " + str(value) + " is not in "
                             "[0, " + str(p - 1) + "].")


def _code_from_args(args):
    try:
        symbol = eigen.Symbol.parse(args.lam)
    except ValueError as e:
        raise UsageError(str(e))

    ctx = fntt.build_context(args.p, args.n, alpha=args.alpha,
                             sqrt_branch=args.sqrt_branch,
                             j_branch=args.j_branch)
    lam = eigen.Eigenvalue.from_symbol(ctx, symbol)

    return codes.construct(ctx, lam, exact=getattr(args, "exact", False))


def _emit(args, text, document):
    if args.format == "structured":
        print(json.dumps(document, sort_keys=True))
    else:
        print(text)


def cmd_construct(args):
    code = _code_from_args(args)
    _emit(args, code.get_string_representation(), code.to_document())
    return EXIT_OK


def cmd_encode(args):
    code = _code_from_args(args)
    message = parse_residues(args.message)
    _check_range(message, code.ctx.p, "Message")
    if len(message) != code.k:
        raise UsageError("Message has " + str(len(message)) + " symbols, the "
                         "code needs k = " + str(code.k) + ".")

    codeword = codes.encode(code, message)
    _emit(args, format_residues(codeword), {"codeword": codeword.to_list()})
    return EXIT_OK


def cmd_decode(args):
    code = _code_from_args(args)
    received = parse_residues(args.received)
    _check_range(received, code.ctx.p, "Received")
    if len(received) != code.n:
        raise UsageError("Received word has " + str(len(received)) +
                         " symbols, the code needs n = " + str(code.n) + ".")

    outcome = decoders.decode(code, code.ctx.sequence(received), args.t_max)
    document = outcome.to_document()

    lines = ["status    " + outcome.status]
    if outcome.codeword is not None:
        lines.append("codeword  " + format_residues(outcome.codeword))
        lines.append("errors    " + (", ".join(
            str(i) + ":" + str(value) for i, value in
            zip(document["error_positions"], document["error_values"])) or
            "-"))
    if outcome.method is not None:
        lines.append("method    " + outcome.method)
    _emit(args, "\n".join(lines), document)

    if not outcome.succeeded:
        return EXIT_FAILURE
    return EXIT_OK


def cmd_mindist(args):
    code = _code_from_args(args)
    d_exact = codes.dmin_exact(code)
    has_ds = codes.ds_check(code)

    text = "d_exact = " + str(d_exact) + ", d_bound = " + \
        str(code.d_bound) + ", D_s " + ("found" if has_ds else "not found")
    _emit(args, text, {"d_exact": d_exact, "d_bound": code.d_bound,
                       "ds": has_ds})
    return EXIT_OK


def _tables_document(checks, rows, findings):
    multiplicities = []
    for check in checks:
        multiplicities.append({
            "n": check.n,
            "p": check.modulus.p,
            "dimensions": {symbol.value: dimension for symbol, dimension
                           in check.profile.dimensions.items()},
            "real_orientation": check.profile.real_orientation,
            "imaginary_orientation": check.profile.imaginary_orientation,
            "passed": check.passed(),
        })

    parameters = []
    for row in rows:
        cells = {}
        for column, cell in row.cells.items():
            cells[column.value] = {
                "lambda": cell.lam.residue.value,
                "k": cell.k,
                "d_exact": cell.d_exact,
                "d_bound": cell.d_bound,
            }
        parameters.append({"n": row.n, "p": row.modulus.p, "cells": cells})

    return {"multiplicities": multiplicities, "parameters": parameters,
            "findings": [str(finding) for finding in findings]}


def cmd_tables(args):
    if args.n_min < 2 or args.n_max < args.n_min:
        raise UsageError("Need 2 <= --n-min <= --n-max.")
    n_values = range(args.n_min, args.n_max + 1)

    checks = tables.check_multiplicities(n_values)
    rows = tables.parameters_table(n_values)
    findings = tables.compare_with_reference(rows)

    text = [tables.render_multiplicity_table(checks), "",
            tables.render_parameters_table(rows, findings)]
    if findings:
        text += ["", "Differences from the published parameters:"]
        text += ["\t" + str(finding) for finding in findings]

    _emit(args, "\n".join(text), _tables_document(checks, rows, findings))
    return EXIT_OK


def cmd_simulate(args):
    if args.trials <= 0:
        raise UsageError("--trials must be positive.")
    if args.workers < 1:
        raise UsageError("--workers must be positive.")

    code = _code_from_args(args)
    report = simulation.simulate(code, args.t, args.trials, args.seed,
                                 args.workers, args.t_max)
    _emit(args, report.get_string_representation(), report.to_document())
    return EXIT_OK


def cmd_examples(args):
    results = worked_examples.run_all()
    text = "\n".join(result.get_string_representation()
                     for result in results)
    document = [{"name": result.name, "passed": result.passed,
                 "mismatches": result.mismatches} for result in results]
    _emit(args, text, document)

    if all(result.passed for result in results):
        return EXIT_OK
    return EXIT_FAILURE


def build_parser():
    """ Build the parser with one subcommand per command. """
    output = ArgumentParser(add_help=False)
    output.add_argument("--format", choices=["text", "structured"],
                        default="text",
                        help="Text for reading, structured (JSON) for "
                             "further processing.")

    code_spec = ArgumentParser(add_help=False)
    code_spec.add_argument("--p", type=int, required=True,
                           help="The prime modulus.")
    code_spec.add_argument("--n", type=int, required=True,
                           help="The block length N.")
    code_spec.add_argument("--lambda", dest="lam", default="+1",
                           help="The eigenvalue: +1, -1, +j or -j.")
    code_spec.add_argument("--alpha", type=int, default=None,
                           help="Element of order N (default: smallest).")
    code_spec.add_argument("--sqrt-branch", type=int, default=None,
                           help="Square root of N to use (default: the one "
                                "in [1, (p-1)/2]).")
    code_spec.add_argument("--j-branch", type=int, default=None,
                           help="Square root of -1 to use (default: the one "
                                "in [1, (p-1)/2]).")

    parser = ArgumentParser(
        prog="fourier-codes",
        description="Fourier codes over GF(p) from the eigenstructure of the "
                    "unitary Fourier number theoretic transform.")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true",
                           help="Log debugging output.")
    verbosity.add_argument("-q", "--quiet", action="store_true",
                           help="Log warnings only.")

    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True

    construct = subparsers.add_parser(
        "construct", parents=[code_spec, output],
        help="Construct a code and print H and G.")
    construct.add_argument("--exact", action="store_true",
                           help="Also compute the exact minimum distance.")
    construct.set_defaults(func=cmd_construct)

    encode = subparsers.add_parser("encode", parents=[code_spec, output],
                                   help="Encode a message.")
    encode.add_argument("--message", required=True,
                        help="k comma-separated residues.")
    encode.set_defaults(func=cmd_encode)

    decode = subparsers.add_parser("decode", parents=[code_spec, output],
                                   help="Decode a received word.")
    decode.add_argument("--received", required=True,
                        help="n comma-separated residues.")
    decode.add_argument("--t-max", type=int, choices=[1, 2], default=2,
                        help="Number of errors to correct.")
    decode.set_defaults(func=cmd_decode)

    mindist = subparsers.add_parser(
        "mindist", parents=[code_spec, output],
        help="Compute the exact minimum distance.")
    mindist.set_defaults(func=cmd_mindist)

    table = subparsers.add_parser(
        "tables", parents=[output],
        help="Print the multiplicity and parameter tables.")
    table.add_argument("--n-min", type=int, default=3)
    table.add_argument("--n-max", type=int, default=12)
    table.set_defaults(func=cmd_tables)

    simulate = subparsers.add_parser(
        "simulate", parents=[code_spec, output],
        help="Simulate decoding of random errors.")
    simulate.add_argument("--t", type=int, choices=[0, 1, 2], default=1,
                          help="Weight of the injected errors.")
    simulate.add_argument("--trials", type=int, default=1000)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--t-max", type=int, choices=[1, 2], default=2)
    simulate.add_argument("--workers", type=int, default=1)
    simulate.set_defaults(func=cmd_simulate)

    examples = subparsers.add_parser("examples", parents=[output],
                                     help="Run the worked examples.")
    examples.set_defaults(func=cmd_examples)

    return parser


def main(argv=None):
    """ Run the command line.

    Args:
        argv (list(str)): The arguments; defaults to sys.argv[1:].

    Returns:
        int: The exit code.
    """
    args = build_parser().parse_args(argv)

    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    else:
        level = logging.INFO

    logging.basicConfig(level=level,
                        format='%(asctime)s %(levelname)s %(message)s')

    try:
        return args.func(args)
    except UsageError as e:
        print("fourier-codes: error: " + str(e), file=sys.stderr)
        return EXIT_USAGE
    except (gf.FieldError, fntt.ContextError, codes.ConstructionError,
            codes.SearchSpaceError) as e:
        print("fourier-codes: error: " + str(e), file=sys.stderr)
        return EXIT_CONSTRUCTION
