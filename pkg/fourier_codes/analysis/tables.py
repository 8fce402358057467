""" Multiplicity and parameter tables of Fourier codes.

For a range of block lengths N, each table row is computed over the smallest
prime p with p = 1 (mod 4), N | p - 1 and N a quadratic residue modulo p.
Computed parameters can be compared with the published parameter table, which
ships as ``resources/parameters_reference.tsv``.
"""

import logging

import fourier_codes
from fourier_codes.coding import codes
from fourier_codes.core import eigen
from fourier_codes.core import fntt
from fourier_codes.core import singletons


logger = logging.getLogger(__name__)

# Column order of the parameter table.
PARAMETER_ORDER = (eigen.Symbol.PLUS_ONE, eigen.Symbol.MINUS_ONE,
                   eigen.Symbol.PLUS_J, eigen.Symbol.MINUS_J)


def read_reference(path):
    """ Read a parameter table in tab-separated form.

    The header is ``N k+1 d+1 k-1 d-1 k+j d+j k-j d-j``; empty codes are
    written as '-'.

    Args:
        path (str): The file to read.

    Returns:
        dict(int, dict(Symbol, (int, int))): For each N, the published
        (k, d) per column, or None for an empty code.
    """
    rows = {}
    with open(path) as reference_file:
        header = reference_file.readline().strip().split("\t")
        for line in reference_file:
            if not line.strip():
                continue
            fields = dict(zip(header, line.strip().split("\t")))
            row = {}
            for symbol in PARAMETER_ORDER:
                k = fields["k" + symbol.value]
                d = fields["d" + symbol.value]
                row[symbol] = None if k == "-" else (int(k), int(d))
            rows[int(fields["N"])] = row

    return rows


@singletons.Singleton
class ReferenceParameters:
    """ The published parameter table.

    Attributes:
        rows (dict(int, dict(Symbol, (int, int)))): See ``read_reference``.
    """
    def __init__(self):
        directory = fourier_codes.__path__[0] + "/resources/"
        self.rows = read_reference(directory + "parameters_reference.tsv")


def table_context(n):
    """ The context used for the table row of length ``n``. """
    return fntt.build_context(codes.smallest_valid_prime(n, True), n)


class MultiplicityCheck:
    """ The computed eigenspace dimensions for one N against the pattern.

    Attributes:
        n (int): The block length.
        modulus (PrimeModulus): The field used.
        profile (MultiplicityProfile): The computed dimensions.
        expected (dict(Symbol, int)): The pattern's multiplicity per symbol.
    """
    def __init__(self, modulus, profile):
        self.n = profile.n
        self.modulus = modulus
        self.profile = profile
        self.expected = {symbol: eigen.multiplicity(self.n, symbol)
                         for symbol in eigen.TABLE_ORDER}

    @property
    def sums_to_n(self):
        return self.profile.total == self.n

    def passed(self):
        return (self.profile.complete and self.sums_to_n and
                self.profile.matches_pattern())


def check_multiplicities(n_values):
    """ Compute the eigenspace dimensions for every N in ``n_values``.

    Returns:
        list(MultiplicityCheck): One check per N, in the given order.
    """
    logger.info("Checking eigenvalue multiplicities.")
    checks = []
    for n in n_values:
        ctx = table_context(n)
        logger.info("\tN = %d over %r.", n, ctx.modulus)
        checks.append(MultiplicityCheck(ctx.modulus,
                                        eigen.multiplicity_profile(ctx)))
    return checks


class ParameterCell:
    """ One code of the parameter table.

    Attributes:
        column (Symbol): The column label.
        lam (Eigenvalue): The eigenvalue whose code fills the column.
        k (int): The dimension; 0 for an empty code.
        d_exact (int): The minimum distance, None if empty or not computed.
        d_bound (int): The distance bound, None if empty.
    """
    def __init__(self, column, lam, k=0, d_exact=None, d_bound=None):
        self.column = column
        self.lam = lam
        self.k = k
        self.d_exact = d_exact
        self.d_bound = d_bound

    @property
    def empty(self):
        return self.k == 0

    def parameters(self):
        """ (k, d_exact), or None for an empty code. """
        return None if self.empty else (self.k, self.d_exact)


class ParameterRow:
    """ The codes of one block length.

    Attributes:
        n (int): The block length.
        modulus (PrimeModulus): The field used.
        profile (MultiplicityProfile): Decides which eigenvalue fills which
            column.
        cells (dict(Symbol, ParameterCell)): The codes by column label.
    """
    def __init__(self, n, modulus, profile, cells):
        self.n = n
        self.modulus = modulus
        self.profile = profile
        self.cells = cells


def parameters_row(ctx, columns=PARAMETER_ORDER, exact=True,
                   max_search_space=codes.MAX_SEARCH_SPACE):
    """ Build the codes of one context under the pattern's column labels.

    Within each eigenvalue pair whose dimensions are the pattern's values
    interchanged, the two columns are filled with each other's codes, so
    that a column's dimension agrees with its label.

    Args:
        ctx (FnttContext): The transform; it must provide j.
        columns (iterable(Symbol)): The columns to fill.
        exact (bool): Whether to compute exact minimum distances.
        max_search_space (int): Passed to ``dmin_exact``.

    Returns:
        ParameterRow: The row.
    """
    profile = eigen.multiplicity_profile(ctx)
    cells = {}

    for column in columns:
        lam = eigen.Eigenvalue.from_symbol(ctx, profile.column_symbol(column))
        try:
            code = codes.construct(ctx, lam)
        except codes.EmptyCodeError:
            cells[column] = ParameterCell(column, lam)
            continue

        d_exact = None
        if exact:
            d_exact = codes.dmin_exact(code, max_search_space)

        cells[column] = ParameterCell(column, lam, code.k, d_exact,
                                      code.d_bound)

    return ParameterRow(ctx.n, ctx.modulus, profile, cells)


def parameters_table(n_values, columns=PARAMETER_ORDER, exact=True,
                     max_search_space=codes.MAX_SEARCH_SPACE):
    """ Build the parameter table for every N in ``n_values``.

    Returns:
        list(ParameterRow): One row per N, in the given order.
    """
    logger.info("Building parameter table.")
    rows = []
    for n in n_values:
        ctx = table_context(n)
        logger.info("\tN = %d over %r.", n, ctx.modulus)
        rows.append(parameters_row(ctx, columns, exact, max_search_space))
    return rows


class Finding:
    """ A table cell whose computed parameters differ from the reference.

    Attributes:
        n (int): The block length.
        column (Symbol): The column label.
        computed ((int, int)): Computed (k, d), or None if empty.
        published ((int, int)): Published (k, d), or None if empty.
    """
    def __init__(self, n, column, computed, published):
        self.n = n
        self.column = column
        self.computed = computed
        self.published = published

    def __eq__(self, other):
        if isinstance(other, Finding):
            return ((self.n, self.column, self.computed, self.published) ==
                    (other.n, other.column, other.computed, other.published))
        return NotImplemented

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.column, self.computed, self.published))

    def __str__(self):
        def show(parameters):
            return "-" if parameters is None else \
                "k=%d d=%s" % parameters
        return "N = " + str(self.n) + ", column " + self.column.value + \
            ": computed " + show(self.computed) + ", published " + \
            show(self.published)


def compare_with_reference(rows, reference=None):
    """ Compare computed rows with a reference table.

    Distances are compared only where they were computed. Rows whose N is
    missing from the reference are skipped.

    Args:
        rows (list(ParameterRow)): The computed rows.
        reference (dict): As returned by ``read_reference``; defaults to the
            shipped table.

    Returns:
        list(Finding): The mismatching cells, in table order.
    """
    if reference is None:
        reference = ReferenceParameters.get_instance().rows

    findings = []
    for row in rows:
        if row.n not in reference:
            continue
        for column, cell in sorted(row.cells.items(),
                                   key=lambda item:
                                   PARAMETER_ORDER.index(item[0])):
            published = reference[row.n][column]
            computed = cell.parameters()

            if computed is None or published is None:
                agrees = computed == published
            elif cell.d_exact is None:
                agrees = computed[0] == published[0]
            else:
                agrees = computed == published

            if not agrees:
                findings.append(Finding(row.n, column, computed, published))

    return findings


def _render(lines):
    widths = [max(len(line[i]) for line in lines)
              for i in range(len(lines[0]))]
    return "\n".join(
        "  ".join(field.rjust(width) for field, width in zip(line, widths))
        for line in lines)


def render_multiplicity_table(checks):
    """ Render multiplicity checks as aligned text. """
    lines = [["N", "p"] + [symbol.value for symbol in eigen.TABLE_ORDER] +
             ["sum", "+-1", "+-j", "status"]]

    for check in checks:
        dimensions = check.profile.dimensions
        lines.append(
            [str(check.n), str(check.modulus.p)] +
            [str(dimensions.get(symbol, "-")) for symbol in eigen.TABLE_ORDER] +
            [str(check.profile.total), check.profile.real_orientation,
             str(check.profile.imaginary_orientation),
             "PASS" if check.passed() else "FAIL"])

    return _render(lines)


def render_parameters_table(rows, findings=()):
    """ Render parameter rows as aligned text.

    Each cell shows k and d; d is the exact distance if computed, otherwise
    '<=' the bound. Cells listed in ``findings`` are marked with '*'. The last
    field of each row lists the residue used for every column.
    """
    flagged = set((finding.n, finding.column) for finding in findings)

    header = ["N", "p"]
    for column in PARAMETER_ORDER:
        header += ["k" + column.value, "d" + column.value]
    lines = [header + ["lambda"]]

    for row in rows:
        line = [str(row.n), str(row.modulus.p)]
        residues = []
        for column in PARAMETER_ORDER:
            cell = row.cells.get(column)
            mark = "*" if (row.n, column) in flagged else ""
            if cell is None or cell.empty:
                line += ["-", "-" + mark]
            else:
                if cell.d_exact is None:
                    distance = "<=" + str(cell.d_bound)
                else:
                    distance = str(cell.d_exact)
                line += [str(cell.k), distance + mark]
            if cell is not None:
                residues.append(column.value + "=" + str(cell.lam.residue))
        lines.append(line + [",".join(residues)])

    return _render(lines)
