""" Exact arithmetic in prime fields GF(p).

This module provides the prime modulus and residue types on which everything
else is built, together with the number-theoretic utilities the transform needs:
primality, quadratic residuosity, modular square roots and elements of a given
multiplicative order.
"""

import logging
import math
import numbers

from fourier_codes.core import mixins


logger = logging.getLogger(__name__)

# Square roots are found by exhaustive search below this modulus and by
# Tonelli-Shanks above it.
SQRT_SEARCH_LIMIT = 10 ** 6


class FieldError(ValueError):
    """ Raised for invalid moduli, mixed moduli and division by zero. """


def is_prime(n):
    """ Decide primality by trial division up to the square root.

    Args:
        n (int): The number to test.

    Returns:
        True if ``n`` is prime, False otherwise.
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False

    divisor = 3
    while divisor * divisor <= n:
        if n % divisor == 0:
            return False
        divisor += 2

    return True


def prime_factors(n):
    """ Compute the distinct prime factors of a positive integer.

    Args:
        n (int): A positive integer.

    Returns:
        list(int): The distinct prime factors of ``n`` in increasing order.
    """
    factors = []
    divisor = 2
    while divisor * divisor <= n:
        if n % divisor == 0:
            factors.append(divisor)
            while n % divisor == 0:
                n //= divisor
        divisor += 1

    if n > 1:
        factors.append(n)

    return factors


class PrimeModulus:
    """ An odd prime p, the characteristic of the field GF(p).

    Calling a modulus with an integer produces the corresponding residue, so
    ``gf41 = PrimeModulus(41); gf41(13)`` is the element 13 of GF(41).

    Attributes:
        p (int): The prime.
    """
    def __init__(self, p):
        """ Validate and store a prime modulus.

        Args:
            p (int): An odd prime.

        Raises:
            FieldError: If ``p`` is not an odd prime.
        """
        if isinstance(p, PrimeModulus):
            p = p.p

        if isinstance(p, bool) or not isinstance(p, numbers.Integral):
            raise FieldError("Modulus must be an integer, got " + repr(p) + ".")

        p = int(p)

        if p == 2:
            raise FieldError("Characteristic 2 is not supported: 2 has no "
                             "inverse in GF(2).")
        if not is_prime(p):
            raise FieldError(str(p) + " is not an odd prime.")

        self.p = p

    def __call__(self, value):
        return Residue(value, self)

    def __eq__(self, other):
        if isinstance(other, PrimeModulus):
            return self.p == other.p
        return NotImplemented

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.p)

    def __int__(self):
        return self.p

    def __index__(self):
        return self.p

    def __repr__(self):
        return "GF(" + str(self.p) + ")"

    def zero(self):
        return Residue(0, self)

    def one(self):
        return Residue(1, self)

    def elements(self):
        """ Iterate over all residues 0, 1, ..., p-1. """
        for value in range(self.p):
            yield Residue(value, self)


class Residue(mixins.ComparableMixin):
    """ An element of GF(p), always stored reduced to [0, p-1].

    Residues support the arithmetic operators and can be mixed with plain
    integers, which are reduced into the same field. Residues of different
    fields never mix.

    Attributes:
        value (int): The representative in [0, p-1].
        modulus (PrimeModulus): The field the residue belongs to.
    """
    __slots__ = ("value", "modulus")

    def __init__(self, value, modulus):
        if not isinstance(modulus, PrimeModulus):
            modulus = PrimeModulus(modulus)

        self.value = int(value) % modulus.p
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise FieldError("Cannot combine residues of " +
                                 repr(self.modulus) + " and " +
                                 repr(other.modulus) + ".")
            return other
        elif isinstance(other, numbers.Integral):
            return Residue(other, self.modulus)
        else:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Residue(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Residue(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Residue(other.value - self.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Residue(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return Residue(pow(self.value, int(exponent), self.modulus.p),
                       self.modulus)

    def inverse(self):
        """ Compute the multiplicative inverse.

        Returns:
            Residue: The residue b with self * b = 1.

        Raises:
            FieldError: If the residue is zero.
        """
        if self.value == 0:
            raise FieldError("0 has no inverse in " + repr(self.modulus) + ".")
        # Fermat: a^(p-2) = a^-1
        return Residue(pow(self.value, self.modulus.p - 2, self.modulus.p),
                       self.modulus)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.value == other.value
        elif isinstance(other, numbers.Integral):
            return self.value == int(other) % self.modulus.p
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Residue):
            return self.value < other.value
        return self.value < other

    def __hash__(self):
        return hash((self.value, self.modulus.p))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return "Residue(" + str(self.value) + ", " + str(self.modulus.p) + ")"


def _check_same_field(a, b):
    if a.modulus != b.modulus:
        raise FieldError("Modulus mismatch: " + repr(a.modulus) + " and " +
                         repr(b.modulus) + ".")


def add(a, b):
    _check_same_field(a, b)
    return a + b


def sub(a, b):
    _check_same_field(a, b)
    return a - b


def mul(a, b):
    _check_same_field(a, b)
    return a * b


def neg(a):
    return -a


def inv(a):
    """ Multiplicative inverse of a nonzero residue.

    Raises:
        FieldError: If ``a`` is zero.
    """
    return a.inverse()


def power(a, e):
    """ Compute a^e for a non-negative exponent by square-and-multiply. """
    if e < 0:
        raise FieldError("Exponent must be non-negative, got " + str(e) + ".")

    result = 1
    base = a.value
    p = a.modulus.p
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1

    return Residue(result, a.modulus)


def is_quadratic_residue(a):
    """ Decide via Euler's criterion whether ``a`` has a square root.

    Zero counts as a square.
    """
    if a.value == 0:
        return True
    p = a.modulus.p
    return pow(a.value, (p - 1) // 2, p) == 1


def _tonelli_shanks(a, p):
    # p - 1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1

    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1

    m = s
    c = pow(z, q, p)
    t = pow(a, q, p)
    r = pow(a, (q + 1) // 2, p)

    while t != 1:
        i, t_squared = 0, t
        while t_squared != 1:
            t_squared = t_squared * t_squared % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m = i
        c = b * b % p
        t = t * c % p
        r = r * b % p

    return r


def sqrt_mod(a):
    """ Compute both square roots of a residue.

    The first root is the canonical one: the representative in [1, (p-1)/2].

    Args:
        a (Residue): The residue to take the root of.

    Returns:
        (Residue, Residue): The pair (b, p-b) with b^2 = a and b <= (p-1)/2, or
        None if ``a`` is a quadratic non-residue. For a = 0 the pair is (0, 0).
    """
    modulus = a.modulus
    p = modulus.p

    if a.value == 0:
        return Residue(0, modulus), Residue(0, modulus)

    if not is_quadratic_residue(a):
        return None

    if p < SQRT_SEARCH_LIMIT:
        root = next(b for b in range(1, (p - 1) // 2 + 1)
                    if b * b % p == a.value)
    else:
        root = _tonelli_shanks(a.value, p)
        root = min(root, p - root)

    return Residue(root, modulus), Residue(p - root, modulus)


def has_order(a, order):
    """ Decide whether ``a`` has multiplicative order exactly ``order``. """
    p = a.modulus.p
    if a.value == 0 or pow(a.value, order, p) != 1:
        return False
    return all(pow(a.value, order // q, p) != 1 for q in prime_factors(order))


def multiplicative_order(a):
    """ Compute the multiplicative order of a nonzero residue.

    Raises:
        FieldError: If ``a`` is zero.
    """
    if a.value == 0:
        raise FieldError("0 has no multiplicative order.")

    order = a.modulus.p - 1
    for q in prime_factors(order):
        while order % q == 0 and pow(a.value, order // q, a.modulus.p) == 1:
            order //= q

    return order


def primitive_root(modulus):
    """ Find the smallest generator of the multiplicative group GF(p)*. """
    modulus = PrimeModulus(modulus)
    p = modulus.p
    factors = prime_factors(p - 1)
    for value in range(2, p):
        if all(pow(value, (p - 1) // q, p) != 1 for q in factors):
            return Residue(value, modulus)


def element_of_order(n, modulus):
    """ Find the smallest residue of multiplicative order ``n``.

    The elements of order ``n`` are the powers g^((p-1)/n * t) of a generator g
    with t coprime to ``n``, so only those are compared.

    Args:
        n (int): The requested order, at least 1.
        modulus (PrimeModulus): The field.

    Returns:
        Residue: The smallest element of order ``n``, or None if ``n`` does not
        divide p - 1.

    Raises:
        FieldError: If ``n`` < 1.
    """
    modulus = PrimeModulus(modulus)
    if n < 1:
        raise FieldError("Order must be positive, got " + str(n) + ".")

    p = modulus.p
    if (p - 1) % n != 0:
        return None

    base = pow(primitive_root(modulus).value, (p - 1) // n, p)
    value = min(pow(base, t, p) for t in range(1, n + 1)
                if math.gcd(t, n) == 1)

    return Residue(value, modulus)


def is_valid_fntt_params(modulus, n):
    """ Check the conditions under which a unitary length-n transform exists.

    The length must divide p - 1 (so an element of order n exists) and must be a
    quadratic residue modulo p (so that sqrt(n) exists).

    Args:
        modulus (PrimeModulus or int): The field.
        n (int): The transform length.

    Returns:
        True if both conditions hold, False otherwise.
    """
    p = int(modulus)
    if n < 1 or (p - 1) % n != 0:
        return False
    return pow(n % p, (p - 1) // 2, p) == 1
