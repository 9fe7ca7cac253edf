"""
Finite-field arithmetic for F_q (q = p^e) and for the extension
L = F_q[X]/(X^{q-1} - gamma) used by the list decoder's root-finding step.

F_q itself is a ``galois`` field class: prime fields use residue arithmetic,
extension fields use log/antilog lookup tables keyed to the primitive element,
and the modulus is the Conway polynomial where tabulated (else the
lexicographically first irreducible), which is ``galois``' own default.
Elements of F_q are ``galois.FieldArray`` scalars.
"""

import logging
from functools import lru_cache
from typing import Iterable, Optional

import galois
import numpy as np

from .config import get_config
from .exceptions import (
    DivisionByZero,
    DomainError,
    FieldMismatch,
    NonPrimeCharacteristic,
    OrderTooLarge,
    ReducibleModulus,
)

logger = logging.getLogger(__name__)

FieldElement = galois.FieldArray


class Field:
    """
    The finite field F_q, q = p^e, with a verified primitive element.

    The wrapped ``galois`` class is available as ``field.GF``; words and
    polynomials throughout the package are arrays and ``galois.Poly``
    objects over it.
    """

    def __init__(self, p: int, e: int = 1):
        """
        Build F_{p^e}.

        Args:
            p: Characteristic (prime)
            e: Extension degree (>= 1)

        Raises:
            NonPrimeCharacteristic: If p is not prime
            OrderTooLarge: If p^e exceeds the configured maximum order
            ReducibleModulus: If the modulus fails the irreducibility test
        """
        if not galois.is_prime(int(p)):
            raise NonPrimeCharacteristic(f"Characteristic must be prime, got {p}")
        if e < 1:
            raise DomainError(f"Extension degree must be >= 1, got {e}")

        max_order = get_config().get("fields", "max_order")
        if p ** e > max_order:
            raise OrderTooLarge(f"Field order {p}^{e} exceeds the supported maximum {max_order}")

        self.characteristic = int(p)
        self.degree = int(e)
        self.order = self.characteristic ** self.degree

        mode = "jit-calculate" if self.degree == 1 else "jit-lookup"
        self.GF = galois.GF(self.order, compile=mode)

        if self.degree > 1 and not self.GF.irreducible_poly.is_irreducible():
            raise ReducibleModulus(f"Modulus {self.GF.irreducible_poly} is reducible over GF({p})")

        self.gamma = self.GF.primitive_element
        gamma_order = int(self.gamma.multiplicative_order())
        if gamma_order != self.order - 1:
            raise ReducibleModulus(
                f"Element {self.gamma} has order {gamma_order}, expected {self.order - 1}"
            )

        logger.debug(f"Constructed GF({self.order}) with gamma={int(self.gamma)}")

    def __repr__(self) -> str:
        return f"Field(q={self.order}, p={self.characteristic}, e={self.degree})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and other.order == self.order

    def __hash__(self) -> int:
        return hash(("Field", self.order))

    @property
    def modulus(self) -> Optional[galois.Poly]:
        """Irreducible modulus over F_p (None for prime fields)."""
        return self.GF.irreducible_poly if self.degree > 1 else None

    def __call__(self, values) -> galois.FieldArray:
        return self.GF(values)

    def zero(self) -> galois.FieldArray:
        return self.GF(0)

    def one(self) -> galois.FieldArray:
        return self.GF(1)

    def elements(self) -> galois.FieldArray:
        """All q elements in integer-representation order."""
        return self.GF.elements

    def random(self, shape, rng: np.random.Generator) -> galois.FieldArray:
        return self.GF.Random(shape, seed=rng)

    def random_nonzero(self, shape, rng: np.random.Generator) -> galois.FieldArray:
        return self.GF.Random(shape, low=1, seed=rng)

    def poly(self, coeffs: Iterable) -> galois.Poly:
        """Polynomial from coefficients in ascending degree order."""
        if not isinstance(coeffs, self.GF):
            coeffs = self.GF(np.atleast_1d(np.asarray(coeffs, dtype=np.int64)))
        coeffs = np.atleast_1d(coeffs)
        return galois.Poly(coeffs, order="asc")

    def contains(self, a) -> bool:
        return isinstance(a, self.GF)

    def _check(self, *elements):
        for a in elements:
            if not isinstance(a, self.GF):
                raise FieldMismatch(f"{a!r} is not an element of GF({self.order})")

    def add(self, a, b) -> galois.FieldArray:
        self._check(a, b)
        return a + b

    def sub(self, a, b) -> galois.FieldArray:
        self._check(a, b)
        return a - b

    def mul(self, a, b) -> galois.FieldArray:
        self._check(a, b)
        return a * b

    def inv(self, a) -> galois.FieldArray:
        self._check(a)
        if a == 0:
            raise DivisionByZero(f"Zero has no inverse in GF({self.order})")
        return np.reciprocal(a)

    def pow(self, a, exponent: int) -> galois.FieldArray:
        self._check(a)
        if exponent < 0 and a == 0:
            raise DivisionByZero(f"Negative power of zero in GF({self.order})")
        return a ** int(exponent)


@lru_cache(maxsize=None)
def field_new(p: int, e: int = 1) -> Field:
    """
    Return F_{p^e}; cached, fields are immutable.

    Raises:
        NonPrimeCharacteristic, OrderTooLarge
    """
    return Field(p, e)


def field_for_order(q: int) -> Field:
    """
    Return the field of order q.

    Raises:
        DomainError: If q is not a prime power
    """
    q = int(q)
    if q < 2 or not galois.is_prime_power(q):
        raise DomainError(f"Field order must be a prime power, got {q}")
    primes, exponents = galois.factors(q)
    return field_new(int(primes[0]), int(exponents[0]))


def binomial_is_irreducible(q: int, t: int, order_a: int) -> bool:
    """
    Irreducibility of X^t - a over F_q where a has multiplicative order ``order_a``.

    X^t - a is irreducible iff every prime factor of t divides ord(a) but not
    (q - 1)/ord(a), and q = 1 (mod 4) whenever 4 | t.
    """
    if t == 1:
        return True
    primes, _ = galois.factors(int(t))
    cofactor = (q - 1) // order_a
    for r in primes:
        if order_a % r != 0 or cofactor % r == 0:
            return False
    if t % 4 == 0 and q % 4 != 1:
        return False
    return True


class BigField:
    """
    L = F_q[X]/(X^{q-1} - gamma), of dimension q - 1 over F_q.

    Elements are coefficient vectors of length q - 1 over F_q on the monomial
    basis 1, X, ..., X^{q-2}. Since X^{q-1} = gamma, the q-power Frobenius is
    diagonal on this basis: X^j maps to gamma^j X^j.
    """

    def __init__(self, base: Field):
        if base.order < 3:
            raise DomainError(f"Extension X^(q-1) - gamma needs q >= 3, got q={base.order}")

        self.base = base
        self.GF = base.GF
        self.gamma = base.gamma
        self.dimension = base.order - 1

        gamma_order = int(self.gamma.multiplicative_order())
        if not binomial_is_irreducible(base.order, self.dimension, gamma_order):
            raise ReducibleModulus(f"X^{self.dimension} - {int(self.gamma)} is reducible over GF({base.order})")

        self._frobenius_diagonal = self.gamma ** np.arange(self.dimension)
        logger.debug(f"Constructed extension of GF({base.order}) with dimension {self.dimension}")

    def __repr__(self) -> str:
        return f"BigField(q={self.base.order}, dimension={self.dimension})"

    def zero(self) -> galois.FieldArray:
        return self.GF.Zeros(self.dimension)

    def one(self) -> galois.FieldArray:
        z = self.zero()
        z[0] = 1
        return z

    def generator(self) -> galois.FieldArray:
        """The class of X."""
        z = self.zero()
        z[1] = 1
        return z

    def reduce(self, coeffs) -> galois.FieldArray:
        """
        Reduce an ascending coefficient vector (any length) modulo X^{q-1} - gamma.

        Args:
            coeffs: FieldArray, integer sequence or galois.Poly

        Returns:
            Coefficient vector of length q - 1
        """
        if isinstance(coeffs, galois.Poly):
            coeffs = coeffs.coeffs[::-1]
        coeffs = self.GF(coeffs) if not isinstance(coeffs, self.GF) else coeffs
        out = self.zero()
        dim = self.dimension
        for block, start in enumerate(range(0, coeffs.size, dim)):
            chunk = coeffs[start:start + dim]
            out[:chunk.size] += chunk * (self.gamma ** block)
        return out

    def element(self, coeffs) -> galois.FieldArray:
        return self.reduce(coeffs)

    def add(self, u, v) -> galois.FieldArray:
        return u + v

    def shift(self, c, j: int) -> galois.FieldArray:
        """c * X^j for a reduced element c."""
        dim = self.dimension
        j %= dim
        out = self.zero()
        out[j:] = c[:dim - j]
        if j:
            out[:j] = c[dim - j:] * self.gamma
        return out

    def mul(self, u, v) -> galois.FieldArray:
        # schoolbook product, then one fold since deg < 2(q-1)
        return self.reduce(np.convolve(u, v))

    def pow(self, z, exponent: int) -> galois.FieldArray:
        result = self.one()
        base = z.copy()
        e = int(exponent)
        while e > 0:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius_q(self, z) -> galois.FieldArray:
        """z^q, coordinate-wise: c_j -> c_j * gamma^j."""
        return z * self._frobenius_diagonal

    def multiplication_matrix(self, c) -> galois.FieldArray:
        """F_q-matrix of z -> c*z on the monomial basis (column j = c * X^j)."""
        matrix = self.GF.Zeros((self.dimension, self.dimension))
        for j in range(self.dimension):
            matrix[:, j] = self.shift(c, j)
        return matrix

    def linearized_matrix(self, a1, a2) -> galois.FieldArray:
        """
        F_q-matrix of z -> a1*z + a2*z^q.

        Column j is (a1 + gamma^j a2) * X^j because Frobenius scales X^j by gamma^j.
        """
        dim = self.dimension
        matrix = self.GF.Zeros((dim, dim))
        for j in range(dim):
            matrix[:, j] = self.shift(a1 + self._frobenius_diagonal[j] * a2, j)
        return matrix


@lru_cache(maxsize=None)
def big_field_new(base: Field) -> BigField:
    """
    Return L = F_q[X]/(X^{q-1} - gamma) for the given base field.

    Raises:
        DomainError: If q < 3
        ReducibleModulus: If gamma is not primitive
    """
    return BigField(base)

