"""Finite fields GF(p^k): arithmetic, Frobenius maps and subfield embeddings

Elements are plain ints in [0, p^k) whose base-p digits are polynomial-basis
coordinates, constant term least significant. For GF(4) this gives
0, 1, 2 = w, 3 = w^2 = w + 1.
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from typing import Optional

import numpy as np
from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_pow_mod

from utils.errors import (
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    NoConjugationDefined,
    NoPrimitivePolynomial,
    NotInSubfield,
    NotPrime,
    OutOfRange,
)

logger = logging.getLogger(__name__)

FieldElement = int

TABLE_LIMIT = 1 << 26
DENSE_LIMIT = 1 << 10
LIST_LIMIT = 1 << 20
EXTENSION_LIMIT = 1 << 64
TABLE_CHUNK = 1 << 18


@dataclass(frozen=True, eq=False)
class ExpLogTable:
    """Powers of the generator and their discrete logarithms"""

    exp: np.ndarray
    log: np.ndarray
    generator: int


def to_digits(value: int, p: int, k: int) -> list[int]:
    """Base-p digits of value, constant term first, padded to k"""
    digits = []
    for _ in range(k):
        value, d = divmod(value, p)
        digits.append(d)
    return digits


def from_digits(digits, p: int) -> int:
    """Inverse of to_digits"""
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


def _is_primitive(coeffs: list[int], p: int, prime_factors: list[int]) -> bool:
    """True when the residue of x has order p^k - 1 modulo the monic polynomial"""
    if coeffs[0] % p == 0:
        return False
    k = len(coeffs) - 1
    span = p ** k - 1
    modulus = [ZZ(c % p) for c in reversed(coeffs)]
    x = [ZZ(1), ZZ(0)]
    if gf_pow_mod(x, span, modulus, p, ZZ) != [1]:
        return False
    return all(gf_pow_mod(x, span // r, modulus, p, ZZ) != [1] for r in prime_factors)


@lru_cache(maxsize=None)
def find_primitive_modulus(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic primitive polynomial of degree k, comparing high-degree coefficients first

    Returned low-first, leading 1 included.
    """
    prime_factors = sorted(int(r) for r in factorint(p ** k - 1))
    # The lower coefficients read as a base-p number with c_{k-1} most
    # significant, so counting upward is the high-first lexicographic scan.
    for code in range(p ** k):
        coeffs = to_digits(code, p, k) + [1]
        if _is_primitive(coeffs, p, prime_factors):
            return tuple(coeffs)
    raise NoPrimitivePolynomial(f"no primitive polynomial of degree {k} over GF({p})", p=p, k=k)


class Field:
    """GF(p^k) defined by a primitive modulus

    With tables=True the field carries exp/log tables (and dense add/mul
    tables when small enough for the vectorised kernels); otherwise
    multiplication runs directly in the polynomial basis.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...], tables: bool = True):
        self.p = p
        self.k = k
        self.modulus = tuple(modulus)
        self.order = p ** k
        self.has_tables = tables
        self.generator = p if k > 1 else (-self.modulus[0]) % p
        self._modulus_bits = sum(c << i for i, c in enumerate(self.modulus)) if p == 2 else 0
        self.table: Optional[ExpLogTable] = None
        self._exp = self._log = None
        self._mul_rows = self._add_rows = None

        if tables:
            self.table = self._build_tables()
            if self.order <= LIST_LIMIT:
                self._exp = self.table.exp.tolist()
                self._log = self.table.log.tolist()
            else:
                self._exp = self.table.exp
                self._log = self.table.log
            if self.order <= DENSE_LIMIT:
                self._mul_rows = self.mul_table.tolist()
                if p != 2:
                    self._add_rows = self.add_table.tolist()

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    # Table construction

    def _companion(self) -> np.ndarray:
        """Row j holds the digits of x^(j+1) mod the modulus"""
        k, p = self.k, self.p
        step = np.zeros((k, k), dtype=np.int64)
        for j in range(k - 1):
            step[j, j + 1] = 1
        step[k - 1] = [(-c) % p for c in self.modulus[:k]]
        return step

    def _build_tables(self) -> ExpLogTable:
        p, k = self.p, self.k
        span = self.order - 1
        weights = p ** np.arange(k, dtype=np.int64)
        exp = np.empty(span, dtype=np.int32)
        exp[0] = 1
        # exp[filled:2*filled] = exp[0:filled] * alpha^filled, a GF(p)-linear map on digits
        step = self._companion()
        filled = 1
        while filled < span:
            take = min(filled, span - filled)
            for start in range(0, take, TABLE_CHUNK):
                stop = min(start + TABLE_CHUNK, take)
                block = exp[start:stop].astype(np.int64)
                digits = (block[:, None] // weights[None, :]) % p
                exp[filled + start:filled + stop] = ((digits @ step) % p) @ weights
            step = (step @ step) % p
            filled += take
        log = np.zeros(self.order, dtype=np.int32)
        log[exp] = np.arange(span, dtype=np.int32)
        logger.debug(f"Built exp/log tables for {self}")
        return ExpLogTable(exp=exp, log=log, generator=self.generator)

    # Scalar arithmetic

    def digits(self, a: FieldElement) -> list[int]:
        """Polynomial-basis coefficients of a"""
        return to_digits(a, self.p, self.k)

    def _digitwise_add(self, a: int, b: int) -> int:
        p = self.p
        out, place = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * place
            place *= p
        return out

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        """Digitwise sum mod p; XOR in characteristic 2"""
        if self.p == 2:
            return a ^ b
        if self._add_rows is not None:
            return self._add_rows[a][b]
        return self._digitwise_add(a, b)

    def neg(self, a: FieldElement) -> FieldElement:
        """Additive inverse"""
        if self.p == 2 or a == 0:
            return a
        return from_digits([(-d) % self.p for d in self.digits(a)], self.p)

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.add(a, self.neg(b))

    def _basis_mul(self, a: int, b: int) -> int:
        """Multiplication in the polynomial basis, no tables"""
        if self.p == 2:
            top = 1 << self.k
            out = 0
            while b:
                if b & 1:
                    out ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= self._modulus_bits
            return out
        p, k = self.p, self.k
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d] % p
            if c:
                for i in range(k):
                    prod[d - k + i] -= c * self.modulus[i]
        return from_digits([c % p for c in prod[:k]], p)

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        """Product through the dense table, the log tables or the basis, whichever exists"""
        if self._mul_rows is not None:
            return self._mul_rows[a][b]
        if a == 0 or b == 0:
            return 0
        if self.has_tables:
            return int(self._exp[(self._log[a] + self._log[b]) % (self.order - 1)])
        return self._basis_mul(a, b)

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        """a^e for any integer e; negative e needs a != 0"""
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise DivisionByZero("zero has no inverse")
            return 0
        span = self.order - 1
        if self.has_tables:
            return int(self._exp[(int(self._log[a]) * e) % span])
        e %= span
        result, base = 1, a
        while e:
            if e & 1:
                result = self._basis_mul(result, base)
            base = self._basis_mul(base, base)
            e >>= 1
        return result

    def inv(self, a: FieldElement) -> FieldElement:
        """Multiplicative inverse, a^(order - 2)"""
        if a == 0:
            raise DivisionByZero("zero has no inverse")
        return self.pow(a, -1)

    def div(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.mul(a, self.inv(b))

    def log(self, a: FieldElement) -> int:
        """Discrete log to the base of the generator"""
        if a == 0:
            raise DivisionByZero("log of zero")
        if not self.has_tables:
            raise FieldTooLarge(f"{self} has no log table")
        return int(self._log[a])

    def frobenius(self, a: FieldElement, j: int = 1) -> FieldElement:
        """a^(p^j); j is taken modulo k"""
        return self.pow(a, self.p ** (j % self.k))

    @property
    def is_square(self) -> bool:
        return self.k % 2 == 0

    @property
    def q(self) -> int:
        """Size of the subfield fixed by conjugation"""
        if not self.is_square:
            raise NoConjugationDefined(f"{self} is not a square extension")
        return self.p ** (self.k // 2)

    def conjugate(self, a: FieldElement) -> FieldElement:
        """x -> x^q on GF(q^2)"""
        if not self.is_square:
            raise NoConjugationDefined(f"{self} is not a square extension")
        return self.frobenius(a, self.k // 2)

    def elements(self) -> range:
        """All field elements in encoding order"""
        return range(self.order)

    # Dense tables and vectorised kernels

    def _require_dense(self):
        if self.order > DENSE_LIMIT or not self.has_tables:
            raise FieldTooLarge(f"{self} is too large for dense tables", order=self.order)

    @cached_property
    def _digit_matrix(self) -> np.ndarray:
        values = np.arange(self.order, dtype=np.int64)
        return (values[:, None] // (self.p ** np.arange(self.k, dtype=np.int64))[None, :]) % self.p

    @cached_property
    def mul_table(self) -> np.ndarray:
        self._require_dense()
        span = self.order - 1
        exp = self.table.exp.astype(np.int64)
        logs = self.table.log[1:].astype(np.int64)
        table = np.zeros((self.order, self.order), dtype=np.int64)
        table[1:, 1:] = exp[(logs[:, None] + logs[None, :]) % span]
        return table

    @cached_property
    def add_table(self) -> np.ndarray:
        self._require_dense()
        values = np.arange(self.order, dtype=np.int64)
        if self.p == 2:
            return values[:, None] ^ values[None, :]
        weights = self.p ** np.arange(self.k, dtype=np.int64)
        digits = self._digit_matrix
        return ((digits[:, None, :] + digits[None, :, :]) % self.p) @ weights

    @cached_property
    def neg_table(self) -> np.ndarray:
        self._require_dense()
        weights = self.p ** np.arange(self.k, dtype=np.int64)
        return ((-self._digit_matrix) % self.p) @ weights

    @cached_property
    def conj_table(self) -> np.ndarray:
        self._require_dense()
        return np.array([self.conjugate(a) for a in self.elements()], dtype=np.int64)

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self.add_table[a, b]

    def vneg(self, a: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a
        return self.neg_table[a]

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.mul_table[a, b]

    def vconj(self, a: np.ndarray) -> np.ndarray:
        return self.conj_table[a]

    def vsum(self, arr: np.ndarray, axis: int = -1) -> np.ndarray:
        """Field sum along one axis"""
        if self.p == 2:
            return np.bitwise_xor.reduce(arr, axis=axis)
        arr = np.moveaxis(arr, axis, 0)
        if arr.shape[0] == 0:
            return np.zeros(arr.shape[1:], dtype=np.int64)
        acc = arr[0]
        for part in arr[1:]:
            acc = self.add_table[acc, part]
        return acc

    def vdot(self, rows: np.ndarray, matrix: np.ndarray) -> np.ndarray:
        """Row vectors (b x n) times an n x r matrix"""
        acc = np.zeros((rows.shape[0], matrix.shape[1]), dtype=np.int64)
        for l in range(matrix.shape[0]):
            acc = self.vadd(acc, self.mul_table[rows[:, l, None], matrix[l][None, :]])
        return acc


@lru_cache(maxsize=None)
def build_field(p: int, k: int = 1) -> Field:
    """Table-backed GF(p^k) with the canonical primitive modulus"""
    if not isprime(p):
        raise NotPrime(f"{p} is not prime", p=p)
    if k < 1:
        raise OutOfRange(f"extension degree must be >= 1, got {k}", k=k)
    if p ** k > TABLE_LIMIT:
        raise FieldTooLarge(f"GF({p}^{k}) exceeds the table limit of {TABLE_LIMIT}", p=p, k=k)
    modulus = find_primitive_modulus(p, k)
    field = Field(p, k, modulus)
    logger.info(f"Built {field} with modulus {list(modulus)}")
    return field


@lru_cache(maxsize=None)
def build_extension(p: int, k: int, table_limit: int = TABLE_LIMIT) -> Field:
    """GF(p^k) for big-field contexts: table-backed up to table_limit, table-free above"""
    if p ** k <= table_limit:
        return build_field(p, k)
    if not isprime(p):
        raise NotPrime(f"{p} is not prime", p=p)
    if p ** k > EXTENSION_LIMIT:
        raise FieldTooLarge(f"GF({p}^{k}) is too large even without tables", p=p, k=k)
    field = Field(p, k, find_primitive_modulus(p, k), tables=False)
    logger.info(f"Built table-free {field}")
    return field


def hermitian_field(q: int) -> Field:
    """GF(q^2) for a prime power q"""
    factors = factorint(q) if q > 1 else {}
    if len(factors) != 1:
        raise NotPrime(f"q = {q} is not a prime power", q=q)
    (p, a), = factors.items()
    return build_field(int(p), 2 * int(a))


class SubfieldEmbedding:
    """Canonical embedding GF(p^a) -> GF(p^(a*m))

    The small generator maps to the first primitive power of
    alpha^((|big|-1)/(|small|-1)) that is a root of the small modulus.
    """

    def __init__(self, small: Field, big: Field):
        if small.p != big.p or big.k % small.k:
            raise FieldMismatch(f"{small} is not a subfield of {big}")
        self.small = small
        self.big = big
        span = small.order - 1
        gamma = big.pow(big.generator, (big.order - 1) // span)
        root = None
        for t in range(1, span + 1):
            if gcd(t, span) != 1:
                continue
            candidate = big.pow(gamma, t)
            if self._modulus_at(candidate) == 0:
                root = candidate
                break
        if root is None:
            raise NoPrimitivePolynomial(f"no image for the generator of {small} in {big}")
        self.root = root

        images = [0] * small.order
        element, image = 1, 1
        for _ in range(span):
            images[element] = image
            element = small.mul(element, small.generator)
            image = big.mul(image, root)
        self._images = images
        self._preimages = {image: a for a, image in enumerate(images)}

    def _modulus_at(self, x: int) -> int:
        acc = 0
        for c in reversed(self.small.modulus):
            acc = self.big.add(self.big.mul(acc, x), c)
        return acc

    def embed(self, a: FieldElement) -> FieldElement:
        return self._images[a]

    def project(self, x: FieldElement) -> FieldElement:
        try:
            return self._preimages[x]
        except KeyError:
            raise NotInSubfield(f"{x} is not fixed by x -> x^{self.small.order}", value=x)

    def is_in_subfield(self, x: FieldElement) -> bool:
        return self.big.pow(x, self.small.order) == x


def subfield_embed(ctx, a: FieldElement) -> FieldElement:
    """Image of a small-field element in the context's big field"""
    return ctx.embedding.embed(a)


def subfield_project(ctx, x: FieldElement) -> FieldElement:
    """Small-field preimage of a big-field element fixed by x -> x^Q"""
    return ctx.embedding.project(x)
