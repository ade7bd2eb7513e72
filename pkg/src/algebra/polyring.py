"""Polynomials over GF(Q), minimal polynomials and the factor split of x^n - 1"""

import logging
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Sequence

from algebra.cosets import CosetTable, DefiningSet, coset_table
from algebra.gf import Field, SubfieldEmbedding, build_extension
from utils.errors import (
    CriterionMismatch,
    DivisionByZero,
    NoConjugationDefined,
    NotInSubfield,
    ProjectionFailure,
    ZeroConstantTerm,
)

logger = logging.getLogger(__name__)

CONTEXT_TABLE_LIMIT = 1 << 20


@dataclass(frozen=True)
class Poly:
    """Dense polynomial, constant term first, no trailing zeros"""

    field: Field
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = list(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(int(c) for c in coeffs))

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff: int = 1) -> "Poly":
        return cls(field, (0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)} over {self.field})"

    def __add__(self, other: "Poly") -> "Poly":
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, tuple(out))

    def __neg__(self) -> "Poly":
        return Poly(self.field, tuple(self.field.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        f = self.field
        if self.is_zero or other.is_zero:
            return Poly(f)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        add, mul = f.add, f.mul
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = add(out[i + j], mul(a, b))
        return Poly(f, tuple(out))

    def scale(self, c: int) -> "Poly":
        return Poly(self.field, tuple(self.field.mul(c, a) for a in self.coeffs))

    def shift(self, i: int) -> "Poly":
        """x^i * self"""
        return Poly(self.field, (0,) * i + self.coeffs) if self.coeffs else self

    def monic(self) -> "Poly":
        if self.is_zero or self.is_monic:
            return self
        return self.scale(self.field.inv(self.leading))

    def __divmod__(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        f = self.field
        if divisor.is_zero:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        inv_lead = f.inv(divisor.leading)
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            factor = f.mul(c, inv_lead)
            quot[i - dd] = factor
            for j, d in enumerate(divisor.coeffs):
                if d:
                    rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(factor, d))
        return Poly(f, tuple(quot)), Poly(f, tuple(rem[:dd]))

    def __floordiv__(self, divisor: "Poly") -> "Poly":
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: "Poly") -> "Poly":
        return divmod(self, divisor)[1]

    def __call__(self, x: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def derivative(self) -> "Poly":
        f = self.field
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            term = 0
            for _ in range(i % f.p):
                term = f.add(term, c)
            out.append(term)
        return Poly(f, tuple(out))


def x_n_minus_one(field: Field, n: int) -> Poly:
    return Poly(field, (field.neg(1),) + (0,) * (n - 1) + (1,))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0"""
    while not g.is_zero:
        f, g = g, f % g
    return f.monic()


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if f.is_zero or g.is_zero:
        return Poly(f.field)
    return ((f * g) // poly_gcd(f, g)).monic()


def poly_product(polys: Sequence[Poly], field: Field) -> Poly:
    return reduce(lambda a, b: a * b, polys, Poly.one(field))


def reciprocal(f: Poly) -> Poly:
    """f*(x) = f_0^-1 x^deg f(1/x)"""
    if f.is_zero or f.coeffs[0] == 0:
        raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
    inv0 = f.field.inv(f.coeffs[0])
    return Poly(f.field, tuple(f.field.mul(inv0, c) for c in reversed(f.coeffs)))


def conjugate_poly(f: Poly) -> Poly:
    if not f.field.is_square:
        raise NoConjugationDefined(f"{f.field} is not a square extension")
    return Poly(f.field, tuple(f.field.conjugate(c) for c in f.coeffs))


def conj_reciprocal(f: Poly) -> Poly:
    """The conjugate-reciprocal polynomial"""
    return conjugate_poly(reciprocal(f))


class BigFieldContext:
    """GF(Q^m) holding beta = alpha^((Q^m-1)/n), a primitive n-th root of unity"""

    def __init__(self, n: int, field: Field):
        self.n = n
        self.field = field
        self.table: CosetTable = coset_table(n, field.order)
        self.m = self.table.m
        self.big = build_extension(field.p, field.k * self.m, CONTEXT_TABLE_LIMIT)
        self.embedding = SubfieldEmbedding(field, self.big)
        self.beta = self.big.pow(self.big.generator, (self.big.order - 1) // n)
        powers = [1] * n
        for i in range(1, n):
            powers[i] = self.big.mul(powers[i - 1], self.beta)
        self.beta_powers = tuple(powers)
        self._minimal: dict[int, Poly] = {}
        logger.info(f"Context for n={n} over {field}: {self.big}, {len(self.table.leaders)} cosets")

    def __repr__(self) -> str:
        return f"BigFieldContext(n={self.n}, {self.field} -> {self.big})"

    def embed(self, a: int) -> int:
        return self.embedding.embed(a)

    def project(self, x: int) -> int:
        return self.embedding.project(x)

    def evaluate(self, f: Poly, x: int) -> int:
        """f(x) for x in the big field"""
        big = self.big
        acc = 0
        for c in reversed(f.coeffs):
            acc = big.add(big.mul(acc, x), self.embed(c))
        return acc

    def minimal_polynomial(self, s: int) -> Poly:
        leader = self.table.leader(s)
        cached = self._minimal.get(leader)
        if cached is not None:
            return cached
        big = self.big
        coeffs = [1]
        for i in self.table.coset_of[leader]:
            root = self.beta_powers[i]
            shifted = [0] + coeffs
            for j, c in enumerate(coeffs):
                shifted[j] = big.sub(shifted[j], big.mul(root, c))
            coeffs = shifted
        try:
            poly = Poly(self.field, tuple(self.project(c) for c in coeffs))
        except NotInSubfield as exc:
            raise ProjectionFailure(f"m_{leader} has a coefficient outside {self.field}",
                                    leader=leader) from exc
        self._minimal[leader] = poly
        return poly

    def generator_for(self, elems) -> Poly:
        """Product of m_s over the leaders of a coset-closed set"""
        return poly_product([self.minimal_polynomial(s) for s in self.table.leaders_in(elems)],
                            self.field)

    def defining_set_of(self, g: Poly) -> DefiningSet:
        """{i : g(beta^i) = 0}, testing one representative per coset"""
        members = []
        for s in self.table.leaders:
            if self.evaluate(g, self.beta_powers[s]) == 0:
                members.extend(self.table.coset_of[s])
        return DefiningSet(self.n, tuple(sorted(members)))


@lru_cache(maxsize=128)
def big_field_context(n: int, field: Field) -> BigFieldContext:
    return BigFieldContext(n, field)


def minimal_polynomial(ctx: BigFieldContext, s: int) -> Poly:
    """m_s(x) = product over i in C_s of (x - beta^i)"""
    return ctx.minimal_polynomial(s)


@dataclass(frozen=True)
class FactorSplit:
    """x^n - 1 = e_1...e_u * f_1 f_1bar* ... f_v f_vbar*"""

    n: int
    field: Field
    self_conjugate: tuple[Poly, ...]
    paired: tuple[tuple[Poly, Poly], ...]
    self_leaders: tuple[int, ...]
    pair_leaders: tuple[tuple[int, int], ...]

    @property
    def u(self) -> int:
        return len(self.self_conjugate)

    @property
    def v(self) -> int:
        return len(self.paired)

    def product(self) -> Poly:
        factors = list(self.self_conjugate) + [f for pair in self.paired for f in pair]
        return poly_product(factors, self.field)


def factor_split(n: int, field: Field) -> FactorSplit:
    """Classify each m_s by whether it equals its conjugate-reciprocal"""
    ctx = big_field_context(n, field)
    q = field.q
    table = ctx.table
    self_conjugate, paired = [], []
    self_leaders, pair_leaders = [], []
    seen = set()
    for s in table.leaders:
        if s in seen:
            continue
        partner = table.leader(-q * s)
        f = ctx.minimal_polynomial(s)
        if conj_reciprocal(f) != ctx.minimal_polynomial(partner):
            raise CriterionMismatch(f"conjugate-reciprocal of m_{s} is not m_{partner}", n=n)
        seen.update((s, partner))
        if partner == s:
            self_conjugate.append(f)
            self_leaders.append(s)
        else:
            paired.append((f, ctx.minimal_polynomial(partner)))
            pair_leaders.append((s, partner))
    split = FactorSplit(n=n, field=field, self_conjugate=tuple(self_conjugate),
                        paired=tuple(paired), self_leaders=tuple(self_leaders),
                        pair_leaders=tuple(pair_leaders))
    logger.info(f"Factor split n={n} over {field}: u={split.u}, v={split.v}")
    return split
