"""Cyclic codes over GF(Q): construction, Hermitian LCD criteria, matrices and the BCH bound"""

import dataclasses
from typing import Iterable, Sequence

import numpy as np

from algebra.cosets import DefiningSet
from algebra.gf import Field
from algebra.linalg import Matrix
from algebra.polyring import (
    BigFieldContext,
    Poly,
    big_field_context,
    conj_reciprocal,
    conjugate_poly,
    reciprocal,
    x_n_minus_one,
)
from utils.errors import (
    CriterionMismatch,
    DegenerateCode,
    DimensionMismatch,
    NotADivisor,
    NotCosetClosed,
)


@dataclasses.dataclass(frozen=True)
class CyclicCode:
    """The ideal <g(x)> of GF(Q)[x]/(x^n - 1)"""

    field: Field
    n: int
    gen: Poly
    defining_set: DefiningSet
    check: Poly
    context: BigFieldContext = dataclasses.field(compare=False, repr=False, default=None)

    @property
    def k(self) -> int:
        return self.n - self.gen.degree

    @property
    def q(self) -> int:
        return self.field.q

    def __str__(self) -> str:
        return f"[{self.n},{self.k}] cyclic code over {self.field}"


def _assemble(ctx: BigFieldContext, gen: Poly, defining_set: DefiningSet) -> CyclicCode:
    check, rem = divmod(x_n_minus_one(ctx.field, ctx.n), gen)
    if not gen.is_monic or not rem.is_zero:
        raise NotADivisor(f"{gen} does not divide x^{ctx.n} - 1", n=ctx.n)
    if len(defining_set) != gen.degree:
        raise CriterionMismatch(f"|S| = {len(defining_set)} but deg g = {gen.degree}", n=ctx.n)
    return CyclicCode(field=ctx.field, n=ctx.n, gen=gen, defining_set=defining_set,
                      check=check, context=ctx)


def from_generator(field: Field, n: int, g: Poly) -> CyclicCode:
    """Code generated by a monic divisor g of x^n - 1; S read off the roots of g"""
    if g.is_zero or not g.is_monic:
        raise NotADivisor("generator must be monic and nonzero", n=n)
    if divmod(x_n_minus_one(field, n), g)[1].coeffs:
        raise NotADivisor(f"{g} does not divide x^{n} - 1", n=n)
    ctx = big_field_context(n, field)
    return _assemble(ctx, g, ctx.defining_set_of(g))


def from_defining_set(ctx: BigFieldContext, elems: Iterable[int]) -> CyclicCode:
    """Code whose generator is the product of m_s over the leaders in S"""
    elems = sorted({s % ctx.n for s in elems})
    if not ctx.table.is_closed(elems):
        raise NotCosetClosed(f"defining set is not a union of cosets modulo {ctx.n}", n=ctx.n)
    return _assemble(ctx, ctx.generator_for(elems), DefiningSet(ctx.n, tuple(elems)))


def polynomial_criterion(C: CyclicCode) -> bool:
    """g equals its conjugate-reciprocal"""
    return C.gen == conj_reciprocal(C.gen)


def defining_set_criterion(C: CyclicCode) -> bool:
    """S = -qS"""
    return C.defining_set.scaled(-C.q) == C.defining_set.as_set


def root_criterion(C: CyclicCode) -> bool:
    """beta^(-q i) is a root of g for every root beta^i"""
    ctx = C.context
    table = ctx.table
    for s in table.leaders_in(C.defining_set):
        if ctx.evaluate(C.gen, ctx.beta_powers[(-C.q * s) % C.n]) != 0:
            return False
    return True


def hermitian_lcd_criteria(C: CyclicCode) -> dict:
    return {
        'polynomial': polynomial_criterion(C),
        'defining_set': defining_set_criterion(C),
        'roots': root_criterion(C),
    }


def is_hermitian_lcd(C: CyclicCode) -> bool:
    criteria = hermitian_lcd_criteria(C)
    if len(set(criteria.values())) != 1:
        raise CriterionMismatch(f"Hermitian LCD criteria disagree for {C}: {criteria}", n=C.n)
    return criteria['polynomial']


def is_euclidean_lcd(C: CyclicCode) -> bool:
    """g is self-reciprocal"""
    return C.gen == reciprocal(C.gen)


def hermitian_dual(C: CyclicCode) -> CyclicCode:
    """Generator is the conjugate-reciprocal of the check polynomial"""
    gen = conjugate_poly(reciprocal(C.check))
    elems = C.defining_set.as_set
    dual_set = sorted({(-C.q * s) % C.n for s in range(C.n) if s not in elems})
    return _assemble(C.context, gen, DefiningSet(C.n, tuple(dual_set)))


def _shift_rows(g: Poly, count: int, n: int) -> np.ndarray:
    rows = np.zeros((count, n), dtype=np.int64)
    for i in range(count):
        rows[i, i:i + len(g.coeffs)] = g.coeffs
    return rows


def generator_matrix(C: CyclicCode) -> Matrix:
    """k x n, row i = x^i g(x)"""
    if C.k == 0:
        raise DegenerateCode(f"{C} has no generator matrix", n=C.n, k=C.k)
    return Matrix(C.field, _shift_rows(C.gen, C.k, C.n), cols=C.n)


def check_matrix(C: CyclicCode) -> Matrix:
    """(n-k) x n, row i = x^i times the Hermitian dual's generator"""
    if C.k == C.n:
        raise DegenerateCode(f"{C} has no check matrix", n=C.n, k=C.k)
    dual = hermitian_dual(C)
    return Matrix(C.field, _shift_rows(dual.gen, C.n - C.k, C.n), cols=C.n)


def longest_cyclic_run(elems: Iterable[int], n: int) -> int:
    members = {s % n for s in elems}
    if len(members) == n:
        return n
    best = 0
    for s in members:
        if (s - 1) % n in members:
            continue
        length = 1
        while (s + length) % n in members:
            length += 1
        best = max(best, length)
    return best


def bch_lower_bound(C: CyclicCode) -> int:
    """One more than the longest run of cyclically consecutive exponents in S"""
    return longest_cyclic_run(C.defining_set, C.n) + 1


def encode(C: CyclicCode, message: Sequence[int]) -> tuple[int, ...]:
    """Coefficients of m(x) g(x)"""
    if len(message) != C.k:
        raise DimensionMismatch(f"message of length {len(message)} for {C}")
    word = Poly(C.field, tuple(message)) * C.gen
    return word.coeffs + (0,) * (C.n - len(word.coeffs))


def is_codeword(C: CyclicCode, vector: Sequence[int]) -> bool:
    if len(vector) != C.n:
        raise DimensionMismatch(f"vector of length {len(vector)} for {C}")
    return (Poly(C.field, tuple(vector)) % C.gen).is_zero
