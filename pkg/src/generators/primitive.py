"""Primitive-length Hermitian LCD codes around the offset n/e"""

from typing import Optional

from algebra.cosets import j_intersection_size_formula, j_sets
from algebra.gf import TABLE_LIMIT, hermitian_field
from algebra.polyring import big_field_context
from codes.cyclic import from_defining_set
from generators.base import ConstructionReport, FamilyGenerator, FamilyParams
from utils.errors import CriterionMismatch, FieldTooLarge, OutOfRange


class PrimitiveGenerator(FamilyGenerator):
    """Length n = Q^m - 1, defining set C_n^ plus J+(delta) and J-(delta) around n^ = n/e"""

    family = 'primitive-g1'

    @staticmethod
    def in_hypotheses(q: int, m: int, delta: int) -> bool:
        return m >= 2 and 2 <= delta <= (q * q) ** ((m + 1) // 2) + 1

    @staticmethod
    def k_formula(q: int, m: int, delta: int) -> Optional[int]:
        if not PrimitiveGenerator.in_hypotheses(q, m, delta):
            return None
        Q = q * q
        k = Q ** m - 2 - 2 * (delta - 1 - (delta - 1) // Q) * m
        return k + j_intersection_size_formula('primitive', q, m, delta)

    @staticmethod
    def d_bound_formula(q: int, m: int, delta: int) -> Optional[int]:
        if not PrimitiveGenerator.in_hypotheses(q, m, delta):
            return None
        return delta + 1 + (delta - 1) // q

    @staticmethod
    def check_offset_identities(n: int, n_hat: int, q: int, delta: int):
        """-q(n^+i) = n^-qi and -q(n^-qi) = Q(n^+i) modulo n"""
        Q = q * q
        for i in range(1, delta):
            if (-q * (n_hat + i)) % n != (n_hat - q * i) % n:
                raise CriterionMismatch(f"-q(n^+{i}) != n^-q{i} mod {n}")
            if (-q * (n_hat - q * i)) % n != (Q * (n_hat + i)) % n:
                raise CriterionMismatch(f"-q(n^-q{i}) != Q(n^+{i}) mod {n}")

    def generate(self, q: int, m: int, delta: int, e: int = 1) -> ConstructionReport:
        field = hermitian_field(q)
        Q = q * q
        if m < 1:
            raise OutOfRange(f"m must be >= 1, got {m}", m=m)
        if e < 1 or (q + 1) % e:
            raise OutOfRange(f"e = {e} does not divide q + 1 = {q + 1}", e=e)
        if Q ** m > TABLE_LIMIT:
            raise FieldTooLarge(f"GF({Q}^{m}) exceeds the table limit", q=q, m=m)
        n = Q ** m - 1
        if not 2 <= delta <= n:
            raise OutOfRange(f"delta must lie in [2, {n}], got {delta}", delta=delta)
        n_hat = n // e

        self.check_offset_identities(n, n_hat, q, delta)
        ctx = big_field_context(n, field)
        plus, minus = j_sets(ctx.table, n_hat, q, delta)
        elems = plus | minus | ctx.table.union([n_hat])
        code = from_defining_set(ctx, elems.elems)

        notes = {'n_hat': n_hat, 'j_plus': len(plus), 'j_minus': len(minus),
                 'j_intersection': len(plus & minus)}
        params = FamilyParams(family=self.family, q=q, m=m, delta=delta, e=e, b=n_hat + 1)
        return self._report(params, code, self.k_formula(q, m, delta),
                            self.d_bound_formula(q, m, delta), notes)


def construct_g1(q: int, m: int, delta: int, e: int = 1, distance: str = 'off',
                 budget=None) -> ConstructionReport:
    return PrimitiveGenerator(distance, budget).generate(q, m, delta, e)
