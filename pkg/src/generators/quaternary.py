"""Quaternary Hermitian LCD codes of length (4^m - 1)/3"""

from fractions import Fraction
from typing import Optional

from algebra.cosets import describe_exceptions, j_sets, third_length
from algebra.gf import hermitian_field
from algebra.polyring import big_field_context
from codes.cyclic import from_defining_set
from generators.base import ConstructionReport, Dimension, FamilyGenerator, FamilyParams
from utils.errors import OutOfRange


class QuaternaryGenerator(FamilyGenerator):
    """Defining set C_0 plus J+(delta) and J-(delta) around 0, over GF(4)"""

    family = 'quaternary-g2'

    @staticmethod
    def correction(m: int, delta: int) -> Optional[Dimension]:
        """Piecewise constant c in k = n - 2(delta - floor((delta-1)/4) - c)m - 1"""
        if not 2 <= delta <= 2 ** m:
            return None
        if m >= 2 and m % 2 == 0:
            first = (2 ** (m + 1) - 2) // 3
            pivot = (2 ** (m + 1) + 1) // 3
            last = (2 ** (m + 1) + 2 ** (m - 1) - 1) // 3
            top = None
        elif m >= 5:
            first = (2 ** (m + 1) - 1) // 3
            pivot = (2 ** (m + 1) + 2) // 3
            last = (2 ** (m + 1) + 2 ** (m - 1) + 1) // 3
            top = Fraction(9, 2)
        else:
            return None
        if delta <= first:
            return 1
        if delta == pivot:
            return 2
        if delta <= last:
            return 3
        if top is not None and delta == 2 ** m:
            return top
        return 4

    @staticmethod
    def k_formula(m: int, delta: int) -> Optional[Dimension]:
        c = QuaternaryGenerator.correction(m, delta)
        if c is None:
            return None
        k = third_length(m) - 2 * (delta - (delta - 1) // 4 - c) * m - 1
        if isinstance(k, Fraction) and k.denominator == 1:
            return int(k)
        return k

    @staticmethod
    def d_bound_formula(m: int, delta: int) -> Optional[int]:
        if not 2 <= delta <= 2 ** m:
            return None
        return delta + 1 + (delta - 1) // 2

    def generate(self, m: int, delta: int) -> ConstructionReport:
        if m < 1:
            raise OutOfRange(f"m must be >= 1, got {m}", m=m)
        field = hermitian_field(2)
        n = third_length(m)
        if not 2 <= delta <= n:
            raise OutOfRange(f"delta must lie in [2, {n}], got {delta}", delta=delta)
        ctx = big_field_context(n, field)
        plus, minus = j_sets(ctx.table, 0, 2, delta)
        elems = plus | minus | ctx.table.union([0])
        code = from_defining_set(ctx, elems.elems)

        notes = {'j_plus': len(plus), 'j_minus': len(minus),
                 'j_intersection': len(plus & minus)}
        if m >= 5 and m % 2:
            notes['leader_exceptions'] = describe_exceptions(m)
        params = FamilyParams(family=self.family, q=2, m=m, delta=delta, b=1)
        return self._report(params, code, self.k_formula(m, delta),
                            self.d_bound_formula(m, delta), notes)


def construct_g2(m: int, delta: int, distance: str = 'off', budget=None) -> ConstructionReport:
    return QuaternaryGenerator(distance, budget).generate(m, delta)
