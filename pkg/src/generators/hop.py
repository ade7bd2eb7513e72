"""Quaternary Hermitian LCD codes of length 2^(2t+1) + 1"""

from algebra.gf import hermitian_field
from algebra.polyring import big_field_context
from codes.cyclic import from_generator
from generators.base import FamilyGenerator, FamilyParams, ConstructionReport, bch_generator
from utils.errors import OutOfRange


class HopGenerator(FamilyGenerator):
    """Codes generated by g_(n,4,0) with n = 2^(2t+1) + 1 over GF(4)"""

    family = 'hop'

    # remarks from the table of best known codes, recorded as given
    REMARKS = {
        1: 'almost optimal',
        2: 'almost optimal',
        3: 'optimal',
    }

    @staticmethod
    def length(t: int) -> int:
        return 2 ** (2 * t + 1) + 1

    @staticmethod
    def k_formula(t: int) -> int:
        return 2 ** (2 * t + 1) - 4 * t - 2

    def generate(self, t: int) -> ConstructionReport:
        if t < 0:
            raise OutOfRange(f"t must be >= 0, got {t}", t=t)
        field = hermitian_field(2)
        n = self.length(t)
        ctx = big_field_context(n, field)
        notes = {}
        if t == 0:
            # delta = 4 exceeds n = 3; the three minimal polynomials still cover Z_3
            gen = ctx.generator_for(ctx.table.union(range(3)))
            notes['degenerate'] = 'S = Z_3, the zero code'
        else:
            gen = bch_generator(ctx, 4, 0)
        code = from_generator(field, n, gen)
        if t in self.REMARKS:
            notes['remark'] = self.REMARKS[t]
        params = FamilyParams(family=self.family, q=2, t=t, delta=4, b=0)
        return self._report(params, code, self.k_formula(t), 6, notes)


def construct_hop(t: int, distance: str = 'off', budget=None) -> ConstructionReport:
    return HopGenerator(distance, budget).generate(t)
