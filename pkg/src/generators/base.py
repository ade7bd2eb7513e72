"""Shared plumbing for the code-family generators"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from algebra.polyring import BigFieldContext, Poly
from codes.cyclic import CyclicCode, bch_lower_bound, is_hermitian_lcd
from codes.distance import DistanceReport, min_distance
from utils.errors import OutOfRange, UsageError

logger = logging.getLogger(__name__)

FAMILIES = ('hop', 'primitive-g1', 'quaternary-g2')
DISTANCE_MODES = ('off', 'auto')

Dimension = Union[int, Fraction]


@dataclass(frozen=True)
class FamilyParams:
    family: str
    q: int
    t: Optional[int] = None
    m: Optional[int] = None
    delta: Optional[int] = None
    e: Optional[int] = None
    b: Optional[int] = None

    def as_dict(self) -> dict:
        return {key: value for key, value in self.__dict__.items() if value is not None}


def dimension_value(k: Optional[Dimension]):
    """JSON-friendly dimension: int when integral, 'p/q' string otherwise"""
    if k is None:
        return None
    if isinstance(k, Fraction):
        return int(k) if k.denominator == 1 else str(k)
    return k


@dataclass(frozen=True)
class ConstructionReport:
    params: FamilyParams
    code: CyclicCode
    k_formula: Optional[Dimension]
    k_actual: int
    d_bound_formula: Optional[int]
    d_bound_actual: int
    hlcd: bool
    d_exact: Optional[int] = None
    distance: Optional[DistanceReport] = None
    notes: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k_matches(self) -> Optional[bool]:
        if self.k_formula is None:
            return None
        return self.k_formula == self.k_actual

    def as_dict(self) -> dict:
        f = self.code.field
        report = {
            'field': {'p': f.p, 'k': f.k},
            'family': self.params.family,
            'params': self.params.as_dict(),
            'n': self.n,
            'k': self.k_actual,
            'd': self.d_exact,
            'k_formula': dimension_value(self.k_formula),
            'k_actual': self.k_actual,
            'k_matches': self.k_matches,
            'd_bound_formula': self.d_bound_formula,
            'bch_bound': self.d_bound_actual,
            'hlcd': self.hlcd,
            'generator': list(self.code.gen.coeffs),
            'defining_set': list(self.code.defining_set.elems),
        }
        if self.distance is not None:
            report['distance'] = self.distance.as_dict()
        if self.notes:
            report['notes'] = self.notes
        return report

    def as_row(self) -> dict:
        return {
            'n': self.n,
            'q': self.params.q,
            'delta': self.params.delta,
            'k_formula': dimension_value(self.k_formula),
            'k_actual': self.k_actual,
            'bch_bound': self.d_bound_actual,
            'd_exact': self.d_exact,
            'hlcd': self.hlcd,
        }


def bch_generator(ctx: BigFieldContext, delta: int, b: int) -> Poly:
    """lcm(m_b, m_(b+1), ..., m_(b+delta-2))"""
    if not 2 <= delta <= ctx.n:
        raise OutOfRange(f"delta must lie in [2, {ctx.n}], got {delta}", delta=delta)
    return ctx.generator_for(ctx.table.union(b + i for i in range(delta - 1)))


class FamilyGenerator:
    """Base class: builds the report around a constructed code"""

    family = ''

    def __init__(self, distance: str = 'off', budget: Optional[int] = None):
        if distance not in DISTANCE_MODES:
            raise UsageError(f"distance mode must be one of {DISTANCE_MODES}, got {distance!r}")
        self.distance = distance
        self.budget = budget

    def _report(self, params: FamilyParams, code: CyclicCode, k_formula: Optional[Dimension],
                d_bound_formula: Optional[int], notes: Optional[dict] = None) -> ConstructionReport:
        distance = None
        if self.distance == 'auto':
            distance = min_distance(code, budget=self.budget)
        report = ConstructionReport(
            params=params,
            code=code,
            k_formula=k_formula,
            k_actual=code.k,
            d_bound_formula=d_bound_formula,
            d_bound_actual=bch_lower_bound(code),
            hlcd=is_hermitian_lcd(code),
            d_exact=distance.exact if distance else None,
            distance=distance,
            notes=notes or {},
        )
        if report.k_matches is False:
            logger.warning(f"{self.family}: dimension formula gives {k_formula}, "
                           f"construction gives {code.k} ({params})")
        logger.info(f"Constructed {code} for {params.family}")
        return report
