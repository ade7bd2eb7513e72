"""Weight enumerators, the MacWilliams transform and minimum-distance engines

All kernels walk the space in deterministic blocks of at most chunk_size
vectors and merge per-block counts by addition.
"""

import logging
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Iterator, Optional

import numpy as np

from algebra.gf import Field
from algebra.polyring import Poly
from codes.cyclic import CyclicCode, bch_lower_bound, check_matrix, generator_matrix
from utils.config import get_settings
from utils.errors import BudgetExceeded, CriterionMismatch, InconsistentEnumerator, UsageError

logger = logging.getLogger(__name__)

AUTO_LIMIT = 1 << 22
METHODS = ('auto', 'message-enum', 'macwilliams', 'low-weight')


@dataclass(frozen=True)
class WeightEnumerator:
    """A_0..A_n, codeword counts by Hamming weight"""

    counts: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def min_positive_weight(self) -> Optional[int]:
        return next((w for w, a in enumerate(self.counts) if w and a), None)

    @classmethod
    def zero_code(cls, n: int) -> "WeightEnumerator":
        return cls((1,) + (0,) * n)


@dataclass(frozen=True)
class DistanceReport:
    lower: int
    exact: Optional[int] = None
    method: str = 'bound-only'
    work: int = 0
    budget_exceeded: bool = False
    enumerator: Optional[WeightEnumerator] = None

    def as_dict(self) -> dict:
        report = {
            'lower': self.lower,
            'exact': self.exact,
            'method': self.method,
            'work': self.work,
            'budget_exceeded': self.budget_exceeded,
        }
        if self.enumerator is not None:
            report['weight_distribution'] = list(self.enumerator.counts)
        return report


def span_blocks(field: Field, rows: np.ndarray, chunk: int) -> Iterator[np.ndarray]:
    """Every linear combination of the rows, in blocks

    The first rows are tabulated once (at most chunk combinations); each
    block adds one combination of the remaining rows to the whole table.
    """
    k, n = rows.shape
    Q = field.order
    low = 0
    while low < k and Q ** (low + 1) <= chunk:
        low += 1
    scalars = np.arange(Q, dtype=np.int64)
    table = np.zeros((1, n), dtype=np.int64)
    for row in rows[:low]:
        multiples = field.mul_table[scalars[:, None], row[None, :]]
        table = field.vadd(table[None, :, :], multiples[:, None, :]).reshape(-1, n)
    high = rows[low:]
    for index in range(Q ** (k - low)):
        offset = np.zeros(n, dtype=np.int64)
        rest = index
        for row in high:
            rest, a = divmod(rest, Q)
            if a:
                offset = field.vadd(offset, field.mul_table[a, row])
        yield field.vadd(table, offset[None, :])


def enumerate_weights(field: Field, rows: np.ndarray, n: int, chunk: int) -> WeightEnumerator:
    counts = np.zeros(n + 1, dtype=np.int64)
    for block in span_blocks(field, rows, chunk):
        counts += np.bincount(np.count_nonzero(block, axis=1), minlength=n + 1)
    return WeightEnumerator(tuple(int(c) for c in counts))


def weight_enumerator(C: CyclicCode, budget: Optional[int] = None,
                      chunk: Optional[int] = None) -> WeightEnumerator:
    """Enumerator of C by walking all Q^k codewords"""
    settings = get_settings()
    budget = settings.budget if budget is None else budget
    if C.k == 0:
        return WeightEnumerator.zero_code(C.n)
    work = C.field.order ** C.k
    if work > budget:
        raise BudgetExceeded(f"{work} codewords exceed the budget of {budget}", work=0)
    logger.info(f"Enumerating {work} codewords of {C}")
    return enumerate_weights(C.field, generator_matrix(C).data, C.n, chunk or settings.chunk_size)


def dual_weight_enumerator(C: CyclicCode, budget: Optional[int] = None,
                           chunk: Optional[int] = None) -> WeightEnumerator:
    """Enumerator of the Hermitian dual, walking its Q^(n-k) codewords"""
    settings = get_settings()
    budget = settings.budget if budget is None else budget
    if C.k == C.n:
        return WeightEnumerator.zero_code(C.n)
    work = C.field.order ** (C.n - C.k)
    if work > budget:
        raise BudgetExceeded(f"{work} dual codewords exceed the budget of {budget}", work=0)
    logger.info(f"Enumerating {work} dual codewords of {C}")
    return enumerate_weights(C.field, check_matrix(C).data, C.n, chunk or settings.chunk_size)


def krawtchouk(w: int, j: int, n: int, Q: int) -> int:
    return sum((-1) ** s * (Q - 1) ** (w - s) * comb(j, s) * comb(n - j, w - s)
               for s in range(0, min(w, j) + 1))


def macwilliams_transform(W: WeightEnumerator, n: int, Q: int, k: int) -> WeightEnumerator:
    """Enumerator of the dimension-k code whose dual has enumerator W"""
    B = W.counts
    if len(B) != n + 1 or B[0] != 1:
        raise InconsistentEnumerator(f"enumerator must have n+1 = {n + 1} entries and A_0 = 1")
    dual_size = sum(B)
    if dual_size != Q ** (n - k):
        raise InconsistentEnumerator(f"enumerator sums to {dual_size}, expected {Q ** (n - k)}")
    counts = []
    for w in range(n + 1):
        total = sum(b * krawtchouk(w, j, n, Q) for j, b in enumerate(B) if b)
        quotient, remainder = divmod(total, dual_size)
        if remainder:
            raise InconsistentEnumerator(f"A_{w} = {total}/{dual_size} is not an integer")
        counts.append(quotient)
    if sum(counts) != Q ** k or min(counts) < 0:
        raise InconsistentEnumerator("transformed enumerator is not a code's enumerator")
    return WeightEnumerator(tuple(counts))


def colex_combinations(n: int, w: int) -> Iterator[tuple[int, ...]]:
    """w-subsets of range(n) in colexicographic order"""
    if w == 0:
        yield ()
        return
    for top in range(w - 1, n):
        for rest in colex_combinations(top, w - 1):
            yield rest + (top,)


def syndrome_columns(C: CyclicCode) -> np.ndarray:
    """Row j holds x^j mod g; a vector is a codeword iff its combination of rows vanishes"""
    r = C.gen.degree
    cols = np.zeros((C.n, r), dtype=np.int64)
    for j in range(C.n):
        rem = Poly.monomial(C.field, j) % C.gen
        cols[j, :len(rem.coeffs)] = rem.coeffs
    return cols


def _value_grid(Q: int, w: int) -> np.ndarray:
    """Nonzero value patterns of length w with the first entry fixed to 1"""
    tails = list(product(range(1, Q), repeat=w - 1))
    return np.array([(1,) + t for t in tails], dtype=np.int64).reshape(len(tails), w)


def low_weight_search(C: CyclicCode, budget: Optional[int] = None,
                      chunk: Optional[int] = None) -> tuple[int, tuple[int, ...], int]:
    """Smallest-weight nonzero codeword by exhausting supports weight by weight

    Returns (weight, codeword, work). Raises BudgetExceeded carrying the
    weight proven clear when the next weight would not fit.
    """
    settings = get_settings()
    budget = settings.budget if budget is None else budget
    chunk = chunk or settings.chunk_size
    field, n = C.field, C.n
    Q = field.order
    cols = syndrome_columns(C)
    r = cols.shape[1]
    work = 0
    for w in range(1, n + 1):
        cost = comb(n, w) * (Q - 1) ** (w - 1)
        if work + cost > budget:
            raise BudgetExceeded(f"low-weight search stopped before weight {w}",
                                 cleared=w - 1, work=work)
        values = _value_grid(Q, w)
        batch = max(1, chunk // max(1, len(values) * max(r, 1)))
        supports = colex_combinations(n, w)
        while True:
            block = [s for _, s in zip(range(batch), supports)]
            if not block:
                break
            sup = np.array(block, dtype=np.int64)
            synd = np.zeros((len(block), len(values), r), dtype=np.int64)
            for i in range(w):
                picked = cols[sup[:, i]]
                synd = field.vadd(synd, field.mul_table[values[None, :, i, None], picked[:, None, :]])
            hits = ~np.any(synd, axis=2)
            if hits.any():
                b, v = (int(x) for x in np.argwhere(hits)[0])
                word = [0] * n
                for pos, val in zip(block[b], values[v]):
                    word[pos] = int(val)
                return w, tuple(word), work + cost
        work += cost
        logger.debug(f"Weight {w} cleared for {C}")
    raise CriterionMismatch(f"no nonzero codeword found in {C}")


def min_distance(C: CyclicCode, method: str = 'auto', budget: Optional[int] = None,
                 chunk: Optional[int] = None) -> DistanceReport:
    """Exact minimum distance when affordable, else the BCH bound alone

    When the budget runs out the lower bound still takes the weights a
    partial low-weight search managed to clear.
    """
    if method not in METHODS:
        raise UsageError(f"unknown distance method {method!r}")
    settings = get_settings()
    budget = settings.budget if budget is None else budget
    lower = bch_lower_bound(C)
    if C.k == 0:
        return DistanceReport(lower=lower)
    Q = C.field.order
    if method == 'auto':
        limit = min(AUTO_LIMIT, budget)
        if Q ** C.k <= limit:
            method = 'message-enum'
        elif Q ** (C.n - C.k) <= limit:
            method = 'macwilliams'
        else:
            method = 'low-weight'
    logger.info(f"Minimum distance of {C} by {method}")

    enumerator = None
    try:
        if method == 'message-enum':
            enumerator = weight_enumerator(C, budget, chunk)
            exact, work = enumerator.min_positive_weight, Q ** C.k
        elif method == 'macwilliams':
            dual = dual_weight_enumerator(C, budget, chunk)
            enumerator = macwilliams_transform(dual, C.n, Q, C.k)
            exact, work = enumerator.min_positive_weight, Q ** (C.n - C.k)
        else:
            exact, _, work = low_weight_search(C, budget, chunk)
    except BudgetExceeded as exc:
        lower = max(lower, exc.details.get('cleared', 0) + 1)
        logger.warning(f"{exc}; reporting the lower bound {lower} only")
        return DistanceReport(lower=lower, work=exc.details.get('work', 0), budget_exceeded=True)

    if exact < lower:
        raise CriterionMismatch(f"distance {exact} below the BCH bound {lower} for {C}")
    return DistanceReport(lower=lower, exact=exact, method=method, work=work, enumerator=enumerator)


def find_codewords_of_weight(C: CyclicCode, w: int, limit: Optional[int] = None,
                             chunk: Optional[int] = None) -> list[tuple[int, ...]]:
    """Codewords of weight exactly w, by walking all Q^k codewords"""
    settings = get_settings()
    found = []
    if C.k == 0:
        return found
    if C.field.order ** C.k > settings.budget:
        raise BudgetExceeded(f"{C} has too many codewords to walk")
    for block in span_blocks(C.field, generator_matrix(C).data, chunk or settings.chunk_size):
        for row in block[np.count_nonzero(block, axis=1) == w]:
            found.append(tuple(int(v) for v in row))
            if limit is not None and len(found) >= limit:
                return found
    return found


def min_weight_codeword(C: CyclicCode, budget: Optional[int] = None) -> tuple[int, ...]:
    """A nonzero codeword of minimum weight"""
    return low_weight_search(C, budget)[1]
