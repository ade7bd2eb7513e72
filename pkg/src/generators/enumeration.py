"""Every cyclic Hermitian LCD code of a given length, and the all-codes length test"""

import logging
from math import gcd
from typing import Iterator

from algebra.cosets import multiplicative_order
from algebra.gf import Field
from algebra.polyring import FactorSplit, big_field_context, factor_split
from codes.cyclic import CyclicCode, from_defining_set
from utils.errors import NotCoprime, TooManyFactors

logger = logging.getLogger(__name__)

MAX_FACTORS = 24


def all_hlcd_length_predicate(n: int, q: int) -> bool:
    """True iff q^j = -1 mod n for some odd j"""
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1", n=n, q=q)
    if n <= 2:
        return True
    order = multiplicative_order(q, n)
    return any(pow(q, j, n) == n - 1 for j in range(1, 2 * order, 2))


def _codes_from_groups(n: int, field: Field, groups: list[tuple[int, ...]]) -> Iterator[CyclicCode]:
    ctx = big_field_context(n, field)
    for mask in range(1 << len(groups)):
        chosen = [s for i, group in enumerate(groups) if mask >> i & 1 for s in group]
        yield from_defining_set(ctx, ctx.table.union(chosen).elems)


def enumerate_hlcd(n: int, field: Field) -> tuple[int, Iterator[CyclicCode]]:
    """Count 2^(u+v) and the codes generated by products of e_i and f_j f_jbar* choices"""
    split: FactorSplit = factor_split(n, field)
    if split.u + split.v > MAX_FACTORS:
        raise TooManyFactors(f"u + v = {split.u + split.v} exceeds {MAX_FACTORS}", n=n)
    groups = [(s,) for s in split.self_leaders] + list(split.pair_leaders)
    logger.info(f"Enumerating {2 ** len(groups)} Hermitian LCD codes of length {n}")
    return 2 ** len(groups), _codes_from_groups(n, field, groups)


def all_cyclic_codes(n: int, field: Field) -> Iterator[CyclicCode]:
    """Every coset-closed divisor of x^n - 1"""
    ctx = big_field_context(n, field)
    leaders = ctx.table.leaders
    if len(leaders) > MAX_FACTORS:
        raise TooManyFactors(f"{len(leaders)} cosets exceed {MAX_FACTORS}", n=n)
    return _codes_from_groups(n, field, [(s,) for s in leaders])
