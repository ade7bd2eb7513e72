"""Q-cyclotomic cosets modulo n, leader checks and the J+/J- sets"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional

import numpy as np
from sympy.ntheory import n_order

from utils.errors import NotCoprime, OutOfLemmaRange, OutOfRange, UnsupportedM

logger = logging.getLogger(__name__)

INTERSECTION_KINDS = ('primitive', 'third-even', 'third-odd')


def multiplicative_order(Q: int, n: int) -> int:
    """Smallest m >= 1 with Q^m = 1 mod n"""
    if n == 1:
        return 1
    return int(n_order(Q % n, n))


@dataclass(frozen=True)
class DefiningSet:
    """Sorted subset of Z_n (a union of cosets when built from a table)"""

    n: int
    elems: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __contains__(self, s: int) -> bool:
        return s % self.n in self.as_set

    @property
    def as_set(self) -> frozenset:
        return frozenset(self.elems)

    def scaled(self, factor: int) -> frozenset:
        """{factor * s mod n : s in S}"""
        return frozenset((factor * s) % self.n for s in self.elems)

    def __and__(self, other: "DefiningSet") -> "DefiningSet":
        return DefiningSet(self.n, tuple(sorted(self.as_set & other.as_set)))

    def __or__(self, other: "DefiningSet") -> "DefiningSet":
        return DefiningSet(self.n, tuple(sorted(self.as_set | other.as_set)))


@dataclass(frozen=True, eq=False)
class CosetTable:
    """Partition of Z_n into Q-cyclotomic cosets"""

    n: int
    Q: int
    m: int
    leaders: tuple[int, ...]
    leader_of: np.ndarray
    coset_of: dict

    def leader(self, s: int) -> int:
        return int(self.leader_of[s % self.n])

    def coset(self, s: int) -> tuple[int, ...]:
        return self.coset_of[self.leader(s)]

    def size(self, s: int) -> int:
        return len(self.coset(s))

    def union(self, indices: Iterable[int]) -> DefiningSet:
        """Union of the cosets containing the given residues"""
        members = set()
        for leader in {self.leader(i) for i in indices}:
            members.update(self.coset_of[leader])
        return DefiningSet(self.n, tuple(sorted(members)))

    def is_closed(self, elems: Iterable[int]) -> bool:
        elems = {s % self.n for s in elems}
        return all((s * self.Q) % self.n in elems for s in elems)

    def leaders_in(self, elems: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted({self.leader(s) for s in elems}))


@lru_cache(maxsize=64)
def coset_table(n: int, Q: int) -> CosetTable:
    """C_s = {s, sQ, sQ^2, ...} mod n for every leader s"""
    if n < 1:
        raise OutOfRange(f"length must be >= 1, got {n}", n=n)
    if gcd(n, Q) != 1:
        raise NotCoprime(f"gcd({n}, {Q}) != 1", n=n, Q=Q)
    leader_of = [-1] * n
    coset_of = {}
    for s in range(n):
        if leader_of[s] >= 0:
            continue
        members = [s]
        x = (s * Q) % n
        while x != s:
            members.append(x)
            x = (x * Q) % n
        for x in members:
            leader_of[x] = s
        coset_of[s] = tuple(sorted(members))
    leaders = tuple(sorted(coset_of))
    arr = np.array(leader_of, dtype=np.int64)
    arr.setflags(write=False)
    table = CosetTable(n=n, Q=Q, m=multiplicative_order(Q, n), leaders=leaders,
                       leader_of=arr, coset_of=coset_of)
    logger.debug(f"Coset table n={n} Q={Q}: {len(leaders)} cosets, m={table.m}")
    return table


@dataclass(frozen=True)
class LeaderCheck:
    """Leader status of s next to what the small-leader lemma predicts"""

    s: int
    is_leader: bool
    coset_size: int
    in_window: bool
    predicted_leader: Optional[bool] = None
    predicted_size: Optional[int] = None

    @property
    def agrees(self) -> bool:
        return ((self.predicted_leader is None or self.predicted_leader == self.is_leader)
                and (self.predicted_size is None or self.predicted_size == self.coset_size))


def leader_window(n: int, Q: int) -> Optional[int]:
    """Largest s covered by the small-leader lemma, or None when n is outside its range"""
    m = multiplicative_order(Q, n)
    if not Q ** (m // 2) < n <= Q ** m - 1:
        return None
    return (n * Q ** ((m + 1) // 2)) // (Q ** m - 1)


def is_leader_in_range(n: int, Q: int, s: int, strict: bool = False) -> LeaderCheck:
    """Leader status of s from the table, with the lemma's prediction when s is in its window"""
    table = coset_table(n, Q)
    s %= n
    is_leader = table.leader(s) == s
    size = table.size(s)
    limit = leader_window(n, Q)
    if limit is None or not 1 <= s <= limit:
        if strict:
            raise OutOfLemmaRange(f"s = {s} is outside the leader window for n = {n}", n=n, s=s)
        return LeaderCheck(s=s, is_leader=is_leader, coset_size=size, in_window=False)
    predicted = True if s % Q else None
    return LeaderCheck(s=s, is_leader=is_leader, coset_size=size, in_window=True,
                       predicted_leader=predicted, predicted_size=table.m)


def third_length(m: int) -> int:
    return (4 ** m - 1) // 3


def _check_third_m(m: int):
    if m < 2 or (m % 2 == 1 and m < 5):
        raise UnsupportedM(f"m = {m}: need m >= 2 even or m >= 5 odd", m=m)


def leader_exceptions_third(m: int) -> frozenset:
    """Non-leaders i in [1, 2^m] with 4 not dividing i, for n = (4^m - 1)/3, Q = 4"""
    _check_third_m(m)
    table = coset_table(third_length(m), 4)
    return frozenset(i for i in range(1, 2 ** m + 1) if i % 4 and table.leader(i) != i)


def claimed_exceptions_third(m: int) -> frozenset:
    """Exceptions as stated by the leader lemmas (statement reading for odd m)"""
    _check_third_m(m)
    if m % 2 == 0:
        return frozenset({(2 ** (m + 1) + 1) // 3})
    return frozenset({(2 ** (m + 1) + 2) // 3, (2 ** (m + 1) + 2 ** (m - 1) + 1) // 3})


def proof_second_exception(m: int) -> Fraction:
    """Second odd-m exception as derived in the lemma's proof; not an integer for odd m"""
    return Fraction(2 ** (m + 1) + 2 ** (m - 1) + 2, 3)


def describe_exceptions(m: int) -> dict:
    observed = leader_exceptions_third(m)
    claimed = claimed_exceptions_third(m)
    report = {
        'm': m,
        'n': third_length(m),
        'observed': sorted(observed),
        'claimed': sorted(claimed),
        'statement_reading_holds': observed == claimed,
    }
    if m % 2:
        proof = proof_second_exception(m)
        report['proof_reading'] = str(proof)
        report['proof_reading_holds'] = proof.denominator == 1 and int(proof) in observed
    return report


def j_sets(table: CosetTable, base: int, q: int, delta: int) -> tuple[DefiningSet, DefiningSet]:
    """J+ = union of C_(base+i), J- = union of C_(base-q*i), for 1 <= i <= delta-1"""
    n = table.n
    if not 2 <= delta <= n:
        raise OutOfRange(f"delta must lie in [2, {n}], got {delta}", delta=delta)
    plus = table.union((base + i) % n for i in range(1, delta))
    minus = table.union((base - q * i) % n for i in range(1, delta))
    return plus, minus


def _primitive_intersection(q: int, m: int, delta: int) -> int:
    Q = q * q
    if q < 2 or m < 2 or not 2 <= delta <= Q ** ((m + 1) // 2) + 1:
        raise OutOfRange(f"primitive intersection: q={q}, m={m}, delta={delta} outside hypotheses")
    if m % 2 == 0:
        return 0
    qm = q ** m
    if delta <= qm - 1:
        return 0
    for u in range(1, q):
        if u * qm <= delta <= (u + 1) * (qm - 1):
            return u * u * m
        for v in range(u):
            if delta == (u + 1) * (qm - 1) + v + 1:
                return (u * u + 2 * v + 1) * m
    return q * q * m


def _third_even_intersection(m: int, delta: int) -> int:
    if m < 2 or m % 2 or not 2 <= delta <= 2 ** m:
        raise OutOfRange(f"third-even intersection: m={m}, delta={delta} outside hypotheses")
    if delta <= (2 ** (m + 1) - 2) // 3:
        return 0
    if delta <= (2 ** (m + 1) + 2 ** (m - 1) - 1) // 3:
        return 2 * m
    if m < 4:
        raise OutOfRange(f"third-even intersection: top band needs m >= 4, got m={m}")
    return 4 * m


def _third_odd_intersection(m: int, delta: int) -> int:
    if m < 5 or m % 2 == 0 or not 2 <= delta <= 2 ** m:
        raise OutOfRange(f"third-odd intersection: m={m}, delta={delta} outside hypotheses")
    if delta <= (2 ** (m + 1) - 1) // 3:
        return 0
    if delta < 2 ** m:
        return 2 * m
    return 3 * m


def j_intersection_size_formula(kind: str, q: int, m: int, delta: int) -> int:
    """Closed-form |J+ & J-|; integer arithmetic only"""
    if kind == 'primitive':
        return _primitive_intersection(q, m, delta)
    if kind not in INTERSECTION_KINDS:
        raise OutOfRange(f"unknown intersection kind {kind!r}")
    if q != 2:
        raise OutOfRange(f"{kind} intersection needs q = 2, got {q}")
    if kind == 'third-even':
        return _third_even_intersection(m, delta)
    return _third_odd_intersection(m, delta)
