"""Hermitian orthogonal direct sum masking with fault detection

A sensitive word x and a mask y are stored as z = xG + yH, where G
generates a Hermitian LCD code C and H generates its Hermitian dual.
A fault e is caught by recovering y from z + e and comparing it with the
value the caller kept; e goes unnoticed exactly when it lies in C.
"""

import logging
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Optional, Sequence

import numpy as np

from algebra.linalg import Matrix, conj_transpose, mat_inv, rank, vec_mat, vstack
from codes.cyclic import CyclicCode, check_matrix, generator_matrix, is_hermitian_lcd
from codes.distance import colex_combinations, min_distance
from utils.config import get_settings
from utils.distributions import Distributions
from utils.errors import (
    CriterionMismatch,
    DegenerateCode,
    DetectionFailure,
    DimensionMismatch,
    NotHermitianLcd,
    Singular,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class OdsmInstance:
    code: CyclicCode
    G: Matrix
    H: Matrix
    inv_GG: Matrix
    inv_HH: Matrix
    x_map: Matrix
    y_map: Matrix

    @property
    def field(self):
        return self.code.field

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k


@dataclass(frozen=True)
class MaskedState:
    z: tuple[int, ...]


@dataclass(frozen=True)
class CheckResult:
    detected: bool
    recovered_y: tuple[int, ...]

    def as_dict(self) -> dict:
        return {'detected': self.detected, 'recovered_y': list(self.recovered_y)}


def setup(C: CyclicCode) -> OdsmInstance:
    """Matrices and recovery inverses for a Hermitian LCD code with 0 < k < n"""
    if not 0 < C.k < C.n:
        raise DegenerateCode(f"{C} cannot mask: need 0 < k < n", n=C.n, k=C.k)
    if not is_hermitian_lcd(C):
        raise NotHermitianLcd(f"{C} is not Hermitian LCD", n=C.n, k=C.k)
    G = generator_matrix(C)
    H = check_matrix(C)
    G_dagger, H_dagger = conj_transpose(G), conj_transpose(H)
    if (G @ H_dagger).data.any():
        raise CriterionMismatch(f"G H^dagger != 0 for {C}")
    try:
        inv_GG = mat_inv(G @ G_dagger)
        inv_HH = mat_inv(H @ H_dagger)
    except Singular as exc:
        raise CriterionMismatch(f"Gram matrix singular for Hermitian LCD {C}") from exc
    if rank(vstack(G, H)) != C.n:
        raise CriterionMismatch(f"rows of G and H do not span the space for {C}")
    logger.info(f"ODSM instance ready for {C}")
    return OdsmInstance(code=C, G=G, H=H, inv_GG=inv_GG, inv_HH=inv_HH,
                        x_map=G_dagger @ inv_GG, y_map=H_dagger @ inv_HH)


def _check_vector(inst: OdsmInstance, vector: Sequence[int], length: int, name: str):
    if len(vector) != length:
        raise DimensionMismatch(f"{name} has length {len(vector)}, expected {length}")
    if any(not 0 <= v < inst.field.order for v in vector):
        raise DimensionMismatch(f"{name} has entries outside {inst.field}")


def mask(inst: OdsmInstance, x: Sequence[int], y: Sequence[int]) -> MaskedState:
    """z = xG + yH"""
    _check_vector(inst, x, inst.k, 'x')
    _check_vector(inst, y, inst.n - inst.k, 'y')
    f = inst.field
    xG = vec_mat(f, x, inst.G)
    yH = vec_mat(f, y, inst.H)
    return MaskedState(tuple(f.add(a, b) for a, b in zip(xG, yH)))


def recover_x(inst: OdsmInstance, z) -> tuple[int, ...]:
    """x = z G^dagger (G G^dagger)^-1"""
    z = z.z if isinstance(z, MaskedState) else z
    _check_vector(inst, z, inst.n, 'z')
    return vec_mat(inst.field, z, inst.x_map)


def recover_y(inst: OdsmInstance, z) -> tuple[int, ...]:
    """y = z H^dagger (H H^dagger)^-1"""
    z = z.z if isinstance(z, MaskedState) else z
    _check_vector(inst, z, inst.n, 'z')
    return vec_mat(inst.field, z, inst.y_map)


def inject_and_check(inst: OdsmInstance, z, epsilon: Sequence[int],
                     y_expected: Sequence[int]) -> CheckResult:
    """Recover y from z + epsilon and compare with the held mask; x is never computed"""
    z = z.z if isinstance(z, MaskedState) else z
    _check_vector(inst, z, inst.n, 'z')
    _check_vector(inst, epsilon, inst.n, 'epsilon')
    _check_vector(inst, y_expected, inst.n - inst.k, 'y')
    f = inst.field
    faulty = tuple(f.add(a, e) for a, e in zip(z, epsilon))
    recovered = recover_y(inst, faulty)
    detected = recovered != tuple(y_expected)
    # syndrome-style cross-check: epsilon lies in C iff epsilon H^dagger = 0
    in_code = not any(vec_mat(f, epsilon, conj_transpose(inst.H)))
    if detected == in_code:
        raise CriterionMismatch("masked-state check and syndrome check disagree")
    return CheckResult(detected=detected, recovered_y=recovered)


@dataclass(frozen=True)
class WeightStats:
    weight: int
    total: int
    detected: int
    undetected: int
    exhaustive: bool

    def as_dict(self) -> dict:
        return {
            'weight': self.weight,
            'total': self.total,
            'detected': self.detected,
            'undetected': self.undetected,
            'exhaustive': self.exhaustive,
        }


@dataclass(frozen=True)
class SweepReport:
    rows: tuple[WeightStats, ...]
    d: int
    budget_exceeded: bool = False

    @property
    def total(self) -> int:
        return sum(r.total for r in self.rows)

    def row(self, weight: int) -> WeightStats:
        return next(r for r in self.rows if r.weight == weight)


def fault_count(n: int, Q: int, w: int) -> int:
    return comb(n, w) * (Q - 1) ** w


def faults_of_weight(n: int, Q: int, w: int, chunk: int):
    """Every fault of weight exactly w, in blocks of rows"""
    if w == 0:
        yield np.zeros((1, n), dtype=np.int64)
        return
    values = np.array(list(product(range(1, Q), repeat=w)), dtype=np.int64).reshape(-1, w)
    batch = max(1, chunk // len(values))
    supports = colex_combinations(n, w)
    while True:
        block = [s for _, s in zip(range(batch), supports)]
        if not block:
            return
        sup = np.array(block, dtype=np.int64).reshape(len(block), w)
        faults = np.zeros((len(block), len(values), n), dtype=np.int64)
        faults[np.arange(len(block))[:, None, None],
               np.arange(len(values))[None, :, None],
               sup[:, None, :]] = values[None, :, :]
        yield faults.reshape(-1, n)


def _count_undetected(inst: OdsmInstance, z: np.ndarray, y: np.ndarray, faults: np.ndarray) -> int:
    f = inst.field
    recovered = f.vdot(f.vadd(z[None, :], faults), inst.y_map.data)
    return int(np.all(recovered == y[None, :], axis=1).sum())


def detection_sweep(inst: OdsmInstance, max_weight: int, sampler: Optional[Distributions] = None,
                    d: Optional[int] = None, budget: Optional[int] = None,
                    samples: int = 10_000, min_weight: int = 1) -> SweepReport:
    """Per-weight detection counts; weights that do not fit the budget are sampled"""
    settings = get_settings()
    budget = settings.budget if budget is None else budget
    sampler = sampler or Distributions(settings.seed)
    f, n = inst.field, inst.n
    Q = f.order
    if d is None:
        report = min_distance(inst.code, budget=budget)
        d = report.exact if report.exact is not None else report.lower

    # a fixed masked state drawn from the sampler; detection does not depend on it
    x = sampler.random_vector(Q, inst.k)
    y = sampler.random_vector(Q, n - inst.k)
    z = np.array(mask(inst, x, y).z, dtype=np.int64)
    y_arr = np.array(y, dtype=np.int64)

    rows = []
    spent = 0
    max_weight = min(max_weight, n)
    exceeded = False
    for w in range(min_weight, max_weight + 1):
        total = fault_count(n, Q, w)
        if spent + total <= budget:
            undetected = sum(_count_undetected(inst, z, y_arr, block)
                             for block in faults_of_weight(n, Q, w, settings.chunk_size))
            spent += total
            exhaustive = True
        else:
            exceeded = True
            total = samples
            undetected = 0
            for start in range(0, samples, settings.chunk_size):
                count = min(settings.chunk_size, samples - start)
                undetected += _count_undetected(inst, z, y_arr, sampler.random_faults(n, Q, w, count))
            exhaustive = False
        stats = WeightStats(weight=w, total=total, detected=total - undetected,
                            undetected=undetected, exhaustive=exhaustive)
        logger.info(f"Weight {w}: {stats.detected}/{stats.total} detected"
                    f"{'' if exhaustive else ' (sampled)'}")
        if 0 < w < d and undetected:
            raise DetectionFailure(f"{undetected} faults of weight {w} < d = {d} went undetected",
                                   weight=w, undetected=undetected)
        rows.append(stats)
    return SweepReport(rows=tuple(rows), d=d, budget_exceeded=exceeded)
