"""Sampling tests for hyperbolicity of homogeneous polynomials.

A polynomial ``p`` is hyperbolic in direction ``e`` when every restriction
``t -> p(x + t e)`` to a line parallel to ``e`` has only real roots. A single
non-real-rooted restriction refutes hyperbolicity exactly; a clean sweep over
the sample set only makes it probable.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .poly import MultiPoly, Scalar, UniPoly, as_fraction, evaluate, is_homogeneous, restrict_line
from .realroot import all_roots_negative, is_real_rooted, is_real_rooted_integer

GRID_RADIUS = 2


class Status(str, enum.Enum):
    PROBABLY_HYPERBOLIC = "ProbablyHyperbolic"
    NOT_HYPERBOLIC = "NotHyperbolic"
    REJECTED = "Rejected"


class RejectionReason(str, enum.Enum):
    NON_HOMOGENEOUS = "non-homogeneous"
    DIRECTION_ROOT = "P(e)=0"
    ZERO_POLYNOMIAL = "zero polynomial"


class DirectionError(ValueError):
    """Raised when a polynomial/direction pair cannot be tested."""

    def __init__(self, reason: RejectionReason):
        super().__init__(reason.value)
        self.reason = reason


@dataclass(frozen=True)
class Witness:
    """A line ``base + t * direction`` on which the polynomial is not real-rooted."""

    base: Tuple[Fraction, ...]
    direction: Tuple[Fraction, ...]
    restriction: UniPoly

    def recheck(self, p: MultiPoly) -> bool:
        """Recompute the restriction of ``p`` and confirm it matches and has a non-real root."""
        again = restrict_line(p, self.base, self.direction)
        return again == self.restriction and not again.is_zero() and not is_real_rooted(again)


@dataclass(frozen=True)
class HyperbolicityVerdict:
    status: Status
    samples_checked: int = 0
    witness: Optional[Witness] = None
    rejection_reason: Optional[RejectionReason] = None

    @property
    def is_refuted(self) -> bool:
        return self.status is Status.NOT_HYPERBOLIC


@dataclass(frozen=True)
class SamplingConfig:
    """Sample plan: an optional grid over {-2..2}^n, then ``sample_count`` seeded integer points."""

    sample_count: int = 500
    coordinate_bound: int = 10
    include_grid: bool = True
    seed: int = 0

    def __post_init__(self):
        if self.sample_count < 1:
            raise ValueError("sample_count must be at least 1")
        if self.coordinate_bound < 1:
            raise ValueError("coordinate_bound must be positive")


def check_direction(p: MultiPoly, e: Sequence[Scalar]) -> Optional[RejectionReason]:
    """``None`` when ``p`` is nonzero, homogeneous and ``p(e) != 0``; else the reason it is not."""
    if p.is_zero():
        return RejectionReason.ZERO_POLYNOMIAL
    if not is_homogeneous(p)[0]:
        return RejectionReason.NON_HOMOGENEOUS
    if evaluate(p, e) == 0:
        return RejectionReason.DIRECTION_ROOT
    return None


def _parallel(x: Sequence[int], e: Sequence[Fraction]) -> bool:
    n = len(x)
    return all(x[i] * e[j] == x[j] * e[i] for i in range(n) for j in range(i + 1, n))


def sample_points(n: int, e: Sequence[Scalar], cfg: SamplingConfig) -> Iterator[Tuple[int, ...]]:
    """Deterministic sample order: grid points not parallel to ``e``, then seeded random points."""
    e = [as_fraction(c) for c in e]
    if cfg.include_grid:
        for x in itertools.product(range(-GRID_RADIUS, GRID_RADIUS + 1), repeat=n):
            if not _parallel(x, e):
                yield x
    rng = random.Random(cfg.seed)
    b = cfg.coordinate_bound
    for _ in range(cfg.sample_count):
        yield tuple(rng.randint(-b, b) for _ in range(n))


class LineRestrictor:
    """Fast integer restriction ``x -> t -> p(x + t e)`` up to a positive factor.

    The coefficient of ``t^k`` in ``p(x + t e)`` is ``(D_e^k p)(x) / k!``; these
    Taylor polynomials are computed once so each sample point costs only a few
    integer polynomial evaluations. Rescaling ``p`` and ``e`` by positive
    constants maps roots ``t -> c t`` and keeps real-rootedness intact.
    """

    def __init__(self, p: MultiPoly, e: Sequence[Scalar]):
        n = p.n
        e = [as_fraction(c) for c in e]
        e_den = lcm(*(c.denominator for c in e))
        e_int = [c.numerator * (e_den // c.denominator) for c in e]
        p_den = lcm(*(c.denominator for _, c in p.items())) if not p.is_zero() else 1
        current: Dict[Tuple[int, ...], int] = {
            m: c.numerator * (p_den // c.denominator) for m, c in p.items()
        }
        self.n = n
        self.taylor: List[List[Tuple[Tuple[int, ...], int]]] = []
        k = 0
        while current:
            self.taylor.append(list(current.items()))
            k += 1
            nxt: Dict[Tuple[int, ...], int] = {}
            for mono, c in current.items():
                for i in range(n):
                    if mono[i] and e_int[i]:
                        new = mono[:i] + (mono[i] - 1,) + mono[i + 1:]
                        nxt[new] = nxt.get(new, 0) + c * mono[i] * e_int[i]
            current = {m: c // k for m, c in nxt.items() if c}
        self.max_exp = max((max(m) for m, _ in p.items()), default=0)

    def coefficients(self, x: Sequence[int]) -> List[int]:
        powers = []
        for xi in x:
            row = [1]
            for _ in range(self.max_exp):
                row.append(row[-1] * xi)
            powers.append(row)
        out = []
        for terms in self.taylor:
            total = 0
            for mono, c in terms:
                v = c
                for i, e in enumerate(mono):
                    if e:
                        v *= powers[i][e]
                total += v
            out.append(total)
        return out


def test_hyperbolic(
    p: MultiPoly, e: Sequence[Scalar], cfg: SamplingConfig = SamplingConfig()
) -> HyperbolicityVerdict:
    """Sample lines parallel to ``e`` and stop at the first non-real-rooted restriction."""
    reason = check_direction(p, e)
    if reason is not None:
        return HyperbolicityVerdict(Status.REJECTED, rejection_reason=reason)
    restrictor = LineRestrictor(p, e)
    checked = 0
    for x in sample_points(p.n, e, cfg):
        checked += 1
        if not is_real_rooted_integer(restrictor.coefficients(x)):
            base = tuple(Fraction(c) for c in x)
            direction = tuple(as_fraction(c) for c in e)
            witness = Witness(base, direction, restrict_line(p, base, direction))
            return HyperbolicityVerdict(Status.NOT_HYPERBOLIC, checked, witness)
    return HyperbolicityVerdict(Status.PROBABLY_HYPERBOLIC, checked)


# keep pytest from collecting the library function when imported into tests
test_hyperbolic.__test__ = False  # type: ignore[attr-defined]


def cone_member(p: MultiPoly, e: Sequence[Scalar], v: Sequence[Scalar]) -> bool:
    """Whether ``v`` lies in the open hyperbolicity cone of ``p`` containing ``e``.

    The caller vouches that ``p`` is hyperbolic in direction ``e``.
    """
    reason = check_direction(p, e)
    if reason is not None:
        raise DirectionError(reason)
    return all_roots_negative(restrict_line(p, v, e))


def stable_shift_check(q: UniPoly) -> bool:
    """Stability of the bivariate polynomial ``q(z + w)``.

    With ``Im z > 0`` and ``Im w > 0`` the sum ``z + w`` ranges over the whole
    open upper half-plane, so ``q(z + w)`` is stable exactly when ``q`` has no
    root off the real line.
    """
    return is_real_rooted(q)
