"""Nuij operators, coefficient sequences and the symbol identity.

The distinguished variable is always the last one, ``x_n``. A coefficient
sequence ``a = (a_1, ..., a_m)`` lives in the first ``n - 1`` variables and
defines the operator ``P -> P + sum_k a_k s^k d^k P / dx_n^k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, perm
from typing import Dict, Optional, Sequence, Tuple

from .hyperbolicity import HyperbolicityVerdict, SamplingConfig, test_hyperbolic
from .poly import (
    ALIASES,
    BiPoly,
    MultiPoly,
    Scalar,
    UniPoly,
    as_fraction,
    bipoly_from_shift,
    evaluate,
    is_homogeneous,
    partial_derivative,
)


@dataclass(frozen=True)
class OperatorWord:
    """A composition ``T_{k_1,s} ... T_{k_L,s}`` given by its letters ``k_i`` in ``1..n-1``."""

    letters: Tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.n < 2:
            raise ValueError("operator words need at least two variables")
        for k in self.letters:
            if not 1 <= k <= self.n - 1:
                raise ValueError(f"letter {k} outside 1..{self.n - 1}")

    @classmethod
    def parse(cls, text: str, n: int) -> "OperatorWord":
        """Read a comma-separated word such as ``"x,x,y,y"`` or ``"x1,x2"``."""
        letters = []
        for raw in text.split(","):
            name = raw.strip()
            if not name:
                continue
            letters.append(letter_index(name, n))
        return cls(tuple(letters), n)

    def names(self) -> Tuple[str, ...]:
        return tuple(letter_name(k, self.n) for k in self.letters)

    def __len__(self) -> int:
        return len(self.letters)


def letter_index(name: str, n: int) -> int:
    if n <= len(ALIASES) and name in ALIASES:
        return ALIASES.index(name) + 1
    if name.startswith("x") and name[1:].isdigit():
        return int(name[1:])
    raise ValueError(f"unknown variable {name!r}")


def letter_name(k: int, n: int) -> str:
    return ALIASES[k - 1] if n <= len(ALIASES) else f"x{k}"


@dataclass(frozen=True)
class CoeffSequence:
    """Candidate Garding Nuij sequence; ``entries[k-1]`` is ``a_k`` in ``n - 1`` variables."""

    m: int
    n: int
    entries: Tuple[MultiPoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.n < 2:
            raise ValueError("need at least two variables")
        if len(self.entries) != self.m:
            raise ValueError(f"expected {self.m} entries, got {len(self.entries)}")
        for k, a in enumerate(self.entries, start=1):
            if a.n != self.n - 1:
                raise ValueError(f"a_{k} must use {self.n - 1} variables, not {a.n}")
            if a.is_zero():
                continue
            homogeneous, degree = is_homogeneous(a)
            if not homogeneous or degree != k:
                raise ValueError(f"a_{k} must be homogeneous of degree {k}")

    @classmethod
    def zeros(cls, m: int, n: int) -> "CoeffSequence":
        return cls(m, n, tuple(MultiPoly.zero(n - 1) for _ in range(m)))

    def lifted(self) -> Tuple[MultiPoly, ...]:
        """Entries as polynomials in all ``n`` variables (no ``x_n`` dependence)."""
        return tuple(a.extend() for a in self.entries)

    def __getitem__(self, k: int) -> MultiPoly:
        """``a_k`` for ``k`` in ``1..m``."""
        if not 1 <= k <= self.m:
            raise IndexError(k)
        return self.entries[k - 1]


@dataclass(frozen=True)
class RestrictedSequence:
    """Values ``a_k(v) s^k`` of a sequence frozen at one point ``v``."""

    m: int
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(as_fraction(v) for v in self.values))
        if len(self.values) != self.m:
            raise ValueError(f"expected {self.m} values, got {len(self.values)}")


def _check_letter(p: MultiPoly, k: int) -> None:
    if not 1 <= k <= p.n - 1:
        raise ValueError(f"letter {k} must be in 1..{p.n - 1}; x{p.n} is the derivative direction")


def apply_first_order(p: MultiPoly, k: int, s: Scalar) -> MultiPoly:
    """``T_{k,s} P = P + s x_k dP/dx_n``."""
    _check_letter(p, k)
    s = as_fraction(s)
    if not s:
        return p
    return p + MultiPoly.variable(p.n, k) * partial_derivative(p, p.n) * s


def apply_word(p: MultiPoly, word: OperatorWord, s: Scalar) -> MultiPoly:
    """Apply the word's first-order operators one letter at a time, rightmost first."""
    if p.n != word.n:
        raise ValueError("word and polynomial disagree on the variable count")
    for k in reversed(word.letters):
        p = apply_first_order(p, k, s)
    return p


def expand_word(word: OperatorWord, m: Optional[int] = None) -> CoeffSequence:
    """Coefficient sequence of the composed operator, padded with zeros up to degree ``m``.

    Multiplication by ``x_k`` commutes with ``d/dx_n`` for ``k < n``, so the
    product of the factors ``1 + s x_k D`` expands like an ordinary polynomial
    in ``D`` and ``a_j`` is the j-th elementary symmetric polynomial of the letters.
    """
    n = word.n
    m = len(word) if m is None else m
    if len(word) > m:
        raise ValueError(f"word of length {len(word)} exceeds target degree {m}")
    coeffs = [MultiPoly.constant(n - 1, 1)]
    for k in word.letters:
        xk = MultiPoly.variable(n - 1, k)
        shifted = [MultiPoly.zero(n - 1)] + [c * xk for c in coeffs]
        coeffs = [c + d for c, d in zip(coeffs + [MultiPoly.zero(n - 1)], shifted)]
    entries = coeffs[1:] + [MultiPoly.zero(n - 1)] * (m - len(word))
    return CoeffSequence(m, n, tuple(entries))


def build_Pas(p: MultiPoly, a: CoeffSequence, s: Scalar) -> MultiPoly:
    """``P + sum_k a_k s^k d^k P / dx_n^k``."""
    if p.n != a.n:
        raise ValueError(f"polynomial has {p.n} variables, sequence expects {a.n}")
    homogeneous, degree = is_homogeneous(p)
    if p.is_zero():
        degree = None
    if not homogeneous or (degree is not None and degree != a.m):
        raise ValueError(f"polynomial must be homogeneous of degree {a.m}")
    s = as_fraction(s)
    result = p
    if not s:
        return result
    for k, ak in enumerate(a.lifted(), start=1):
        if ak.is_zero():
            continue
        dk = partial_derivative(p, p.n, k)
        if dk.is_zero():
            break
        result = result + ak * dk * (s ** k)
    return result


def build_Qa(a: CoeffSequence) -> MultiPoly:
    """``x_n^m + sum_k m!/(m-k)! a_k x_n^(m-k)``, the sequence applied to ``x_n^m``."""
    n, m = a.n, a.m
    xn = MultiPoly.variable(n, n)
    result = xn ** m
    for k, ak in enumerate(a.lifted(), start=1):
        if not ak.is_zero():
            result = result + ak * xn ** (m - k) * perm(m, k)
    return result


def restrict_sequence(a: CoeffSequence, v: Sequence[Scalar], s: Scalar) -> RestrictedSequence:
    """Freeze the sequence at ``v`` in the first ``n - 1`` coordinates: values ``a_k(v) s^k``."""
    if len(v) != a.n - 1:
        raise ValueError(f"point must have {a.n - 1} coordinates")
    s = as_fraction(s)
    return RestrictedSequence(a.m, tuple(evaluate(ak, v) * s ** k for k, ak in enumerate(a.entries, start=1)))


def _check_degree(r: RestrictedSequence, d: int) -> None:
    if d != r.m:
        raise ValueError(f"degree {d} does not match sequence length {r.m}")


def bb_symbol(r: RestrictedSequence, d: int) -> BiPoly:
    """The symbol ``T((z + w)^d)``, expanded termwise as ``sum_i C(d,i) w^(d-i) T(z^i)``.

    ``T(z^i) = sum_j a_j i!/(i-j)! z^(i-j)`` with ``a_0 = 1``.
    """
    _check_degree(r, d)
    a = (Fraction(1),) + r.values
    entries: Dict[Tuple[int, int], Fraction] = {}
    for i in range(d + 1):
        binom = comb(d, i)
        for j in range(min(i, len(a) - 1) + 1):
            if not a[j]:
                continue
            key = (i - j, d - i)
            entries[key] = entries.get(key, 0) + binom * a[j] * perm(i, j)
    return BiPoly(d, entries)


def symbol_polynomial(r: RestrictedSequence, d: int) -> UniPoly:
    """``q(t) = t^d + sum_k d!/(d-k)! r_k t^(d-k)``: the restricted ``Q_a`` on the ``x_n`` line."""
    _check_degree(r, d)
    coeffs = [Fraction(0)] * (d + 1)
    coeffs[d] = Fraction(1)
    for k, rk in enumerate(r.values, start=1):
        coeffs[d - k] += perm(d, k) * rk
    return UniPoly(coeffs)


@dataclass(frozen=True)
class SymbolCheck:
    """Outcome of comparing the operator symbol with ``q(z + w)``; truthy on agreement."""

    holds: bool
    symbol: BiPoly
    shifted: BiPoly

    def __bool__(self) -> bool:
        return self.holds


def verify_symbol_identity(r: RestrictedSequence, d: int) -> SymbolCheck:
    """Check ``T((z + w)^d) == q(z + w)`` by two independent expansions."""
    lhs = bb_symbol(r, d)
    rhs = bipoly_from_shift(symbol_polynomial(r, d))
    return SymbolCheck(lhs == rhs, lhs, rhs)


def gns_check(a: CoeffSequence, cfg: SamplingConfig = SamplingConfig()) -> HyperbolicityVerdict:
    """Test ``a`` for being a Garding Nuij sequence through the hyperbolicity of ``Q_a``.

    A refutation doubles as an explicit counterexample: ``Q_a`` is the sequence
    applied to the hyperbolic ``x_n^m`` at ``s = 1``, and the witness line
    shows it losing real-rootedness.
    """
    e_n = [0] * (a.n - 1) + [1]
    return test_hyperbolic(build_Qa(a), e_n, cfg)


def counterexample_reproduces(a: CoeffSequence, verdict: HyperbolicityVerdict) -> bool:
    """Rebuild ``P_{a,1}`` for ``P = x_n^m`` and confirm it fails on the verdict's witness line."""
    if verdict.witness is None:
        return False
    xn_m = MultiPoly.variable(a.n, a.n) ** a.m
    return verdict.witness.recheck(build_Pas(xn_m, a, 1))
