"""Exact real-root counting for univariate rational polynomials via Sturm chains.

Internally the chains are carried as primitive integer coefficient lists:
every element is rescaled by a positive rational, which leaves all sign
variations unchanged and keeps coefficient growth in check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import List, Optional, Sequence, Tuple, Union

from .poly import UniPoly, as_fraction

IntPoly = List[int]
Endpoint = Optional[Union[int, Fraction]]


def _require_nonzero(p: UniPoly) -> None:
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root set")


def _primitive(coeffs: Sequence[Fraction]) -> IntPoly:
    """Positive rational multiple of ``coeffs`` with coprime integer entries."""
    den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    ints = [c.numerator * (den // c.denominator) for c in coeffs]
    return _make_primitive(ints)


def _make_primitive(ints: IntPoly) -> IntPoly:
    while ints and not ints[-1]:
        ints.pop()
    g = 0
    for c in ints:
        g = gcd(g, c)
        if g == 1:
            return ints
    if g > 1:
        ints = [c // g for c in ints]
    return ints


def _derivative(p: IntPoly) -> IntPoly:
    return _make_primitive([k * c for k, c in enumerate(p)][1:])


def _scaled_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """A positive multiple of ``a mod b``, primitive."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    steps = 0
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for j, c in enumerate(b):
            r[shift + j] -= lr * c
        r.pop()
        while r and not r[-1]:
            r.pop()
        steps += 1
    if lb < 0 and steps % 2:
        r = [-c for c in r]
    return _make_primitive(r)


def _gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    while b:
        a, b = b, _scaled_remainder(a, b)
    return a


def _chain(p: IntPoly) -> List[IntPoly]:
    """Sturm chain of a square-free primitive integer polynomial."""
    chain = [p]
    if len(p) <= 1:
        return chain
    chain.append(_derivative(p))
    while True:
        r = _scaled_remainder(chain[-2], chain[-1])
        if not r:
            return chain
        chain.append([-c for c in r])


def _square_free_int(p: UniPoly) -> IntPoly:
    ip = _primitive(p.coeffs)
    if len(ip) <= 2:
        return ip
    g = _gcd(ip, _derivative(ip))
    if len(g) == 1:
        return ip
    q, r = divmod(UniPoly(ip), UniPoly(g))
    assert r.is_zero()
    return _primitive(q.coeffs)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _sign_at(p: IntPoly, x: Endpoint, side: int = 0) -> int:
    """Sign of ``p(x)``; ``x=None`` with ``side=-1/+1`` means minus/plus infinity."""
    if x is None:
        lead = _sign(p[-1])
        return lead if side > 0 or (len(p) - 1) % 2 == 0 else -lead
    x = as_fraction(x)
    a, b = x.numerator, x.denominator
    # sign of b**deg * p(a/b), computed in integers
    acc = 0
    bpow = 1
    for c in reversed(p):
        acc = acc * a + c * bpow
        bpow *= b
    return _sign(acc)


def _variations(chain: List[IntPoly], x: Endpoint, side: int = 0) -> int:
    signs = [s for s in (_sign_at(q, x, side) for q in chain) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


@dataclass(frozen=True)
class SturmChain:
    """Signed remainder sequence of the square-free part of a polynomial."""

    sequence: Tuple[UniPoly, ...]

    def variations(self, x: Endpoint, side: int = 0) -> int:
        """Sign variations at ``x``; pass ``x=None`` with ``side=+1``/``-1`` for +/- infinity."""
        return _variations([_primitive(q.coeffs) for q in self.sequence], x, side)

    def __len__(self) -> int:
        return len(self.sequence)


def square_free_part(p: UniPoly) -> UniPoly:
    """``p / gcd(p, p')``, keeping the leading coefficient of ``p``."""
    _require_nonzero(p)
    g = _gcd(_primitive(p.coeffs), _derivative(_primitive(p.coeffs)))
    if len(g) <= 1:
        return p
    q, r = divmod(p, UniPoly(g))
    assert r.is_zero()
    return q


def sturm_chain(p: UniPoly) -> SturmChain:
    """Sturm chain ``(f, f', -rem(f, f'), ...)`` of the square-free part ``f`` of ``p``.

    The first two members are exact; later members are positive multiples of
    the textbook remainders.
    """
    f = square_free_part(p)
    if f.degree == 0:
        return SturmChain((f,))
    tail = _chain(_primitive(f.coeffs))[2:]
    return SturmChain((f, f.derivative()) + tuple(UniPoly(q) for q in tail))


def count_real_roots(p: UniPoly, lo: Endpoint = None, hi: Endpoint = None) -> int:
    """Number of distinct real roots in the open interval ``(lo, hi)``.

    ``None`` stands for an infinite endpoint.
    """
    _require_nonzero(p)
    if lo is not None and hi is not None and as_fraction(lo) >= as_fraction(hi):
        raise ValueError("empty interval")
    sf = _square_free_int(p)
    if len(sf) <= 1:
        return 0
    chain = _chain(sf)
    # V(a) - V(b) counts roots in (a, b]; drop a root sitting at b
    count = _variations(chain, lo, -1) - _variations(chain, hi, +1)
    if hi is not None and _sign_at(sf, hi) == 0:
        count -= 1
    return count


def is_real_rooted(p: UniPoly) -> bool:
    """True iff every complex root of ``p`` is real; constants are vacuously real-rooted."""
    _require_nonzero(p)
    sf = _square_free_int(p)
    degree = len(sf) - 1
    if degree <= 1:
        return True
    chain = _chain(sf)
    # a Sturm chain of length <= degree cannot reach `degree` variations
    if len(chain) < degree + 1:
        return False
    return _variations(chain, None, -1) - _variations(chain, None, +1) == degree


def all_roots_negative(p: UniPoly) -> bool:
    """True iff ``p`` is real-rooted with every root in ``(-inf, 0)``."""
    _require_nonzero(p)
    if not is_real_rooted(p):
        return False
    if p.coeffs[0] == 0:
        return False
    if p.degree == 0:
        return True
    return count_real_roots(p, 0, None) == 0


def is_real_rooted_integer(coeffs: Sequence[int]) -> bool:
    """``is_real_rooted`` for an integer coefficient list (low degree first), skipping rational setup."""
    ip = _make_primitive(list(coeffs))
    if not ip:
        raise ValueError("the zero polynomial has no finite root set")
    if len(ip) <= 2:
        return True
    g = _gcd(ip, _derivative(ip))
    if len(g) > 1:
        return is_real_rooted(UniPoly(ip))
    degree = len(ip) - 1
    chain = _chain(ip)
    if len(chain) < degree + 1:
        return False
    return _variations(chain, None, -1) - _variations(chain, None, +1) == degree
