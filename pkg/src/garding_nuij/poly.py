"""Exact polynomial types over the rationals.

``MultiPoly`` is a sparse map from exponent tuples to ``Fraction`` coefficients,
``UniPoly`` a dense coefficient tuple in one variable and ``BiPoly`` a dense
grid in two variables ``z`` and ``w``. Variables of a ``MultiPoly`` are indexed
from 1 to ``n``, matching the usual ``x_1, ..., x_n`` notation.

All values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

Rational = Fraction
Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]

ALIASES = ("x", "y", "z", "w")


def as_fraction(value: Union[int, str, Fraction]) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise TypeError(f"expected an exact rational, got {value!r}")
    return Fraction(value)


def variable_names(n: int) -> Tuple[str, ...]:
    """Display names for ``n`` variables: aliases up to 4 variables, else ``x1..xN``."""
    if n <= len(ALIASES):
        return ALIASES[:n]
    return tuple(f"x{i}" for i in range(1, n + 1))


def grlex_key(monomial: Monomial) -> Tuple[int, Monomial]:
    """Sort key putting monomials in descending graded-lex order when sorted ascending."""
    return (-sum(monomial), tuple(-e for e in monomial))


class MultiPoly:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, n: int, terms: Optional[Mapping[Monomial, Scalar]] = None):
        if n < 0:
            raise ValueError("variable count must be non-negative")
        clean: Dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != n:
                raise ValueError(f"monomial {mono} does not have {n} exponents")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = as_fraction(coeff)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
                if not clean[mono]:
                    del clean[mono]
        self._n = n
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, n: int, terms: Dict[Monomial, Fraction]) -> "MultiPoly":
        # trusted constructor: terms already validated and free of zeros
        obj = cls.__new__(cls)
        obj._n = n
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c: Scalar) -> "MultiPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, i: int) -> "MultiPoly":
        """The coordinate function ``x_i`` (1-based) among ``n`` variables."""
        _check_index(n, i)
        mono = tuple(1 if j == i - 1 else 0 for j in range(n))
        return cls._raw(n, {mono: Fraction(1)})

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        """Terms in canonical (descending graded-lex) order."""
        for mono in sorted(self._terms, key=grlex_key):
            yield mono, self._terms[mono]

    def coefficient(self, monomial: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(monomial), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> Optional[int]:
        """Total degree, or ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(m) for m in self._terms)

    def degree_in(self, i: int) -> Optional[int]:
        _check_index(self._n, i)
        if not self._terms:
            return None
        return max(m[i - 1] for m in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self._n == other._n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self._n, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({self._n}, {render(self)!r})"

    def __str__(self) -> str:
        return render(self)

    def _coerce(self, other: object) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPoly.constant(self._n, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "MultiPoly":
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        return add(self, q)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self._n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "MultiPoly":
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        return add(self, -q)

    def __rsub__(self, other: object) -> "MultiPoly":
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        return add(q, -self)

    def __mul__(self, other: object) -> "MultiPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if isinstance(other, MultiPoly):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(self._n, 1)
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return result

    def scale(self, c: Scalar) -> "MultiPoly":
        c = as_fraction(c)
        if not c:
            return MultiPoly.zero(self._n)
        return MultiPoly._raw(self._n, {m: v * c for m, v in self._terms.items()})

    def extend(self, extra: int = 1) -> "MultiPoly":
        """Embed into ``n + extra`` variables; the new variables come last."""
        pad = (0,) * extra
        return MultiPoly._raw(self._n + extra, {m + pad: c for m, c in self._terms.items()})

    def drop_last(self) -> "MultiPoly":
        """Remove the last variable; it must not occur in any term."""
        if self._n == 0:
            raise ValueError("no variable to drop")
        if any(m[-1] for m in self._terms):
            raise ValueError(f"polynomial depends on x{self._n}")
        return MultiPoly._raw(self._n - 1, {m[:-1]: c for m, c in self._terms.items()})

    def __call__(self, *point: Scalar) -> Fraction:
        return evaluate(self, point)


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"variable index {i} outside 1..{n}")


def _check_same_n(p: MultiPoly, q: MultiPoly) -> None:
    if p.n != q.n:
        raise ValueError(f"variable-count mismatch: {p.n} vs {q.n}")


def add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    _check_same_n(p, q)
    terms = dict(p._terms)
    for mono, c in q._terms.items():
        v = terms.get(mono, 0) + c
        if v:
            terms[mono] = v
        else:
            terms.pop(mono, None)
    return MultiPoly._raw(p.n, terms)


def mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    _check_same_n(p, q)
    terms: Dict[Monomial, Fraction] = {}
    for m1, c1 in p._terms.items():
        for m2, c2 in q._terms.items():
            mono = tuple(a + b for a, b in zip(m1, m2))
            terms[mono] = terms.get(mono, 0) + c1 * c2
    return MultiPoly._raw(p.n, {m: c for m, c in terms.items() if c})


def partial_derivative(p: MultiPoly, i: int, order: int = 1) -> MultiPoly:
    """Formal ``order``-fold partial derivative with respect to ``x_i``."""
    _check_index(p.n, i)
    if order < 0:
        raise ValueError("derivative order must be non-negative")
    k = i - 1
    terms: Dict[Monomial, Fraction] = {}
    for mono, c in p._terms.items():
        e = mono[k]
        if e < order:
            continue
        falling = 1
        for j in range(order):
            falling *= e - j
        new = mono[:k] + (e - order,) + mono[k + 1:]
        terms[new] = c * falling
    return MultiPoly._raw(p.n, terms)


def is_homogeneous(p: MultiPoly) -> Tuple[bool, Optional[int]]:
    """Return ``(flag, degree)``; the zero polynomial gives ``(True, None)``."""
    degrees = {sum(m) for m in p._terms}
    if not degrees:
        return True, None
    if len(degrees) == 1:
        return True, degrees.pop()
    return False, None


def evaluate(p: MultiPoly, point: Sequence[Scalar]) -> Fraction:
    if len(point) != p.n:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {p.n} variables")
    xs = [as_fraction(x) for x in point]
    total = Fraction(0)
    for mono, c in p._terms.items():
        term = c
        for x, e in zip(xs, mono):
            if e:
                term *= x ** e
        total += term
    return total


def restrict_line(p: MultiPoly, base: Sequence[Scalar], direction: Sequence[Scalar]) -> "UniPoly":
    """The univariate polynomial ``t -> p(base + t * direction)``."""
    if len(base) != p.n or len(direction) != p.n:
        raise ValueError("base and direction must both have one entry per variable")
    lines = [UniPoly((as_fraction(b), as_fraction(d))) for b, d in zip(base, direction)]
    powers: Dict[Tuple[int, int], UniPoly] = {}

    def power(i: int, e: int) -> UniPoly:
        key = (i, e)
        if key not in powers:
            powers[key] = lines[i] if e == 1 else power(i, e - 1) * lines[i]
        return powers[key]

    result = UniPoly(())
    for mono, c in p._terms.items():
        term = UniPoly((c,))
        for i, e in enumerate(mono):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


class UniPoly:
    """Dense univariate polynomial; ``coeffs[k]`` multiplies ``t**k``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [as_fraction(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self._c: Tuple[Fraction, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "UniPoly":
        return cls([0] * k + [c])

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> Optional[int]:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self._c) - 1 if self._c else None

    @property
    def leading_coefficient(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == UniPoly((other,))._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self._c]})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        mp = MultiPoly(1, {(k,): c for k, c in enumerate(self._c)})
        return render(mp, ("t",))

    def __call__(self, t: Scalar) -> Fraction:
        t = as_fraction(t)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * t + c
        return acc

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self._c])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        if not isinstance(other, UniPoly):
            c = as_fraction(other)
            return UniPoly([v * c for v in self._c])
        if not self._c or not other._c:
            return UniPoly(())
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, x in enumerate(self._c):
            if x:
                for j, y in enumerate(other._c):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        result = UniPoly((1,))
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        d = len(other._c) - 1
        lead = other._c[-1]
        quot = [Fraction(0)] * max(len(rem) - d, 0)
        while len(rem) - 1 >= d and rem:
            shift = len(rem) - 1 - d
            f = rem[-1] / lead
            quot[shift] = f
            for j, c in enumerate(other._c):
                rem[shift + j] -= f * c
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        return UniPoly(quot), UniPoly(rem)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self._c)][1:])

    def monic(self) -> "UniPoly":
        if not self._c:
            return self
        return self * (1 / self._c[-1])


def unipoly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm (zero if both inputs are zero)."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


class BiPoly:
    """Dense polynomial in ``z`` and ``w``; ``grid[i][j]`` multiplies ``z**i * w**j``.

    Equality ignores the declared size ``d`` of the grid.
    """

    __slots__ = ("_d", "_grid")

    def __init__(self, d: int, entries: Optional[Mapping[Tuple[int, int], Scalar]] = None):
        if d < 0:
            raise ValueError("degree bound must be non-negative")
        grid = [[Fraction(0)] * (d + 1) for _ in range(d + 1)]
        for (i, j), c in (entries or {}).items():
            c = as_fraction(c)
            if not c:
                continue
            if i < 0 or j < 0 or i + j > d:
                raise ValueError(f"term z^{i} w^{j} exceeds total degree {d}")
            grid[i][j] += c
        self._d = d
        self._grid = tuple(tuple(row) for row in grid)

    @property
    def d(self) -> int:
        return self._d

    def coefficient(self, i: int, j: int) -> Fraction:
        if 0 <= i <= self._d and 0 <= j <= self._d:
            return self._grid[i][j]
        return Fraction(0)

    def nonzero_terms(self) -> Dict[Tuple[int, int], Fraction]:
        return {
            (i, j): c
            for i, row in enumerate(self._grid)
            for j, c in enumerate(row)
            if c
        }

    def __call__(self, z: Scalar, w: Scalar) -> Fraction:
        z, w = as_fraction(z), as_fraction(w)
        return sum((c * z ** i * w ** j for (i, j), c in self.nonzero_terms().items()), Fraction(0))

    def restrict_z(self) -> UniPoly:
        """Coefficients of ``z`` at ``w = 0``."""
        return UniPoly([self._grid[i][0] for i in range(self._d + 1)])

    def restrict_w(self) -> UniPoly:
        """Coefficients of ``w`` at ``z = 0``."""
        return UniPoly([self._grid[0][j] for j in range(self._d + 1)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.nonzero_terms() == other.nonzero_terms()

    def __hash__(self) -> int:
        return hash(frozenset(self.nonzero_terms().items()))

    def __str__(self) -> str:
        mp = MultiPoly(2, self.nonzero_terms())
        return render(mp, ("z", "w"))

    def __repr__(self) -> str:
        return f"BiPoly({self._d}, {str(self)!r})"


def bipoly_from_shift(q: UniPoly) -> BiPoly:
    """Expand ``q(z + w)`` by the binomial theorem."""
    d = q.degree or 0
    entries: Dict[Tuple[int, int], Fraction] = {}
    for k, c in enumerate(q.coeffs):
        if not c:
            continue
        for i in range(k + 1):
            entries[(i, k - i)] = entries.get((i, k - i), 0) + c * comb(k, i)
    return BiPoly(d, entries)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(p: MultiPoly, names: Optional[Sequence[str]] = None) -> str:
    """Canonical text form, e.g. ``x^2 + 4*x*y - 3/2*y^2``; parses back to ``p``."""
    names = tuple(names) if names is not None else variable_names(p.n)
    if len(names) != p.n:
        raise ValueError("need one name per variable")
    pieces = []
    for mono, c in p.items():
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, mono)
            if e
        ]
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(mag)] + factors)
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(pieces) if pieces else "0"
