"""Exact arithmetic in real multi-quadratic fields Q(sqrt(d1), ..., sqrt(dk)).

An element is a finite sum ``sum_d c_d * sqrt(d)`` with rational coefficients
``c_d`` and square-free integer radicands ``d >= 1`` (``d == 1`` carries the
rational part).  Square roots of distinct square-free integers are linearly
independent over Q, so the term map is a canonical form: two elements are
equal exactly when their maps coincide.  Nothing here ever rounds; floats
appear only in the explicit ``to_float`` conversion.

String form, used verbatim in JSON reports: terms joined with ``+``/``-``,
each term one of ``a``, ``a/b``, ``sqrt(d)``, ``a*sqrt(d)``, ``a/b*sqrt(d)``,
for example ``1/2+3*sqrt(5)``.  ``parse`` accepts the same grammar, plus a
Unicode minus sign and incidental whitespace.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Rational = Fraction

__all__ = [
    "Rational",
    "RadBasis",
    "RadElement",
    "normalize_radicand",
    "rad_mul",
    "rad_inv",
    "rad_to_float",
    "parse_rad",
]


def normalize_radicand(n: int) -> tuple[int, int]:
    """Split ``n >= 1`` as ``factor**2 * square_free``.

    Returns ``(square_free, factor)``; for example 12 -> (3, 2), 8 -> (2, 2),
    1 -> (1, 1).  Rejects n < 1.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"radicand must be a positive integer, got {n!r}")
    square_free = 1
    factor = 1
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            exp = 0
            while rest % p == 0:
                rest //= p
                exp += 1
            factor *= p ** (exp // 2)
            if exp % 2:
                square_free *= p
        p += 1
    return square_free * rest, factor


def _sf_mul(d: int, e: int) -> tuple[int, int]:
    # product of two square-free radicands: d*e = g**2 * s with s square-free
    g = math.gcd(d, e)
    return (d // g) * (e // g), g


def _smallest_prime_factor(n: int) -> int:
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


def _solve_linear(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    # exact Gauss-Jordan over Fraction; mat is square and invertible here
    n = len(mat)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ArithmeticError("singular multiplication map")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


_TERM_RE = re.compile(r"^(?:(\d+)(?:/(\d+))?)?(?:\*?sqrt\((\d+)\))?$")


class RadElement:
    """One exact field element stored as {square-free radicand: coefficient}."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Fraction | int] | None = None) -> None:
        canonical: dict[int, Fraction] = {}
        if terms:
            for d, raw in terms.items():
                coeff = raw if isinstance(raw, Fraction) else Fraction(raw)
                if not coeff:
                    continue
                if d == 1:
                    s = 1
                else:
                    s, f = normalize_radicand(d)
                    if f != 1:
                        coeff *= f
                acc = canonical.get(s)
                total = coeff if acc is None else acc + coeff
                if total:
                    canonical[s] = total
                elif s in canonical:
                    del canonical[s]
        self._terms = canonical

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> RadElement:
        return cls()

    @classmethod
    def one(cls) -> RadElement:
        return cls({1: 1})

    @classmethod
    def from_rational(cls, value: int | Fraction) -> RadElement:
        return cls({1: value})

    @classmethod
    def sqrt(cls, n: int) -> RadElement:
        """Exact sqrt(n) for integer n >= 1, normalized: sqrt(12) = 2*sqrt(3)."""
        s, f = normalize_radicand(n)
        return cls({s: f})

    @classmethod
    def parse(cls, text: str) -> RadElement:
        compact = text.strip().replace("−", "-").replace(" ", "")
        if not compact:
            raise ValueError("empty radical literal")
        chunks = re.findall(r"[+-]?[^+-]+", compact)
        if "".join(chunks) != compact:
            raise ValueError(f"cannot parse radical literal {text!r}")
        total = cls.zero()
        for chunk in chunks:
            body = chunk
            sign = 1
            if body and body[0] in "+-":
                sign = -1 if body[0] == "-" else 1
                body = body[1:]
            match = _TERM_RE.match(body) if body else None
            if not match:
                raise ValueError(f"bad term {chunk!r} in radical literal {text!r}")
            num, den, rad = match.groups()
            if num is None and rad is None:
                raise ValueError(f"bad term {chunk!r} in radical literal {text!r}")
            coeff = Fraction(int(num) if num else 1, int(den) if den else 1)
            term = {int(rad) if rad else 1: sign * coeff}
            total = total + cls(term)
        return total

    # -- views -------------------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def radicands(self) -> tuple[int, ...]:
        return tuple(sorted(d for d in self._terms if d != 1))

    @property
    def is_rational(self) -> bool:
        return all(d == 1 for d in self._terms)

    @property
    def rational_part(self) -> Fraction:
        return self._terms.get(1, Fraction(0))

    def coefficient(self, d: int) -> Fraction:
        return self._terms.get(d, Fraction(0))

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(value) -> RadElement | None:
        if isinstance(value, RadElement):
            return value
        if isinstance(value, (int, Fraction)):
            return RadElement({1: value})
        return None

    def __add__(self, other) -> RadElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for d, c in rhs._terms.items():
            acc = out.get(d)
            total = c if acc is None else acc + c
            if total:
                out[d] = total
            elif d in out:
                del out[d]
        result = RadElement.__new__(RadElement)
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> RadElement:
        result = RadElement.__new__(RadElement)
        result._terms = {d: -c for d, c in self._terms.items()}
        return result

    def __sub__(self, other) -> RadElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> RadElement:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other) -> RadElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in rhs._terms.items():
                s, f = _sf_mul(d1, d2)
                v = c1 * c2 * f
                acc = out.get(s)
                total = v if acc is None else acc + v
                if total:
                    out[s] = total
                elif s in out:
                    del out[s]
        result = RadElement.__new__(RadElement)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __truediv__(self, other) -> RadElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other) -> RadElement:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def inverse(self) -> RadElement:
        """Exact multiplicative inverse.

        Multiplication by this element is a linear map on the Q-vector space
        spanned by the multiplicative closure of its radicands; the inverse
        is the preimage of 1 under that map, found by exact elimination.
        """
        if not self._terms:
            raise ZeroDivisionError("radical element 0 has no inverse")
        if len(self._terms) == 1:
            ((d, c),) = self._terms.items()
            # (c*sqrt(d)) * (x*sqrt(d)) = c*x*d
            return RadElement({d: Fraction(1) / (c * d)})
        basis = [1]
        seen = {1}
        for gen in sorted(d for d in self._terms if d != 1):
            for e in list(basis):
                s, _ = _sf_mul(gen, e)
                if s not in seen:
                    seen.add(s)
                    basis.append(s)
        basis.sort()
        index = {d: i for i, d in enumerate(basis)}
        size = len(basis)
        mat = [[Fraction(0)] * size for _ in range(size)]
        for j, e in enumerate(basis):
            for d, c in self._terms.items():
                s, f = _sf_mul(d, e)
                mat[index[s]][j] += c * f
        rhs = [Fraction(0)] * size
        rhs[index[1]] = Fraction(1)
        coords = _solve_linear(mat, rhs)
        return RadElement({basis[i]: coords[i] for i in range(size)})

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}, computed without floats.

        Split on a prime p dividing some radicand: x = a + sqrt(p)*b with a, b
        free of p.  If the component signs agree that sign wins; otherwise the
        sign of the conjugate product a^2 - p*b^2 decides, since the conjugate
        a - sqrt(p)*b then has the strict sign of a.
        """
        if not self._terms:
            return 0
        rads = sorted(d for d in self._terms if d != 1)
        if not rads:
            c = self._terms[1]
            return (c > 0) - (c < 0)
        p = _smallest_prime_factor(rads[0])
        plain: dict[int, Fraction] = {}
        root: dict[int, Fraction] = {}
        for d, c in self._terms.items():
            if d != 1 and d % p == 0:
                root[d // p] = c
            else:
                plain[d] = c
        a = RadElement(plain)
        b = RadElement(root)
        sa, sb = a.sign(), b.sign()
        if sb == 0:
            return sa
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        t = (a * a - b * b * p).sign()
        if t == 0:
            # would mean sqrt(p) lies in the subfield without p
            raise ArithmeticError("inconsistent radical sign computation")
        return sa if t > 0 else sb

    def __abs__(self) -> RadElement:
        return -self if self.sign() < 0 else self

    # -- conversion and comparison ------------------------------------------

    def to_float(self) -> float:
        # deterministic summation order: ascending radicand
        total = 0.0
        for d in sorted(self._terms):
            total += float(self._terms[d]) * math.sqrt(d)
        return total

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        return hash((RadElement, tuple(sorted(self._terms.items()))))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[tuple[str, str]] = []
        for d in sorted(self._terms):
            c = self._terms[d]
            mag = -c if c < 0 else c
            if d == 1:
                body = str(mag)
            elif mag == 1:
                body = f"sqrt({d})"
            else:
                body = f"{mag}*sqrt({d})"
            pieces.append(("-" if c < 0 else "+", body))
        first_sign, first_body = pieces[0]
        out = first_body if first_sign == "+" else "-" + first_body
        for sign, body in pieces[1:]:
            out += sign + body
        return out

    def __repr__(self) -> str:
        return f"RadElement({str(self)!r})"


@dataclass(frozen=True)
class RadBasis:
    """Ordered set of distinct square-free radicands > 1 naming an ambient field."""

    radicands: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        prev = 1
        for d in self.radicands:
            if not isinstance(d, int) or d <= 1:
                raise ValueError(f"basis radicand must be an integer > 1, got {d!r}")
            if normalize_radicand(d) != (d, 1):
                raise ValueError(f"basis radicand must be square-free, got {d}")
            if d <= prev:
                raise ValueError("basis radicands must be strictly increasing")
            prev = d

    @classmethod
    def from_values(cls, values: Iterable[int]) -> RadBasis:
        """Square-free-reduce, drop perfect squares, dedupe and sort."""
        sf = {normalize_radicand(v)[0] for v in values}
        sf.discard(1)
        return cls(tuple(sorted(sf)))

    def span_radicands(self) -> tuple[int, ...]:
        """All square-free products of basis subsets, including 1."""
        closure = [1]
        seen = {1}
        for gen in self.radicands:
            for e in list(closure):
                s, _ = _sf_mul(gen, e)
                if s not in seen:
                    seen.add(s)
                    closure.append(s)
        return tuple(sorted(closure))

    def __iter__(self) -> Iterator[int]:
        return iter(self.radicands)

    def __len__(self) -> int:
        return len(self.radicands)

    def __contains__(self, d: int) -> bool:
        return d in self.radicands


# functional aliases for callers that prefer free functions over operators


def rad_mul(a: RadElement, b: RadElement) -> RadElement:
    """Exact product; sqrt(d)*sqrt(e) = sqrt(de), square-free-normalized."""
    return a * b


def rad_inv(a: RadElement) -> RadElement:
    """Exact inverse of a nonzero element; raises ZeroDivisionError on 0."""
    return a.inverse()


def rad_to_float(a: RadElement) -> float:
    """Nearest double, summed in deterministic (ascending radicand) order."""
    return a.to_float()


def parse_rad(text: str) -> RadElement:
    """Parse the report string grammar, e.g. ``1/2+3*sqrt(5)``."""
    return RadElement.parse(text)
