"""Exact sparse bivariate polynomials over Q, t-lifted polynomials and interval boxes.

All coefficients are `fractions.Fraction`; there is no floating point in this
module.  Exponent pairs (i, j) are plain tuples of non-negative ints.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

Exponent = Tuple[int, int]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


def _frac_str(x: Fraction) -> str:
    return "%d/%d" % (x.numerator, x.denominator) if x.denominator != 1 else str(x.numerator)


# ----------------------------------------------------------------------------
# intervals


class Interval:
    """Closed rational interval [lo, hi]."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        self.lo = _frac(lo)
        self.hi = _frac(hi)
        if self.lo > self.hi:
            raise ValueError("empty interval")

    def __repr__(self):
        return "Interval(%s, %s)" % (self.lo, self.hi)

    def __eq__(self, other):
        return isinstance(other, Interval) and self.lo == other.lo and self.hi == other.hi

    def __add__(self, other):
        other = _as_interval(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_as_interval(other))

    def __rsub__(self, other):
        return _as_interval(other) + (-self)

    def __mul__(self, other):
        other = _as_interval(other)
        cands = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(min(cands), max(cands))

    __rmul__ = __mul__

    def pow(self, n: int) -> "Interval":
        if n == 0:
            return Interval(1, 1)
        if n == 1:
            return self
        if n % 2 == 1 or self.lo >= 0:
            return Interval(self.lo ** n, self.hi ** n)
        if self.hi <= 0:
            return Interval(self.hi ** n, self.lo ** n)
        return Interval(0, max(self.lo ** n, self.hi ** n))

    def contains(self, x) -> bool:
        x = _frac(x)
        return self.lo <= x <= self.hi

    def strictly_positive(self) -> bool:
        return self.lo > 0

    def strictly_negative(self) -> bool:
        return self.hi < 0

    def width(self) -> Fraction:
        return self.hi - self.lo

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def intersects(self, other: "Interval") -> bool:
        return not (self.hi < other.lo or other.hi < self.lo)


def _as_interval(x) -> Interval:
    return x if isinstance(x, Interval) else Interval(x)


class IntervalBox:
    """Axis-aligned rational box; used as isolating region in the plane."""

    __slots__ = ("x", "y")

    def __init__(self, x: Interval, y: Interval):
        self.x = x if isinstance(x, Interval) else Interval(*x)
        self.y = y if isinstance(y, Interval) else Interval(*y)

    def __repr__(self):
        return "IntervalBox(x=[%s,%s], y=[%s,%s])" % (self.x.lo, self.x.hi, self.y.lo, self.y.hi)

    def mid(self) -> Tuple[Fraction, Fraction]:
        return self.x.mid(), self.y.mid()

    def contains_point(self, px, py) -> bool:
        return self.x.contains(px) and self.y.contains(py)

    def intersects(self, other: "IntervalBox") -> bool:
        return self.x.intersects(other.x) and self.y.intersects(other.y)

    def to_json(self) -> dict:
        return {
            "x": [_frac_str(self.x.lo), _frac_str(self.x.hi)],
            "y": [_frac_str(self.y.lo), _frac_str(self.y.hi)],
        }


# ----------------------------------------------------------------------------
# sparse polynomials


def _grlex(e: Exponent):
    return (e[0] + e[1], e[0], e[1])


class SparseBivariate:
    """Sparse polynomial sum a_ij x^i y^j with exact rational coefficients.

    Zero coefficients are never stored; term order is graded lexicographic so
    that serialization and hashing are reproducible.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, object] | Iterable = ()):
        d: Dict[Exponent, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            c = _frac(c)
            if c == 0:
                continue
            e = (int(e[0]), int(e[1]))
            d[e] = d.get(e, Fraction(0)) + c
            if d[e] == 0:
                del d[e]
        self.terms = d

    # -- basic protocol ------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, SparseBivariate) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items(), key=lambda t: _grlex(t[0]))))

    def __repr__(self):
        if not self.terms:
            return "SparseBivariate(0)"
        bits = []
        for (i, j), c in sorted(self.terms.items(), key=lambda t: _grlex(t[0])):
            mon = "".join((("x^%d" % i if i > 1 else "x") if i else "",
                           ("y^%d" % j if j > 1 else "y") if j else ""))
            bits.append("%s%s" % (c, ("*" + mon) if mon else ""))
        return "SparseBivariate(%s)" % " + ".join(bits)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SparseBivariate):
            other = SparseBivariate({(0, 0): other})
        d = dict(self.terms)
        for e, c in other.terms.items():
            s = d.get(e, Fraction(0)) + c
            if s == 0:
                d.pop(e, None)
            else:
                d[e] = s
        out = SparseBivariate()
        out.terms = d
        return out

    __radd__ = __add__

    def __neg__(self):
        out = SparseBivariate()
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, SparseBivariate):
            other = SparseBivariate({(0, 0): other})
        return self + (-other)

    def __rsub__(self, other):
        return SparseBivariate({(0, 0): other}) - self

    def __mul__(self, other):
        if not isinstance(other, SparseBivariate):
            return self.scale(other)
        d: Dict[Exponent, Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2)
                s = d.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    d.pop(e, None)
                else:
                    d[e] = s
        out = SparseBivariate()
        out.terms = d
        return out

    __rmul__ = __mul__

    def scale(self, c) -> "SparseBivariate":
        c = _frac(c)
        if c == 0:
            return SparseBivariate()
        out = SparseBivariate()
        out.terms = {e: c * v for e, v in self.terms.items()}
        return out

    def shift(self, di: int, dj: int) -> "SparseBivariate":
        """Multiply by the monomial x^di y^dj (exponents must stay >= 0)."""
        out = SparseBivariate()
        out.terms = {}
        for (i, j), c in self.terms.items():
            if i + di < 0 or j + dj < 0:
                raise ValueError("negative exponent after shift")
            out.terms[(i + di, j + dj)] = c
        return out

    # -- calculus and substitution -------------------------------------------

    def partial_x(self) -> "SparseBivariate":
        return SparseBivariate({(i - 1, j): c * i for (i, j), c in self.terms.items() if i})

    def partial_y(self) -> "SparseBivariate":
        return SparseBivariate({(i, j - 1): c * j for (i, j), c in self.terms.items() if j})

    def substitute_squares(self) -> "SparseBivariate":
        """Return p(x^2, y^2)."""
        out = SparseBivariate()
        out.terms = {(2 * i, 2 * j): c for (i, j), c in self.terms.items()}
        return out

    def swap_xy(self) -> "SparseBivariate":
        out = SparseBivariate()
        out.terms = {(j, i): c for (i, j), c in self.terms.items()}
        return out

    def eval(self, px, py) -> Fraction:
        px, py = _frac(px), _frac(py)
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            total += c * px ** i * py ** j
        return total

    def eval_univariate(self, axis: str):
        """Coefficient list (ascending) of the restriction to an axis."""
        if axis == "x":
            pairs = [(i, c) for (i, j), c in self.terms.items() if j == 0]
        elif axis == "y":
            pairs = [(j, c) for (i, j), c in self.terms.items() if i == 0]
        else:
            raise ValueError("axis must be 'x' or 'y'")
        n = max((k for k, _ in pairs), default=0)
        coeffs = [Fraction(0)] * (n + 1)
        for k, c in pairs:
            coeffs[k] += c
        return coeffs

    def eval_interval(self, box: IntervalBox) -> Interval:
        """Interval enclosure of the range over ``box`` (Horner in y)."""
        by_j: Dict[int, Dict[int, Fraction]] = {}
        for (i, j), c in self.terms.items():
            by_j.setdefault(j, {})[i] = c
        if not by_j:
            return Interval(0, 0)
        xs = box.x
        xpow: Dict[int, Interval] = {0: Interval(1, 1)}

        def xp(i):
            if i not in xpow:
                xpow[i] = xs.pow(i)
            return xpow[i]

        jmax = max(by_j)
        acc = Interval(0, 0)
        for j in range(jmax, -1, -1):
            acc = acc * box.y
            row = by_j.get(j)
            if row:
                inner = Interval(0, 0)
                for i, c in row.items():
                    inner = inner + xp(i) * c
                acc = acc + inner
        return acc

    def total_degree(self) -> int:
        return max((i + j for (i, j) in self.terms), default=0)

    def is_even_even(self) -> bool:
        return all(i % 2 == 0 and j % 2 == 0 for (i, j) in self.terms)

    def halve_exponents(self) -> "SparseBivariate":
        if not self.is_even_even():
            raise ValueError("polynomial is not even in both variables")
        out = SparseBivariate()
        out.terms = {(i // 2, j // 2): c for (i, j), c in self.terms.items()}
        return out

    # -- geometry hooks --------------------------------------------------------

    def support(self):
        return sorted(self.terms, key=_grlex)

    def newton_polygon(self):
        """Convex hull of the exponents of the nonzero terms (a LatticePolygon)."""
        from . import geom

        if not self.terms:
            raise ValueError("newton polygon of the zero polynomial")
        return geom.convex_hull(list(self.terms))

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "terms": [
                {"e": [i, j], "c": _frac_str(c)}
                for (i, j), c in sorted(self.terms.items(), key=lambda t: _grlex(t[0]))
            ]
        }

    @classmethod
    def from_json(cls, data) -> "SparseBivariate":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({tuple(t["e"]): Fraction(t["c"]) for t in data["terms"]})


def add(p: SparseBivariate, q: SparseBivariate) -> SparseBivariate:
    return p + q


def mul(p: SparseBivariate, q: SparseBivariate) -> SparseBivariate:
    return p * q


def negate(p: SparseBivariate) -> SparseBivariate:
    return -p


def partial_x(p: SparseBivariate) -> SparseBivariate:
    return p.partial_x()


def partial_y(p: SparseBivariate) -> SparseBivariate:
    return p.partial_y()


def substitute_squares(p: SparseBivariate) -> SparseBivariate:
    return p.substitute_squares()


def newton_polygon(p: SparseBivariate):
    return p.newton_polygon()


def eval_interval(p: SparseBivariate, box: IntervalBox) -> Interval:
    return p.eval_interval(box)


# ----------------------------------------------------------------------------
# Viro (t-lifted) polynomials


class ViroPolynomial:
    """Polynomial with a rational t-exponent (lift) attached to every term.

    Specializing at t0 > 0 gives the ordinary polynomial with coefficients
    a_ij * t0^nu(i,j).  Fractional lifts are admitted as long as t0 is a d-th
    power of a rational, d being the common denominator of the lifts.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, Tuple[object, object]]):
        d = {}
        for e, (c, lift) in terms.items():
            c = _frac(c)
            if c == 0:
                continue
            d[(int(e[0]), int(e[1]))] = (c, _frac(lift))
        self.terms = d

    def __eq__(self, other):
        return isinstance(other, ViroPolynomial) and self.terms == other.terms

    def __repr__(self):
        return "ViroPolynomial(%d terms)" % len(self.terms)

    def coefficient_polynomial(self) -> SparseBivariate:
        return SparseBivariate({e: c for e, (c, _) in self.terms.items()})

    def lift_of(self, e: Exponent) -> Fraction:
        return self.terms[e][1]

    def lift_denominator(self) -> int:
        d = 1
        for _, (_, lift) in self.terms.items():
            d = d * lift.denominator // _gcd(d, lift.denominator)
        return d

    def specialize_t(self, t0) -> SparseBivariate:
        t0 = _frac(t0)
        if t0 <= 0:
            raise ValueError("t0 must be positive")
        d = self.lift_denominator()
        if d == 1:
            root = t0
        else:
            root = _nth_root(t0, d)
            if root is None:
                raise ValueError("t0 must be a %d-th power of a rational to clear fractional lifts" % d)
        out = {}
        for e, (c, lift) in self.terms.items():
            k = lift * d  # integral now
            out[e] = c * root ** int(k)
        return SparseBivariate(out)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"e": [i, j], "c": _frac_str(c), "lift": _frac_str(lift)}
                for (i, j), (c, lift) in sorted(self.terms.items(), key=lambda t: _grlex(t[0]))
            ]
        }

    @classmethod
    def from_json(cls, data) -> "ViroPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({tuple(t["e"]): (Fraction(t["c"]), Fraction(t.get("lift", 0))) for t in data["terms"]})


def specialize_t(v: ViroPolynomial, t0) -> SparseBivariate:
    return v.specialize_t(t0)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _nth_root(q: Fraction, n: int):
    """Exact n-th root of a positive rational, or None."""
    num = _int_nth_root(q.numerator, n)
    den = _int_nth_root(q.denominator, n)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _int_nth_root(m: int, n: int):
    if m < 0:
        return None
    r = round(m ** (1.0 / n))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** n == m:
            return cand
    return None
