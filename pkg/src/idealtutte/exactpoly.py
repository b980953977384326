"""Exact big-integer polynomial arithmetic and the coboundary/Tutte/characteristic transforms.

Bivariate polynomials are sparse maps (deg_a, deg_b) -> int; univariate
polynomials are dense coefficient lists.  Rationals appear only inside
Lagrange interpolation and are asserted integral before anything leaves
this module.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb

from .errors import ConstraintError, InconsistencyError


class BivariatePolynomial:
    """Sparse exact polynomial in two variables.

    Coefficients are arbitrary-precision integers; zero coefficients are
    never stored.  Variable labels are presentation only: equality and
    arithmetic look at the coefficient map alone.
    """

    __slots__ = ("coeffs", "variables")

    def __init__(self, coeffs=None, variables=("x", "y")):
        self.variables = tuple(variables)
        self.coeffs = {}
        if coeffs:
            for (da, db), c in dict(coeffs).items():
                if c:
                    self.coeffs[(int(da), int(db))] = int(c)

    @classmethod
    def zero(cls, variables=("x", "y")):
        return cls({}, variables)

    @classmethod
    def one(cls, variables=("x", "y")):
        return cls({(0, 0): 1}, variables)

    @classmethod
    def monomial(cls, da, db, c=1, variables=("x", "y")):
        return cls({(da, db): c}, variables)

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, da, db):
        return self.coeffs.get((da, db), 0)

    def degree(self, axis):
        """Largest exponent of the given variable (0 or 1); -1 for the zero polynomial."""
        if not self.coeffs:
            return -1
        return max(k[axis] for k in self.coeffs)

    def total_degree(self):
        if not self.coeffs:
            return -1
        return max(a + b for a, b in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, BivariatePolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ({} if other == 0 else {(0, 0): other})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return BivariatePolynomial(out, self.variables)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self.coeffs.items()}, self.variables)

    def __mul__(self, other):
        if isinstance(other, int):
            return BivariatePolynomial(
                {k: c * other for k, c in self.coeffs.items()}, self.variables
            )
        other = self._coerce(other)
        out = {}
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivariatePolynomial(out, self.variables)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = BivariatePolynomial.one(self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, int):
            return BivariatePolynomial({(0, 0): other}, self.variables)
        raise TypeError(type(other))

    def evaluate(self, a, b):
        """Exact value at integer point (a, b), Horner-style in the second variable."""
        by_db = {}
        for (da, db), c in self.coeffs.items():
            by_db[db] = by_db.get(db, 0) + c * a ** da
        total = 0
        prev = None
        for db in sorted(by_db, reverse=True):
            total = by_db[db] if prev is None else total * b ** (prev - db) + by_db[db]
            prev = db
        if prev:
            total *= b ** prev
        return total

    def terms(self):
        """Terms sorted by ascending total degree, then lexicographic exponents."""
        return sorted(self.coeffs.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0]))

    # ---- serialization -------------------------------------------------

    def to_text(self):
        """Canonical text form: sorted by total degree then lexicographic."""
        if not self.coeffs:
            return "0"
        va, vb = self.variables
        parts = []
        for (da, db), c in self.terms():
            parts.append(_format_term(c, ((va, da), (vb, db)), leading=not parts))
        return "".join(parts)

    def to_latex(self):
        """LaTeX math expression, descending second-variable degree then first."""
        if not self.coeffs:
            return "0"
        va, vb = self.variables
        order = sorted(self.coeffs.items(), key=lambda kv: (-kv[0][1], -kv[0][0]))
        parts = []
        for (da, db), c in order:
            parts.append(
                _format_term(c, ((va, da), (vb, db)), leading=not parts, latex=True)
            )
        return "".join(parts)

    def to_json_dict(self):
        return {
            "variables": list(self.variables),
            "terms": [
                {"dx": da, "dy": db, "c": str(c)} for (da, db), c in self.terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data):
        coeffs = {(int(t["dx"]), int(t["dy"])): int(t["c"]) for t in data["terms"]}
        return cls(coeffs, tuple(data.get("variables", ("x", "y"))))

    def __repr__(self):
        return self.to_text()


def _format_term(c, var_degs, leading, latex=False):
    sign = "-" if c < 0 else ("" if leading else " + ")
    if c < 0 and not leading:
        sign = " - "
    mag = abs(c)
    body = ""
    for name, d in var_degs:
        if d == 0:
            continue
        if d == 1:
            body += name
        elif latex and d > 9:
            body += f"{name}^{{{d}}}"
        else:
            body += f"{name}^{d}"
    if not body:
        return f"{sign}{mag}"
    coeff = "" if mag == 1 else str(mag)
    return f"{sign}{coeff}{body}"


_TERM_RE = re.compile(r"[+-]?[^+-]+")


def parse_polynomial(text, variables=("x", "y")):
    """Parse a polynomial written with ``^`` powers (plain or ``^{..}``) and implicit 1s.

    Accepts both the canonical text form emitted by :meth:`to_text` and the
    LaTeX-flavoured fixtures used in tests.  Like terms are accumulated, so
    the input need not be normalized.
    """
    va, vb = variables
    s = text.replace("\\,", "").replace("{", "").replace("}", "")
    s = re.sub(r"\s", "", s)
    if not s:
        raise ConstraintError("empty polynomial text")
    coeffs = {}
    pat = re.compile(
        r"^(\d*)"
        rf"(?:{re.escape(va)}(?:\^(\d+))?)?"
        rf"(?:{re.escape(vb)}(?:\^(\d+))?)?$"
    )
    for term in _TERM_RE.findall(s):
        sign = 1
        if term[0] == "-":
            sign, term = -1, term[1:]
        elif term[0] == "+":
            term = term[1:]
        m = pat.match(term)
        if not m or not term:
            raise ConstraintError(f"cannot parse term {term!r}")
        c = int(m.group(1)) if m.group(1) else 1
        da = (int(m.group(2)) if m.group(2) else 1) if va in term else 0
        db = (int(m.group(3)) if m.group(3) else 1) if vb in term else 0
        k = (da, db)
        coeffs[k] = coeffs.get(k, 0) + sign * c
    return BivariatePolynomial(coeffs, variables)


class UnivariatePolynomial:
    """Dense exact polynomial in one variable.

    Coefficients are integers in all externally visible values; Fractions may
    pass through transiently during interpolation.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs

    @classmethod
    def zero(cls):
        return cls([])

    @classmethod
    def constant(cls, c):
        return cls([c])

    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, UnivariatePolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ([] if other == 0 else [other])
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePolynomial(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)]
        )

    def __sub__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePolynomial(
            [self.coefficient(i) - other.coefficient(i) for i in range(n)]
        )

    def __neg__(self):
        return UnivariatePolynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UnivariatePolynomial([c * other for c in self.coeffs])
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return UnivariatePolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, UnivariatePolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return UnivariatePolynomial([other])
        raise TypeError(type(other))

    def evaluate(self, x):
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def divide_linear(self, root):
        """Exact synthetic division by (q - root); returns (quotient, remainder)."""
        quot = []
        carry = 0
        for c in reversed(self.coeffs):
            carry = carry * root + c
            quot.append(carry)
        remainder = quot.pop() if quot else 0
        quot.reverse()
        return UnivariatePolynomial(quot), remainder

    def to_text(self, variable="q"):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            parts.append(_format_term(c, ((variable, k),), leading=not parts))
        return "".join(parts)

    def __repr__(self):
        return self.to_text()


def lagrange_interpolate(points):
    """Interpolate t-coefficient profiles at distinct integer abscissae into a (q, t) polynomial.

    ``points`` is a list of ``(q_value, UnivariatePolynomial in t)``.  The
    result has q-degree < len(points) and integer coefficients; a fractional
    coefficient raises InconsistencyError since every counting routine that
    feeds this function produces exact integer data.
    """
    if not points:
        raise ConstraintError("no interpolation points")
    xs = [int(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ConstraintError(f"duplicate abscissa in {xs}")
    npts = len(xs)
    # Lagrange basis polynomials in q, exact rational coefficients.
    bases = []
    for i, xi in enumerate(xs):
        num = [Fraction(1)]
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            # multiply num by (q - xj)
            nxt = [Fraction(0)] * (len(num) + 1)
            for k, c in enumerate(num):
                nxt[k] -= c * xj
                nxt[k + 1] += c
            num = nxt
            den *= xi - xj
        bases.append([c / den for c in num])
    tdeg = max((p.degree() for _, p in points), default=-1)
    out = {}
    for k in range(tdeg + 1):
        acc = [Fraction(0)] * npts
        for (_, prof), basis in zip(points, bases):
            v = prof.coefficient(k)
            if v:
                for d in range(npts):
                    acc[d] += v * basis[d]
        for d, c in enumerate(acc):
            if c:
                if c.denominator != 1:
                    raise InconsistencyError(
                        f"non-integral interpolation result {c} at q^{d} t^{k}"
                    )
                out[(d, k)] = int(c)
    return BivariatePolynomial(out, ("q", "t"))


def coboundary_to_tutte(cb, rank):
    """Transform a coboundary polynomial in (q, t) into the Tutte polynomial in (x, y).

    Substitutes q -> (x-1)(y-1), t -> y and divides by (y-1)^rank; a nonzero
    division remainder means the claimed rank or the coboundary data is wrong.
    """
    sub = BivariatePolynomial.zero(("x", "y"))
    # (x-1)(y-1) = xy - x - y + 1
    q_image = BivariatePolynomial(
        {(1, 1): 1, (1, 0): -1, (0, 1): -1, (0, 0): 1}, ("x", "y")
    )
    powers = {0: BivariatePolynomial.one(("x", "y"))}
    qdeg = max((dq for dq, _ in cb.coeffs), default=0)
    for d in range(1, qdeg + 1):
        powers[d] = powers[d - 1] * q_image
    for (dq, dt), c in cb.coeffs.items():
        sub = sub + powers[dq] * BivariatePolynomial({(0, dt): c}, ("x", "y"))
    return _divide_by_y_minus_one(sub, rank)


def _divide_by_y_minus_one(poly, times):
    """Exact repeated division by (y - 1) with remainder check."""
    cur = poly
    for _ in range(times):
        by_x = {}
        for (dx, dy), c in cur.coeffs.items():
            col = by_x.setdefault(dx, {})
            col[dy] = c
        out = {}
        for dx, col in by_x.items():
            deg = max(col)
            # synthetic division of sum c_dy y^dy by (y - 1)
            carry = 0
            for dy in range(deg, 0, -1):
                carry += col.get(dy, 0)
                if carry:
                    out[(dx, dy - 1)] = carry
            if carry + col.get(0, 0) != 0:
                raise InconsistencyError(
                    "coboundary not divisible by (y-1)^rank: "
                    f"remainder {carry + col.get(0, 0)} at x^{dx}"
                )
        cur = BivariatePolynomial(out, ("x", "y"))
    return cur


def tutte_to_characteristic(tutte, n, rank):
    """Characteristic polynomial chi(q) = (-1)^rank q^(n-rank) T(1-q, 0)."""
    if rank > n:
        raise ConstraintError(f"rank {rank} exceeds ambient dimension {n}")
    # T(1-q, 0): keep dy == 0 terms, substitute x = 1 - q.
    acc = [0] * (max((dx for dx, dy in tutte.coeffs if dy == 0), default=0) + 1)
    for (dx, dy), c in tutte.coeffs.items():
        if dy != 0:
            continue
        # (1-q)^dx
        for k in range(dx + 1):
            acc[k] += c * comb(dx, k) * (-1) ** k
    sign = (-1) ** rank
    out = [0] * (n - rank) + [sign * c for c in acc]
    return UnivariatePolynomial(out)


def evaluate(poly, a, b):
    """Module-level exact evaluation of a BivariatePolynomial."""
    return poly.evaluate(a, b)


def latex_is_wellformed(s):
    """Cheap token validation for emitted LaTeX: balanced braces, known tokens only."""
    depth = 0
    for ch in s:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                return False
    if depth != 0:
        return False
    stripped = re.sub(r"[0-9a-zA-Z^{}+\- ]", "", s)
    return stripped == ""
