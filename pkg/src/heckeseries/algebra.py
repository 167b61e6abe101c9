"""Exact arithmetic foundation.

Everything downstream is built on four immutable value types:

* ``PrimeLaurent`` -- Laurent polynomial in the formal prime ``p`` with
  exact rational coefficients.  This is the coefficient ring of the whole
  project; negative ``p``-exponents are first class.
* ``PrimeRat`` -- quotient of two ``PrimeLaurent`` values, kept in reduced
  canonical form.  Used as an intermediate only (linear solves, the
  multiplicity normalization); public results are always Laurent.
* ``XPoly`` -- sparse multivariate polynomial in the Satake parameters
  ``x0 .. x_{nvars-1}`` over ``PrimeLaurent``.
* ``VSeries`` -- truncated power series in ``v`` with ``XPoly`` coefficients.

No floating point anywhere; equality is exact identity of canonical forms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import (
    DivisionByZero,
    NonUnitConstantTerm,
    NotDivisible,
    NotLaurent,
    UnassignedVariable,
    VarMismatch,
)

Scalar = Union[int, Fraction, "PrimeLaurent"]


class PrimeLaurent:
    """Laurent polynomial in p over the rationals, stored exponent -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Fraction] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[int(e)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def const(value) -> "PrimeLaurent":
        return PrimeLaurent({0: Fraction(value)})

    @staticmethod
    def p_power(k: int, coeff=1) -> "PrimeLaurent":
        return PrimeLaurent({k: Fraction(coeff)})

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {0: Fraction(1)}

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "PrimeLaurent":
        if isinstance(other, PrimeLaurent):
            return other
        if isinstance(other, (int, Fraction)):
            return PrimeLaurent.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        res = dict(self.terms)
        for e, c in other.terms.items():
            s = res.get(e, 0) + c
            if s:
                res[e] = s
            else:
                res.pop(e, None)
        out = PrimeLaurent.__new__(PrimeLaurent)
        out.terms = res
        return out

    __radd__ = __add__

    def __neg__(self):
        out = PrimeLaurent.__new__(PrimeLaurent)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        res: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = res.get(e, 0) + c1 * c2
                if s:
                    res[e] = s
                else:
                    res.pop(e, None)
        out = PrimeLaurent.__new__(PrimeLaurent)
        out.terms = res
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("use PrimeRat for negative powers of a polynomial")
        result = PL_ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def div_exact(self, other: "PrimeLaurent") -> "PrimeLaurent":
        """Exact Laurent quotient; raises NotDivisible if none exists."""
        other = self._coerce(other)
        if other.is_zero():
            raise DivisionByZero("division by zero Laurent polynomial")
        if self.is_zero():
            return PL_ZERO
        sa, sb = self.min_exp(), other.min_exp()
        da = _dense(self, sa)
        db = _dense(other, sb)
        q, r = _poly_divmod(da, db)
        if any(r):
            raise NotDivisible(f"{self} is not divisible by {other}")
        return _from_dense(q, sa - sb)

    def evaluate(self, value) -> Fraction:
        """Specialize p to a concrete rational value."""
        value = Fraction(value)
        return sum((c * value**e for e, c in self.terms.items()), Fraction(0))

    # -- comparison / hashing ----------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*p" if c != 1 else "p")
            else:
                parts.append(f"{c}*p^{e}" if c != 1 else f"p^{e}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- serialization ------------------------------------------------

    def to_json(self) -> dict:
        return {str(e): _frac_str(c) for e, c in sorted(self.terms.items(), reverse=True)}

    @staticmethod
    def from_json(data: Mapping[str, str]) -> "PrimeLaurent":
        return PrimeLaurent({int(e): Fraction(s) for e, s in data.items()})


PL_ZERO = PrimeLaurent()
PL_ONE = PrimeLaurent.const(1)
#: the formal prime itself
p = PrimeLaurent.p_power(1)


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _dense(a: PrimeLaurent, shift: int) -> list[Fraction]:
    """Coefficient list of a * p^(-shift), constant term first."""
    deg = a.max_exp() - shift
    out = [Fraction(0)] * (deg + 1)
    for e, c in a.terms.items():
        out[e - shift] = c
    return out


def _from_dense(coeffs: Iterable[Fraction], shift: int) -> PrimeLaurent:
    return PrimeLaurent({i + shift: c for i, c in enumerate(coeffs) if c})


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    """Dense univariate division over Q; returns (quotient, remainder)."""
    while b and not b[-1]:
        b = b[:-1]
    r = list(a)
    q = [Fraction(0)] * max(len(r) - len(b) + 1, 0)
    lead = b[-1]
    for i in range(len(r) - len(b), -1, -1):
        c = r[i + len(b) - 1] / lead
        if c:
            q[i] = c
            for j, bc in enumerate(b):
                r[i + j] -= c * bc
    return q, r


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Monic gcd over Q, dense lists (constant term first)."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while any(b):
        _, r = _poly_divmod(a, b)
        while r and not r[-1]:
            r.pop()
        a, b = b, r
    while a and not a[-1]:
        a.pop()
    if not a:
        return [Fraction(0)]
    lead = a[-1]
    return [c / lead for c in a]


class PrimeRat:
    """Reduced quotient of two Laurent polynomials in p.

    The denominator is stored as an ordinary polynomial (no negative
    exponents, nonzero constant term unless trivial) with leading
    coefficient 1; the gcd of numerator and denominator is divided out.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: PrimeLaurent, den: PrimeLaurent = PL_ONE):
        num = PrimeLaurent._coerce(num)
        den = PrimeLaurent._coerce(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            self.num, self.den = PL_ZERO, PL_ONE
            return
        shift = min(num.min_exp(), den.min_exp())
        dn = _dense(num, shift)
        dd = _dense(den, shift)
        g = _poly_gcd(dn, dd)
        if len(g) > 1 or g[0] != 1:
            dn, _ = _poly_divmod(dn, g)
            dd, _ = _poly_divmod(dd, g)
        while len(dd) > 1 and not dd[-1]:
            dd.pop()
        # clear a residual p^k common factor, then put it on the numerator
        k = 0
        while not dd[k]:
            k += 1
        lead = dd[-1]
        self.den = _from_dense([c / lead for c in dd[k:]], 0)
        self.num = _from_dense([c / lead for c in dn], -k)

    @staticmethod
    def _coerce(other) -> "PrimeRat":
        if isinstance(other, PrimeRat):
            return other
        if isinstance(other, (int, Fraction, PrimeLaurent)):
            return PrimeRat(PrimeLaurent._coerce(other))
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = PrimeRat.__new__(PrimeRat)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by zero rational function")
        return PrimeRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def to_laurent(self) -> PrimeLaurent:
        """Collapse to a Laurent polynomial; raises NotLaurent otherwise."""
        try:
            return self.num.div_exact(self.den)
        except NotDivisible as exc:
            raise NotLaurent(f"({self.num})/({self.den}) is not Laurent in p") from exc

    def __repr__(self):
        if self.den.is_one():
            return repr(self.num)
        return f"({self.num})/({self.den})"


def _grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


class XPoly:
    """Sparse polynomial in x0..x_{nvars-1} with PrimeLaurent coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, Scalar] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(v) for v in e)
                if len(e) != nvars:
                    raise VarMismatch(f"exponent vector {e} has wrong length for nvars={nvars}")
                c = PrimeLaurent._coerce(c)
                if not c.is_zero():
                    clean[e] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def constant(nvars: int, value: Scalar) -> "XPoly":
        return XPoly(nvars, {(0,) * nvars: value})

    @staticmethod
    def variable(nvars: int, index: int) -> "XPoly":
        e = [0] * nvars
        e[index] = 1
        return XPoly(nvars, {tuple(e): 1})

    @staticmethod
    def monomial(nvars: int, exps: tuple, coeff: Scalar = 1) -> "XPoly":
        return XPoly(nvars, {tuple(exps): coeff})

    def _raw(self, terms: dict) -> "XPoly":
        out = XPoly.__new__(XPoly)
        out.nvars = self.nvars
        out.terms = terms
        return out

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        z = (0,) * self.nvars
        return set(self.terms) == {z} and self.terms[z].is_one()

    def sorted_terms(self):
        """Terms in the canonical graded-lex-descending order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading(self):
        return max(self.terms, key=_grlex_key)

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, XPoly):
            if other.nvars != self.nvars:
                raise VarMismatch(f"nvars {self.nvars} != {other.nvars}")
            return other
        if isinstance(other, (int, Fraction, PrimeLaurent)):
            return XPoly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        res = dict(self.terms)
        for e, c in other.terms.items():
            s = res.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                res.pop(e, None)
            else:
                res[e] = s
        return self._raw(res)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PrimeLaurent)):
            c0 = PrimeLaurent._coerce(other)
            if c0.is_zero():
                return self._raw({})
            return self._raw({e: c * c0 for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        res: dict[tuple, PrimeLaurent] = {}
        bterms = other.terms
        for e1, c1 in self.terms.items():
            for e2, c2 in bterms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = res.get(e)
                s = c if s is None else s + c
                if s.terms:
                    res[e] = s
                else:
                    res.pop(e, None)
        return self._raw(res)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of XPoly")
        result = XPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def div_exact(self, other: "XPoly") -> "XPoly":
        """Exact quotient q with q*other == self; raises NotDivisible."""
        other = self._coerce(other)
        if other.is_zero():
            raise DivisionByZero("division by zero polynomial")
        quot: dict[tuple, PrimeLaurent] = {}
        rem = dict(self.terms)
        lead_b = max(other.terms, key=_grlex_key)
        lc_b = other.terms[lead_b]
        while rem:
            lead_r = max(rem, key=_grlex_key)
            diff = tuple(a - b for a, b in zip(lead_r, lead_b))
            if any(d < 0 for d in diff):
                raise NotDivisible("leading monomial not divisible")
            c = rem[lead_r].div_exact(lc_b)
            quot[diff] = c
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(diff, e2))
                s = rem.get(e, PL_ZERO) - c * c2
                if s.terms:
                    rem[e] = s
                else:
                    rem.pop(e, None)
        return self._raw(quot)

    def substitute(self, assignment: Mapping[int, Union["XPoly", Scalar]]) -> "XPoly":
        """Ring-homomorphism image under variable -> polynomial assignment.

        Every variable occurring in self must be assigned; unassigned
        occurrences raise UnassignedVariable.
        """
        images: dict[int, XPoly] = {}
        for i, val in assignment.items():
            if isinstance(val, XPoly):
                if val.nvars != self.nvars:
                    raise VarMismatch("assignment value has wrong nvars")
                images[i] = val
            else:
                images[i] = XPoly.constant(self.nvars, val)
        power_cache: dict[tuple[int, int], XPoly] = {}

        def power(i, k):
            key = (i, k)
            if key not in power_cache:
                power_cache[key] = images[i] ** k
            return power_cache[key]

        result = XPoly(self.nvars)
        for e, c in self.terms.items():
            mono = XPoly.constant(self.nvars, c)
            for i, k in enumerate(e):
                if k == 0:
                    continue
                if i not in images:
                    raise UnassignedVariable(f"variable x{i} is not assigned")
                mono = mono * power(i, k)
            result = result + mono
        return result

    def permute(self, perm: tuple) -> "XPoly":
        """Relabel variables: index i becomes perm[i] (length nvars)."""
        res = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for i, k in enumerate(e):
                ne[perm[i]] = k
            res[tuple(ne)] = c
        return self._raw(res)

    def specialize_prime(self, prime) -> "XPoly":
        """Evaluate every coefficient at p = prime (rational coefficients remain)."""
        res = {}
        for e, c in self.terms.items():
            val = c.evaluate(prime)
            if val:
                res[e] = PrimeLaurent.const(val)
        return self._raw(res)

    # -- comparison / hashing ----------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, PrimeLaurent)):
            other = XPoly.constant(self.nvars, other)
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{i}^{k}" if k > 1 else f"x{i}" for i, k in enumerate(e) if k
            )
            cs = repr(c)
            if " " in cs:
                cs = f"({cs})"
            parts.append(f"{cs}*{mono}" if mono and cs != "1" else (mono or cs))
        return " + ".join(parts)

    # -- serialization ------------------------------------------------

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"x": list(e), "c": c.to_json()} for e, c in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(data: Mapping) -> "XPoly":
        return XPoly(
            data["nvars"],
            {tuple(t["x"]): PrimeLaurent.from_json(t["c"]) for t in data["terms"]},
        )


class VSeries:
    """Power series in v, truncated at a fixed order, with XPoly coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[XPoly]):
        coeffs = list(coeffs)
        if len(coeffs) != order + 1:
            raise ValueError(f"expected {order + 1} coefficients, got {len(coeffs)}")
        nv = coeffs[0].nvars
        for c in coeffs:
            if c.nvars != nv:
                raise VarMismatch("mixed nvars in series coefficients")
        self.order = order
        self.coeffs = coeffs

    @staticmethod
    def from_dict(order: int, nvars: int, entries: Mapping[int, XPoly]) -> "VSeries":
        coeffs = [XPoly(nvars) for _ in range(order + 1)]
        for k, c in entries.items():
            if k <= order:
                coeffs[k] = c
        return VSeries(order, coeffs)

    @staticmethod
    def one(order: int, nvars: int) -> "VSeries":
        return VSeries.from_dict(order, nvars, {0: XPoly.constant(nvars, 1)})

    @property
    def nvars(self) -> int:
        return self.coeffs[0].nvars

    def __add__(self, other: "VSeries") -> "VSeries":
        n = min(self.order, other.order)
        return VSeries(n, [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __sub__(self, other: "VSeries") -> "VSeries":
        n = min(self.order, other.order)
        return VSeries(n, [self.coeffs[k] - other.coeffs[k] for k in range(n + 1)])

    def __mul__(self, other: "VSeries") -> "VSeries":
        if not isinstance(other, VSeries):
            return NotImplemented
        if self.nvars != other.nvars:
            raise VarMismatch("series over different nvars")
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = XPoly(self.nvars)
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if a.terms and b.terms:
                    acc = acc + a * b
            out.append(acc)
        return VSeries(n, out)

    def recip(self) -> "VSeries":
        """Multiplicative inverse mod v^(order+1); constant term must be 1."""
        if not self.coeffs[0].is_one():
            raise NonUnitConstantTerm("series constant term is not 1")
        inv = [XPoly.constant(self.nvars, 1)]
        for k in range(1, self.order + 1):
            acc = XPoly(self.nvars)
            for j in range(1, k + 1):
                a = self.coeffs[j] if j <= self.order else None
                if a is not None and a.terms and inv[k - j].terms:
                    acc = acc + a * inv[k - j]
            inv.append(-acc)
        return VSeries(self.order, inv)

    def truncate(self, order: int) -> "VSeries":
        if order >= self.order:
            return self
        return VSeries(order, self.coeffs[: order + 1])

    def degree(self) -> int:
        """Largest k <= order with nonzero coefficient (-1 for the zero series)."""
        for k in range(self.order, -1, -1):
            if self.coeffs[k].terms:
                return k
        return -1

    def __eq__(self, other):
        if not isinstance(other, VSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        lines = [f"v^{k}: {c}" for k, c in enumerate(self.coeffs)]
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}

    @staticmethod
    def from_json(data: Mapping) -> "VSeries":
        return VSeries(data["order"], [XPoly.from_json(c) for c in data["coeffs"]])
