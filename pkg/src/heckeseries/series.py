"""Generating series of the symplectic Hecke operators and their
numerator/denominator polynomials over the Hecke ring.

``HeckeExpr`` models the commutative ring Z[T(p), T_1(p^2), T_2(p^2), [p]_3]
extended by p^(+-1): a formal polynomial in the four generators with
PrimeLaurent coefficients, keyed by the exponent tuple (a, b, c, d) of
T(p)^a T_1(p^2)^b T_2(p^2)^c [p]_3^d.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .algebra import PL_ONE, PL_ZERO, PrimeLaurent, PrimeRat, VSeries, XPoly
from .errors import (
    FunctionalEquationViolated,
    NonUniqueSolution,
    NonVanishingTail,
    NoSolution,
    NotSymmetric,
)
from .spherical import omega_hl, sp_image_pbracket, sp_image_Ti, sp_image_Tp
from .symmetric import to_msym, x0_weight

#: default truncation order for the genus-3 series work
DEFAULT_ORDER = 12

GENERATOR_NAMES = ("T(p)", "T1(p^2)", "T2(p^2)", "[p]3")


class HeckeExpr:
    """Polynomial in the four commuting Sp_3 generators over Laurent-in-p."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for g, c in terms.items():
                g = tuple(int(v) for v in g)
                if len(g) != 4 or any(v < 0 for v in g):
                    raise ValueError(f"bad generator exponent tuple {g}")
                c = PrimeLaurent._coerce(c)
                if not c.is_zero():
                    clean[g] = c
        self.terms = clean

    @staticmethod
    def generator(index: int) -> "HeckeExpr":
        g = [0, 0, 0, 0]
        g[index] = 1
        return HeckeExpr({tuple(g): 1})

    @staticmethod
    def const(value) -> "HeckeExpr":
        return HeckeExpr({(0, 0, 0, 0): value})

    @staticmethod
    def _coerce(other):
        if isinstance(other, HeckeExpr):
            return other
        if isinstance(other, (int, PrimeLaurent)):
            return HeckeExpr.const(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        res = dict(self.terms)
        for g, c in other.terms.items():
            s = res.get(g)
            s = c if s is None else s + c
            if s.terms:
                res[g] = s
            else:
                res.pop(g, None)
        return HeckeExpr(res)

    __radd__ = __add__

    def __neg__(self):
        return HeckeExpr({g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, PrimeLaurent)):
            other = HeckeExpr.const(other)
        elif not isinstance(other, HeckeExpr):
            return NotImplemented
        res = {}
        for g1, c1 in self.terms.items():
            for g2, c2 in other.terms.items():
                g = tuple(a + b for a, b in zip(g1, g2))
                c = c1 * c2
                s = res.get(g)
                s = c if s is None else s + c
                if s.terms:
                    res[g] = s
                else:
                    res.pop(g, None)
        return HeckeExpr(res)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = HeckeExpr.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for g, c in self.sorted_terms():
            mono = "*".join(
                f"{GENERATOR_NAMES[i]}^{k}" if k > 1 else GENERATOR_NAMES[i]
                for i, k in enumerate(g)
                if k
            )
            cs = repr(c)
            if " " in cs:
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "terms": [{"g": list(g), "c": c.to_json()} for g, c in self.sorted_terms()]
        }

    @staticmethod
    def from_json(data) -> "HeckeExpr":
        return HeckeExpr(
            {tuple(t["g"]): PrimeLaurent.from_json(t["c"]) for t in data["terms"]}
        )


T_P = HeckeExpr.generator(0)
T1_P2 = HeckeExpr.generator(1)
T2_P2 = HeckeExpr.generator(2)
P_BRACKET = HeckeExpr.generator(3)


@lru_cache(maxsize=None)
def _generator_image_power(index: int, k: int) -> XPoly:
    if k == 0:
        return XPoly.constant(4, 1)
    base = [sp_image_Tp(3), sp_image_Ti(1, 3), sp_image_Ti(2, 3), sp_image_pbracket(3)][
        index
    ]
    return _generator_image_power(index, k - 1) * base


def hecke_image(e: HeckeExpr, n: int = 3) -> XPoly:
    """Ring-homomorphism extension of the spherical map to generator polynomials."""
    if n != 3:
        raise ValueError("generator images are wired for n = 3 only")
    acc = XPoly(4)
    for g, c in e.terms.items():
        term = XPoly.constant(4, c)
        for index, k in enumerate(g):
            if k:
                term = term * _generator_image_power(index, k)
        acc = acc + term
    return acc


# -- series ----------------------------------------------------------


def _ascending_chains(n: int, bound: int):
    """All 0 <= d1 <= ... <= dn <= bound."""
    def rec(k, lo):
        if k == 0:
            yield ()
            return
        for first in range(lo, bound + 1):
            for rest in rec(k - 1, first):
                yield (first,) + rest
    return rec(n, 0)


@lru_cache(maxsize=None)
def r_series(n: int, N: int) -> VSeries:
    """Truncated generating series of the T(p^delta) images.

    Coefficient of v^delta is the sum over ascending exponent chains
    d1 <= ... <= dn <= delta of p^(n*d1 + (n-1)*d2 + ... + dn) times
    omega(t(p^d)) times x0^delta.
    """
    if not 1 <= n <= 3:
        raise ValueError("genus 1..3 only")
    nv = n + 1
    coeffs = []
    for delta in range(N + 1):
        acc = XPoly(nv)
        for chain in _ascending_chains(n, delta):
            weight = sum((n - i) * d for i, d in enumerate(chain))
            lam = tuple(sorted(chain, reverse=True))
            acc = acc + omega_hl(lam, n) * PrimeLaurent.p_power(weight)
        x0d = XPoly.monomial(nv, (delta,) + (0,) * n)
        coeffs.append(acc * x0d)
    return VSeries(N, coeffs)


@lru_cache(maxsize=None)
def q_poly(n: int) -> VSeries:
    """The degree-2^n denominator: product of (1 - x0 x_S v) over subsets S of {1..n}."""
    if not 1 <= n <= 3:
        raise ValueError("genus 1..3 only")
    nv = n + 1
    order = 2**n
    acc = VSeries.one(order, nv)
    one = VSeries.one(order, nv)
    for size in range(n + 1):
        for subset in combinations(range(1, n + 1), size):
            exps = [0] * nv
            exps[0] = 1
            for i in subset:
                exps[i] = 1
            factor = one - VSeries.from_dict(
                order, nv, {1: XPoly.monomial(nv, tuple(exps))}
            )
            acc = acc * factor
    return acc


@lru_cache(maxsize=None)
def p_numerator(n: int, N: int) -> VSeries:
    """Numerator polynomial: r_series * q_poly with the vanishing tail checked.

    Asserts that coefficients v^(2^n - 1) .. v^N of the product vanish and
    returns the degree-(2^n - 2) polynomial part.
    """
    if N < 2**n + 4:
        raise ValueError(f"need N >= {2**n + 4} for a meaningful vanishing margin")
    prod = r_series(n, N) * _pad(q_poly(n), N)
    for k in range(2**n - 1, N + 1):
        if prod.coeffs[k].terms:
            raise NonVanishingTail(f"coefficient of v^{k} is nonzero: {prod.coeffs[k]}")
    return prod.truncate(2**n - 2)


def _pad(s: VSeries, order: int) -> VSeries:
    if order <= s.order:
        return s.truncate(order)
    nv = s.nvars
    return VSeries(order, s.coeffs + [XPoly(nv)] * (order - s.order))


def p3_closed_form(B: int, N: int) -> VSeries:
    """Independent closed form of the genus-3 numerator.

    The kernel sum over omega(t(1, p^a, p^b)) weighted by p^(2a+b) (x0 v)^b,
    multiplied by the six linear factors (1 - x0 x_S v) with |S| in {1, 2}.
    """
    if B < N:
        raise ValueError("sum bound must cover the truncation order")
    nv = 4
    kernel_coeffs = []
    for b in range(N + 1):
        acc = XPoly(nv)
        if b <= B:
            for a in range(b + 1):
                acc = acc + omega_hl((b, a, 0), 3) * PrimeLaurent.p_power(2 * a + b)
        kernel_coeffs.append(acc * XPoly.monomial(nv, (b, 0, 0, 0)))
    acc = VSeries(N, kernel_coeffs)
    one = VSeries.one(N, nv)
    for size in (1, 2):
        for subset in combinations(range(1, 4), size):
            exps = [1, 0, 0, 0]
            for i in subset:
                exps[i] = 1
            acc = acc * (
                one - VSeries.from_dict(N, nv, {1: XPoly.monomial(nv, tuple(exps))})
            )
    return acc


# -- indeterminate-coefficient solve ---------------------------------


def generator_monomials(x0_weight: int) -> list[tuple]:
    """Generator monomials (a,b,c,d) whose image has the given x0-weight.

    T(p) contributes x0-weight 1, the three quadratic generators weight 2;
    total generator degree is capped at the weight (matching the ansatz,
    which includes T(p)^w at weight w).  Ordered by degree then tuple.
    """
    out = []
    for m in range(x0_weight // 2 + 1):
        a = x0_weight - 2 * m
        for b in range(m + 1):
            for c in range(m - b + 1):
                d = m - b - c
                if a + b + c + d <= x0_weight:
                    out.append((a, b, c, d))
    out.sort(key=lambda g: (sum(g), g))
    return out


def _clear_row(row: list[PrimeLaurent]) -> list[PrimeLaurent]:
    """Scale a row by a power of p so every entry is an ordinary polynomial."""
    shift = min((c.min_exp() for c in row if not c.is_zero()), default=0)
    if shift >= 0:
        return row
    factor = PrimeLaurent.p_power(-shift)
    return [c * factor for c in row]


def _solve_fraction_free(rows: list[list[PrimeLaurent]], ncols: int):
    """Solve A x = b given augmented rows over PrimeLaurent.

    Bareiss fraction-free elimination to echelon form, then back-substitution
    over the fraction field.  Raises NoSolution / NonUniqueSolution.
    """
    rows = [_clear_row(list(r)) for r in rows]
    m = len(rows)
    pivots = []
    prev = PL_ONE
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, m) if not rows[i][col].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][col]
        for i in range(r + 1, m):
            if all(rows[i][j].is_zero() for j in range(col, ncols + 1)):
                continue
            factor = rows[i][col]
            rows[i] = [
                (lead * rows[i][j] - factor * rows[r][j]).div_exact(prev)
                for j in range(ncols + 1)
            ]
        prev = lead
        pivots.append((r, col))
        r += 1
    for i in range(r, m):
        if not rows[i][ncols].is_zero():
            raise NoSolution("inconsistent linear system")
    if len(pivots) < ncols:
        raise NonUniqueSolution(f"rank {len(pivots)} < {ncols} unknowns")
    sol = [None] * ncols
    for r, col in reversed(pivots):
        acc = PrimeRat(rows[r][ncols])
        for j in range(col + 1, ncols):
            acc = acc - sol[j] * rows[r][j]
        sol[col] = acc / PrimeRat(rows[r][col])
    return sol


def express_in_generators(target: XPoly, x0_wt: int) -> HeckeExpr:
    """Write a symmetric x0-homogeneous polynomial as a generator polynomial.

    Builds the linear system in the monomial symmetric basis over all
    generator monomials of matching x0-weight, solves it fraction-free,
    certifies the solution Laurent in p and verifies it by substitution.
    """
    if target.terms and x0_weight(target) != x0_wt:
        raise NotSymmetric(f"target is not x0-homogeneous of weight {x0_wt}")
    monomials = generator_monomials(x0_wt)
    images = [hecke_image(HeckeExpr({g: 1})) for g in monomials]
    decomps = [to_msym(img) for img in images]
    target_decomp = to_msym(target) if target.terms else {}
    sigs = sorted(set().union(*decomps, target_decomp))
    rows = []
    for sig in sigs:
        row = [d.get(sig, PL_ZERO) for d in decomps]
        row.append(target_decomp.get(sig, PL_ZERO))
        rows.append(row)
    sol = _solve_fraction_free(rows, len(monomials))
    coeffs = [s.to_laurent() for s in sol]
    result = HeckeExpr({g: c for g, c in zip(monomials, coeffs)})
    if hecke_image(result) != target:
        raise NoSolution("solution failed the substitution check")
    return result


# -- theorems --------------------------------------------------------


@lru_cache(maxsize=None)
def p3_in_generators(N: int = DEFAULT_ORDER) -> list[HeckeExpr]:
    """Coefficients (v^0..v^6) of the genus-3 numerator over the Hecke ring.

    Asserts the v^1 and v^5 coefficients vanish and that the leading term
    is p^15 [p]_3^3.
    """
    num = p_numerator(3, N)
    coeffs = [
        express_in_generators(num.coeffs[k], k) for k in range(num.order + 1)
    ]
    if not coeffs[1].is_zero() or not coeffs[5].is_zero():
        raise NonVanishingTail("numerator has unexpected v^1 or v^5 terms")
    expected_lead = HeckeExpr({(0, 0, 0, 3): PrimeLaurent.p_power(15)})
    if coeffs[6] != expected_lead:
        raise FunctionalEquationViolated(
            f"leading term {coeffs[6]} != p^15 [p]_3^3"
        )
    return coeffs


@dataclass(frozen=True)
class QCoefficients:
    """The nine v-coefficients t_0..t_8 of the denominator over the Hecke ring."""

    t: tuple

    def __post_init__(self):
        if len(self.t) != 9 or self.t[0] != HeckeExpr.const(1):
            raise ValueError("need t_0..t_8 with t_0 = 1")

    def to_json(self) -> list:
        return [e.to_json() for e in self.t]

    @staticmethod
    def from_json(data) -> "QCoefficients":
        return QCoefficients(tuple(HeckeExpr.from_json(e) for e in data))


@lru_cache(maxsize=None)
def q3_in_generators() -> QCoefficients:
    """Reconstruct the denominator coefficients t_0..t_8 over the Hecke ring.

    t_2..t_4 come from the indeterminate-coefficient solve against the
    expanded denominator; t_5..t_7 from the functional equation
    t_{8-i} = (p^6 [p]_3)^(4-i) t_i; every t_j is verified against the
    corresponding expanded coefficient.
    """
    q = q_poly(3)
    t = [HeckeExpr.const(1), -T_P]
    for k in (2, 3, 4):
        t.append(express_in_generators(q.coeffs[k], k))
    scale = P_BRACKET * PrimeLaurent.p_power(6)
    for k in (5, 6, 7):
        t.append(scale ** (k - 4) * t[8 - k])
    t.append(HeckeExpr({(0, 0, 0, 4): PrimeLaurent.p_power(24)}))
    for k in range(9):
        if hecke_image(t[k]) != q.coeffs[k]:
            raise FunctionalEquationViolated(
                f"t_{k} does not reproduce the v^{k} coefficient of the denominator"
            )
    return QCoefficients(tuple(t))


def functional_eq_check(q: QCoefficients) -> bool:
    """True iff t_{8-i} = (p^6 [p]_3)^(4-i) t_i holds as a ring identity for all i."""
    scale = P_BRACKET * PrimeLaurent.p_power(6)
    return all(q.t[8 - i] == scale ** (4 - i) * q.t[i] for i in range(5))


def specialize_nu(s: VSeries) -> VSeries:
    """Degree homomorphism: x0 -> 1, x_i -> p^i, applied coefficient-wise."""
    if s.nvars != 4:
        raise ValueError("specialization is wired for nvars = 4")
    assignment = {0: 1, 1: PrimeLaurent.p_power(1), 2: PrimeLaurent.p_power(2), 3: PrimeLaurent.p_power(3)}
    return VSeries(s.order, [c.substitute(assignment) for c in s.coeffs])
