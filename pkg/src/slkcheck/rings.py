"""Exact arithmetic for Laurent polynomials and factored rational functions.

Everything here is exact: coefficients are Python ints or ``fractions.Fraction``,
never floats.  A monomial in the variables t1..tn, q is an exponent vector,
a plain tuple of ints of length n+1 with the q exponent stored last.  A
LaurentPoly is a sparse dict from exponent vectors to coefficients.  A RatFunc
keeps its denominator in factored form as a multiset of monomials w, each
standing for the factor (1 - w); denominators are never expanded.  Equality of
RatFuncs is decided by cross-multiplication, and common (1 - w) factors are
cancelled by exact polynomial division whenever the division is exact.  No
general multivariate gcd is attempted.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

Coeff = Union[int, Fraction]
ExpVec = Tuple[int, ...]


class InexactDivision(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class VanishingDenominator(ZeroDivisionError):
    """Raised when a substitution sends a denominator factor to zero."""


def _normalize_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def mono_mul(a: ExpVec, b: ExpVec) -> ExpVec:
    return tuple(x + y for x, y in zip(a, b))


def mono_inv(a: ExpVec) -> ExpVec:
    return tuple(-x for x in a)


def mono_identity(width: int) -> ExpVec:
    return (0,) * width


def mono_is_identity(a: ExpVec) -> bool:
    return all(x == 0 for x in a)


def _mono_positive(a: ExpVec) -> bool:
    """True if the first nonzero exponent is positive (canonical direction)."""
    for x in a:
        if x != 0:
            return x > 0
    return False


class LaurentPoly:
    """Sparse Laurent polynomial in t1..tn, q with exact coefficients.

    The number of t variables is ``width - 1``; exponent vectors store the q
    exponent in the last slot.  Instances are treated as immutable.
    """

    __slots__ = ("terms", "width")

    def __init__(self, width: int, terms: Mapping[ExpVec, Coeff] | None = None):
        self.width = width
        clean: Dict[ExpVec, Coeff] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != width:
                    raise ValueError("exponent vector width mismatch")
                c = _normalize_coeff(c)
                if c:
                    clean[e] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(width: int) -> "LaurentPoly":
        return LaurentPoly(width)

    @staticmethod
    def one(width: int) -> "LaurentPoly":
        return LaurentPoly(width, {mono_identity(width): 1})

    @staticmethod
    def monomial(exps: ExpVec, coeff: Coeff = 1) -> "LaurentPoly":
        return LaurentPoly(len(exps), {tuple(exps): coeff})

    @staticmethod
    def const(width: int, c: Coeff) -> "LaurentPoly":
        return LaurentPoly(width, {mono_identity(width): c})

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_single_term(self) -> bool:
        return len(self.terms) == 1

    def single_term(self) -> Tuple[ExpVec, Coeff]:
        ((e, c),) = self.terms.items()
        return e, c

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "LaurentPoly") -> None:
        if self.width != other.width:
            raise ValueError("mixed variable contexts")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentPoly.zero(self.width)
        res.terms = out
        return res

    def __neg__(self) -> "LaurentPoly":
        res = LaurentPoly.zero(self.width)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: Union["LaurentPoly", Coeff]) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly.zero(self.width)
            res = LaurentPoly.zero(self.width)
            res.terms = {e: _normalize_coeff(c * other) for e, c in self.terms.items()}
            return res
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: Dict[ExpVec, Coeff] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    del out[key]
        res = LaurentPoly.zero(self.width)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_single_term():
                raise ValueError("negative powers need a single-term base")
            e, c = self.single_term()
            if isinstance(c, int) and abs(c) != 1:
                c = Fraction(1, c)
            else:
                c = 1 / Fraction(c)
            return LaurentPoly.monomial(tuple(n * x for x in e), _normalize_coeff(c ** (-n)))
        out = LaurentPoly.one(self.width)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def mul_monomial(self, exps: ExpVec, coeff: Coeff = 1) -> "LaurentPoly":
        res = LaurentPoly.zero(self.width)
        res.terms = {
            tuple(x + y for x, y in zip(e, exps)): _normalize_coeff(c * coeff)
            for e, c in self.terms.items()
        }
        return res

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.width == other.width and self.terms == other.terms

    def __hash__(self):
        return hash((self.width, tuple(sorted(self.terms.items()))))

    # -- substitution -------------------------------------------------

    def subst(self, images: Mapping[int, Tuple[Coeff, ExpVec]]) -> "LaurentPoly":
        """Substitute variables by scaled monomials.

        ``images`` maps a variable index to (coefficient, exponent vector); a
        variable not listed maps to itself.  The result stays in the same
        variable context.
        """
        width = self.width
        out: Dict[ExpVec, Coeff] = {}
        for e, c in self.terms.items():
            coeff: Coeff = c
            acc = [0] * width
            for i, ei in enumerate(e):
                if ei == 0:
                    continue
                if i in images:
                    ic, iv = images[i]
                    if ic != 1:
                        coeff = coeff * (Fraction(ic) ** ei)
                    for j, vj in enumerate(iv):
                        acc[j] += vj * ei
                else:
                    acc[i] += ei
            key = tuple(acc)
            s = out.get(key, 0) + coeff
            if s:
                out[key] = _normalize_coeff(s)
            else:
                out.pop(key, None)
        res = LaurentPoly.zero(width)
        res.terms = out
        return res

    def bar_q(self) -> "LaurentPoly":
        """The image under q -> q^-1 (t variables untouched)."""
        res = LaurentPoly.zero(self.width)
        res.terms = {e[:-1] + (-e[-1],): c for e, c in self.terms.items()}
        return res

    # -- rendering ----------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        names = ["t%d" % (i + 1) for i in range(self.width - 1)] + ["q"]
        order = [self.width - 1] + list(range(self.width - 1))  # q printed first
        parts = []
        for e in sorted(self.terms, key=lambda v: (v[-1],) + v[:-1], reverse=True):
            c = self.terms[e]
            factors = []
            for i in order:
                if e[i] == 1:
                    factors.append(names[i])
                elif e[i]:
                    factors.append("%s^%d" % (names[i], e[i]))
            if not factors:
                body = str(abs(c) if isinstance(c, int) else abs(c))
            else:
                mag = abs(c)
                body = "*".join(factors) if mag == 1 else "%s*%s" % (mag, "*".join(factors))
            sign = "-" if (c < 0) else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return "LaurentPoly(%s)" % self.render()


def one_minus(w: ExpVec) -> LaurentPoly:
    """The binomial 1 - w for an exponent vector w."""
    width = len(w)
    if mono_is_identity(w):
        return LaurentPoly.zero(width)
    return LaurentPoly(width, {mono_identity(width): 1, tuple(w): -1})


def quantum_integer(d: int, n_t: int = 0) -> LaurentPoly:
    """The balanced q-integer [d] = q^(d-1) + q^(d-3) + ... + q^(1-d).

    [0] = 0 and [-d] = -[d].  The result lives in a context with ``n_t``
    t variables (all exponents zero) so it can multiply kernel entries.
    """
    width = n_t + 1
    if d == 0:
        return LaurentPoly.zero(width)
    sign = 1
    if d < 0:
        sign, d = -1, -d
    terms: Dict[ExpVec, Coeff] = {}
    for j in range(d):
        e = (0,) * n_t + (d - 1 - 2 * j,)
        terms[e] = sign
    return LaurentPoly(width, terms)


# -- exact division ---------------------------------------------------


def _min_exponents(p: LaurentPoly) -> ExpVec:
    mins = None
    for e in p.terms:
        if mins is None:
            mins = list(e)
        else:
            for i, x in enumerate(e):
                if x < mins[i]:
                    mins[i] = x
    return tuple(mins)  # type: ignore[arg-type]


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact quotient num / den; raises InexactDivision if it does not divide.

    Works in the Laurent ring: both operands are shifted to ordinary
    polynomials first, then divided with a lex term order.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly.zero(num.width)
    num._check(den)
    width = num.width
    sn, sd = _min_exponents(num), _min_exponents(den)
    shift = tuple(a - b for a, b in zip(sn, sd))
    n_terms = {tuple(x - y for x, y in zip(e, sn)): c for e, c in num.terms.items()}
    d_terms = {tuple(x - y for x, y in zip(e, sd)): c for e, c in den.terms.items()}
    lead = max(d_terms)
    lead_c = d_terms[lead]
    quot: Dict[ExpVec, Coeff] = {}
    rem = dict(n_terms)
    while rem:
        lt = max(rem)
        qe = tuple(x - y for x, y in zip(lt, lead))
        if any(x < 0 for x in qe):
            raise InexactDivision("remainder is nonzero")
        a, b = rem[lt], lead_c
        if isinstance(a, int) and isinstance(b, int):
            qc: Coeff = a // b if a % b == 0 else Fraction(a, b)
        else:
            qc = Fraction(a) / b
        for de, dc in d_terms.items():
            key = tuple(x + y for x, y in zip(qe, de))
            s = rem.get(key, 0) - qc * dc
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
        quot[qe] = _normalize_coeff(qc)
    res = LaurentPoly.zero(width)
    res.terms = {tuple(x + y for x, y in zip(e, shift)): c for e, c in quot.items()}
    return res


def divides(num: LaurentPoly, den: LaurentPoly) -> bool:
    try:
        exact_div(num, den)
        return True
    except InexactDivision:
        return False


# -- factored rational functions --------------------------------------


class RatFunc:
    """num / prod (1 - w)^m with the denominator kept as a factor multiset.

    The denominator dict maps each monomial w (canonical direction: first
    nonzero exponent positive) to its multiplicity.  Units produced by
    flipping a factor's direction are absorbed into the numerator, so no
    separate unit factor is stored.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: Mapping[ExpVec, int] | None = None,
                 _normalized: bool = False):
        self.num = num
        d: Dict[ExpVec, int] = {}
        if den:
            for w, m in den.items():
                if m < 0:
                    raise ValueError("negative factor multiplicity")
                if m:
                    d[tuple(w)] = d.get(tuple(w), 0) + m
        self.den = d
        if not _normalized:
            self._normalize()

    # -- normalization ------------------------------------------------

    def _normalize(self) -> None:
        width = self.num.width
        flips: Dict[ExpVec, int] = {}
        for w in list(self.den):
            if mono_is_identity(w):
                raise ZeroDivisionError("denominator factor (1 - 1) is zero")
            if not _mono_positive(w):
                flips[w] = self.den.pop(w)
        for w, m in flips.items():
            wi = mono_inv(w)
            self.den[wi] = self.den.get(wi, 0) + m
            # (1 - w) = -w * (1 - w^-1): each flipped copy scales num by -w^-1
            unit = LaurentPoly.monomial(tuple(x * m for x in wi), (-1) ** m)
            self.num = self.num * unit
        if self.num.is_zero():
            self.den = {}
            return
        # cancel factors that divide the numerator exactly
        for w in sorted(self.den):
            m = self.den[w]
            factor = one_minus(w)
            while m > 0:
                try:
                    self.num = exact_div(self.num, factor)
                except InexactDivision:
                    break
                m -= 1
            if m:
                self.den[w] = m
            else:
                del self.den[w]

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_poly(p: LaurentPoly) -> "RatFunc":
        return RatFunc(p, None, _normalized=True)

    @staticmethod
    def zero(width: int) -> "RatFunc":
        return RatFunc(LaurentPoly.zero(width), None, _normalized=True)

    @staticmethod
    def one(width: int) -> "RatFunc":
        return RatFunc(LaurentPoly.one(width), None, _normalized=True)

    # -- helpers ------------------------------------------------------

    @property
    def width(self) -> int:
        return self.num.width

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def den_poly(self) -> LaurentPoly:
        """The expanded denominator (used for cross-multiplication only)."""
        out = LaurentPoly.one(self.width)
        for w, m in sorted(self.den.items()):
            f = one_minus(w)
            for _ in range(m):
                out = out * f
        return out

    # -- arithmetic ---------------------------------------------------

    def _cofactor(self, other_den: Mapping[ExpVec, int]) -> LaurentPoly:
        """Expanded product of other_den factors missing from self.den."""
        out = LaurentPoly.one(self.width)
        for w, m in sorted(other_den.items()):
            extra = m - self.den.get(w, 0)
            if extra > 0:
                f = one_minus(w)
                for _ in range(extra):
                    out = out * f
        return out

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if not isinstance(other, RatFunc):
            return NotImplemented
        lcm: Dict[ExpVec, int] = dict(self.den)
        for w, m in other.den.items():
            if lcm.get(w, 0) < m:
                lcm[w] = m
        num = self.num * self._cofactor(other.den) + other.num * other._cofactor(self.den)
        return RatFunc(num, lcm)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, _normalized=True)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other: Union["RatFunc", LaurentPoly, Coeff]) -> "RatFunc":
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.num * other, self.den, _normalized=True) if other else RatFunc.zero(self.width)
        if isinstance(other, LaurentPoly):
            return RatFunc(self.num * other, self.den)
        den: Dict[ExpVec, int] = dict(self.den)
        for w, m in other.den.items():
            den[w] = den.get(w, 0) + m
        return RatFunc(self.num * other.num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.num.is_single_term():
            e, c = self.num.single_term()
            inv_c = Fraction(1, 1) / c if not (isinstance(c, int) and abs(c) == 1) else (1 if c == 1 else -1)
            num = self.den_poly().mul_monomial(mono_inv(e), inv_c)
            return RatFunc(num, None)
        raise InexactDivision("inverse requires a single-term numerator")

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if not isinstance(other, RatFunc):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by a zero rational function")
        if other.num.is_single_term():
            return self * other.inverse()
        quot = exact_div(self.num * other.den_poly(), other.num)  # may raise InexactDivision
        return RatFunc(quot, self.den)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            other = RatFunc.from_poly(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.width != other.width:
            return False
        # clear the shared factor multiset, then cross-multiply: each
        # numerator picks up the factors the other side still carries
        left = self.num * self._cofactor(other.den)
        right = other.num * other._cofactor(self.den)
        return left == right

    def __hash__(self):  # pragma: no cover - RatFuncs are not dict keys
        raise TypeError("RatFunc is unhashable; compare with ==")

    # -- substitution -------------------------------------------------

    def specialize(self, images: Mapping[int, Tuple[Coeff, ExpVec]]) -> "RatFunc":
        """Apply a substitution variable -> coefficient * monomial.

        Denominator factors must stay of the form (1 - monomial): a factor
        whose image collapses to (1 - c) with c != 1 is folded into the
        numerator as the scalar 1/(1 - c); an image equal to (1 - 1) raises
        VanishingDenominator naming the factor.
        """
        num = self.num.subst(images)
        den: Dict[ExpVec, int] = {}
        scale: Coeff = 1
        width = self.width
        for w, m in sorted(self.den.items()):
            coeff: Coeff = 1
            acc = [0] * width
            for i, ei in enumerate(w):
                if ei == 0:
                    continue
                if i in images:
                    ic, iv = images[i]
                    if ic != 1:
                        coeff = coeff * (Fraction(ic) ** ei)
                    for j, vj in enumerate(iv):
                        acc[j] += vj * ei
                else:
                    acc[i] += ei
            img = tuple(acc)
            if mono_is_identity(img):
                if coeff == 1:
                    raise VanishingDenominator(
                        "factor (1 - %s) vanishes under substitution"
                        % LaurentPoly.monomial(w).render())
                scale = scale * (1 / (1 - Fraction(coeff))) ** m
            elif coeff == 1:
                den[img] = den.get(img, 0) + m
            else:
                raise ValueError(
                    "substitution gives a factor (1 - c*w) with c != 1; unsupported")
        return RatFunc(num * scale if scale != 1 else num, den)

    # -- rendering ----------------------------------------------------

    def render(self) -> str:
        num = self.num.render()
        if not self.den:
            return num
        parts = []
        for w in sorted(self.den):
            m = self.den[w]
            base = "(1 - %s)" % LaurentPoly.monomial(w).render()
            parts.append(base if m == 1 else "%s^%d" % (base, m))
        return "(%s) / (%s)" % (num, "*".join(parts))

    def __repr__(self):
        return "RatFunc(%s)" % self.render()


def ratfunc_add(x: RatFunc, y: RatFunc) -> RatFunc:
    return x + y


def ratfunc_sub(x: RatFunc, y: RatFunc) -> RatFunc:
    return x - y


def ratfunc_mul(x: RatFunc, y: RatFunc) -> RatFunc:
    return x * y


def var_index(name: str, width: int) -> int:
    """Resolve 'q' or 't<m>' to an exponent-vector slot."""
    if name == "q":
        return width - 1
    if name.startswith("t"):
        m = int(name[1:])
        if 1 <= m <= width - 1:
            return m - 1
    raise KeyError("unknown variable %r" % name)


def specialize(x: Union[LaurentPoly, RatFunc], assignments: Mapping[str, object]) -> Union[LaurentPoly, RatFunc]:
    """Substitute named variables by rationals or monomials.

    ``assignments`` maps 'q' or 't<m>' to an int, Fraction, or exponent
    vector (tuple).  Unlisted variables are left alone.
    """
    width = x.width
    images: Dict[int, Tuple[Coeff, ExpVec]] = {}
    for name, val in assignments.items():
        i = var_index(name, width)
        if isinstance(val, tuple):
            images[i] = (1, val)
        elif isinstance(val, (int, Fraction)):
            images[i] = (val, mono_identity(width))
        else:
            raise TypeError("assignment must be a rational or an exponent vector")
    if isinstance(x, LaurentPoly):
        return x.subst(images)
    return x.specialize(images)
