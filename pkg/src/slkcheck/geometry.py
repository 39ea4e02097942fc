"""Fixed-point localization model of the kernel calculus.

Torus-fixed points of the k-step flag variety of content a are the value
tuples of block combinatorics: position m carries step f(m).  Characters live
in the Laurent ring in t1..tn, q (q is the fiber-dilation variable).  The
correspondence for node i refines the flag by one extra step of size one; its
fixed points are value tuples for the refined content, and each one shadows
to a pair of flag fixed points differing in a single position.

Kernels are sparse matrices over pairs of fixed points whose entries are kept
in factored form: an integer sign, a Laurent monomial (the line-bundle value
together with the q-shift), and a multiset of binomial factors (1 - w) coming
from the ambient-minus-correspondence normal directions.  Convolution divides
by the diagonal Euler factors and cancels factor multisets before anything is
expanded, which is what keeps the sweep exact and fast.

A Conventions tuple pins every sign the construction does not: the q-shift
sign, the dilation exponent on cotangent fibers, the tangent orientation, and
per-kernel sign rules (-1)^(alpha*a_i + beta*a_{i+1} + gamma).  The relation
suite searches for one tuple that makes every identity hold and then freezes
it; see kverify.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

from .blocks import Composition, ValueTuple, raise_at, tuples_in_block
from .rings import ExpVec, LaurentPoly, RatFunc, one_minus

SignRule = Tuple[int, int, int]


@dataclass(frozen=True)
class Conventions:
    """Global convention flags for the kernel calculus.

    shift_sign: the grading shift {m} contributes q^(-shift_sign*m).
    dilation: cotangent fibers carry q^dilation times the inverse tangent char.
    orientation: +1 puts the higher step in the numerator of tangent chars.
    e_sign/f_sign: (alpha, beta, gamma) scaling the E/F kernel at (a, i) by
    (-1)^(alpha*a_i + beta*a_{i+1} + gamma).
    """

    shift_sign: int = 1
    dilation: int = 1
    orientation: int = 1
    e_sign: SignRule = (0, 0, 0)
    f_sign: SignRule = (0, 0, 0)

    def rule_sign(self, rule: SignRule, a: Composition, i: int) -> int:
        alpha, beta, gamma = rule
        return -1 if (alpha * a[i - 1] + beta * a[i] + gamma) % 2 else 1


def flag_fixed_points(a: Composition) -> List[ValueTuple]:
    """Torus-fixed points of the flag variety of content a, as step tuples."""
    return tuples_in_block(a)


def _ratio(num_pos: int, den_pos: int, width: int) -> ExpVec:
    e = [0] * width
    e[num_pos] += 1
    e[den_pos] -= 1
    return tuple(e)


def _neg(v: ExpVec) -> ExpVec:
    return tuple(-x for x in v)


def _with_q(v: ExpVec, dq: int) -> ExpVec:
    return v[:-1] + (v[-1] + dq,)


def tangent_character(f: ValueTuple, conv: Conventions) -> List[ExpVec]:
    """Tangent weights of the flag variety at f, one per step-separated pair."""
    n = len(f)
    width = n + 1
    out = []
    for lo in range(n):
        for hi in range(n):
            if f[lo] < f[hi]:
                if conv.orientation > 0:
                    out.append(_ratio(hi, lo, width))
                else:
                    out.append(_ratio(lo, hi, width))
    return out


def ambient_characters(f: ValueTuple, conv: Conventions) -> List[ExpVec]:
    """Tangent weights of the cotangent bundle T*P at f: each flag weight w
    together with q^dilation * w^(-1)."""
    tang = tangent_character(f, conv)
    return tang + [_with_q(_neg(w), conv.dilation) for w in tang]


def euler_factors(f: ValueTuple, conv: Conventions) -> Counter:
    """Factor multiset of the cotangent Euler class at f.

    Keys v stand for binomials (1 - x^v); the product over the multiset is
    prod over tangent chars w of (1 - w^(-1)) (1 - q^(-dilation) w).
    """
    out: Counter = Counter()
    for w in tangent_character(f, conv):
        out[_neg(w)] += 1
        out[_with_q(w, -conv.dilation)] += 1
    return out


def euler_poly(f: ValueTuple, conv: Conventions) -> LaurentPoly:
    width = len(f) + 1
    out = LaurentPoly.one(width)
    for v, mult in sorted(euler_factors(f, conv).items()):
        b = one_minus(v)
        for _ in range(mult):
            out = out * b
    return out


def cotangent_euler(f: ValueTuple, conv: Conventions) -> RatFunc:
    return RatFunc.from_poly(euler_poly(f, conv))


# -- correspondence ----------------------------------------------------


def refined_content(a: Composition, i: int) -> Optional[Composition]:
    """Step sizes of the once-refined flag: a with part i+1 split as 1 + rest."""
    if raise_at(a, i) is None:
        return None
    return a[:i] + (1, a[i] - 1) + a[i + 1:]


def corr_fixed_points(a: Composition, i: int) -> List[ValueTuple]:
    """Fixed points of the node-i correspondence, as refined step tuples."""
    b = refined_content(a, i)
    if b is None:
        return []
    return tuples_in_block(b)


def split_position(h: ValueTuple, i: int) -> int:
    """The unique position carrying the singleton step i+1 (0-based)."""
    hits = [m for m, v in enumerate(h) if v == i + 1]
    if len(hits) != 1:
        raise ValueError("not a valid correspondence point")
    return hits[0]


def shadows(h: ValueTuple, i: int) -> Tuple[ValueTuple, ValueTuple]:
    """The two coarse fixed points under a correspondence point.

    First the content-a side (the singleton merges into the step above),
    then the content-raise(a,i) side (it merges into step i).
    """
    f1 = tuple(v if v <= i else (i + 1 if v <= i + 2 else v - 1) for v in h)
    f2 = tuple(v if v <= i - 1 else (i if v <= i + 1 else v - 1) for v in h)
    return f1, f2


def corr_tangent_character(a: Composition, i: int, h: ValueTuple,
                           conv: Conventions) -> List[ExpVec]:
    """Tangent weights of the correspondence at a fixed point h.

    Base part: tangent character of the refined flag variety.  Fiber part:
    one q^dilation-twisted weight per matrix entry allowed by the incidence
    conditions, i.e. per pair of positions with steps s < s' excluding the
    pairs (s, s') = (i, i+1) and (i+1, i+2), whose entries are forced to
    vanish by the two displayed inclusions.
    """
    n = len(h)
    width = n + 1
    out = []
    for lo in range(n):
        for hi in range(n):
            if h[lo] < h[hi]:
                if conv.orientation > 0:
                    out.append(_ratio(hi, lo, width))
                else:
                    out.append(_ratio(lo, hi, width))
    for tgt in range(n):
        for src in range(n):
            s, sp = h[tgt], h[src]
            if s < sp and (s, sp) not in ((i, i + 1), (i + 1, i + 2)):
                if conv.orientation > 0:
                    w = _ratio(tgt, src, width)
                else:
                    w = _ratio(src, tgt, width)
                out.append(_with_q(w, conv.dilation))
    return out


# -- line bundles ------------------------------------------------------


def det_refined(h: ValueTuple, i: int, space: Union[int, str]) -> ExpVec:
    """Exponent vector of det of a flag space evaluated at a refined point.

    space j (int) is the shared coarse space V_j, with V_i meaning the larger
    middle term; space "p" is the smaller middle term.  V_0 is zero, det = 1.
    """
    n = len(h)
    if space == "p":
        bound = i
    elif isinstance(space, int):
        bound = space if space <= i - 1 else space + 1
    else:
        raise ValueError("unknown space %r" % (space,))
    e = [0] * (n + 1)
    for m, v in enumerate(h):
        if v <= bound:
            e[m] = 1
    return tuple(e)


def det_coarse(f: ValueTuple, j: int) -> ExpVec:
    """Exponent vector of det(V_j) at an ordinary flag fixed point."""
    n = len(f)
    e = [0] * (n + 1)
    for m, v in enumerate(f):
        if v <= j:
            e[m] = 1
    return tuple(e)


def line_bundle_value(h: ValueTuple, i: int, spaces: Dict[Union[int, str], int],
                      shift: int, conv: Conventions) -> ExpVec:
    """Evaluate a formal product of det powers with a q-shift at h."""
    n = len(h)
    acc = [0] * (n + 1)
    for space, exp in spaces.items():
        if not exp:
            continue
        v = det_refined(h, i, space)
        for slot, x in enumerate(v):
            acc[slot] += x * exp
    acc[n] += -conv.shift_sign * shift
    return tuple(acc)


def line_expr(kind: str, variant: str, a: Composition, i: int) -> Tuple[Dict, int]:
    """The det-power dictionary and shift for each kernel flavor.

    The F exponent on det(V_i/V_i') is read at the raised content, which is
    the unique reading that keeps the commutator identities exact.
    """
    ai, aip1 = a[i - 1], a[i]
    if kind == "E":
        shift = ai
        if variant in ("CK0", "CK1"):
            spaces = {"p": 1, i - 1: -1, i + 1: -1, i: 1}
        else:
            spaces = {i + 1: -1, i: aip1, "p": 1 - aip1}
    elif kind == "F":
        shift = aip1 - 1
        ef = aip1 - ai - 1
        if variant in ("CK0", "CK1"):
            spaces = {i: ef, "p": -ef}
        else:
            spaces = {i - 1: -1, i: -ai, "p": ai + 1}
    else:
        raise ValueError("kind must be E or F")
    if variant in ("CK1", "P1"):
        spaces = dict(spaces)
        if kind == "E":
            spaces[i] = spaces.get(i, 0) - 1
            spaces["p"] = spaces.get("p", 0) + 1
            shift += i
        else:
            spaces[i] = spaces.get(i, 0) + 1
            spaces["p"] = spaces.get("p", 0) - 1
            shift -= i
    elif variant not in ("CK0", "P0"):
        raise ValueError("unknown variant %r" % variant)
    return spaces, shift


# -- kernels -----------------------------------------------------------


@dataclass(frozen=True)
class FactoredEntry:
    """sign * x^mono * prod over the multiset of (1 - x^v)."""

    sign: int
    mono: ExpVec
    factors: Tuple[Tuple[ExpVec, int], ...]

    def factor_counter(self) -> Counter:
        return Counter(dict(self.factors))

    def to_ratfunc(self) -> RatFunc:
        width = len(self.mono)
        poly = LaurentPoly.monomial(self.mono, self.sign)
        for v, mult in self.factors:
            b = one_minus(v)
            for _ in range(mult):
                poly = poly * b
        return RatFunc.from_poly(poly)

    def scaled(self, mono: ExpVec, sign: int = 1) -> "FactoredEntry":
        return FactoredEntry(self.sign * sign,
                             tuple(x + y for x, y in zip(self.mono, mono)),
                             self.factors)


Entry = Union[FactoredEntry, RatFunc]


def entry_to_ratfunc(e: Entry) -> RatFunc:
    return e.to_ratfunc() if isinstance(e, FactoredEntry) else e


@dataclass(frozen=True)
class Kernel:
    """Sparse fixed-point matrix between two flag varieties.

    src or dst is None for the zero kernel whose target content left the
    composition set; entries are then empty.
    """

    n: int
    k: int
    src: Optional[Composition]
    dst: Optional[Composition]
    entries: Dict[Tuple[ValueTuple, ValueTuple], Entry] = field(default_factory=dict)

    @property
    def width(self) -> int:
        return self.n + 1

    def is_zero(self) -> bool:
        return all(entry_to_ratfunc(e).is_zero() for e in self.entries.values())

    def entry(self, f: ValueTuple, g: ValueTuple) -> RatFunc:
        e = self.entries.get((f, g))
        if e is None:
            return RatFunc.zero(self.width)
        return entry_to_ratfunc(e)

    def scaled(self, value: Union[int, LaurentPoly]) -> "Kernel":
        out = {}
        for key, e in self.entries.items():
            if isinstance(e, FactoredEntry) and isinstance(value, int):
                out[key] = FactoredEntry(e.sign * value, e.mono, e.factors)
            else:
                out[key] = entry_to_ratfunc(e) * value
        return Kernel(self.n, self.k, self.src, self.dst, out)


def _mono_mul(a: ExpVec, b: ExpVec) -> ExpVec:
    return tuple(x + y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def kernel(kind: str, variant: str, a: Composition, i: int,
           conv: Conventions) -> Kernel:
    """The node-i translation kernel of the given kind and flavor at block a.

    E goes from content a to raise(a, i); F the other way.  Entries sit at
    the shadow pairs of correspondence fixed points: the line-bundle value
    times the uncancelled ambient-normal factors, with the convention sign.
    """
    n, k = sum(a), len(a)
    up = raise_at(a, i)
    if up is None:
        return Kernel(n, k, a if kind == "E" else None,
                      None if kind == "E" else a, {})
    spaces, shift = line_expr(kind, variant, a, i)
    rule = conv.e_sign if kind == "E" else conv.f_sign
    sign = conv.rule_sign(rule, a, i)
    entries: Dict[Tuple[ValueTuple, ValueTuple], Entry] = {}
    for h in corr_fixed_points(a, i):
        f1, f2 = shadows(h, i)
        key = (f1, f2) if kind == "E" else (f2, f1)
        mono = line_bundle_value(h, i, spaces, shift, conv)
        ambient = Counter(ambient_characters(f1, conv))
        ambient.update(ambient_characters(f2, conv))
        for u in corr_tangent_character(a, i, h, conv):
            if ambient[u] <= 0:
                raise ArithmeticError(
                    "correspondence weight %r not among ambient weights" % (u,))
            ambient[u] -= 1
        factors = Counter(_neg(u) for u in ambient.elements())
        assert key not in entries
        entries[key] = FactoredEntry(sign, mono, tuple(sorted(factors.items())))
    if kind == "E":
        return Kernel(n, k, a, up, entries)
    return Kernel(n, k, up, a, entries)


def identity_kernel(a: Composition, conv: Conventions) -> Kernel:
    """Diagonal kernel with the Euler class at each fixed point; the unit of
    convolution."""
    n, k = sum(a), len(a)
    entries: Dict[Tuple[ValueTuple, ValueTuple], Entry] = {}
    zero = (0,) * (n + 1)
    for f in flag_fixed_points(a):
        entries[(f, f)] = FactoredEntry(
            1, zero, tuple(sorted(euler_factors(f, conv).items())))
    return Kernel(n, k, a, a, entries)


def convolve(k1: Kernel, k2: Kernel, conv: Conventions) -> Kernel:
    """Composition of kernels: sum over middle fixed points with Euler-class
    denominators.  Factor multisets are cancelled before expansion."""
    if k1.dst is None or k2.src is None:
        return Kernel(k1.n, k1.k, k1.src, k2.dst if k2.src is not None else None, {})
    if k1.dst != k2.src:
        raise ValueError("inner contents do not match")
    width = k1.width
    by_g: Dict[ValueTuple, List[Tuple[ValueTuple, Entry]]] = {}
    for (f, g), e in k1.entries.items():
        by_g.setdefault(g, []).append((f, e))
    out: Dict[Tuple[ValueTuple, ValueTuple], RatFunc] = {}
    euler_cache = {g: euler_factors(g, conv) for g in by_g}
    for (g, h), e2 in k2.entries.items():
        if g not in by_g:
            continue
        den_base = euler_cache[g]
        for f, e1 in by_g[g]:
            term = _term(e1, e2, den_base, width)
            key = (f, h)
            prev = out.get(key)
            out[key] = term if prev is None else prev + term
    cleaned = {key: val for key, val in out.items() if not val.is_zero()}
    return Kernel(k1.n, k1.k, k1.src, k2.dst, cleaned)


def _term(e1: Entry, e2: Entry, den_base: Counter, width: int) -> RatFunc:
    if isinstance(e1, FactoredEntry) and isinstance(e2, FactoredEntry):
        num = e1.factor_counter()
        num.update(dict(e2.factors))
        den = Counter(den_base)
        common = num & den
        num -= common
        den -= common
        poly = LaurentPoly.monomial(_mono_mul(e1.mono, e2.mono), e1.sign * e2.sign)
        for v, mult in sorted(num.items()):
            b = one_minus(v)
            for _ in range(mult):
                poly = poly * b
        return RatFunc(poly, dict(den))
    r = entry_to_ratfunc(e1) * entry_to_ratfunc(e2)
    return r * RatFunc(LaurentPoly.one(width), dict(den_base))


def kernel_equal(k1: Kernel, k2: Kernel) -> bool:
    """Entrywise equality as rational functions (missing entries are zero)."""
    if (k1.src, k1.dst) != (k2.src, k2.dst):
        if k1.is_zero() and k2.is_zero():
            return True
        return False
    keys = set(k1.entries) | set(k2.entries)
    return all(k1.entry(*key) == k2.entry(*key) for key in keys)


def kernel_sub(k1: Kernel, k2: Kernel) -> Kernel:
    """Entrywise difference (contents must match; zero kernels allowed)."""
    z1 = k1.src is None or k1.dst is None
    z2 = k2.src is None or k2.dst is None
    if z1 and z2:
        return Kernel(k1.n, k1.k, k1.src or k2.src, k1.dst or k2.dst, {})
    if z1:
        return k2.scaled(-1)
    if z2:
        return k1
    if (k1.src, k1.dst) != (k2.src, k2.dst):
        raise ValueError("kernel contents do not match")
    keys = set(k1.entries) | set(k2.entries)
    out = {}
    for key in keys:
        val = k1.entry(*key) - k2.entry(*key)
        if not val.is_zero():
            out[key] = val
    return Kernel(k1.n, k1.k, k1.src, k1.dst, out)


def twist_conjugate(k: Kernel, exponents: Optional[Tuple[int, ...]] = None) -> Kernel:
    """Conjugate by the det-power line bundles on source and target.

    With exponents=None each side uses its own composition's partial-sum
    differences k_j - k_{j+1}; an explicit tuple applies uniformly to both.
    The entry at (f_src, f_dst) is scaled by L(f_src) / L(f_dst), which is
    the direction that carries the CK-flavor kernels to the P flavor.
    """
    if k.src is None or k.dst is None or not k.entries:
        return k

    def side_exponents(c: Composition) -> List[int]:
        if exponents is not None:
            return list(exponents)
        ks = [sum(c[:j + 1]) for j in range(len(c))]
        return [ks[j] - ks[j + 1] for j in range(len(c) - 1)]

    width = k.width

    def lval(f: ValueTuple, exps: List[int]) -> ExpVec:
        acc = [0] * width
        for j, exp in enumerate(exps, start=1):
            if not exp:
                continue
            for slot, x in enumerate(det_coarse(f, j)):
                acc[slot] += x * exp
        return tuple(acc)

    src_exps = side_exponents(k.src)
    dst_exps = side_exponents(k.dst)
    out: Dict[Tuple[ValueTuple, ValueTuple], Entry] = {}
    for (f, g), e in k.entries.items():
        mono = tuple(x - y for x, y in zip(lval(f, src_exps), lval(g, dst_exps)))
        if isinstance(e, FactoredEntry):
            out[(f, g)] = e.scaled(mono)
        else:
            out[(f, g)] = e * LaurentPoly.monomial(mono, 1)
    return Kernel(k.n, k.k, k.src, k.dst, out)


def koszul_dual_kernel(kind: str, a: Composition, i: int,
                       conv: Conventions) -> Kernel:
    """The dual description's class: the P0 kernel rescaled by (-1)^c q^(sigma c)
    with c the cohomological shift (target-minus-source rank for E, the
    mirror count for F)."""
    base = kernel(kind, "P0", a, i, conv)
    if base.src is None or base.dst is None:
        return base
    c = (a[i] - 1) if kind == "E" else a[i - 1]
    sign = -1 if c % 2 else 1
    width = base.width
    mono = (0,) * (width - 1) + (conv.shift_sign * c,)
    out = {}
    for key, e in base.entries.items():
        if isinstance(e, FactoredEntry):
            out[key] = e.scaled(mono, sign)
        else:
            out[key] = e * LaurentPoly.monomial(mono, sign)
    return Kernel(base.n, base.k, base.src, base.dst, out)
