"""Grothendieck-group model: operators E_i, F_i on tuple bases.

A vector is a sparse dict from value tuples to exact coefficients.  E_i sends
a basis tuple to the sum over positions carrying value i+1 of the tuple with
that position changed to i; F_i is the reverse.  This is literally the action
of the Chevalley generators on (C^k)^{x n}, and every relation checked below
is an exact sparse-matrix identity, block by block.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from .blocks import (
    Composition,
    ValueTuple,
    content,
    count_simples,
    orbit_classes,
    segments,
    tuples_in_block,
    weight_space_dim,
)

K0Vector = Dict[ValueTuple, int]


def vec_add(u: K0Vector, v: K0Vector) -> K0Vector:
    out = dict(u)
    for r, c in v.items():
        s = out.get(r, 0) + c
        if s:
            out[r] = s
        else:
            out.pop(r, None)
    return out


def vec_scale(c: int, v: K0Vector) -> K0Vector:
    if not c:
        return {}
    return {r: c * x for r, x in v.items()}


def apply_e(i: int, v: K0Vector) -> K0Vector:
    """Linear extension of r -> sum over positions with value i+1 lowered to i."""
    out: K0Vector = {}
    for r, c in v.items():
        for m, val in enumerate(r):
            if val == i + 1:
                key = r[:m] + (i,) + r[m + 1:]
                s = out.get(key, 0) + c
                if s:
                    out[key] = s
                else:
                    del out[key]
    return out


def apply_f(i: int, v: K0Vector) -> K0Vector:
    """Linear extension of r -> sum over positions with value i raised to i+1."""
    out: K0Vector = {}
    for r, c in v.items():
        for m, val in enumerate(r):
            if val == i:
                key = r[:m] + (i + 1,) + r[m + 1:]
                s = out.get(key, 0) + c
                if s:
                    out[key] = s
                else:
                    del out[key]
    return out


def _basis(a: Composition) -> List[K0Vector]:
    return [{r: 1} for r in tuples_in_block(a)]


def verify_sl2_block_relation(k: int, n: int, a: Composition, i: int,
                              perturb: bool = False) -> dict:
    """Check E_iF_i + a_{i+1} Id = F_iE_i + a_i Id on the block of content a.

    With perturb=True the E application gains a spurious +1 entry, as a
    negative control: the report must then fail.
    """
    report = {"relation": "ef-block", "k": k, "n": n, "block": list(a), "node": i,
              "status": "pass"}

    def e(node: int, v: K0Vector) -> K0Vector:
        out = apply_e(node, v)
        if perturb and v:
            r0 = next(iter(sorted(v)))
            out = vec_add(out, {r0: 1})
        return out

    for v in _basis(a):
        lhs = vec_add(e(i, apply_f(i, v)), vec_scale(a[i], v))
        rhs = vec_add(apply_f(i, e(i, v)), vec_scale(a[i - 1], v))
        if lhs != rhs:
            report["status"] = "fail"
            report["counterexample"] = {"tuple": list(next(iter(v)))}
            break
    return report


def _compose(ops, v: K0Vector) -> K0Vector:
    for op, i in reversed(ops):
        v = op(i, v)
    return v


def verify_serre_and_commute(k: int, n: int, perturb: bool = False) -> dict:
    """Check the mixed commutators, far commutation, and cubic relations
    on every block of (C^k)^{x n}.

    With perturb=True one operator application gains a spurious +1 entry,
    as a negative control: the report must then fail.
    """
    from .blocks import enumerate_compositions

    checks = []
    status = "pass"
    counterexample = None

    def e(i, v):
        out = apply_e(i, v)
        if perturb and v:
            r0 = next(iter(sorted(v)))
            out = vec_add(out, {r0: 1})
        return out

    f = apply_f
    cases = []
    for i in range(1, k):
        for j in range(1, k):
            if i != j:
                cases.append(("ef-commute", [(e, i), (f, j)], [(f, j), (e, i)]))
            if abs(i - j) >= 2:
                cases.append(("ee-commute", [(e, i), (e, j)], [(e, j), (e, i)]))
                cases.append(("ff-commute", [(f, i), (f, j)], [(f, j), (f, i)]))
            if abs(i - j) == 1:
                for op, tag in ((e, "serre-e"), (f, "serre-f")):
                    cases.append((tag,
                                  [[(op, i), (op, i), (op, j)],
                                   [(op, j), (op, i), (op, i)]],
                                  [(op, i), (op, j), (op, i)]))
    for a in enumerate_compositions(n, k):
        for v in _basis(a):
            for name, left, right in cases:
                if name.startswith("serre"):
                    lhs = vec_add(_compose(left[0], v), _compose(left[1], v))
                    rhs = vec_scale(2, _compose(right, v))
                else:
                    lhs = _compose(left, v)
                    rhs = _compose(right, v)
                checks.append(name)
                if lhs != rhs and status == "pass":
                    status = "fail"
                    counterexample = {"relation": name, "block": list(a),
                                      "tuple": list(next(iter(v)))}
    report = {"relation": "serre-and-commute", "k": k, "n": n, "status": status,
              "checks": len(checks)}
    if counterexample:
        report["counterexample"] = counterexample
    return report


def quotient_to_simples(lam: Sequence[int], v: K0Vector) -> Dict[Tuple, int]:
    """Push a vector along tuple -> orbit class, summing coefficients.

    Classes are keyed by their per-segment sorted value tuples.
    """
    segs = segments(lam)
    out: Dict[Tuple, int] = {}
    for r, c in v.items():
        key = tuple(tuple(sorted(r[m] for m in seg)) for seg in segs)
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            del out[key]
    return out


def verify_quotient_intertwines(lam: Sequence[int], k: int, n: int) -> dict:
    """Check that E_i and F_i descend to the class-indexed quotient.

    Constructive well-definedness: within each orbit class, every member
    tuple must push to the same image vector under quotient(E_i(.)) and
    quotient(F_i(.)).  The induced operators then intertwine by definition.
    Also checks that the quotient rank over each block matches both the
    class count and the weight-space dimension.
    """
    from .blocks import enumerate_compositions

    if sum(lam) != n:
        raise ValueError("Jordan type must partition n")
    report = {"relation": "quotient-intertwines", "lambda": list(lam), "k": k,
              "n": n, "status": "pass"}
    for a in enumerate_compositions(n, k):
        classes = orbit_classes(lam, a)
        if len(classes) != count_simples(lam, a) or \
                len(classes) != weight_space_dim(lam, k, a):
            report["status"] = "fail"
            report["counterexample"] = {"block": list(a), "reason": "rank mismatch"}
            return report
        for cls in classes:
            for i in range(1, k):
                for op in (apply_e, apply_f):
                    images = [quotient_to_simples(lam, op(i, {r: 1})) for r in cls]
                    if any(img != images[0] for img in images[1:]):
                        report["status"] = "fail"
                        report["counterexample"] = {
                            "block": list(a), "node": i,
                            "op": "E" if op is apply_e else "F",
                            "class": [list(r) for r in cls]}
                        return report
    return report


def content_moves(k: int, n: int) -> bool:
    """E_i sends content a to content raise(a,i); F_i the reverse."""
    from .blocks import enumerate_compositions, lower_at, raise_at

    for a in enumerate_compositions(n, k):
        for r in tuples_in_block(a):
            for i in range(1, k):
                for r2 in apply_e(i, {r: 1}):
                    if content(r2, k) != raise_at(a, i):
                        return False
                for r2 in apply_f(i, {r: 1}):
                    if content(r2, k) != lower_at(a, i):
                        return False
    return True
