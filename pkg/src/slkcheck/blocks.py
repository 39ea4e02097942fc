"""Weight-block combinatorics.

Compositions a = (a_1,...,a_k) with nonnegative parts summing to n index the
blocks; a Jordan type is a partition of n whose parts cut {1..n} into
consecutive segments.  Tuples with values in {1..k} and content a form the
standard basis of a block; grouping them by per-segment value multisets gives
the orbit classes, whose count must match the a-weight-space dimension of
S^{lam_1}C^k x ... x S^{lam_i}C^k.  That dimension is computed here by an
independent route (convolution of symmetric-power characters) so the two can
be checked against each other.
"""

from __future__ import annotations

from math import comb, factorial, prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

Composition = Tuple[int, ...]
ValueTuple = Tuple[int, ...]


def is_composition(a: Sequence[int], n: int, k: int) -> bool:
    return len(a) == k and all(x >= 0 for x in a) and sum(a) == n


def enumerate_compositions(n: int, k: int) -> List[Composition]:
    """All k-tuples of nonnegative ints summing to n, first part decreasing."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    if k == 1:
        return [(n,)]
    out = []
    for first in range(n, -1, -1):
        for rest in enumerate_compositions(n - first, k - 1):
            out.append((first,) + rest)
    return out


def raise_at(a: Composition, i: int) -> Optional[Composition]:
    """Move one unit from part i+1 to part i (1-based node i); None if empty."""
    if not 1 <= i <= len(a) - 1:
        raise IndexError("node index out of range")
    if a[i] == 0:
        return None
    return a[:i - 1] + (a[i - 1] + 1, a[i] - 1) + a[i + 1:]


def lower_at(a: Composition, i: int) -> Optional[Composition]:
    """Inverse of raise_at: move one unit from part i to part i+1."""
    if not 1 <= i <= len(a) - 1:
        raise IndexError("node index out of range")
    if a[i - 1] == 0:
        return None
    return a[:i - 1] + (a[i - 1] - 1, a[i] + 1) + a[i + 1:]


def mu_weight(a: Composition) -> Tuple[int, ...]:
    """Coordinates of the block's defining weight: -s repeated a_s times."""
    out = []
    for s, part in enumerate(a, start=1):
        out.extend([-s] * part)
    return tuple(out)


def tuples_in_block(a: Composition) -> List[ValueTuple]:
    """All value tuples with content a, ascending lexicographic order."""
    n = sum(a)
    counts = list(a)
    out: List[ValueTuple] = []

    def rec(prefix: List[int]) -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(1, len(a) + 1):
            if counts[v - 1]:
                counts[v - 1] -= 1
                prefix.append(v)
                rec(prefix)
                prefix.pop()
                counts[v - 1] += 1

    rec([])
    return out


def content(r: ValueTuple, k: int) -> Composition:
    c = [0] * k
    for v in r:
        c[v - 1] += 1
    return tuple(c)


def partitions(n: int, max_part: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of n in weakly decreasing order, largest part first."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def segments(lam: Sequence[int]) -> List[range]:
    """Consecutive index blocks of sizes lam_1, lam_2, ... (0-based)."""
    out, start = [], 0
    for part in lam:
        out.append(range(start, start + part))
        start += part
    return out


def _class_key(r: ValueTuple, segs: List[range]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(sorted(r[m] for m in seg)) for seg in segs)


def orbit_classes(lam: Sequence[int], a: Composition) -> List[List[ValueTuple]]:
    """Partition of tuples_in_block(a) by per-segment value multisets."""
    if sum(lam) != sum(a):
        raise ValueError("Jordan type and composition have different ambient n")
    segs = segments(lam)
    groups: Dict[Tuple, List[ValueTuple]] = {}
    for r in tuples_in_block(a):
        groups.setdefault(_class_key(r, segs), []).append(r)
    return [groups[key] for key in sorted(groups)]


def count_simples(lam: Sequence[int], a: Composition) -> int:
    return len(orbit_classes(lam, a))


def weight_space_dim(lam: Sequence[int], k: int, a: Composition) -> int:
    """Dimension of the a-weight space of the tensor product of symmetric
    powers S^{lam_j}C^k, by convolving their characters."""
    if len(a) != k:
        raise ValueError("composition length must be k")
    vec: Dict[Composition, int] = {(0,) * k: 1}
    for part in lam:
        nxt: Dict[Composition, int] = {}
        for e, c in vec.items():
            for f in enumerate_compositions(part, k):
                key = tuple(x + y for x, y in zip(e, f))
                nxt[key] = nxt.get(key, 0) + c
        vec = nxt
    return vec.get(tuple(a), 0)


def block_count(n: int, k: int) -> int:
    return comb(n + k - 1, k - 1)


def tuple_count(a: Composition) -> int:
    return factorial(sum(a)) // prod(factorial(x) for x in a)
