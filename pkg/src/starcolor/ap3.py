"""Progression-free integer sets: sphere construction and greedy oracle.

The sphere construction maps digit vectors to integers in a base large
enough that adding two set members never carries; vectors on a common
Euclidean sphere then admit no 3-term arithmetic progression because a
sphere is strictly convex.  For base 3 the digit cube {0,1}^d needs no
sphere cut at all (digit-wise, x+z=2y forces x=z), and at desk-scale
spans that cube candidate dominates every single sphere, so the scan
includes it.

The greedy generator is the independent small-span oracle used to
cross-check the construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


def verify_ap3(values) -> bool:
    """True iff the set contains no x, z and middle y with x + z == 2y."""
    elems = sorted(set(values))
    members = set(elems)
    for i, x in enumerate(elems):
        for z in elems[i + 1 :]:
            if (x + z) % 2 == 0 and (x + z) // 2 in members:
                mid = (x + z) // 2
                if mid != x and mid != z:
                    return False
    return True


@dataclass(frozen=True)
class Ap3Set:
    """Strictly increasing positive integers, certified progression-free."""

    elements: tuple[int, ...]
    span: int

    def __post_init__(self) -> None:
        elems = self.elements
        if any(e <= 0 for e in elems):
            raise ValueError("elements must be positive")
        if list(elems) != sorted(set(elems)):
            raise ValueError("elements must be strictly increasing")
        if elems and elems[-1] > self.span:
            raise ValueError("elements exceed the declared span")
        if not verify_ap3(elems):
            raise ValueError("set contains a 3-term arithmetic progression")

    def __len__(self) -> int:
        return len(self.elements)


def greedy_ap3_set(count: int) -> Ap3Set:
    """Scan 1, 2, 3, ... adding integers that close no progression."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    chosen: list[int] = []
    members: set[int] = set()
    x = 0
    while len(chosen) < count:
        x += 1
        ok = True
        for a in chosen:
            # x as the largest term, or as the middle term
            if (a + x) % 2 == 0 and (a + x) // 2 in members:
                ok = False
                break
            if 2 * x - a in members and a != x:
                ok = False
                break
        if ok:
            chosen.append(x)
            members.add(x)
    return Ap3Set(tuple(chosen), chosen[-1])


def _digit_candidates(span: int, dim: int, base: int):
    """Carry-free candidates for one (dim, base): spheres plus the b=3 cube.

    Digits run over 0..(base-1)//2 for odd base (strictly below base/2 for
    even), so member sums and doubled members never carry.
    """
    top = (base - 1) // 2 if base % 2 else base // 2 - 1
    if top < 1:
        return
    weights = [base**i for i in range(dim)]
    spheres: dict[int, list[int]] = {}
    cube: list[int] = []
    for vec in product(range(top + 1), repeat=dim):
        value = 1 + sum(d * w for d, w in zip(vec, weights))
        if value > span:
            continue
        cube.append(value)
        spheres.setdefault(sum(d * d for d in vec), []).append(value)
    for r in sorted(spheres):
        if r > 0:
            yield spheres[r]
    if base == 3 and len(cube) > 1:
        yield cube


def behrend_set(span: int) -> Ap3Set:
    """Largest carry-free digit-construction set within {1..span}.

    For each dimension 2..12 the base scan covers a small window around
    span**(1/dim) together with base 3, whose full digit cube is itself
    progression-free and carries the construction at small spans.  The
    most populous candidate wins (ties toward smaller maximum element)
    and is verified before returning.
    """
    if span < 1:
        raise ValueError(f"span must be >= 1, got {span}")
    best: list[int] = [1]
    for dim in range(2, 13):
        if 3 ** (dim - 1) > span:
            break
        center = round(span ** (1.0 / dim))
        bases = {3} | {b for b in range(center - 2, center + 4) if b >= 3}
        for base in sorted(bases):
            if base ** (dim - 1) > span:
                continue
            for candidate in _digit_candidates(span, dim, base):
                if len(candidate) > len(best) or (
                    len(candidate) == len(best) and max(candidate) < max(best)
                ):
                    candidate.sort()
                    best = candidate
    if not verify_ap3(best):  # pragma: no cover - constructions are carry-free
        raise AssertionError("digit construction produced a progression")
    return Ap3Set(tuple(sorted(best)), span)


def ap3_set_of_size(count: int, method: str = "behrend") -> Ap3Set:
    """First ``count`` elements of a progression-free set, by either method."""
    if method == "greedy":
        return greedy_ap3_set(count)
    if method != "behrend":
        raise ValueError(f"unknown method {method!r}")
    span = max(4, count)
    while True:
        s = behrend_set(span)
        if len(s) >= count:
            elems = s.elements[:count]
            return Ap3Set(elems, elems[-1])
        span = span * 3 // 2 + 1
