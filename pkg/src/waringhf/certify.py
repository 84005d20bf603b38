"""Lower bounds on the size of apolar point sets from Cayley-Bacharach partial-sum inequalities.

For a non-redundant apolar set ``Z1`` of a form of degree ``d`` and any other
such set ``Z'`` the union ``U`` satisfies ``CB(d)``, so its first difference
obeys the partial-sum inequalities below.  Minimising ``len(U)`` over every
integer profile compatible with what is known gives ``len(Z') >= min - len(Z1)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .hilbert import HilbertProfile


class InfeasibleProfileError(ValueError):
    pass


CONSTRAINTS = (
    "contains-Z1: DhU(i) >= DhZ1(i)",
    "plane-cap: DhU(i) <= i + 1",
    "decrease-rule: DhU(j) < j implies DhU(j+1) <= DhU(j)",
    "cb-partial-sums: sum_{j<=i} DhU(j) <= sum_{j<=i} DhU(d+1-j)",
)
POINTWISE_TAIL = "pointwise-tail: DhU(d+1-i) >= DhU(i) for 2i <= d+1"


def cb_inequalities(p: HilbertProfile | Sequence[int], d: int) -> bool:
    """``sum_{j<=i} Dh(j) <= sum_{j<=i} Dh(d+1-j)`` for every ``i`` in ``0..d+1``."""
    dh = p.dh if isinstance(p, HilbertProfile) else tuple(p)

    def at(i):
        return dh[i] if 0 <= i < len(dh) else 0

    left = right = 0
    for i in range(d + 2):
        left += at(i)
        right += at(d + 1 - i)
        if left > right:
            return False
    return True


def _pointwise_tail_ok(x: Sequence[int], d: int) -> bool:
    return all(x[d + 1 - i] >= x[i] for i in range(d + 2) if 2 * i <= d + 1)


@dataclass(frozen=True)
class RankCertificate:
    bound: int
    witness_profile: tuple[int, ...]
    constraints_checked: tuple[str, ...]
    degree: int
    known_profile: tuple[int, ...]
    nodes: int = field(default=0, compare=False)

    @property
    def minimal_union_length(self) -> int:
        return sum(self.witness_profile)

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "witness_profile": list(self.witness_profile),
            "constraints_checked": list(self.constraints_checked),
            "degree": self.degree,
            "known_profile": list(self.known_profile),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _bounds(dh: Sequence[int], d: int) -> list[int]:
    n = d + 2
    if len(dh) > n:
        raise InfeasibleProfileError(f"profile is longer than the support 0..{d + 1}")
    lower = [dh[i] if i < len(dh) else 0 for i in range(n)]
    for i, lo in enumerate(lower):
        if lo > i + 1:
            raise InfeasibleProfileError(f"Dh({i}) = {lo} exceeds the plane cap")
    return lower


def rank_certificate(DhZ1: HilbertProfile | Sequence[int], d: int, pointwise_tail: bool = False) -> RankCertificate:
    """Branch and bound for the smallest union profile; see the module docstring.

    ``pointwise_tail`` adds the stronger requirement ``DhU(d+1-i) >= DhU(i)``,
    which is not implied by the partial-sum inequalities.
    """
    dh = DhZ1.dh if isinstance(DhZ1, HilbertProfile) else tuple(DhZ1)
    n = d + 2
    lower = _bounds(dh, d)
    ell = sum(dh)
    # suffix sums of the lower bounds
    rest_low = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        rest_low[i] = rest_low[i + 1] + lower[i]
    best_total = [None]
    best_x: list = [None]
    x = [0] * n
    prefix = [0] * (n + 1)  # prefix[i] = x[0] + ... + x[i-1]
    nodes = [0]

    def P(i):  # sum_{j<=i} x_j, with P(-1) = 0
        return prefix[i + 1]

    def feasible_leaf() -> bool:
        T = prefix[n]
        for i in range(-1, n):
            j = d - i
            if P(i) + (P(j) if j >= -1 else 0) > T:
                return False
        if pointwise_tail and not _pointwise_tail_ok(x, d):
            return False
        return True

    def dfs(i: int, cap: int):
        nodes[0] += 1
        s = prefix[i]
        if i == n:
            if feasible_leaf() and (best_total[0] is None or s < best_total[0]):
                best_total[0] = s
                best_x[0] = tuple(x)
            return
        lo = lower[i]
        hi = min(i + 1, cap)
        if hi < lo:
            return
        for v in range(lo, hi + 1):
            bound = s + v + rest_low[i + 1]
            if best_total[0] is not None and bound >= best_total[0]:
                break
            x[i] = v
            prefix[i + 1] = s + v
            # P(a) + P(d - a) <= T with both indices decided
            max_T = s + v + _max_rest(i + 1, v, n)
            lb_T = bound
            ok = True
            for a in range(-1, i + 1):
                b = d - a
                if b <= i:
                    need = P(a) + (P(b) if b >= -1 else 0)
                    if need > max_T:
                        ok = False
                        break
                    if need > lb_T:
                        lb_T = need
            if not ok:
                continue
            if best_total[0] is not None and lb_T >= best_total[0]:
                continue
            next_cap = v if v < i else 10 ** 9
            dfs(i + 1, next_cap)
        x[i] = 0

    def _max_rest(start: int, prev: int, n: int) -> int:
        total = 0
        cap = prev if prev < start - 1 else 10 ** 9
        for k in range(start, n):
            v = min(k + 1, cap)
            total += v
            cap = v if v < k else 10 ** 9
        return total

    dfs(0, 10 ** 9)
    if best_x[0] is None:
        raise InfeasibleProfileError("no union profile satisfies the constraints")
    checked = CONSTRAINTS + ((POINTWISE_TAIL,) if pointwise_tail else ())
    return RankCertificate(best_total[0] - ell, best_x[0], checked, d, tuple(dh), nodes[0])


def rank_lower_bound_cb(DhZ1: HilbertProfile | Sequence[int], d: int, pointwise_tail: bool = False) -> int:
    return rank_certificate(DhZ1, d, pointwise_tail).bound


# independent oracle: plain enumeration, then filtering

def enumerate_union_profiles(DhZ1: Sequence[int], d: int, max_entry: int | None = None) -> Iterator[tuple]:
    """Every integer sequence on ``0..d+1`` meeting the containment, cap and decrease rules."""
    n = d + 2
    lower = _bounds(tuple(DhZ1), d)
    top = [i + 1 if max_entry is None else min(i + 1, max_entry) for i in range(n)]

    def rec(prefix: tuple):
        i = len(prefix)
        if i == n:
            yield prefix
            return
        hi = top[i]
        if i > 0 and prefix[-1] < i - 1:
            hi = min(hi, prefix[-1])
        for v in range(lower[i], hi + 1):
            yield from rec(prefix + (v,))

    yield from rec(())


def rank_lower_bound_exhaustive(DhZ1: Sequence[int], d: int, max_entry: int | None = None,
                                pointwise_tail: bool = False) -> int:
    best = None
    for prof in enumerate_union_profiles(DhZ1, d, max_entry):
        if not cb_inequalities(prof, d):
            continue
        if pointwise_tail and not _pointwise_tail_ok(prof, d):
            continue
        t = sum(prof)
        if best is None or t < best:
            best = t
    if best is None:
        raise InfeasibleProfileError("no union profile satisfies the constraints")
    return best - sum(DhZ1)
