"""Hilbert functions of graded quotients and the first-difference calculus for plane point sets."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Sequence

from .groebner import Ideal
from .polyring import degrevlex


class ProfileRuleError(ValueError):
    """A first-difference sequence breaks one of the rules every plane point set obeys.

    ``rule`` is one of ``non-decreasing``, ``starts-at-one``, ``plane-cap``
    or ``decrease-rule``.
    """

    def __init__(self, rule: str, message: str):
        super().__init__(f"[{rule}] {message}")
        self.rule = rule


def _lead_exps(I: Ideal) -> list[tuple]:
    return [g.lm() for g in I.groebner(degrevlex)]


def _is_standard(e: Sequence[int], lms: list[tuple]) -> bool:
    for m in lms:
        if all(a <= b for a, b in zip(m, e)):
            return False
    return True


def hilbert_function(I: Ideal, max_degree: int) -> list[int]:
    """``h(0), ..., h(max_degree)`` for ``S/I`` by counting standard monomials."""
    if not I.is_homogeneous():
        raise ValueError("Hilbert function needs a homogeneous ideal")
    lms = _lead_exps(I)
    ring = I.ring
    return [sum(1 for e in ring.basis(d) if _is_standard(e, lms)) for d in range(max_degree + 1)]


def hilbert_numerator(lms: Sequence[Sequence[int]], n: int) -> list[int]:
    """Numerator ``N(t)`` of the Hilbert series ``N(t)/(1-t)^n`` of ``k[x_1..x_n]`` mod a monomial ideal."""
    gens = _minimalize([tuple(m) for m in lms])
    return _numerator(gens, n)


def leading_ideal_settled(lms: Sequence[Sequence[int]], nvars: int, n: int, d: int) -> bool:
    """Whether the monomial ideal of ``lms`` has Hilbert function ``n`` in every degree ``>= d``."""
    num = hilbert_numerator(lms, nvars)
    # past the numerator's degree h is a polynomial of degree < nvars, so it is
    # constant once it agrees with n at nvars consecutive degrees there
    for k in range(d, max(d, len(num)) + nvars + 1):
        h = sum(c * math.comb(k - j + nvars - 1, nvars - 1) for j, c in enumerate(num) if j <= k)
        if h != n:
            return False
    return True


def _minimalize(gens: list[tuple]) -> list[tuple]:
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out = []
    for m in gens:
        if not any(all(a <= b for a, b in zip(o, m)) for o in out):
            out.append(m)
    return out


def _poly_sub_shift(a: list[int], b: list[int], s: int) -> list[int]:
    n = max(len(a), len(b) + s)
    out = a + [0] * (n - len(a))
    for i, c in enumerate(b):
        out[i + s] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _numerator(gens: list[tuple], n: int) -> list[int]:
    if not gens:
        return [1]
    if any(sum(m) == 0 for m in gens):
        return [0]
    # product of (1 - t^deg) when generators are pairwise coprime
    if all(all(x == 0 or y == 0 for x, y in zip(a, b)) for i, a in enumerate(gens) for b in gens[i + 1:]):
        out = [1]
        for m in gens:
            out = _poly_sub_shift(out, out, sum(m))
        return out
    last = gens[-1]
    rest = gens[:-1]
    colon = _minimalize([tuple(max(a - b, 0) for a, b in zip(m, last)) for m in rest])
    return _poly_sub_shift(_numerator(rest, n), _numerator(colon, n), sum(last))


def dimension_and_degree_from_numerator(num: list[int], n: int) -> tuple[int, int]:
    """Krull dimension and degree of ``S/I`` from its Hilbert numerator."""
    if all(c == 0 for c in num):
        return 0, 0
    coeffs = list(num)
    dim = n
    # divide by (1 - t) while t = 1 is a root
    while dim > 0 and sum(coeffs) == 0:
        q = []
        acc = 0
        for c in coeffs[:-1]:
            acc += c
            q.append(acc)
        coeffs = q
        dim -= 1
    return dim, sum(coeffs)


@dataclass(frozen=True)
class HilbertProfile:
    """First difference ``Dh`` of a Hilbert function, trailing zeros removed."""

    dh: tuple[int, ...]
    _partial: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        dh = list(self.dh)
        while dh and dh[-1] == 0:
            dh.pop()
        object.__setattr__(self, "dh", tuple(int(x) for x in dh))
        s = 0
        partial = []
        for x in self.dh:
            s += x
            partial.append(s)
        object.__setattr__(self, "_partial", tuple(partial))

    def __getitem__(self, i: int) -> int:
        return self.dh[i] if 0 <= i < len(self.dh) else 0

    def __len__(self) -> int:
        return len(self.dh)

    @property
    def length(self) -> int:
        """The cardinality: ``sum(dh)``."""
        return self._partial[-1] if self._partial else 0

    def h(self, i: int) -> int:
        """Hilbert function value at degree ``i``."""
        if i < 0 or not self._partial:
            return 0
        return self._partial[min(i, len(self._partial) - 1)]

    def hilbert(self, max_degree: int) -> list[int]:
        return [self.h(i) for i in range(max_degree + 1)]

    @property
    def partial_sums(self) -> tuple[int, ...]:
        return self._partial

    @property
    def regularity(self) -> int:
        return regularity(self)

    def h1(self, d: int) -> int:
        return h1(self, d)

    def validate(self, plane: bool = True) -> "HilbertProfile":
        check_profile(self.dh, plane)
        return self

    def to_json(self) -> str:
        return json.dumps(list(self.dh))

    @classmethod
    def from_json(cls, text: str) -> "HilbertProfile":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
            raise ValueError("profile JSON must be an array of integers")
        return cls(tuple(data))

    @classmethod
    def parse(cls, text: str) -> "HilbertProfile":
        """Read ``1,2,3`` or a JSON array."""
        t = text.strip()
        if t.startswith("["):
            return cls.from_json(t)
        try:
            return cls(tuple(int(s) for s in t.split(",") if s.strip()))
        except ValueError:
            raise ValueError(f"bad profile {text!r}") from None

    def __str__(self) -> str:
        return ",".join(map(str, self.dh))


def check_profile(dh: Sequence[int], plane: bool = True) -> None:
    for i, x in enumerate(dh):
        if x < 0:
            raise ProfileRuleError("non-decreasing", f"Dh({i}) = {x} is negative")
    if not any(dh):
        return
    if dh[0] != 1:
        raise ProfileRuleError("starts-at-one", f"Dh(0) = {dh[0]}, expected 1")
    if plane:
        for i, x in enumerate(dh):
            if x > i + 1:
                raise ProfileRuleError("plane-cap", f"Dh({i}) = {x} exceeds {i + 1}")
    for j in range(len(dh)):
        nxt = dh[j + 1] if j + 1 < len(dh) else 0
        if dh[j] < j and nxt > dh[j]:
            raise ProfileRuleError("decrease-rule",
                                   f"Dh({j}) = {dh[j]} < {j} but Dh({j + 1}) = {nxt} is larger")


def first_difference(h: Sequence[int], plane: bool = True) -> HilbertProfile:
    """Profile of ``Dh(i) = h(i) - h(i-1)``, validated against the point-set rules."""
    dh = [h[0]] + [h[i] - h[i - 1] for i in range(1, len(h))] if len(h) else []
    for i, x in enumerate(dh):
        if x < 0:
            raise ProfileRuleError("non-decreasing", f"h({i}) = {h[i]} is smaller than h({i - 1}) = {h[i - 1]}")
    p = HilbertProfile(tuple(dh))
    check_profile(p.dh, plane)
    return p


def regularity(p: HilbertProfile) -> int:
    """Index of the last nonzero entry: the first degree where ``h`` reaches its final value.

    The empty profile gives -1.
    """
    return len(p.dh) - 1


def h1(p: HilbertProfile, d: int) -> int:
    """Defect ``length - h(d)``, i.e. the sum of ``Dh(i)`` over ``i > d``."""
    return sum(p.dh[max(d + 1, 0):])


def leading_dim_degree(I: Ideal) -> tuple[int, int]:
    """Krull dimension and degree of ``S/I`` read off the degrevlex leading ideal."""
    return dimension_and_degree_from_numerator(hilbert_numerator(_lead_exps(I), I.ring.nvars), I.ring.nvars)


def profile_of(I: Ideal) -> HilbertProfile:
    """Profile of a saturated ideal of points, computed up to the degree where ``h`` reaches the degree.

    The unit ideal (no points) has the empty profile.
    """
    dim, deg = leading_dim_degree(I)
    if dim == 0 and deg == 0:
        return HilbertProfile(())
    if dim != 1:
        raise ValueError(f"not an ideal of points (dimension {dim})")
    lms = _lead_exps(I)
    ring = I.ring
    h = []
    d = 0
    while True:
        h.append(sum(1 for e in ring.basis(d) if _is_standard(e, lms)))
        if h[-1] == deg:
            break
        if h[-1] > deg or d > deg + 1:
            raise ValueError("Hilbert function does not settle at the degree; is the ideal saturated?")
        d += 1
    return first_difference(h)


def ci_profile(d1: int, d2: int) -> HilbertProfile:
    """``Dh`` of a plane complete intersection of type ``(d1, d2)``."""
    if d1 < 1 or d2 < 1:
        return HilbertProfile(())
    # (1 - t^d1)(1 - t^d2) / (1 - t)^2 = (1 + ... + t^(d1-1)) (1 + ... + t^(d2-1))
    out = [0] * (d1 + d2 - 1)
    for i in range(d1):
        for j in range(d2):
            out[i + j] += 1
    return HilbertProfile(tuple(out))
