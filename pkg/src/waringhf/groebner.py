"""Buchberger's algorithm, normal forms and elimination over exact fields."""

from __future__ import annotations

import heapq
import threading
from typing import Iterable, Sequence

from .polyring import MonomialOrder, PolyRing, Polynomial, degrevlex, elimination_order
from .scalars import ExactMatrix, row_space_basis

DEFAULT_BUDGET = 10 ** 6

_budget_state = threading.local()


class BudgetExceeded(RuntimeError):
    """Raised when a basis computation uses more S-pair reductions than allowed."""

    def __init__(self, budget: int):
        super().__init__(f"S-pair budget of {budget} reductions exceeded")
        self.budget = budget


def default_budget() -> int:
    return getattr(_budget_state, "value", DEFAULT_BUDGET)


def set_default_budget(n: int) -> None:
    """Set the S-pair budget for basis computations started from this thread."""
    if n < 1:
        raise ValueError("budget must be positive")
    _budget_state.value = n


# exponent vectors packed 16 bits per variable with a guard bit on top;
# a | b  iff  ((b | G) - a) & G == G
_EXP_BITS = 16


def _pack(e: Sequence[int]) -> int:
    v = 0
    for i, a in enumerate(e):
        v |= a << (_EXP_BITS * i)
    return v


def _guard(n: int) -> int:
    g = 0
    for i in range(n):
        g |= 1 << (_EXP_BITS * i + _EXP_BITS - 1)
    return g


class _Engine:
    """State for one basis computation in one ring."""

    def __init__(self, ring: PolyRing, budget: int):
        self.ring = ring
        self.p = ring.field.char
        self.inv = ring.field.inv
        self.guard = _guard(ring.nvars)
        self.budget = budget
        self.used = 0
        # reducers are append-only; reduction by any ideal member is valid
        self.red_div: list[int] = []
        self.red_lk: list[int] = []
        self.red_tail: list[list] = []
        self._div_cache: dict[int, int] = {}
        # key -> reducer index, or -(checked count) - 1 when irreducible so far
        self._red_cache: dict[int, int] = {}

    def div(self, key: int) -> int:
        d = self._div_cache.get(key)
        if d is None:
            d = self._div_cache[key] = _pack(self.ring.exps(key))
        return d

    def add_reducer(self, terms: dict) -> int:
        lk = max(terms)
        self.red_div.append(self.div(lk))
        self.red_lk.append(lk)
        self.red_tail.append([(k, c) for k, c in terms.items() if k != lk])
        return len(self.red_lk) - 1

    def find_reducer(self, key: int) -> int:
        hit = self._red_cache.get(key)
        n = len(self.red_div)
        start = 0
        if hit is not None:
            if hit >= 0:
                return hit
            start = -hit - 1
            if start == n:
                return -1
        b = self.div(key) | self.guard
        G = self.guard
        divs = self.red_div
        for i in range(start, n):
            if (b - divs[i]) & G == G:
                self._red_cache[key] = i
                return i
        self._red_cache[key] = -n - 1
        return -1

    def reduce(self, terms: dict, monic: bool = True) -> dict:
        """Full normal form of ``terms`` by the reducers (all must be monic)."""
        p = self.p
        acc = dict(terms)
        heap = [-k for k in acc]
        heapq.heapify(heap)
        out = {}
        red_lk = self.red_lk
        red_tail = self.red_tail
        find = self.find_reducer
        pop = heapq.heappop
        push = heapq.heappush
        while heap:
            k = -pop(heap)
            c = acc.pop(k, None)
            if c is None:
                continue
            i = find(k)
            if i < 0:
                out[k] = c
                continue
            shift = k - red_lk[i]
            get = acc.get
            if p:
                for kg, cg in red_tail[i]:
                    nk = kg + shift
                    old = get(nk)
                    if old is None:
                        acc[nk] = (-c * cg) % p
                        push(heap, -nk)
                    else:
                        v = (old - c * cg) % p
                        if v:
                            acc[nk] = v
                        else:
                            del acc[nk]
            else:
                for kg, cg in red_tail[i]:
                    nk = kg + shift
                    old = get(nk)
                    if old is None:
                        acc[nk] = -c * cg
                        push(heap, -nk)
                    else:
                        v = old - c * cg
                        if v:
                            acc[nk] = v
                        else:
                            del acc[nk]
        if monic and out:
            lc = out[max(out)]
            if lc != 1:
                inv = self.inv(lc)
                if p:
                    out = {k: v * inv % p for k, v in out.items()}
                else:
                    out = {k: v * inv for k, v in out.items()}
        return out


def _make_monic(terms: dict, ring: PolyRing) -> dict:
    if not terms:
        return terms
    lc = terms[max(terms)]
    if lc == 1:
        return terms
    inv = ring.field.inv(lc)
    p = ring.field.char
    if p:
        return {k: v * inv % p for k, v in terms.items()}
    return {k: v * inv for k, v in terms.items()}


def _spoly(ring: PolyRing, a: dict, b: dict, la: int, lb: int, lcm_key: int) -> dict:
    # both monic
    p = ring.field.char
    sa = lcm_key - la
    sb = lcm_key - lb
    out = {}
    for k, c in a.items():
        if k != la:
            out[k + sa] = c
    for k, c in b.items():
        if k == lb:
            continue
        nk = k + sb
        v = out.get(nk, 0) - c
        if p:
            v %= p
        if v:
            out[nk] = v
        else:
            out.pop(nk, None)
    return out


def buchberger(ring: PolyRing, gens: Iterable[dict], budget: int | None = None) -> list[dict]:
    """Reduced Groebner basis (as term dicts in ``ring``) of the given term dicts.

    Pairs are pruned with the Gebauer-Moeller criteria and selected by
    lowest sugar degree, then lowest lcm.
    """
    budget = default_budget() if budget is None else budget
    eng = _Engine(ring, budget)
    exps = ring.exps
    nv = ring.nvars
    G_terms: list[dict] = []
    G_lk: list[int] = []
    G_lm: list[tuple] = []
    G_sugar: list[int] = []
    active: list[int] = []
    pairs: list = []  # heap of (sugar, lcm_key, i, j)
    alive_pairs: set = set()

    def lcm(a, b):
        return tuple(x if x > y else y for x, y in zip(a, b))

    def divides(a, b):
        return all(x <= y for x, y in zip(a, b))

    def coprime(a, b):
        return all(x == 0 or y == 0 for x, y in zip(a, b))

    def key_of(e):
        return ring.key(e)

    def insert(terms: dict, sugar: int):
        lk = max(terms)
        h = len(G_terms)
        G_terms.append(terms)
        G_lk.append(lk)
        lm_h = exps(lk)
        G_lm.append(lm_h)
        G_sugar.append(sugar)
        eng.add_reducer(terms)
        # Gebauer-Moeller update
        C = [(g, lcm(lm_h, G_lm[g])) for g in active]
        D = []
        for idx, (g1, l1) in enumerate(C):
            if coprime(lm_h, G_lm[g1]):
                D.append((g1, l1))
                continue
            dominated = False
            for g2, l2 in C[idx + 1:]:
                if divides(l2, l1):
                    dominated = True
                    break
            if not dominated:
                for g2, l2 in D:
                    if divides(l2, l1):
                        dominated = True
                        break
            if not dominated:
                D.append((g1, l1))
        E = [(g, l) for g, l in D if not coprime(lm_h, G_lm[g])]
        # prune old pairs by the chain criterion
        dead = []
        for pr in alive_pairs:
            i, j, l = pr
            if divides(lm_h, l) and lcm(G_lm[i], lm_h) != l and lcm(G_lm[j], lm_h) != l:
                dead.append(pr)
        for pr in dead:
            alive_pairs.discard(pr)
        for g, l in E:
            e_deg = sum(l)
            s = max(G_sugar[g] + e_deg - sum(G_lm[g]), sugar + e_deg - sum(lm_h))
            pr = (g, h, l)
            alive_pairs.add(pr)
            heapq.heappush(pairs, (s, key_of(l), g, h, l))
        active[:] = [g for g in active if not divides(lm_h, G_lm[g])]
        active.append(h)

    # seed with the generators, reduced against each other as they come in
    seeds = []
    for t in gens:
        if t:
            seeds.append(t)
    seeds.sort(key=lambda t: (max(sum(exps(k)) for k in t), max(t)))
    for t in seeds:
        sugar = max(sum(exps(k)) for k in t)
        r = eng.reduce(t)
        if r:
            insert(r, sugar)
    while pairs:
        s, _, i, j, l = heapq.heappop(pairs)
        pr = (i, j, l)
        if pr not in alive_pairs:
            continue
        alive_pairs.discard(pr)
        eng.used += 1
        if eng.used > budget:
            raise BudgetExceeded(budget)
        sp = _spoly(ring, G_terms[i], G_terms[j], G_lk[i], G_lk[j], key_of(l))
        if not sp:
            continue
        r = eng.reduce(sp)
        if r:
            insert(r, s)
    return _interreduce(ring, [G_terms[g] for g in active], budget)


def _interreduce(ring: PolyRing, polys: list[dict], budget: int) -> list[dict]:
    exps = ring.exps
    # minimalize
    items = sorted(polys, key=max)
    lms = [exps(max(t)) for t in items]
    keep = []
    for a in range(len(items)):
        la = lms[a]
        if any(all(x <= y for x, y in zip(lms[b], la)) for b in keep):
            continue
        keep.append(a)
    basis = [_make_monic(items[a], ring) for a in keep]
    out = []
    for a, t in enumerate(basis):
        eng = _Engine(ring, budget)
        for b, u in enumerate(basis):
            if b != a:
                eng.add_reducer(u)
        lk = max(t)
        tail = {k: c for k, c in t.items() if k != lk}
        r = eng.reduce(tail, monic=False)
        r[lk] = t[lk]
        out.append(r)
    out.sort(key=max)
    return out


class Ideal:
    """Ideal of a polynomial ring given by generators, with cached reduced bases per order."""

    def __init__(self, gens: Iterable = (), ring: PolyRing | None = None):
        gens = list(gens)
        if ring is None:
            if not gens:
                raise ValueError("ring required for an ideal without generators")
            ring = gens[0].ring
        conv = []
        for g in gens:
            if isinstance(g, str):
                g = ring.parse(g)
            elif not isinstance(g, Polynomial):
                g = ring.constant(g)
            else:
                g = ring.convert(g)
            if g:
                conv.append(g)
        self.ring = ring
        self.gens = tuple(conv)
        self._cache: dict[MonomialOrder, list[Polynomial]] = {}
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        body = ", ".join(str(g) for g in self.gens)
        return f"Ideal({body})"

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    # Groebner machinery

    def groebner(self, order: MonomialOrder | None = None, budget: int | None = None) -> list[Polynomial]:
        """Reduced Groebner basis (monic, ascending leading terms) for ``order``."""
        order = self.ring.order if order is None else order
        with self._lock:
            hit = self._cache.get(order)
        if hit is not None:
            return list(hit)
        R = self.ring.with_order(order)
        terms = [R.convert(g).terms for g in self.gens]
        basis = [Polynomial(R, t) for t in buchberger(R, terms, budget)]
        with self._lock:
            self._cache.setdefault(order, basis)
        return list(basis)

    def seed_basis(self, basis: Sequence[Polynomial], order: MonomialOrder | None = None) -> None:
        """Install a reduced basis computed elsewhere (e.g. by interpolation)."""
        order = self.ring.order if order is None else order
        R = self.ring.with_order(order)
        with self._lock:
            self._cache[order] = [R.convert(b) for b in basis]

    def normal_form(self, f: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
        return normal_form(f, self, order)

    def contains(self, f: Polynomial) -> bool:
        return not normal_form(f, self)

    def __contains__(self, f) -> bool:
        return self.contains(f)

    def is_subset(self, other: "Ideal") -> bool:
        """``self`` is contained in ``other``."""
        return all(other.contains(g) for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].degree() == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        if not self.ring.compatible(other.ring):
            return False
        a = [g.as_dict() for g in self.groebner(degrevlex)]
        b = [g.as_dict() for g in Ideal(other.gens, self.ring).groebner(degrevlex)] if other.ring != self.ring \
            else [g.as_dict() for g in other.groebner(degrevlex)]
        return a == b

    __hash__ = object.__hash__

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(list(self.gens) + [self.ring.convert(g) for g in other.gens], self.ring)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal([a * self.ring.convert(b) for a in self.gens for b in other.gens], self.ring)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def leading_ideal(self, order: MonomialOrder | None = None) -> "Ideal":
        return leading_ideal(self, order)

    def degree_part(self, d: int) -> list[Polynomial]:
        return degree_part(self, d)

    def minimal_generators(self) -> list[Polynomial]:
        return minimal_generators(self)

    def in_ring(self, ring: PolyRing) -> "Ideal":
        """The same generators re-read positionally in another ring with as many variables."""
        if ring.nvars != self.ring.nvars:
            raise ValueError("variable counts differ")
        ring.field.check_same(self.ring.field)
        out = []
        for g in self.gens:
            out.append(Polynomial(ring, {ring.key(e): c for e, c in g.as_dict().items()}))
        return Ideal(out, ring)


def groebner_basis(I: Ideal, order: MonomialOrder | None = None, budget: int | None = None) -> list[Polynomial]:
    return I.groebner(order, budget)


def normal_form(f: Polynomial, I: Ideal, order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of ``f`` on full reduction by the reduced basis of ``I``."""
    order = I.ring.order if order is None else order
    R = I.ring.with_order(order)
    if not f.ring.compatible(I.ring):
        from .polyring import RingMismatchError
        raise RingMismatchError("polynomial and ideal live in different rings")
    gb = I.groebner(order)
    eng = _Engine(R, default_budget())
    for g in gb:
        eng.add_reducer(g.terms)
    r = eng.reduce(R.convert(f).terms, monic=False)
    return f.ring.convert(Polynomial(R, r))


class Reducer:
    """Repeated normal forms against one fixed basis."""

    def __init__(self, I: Ideal, order: MonomialOrder | None = None):
        order = I.ring.order if order is None else order
        self.ring = I.ring.with_order(order)
        self.basis = I.groebner(order)
        self._eng = _Engine(self.ring, default_budget())
        for g in self.basis:
            self._eng.add_reducer(g.terms)

    def __call__(self, f: Polynomial) -> Polynomial:
        return Polynomial(self.ring, self._eng.reduce(self.ring.convert(f).terms, monic=False))

    def is_standard(self, exps: Sequence[int]) -> bool:
        return self._eng.find_reducer(self.ring.key(exps)) < 0


def leading_ideal(I: Ideal, order: MonomialOrder | None = None) -> Ideal:
    order = I.ring.order if order is None else order
    R = I.ring.with_order(order)
    lts = [R.monomial(g.lm()) for g in I.groebner(order)]
    return Ideal([I.ring.convert(m) for m in lts], I.ring)


def eliminate(I: Ideal, k: int, budget: int | None = None) -> Ideal:
    """``I`` intersected with the subring of the last ``nvars - k`` variables."""
    ring = I.ring
    if not 1 <= k <= ring.nvars:
        raise ValueError("number of eliminated variables out of range")
    order = elimination_order(k)
    gb = I.groebner(order, budget)
    sub = PolyRing(ring.names[k:], ring.field, degrevlex)
    kept = []
    for g in gb:
        d = g.as_dict()
        if all(not any(e[:k]) for e in d):
            kept.append(sub.from_dict({e[k:]: c for e, c in d.items()}))
    return Ideal(kept, sub)


def degree_part(I: Ideal, d: int) -> list[Polynomial]:
    """Echelon basis of the degree-``d`` component of a homogeneous ideal."""
    if d < 0:
        return []
    red = Reducer(I, degrevlex)
    ring = I.ring
    out = []
    for e in ring.basis(d):
        if not red.is_standard(e):
            m = red.ring.monomial(e)
            out.append(ring.convert(m - red(m)))
    return out


def minimal_generators(I: Ideal) -> list[Polynomial]:
    """A minimal homogeneous generating set drawn from the reduced degrevlex basis."""
    if not I.is_homogeneous():
        raise ValueError("minimal generators need a homogeneous ideal")
    ring = I.ring
    gb = [ring.convert(g) for g in I.groebner(degrevlex)]
    if not gb:
        return []
    if gb[0].degree() == 0:
        return [ring.one()]
    by_deg: dict[int, list[Polynomial]] = {}
    for g in gb:
        by_deg.setdefault(g.degree(), []).append(g)
    out = []
    for d in sorted(by_deg):
        cand = by_deg[d]
        if not out:
            out.extend(cand)
            continue
        mons = ring.basis(d)
        index = {e: i for i, e in enumerate(mons)}
        lower = []
        for b in degree_part(I, d - 1) if d > 0 else []:
            for x in ring.gens:
                lower.append(b * x)
        rows = [_coords(f, index) for f in lower]
        basis, _ = row_space_basis(ring.field, rows, len(mons)) if rows else ([], [])
        r = len(basis)
        for g in cand:
            v = _coords(g, index)
            trial, _ = row_space_basis(ring.field, basis + [v], len(mons))
            if len(trial) > r:
                out.append(g)
                basis = trial
                r = len(trial)
    return out


def _coords(f: Polynomial, index: dict) -> list:
    v = [f.ring.field.zero] * len(index)
    for e, c in f.as_dict().items():
        v[index[e]] = c
    return v
