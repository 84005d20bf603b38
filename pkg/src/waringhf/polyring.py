"""Sparse multivariate polynomials, monomial orders, ring maps and the apolar action.

Monomials are stored as packed integers whose natural integer order is the
ring's monomial order and whose integer sum is the monomial product.  Every
supported order compares non-negative linear forms in the exponents
(degrees and partial sums of exponents), so one 16-bit field per linear form
keeps both properties as long as degrees stay below 2**16.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

import gmpy2

from .scalars import QQ, Field, FieldMismatchError, format_scalar

BITS = 16
MASK = (1 << BITS) - 1
MAX_DEGREE = MASK


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class RingMismatchError(ValueError):
    pass


class CharacteristicError(ValueError):
    """The field characteristic is too small for an exact differentiation."""


@dataclass(frozen=True)
class MonomialOrder:
    """``degrevlex``, ``lex``, or ``elim`` (block order eliminating the first ``block`` variables).

    The elimination order compares the first block by degree and then lex,
    and breaks ties on the remaining block with degrevlex.
    """

    kind: str = "degrevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs a block size >= 1")

    def __str__(self) -> str:
        return f"elim({self.block})" if self.kind == "elim" else self.kind

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        t = text.strip().lower()
        m = re.fullmatch(r"(?:elim|eliminate)[(:]?\s*(\d+)\)?", t)
        if m:
            return cls("elim", int(m.group(1)))
        return cls(t)


degrevlex = MonomialOrder("degrevlex")
lex = MonomialOrder("lex")


def elimination_order(k: int) -> MonomialOrder:
    return MonomialOrder("elim", k)


def _grevlex_fields(e: Sequence[int]) -> list[int]:
    # degree, then partial sums s_{n-2}, ..., s_0
    n = len(e)
    partial = []
    s = 0
    for x in e[:-1]:
        s += x
        partial.append(s)
    return [s + e[-1]] + partial[::-1] if n else []


def _grevlex_exps(fields: Sequence[int], n: int) -> list[int]:
    if n == 0:
        return []
    deg = fields[0]
    partial = list(fields[1:])[::-1]  # s_0 .. s_{n-2}
    out = []
    prev = 0
    for s in partial:
        out.append(s - prev)
        prev = s
    out.append(deg - prev)
    return out


class _Codec:
    """Packs exponent vectors into order keys for one (order, nvars) pair."""

    def __init__(self, order: MonomialOrder, n: int):
        self.order = order
        self.n = n
        if order.kind == "degrevlex":
            self.nfields = max(n, 1)
        elif order.kind == "lex":
            self.nfields = n
        else:
            k = order.block
            if k > n:
                raise ValueError("elimination block larger than the variable count")
            self.nfields = k + max(n - k, 1) if n > k else k
        self._cache: dict[int, tuple] = {}

    def fields(self, e: Sequence[int]) -> list[int]:
        o = self.order
        if o.kind == "degrevlex":
            return _grevlex_fields(e) if self.n else [0]
        if o.kind == "lex":
            return list(e)
        k = o.block
        first = [sum(e[:k])] + list(e[:k - 1])
        rest = _grevlex_fields(e[k:]) if self.n > k else []
        return first + rest

    def encode(self, e: Sequence[int]) -> int:
        key = 0
        for f in self.fields(e):
            if f > MAX_DEGREE:
                raise OverflowError("monomial degree exceeds the packed range")
            key = (key << BITS) | f
        return key

    def decode(self, key: int) -> tuple:
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        fs = []
        k = key
        for _ in range(self.nfields):
            fs.append(k & MASK)
            k >>= BITS
        fs.reverse()
        o = self.order
        n = self.n
        if o.kind == "degrevlex":
            e = _grevlex_exps(fs, n)
        elif o.kind == "lex":
            e = fs
        else:
            b = o.block
            deg1 = fs[0]
            head = fs[1:b]
            e = head + [deg1 - sum(head)]
            if n > b:
                e += _grevlex_exps(fs[b:], n - b)
        out = tuple(e)
        if len(self._cache) < 1 << 20:
            self._cache[key] = out
        return out


_codecs: dict[tuple, _Codec] = {}


def _codec(order: MonomialOrder, n: int) -> _Codec:
    c = _codecs.get((order, n))
    if c is None:
        c = _codecs[(order, n)] = _Codec(order, n)
    return c


def monomials_of_degree(n: int, d: int) -> list[tuple]:
    """All exponent vectors of total degree ``d`` in ``n`` variables, degrevlex descending."""
    if d < 0:
        return []
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    codec = _codec(degrevlex, n)
    out.sort(key=codec.encode, reverse=True)
    return out


class PolyRing:
    """Polynomial ring over an exact field with a fixed monomial order."""

    def __init__(self, names: str | Sequence[str], field: Field = QQ, order: MonomialOrder = degrevlex):
        if isinstance(names, str):
            names = [s.strip() for s in names.split(",") if s.strip()]
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        for s in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", s):
                raise ValueError(f"bad variable name {s!r}")
        self.names = names
        self.field = field
        self.order = order
        self.nvars = len(names)
        self.codec = _codec(order, self.nvars)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PolyRing) and self.names == other.names
                and self.field == other.field and self.order == other.order)

    def __hash__(self) -> int:
        return hash((self.names, self.field, self.order))

    def __repr__(self) -> str:
        return f"PolyRing({','.join(self.names)} over {self.field}, {self.order})"

    def compatible(self, other: "PolyRing") -> bool:
        """Same variables and field (orders may differ)."""
        return self.names == other.names and self.field == other.field

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return self if order == self.order else PolyRing(self.names, self.field, order)

    def with_names(self, names, order: MonomialOrder | None = None) -> "PolyRing":
        return PolyRing(names, self.field, self.order if order is None else order)

    def key(self, exps: Sequence[int]) -> int:
        return self.codec.encode(exps)

    def exps(self, key: int) -> tuple:
        return self.codec.decode(key)

    def var_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    # construction helpers

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {self.key((0,) * self.nvars): c} if c != 0 else {})

    def monomial(self, exps: Sequence[int], c=1) -> "Polynomial":
        c = self.field(c)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        return Polynomial(self, {self.key(exps): c} if c != 0 else {})

    def from_dict(self, d: dict) -> "Polynomial":
        """Build a polynomial from ``{exponent tuple: coefficient}``."""
        f = self.field
        terms = {}
        for e, c in d.items():
            c = f(c)
            if c != 0:
                k = self.key(e)
                v = terms.get(k, 0) + c
                if f.char:
                    v %= f.char
                if v != 0:
                    terms[k] = v
                else:
                    terms.pop(k, None)
        return Polynomial(self, terms)

    @cached_property
    def gens(self) -> tuple["Polynomial", ...]:
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(self.monomial(e))
        return tuple(out)

    def var(self, name: str) -> "Polynomial":
        return self.gens[self.var_index(name)]

    def basis(self, d: int) -> list[tuple]:
        """Monomial basis of the degree-``d`` component, degrevlex descending."""
        return monomials_of_degree(self.nvars, d)

    def parse(self, text: str) -> "Polynomial":
        return parse_poly(text, self)

    def convert(self, f: "Polynomial") -> "Polynomial":
        """Re-express ``f`` in this ring, matching variables by name.

        Variables of ``f`` absent from this ring must not occur in ``f``.
        """
        if f.ring == self:
            return f
        self.field.check_same(f.ring.field)
        src = f.ring
        if src.names == self.names:
            idx = None
        else:
            idx = []
            for name in src.names:
                idx.append(self.names.index(name) if name in self.names else None)
        terms = {}
        for k, c in f.terms.items():
            e = src.exps(k)
            if idx is None:
                ne = e
            else:
                ne = [0] * self.nvars
                for i, a in enumerate(e):
                    if a:
                        j = idx[i]
                        if j is None:
                            raise RingMismatchError(f"variable {src.names[i]} not in target ring")
                        ne[j] = a
            terms[self.key(ne)] = c
        return Polynomial(self, terms)


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps packed monomial keys to nonzero coefficients."""

    __slots__ = ("ring", "terms", "__weakref__")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # basic accessors

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def leading_key(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms)

    def lm(self) -> tuple:
        return self.ring.exps(self.leading_key())

    def lc(self):
        return self.terms[self.leading_key()]

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        """``(exponents, coefficient)`` pairs, descending in the ring order."""
        ex = self.ring.exps
        return [(ex(k), self.terms[k]) for k in sorted(self.terms, reverse=True)]

    def as_dict(self) -> dict[tuple, object]:
        ex = self.ring.exps
        return {ex(k): c for k, c in self.terms.items()}

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(self.ring.key(exps), self.ring.field.zero)

    def degree(self) -> int:
        if not self.terms:
            return -1
        ex = self.ring.exps
        return max(sum(ex(k)) for k in self.terms)

    def is_homogeneous(self) -> bool:
        ex = self.ring.exps
        degs = {sum(ex(k)) for k in self.terms}
        return len(degs) <= 1

    def is_constant(self) -> bool:
        return self.degree() <= 0

    def variables(self) -> set[int]:
        ex = self.ring.exps
        out = set()
        for k in self.terms:
            out.update(i for i, a in enumerate(ex(k)) if a)
        return out

    # arithmetic

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring == self.ring:
                return other
            if not other.ring.compatible(self.ring):
                if other.ring.field != self.ring.field:
                    raise FieldMismatchError(f"{other.ring.field} vs {self.ring.field}")
                raise RingMismatchError(f"{other.ring} vs {self.ring}")
            return self.ring.convert(other)
        return self.ring.constant(other)

    def __add__(self, other) -> "Polynomial":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return Polynomial(self.ring, _add_terms(self.terms, o.terms, 1, self.ring.field.char))

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return Polynomial(self.ring, _add_terms(self.terms, o.terms, -1, self.ring.field.char))

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __neg__(self) -> "Polynomial":
        p = self.ring.field.char
        if p:
            return Polynomial(self.ring, {k: p - c for k, c in self.terms.items()})
        return Polynomial(self.ring, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f(c)
        if c == 0:
            return self.ring.zero()
        p = f.char
        if p:
            return Polynomial(self.ring, {k: v * c % p for k, v in self.terms.items()})
        return Polynomial(self.ring, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        o = self._coerce(other)
        p = self.ring.field.char
        out: dict = {}
        get = out.get
        a, b = (self.terms, o.terms) if len(self.terms) <= len(o.terms) else (o.terms, self.terms)
        if self.degree() + o.degree() > MAX_DEGREE:
            raise OverflowError("product degree exceeds the packed range")
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        if p:
            out = {k: v % p for k, v in out.items() if v % p}
        else:
            out = {k: v for k, v in out.items() if v != 0}
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_monomial(self, exps: Sequence[int], c=1) -> "Polynomial":
        s = self.ring.key(exps)
        c = self.ring.field(c)
        p = self.ring.field.char
        if p:
            return Polynomial(self.ring, {k + s: v * c % p for k, v in self.terms.items()} if c else {})
        return Polynomial(self.ring, {k + s: v * c for k, v in self.terms.items()} if c else {})

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc()))

    def exact_div(self, g: "Polynomial") -> "Polynomial":
        """Quotient ``self / g``; raises ``ValueError`` unless ``g`` divides exactly."""
        g = self._coerce(g)
        if not g:
            raise ZeroDivisionError("division by zero polynomial")
        ring = self.ring
        p = ring.field.char
        lk = g.leading_key()
        le = ring.exps(lk)
        inv = ring.field.inv(g.terms[lk])
        rem = dict(self.terms)
        quo = {}
        gt = list(g.terms.items())
        while rem:
            k = max(rem)
            e = ring.exps(k)
            if any(a < b for a, b in zip(e, le)):
                raise ValueError("polynomial is not divisible")
            c = rem[k] * inv
            if p:
                c %= p
            s = k - lk
            quo[s] = c
            for kg, cg in gt:
                nk = kg + s
                v = rem.get(nk, 0) - c * cg
                if p:
                    v %= p
                if v:
                    rem[nk] = v
                else:
                    rem.pop(nk, None)
        return Polynomial(ring, quo)

    def diff(self, i: int) -> "Polynomial":
        """Partial derivative with respect to variable index ``i``."""
        ring = self.ring
        f = ring.field
        p = f.char
        out = {}
        for k, c in self.terms.items():
            e = list(ring.exps(k))
            a = e[i]
            if a == 0:
                continue
            v = c * a
            if p:
                v %= p
            if v == 0:
                continue
            e[i] = a - 1
            out[ring.key(e)] = v
        return Polynomial(ring, out)

    def evaluate(self, point: Sequence):
        """Value at a point given by field elements (one per variable)."""
        ring = self.ring
        f = ring.field
        pt = [f(x) for x in point]
        p = f.char
        total = f.zero
        for k, c in self.terms.items():
            term = c
            for x, a in zip(pt, ring.exps(k)):
                if a:
                    term = term * (pow(x, a, p) if p else x ** a)
                    if p:
                        term %= p
            total += term
        return total % p if p else total

    # comparison and display

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            if other.ring == self.ring:
                return self.terms == other.terms
            if not other.ring.compatible(self.ring):
                return False
            return self.terms == self.ring.convert(other).terms
        try:
            return self == self.ring.constant(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.as_dict().items()))

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"


def _add_terms(a: dict, b: dict, sign: int, p: int) -> dict:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + (c if sign > 0 else -c)
        if p:
            v %= p
        if v != 0:
            out[k] = v
        else:
            out.pop(k, None)
    return out


# printing and parsing

def _format_monomial(names: Sequence[str], e: Sequence[int]) -> str:
    parts = []
    for name, a in zip(names, e):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def format_poly(f: Polynomial) -> str:
    """Canonical text: degrevlex-descending terms, reduced coefficients, explicit ``*`` and ``^``."""
    if not f.terms:
        return "0"
    ring = f.ring
    codec = _codec(degrevlex, ring.nvars)
    items = sorted(((ring.exps(k), c) for k, c in f.terms.items()), key=lambda t: codec.encode(t[0]),
                   reverse=True)
    out = []
    for e, c in items:
        s = format_scalar(ring.field, c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        mono = _format_monomial(ring.names, e)
        if mono:
            body = mono if s == "1" else f"{s}*{mono}"
        else:
            body = s
        if out:
            out.append(("-" if neg else "+") + body)
        else:
            out.append(("-" if neg else "") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(.))")


def _tokenize(text: str):
    pos = 0
    toks = []
    n = len(text)
    while pos < n:
        if text[pos:].isspace():
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            toks.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            toks.append(("var", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^/":
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", start)
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``poly := term (('+'|'-') term)*`` over ``ring``; whitespace is ignored."""
    toks = _tokenize(text)
    i = 0
    field = ring.field
    terms: dict = {}
    p = field.char

    def peek():
        return toks[i]

    def take(kind):
        nonlocal i
        t = toks[i]
        if t[0] != kind:
            what = "end of input" if t[0] == "end" else repr(t[1])
            raise PolynomialSyntaxError(f"expected {kind}, found {what}", t[2])
        i += 1
        return t

    def parse_int():
        return int(take("int")[1])

    def parse_factor(e):
        t = take("var")
        if t[1] not in ring.names:
            raise PolynomialSyntaxError(f"unknown variable {t[1]!r}", t[2])
        a = 1
        if peek()[0] == "^":
            take("^")
            a = parse_int()
        e[ring.names.index(t[1])] += a

    def parse_term(sign):
        e = [0] * ring.nvars
        coeff = gmpy2.mpq(1)
        t = peek()
        if t[0] == "int":
            num = parse_int()
            den = 1
            if peek()[0] == "/":
                take("/")
                dt = peek()
                den = parse_int()
                if den == 0:
                    raise PolynomialSyntaxError("zero denominator", dt[2])
            coeff = gmpy2.mpq(num, den)
            if peek()[0] == "*":
                take("*")
                parse_factor(e)
            else:
                return coeff * sign, e
        elif t[0] == "var":
            parse_factor(e)
        else:
            what = "end of input" if t[0] == "end" else repr(t[1])
            raise PolynomialSyntaxError(f"expected a term, found {what}", t[2])
        while peek()[0] == "*":
            take("*")
            parse_factor(e)
        return coeff * sign, e

    sign = 1
    if peek()[0] in "+-":
        sign = -1 if take(peek()[0])[0] == "-" else 1
    while True:
        c, e = parse_term(sign)
        c = field(c)
        k = ring.key(e)
        v = terms.get(k, 0) + c
        if p:
            v %= p
        if v != 0:
            terms[k] = v
        else:
            terms.pop(k, None)
        t = peek()
        if t[0] == "end":
            break
        if t[0] not in "+-":
            raise PolynomialSyntaxError(f"expected '+' or '-', found {t[1]!r}", t[2])
        i += 1
        sign = -1 if t[0] == "-" else 1
    return Polynomial(ring, terms)


def print_poly(f: Polynomial) -> str:
    return format_poly(f)


# ring maps

@dataclass(frozen=True)
class RingMap:
    """Ring homomorphism sending the i-th source variable to ``images[i]``."""

    source: PolyRing
    target: PolyRing
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.source.nvars:
            raise ValueError("image count must equal the source variable count")
        self.source.field.check_same(self.target.field)
        object.__setattr__(self, "images", tuple(self.target.convert(g) for g in self.images))

    def __call__(self, f: Polynomial) -> Polynomial:
        return apply_map(self, f)


def apply_map(phi: RingMap, f: Polynomial) -> Polynomial:
    """Simultaneous substitution of the variable images into ``f``."""
    if not f.ring.compatible(phi.source):
        raise RingMismatchError("polynomial is not in the source ring of the map")
    target = phi.target
    pw: dict[tuple[int, int], Polynomial] = {}

    def power(i, a):
        key = (i, a)
        if key not in pw:
            pw[key] = phi.images[i] ** a
        return pw[key]

    total = target.zero()
    src = f.ring
    for k, c in f.terms.items():
        term = target.constant(c)
        for i, a in enumerate(src.exps(k)):
            if a:
                term = term * power(i, a)
        total = total + term
    return total


# apolar action

def apolar_act(g: Polynomial, f: Polynomial) -> Polynomial:
    """``g`` acting on ``f`` as a constant-coefficient differential operator.

    Variables are matched by position, so ``g`` may live in the dual ring
    (u, v, w) or be the same letters as ``f``.  The result lies in ``f``'s ring.
    """
    S = f.ring
    R = g.ring
    if R.nvars != S.nvars:
        raise RingMismatchError("operator and form need the same number of variables")
    R.field.check_same(S.field)
    p = S.field.char
    if not f.terms or not g.terms:
        return S.zero()
    d = f.degree()
    if p and d >= p:
        raise CharacteristicError(f"characteristic {p} must exceed the form degree {d}")
    fe = [(S.exps(k), c) for k, c in f.terms.items()]
    out: dict = {}
    for kg, cg in g.terms.items():
        a = R.exps(kg)
        for b, cf in fe:
            coef = cg * cf
            ok = True
            for bi, ai in zip(b, a):
                if bi < ai:
                    ok = False
                    break
                if ai:
                    coef *= math.perm(bi, ai)
            if not ok:
                continue
            k = S.key([bi - ai for bi, ai in zip(b, a)])
            out[k] = out.get(k, 0) + coef
    if p:
        out = {k: v % p for k, v in out.items() if v % p}
    else:
        out = {k: v for k, v in out.items() if v != 0}
    return Polynomial(S, out)


def dual_ring(S: PolyRing, names: Iterable[str] | None = None) -> PolyRing:
    """The ring of differential operators for ``S`` (u, v, w for x, y, z)."""
    if names is None:
        names = ("u", "v", "w") if S.names == ("x", "y", "z") else tuple(f"d{n}" for n in S.names)
    return PolyRing(tuple(names), S.field, S.order)


def linear_form(S: PolyRing, coords: Sequence) -> Polynomial:
    return S.from_dict({tuple(1 if j == i else 0 for j in range(S.nvars)): c for i, c in enumerate(coords)})
