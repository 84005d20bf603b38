"""Plain-text ideal files.

::

    ring x,y,z over fp:32003
    # comments and blank lines are ignored
    x*z^2 - y^3
    x^2 - y*z

The header may end with ``order lex`` (or ``degrevlex``, ``elim(k)``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .groebner import Ideal
from .polyring import MonomialOrder, PolyRing, PolynomialSyntaxError, degrevlex, format_poly
from .scalars import field_from_spec

_HEADER = re.compile(r"ring\s+(?P<names>[^\s]+(?:\s*,\s*[^\s,]+)*)\s+over\s+(?P<field>\S+)"
                     r"(?:\s+order\s+(?P<order>\S+))?\s*$", re.IGNORECASE)


class IdealFileError(ValueError):
    """Malformed ideal file; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int = 1, source: str = "<string>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.source = source


@dataclass(frozen=True)
class IdealFile:
    ring: PolyRing
    ideal: Ideal


def parse_ring_header(text: str) -> PolyRing:
    m = _HEADER.match(text.strip())
    if not m:
        raise ValueError("expected `ring <names> over <field>`")
    field = field_from_spec(m.group("field"))
    order = MonomialOrder.parse(m.group("order")) if m.group("order") else degrevlex
    names = tuple(n.strip() for n in m.group("names").split(","))
    return PolyRing(names, field, order)


def ring_header(ring: PolyRing) -> str:
    field = "qq" if ring.field.char == 0 else f"fp:{ring.field.char}"
    head = f"ring {','.join(ring.names)} over {field}"
    if ring.order != degrevlex:
        head += f" order {ring.order}"
    return head


def loads_ideal(text: str, source: str = "<string>") -> Ideal:
    ring = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        if ring is None:
            try:
                ring = parse_ring_header(line)
            except ValueError as e:
                raise IdealFileError(str(e), lineno, indent + 1, source) from None
            continue
        try:
            gens.append(ring.parse(line))
        except PolynomialSyntaxError as e:
            raise IdealFileError(str(e).rsplit(" at position", 1)[0], lineno, e.pos + 1, source) from None
    if ring is None:
        raise IdealFileError("missing ring header", 1, 1, source)
    return Ideal(gens, ring)


def dumps_ideal(I: Ideal, gens=None) -> str:
    gens = I.gens if gens is None else gens
    return "\n".join([ring_header(I.ring)] + [format_poly(g) for g in gens]) + "\n"


def read_ideal(path: str | Path) -> Ideal:
    p = Path(path)
    return loads_ideal(p.read_text(), str(p))


def write_ideal(path: str | Path, I: Ideal) -> None:
    Path(path).write_text(dumps_ideal(I))
