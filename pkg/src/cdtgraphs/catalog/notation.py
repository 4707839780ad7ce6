"""Vertex naming schemes and the cycle-listing format used by fixture files.

A fixture file holds one oriented cycle per line, ``NAME = (v v v ...)`` or
just ``(v v v ...)``. Lines starting with ``#`` are comments. A block

    @for x in Z5 [offset K | blocks]
    ...
    @end

repeats its cycles for every ``x`` in ``Z_m``. Without a modifier, ``x`` is
substituted into subscript expressions such as ``b_{x-2}`` or ``(x+1)_0``;
``offset K`` adds ``K*x`` to every digit-named vertex; ``blocks`` adds ``x``
to every literal block number (``4_5`` becomes ``(4+x)_5``).

A line ``@reverse NAME`` marks the cycle (or, inside-block template name,
the family of cycles) called ``NAME`` as printed against its true
direction; the parser reads it backwards unless ``as_printed`` is set.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


class NotationError(ValueError):
    pass


def _eval(expr: str, x: int | None) -> int:
    expr = expr.strip().strip("{}()").replace(" ", "")
    m = re.fullmatch(r"(-?\d+)|x(?:([+-])(\d+))?", expr)
    if m is None:
        raise NotationError(f"cannot read subscript expression {expr!r}")
    if m.group(1) is not None:
        return int(m.group(1))
    if x is None:
        raise NotationError(f"{expr!r} uses x outside an @for block")
    k = int(m.group(3) or 0)
    return x + k if m.group(2) != "-" else x - k


@dataclass
class LabeledVertexScheme:
    """Bijection between written vertex names and vertex indices.

    ``kind`` is one of

    * ``"digits"``: each vertex is one character, digit value mod ``n``;
    * ``"integers"``: decimal numbers, whitespace separated;
    * ``"letters"``: ``p_s`` with prefix ``p`` from ``prefixes`` and
      subscript ``s`` in ``Z_modulus``;
    * ``"blocks"``: ``B_j`` with block ``B`` in ``Z_modulus`` and position
      ``j`` in ``0..block_size-1``.
    """

    kind: str
    n: int
    prefixes: tuple[str, ...] = ()
    modulus: int = 0
    block_size: int = 0
    names: list[str] = field(init=False)

    def __post_init__(self):
        if self.kind == "digits":
            self.names = [DIGITS[i] for i in range(self.n)]
        elif self.kind == "integers":
            self.names = [str(i) for i in range(self.n)]
        elif self.kind == "letters":
            self.names = [f"{p}_{s}" for p in self.prefixes for s in range(self.modulus)]
        elif self.kind == "blocks":
            self.names = [f"{b}_{j}" for b in range(self.modulus) for j in range(self.block_size)]
        else:
            raise NotationError(f"unknown scheme kind {self.kind!r}")
        if len(self.names) != self.n:
            raise NotationError("scheme size does not match vertex count")
        self._index = {name: i for i, name in enumerate(self.names)}

    def name(self, v: int) -> str:
        return self.names[v]

    def index(self, name: str) -> int:
        """Index of a canonical name such as ``"u_3"``, ``"c"`` or ``"2_5"``."""
        try:
            return self._index[name]
        except KeyError:
            return self.parse_token(name)

    def parse_token(self, token: str, x: int | None = None, mode: str = "param", step: int = 0) -> int:
        if self.kind == "digits":
            if len(token) != 1 or token.lower() not in DIGITS:
                raise NotationError(f"bad digit vertex {token!r}")
            value = DIGITS.index(token.lower())
            if mode == "offset":
                value += step * x
            return value % self.n
        if self.kind == "integers":
            if not token.isdigit() or int(token) >= self.n:
                raise NotationError(f"bad vertex number {token!r}")
            return int(token)
        head, sep, sub = token.partition("_")
        if not sep or not head or not sub:
            raise NotationError(f"bad vertex token {token!r}")
        if self.kind == "letters":
            if head not in self.prefixes:
                raise NotationError(f"unknown vertex prefix {head!r}")
            return self.prefixes.index(head) * self.modulus + _eval(sub, x) % self.modulus
        block = _eval(head, x)
        if mode == "blocks":
            block += x
        pos = _eval(sub, x)
        if not 0 <= pos < self.block_size:
            raise NotationError(f"position {pos} out of range in {token!r}")
        return (block % self.modulus) * self.block_size + pos

    def parse_cycle(self, body: str, x: int | None = None, mode: str = "param", step: int = 0) -> tuple[int, ...]:
        body = body.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise NotationError(f"cycle must be parenthesised: {body!r}")
        inner = body[1:-1]
        if self.kind == "digits":
            tokens = [c for c in inner if not c.isspace() and c != ","]
        else:
            tokens = inner.replace(",", " ").split()
        return tuple(self.parse_token(t, x, mode, step) for t in tokens)

    def format_cycle(self, cycle) -> str:
        sep = "" if self.kind == "digits" else " "
        return "(" + sep.join(self.names[v] for v in cycle) + ")"


_FOR = re.compile(r"@for\s+x\s+in\s+Z(\d+)(?:\s+(offset)\s+(\d+)|\s+(blocks))?\s*$")


def parse_listing(
    text: str, scheme: LabeledVertexScheme, as_printed: bool = False
) -> list[tuple[str, tuple[int, ...]]]:
    """Parse a cycle listing into ``(name, vertex tuple)`` pairs in file order."""
    out: list[tuple[str, tuple[int, ...]]] = []
    templates: list[str] = []
    reverse: set[str] = set()
    block: list[tuple[int, str]] | None = None
    header = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("@reverse"):
            names = line.split()[1:]
            if not names:
                raise NotationError(f"line {lineno}: @reverse needs a cycle name")
            reverse.update(names)
            continue
        if line.startswith("@for"):
            m = _FOR.match(line)
            if m is None or block is not None:
                raise NotationError(f"line {lineno}: bad @for directive")
            header = m
            block = []
            continue
        if line == "@end":
            if block is None:
                raise NotationError(f"line {lineno}: @end without @for")
            modulus = int(header.group(1))
            mode = "offset" if header.group(2) else "blocks" if header.group(4) else "param"
            step = int(header.group(3) or 0)
            for x in range(modulus):
                for ln, entry in block:
                    name, body = _split(entry, ln, len(out))
                    templates.append(name)
                    out.append((name.replace("x", str(x)), scheme.parse_cycle(body, x, mode, step)))
            block = None
            continue
        if block is not None:
            block.append((lineno, line))
        else:
            name, body = _split(line, lineno, len(out))
            templates.append(name)
            out.append((name, scheme.parse_cycle(body)))
    if block is not None:
        raise NotationError("unterminated @for block")
    unknown = reverse - set(templates)
    if unknown:
        raise NotationError(f"@reverse names unknown cycles: {sorted(unknown)}")
    if not as_printed:
        out = [(name, tuple(reversed(c)) if tmpl in reverse else c)
               for (name, c), tmpl in zip(out, templates)]
    return out


def _split(line: str, lineno: int, count: int) -> tuple[str, str]:
    if "=" in line:
        name, body = line.split("=", 1)
        return name.strip(), body.strip()
    if not line.startswith("("):
        raise NotationError(f"line {lineno}: expected a cycle")
    return f"#{count}", line


def load_listing(path: Path, scheme: LabeledVertexScheme, as_printed: bool = False):
    return parse_listing(path.read_text(encoding="utf-8"), scheme, as_printed)
