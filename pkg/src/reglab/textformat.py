"""Reading and writing ideal families in the plain-text format

    ring x y z
    I1 = x, y^2, z^3
    I2 = x^4, y^3, z
"""

from __future__ import annotations

import re

from .monomial import IdealFamily, Monomial, RingContext, minimalize

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


class ParseError(ValueError):
    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def _parse_monomial(text: str, ring: RingContext, line: int, col0: int) -> Monomial:
    exps = [0] * ring.n
    index = {name: i for i, name in enumerate(ring.names)}
    by_length = sorted(ring.names, key=len, reverse=True)
    pos = 0
    seen_factor = False
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            m = re.match(r"\d+", text[pos:])
            if m.group() != "1" or seen_factor:
                raise ParseError(f"unexpected number {m.group()!r}", line, col0 + pos)
            pos += m.end()
            seen_factor = True
            continue
        name = next((v for v in by_length if text.startswith(v, pos)), None)
        if name is None:
            m = _NAME.match(text, pos)
            bad = m.group() if m else ch
            if m:
                raise ParseError(f"unknown variable {bad}", line, col0 + pos)
            raise ParseError(f"unexpected character {bad!r}", line, col0 + pos)
        pos += len(name)
        power = 1
        rest = re.match(r"\s*\^\s*(\d+)", text[pos:])
        if rest:
            power = int(rest.group(1))
            pos += rest.end()
        exps[index[name]] += power
        seen_factor = True
    if not seen_factor:
        raise ParseError("empty monomial", line, col0)
    return Monomial(tuple(exps))


def parse_family(text: str) -> IdealFamily:
    ring = None
    labels, ideals = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip()
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if ring is None:
            words = stripped.split()
            if words[0] != "ring" or len(words) < 2:
                raise ParseError("expected 'ring <variables>' first", lineno, 1)
            for w in words[1:]:
                if not _NAME.fullmatch(w):
                    raise ParseError(f"bad variable name {w!r}", lineno, line.index(w) + 1)
            try:
                ring = RingContext(tuple(words[1:]))
            except ValueError as exc:
                raise ParseError(str(exc), lineno, 1) from None
            continue
        if "=" not in line:
            raise ParseError("expected '<label> = <generators>'", lineno, 1)
        label, body = line.split("=", 1)
        label = label.strip()
        if not _NAME.fullmatch(label):
            raise ParseError(f"bad ideal label {label!r}", lineno, 1)
        offset = line.index("=") + 2
        gens = []
        for piece in body.split(","):
            if not piece.strip():
                raise ParseError("empty generator", lineno, offset)
            gens.append(_parse_monomial(piece, ring, lineno, offset))
            offset += len(piece) + 1
        labels.append(label)
        ideals.append(minimalize(gens, ring))
    if ring is None:
        raise ParseError("missing 'ring' line", 1, 1)
    if not ideals:
        raise ParseError("no ideals given", 1, 1)
    return IdealFamily(ring, tuple(ideals), tuple(labels))


def format_family(family: IdealFamily) -> str:
    lines = ["ring " + " ".join(family.ring.names)]
    for label, I in zip(family.labels, family.ideals):
        lines.append(f"{label} = " + ", ".join(g.to_string(family.ring) for g in I.gens))
    return "\n".join(lines) + "\n"
