"""Parser and printer for the `.isg` input format.

Two shapes are accepted after a `semigroup <name>` header:

    table <n> zero <k>      followed by n rows of n element indices
    points <m>              followed by `gen <name> = <m tokens>` lines,
                            where token i is the image of point i or `_`

`#` starts a comment, blank lines are skipped.  The parser reports line
and column exactly; semantic validation beyond counts and index ranges
(injectivity, the semigroup axioms) happens at build time, not here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DslRangeError, DslSyntaxError, DuplicateName
from .semigroup import InverseSemigroup, from_partial_maps, from_table


@dataclass(frozen=True)
class SemigroupSpec:
    """Parsed description of one instance, table or generator shaped."""

    name: str
    mode: str                      # "table" | "generators"
    size: int | None = None
    zero: int | None = None
    rows: tuple | None = None
    degree: int | None = None
    generators: tuple | None = None    # ((name, images-with-None), ...)


def _tokens(text: str):
    """Significant lines as (line_number, [(column, token), ...])."""
    out = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            toks.append((col + 1, tok))
            col += len(tok)
        if toks:
            out.append((ln, toks))
    return out


def parse_spec(text: str) -> SemigroupSpec:
    lines = _tokens(text)
    if not lines:
        raise DslSyntaxError(1, 1, "a 'semigroup <name>' header")
    ln, toks = lines[0]
    if len(toks) != 2 or toks[0][1] != "semigroup":
        raise DslSyntaxError(ln, toks[0][0], "'semigroup <name>'")
    name = toks[1][1]
    if len(lines) < 2:
        raise DslSyntaxError(ln, 1, "a 'table' or 'points' declaration")
    ln, toks = lines[1]
    head = toks[0][1]
    if head == "table":
        return _parse_table(name, ln, toks, lines[2:])
    if head == "points":
        return _parse_generators(name, ln, toks, lines[2:])
    raise DslSyntaxError(ln, toks[0][0], "'table' or 'points'")


def _int_token(ln, col, tok, what):
    try:
        return int(tok)
    except ValueError:
        raise DslSyntaxError(ln, col, f"an integer {what}")


def _parse_table(name, ln, toks, rest):
    if len(toks) != 4 or toks[2][1] != "zero":
        raise DslSyntaxError(ln, toks[0][0], "'table <n> zero <k>'")
    n = _int_token(ln, toks[1][0], toks[1][1], "size")
    zero = _int_token(ln, toks[3][0], toks[3][1], "zero index")
    if n < 1:
        raise DslRangeError(ln, toks[1][0], "size must be at least 1")
    if not 0 <= zero < n:
        raise DslRangeError(ln, toks[3][0], f"zero index {zero} outside 0..{n - 1}")
    if len(rest) != n:
        where = rest[-1][0] if rest else ln
        raise DslSyntaxError(where, 1, f"{n} table rows")
    rows = []
    for rln, rtoks in rest:
        if len(rtoks) != n:
            raise DslSyntaxError(rln, rtoks[0][0], f"{n} entries in the row")
        row = []
        for col, tok in rtoks:
            v = _int_token(rln, col, tok, "table entry")
            if not 0 <= v < n:
                raise DslRangeError(rln, col, f"entry {v} outside 0..{n - 1}")
            row.append(v)
        rows.append(tuple(row))
    return SemigroupSpec(name, "table", size=n, zero=zero, rows=tuple(rows))


def _parse_generators(name, ln, toks, rest):
    if len(toks) != 2:
        raise DslSyntaxError(ln, toks[0][0], "'points <m>'")
    degree = _int_token(ln, toks[1][0], toks[1][1], "point count")
    if degree < 1:
        raise DslRangeError(ln, toks[1][0], "point count must be at least 1")
    gens = []
    names = set()
    if not rest:
        raise DslSyntaxError(ln, 1, "at least one 'gen' line")
    for gln, gtoks in rest:
        if gtoks[0][1] != "gen":
            raise DslSyntaxError(gln, gtoks[0][0], "'gen <name> = <images>'")
        if len(gtoks) != 3 + degree or gtoks[2][1] != "=":
            raise DslSyntaxError(gln, gtoks[0][0],
                                 f"'gen <name> = ' followed by {degree} tokens")
        gname = gtoks[1][1]
        if gname in names:
            raise DuplicateName(gname, gln)
        names.add(gname)
        images = []
        for col, tok in gtoks[3:]:
            if tok == "_":
                images.append(None)
                continue
            v = _int_token(gln, col, tok, "image")
            if not 0 <= v < degree:
                raise DslRangeError(gln, col, f"image {v} outside 0..{degree - 1}")
            images.append(v)
        gens.append((gname, tuple(images)))
    return SemigroupSpec(name, "generators", degree=degree, generators=tuple(gens))


def format_spec(spec: SemigroupSpec) -> str:
    """Canonical text for a spec; parsing it back gives an equal spec."""
    out = [f"semigroup {spec.name}"]
    if spec.mode == "table":
        out.append(f"table {spec.size} zero {spec.zero}")
        for row in spec.rows:
            out.append(" ".join(str(v) for v in row))
    else:
        out.append(f"points {spec.degree}")
        for gname, images in spec.generators:
            cells = " ".join("_" if v is None else str(v) for v in images)
            out.append(f"gen {gname} = {cells}")
    return "\n".join(out) + "\n"


def build_semigroup(spec: SemigroupSpec,
                    max_size: int | None = None) -> InverseSemigroup:
    """Realize a parsed spec; semigroup axioms are enforced here."""
    if spec.mode == "table":
        return from_table(spec.rows, spec.zero)
    labels = [gname for gname, _ in spec.generators]
    gens = [images for _, images in spec.generators]
    return from_partial_maps(spec.degree, gens, labels, max_size=max_size)
