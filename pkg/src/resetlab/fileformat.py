"""The automaton file format.

Line 1 (ignoring blank and ``#`` comment lines): ``n <int>``.  Then one
line per generator: ``gen <name> <img1> ... <imgn>``, whitespace-separated,
1-indexed images.  Generator order in the file is the declaration order
used for tie-breaking, and round-trips through render/parse.
"""

from __future__ import annotations

from .automaton import Automaton
from .errors import ParseError
from .transform import Transformation


def parse_automaton(text: str) -> Automaton:
    n = None
    generators: list[tuple[str, Transformation]] = []
    names: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if n is not None:
                raise ParseError("duplicate n line", line=lineno)
            if len(tokens) != 2:
                raise ParseError("expected exactly `n <int>`", line=lineno)
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(f"state count {tokens[1]!r} is not an integer", line=lineno) from None
            if n < 1:
                raise ParseError(f"state count must be >= 1, got {n}", line=lineno)
            continue
        if tokens[0] == "gen":
            if n is None:
                raise ParseError("generator before the n line", line=lineno)
            if len(tokens) < 2:
                raise ParseError("generator line needs a name", line=lineno)
            name = tokens[1]
            if name in names:
                raise ParseError(f"duplicate generator name {name!r}", line=lineno)
            raw_images = tokens[2:]
            if len(raw_images) != n:
                raise ParseError(
                    f"generator {name!r} has {len(raw_images)} images, expected {n}",
                    line=lineno,
                )
            images = []
            for token in raw_images:
                try:
                    v = int(token)
                except ValueError:
                    raise ParseError(f"image {token!r} is not an integer", line=lineno) from None
                if not 1 <= v <= n:
                    raise ParseError(f"image {v} outside 1..{n}", line=lineno)
                images.append(v)
            names.add(name)
            generators.append((name, Transformation(n, tuple(images))))
            continue
        raise ParseError(f"unrecognized directive {tokens[0]!r}", line=lineno)
    if n is None:
        raise ParseError("missing n line", line=None)
    return Automaton.of(n, generators)


def render_automaton(a: Automaton) -> str:
    lines = [f"n {a.n}"]
    for name, t in a.generators:
        lines.append("gen " + name + " " + " ".join(str(v) for v in t.images))
    return "\n".join(lines) + "\n"
