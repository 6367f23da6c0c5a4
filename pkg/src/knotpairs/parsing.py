"""Text and JSON forms of presentations and words.

Text grammar::

    Presentation := "<" GenList "|" RelList ">"
    GenList      := name ("," name)* | empty
    RelList      := Rel ("," Rel)* | empty
    Rel          := Word | Word "=" Word
    Word         := Factor+ | "1"
    Factor       := Atom ("^" integer | "'")*
    Atom         := name | "(" Word ")" | "[" Word "," Word "]"

``⟨ ⟩`` are accepted for ``< >``. A name that is not a declared generator but
splits uniquely into declared generators (``aba`` over ``a, b``) is read as
that product.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterable

from .errors import ParseError, PresentationError, UndeclaredSymbolError
from .presentation import Presentation
from .words import Word, commutator, free_reduce

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<name>[A-Za-z][A-Za-z0-9_]*)
  | (?P<int>[+-]?\d+)
  | (?P<op>\^|'|=|,|\||<|>|⟨|⟩|\(|\)|\[|\])
    """,
    re.VERBOSE,
)


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        tok = m.group()
        if kind == "ws":
            for i, ch in enumerate(tok):
                if ch == "\n":
                    line += 1
                    line_start = pos + i + 1
        else:
            if tok == "⟨":
                tok = "<"
            elif tok == "⟩":
                tok = ">"
            toks.append(_Tok(kind, tok, line, pos - line_start + 1))
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


@lru_cache(maxsize=1024)
def _segmentations(token: str, gens: frozenset[str]) -> list[tuple[str, ...]]:
    n = len(token)
    ways: list[list[tuple[str, ...]]] = [[] for _ in range(n + 1)]
    ways[0] = [()]
    for i in range(n):
        if not ways[i]:
            continue
        for g in gens:
            if token.startswith(g, i):
                for w in ways[i]:
                    if len(ways[i + len(g)]) < 2:
                        ways[i + len(g)].append(w + (g,))
    return ways[n]


class _Parser:
    def __init__(self, text: str, generators: Iterable[str] | None = None):
        self.toks = _tokenize(text)
        self.i = 0
        self.gens: list[str] = list(generators) if generators is not None else []

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: _Tok | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(msg, tok.line, tok.col)

    def take(self, text: str) -> _Tok:
        if self.tok.text != text or self.tok.kind == "eof":
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        t = self.tok
        self.i += 1
        return t

    def at(self, *texts: str) -> bool:
        return self.tok.kind != "eof" and self.tok.text in texts

    def presentation(self) -> Presentation:
        self.take("<")
        gens: list[str] = []
        if self.tok.kind == "name":
            while True:
                if self.tok.kind != "name":
                    raise self.error("expected generator name")
                t = self.tok
                if t.text in gens:
                    raise self.error(f"duplicate generator {t.text!r}", t)
                gens.append(t.text)
                self.i += 1
                if not self.at(","):
                    break
                self.take(",")
        self.gens = gens
        self.take("|")
        rels: list[Word] = []
        if not self.at(">"):
            while True:
                rels.append(self.relation())
                if not self.at(","):
                    break
                self.take(",")
        self.take(">")
        if self.tok.kind != "eof":
            raise self.error(f"trailing input {self.tok.text!r}")
        return Presentation(tuple(gens), tuple(rels))

    def relation(self) -> Word:
        lhs = self.word()
        if self.at("="):
            self.take("=")
            rhs = self.word()
            return free_reduce(Word(lhs.letters + rhs.inverse().letters))
        return lhs

    def word(self) -> Word:
        if self.tok.kind == "int":
            t = self.tok
            if t.text != "1":
                raise self.error("only the literal 1 may stand for a word", t)
            self.i += 1
            return Word()
        letters: list = []
        start = self.tok
        while self.tok.kind == "name" or self.at("(", "["):
            letters.extend(self.factor().letters)
        if not letters and start is self.tok:
            found = self.tok.text or "end of input"
            raise self.error(f"expected a word, found {found!r}")
        return free_reduce(Word(tuple(letters)))

    def factor(self) -> Word:
        w = self.atom()
        while self.at("^", "'"):
            if self.at("'"):
                self.take("'")
                w = w.inverse()
                continue
            self.take("^")
            if self.tok.kind != "int":
                raise self.error("expected integer exponent")
            w = w ** int(self.tok.text)
            self.i += 1
        return w

    def atom(self) -> Word:
        t = self.tok
        if t.kind == "name":
            self.i += 1
            return self.resolve(t)
        if self.at("("):
            self.take("(")
            w = self.word()
            self.take(")")
            return w
        self.take("[")
        x = self.word()
        self.take(",")
        y = self.word()
        self.take("]")
        return commutator(x, y)

    def resolve(self, t: _Tok) -> Word:
        if t.text in self.gens:
            return Word.generator(t.text)
        segs = _segmentations(t.text, frozenset(self.gens))
        if len(segs) == 1:
            return Word(tuple((g, 1) for g in segs[0]))
        if len(segs) > 1:
            raise self.error(f"ambiguous name {t.text!r}", t)
        raise UndeclaredSymbolError(t.text, f"line {t.line}, column {t.col}")


def parse_presentation(text: str) -> Presentation:
    return _Parser(text).presentation()


def parse_word(text: str, generators: Iterable[str]) -> Word:
    p = _Parser(text, generators)
    w = p.word()
    if p.tok.kind != "eof":
        raise p.error(f"trailing input {p.tok.text!r}")
    return w


def parse_relation(text: str, generators: Iterable[str]) -> Word:
    """A single relator, either ``w`` or ``u = v`` (read as ``u v^-1``)."""
    p = _Parser(text, generators)
    r = p.relation()
    if p.tok.kind != "eof":
        raise p.error(f"trailing input {p.tok.text!r}")
    return r


def format_word(w: Word) -> str:
    return str(w)


def format_presentation(p: Presentation) -> str:
    gens = ", ".join(p.generators)
    rels = ", ".join(format_word(r) for r in p.relators)
    left = f"< {gens} |" if gens else "< |"
    return f"{left} {rels} >" if rels else f"{left} >"


def presentation_to_json(p: Presentation) -> dict[str, Any]:
    return {"generators": list(p.generators), "relators": [r.to_json() for r in p.relators]}


def presentation_from_json(data: dict[str, Any]) -> Presentation:
    try:
        gens = data["generators"]
        rels = data["relators"]
    except (KeyError, TypeError) as exc:
        raise PresentationError(f"presentation JSON needs 'generators' and 'relators': {exc}")
    if not isinstance(gens, list) or not isinstance(rels, list):
        raise PresentationError("'generators' and 'relators' must be arrays")
    words = []
    for r in rels:
        if isinstance(r, str):
            words.append(parse_relation(r, gens))
        else:
            words.append(Word.from_json(r))
    return Presentation(tuple(gens), tuple(words))


def load_presentation(source: str | dict) -> Presentation:
    """Accept grammar text, a JSON string, or an already-decoded JSON object."""
    if isinstance(source, dict):
        return presentation_from_json(source)
    stripped = source.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        return presentation_from_json(data)
    return parse_presentation(source)
