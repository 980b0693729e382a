"""Terms of an application-only calculus, and their flat word form.

Concrete syntax::

    term     := atom | '(' term term+ ')' | '[' term term+ ']'
    atom     := [A-Za-z0-9_]+ optionally followed by one apostrophe
    equation := term '=' term

Juxtaposition associates to the left, at the top level too, so
``z y y`` reads as ``(z y) y``.  Brackets and parentheses are
interchangeable but each close must match its open.  A parenthesised
single term denotes the term itself.

Application is associative by fiat, so a term is determined up to
provable equality by its sequence of leaves.  ``flatten`` computes that
sequence as a :class:`Word` and everything downstream of the parser
works on words; regrouping steps never appear in proofs because they
are erased here.

The apostrophe marks a formal inverse.  Only the free-reduction
decider (and the proof engine when the active system carries the
inverse-cancel rule) gives it meaning; every other consumer treats a
marked atom as bad input at its own boundary.

>>> print_word(flatten(parse("[[z y] y]")))
'z y y'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

__all__ = [
    "Atom",
    "Node",
    "TermTree",
    "Word",
    "ParseError",
    "parse",
    "parse_word",
    "parse_equation",
    "flatten",
    "print_word",
]

_NAME_CHARS = frozenset(
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_"
)


class ParseError(ValueError):
    """Lexical or structural fault; `offset` is a byte offset into the input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"offset {offset}: {message}")
        self.message = message
        self.offset = offset


@dataclass(frozen=True)
class Atom:
    name: str
    inverted: bool = False

    def __post_init__(self):
        if not self.name or not set(self.name) <= _NAME_CHARS:
            raise ValueError(f"bad atom name {self.name!r}")

    def __str__(self) -> str:
        return self.name + ("'" if self.inverted else "")


@dataclass(frozen=True)
class Node:
    """One application.  The tree shape carries no information beyond the
    leaf order once flattened, but the parser still builds it so that
    grouping in the input can be inspected when debugging."""

    left: "TermTree"
    right: "TermTree"


TermTree = Union[Atom, Node]


@dataclass(frozen=True)
class Word:
    """A non-empty sequence of atoms, the canonical form of a term."""

    atoms: tuple[Atom, ...]

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        if not self.atoms:
            raise ValueError("a word holds at least one atom")

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.atoms)

    def __getitem__(self, i):
        return self.atoms[i]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.atoms + other.atoms)

    def __str__(self) -> str:
        return print_word(self)


def print_word(w: Word) -> str:
    return " ".join(str(a) for a in w)


# ---------------------------------------------------------------------------
# lexing


_OPEN = {"(": ")", "[": "]"}
_CLOSE = {")", "]"}


def _lex(text: str):
    """Yield (kind, value, offset) triples; kind is 'atom', 'open' or 'close'."""
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
            continue
        if c in _OPEN:
            yield ("open", c, i)
            i += 1
            continue
        if c in _CLOSE:
            yield ("close", c, i)
            i += 1
            continue
        if c in _NAME_CHARS:
            j = i
            while j < n and text[j] in _NAME_CHARS:
                j += 1
            name = text[i:j]
            inverted = False
            if j < n and text[j] == "'":
                inverted = True
                j += 1
                if j < n and text[j] == "'":
                    raise ParseError("doubled inversion mark", j)
            yield ("atom", Atom(name, inverted), i)
            i = j
            continue
        if c == "'":
            raise ParseError("inversion mark must follow an atom", i)
        raise ParseError(f"unexpected character {c!r}", i)


# ---------------------------------------------------------------------------
# parsing


def _combine(items: list[TermTree]) -> TermTree:
    # left-associative fold; a singleton stays itself
    out = items[0]
    for t in items[1:]:
        out = Node(out, t)
    return out


def parse(text: str) -> TermTree:
    """Parse `text` into a term tree.

    Raises :class:`ParseError` with a byte offset for stray characters,
    unbalanced or mismatched delimiters, and empty groups or input.
    """
    # each frame: (closing char expected or None, offset of the open, items)
    stack: list[tuple[str | None, int, list[TermTree]]] = [(None, 0, [])]
    for kind, value, offset in _lex(text):
        if kind == "atom":
            stack[-1][2].append(value)
        elif kind == "open":
            stack.append((_OPEN[value], offset, []))
        else:
            expected, open_offset, items = stack[-1]
            if expected is None:
                raise ParseError(f"unmatched {value!r}", offset)
            if value != expected:
                raise ParseError(
                    f"mismatched delimiter: {value!r} closes the group opened at "
                    f"offset {open_offset}", offset)
            if not items:
                raise ParseError("empty group", offset)
            stack.pop()
            stack[-1][2].append(_combine(items))
    if len(stack) > 1:
        raise ParseError("unclosed group", stack[-1][1])
    if not stack[0][2]:
        raise ParseError("empty input", 0)
    return _combine(stack[0][2])


def flatten(t: TermTree) -> Word:
    """The in-order leaf sequence of `t`.  Iterative; input nesting depth
    does not hit the interpreter recursion limit."""
    out: list[Atom] = []
    todo: list[TermTree] = [t]
    while todo:
        cur = todo.pop()
        if isinstance(cur, Atom):
            out.append(cur)
        else:
            todo.append(cur.right)
            todo.append(cur.left)
    return Word(tuple(out))


def parse_word(text: str) -> Word:
    return flatten(parse(text))


def parse_equation(text: str) -> tuple[Word, Word]:
    """Split `text` at its single '=' and parse both sides."""
    positions = [i for i, c in enumerate(text) if c == "="]
    if not positions:
        raise ParseError("expected '=' between two terms", len(text))
    if len(positions) > 1:
        raise ParseError("more than one '='", positions[1])
    cut = positions[0]
    lhs = parse_word(text[:cut])
    try:
        rhs = parse_word(text[cut + 1:])
    except ParseError as e:
        raise ParseError(e.message, e.offset + cut + 1) from None
    return lhs, rhs
