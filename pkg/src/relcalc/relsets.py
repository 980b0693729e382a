"""Relational sets: a quality atom q names the collection of x with
q x = x.  Membership, subset and the function criterion are evaluated
either symbolically (bounded proof search) or inside a finite model.

Atoms map into a model carrier through the designation table or, for
digit names like `0`/`2`, directly as indices.  Symbolic questions can
come back UNDECIDED: a bounded search that finds nothing is not a
refutation, so only model universes produce definite False answers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import Proof, SearchConfig, prove_equal
from .models import Model
from .terms import Atom, Word


class _Undecided:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Undecided"


UNDECIDED = _Undecided()


@dataclass(frozen=True)
class RelSet:
    quality: Atom
    universe: object = "symbolic"  # "symbolic" or a Model

    def __post_init__(self):
        if self.quality.inverted:
            raise ValueError("a set quality must be a plain atom")

    def members(self) -> tuple[int, ...]:
        if not isinstance(self.universe, Model):
            raise ValueError("members() needs a model universe")
        m = self.universe
        q = element_of(self.quality, m)
        return tuple(c for c in range(m.size) if m.apply(q, c) == c)


def element_of(atom: Atom, m: Model) -> int:
    """Carrier element an atom denotes: designated name, or a digit
    name used as an index."""
    if atom.inverted:
        raise LookupError(f"unmapped atom {atom}: inverse marks have no model reading here")
    if atom.name in m.designated:
        return m.designated[atom.name]
    if atom.name.isdigit():
        k = int(atom.name)
        if 0 <= k < m.size:
            return k
    raise LookupError(f"unmapped atom {atom} in model of size {m.size}")


def eval_word(w: Word, m: Model) -> int:
    val = element_of(w[0], m)
    for a in w[1:]:
        val = m.apply(val, element_of(a, m))
    return val


def is_member(q: Atom, x: Word, universe="symbolic", system: str = "dgss",
              config: SearchConfig | None = None):
    """Whether x satisfies q x = x.  Model universe: table lookup,
    definite bool.  Symbolic: bounded proof search, True or UNDECIDED
    (absence of a bounded proof refutes nothing)."""
    if isinstance(universe, Model):
        qe = element_of(q, universe)
        xe = eval_word(x, universe)
        return universe.apply(qe, xe) == xe
    goal = (Word((q,) + x.atoms), x)
    res = prove_equal(goal, system, (), config)
    return True if isinstance(res, Proof) else UNDECIDED


def is_subset(b, a, m: Model) -> bool:
    """Whether every element fixed by b is fixed by a."""
    be = element_of(b, m) if isinstance(b, Atom) else b
    ae = element_of(a, m) if isinstance(a, Atom) else a
    return all(m.apply(ae, c) == c
               for c in range(m.size) if m.apply(be, c) == c)


def subset_report(b, a, m: Model) -> list[str]:
    """is_subset plus the three pointwise spot checks at x = a, x = b
    and (when they coincide) x = a = b."""
    be = element_of(b, m) if isinstance(b, Atom) else b
    ae = element_of(a, m) if isinstance(a, Atom) else a
    lines = [f"subset {be} <= {ae}: {'holds' if is_subset(be, ae, m) else 'fails'}"]

    def case(label: str, x: int):
        in_b = m.apply(be, x) == x
        in_a = m.apply(ae, x) == x
        ok = (not in_b) or in_a
        lines.append(f"case {label}: {be}*{x}={m.apply(be, x)} {ae}*{x}={m.apply(ae, x)}"
                     f" -> {'ok' if ok else 'violated'}")

    case("x=a", ae)
    case("x=b", be)
    if ae == be:
        case("x=a=b", ae)
    return lines


def is_function_rel(f: int, m: Model, a: int | None = None, b: int | None = None) -> bool:
    """Cancellation criterion: f x y = f x z forces y = z, with x
    ranging over the a-set and y, z over the b-set (whole carrier when
    no quality is given)."""
    n = m.size
    if not 0 <= f < n:
        raise LookupError(f"element {f} outside carrier 0..{n - 1}")
    dom = [x for x in range(n) if a is None or m.apply(a, x) == x]
    cod = [y for y in range(n) if b is None or m.apply(b, y) == y]
    for x in dom:
        fx = m.apply(f, x)
        seen: dict[int, int] = {}
        for y in cod:
            v = m.apply(fx, y)
            if v in seen and seen[v] != y:
                return False
            seen[v] = y
    return True


@dataclass(frozen=True)
class RussellReport:
    self_membered: tuple[int, ...]
    not_self_membered: tuple[int, ...]

    def lines(self) -> list[str]:
        out = []
        for c in sorted(self.self_membered + self.not_self_membered):
            tag = "self-membered" if c in self.self_membered else "not self-membered"
            out.append(f"{c}: {tag}")
        out.append(f"self-membered count: {len(self.self_membered)}")
        return out


def russell_report(m: Model) -> RussellReport:
    """Split the carrier by x x = x, the q = x reading of membership.
    In any table with group structure only the identity qualifies, the
    concrete face of 'there exist objects which are not their own
    elements'."""
    yes = tuple(c for c in range(m.size) if m.apply(c, c) == c)
    no = tuple(c for c in range(m.size) if m.apply(c, c) != c)
    return RussellReport(yes, no)
