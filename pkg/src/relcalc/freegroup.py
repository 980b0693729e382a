"""Decision procedure for ground DGSS equalities by free reduction.

A word reduces by deleting the identity atom wherever it occurs and
cancelling adjacent mutually-inverse pairs until neither move applies.
The result is unique no matter the order (the tests compare strategies
on random words), so two words denote the same element exactly when
they reduce to the same word.  The identity is kept as a real one-atom
word; the empty word exists only inside the reduction loop.

A marked identity atom means "the inverse of the identity", which is
the identity again, so reduction deletes it like any other identity
occurrence and invert() never marks it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .terms import Atom, Word

IDENTITY = "e"


def free_reduce(w: Word, identity: str = IDENTITY) -> Word:
    """The unique reduced form of `w`: no identity atoms, no adjacent
    cancelling pair.  A word that cancels away entirely comes back as
    the one-atom identity word."""
    stack: list[Atom] = []
    for a in w:
        if a.name == identity:
            continue
        if stack and stack[-1].name == a.name and stack[-1].inverted != a.inverted:
            stack.pop()
        else:
            stack.append(a)
    return Word(tuple(stack)) if stack else Word((Atom(identity),))


def invert(w: Word, identity: str = IDENTITY) -> Word:
    """Reverse the word and flip every mark; the identity stays unmarked."""
    out = tuple(
        a if a.name == identity else Atom(a.name, not a.inverted)
        for a in reversed(w.atoms)
    )
    return Word(out)


def is_reduced(w: Word, identity: str = IDENTITY) -> bool:
    if any(a.name == identity for a in w):
        return len(w) == 1
    return all(
        w[i].name != w[i + 1].name or w[i].inverted == w[i + 1].inverted
        for i in range(len(w) - 1)
    )


def equal_dgss(u: Word, v: Word, identity: str = IDENTITY) -> bool:
    """True iff the words denote the same element; equivalently,
    free_reduce(u + invert(v)) is the identity word."""
    return free_reduce(u, identity) == free_reduce(v, identity)


# ---------------------------------------------------------------------------
# randomized re-derivation of the inverse and cancellation properties


@dataclass
class DeciderReport:
    samples: int
    seed: int
    results: dict[str, tuple[int, int]]  # property id -> (passed, total)

    @property
    def all_passed(self) -> bool:
        return all(p == t for p, t in self.results.values())

    def lines(self) -> list[str]:
        out = []
        for name in sorted(self.results):
            p, t = self.results[name]
            out.append(f"{'PASS' if p == t else 'FAIL'} {name}  [{p}/{t}]")
        return out


_NAMES = ("a", "b", "c", "d")


def _random_word(rng: random.Random, max_len: int = 6) -> Word:
    k = rng.randint(1, max_len)
    return Word(tuple(
        Atom(rng.choice(_NAMES), rng.random() < 0.5) for _ in range(k)
    ))


def _fatten(rng: random.Random, w: Word) -> Word:
    """An unreduced word equal to `w`: sprinkle identity atoms and
    cancelling pairs at random positions."""
    atoms = list(w.atoms)
    for _ in range(rng.randint(0, 3)):
        pos = rng.randint(0, len(atoms))
        if rng.random() < 0.4:
            atoms[pos:pos] = [Atom(IDENTITY)]
        else:
            name = rng.choice(_NAMES)
            marked = rng.random() < 0.5
            atoms[pos:pos] = [Atom(name, marked), Atom(name, not marked)]
    return Word(tuple(atoms))


def verify_dgss_lemmas(samples: int, seed: int) -> DeciderReport:
    """Re-derive the inverse and cancellation properties on random words.

    lm2a  left-inverting equal words gives equal (reduced) inverses
    lm2b  same for the right-inverse reading
    lm2c  two left-solutions of z ? = identity coincide
    lm2d  two right-solutions of ? z = identity coincide
    pr2e  left multiplication cancels: z x = z y iff x = y
    pr2f  right multiplication cancels: x z = y z iff x = y

    Every property is checked `samples` times with its own derived
    instances; the report carries pass counts per property.
    """
    rng = random.Random(seed)
    ident = Word((Atom(IDENTITY),))
    results = {name: [0, 0] for name in ("lm2a", "lm2b", "lm2c", "lm2d", "pr2e", "pr2f")}

    def tally(name, ok):
        results[name][1] += 1
        results[name][0] += 1 if ok else 0

    for _ in range(samples):
        x = _random_word(rng)
        y = _fatten(rng, x)  # equal to x by construction
        s, t = invert(x), invert(y)
        tally("lm2a", equal_dgss(s + x, ident) and equal_dgss(t + y, ident)
              and free_reduce(s) == free_reduce(t))
        tally("lm2b", equal_dgss(x + s, ident) and equal_dgss(y + t, ident)
              and free_reduce(s) == free_reduce(t))

        z = _random_word(rng)
        u = _fatten(rng, invert(z))  # z u = identity
        v = _fatten(rng, invert(z))  # z v = identity
        tally("lm2c", equal_dgss(z + u, ident) and equal_dgss(z + v, ident)
              and equal_dgss(u, v))
        u2 = _fatten(rng, invert(z))
        v2 = _fatten(rng, invert(z))
        tally("lm2d", equal_dgss(u2 + z, ident) and equal_dgss(v2 + z, ident)
              and equal_dgss(u2, v2))

        # cancellation, both as implication and as its converse: the pair
        # (x, y) is equal half the time and independent otherwise
        z = _random_word(rng)
        x = _random_word(rng)
        y = _fatten(rng, x) if rng.random() < 0.5 else _random_word(rng)
        tally("pr2e", equal_dgss(z + x, z + y) == equal_dgss(x, y))
        tally("pr2f", equal_dgss(x + z, y + z) == equal_dgss(x, y))

    return DeciderReport(samples, seed, {k: (v[0], v[1]) for k, v in results.items()})
