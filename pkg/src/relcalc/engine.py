"""Rewrite systems over words, equational proof search, and proof checking.

A rule system is a small set of rewrite rules over flat words.  The
built-in systems:

    DIT    ax6: x y -> y    ax7: z y -> x      (x, y, z pairwise distinct)
    DIT+   DIT plus the admitted return rule   Lzxz: z x -> z
    DITS   DIT+ plus the symmetry rule         ax7a: y z <-> z y
    DGS    ax8: the identity atom e may be dropped when something follows it
    DGS+   DGS plus Lrxr: e may also be dropped when something precedes it
    DGSS   DGS+ plus ax9a: an adjacent pair a a' or a' a cancels

Every rule applies in both directions at any position, so provable
equality is exactly the congruence the rules generate on words.  A
proof is a chain of steps; each step cites a rule id, a direction
("lr" or "rl"), a 0-based position, and the full resulting word.  The
checker replays steps: an lr step must recompute to its recorded
result, and an rl step is valid iff applying the cited rule forward at
the same position on the recorded result restores the previous word.
That convention is what keeps the one rl case whose output is not a
function of the position (inverse-pair insertion) checkable.

Search is bidirectional breadth-first: one frontier grows from each
side of the goal and a proof is stitched together the moment the
frontiers share a word.  A cheap normalisation pass (rules oriented to
shrink words, ties broken toward the lexicographically smaller printed
form) runs first and settles most ground instances without touching
the frontiers.

Everything here is immutable; callers may share systems, proofs and
configs across threads freely.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .terms import Atom, Word, parse_equation, parse_word, print_word

GROUND = "ground"
IDENTITY_ELIM = "identity-elim"
INVERSE_CANCEL = "inverse-cancel"

LR = "lr"
RL = "rl"

SYSTEM_NAMES = ("DIT", "DIT+", "DITS", "DGS", "DGS+", "DGSS")


class RewriteError(Exception):
    pass


class NoMatch(RewriteError):
    """The rule pattern is absent at the cited position."""


class EmptyResult(RewriteError):
    """The deletion would leave no atoms at all."""


class TooLong(RewriteError):
    """The result would exceed the configured word length bound."""


@dataclass(frozen=True)
class Rule:
    """One rewrite rule.

    Ground rules carry both sides.  identity-elim carries the identity
    atom plus which neighbour legitimises a deletion: `needs="right"`
    deletes an occurrence that has something after it (the identity
    acting from the left), `needs="left"` one that has something before
    it.  inverse-cancel carries nothing; it deletes any adjacent
    mutually-inverse pair.
    """

    id: str
    kind: str = GROUND
    lhs: Word | None = None
    rhs: Word | None = None
    atom: Atom | None = None
    needs: str | None = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("rule id must be non-empty")
        if self.kind == GROUND:
            if self.lhs is None or self.rhs is None:
                raise ValueError("ground rule needs both sides")
        elif self.kind == IDENTITY_ELIM:
            if self.atom is None or self.needs not in ("left", "right"):
                raise ValueError("identity-elim rule needs its atom and a side")
        elif self.kind != INVERSE_CANCEL:
            raise ValueError(f"unknown rule kind {self.kind!r}")


@dataclass
class RuleSystem:
    name: str
    rules: tuple[Rule, ...]
    designated: dict[str, str]           # atom name -> role
    distinct: tuple[tuple[str, str], ...]  # names required to denote distinct things

    def rule_map(self) -> dict[str, Rule]:
        return {r.id: r for r in self.rules}

    @property
    def allows_inverses(self) -> bool:
        return any(r.kind == INVERSE_CANCEL for r in self.rules)

    @property
    def identity_name(self) -> str | None:
        for r in self.rules:
            if r.kind == IDENTITY_ELIM:
                return r.atom.name
        return None


_X, _Y, _Z, _E = Atom("x"), Atom("y"), Atom("z"), Atom("e")

AX6 = Rule("ax6", GROUND, lhs=Word((_X, _Y)), rhs=Word((_Y,)))
AX7 = Rule("ax7", GROUND, lhs=Word((_Z, _Y)), rhs=Word((_X,)))
LZXZ = Rule("Lzxz", GROUND, lhs=Word((_Z, _X)), rhs=Word((_Z,)))
AX7A = Rule("ax7a", GROUND, lhs=Word((_Y, _Z)), rhs=Word((_Z, _Y)))
AX8 = Rule("ax8", IDENTITY_ELIM, atom=_E, needs="right")
LRXR = Rule("Lrxr", IDENTITY_ELIM, atom=_E, needs="left")
AX9A = Rule("ax9a", INVERSE_CANCEL)

_TRIPLE_ROLES = {"x": "origin", "y": "image", "z": "return"}
_TRIPLE_DISTINCT = (("x", "y"), ("x", "z"), ("y", "z"))


def make_system(name: str) -> RuleSystem:
    """Build one of the six systems by (case-insensitive) name."""
    key = name.strip().lower()
    if key == "dit":
        return RuleSystem("DIT", (AX6, AX7), dict(_TRIPLE_ROLES), _TRIPLE_DISTINCT)
    if key == "dit+":
        return RuleSystem("DIT+", (AX6, AX7, LZXZ), dict(_TRIPLE_ROLES), _TRIPLE_DISTINCT)
    if key == "dits":
        return RuleSystem("DITS", (AX6, AX7, LZXZ, AX7A), dict(_TRIPLE_ROLES), _TRIPLE_DISTINCT)
    if key == "dgs":
        return RuleSystem("DGS", (AX8,), {"e": "identity"}, ())
    if key == "dgs+":
        return RuleSystem("DGS+", (AX8, LRXR), {"e": "identity"}, ())
    if key == "dgss":
        return RuleSystem("DGSS", (AX8, LRXR, AX9A), {"e": "identity"}, ())
    raise ValueError(f"unknown system {name!r} (expected one of {', '.join(SYSTEM_NAMES)})")


def _as_system(system: RuleSystem | str) -> RuleSystem:
    return make_system(system) if isinstance(system, str) else system


# ---------------------------------------------------------------------------
# single-step application


def apply_rule(w: Word, rule: Rule, pos: int, direction: str = LR,
               max_len: int | None = None) -> Word:
    """Apply `rule` at `pos` in the given direction.

    Raises NoMatch when the pattern is absent (including the rl case of
    inverse-cancel, whose inserted pair a position cannot determine;
    enumerate those with neighbors()), EmptyResult when a deletion
    would erase the whole word, and TooLong against `max_len`.
    """
    if direction == LR:
        out = _apply_forward(w, rule, pos)
    elif direction == RL:
        out = _apply_backward(w, rule, pos)
    else:
        raise ValueError(f"direction must be {LR!r} or {RL!r}, got {direction!r}")
    if max_len is not None and len(out) > max_len:
        raise TooLong(f"result has {len(out)} atoms, bound is {max_len}")
    return out


def _apply_forward(w: Word, rule: Rule, pos: int) -> Word:
    n = len(w)
    if rule.kind == GROUND:
        k = len(rule.lhs)
        if pos < 0 or pos + k > n or w.atoms[pos:pos + k] != rule.lhs.atoms:
            raise NoMatch(f"{rule.id}: no lr match at {pos}")
        return Word(w.atoms[:pos] + rule.rhs.atoms + w.atoms[pos + k:])
    if rule.kind == IDENTITY_ELIM:
        if pos < 0 or pos >= n or w.atoms[pos] != rule.atom:
            raise NoMatch(f"{rule.id}: no {rule.atom} at {pos}")
        if rule.needs == "right" and pos == n - 1:
            raise NoMatch(f"{rule.id}: occurrence at {pos} has no right neighbour")
        if rule.needs == "left" and pos == 0:
            raise NoMatch(f"{rule.id}: occurrence at {pos} has no left neighbour")
        return Word(w.atoms[:pos] + w.atoms[pos + 1:])
    # inverse-cancel
    if pos < 0 or pos + 2 > n:
        raise NoMatch(f"{rule.id}: no pair at {pos}")
    a, b = w.atoms[pos], w.atoms[pos + 1]
    if a.name != b.name or a.inverted == b.inverted:
        raise NoMatch(f"{rule.id}: {a} {b} is not a cancelling pair")
    if n == 2:
        raise EmptyResult("cancelling the whole word would leave nothing")
    return Word(w.atoms[:pos] + w.atoms[pos + 2:])


def _apply_backward(w: Word, rule: Rule, pos: int) -> Word:
    n = len(w)
    if rule.kind == GROUND:
        k = len(rule.rhs)
        if pos < 0 or pos + k > n or w.atoms[pos:pos + k] != rule.rhs.atoms:
            raise NoMatch(f"{rule.id}: no rl match at {pos}")
        return Word(w.atoms[:pos] + rule.lhs.atoms + w.atoms[pos + k:])
    if rule.kind == IDENTITY_ELIM:
        # insertion; legal iff deleting the inserted atom again would be
        if pos < 0 or pos > n:
            raise NoMatch(f"{rule.id}: cannot insert at {pos}")
        if rule.needs == "right" and pos == n:
            raise NoMatch(f"{rule.id}: inserted atom would have no right neighbour")
        if rule.needs == "left" and pos == 0:
            raise NoMatch(f"{rule.id}: inserted atom would have no left neighbour")
        return Word(w.atoms[:pos] + (rule.atom,) + w.atoms[pos:])
    raise NoMatch(f"{rule.id}: the inserted pair is not determined by a position")


# ---------------------------------------------------------------------------
# one-step neighbourhoods


@dataclass(frozen=True)
class ProofStep:
    rule: str
    dir: str
    pos: int
    result: Word


@dataclass(frozen=True)
class Proof:
    system: str
    hypotheses: tuple[tuple[Word, Word], ...]
    goal: tuple[Word, Word]
    steps: tuple[ProofStep, ...]
    nodes_expanded: int = field(default=0, compare=False)


def hypothesis_rules(hypotheses) -> list[Rule]:
    """Hypothesis equations as ground rules hyp1..hypN, ids stable under
    appending more hypotheses later."""
    return [Rule(f"hyp{i}", GROUND, lhs=l, rhs=r)
            for i, (l, r) in enumerate(hypotheses, 1)]


def _insertion_names(w: Word, hypotheses) -> list[str]:
    names = {a.name for a in w}
    for l, r in hypotheses:
        names.update(a.name for a in l)
        names.update(a.name for a in r)
    return sorted(names)


def neighbors(w: Word, system: RuleSystem | str, hypotheses=(),
              max_len: int = 16) -> list[tuple[Word, ProofStep]]:
    """All one-step rewrites of `w`: system rules and hypothesis
    equations, both directions, every position.  Order is position-major
    and rule-id-minor, with lr before rl; inverse-pair insertions are
    ordered by atom name, unmarked-first pair first."""
    system = _as_system(system)
    hypotheses = tuple(hypotheses)
    rules = sorted(list(system.rules) + hypothesis_rules(hypotheses),
                   key=lambda r: r.id)
    ident = system.identity_name
    out: list[tuple[Word, ProofStep]] = []
    for pos in range(len(w) + 1):
        for r in rules:
            for d in (LR, RL):
                if r.kind == INVERSE_CANCEL and d == RL:
                    if len(w) + 2 > max_len or pos > len(w):
                        continue
                    for name in _insertion_names(w, hypotheses):
                        if name == ident:
                            continue  # identity insertion is identity-elim's job
                        for first_marked in (False, True):
                            pair = (Atom(name, first_marked), Atom(name, not first_marked))
                            w2 = Word(w.atoms[:pos] + pair + w.atoms[pos:])
                            out.append((w2, ProofStep(r.id, RL, pos, w2)))
                    continue
                try:
                    w2 = apply_rule(w, r, pos, d, max_len=max_len)
                except RewriteError:
                    continue
                out.append((w2, ProofStep(r.id, d, pos, w2)))
    return out


# ---------------------------------------------------------------------------
# normalisation (the fast path, and the confluence probe for DIT+)


def _shortlex_key(w: Word):
    return (len(w), print_word(w))


def _reducers(system: RuleSystem, hypotheses) -> list[tuple[Rule, str]]:
    out = []
    for r in sorted(list(system.rules) + hypothesis_rules(hypotheses),
                    key=lambda r: r.id):
        if r.kind != GROUND:
            out.append((r, LR))
            continue
        kl, kr = _shortlex_key(r.lhs), _shortlex_key(r.rhs)
        if kl > kr:
            out.append((r, LR))
        elif kr > kl:
            out.append((r, RL))
        # identical sides reduce nothing; skip
    return out


def normalize(w: Word, system: RuleSystem | str, hypotheses=()) -> tuple[Word, tuple[ProofStep, ...]]:
    """Rewrite `w` with every rule oriented to shrink (shorter word, or
    same length and smaller printed form) until nothing applies, taking
    the leftmost redex and the smallest rule id each time.  Terminates
    because each step strictly shrinks the shortlex key; unique normal
    forms are only guaranteed where the oriented rules are confluent
    (DIT+ is, see the tests)."""
    system = _as_system(system)
    reducers = _reducers(system, tuple(hypotheses))
    steps: list[ProofStep] = []
    cur = w
    while True:
        hit = None
        for pos in range(len(cur)):
            for r, d in reducers:
                try:
                    nxt = apply_rule(cur, r, pos, d)
                except RewriteError:
                    continue
                hit = ProofStep(r.id, d, pos, nxt)
                break
            if hit:
                break
        if hit is None:
            return cur, tuple(steps)
        steps.append(hit)
        cur = hit.result


def _invert_chain(start: Word, steps) -> list[ProofStep]:
    """Steps running the chain backwards: each step keeps its rule and
    position, flips direction, and records the predecessor word."""
    words = [start]
    for s in steps:
        words.append(s.result)
    out = []
    for i in range(len(steps) - 1, -1, -1):
        s = steps[i]
        out.append(ProofStep(s.rule, RL if s.dir == LR else LR, s.pos, words[i]))
    return out


def reverse_proof(p: Proof) -> Proof:
    """The same derivation read right to left; proves the swapped goal."""
    steps = _invert_chain(p.goal[0], p.steps)
    return Proof(p.system, p.hypotheses, (p.goal[1], p.goal[0]), tuple(steps),
                 nodes_expanded=p.nodes_expanded)


# ---------------------------------------------------------------------------
# search


@dataclass(frozen=True)
class SearchConfig:
    max_word_len: int = 16
    max_nodes: int = 1_000_000
    max_depth: int = 30

    def __post_init__(self):
        if min(self.max_word_len, self.max_nodes, self.max_depth) < 1:
            raise ValueError("search bounds must be at least 1")


@dataclass(frozen=True)
class NotFound:
    """No proof within bounds.  bound_hit is "max_nodes" or "max_depth"
    when a budget stopped the search, None when both reachable sets were
    exhausted (within the word length bound) without meeting."""

    nodes_expanded: int
    bound_hit: str | None


class _Budget(Exception):
    pass


def _validate_problem(system: RuleSystem, words, config: SearchConfig):
    for w in words:
        if not system.allows_inverses and any(a.inverted for a in w):
            raise ValueError(
                f"inverse marks in {print_word(w)!r} need a system with the "
                f"inverse-cancel rule, not {system.name}")
        if len(w) > config.max_word_len:
            raise ValueError(
                f"word {print_word(w)!r} is longer than max_word_len={config.max_word_len}")


def prove_equal(goal: tuple[Word, Word], system: RuleSystem | str,
                hypotheses=(), config: SearchConfig | None = None) -> Proof | NotFound:
    """Search for a proof that the two goal words are equal.

    Hypotheses are extra ground equations, usable in both directions.
    Returns a Proof that check_proof accepts, or NotFound with the node
    count and which bound (if any) stopped the search.
    """
    system = _as_system(system)
    config = config or SearchConfig()
    hypotheses = tuple(hypotheses)
    lhs, rhs = goal
    _validate_problem(system, [lhs, rhs] + [w for h in hypotheses for w in h], config)

    if lhs == rhs:
        return Proof(system.name, hypotheses, goal, ())

    nl, ls = normalize(lhs, system, hypotheses)
    nr, rs = normalize(rhs, system, hypotheses)
    if nl == nr:
        steps = tuple(ls) + tuple(_invert_chain(rhs, rs))
        return Proof(system.name, hypotheses, goal, steps)

    # bidirectional BFS; parents map word -> (predecessor, step into word)
    fwd: dict[Word, tuple[Word | None, ProofStep | None]] = {lhs: (None, None)}
    bwd: dict[Word, tuple[Word | None, ProofStep | None]] = {rhs: (None, None)}
    f_frontier, b_frontier = [lhs], [rhs]
    f_depth = b_depth = 0
    nodes = 0

    def grow(frontier, seen, other):
        nonlocal nodes
        fresh = []
        meet = None
        for w in frontier:
            nodes += 1
            if nodes > config.max_nodes:
                raise _Budget
            for w2, step in neighbors(w, system, hypotheses, config.max_word_len):
                if w2 in seen:
                    continue
                seen[w2] = (w, step)
                fresh.append(w2)
                if w2 in other:
                    return fresh, w2
        return fresh, meet

    # For systems without inverse-cancel the one-step relation is symmetric,
    # so the bounded rewrite graph is undirected and one side exhausting its
    # connected component settles disjointness.  Pair insertion breaks that
    # symmetry (it only draws letters from the current word), so under DGSS
    # the other side must still run to completion.
    try:
        while True:
            f_can = bool(f_frontier) and f_depth < config.max_depth
            b_can = bool(b_frontier) and b_depth < config.max_depth
            if not f_can and not b_can:
                if not f_frontier and not b_frontier:
                    return NotFound(nodes, None)
                return NotFound(nodes, "max_depth")
            if f_can and (not b_can or len(f_frontier) <= len(b_frontier)):
                f_frontier, meet = grow(f_frontier, fwd, bwd)
                f_depth += 1
            else:
                b_frontier, meet = grow(b_frontier, bwd, fwd)
                b_depth += 1
            if meet is not None:
                return _stitch(system, hypotheses, goal, meet, fwd, bwd, nodes)
            if not system.allows_inverses and (not f_frontier or not b_frontier):
                return NotFound(nodes, None)
    except _Budget:
        return NotFound(nodes, "max_nodes")


def _walk(seen, w) -> list[tuple[Word, ProofStep]]:
    # edges from the root out to w, in root-to-w order
    edges = []
    cur = w
    while True:
        parent, step = seen[cur]
        if parent is None:
            break
        edges.append((parent, step))
        cur = parent
    edges.reverse()
    return edges

def _stitch(system, hypotheses, goal, meet, fwd, bwd, nodes) -> Proof:
    steps = [step for _, step in _walk(fwd, meet)]
    for parent, step in reversed(_walk(bwd, meet)):
        steps.append(ProofStep(step.rule, RL if step.dir == LR else LR,
                               step.pos, parent))
    return Proof(system.name, hypotheses, goal, tuple(steps), nodes_expanded=nodes)


# ---------------------------------------------------------------------------
# checking


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    failed_step: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_proof(p: Proof) -> CheckResult:
    """Replay a proof step by step.

    The empty proof certifies only syntactically identical sides.  An
    lr step must recompute exactly; an rl step must forward-apply on its
    recorded result back to the previous word.  The final word must be
    the goal's right-hand side.
    """
    try:
        system = make_system(p.system)
    except ValueError as e:
        return CheckResult(False, None, str(e))
    try:
        _validate_problem(system, [p.goal[0], p.goal[1]]
                          + [w for h in p.hypotheses for w in h],
                          SearchConfig(max_word_len=10 ** 9))
    except ValueError as e:
        return CheckResult(False, None, str(e))
    rules = system.rule_map()
    for r in hypothesis_rules(p.hypotheses):
        rules[r.id] = r

    cur = p.goal[0]
    for i, st in enumerate(p.steps):
        rule = rules.get(st.rule)
        if rule is None:
            return CheckResult(False, i, f"unknown rule {st.rule!r} under {system.name}")
        if st.dir == LR:
            try:
                out = apply_rule(cur, rule, st.pos, LR)
            except RewriteError as e:
                return CheckResult(False, i, str(e))
            if out != st.result:
                return CheckResult(
                    False, i,
                    f"recomputed {print_word(out)!r}, step records {print_word(st.result)!r}")
        elif st.dir == RL:
            try:
                back = apply_rule(st.result, rule, st.pos, LR)
            except RewriteError as e:
                return CheckResult(False, i, f"reverse step does not replay: {e}")
            if back != cur:
                return CheckResult(
                    False, i,
                    f"applying {st.rule} forward on the result gives "
                    f"{print_word(back)!r}, not the previous word")
        else:
            return CheckResult(False, i, f"bad direction {st.dir!r}")
        cur = st.result
    if cur != p.goal[1]:
        return CheckResult(
            False, None,
            f"chain ends at {print_word(cur)!r}, goal right-hand side is "
            f"{print_word(p.goal[1])!r}")
    return CheckResult(True)


# ---------------------------------------------------------------------------
# proof scripts (JSON)


def proof_to_dict(p: Proof) -> dict:
    return {
        "system": p.system,
        "hypotheses": [f"{print_word(l)} = {print_word(r)}" for l, r in p.hypotheses],
        "goal": f"{print_word(p.goal[0])} = {print_word(p.goal[1])}",
        "steps": [
            {"rule": s.rule, "dir": s.dir, "pos": s.pos, "result": print_word(s.result)}
            for s in p.steps
        ],
    }


def proof_to_json(p: Proof) -> str:
    return json.dumps(proof_to_dict(p), indent=2)


def proof_from_dict(data: dict) -> Proof:
    """Build a Proof from script data.  Raises ValueError on structural
    faults; word-level faults surface later in check_proof_data."""
    if not isinstance(data, dict):
        raise ValueError("proof script must be a JSON object")
    try:
        system = data["system"]
        hyp_texts = data["hypotheses"]
        goal_text = data["goal"]
        step_items = data["steps"]
    except KeyError as e:
        raise ValueError(f"proof script is missing the {e.args[0]!r} field") from None
    if not isinstance(system, str) or not isinstance(hyp_texts, list) \
            or not isinstance(goal_text, str) or not isinstance(step_items, list):
        raise ValueError("proof script field has the wrong shape")
    hypotheses = tuple(parse_equation(t) for t in hyp_texts)
    goal = parse_equation(goal_text)
    steps = []
    for i, item in enumerate(step_items):
        try:
            rule, d, pos, result = item["rule"], item["dir"], item["pos"], item["result"]
        except (TypeError, KeyError):
            raise ValueError(f"step {i} is missing a field") from None
        if not isinstance(rule, str) or not isinstance(d, str) or not isinstance(pos, int) \
                or not isinstance(result, str):
            raise ValueError(f"step {i} field has the wrong shape")
        steps.append(ProofStep(rule, d, pos, parse_word(result)))
    return Proof(system, hypotheses, goal, tuple(steps))


def check_proof_data(data: dict) -> CheckResult:
    """Check a proof script.  Result texts are compared textually: each
    must be the canonical print of its word, then the replay must
    reproduce it."""
    p = proof_from_dict(data)
    for i, item in enumerate(data["steps"]):
        if print_word(p.steps[i].result) != item["result"]:
            return CheckResult(False, i,
                               f"result text {item['result']!r} is not canonical")
    return check_proof(p)
