"""Combinatorial area and desk-scale Dehn function estimation.

The area of a trivial word is the least number of conjugated relators whose
product equals it in the free group.  One search move splices a member of R*
into the current word at some position and freely reduces, which is exactly
one relator application; breadth-first search from w to the empty word over
freely reduced words therefore computes the area, subject to a cap on
intermediate word length.  Exact results are confirmed by re-running with
the cap raised by 2; an unstable answer is downgraded to an upper bound.

The Dehn function table enumerates all freely reduced words up to a length,
keeps the ones an oracle certifies trivial, and maximizes their areas.
"""

from dataclasses import dataclass

from .words import Word, free_reduce
from .presentations import relator_closure, _Codec, _inverse_char


@dataclass
class AreaResult:
    """kind: "exact", "upper_bound" (a witness exists, exactness not
    confirmed within caps) or "unknown".  The witness is a replayable list
    of (position, relator) insertions."""

    kind: str
    value: int
    witness: list
    nodes_expanded: int
    length_cap: int

    def replay(self, w):
        """Apply the witness insertions; must end empty in exactly
        len(witness) relator applications."""
        w = free_reduce(w)
        for pos, relator in self.witness:
            w = free_reduce(Word(w.letters[:pos]) * relator
                            * Word(w.letters[pos:]))
        return w


def _reduce_str(s):
    stack = []
    push = stack.append
    for ch in s:
        if stack and stack[-1] == _inverse_char(ch):
            stack.pop()
        else:
            push(ch)
    return "".join(stack)


def _bfs(start, relator_strs, length_cap, node_cap):
    """Shortest relator-application path from start to the empty string.

    Returns (depth, moves, nodes, capped) where moves is the witness when
    found, depth is None otherwise, and capped reports whether node_cap
    stopped the search early.
    """
    if start == "":
        return 0, [], 0, False
    visited = {start: None}  # word -> (parent, pos, relator index)
    frontier = [start]
    depth = 0
    nodes = 0
    while frontier:
        depth += 1
        next_frontier = []
        for cur in frontier:
            for ri, rs in enumerate(relator_strs):
                for pos in range(len(cur) + 1):
                    child = _reduce_str(cur[:pos] + rs + cur[pos:])
                    if len(child) > length_cap or child in visited:
                        continue
                    visited[child] = (cur, pos, ri)
                    nodes += 1
                    if child == "":
                        moves = []
                        node = ""
                        while visited[node] is not None:
                            parent, pos, ri = visited[node]
                            moves.append((pos, ri))
                            node = parent
                        moves.reverse()
                        return depth, moves, nodes, False
                    if nodes >= node_cap:
                        return None, None, nodes, True
                    next_frontier.append(child)
        frontier = next_frontier
    return None, None, nodes, False


def area(w, p, length_cap=None, node_cap=200_000, oracle=None):
    """Area of w in the presentation p by exhaustive BFS.

    length_cap bounds intermediate words (default |w| + twice the longest
    relator); node_cap bounds visited words.  An oracle(w)->bool certifying
    triviality short-circuits hopeless searches to Unknown.
    """
    w = free_reduce(p.word(w) if isinstance(w, str) else w)
    closure = relator_closure(p).sorted()
    if length_cap is None:
        longest = max((len(r) for r in closure), default=0)
        length_cap = len(w) + 2 * longest
    if length_cap < len(w):
        raise ValueError("length_cap below the word's own length")
    if len(w) == 0:
        return AreaResult("exact", 0, [], 0, length_cap)
    if oracle is not None and not oracle(w):
        return AreaResult("unknown", None, None, 0, length_cap)
    if not closure:
        return AreaResult("unknown", None, None, 0, length_cap)

    codec = _Codec(set(p.generators))
    relator_strs = [codec.encode(r) for r in closure]
    start = codec.encode(w)

    depth, moves, nodes, capped = _bfs(start, relator_strs, length_cap, node_cap)
    if depth is None:
        return AreaResult("unknown", None, None, nodes, length_cap)
    witness = [(pos, closure[ri]) for pos, ri in moves]
    # Cap-stability: exactness is only claimed when widening the corridor
    # does not reveal a shorter filling.
    depth2, _, nodes2, capped2 = _bfs(start, relator_strs, length_cap + 2,
                                      node_cap)
    total = nodes + nodes2
    if capped or capped2 or depth2 is None or depth2 < depth:
        value = depth if depth2 is None else min(depth, depth2)
        return AreaResult("upper_bound", value, witness, total, length_cap)
    return AreaResult("exact", depth, witness, total, length_cap)


@dataclass
class DehnFunctionRow:
    n: int
    delta: int
    exactness: str   # "exact" or "lower-bound"

    def as_tsv(self):
        return "%d\t%d\t%s" % (self.n, self.delta, self.exactness)


def dehn_function_estimate(p, n_max, oracle, length_cap=None,
                           node_cap=200_000, word_cap=2_000_000):
    """Table n -> delta(n) for n = 0..n_max over all freely reduced words.

    oracle(word)->bool decides triviality.  delta(n) maximizes area over the
    trivial words of length <= n; a row is exact only while every area was
    exact and no cap interfered.  Exceeding word_cap marks the remaining
    rows as lower bounds and stops the enumeration.
    """
    codec = _Codec(set(p.generators))
    alphabet = [codec.encode(Word([(g, e)])) for g in p.generators
                for e in (1, -1)]
    rows = [DehnFunctionRow(0, 0, "exact")]
    delta = 0
    exact_so_far = True
    level = [""]
    words_seen = 1
    for n in range(1, n_max + 1):
        next_level = []
        truncated = False
        for s in level:
            for ch in alphabet:
                if s and s[-1] == _inverse_char(ch):
                    continue
                next_level.append(s + ch)
                words_seen += 1
                if words_seen > word_cap:
                    truncated = True
                    break
            if truncated:
                break
        level = next_level
        for s in level:
            w = Word(codec.letters(s))
            if not oracle(w):
                continue
            result = area(w, p, length_cap=length_cap, node_cap=node_cap)
            if result.kind == "unknown":
                exact_so_far = False
                continue
            if result.kind != "exact":
                exact_so_far = False
            if result.value > delta:
                delta = result.value
        if truncated:
            exact_so_far = False
        rows.append(DehnFunctionRow(n, delta,
                                    "exact" if exact_so_far else "lower-bound"))
        if truncated:
            for m in range(n + 1, n_max + 1):
                rows.append(DehnFunctionRow(m, delta, "lower-bound"))
            break
    return rows
