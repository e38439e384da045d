"""Cayley diagrams: metric balls from a word-problem oracle, the
regular/homogeneous characterization on finite labeled digraphs, and
DOT/JSON export.

A diagram stores one directed edge per inverse-pair of generator moves (the
positively labeled one); a generator flagged involutive contributes a single
undirected edge instead.  Vertices of a ball are canonical representatives:
the first shortlex/BFS word that reached the element, with equality of
candidates delegated entirely to the oracle.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .words import Word, free_reduce
from .presentations import dehn_rules, dehn_reduce
from .torus import nf_normalize


class OracleError(RuntimeError):
    """An equality oracle failed; carries the offending word pair."""


@dataclass
class LabeledDigraph:
    """Finite directed multigraph with generator-labeled edges; loops and
    parallel edges permitted.  Not necessarily a Cayley diagram."""

    vertices: list
    edges: list                      # (from, to, label) triples
    involutions: frozenset = frozenset()

    def labels(self):
        return sorted({label for _, _, label in self.edges})


@dataclass
class CayleyDiagram:
    """Ball (or whole finite diagram) of a group: indexed vertices with a
    base vertex 0 carrying the empty word."""

    generators: list
    vertices: list                   # Word representatives; index = vertex id
    edges: list                      # (from, to, label) with positive labels
    layers: list                     # BFS layers, lists of vertex ids
    radius: int
    complete: bool
    involutions: frozenset = frozenset()

    @property
    def base(self):
        return 0

    def as_digraph(self):
        return LabeledDigraph(vertices=list(range(len(self.vertices))),
                              edges=list(self.edges),
                              involutions=self.involutions)


def _call_oracle(oracle, u, v):
    try:
        return bool(oracle(u, v))
    except Exception as exc:  # surface the failing pair
        raise OracleError("oracle failed deciding %s = %s: %s" % (u, v, exc)) from exc


def build_ball(p, oracle, radius, involutions=frozenset()):
    """BFS ball of the presented group out to the given word-metric radius.

    oracle(u, v) must decide u =_G v for words over p's generators, totally
    and correctly.  complete=True means no generator move leaves the vertex
    set, i.e. the whole (finite) group has been enumerated.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    involutions = frozenset(involutions)
    moves = []
    for g in p.generators:
        moves.append((g, 1))
        if g not in involutions:
            moves.append((g, -1))

    vertices = [Word()]
    layers = [[0]]
    frontier = [0]

    def find(w):
        for i, u in enumerate(vertices):
            if _call_oracle(oracle, w, u):
                return i
        return None

    for _ in range(radius):
        new = []
        for vi in frontier:
            base_word = vertices[vi]
            for letter in moves:
                w = free_reduce(base_word * Word([letter]))
                if find(w) is None:
                    vertices.append(w)
                    new.append(len(vertices) - 1)
        if not new:
            break
        layers.append(new)
        frontier = new

    # Edge pass: record every generator move between included vertices; any
    # move that leaves the set marks the ball incomplete.
    complete = True
    edges = []
    seen_undirected = set()
    for vi, vert in enumerate(vertices):
        for g in p.generators:
            target = find(free_reduce(vert * Word([(g, 1)])))
            if target is None:
                complete = False
                continue
            if g in involutions:
                key = (min(vi, target), max(vi, target), g)
                if key not in seen_undirected:
                    seen_undirected.add(key)
                    edges.append((vi, target, g))
            else:
                edges.append((vi, target, g))
        for g in p.generators:
            if g not in involutions:
                if find(free_reduce(vert * Word([(g, -1)]))) is None:
                    complete = False

    return CayleyDiagram(generators=list(p.generators), vertices=vertices,
                         edges=edges, layers=layers, radius=radius,
                         complete=complete, involutions=involutions)


def check_regular(d, labels=None, involutions=None):
    """Every vertex has exactly one outgoing and one incoming edge per
    non-involutive label, and exactly one incident edge per involutive
    label."""
    if isinstance(d, CayleyDiagram):
        if involutions is None:
            involutions = d.involutions
        if labels is None:
            labels = list(d.generators)
        d = d.as_digraph()
    if involutions is None:
        involutions = d.involutions
    if labels is None:
        labels = d.labels()
    out_deg = {}
    in_deg = {}
    incident = {}
    for u, v, s in d.edges:
        out_deg[(u, s)] = out_deg.get((u, s), 0) + 1
        in_deg[(v, s)] = in_deg.get((v, s), 0) + 1
        if s in involutions:
            incident[(u, s)] = incident.get((u, s), 0) + 1
            if v != u:
                incident[(v, s)] = incident.get((v, s), 0) + 1
    for vertex in d.vertices:
        for s in labels:
            if s in involutions:
                if incident.get((vertex, s), 0) != 1:
                    return False
            else:
                if out_deg.get((vertex, s), 0) != 1:
                    return False
                if in_deg.get((vertex, s), 0) != 1:
                    return False
    return True


def _move_maps(d, involutions):
    out = {}
    inc = {}
    for u, v, s in d.edges:
        if s in involutions:
            inc[(u, s)] = v
            inc[(v, s)] = u
        else:
            out[(u, s, 1)] = v
            out[(v, s, -1)] = u
    labels = d.labels()
    moves = []
    for s in labels:
        if s in involutions:
            moves.append(lambda x, s=s: inc[(x, s)])
        else:
            moves.append(lambda x, s=s: out[(x, s, 1)])
            moves.append(lambda x, s=s: out[(x, s, -1)])
    return moves


def _connected(d, moves):
    if not d.vertices:
        return True
    seen = {d.vertices[0]}
    stack = [d.vertices[0]]
    while stack:
        u = stack.pop()
        for move in moves:
            v = move(u)
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(d.vertices)


def homogeneity_extension(d, target, involutions=None):
    """Extend base -> target along labels by simultaneous traversal; returns
    the label-preserving bijection as a dict, or None if the extension
    breaks down (ill-defined or not injective)."""
    if isinstance(d, CayleyDiagram):
        if involutions is None:
            involutions = d.involutions
        d = d.as_digraph()
    if involutions is None:
        involutions = d.involutions
    moves = _move_maps(d, involutions)
    base = d.vertices[0]
    f = {base: target}
    stack = [base]
    while stack:
        u = stack.pop()
        for move in moves:
            u2 = move(u)
            v2 = move(f[u])
            if u2 in f:
                if f[u2] != v2:
                    return None
            else:
                f[u2] = v2
                stack.append(u2)
    if len(set(f.values())) != len(f):
        return None
    return f


def check_homogeneous(d, involutions=None):
    """Whether every vertex is the image of the base under a label-preserving
    automorphism, i.e. equally-labeled paths from any two origins are both
    closed or both open.  Requires a regular, connected diagram."""
    if isinstance(d, CayleyDiagram):
        if involutions is None:
            involutions = d.involutions
        d = d.as_digraph()
    if involutions is None:
        involutions = d.involutions
    if not check_regular(d, involutions=involutions):
        raise ValueError("homogeneity is only defined for regular diagrams")
    if not _connected(d, _move_maps(d, involutions)):
        raise ValueError("homogeneity check needs a connected diagram")
    return all(homogeneity_extension(d, y, involutions) is not None
               for y in d.vertices)


def family_infinite(alpha, beta):
    """Angle-sum test for the two-generator family with relator orders
    (alpha, 2, beta): infinite iff (alpha-2)/alpha + (2 beta-2)/beta >= 2,
    in exact rational arithmetic (the equality case counts as infinite)."""
    if alpha < 2 or beta < 2:
        raise ValueError("family parameters must be integers >= 2")
    total = Fraction(alpha - 2, alpha) + Fraction(2 * beta - 2, beta)
    return total >= 2


# ---------------------------------------------------------------------------
# Export

def _vertex_label(d, i):
    if isinstance(d, CayleyDiagram):
        return str(d.vertices[i])
    return str(d.vertices[i] if i < len(d.vertices) else i)


def export_dot(d, name="cayley"):
    """Deterministic DOT text; one edge per inverse-pair, involutive labels
    drawn undirected (dir=none)."""
    if isinstance(d, CayleyDiagram):
        ids = list(range(len(d.vertices)))
        labels = {i: str(d.vertices[i]) for i in ids}
        involutions = d.involutions
        edges = d.edges
    else:
        ids = list(range(len(d.vertices)))
        index = {v: i for i, v in enumerate(d.vertices)}
        labels = {i: str(v) for i, v in enumerate(d.vertices)}
        involutions = d.involutions
        edges = [(index[u], index[v], s) for u, v, s in d.edges]
    lines = ["digraph %s {" % name]
    for i in ids:
        lines.append('  v%d [label="%s"];' % (i, labels[i]))
    for u, v, s in sorted(edges):
        attrs = 'label="%s"' % s
        if s in involutions:
            attrs += ", dir=none"
        lines.append('  v%d -> v%d [%s];' % (u, v, attrs))
    lines.append("}")
    return "\n".join(lines) + "\n"


def diagram_to_json(d):
    if isinstance(d, CayleyDiagram):
        return {
            "vertices": [{"id": i, "word": str(w)} for i, w in enumerate(d.vertices)],
            "edges": [{"from": u, "to": v, "label": s, "sign": 1}
                      for u, v, s in d.edges],
            "radius": d.radius,
            "complete": d.complete,
            "generators": list(d.generators),
            "involutions": sorted(d.involutions),
        }
    return {
        "vertices": [{"id": v} for v in d.vertices],
        "edges": [{"from": u, "to": v, "label": s, "sign": 1} for u, v, s in d.edges],
        "involutions": sorted(d.involutions),
    }


def diagram_from_json(obj):
    """Rebuild a CayleyDiagram (when the schema carries words/radius) or a
    LabeledDigraph from exported JSON."""
    edges = []
    for e in obj["edges"]:
        u, v, s = e["from"], e["to"], e["label"]
        if e.get("sign", 1) == -1:
            u, v, s = v, u, s
        edges.append((u, v, s))
    involutions = frozenset(obj.get("involutions", ()))
    if obj.get("vertices") and "word" in obj["vertices"][0]:
        vertices = [Word.parse(item["word"]) for item in obj["vertices"]]
        generators = obj.get("generators") or sorted(
            {s for _, _, s in edges})
        layers = obj.get("layers") or []
        return CayleyDiagram(generators=list(generators), vertices=vertices,
                             edges=edges, layers=layers,
                             radius=obj.get("radius", 0),
                             complete=obj.get("complete", False),
                             involutions=involutions)
    return LabeledDigraph(vertices=[item["id"] for item in obj["vertices"]],
                          edges=edges, involutions=involutions)


# ---------------------------------------------------------------------------
# Word-problem oracles for ball building

def free_oracle():
    """Equality in a free group: free reduction decides."""
    def oracle(u, v):
        return len(free_reduce(u * v.inverse())) == 0
    return oracle


def coset_oracle(table):
    """Equality through a complete coset table over the trivial subgroup."""
    if not table.complete:
        raise ValueError("coset oracle needs a complete table")
    if table.subgroup:
        raise ValueError("coset oracle needs the trivial subgroup")

    def oracle(u, v):
        return table.trace(0, u) == table.trace(0, v)
    return oracle


def torus_oracle(k, l):
    """Equality in <t,u,v | t = u^k = v^l> via the exact normal form."""
    def oracle(u, v):
        return nf_normalize(u, k, l) == nf_normalize(v, k, l)
    return oracle


def free_product_oracle(k, l, u_name="u", v_name="v"):
    """Equality in C_k * C_l over two named generators, via the projected
    normal form (the central part of the cover is irrelevant)."""
    def oracle(a, b):
        def project(w):
            letters = []
            for name, exp in w.letters:
                if name == u_name:
                    letters.append(("u", exp))
                elif name == v_name:
                    letters.append(("v", exp))
                else:
                    raise ValueError("letter %r outside {%s, %s}"
                                     % (name, u_name, v_name))
            return nf_normalize(Word(letters), k, l).syllables
        return project(a) == project(b)
    return oracle


def exponent_oracle(weights):
    """Equality in Z when generator g contributes weights[g] per letter
    (e.g. {a: 1, b: 2} presents Z with b = a^2)."""
    def oracle(u, v):
        total = 0
        for name, exp in u.letters:
            total += weights[name] * exp
        for name, exp in v.letters:
            total -= weights[name] * exp
        return total == 0
    return oracle


def dehn_oracle(p):
    """Equality via Dehn reduction of u v^-1.  Correct for genuine Dehn
    presentations; otherwise a negative answer is only an assumption."""
    rules = dehn_rules(p)

    def oracle(u, v):
        return len(dehn_reduce(free_reduce(u * v.inverse()), rules).final) == 0
    return oracle
