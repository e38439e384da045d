"""Knot diagrams from PD codes; Wirtinger and face (Dehn-style)
presentations, peripheral system, and surgery presentations.

PD text format:

    PD[X[1,4,2,5]s-, X[3,6,4,1]s-, X[5,2,6,3]s-]      (a trefoil)
    PD[U]                                             (0-crossing unknot)

Each crossing lists the four incident edge labels counterclockwise starting
at the incoming understrand; edges are numbered 1..2n along the knot's
orientation, so the edge after e is e % 2n + 1.  The s+/s- suffix is the
crossing sign: s+ means the overstrand runs from the fourth listed edge to
the second (left to right as seen by the traveler going under); s- the other
way.  The sign must agree with the direction forced by the edge numbering
(for 1-crossing kinks the numbering allows both, and the sign decides).

Arcs in the Wirtinger sense are maximal runs of edges through overcrossings;
there are exactly n of them and they are named a, b, c, ... in traversal
order starting with the arc containing edge 1.  Faces are traced from the
rotation system; codes whose rotation system is not planar (bounded faces
!= n + 1) are rejected.

Conventions: at a crossing of sign eps the Wirtinger relation is
out = over^-eps in over^eps, and the §-style parallel recipe records the
overstrand with exponent eps at each underpass (left-to-right = +1).  The
convention="right-left" flag flips both globally.
"""

import re
import string
from dataclasses import dataclass

from .words import Word, free_reduce
from .presentations import Presentation


class PDSyntaxError(ValueError):
    pass


class PDConsistencyError(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    edges: tuple    # (a, b, c, d) counterclockwise from the incoming understrand
    sign: int       # +1: overstrand runs d -> b; -1: b -> d

    @property
    def under_in(self):
        return self.edges[0]

    @property
    def under_out(self):
        return self.edges[2]

    @property
    def over_in(self):
        return self.edges[3] if self.sign > 0 else self.edges[1]

    @property
    def over_out(self):
        return self.edges[1] if self.sign > 0 else self.edges[3]


class KnotDiagram:
    """Validated single-component oriented diagram.

    crossings: list of Crossing; n crossings and 2n edges (0-crossing unknot:
    no edges, one arc).  arcs: lists of edge labels, traversal order, arc 0
    containing edge 1.  faces: lists of (crossing index, entry slot) corners;
    unbounded_face indexes into faces.
    """

    def __init__(self, crossings):
        self.crossings = list(crossings)
        self.n = len(self.crossings)
        self._validate_edges()
        self.arcs = self._build_arcs()
        self.arc_of_edge = {}
        for i, arc in enumerate(self.arcs):
            for e in arc:
                self.arc_of_edge[e] = i
        self.faces, self._entry_face = self._trace_faces()
        bounded = self.n + 1 if self.n else 1
        if len(self.faces) != bounded + 1:
            raise PDConsistencyError(
                "rotation system is not planar: %d faces for %d crossings"
                % (len(self.faces), self.n))
        self.unbounded_face = self._pick_unbounded()

    # -- validation -------------------------------------------------------

    def _succ(self, e):
        return e % (2 * self.n) + 1

    def _validate_edges(self):
        n = self.n
        if n == 0:
            return
        counts = {}
        for x in self.crossings:
            for e in x.edges:
                if not 1 <= e <= 2 * n:
                    raise PDConsistencyError(
                        "edge label %d out of range 1..%d" % (e, 2 * n))
                counts[e] = counts.get(e, 0) + 1
        for e in range(1, 2 * n + 1):
            if counts.get(e, 0) != 2:
                raise PDConsistencyError(
                    "edge %d appears %d times, expected exactly 2"
                    % (e, counts.get(e, 0)))
        heads = []
        tails = []
        for i, x in enumerate(self.crossings):
            if x.under_out != self._succ(x.under_in):
                raise PDConsistencyError(
                    "crossing %d: understrand %d -> %d breaks the numbering"
                    % (i, x.under_in, x.under_out))
            if x.over_out != self._succ(x.over_in):
                raise PDConsistencyError(
                    "crossing %d: sign %+d is inconsistent with the edge "
                    "numbering" % (i, x.sign))
            heads += [x.under_in, x.over_in]
            tails += [x.under_out, x.over_out]
        if sorted(heads) != list(range(1, 2 * n + 1)):
            dup = [e for e in heads if heads.count(e) > 1]
            raise PDConsistencyError(
                "edge(s) %s end at two crossings; code is inconsistent"
                % sorted(set(dup)))
        if sorted(tails) != list(range(1, 2 * n + 1)):
            raise PDConsistencyError("edge tails do not cover every edge")

    # -- arcs -------------------------------------------------------------

    def _build_arcs(self):
        if self.n == 0:
            return [(1,)]
        under_in = {x.under_in for x in self.crossings}
        starts = sorted(x.under_out for x in self.crossings)
        arcs = []
        for start in starts:
            arc = [start]
            e = start
            while e not in under_in:
                e = self._succ(e)
                arc.append(e)
            arcs.append(tuple(arc))
        first = next(i for i, arc in enumerate(arcs) if 1 in arc)
        return arcs[first:] + arcs[:first]

    # -- faces ------------------------------------------------------------

    def _half_edges(self):
        """edge -> list of (crossing, slot) incidences (length 2)."""
        where = {}
        for ci, x in enumerate(self.crossings):
            for slot, e in enumerate(x.edges):
                where.setdefault(e, []).append((ci, slot))
        return where

    def _trace_faces(self):
        if self.n == 0:
            return [((),), ((),)], {}
        where = self._half_edges()
        # A directed face step enters a crossing via slot s (walking along
        # the edge at slot s toward the crossing) and leaves via slot s+1.
        steps = {(ci, slot) for ci, x in enumerate(self.crossings)
                 for slot in range(4)}
        faces = []
        entry_face = {}
        remaining = sorted(steps)
        used = set()
        for start in remaining:
            if start in used:
                continue
            face = []
            cur = start
            while cur not in used:
                used.add(cur)
                entry_face[cur] = len(faces)
                face.append(cur)
                ci, slot = cur
                out_slot = (slot + 1) % 4
                e = self.crossings[ci].edges[out_slot]
                ends = where[e]
                # traverse e away from (ci, out_slot) to its other incidence
                cur = ends[1] if ends[0] == (ci, out_slot) else ends[0]
            faces.append(tuple(face))
        return faces, entry_face

    def _pick_unbounded(self):
        if self.n == 0:
            return 1
        def key(i):
            face = self.faces[i]
            edges = sorted(self.crossings[ci].edges[(slot + 1) % 4]
                           for ci, slot in face)
            return (-len(face), edges)
        return min(range(len(self.faces)), key=key)

    def face_edges(self, i):
        return sorted(self.crossings[ci].edges[(slot + 1) % 4]
                      for ci, slot in self.faces[i])

    # -- naming -----------------------------------------------------------

    @staticmethod
    def _names(count, prefix="s"):
        if count <= 26:
            return list(string.ascii_lowercase[:count])
        return ["%s%d" % (prefix, i + 1) for i in range(count)]

    def arc_names(self):
        return self._names(max(len(self.arcs), 1))

    def __repr__(self):
        return "KnotDiagram(%d crossings, %d arcs)" % (self.n, len(self.arcs))


# ---------------------------------------------------------------------------
# Parsing

_CROSSING_RE = re.compile(
    r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]\s*s([+-])")


def parse_pd(text):
    """Parse and validate PD text; see the module docstring for the format."""
    stripped = re.sub(r"#[^\n]*", "", text).strip()
    m = re.fullmatch(r"PD\[(.*)\]", stripped, re.DOTALL)
    if not m:
        raise PDSyntaxError("PD code must look like PD[X[a,b,c,d]s+, ...] or PD[U]")
    body = m.group(1).strip()
    if body == "U":
        return KnotDiagram([])
    crossings = []
    pos = 0
    while pos < len(body):
        cm = _CROSSING_RE.match(body, pos)
        if not cm:
            raise PDSyntaxError("malformed crossing at %r" % body[pos:pos + 24])
        a, b, c, d = (int(cm.group(i)) for i in range(1, 5))
        sign = 1 if cm.group(5) == "+" else -1
        crossings.append(Crossing(edges=(a, b, c, d), sign=sign))
        pos = cm.end()
        rest = body[pos:].lstrip()
        if rest.startswith(","):
            pos = len(body) - len(rest) + 1
        elif rest:
            raise PDSyntaxError("expected ',' between crossings near %r" % rest[:24])
        else:
            break
    if not crossings:
        raise PDSyntaxError("empty PD code; use PD[U] for the unknot")
    return KnotDiagram(crossings)


def _convention_sign(convention):
    if convention == "left-right":
        return 1
    if convention == "right-left":
        return -1
    raise ValueError("convention must be 'left-right' or 'right-left'")


# ---------------------------------------------------------------------------
# Presentations

def wirtinger(d, convention="left-right", drop_redundant=False):
    """One generator per arc, one conjugation relation per crossing:
    out = over^-eps in over^eps.  Returns (presentation, meridian); the
    meridian is the first arc's generator.  One relation is always redundant
    and can be dropped with drop_redundant."""
    flip = _convention_sign(convention)
    names = d.arc_names()
    relators = []
    for x in d.crossings:
        eps = x.sign * flip
        s_in = names[d.arc_of_edge[x.under_in]]
        s_out = names[d.arc_of_edge[x.under_out]]
        over = names[d.arc_of_edge[x.over_in]]
        relators.append(free_reduce(Word([(over, -eps), (s_in, 1), (over, eps),
                                          (s_out, -1)])))
    if drop_redundant and relators:
        relators = relators[:-1]
    return Presentation(names, relators), Word([(names[0], 1)])


def dehn_presentation(d):
    """One generator per bounded face, one relation per crossing: the four
    corner faces in cyclic order with alternating exponents, the unbounded
    face contributing the identity."""
    bounded = [i for i in range(len(d.faces)) if i != d.unbounded_face]
    bounded.sort(key=lambda i: (d.face_edges(i), i))
    names = {}
    labels = KnotDiagram._names(max(len(bounded), 1), prefix="f")
    for label, i in zip(labels, bounded):
        names[i] = label
    relators = []
    for ci in range(d.n):
        letters = []
        for slot in range(4):
            face = d._entry_face[(ci, slot)]
            if face == d.unbounded_face:
                continue
            letters.append((names[face], 1 if slot % 2 == 0 else -1))
        relators.append(free_reduce(Word(letters)))
    return Presentation([names[i] for i in bounded], relators)


@dataclass
class PeripheralSystem:
    meridian: Word
    parallel: Word


def peripheral(d, convention="left-right"):
    """Walk the knot from the midpoint of the first arc; at every underpass
    record the overstrand generator with the left-right sign; close with
    meridian^k so the total exponent sum is zero."""
    flip = _convention_sign(convention)
    names = d.arc_names()
    meridian = Word([(names[0], 1)])
    if d.n == 0:
        return PeripheralSystem(meridian=meridian, parallel=Word())
    crossing_at_head = {x.under_in: x for x in d.crossings}
    letters = []
    total = 0
    for arc in d.arcs:
        x = crossing_at_head[arc[-1]]
        eps = x.sign * flip
        letters.append((names[d.arc_of_edge[x.over_in]], eps))
        total += eps
    letters.extend([(names[0], 1 if -total > 0 else -1)] * abs(total))
    return PeripheralSystem(meridian=meridian, parallel=Word(letters))


def surgery_presentation(d, k, convention="left-right"):
    """Knot group plus the filling relation meridian * parallel^-k."""
    pres, meridian = wirtinger(d, convention=convention)
    system = peripheral(d, convention=convention)
    filling = free_reduce(meridian * system.parallel ** (-k))
    return Presentation(pres.generators, pres.relators + [filling])
