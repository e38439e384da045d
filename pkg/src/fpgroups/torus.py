"""Exact normal forms for the groups <t,u,v | t = u^k = v^l>, k,l >= 2.

t is central and generates an infinite cyclic kernel; the quotient is the
free product C_k * C_l.  Every element is uniquely
t^m * (alternating word in u-syllables with exponents 1..k-1 and v-syllables
with exponents 1..l-1), which makes equality, multiplication, and the word
problem exact: syllables merge modulo k (resp. l) and carry t-powers into the
center.

Normal forms print as ``t^m u^e0 v^f0 u^e1 ...`` (``t^0`` for the identity)
and parse back through the ordinary word grammar followed by normalization.
"""

from dataclasses import dataclass

from .words import Word
from .presentations import Presentation


def _check_orders(k, l):
    if k < 2 or l < 2:
        raise ValueError("syllable orders must be >= 2, got (%d, %d)" % (k, l))


@dataclass(frozen=True)
class FreeProductWord:
    """Alternating syllable word in C_k * C_l: ("u", e) with 1 <= e < k,
    ("v", f) with 1 <= f < l, adjacent syllables of different kinds."""

    k: int
    l: int
    syllables: tuple

    def __post_init__(self):
        _check_orders(self.k, self.l)
        prev = None
        for kind, e in self.syllables:
            if kind not in ("u", "v"):
                raise ValueError("syllable kind must be 'u' or 'v'")
            bound = self.k if kind == "u" else self.l
            if not 1 <= e < bound:
                raise ValueError("syllable exponent %d out of range for %s" % (e, kind))
            if kind == prev:
                raise ValueError("adjacent syllables must alternate")
            prev = kind
        object.__setattr__(self, "syllables", tuple(self.syllables))

    def is_identity(self):
        return not self.syllables

    def __str__(self):
        if not self.syllables:
            return "1"
        return " ".join("%s^%d" % s for s in self.syllables)


@dataclass(frozen=True)
class TorusNormalForm:
    """Unique representation t^central * tail for an element of
    <t,u,v | t = u^k = v^l>."""

    k: int
    l: int
    central: int
    syllables: tuple

    def __post_init__(self):
        # Range/alternation checks are shared with FreeProductWord.
        FreeProductWord(self.k, self.l, self.syllables)
        object.__setattr__(self, "syllables", tuple(self.syllables))

    def is_identity(self):
        return self.central == 0 and not self.syllables

    def __str__(self):
        parts = []
        if self.central != 0 or not self.syllables:
            parts.append("t^%d" % self.central)
        parts.extend("%s^%d" % s for s in self.syllables)
        return " ".join(parts)

    def __repr__(self):
        return "TorusNormalForm(%d, %d, %r)" % (self.k, self.l, str(self))


class _Builder:
    """Accumulates syllables left to right, merging modulo the syllable
    order and carrying whole powers into the central exponent."""

    def __init__(self, k, l):
        self.k = k
        self.l = l
        self.central = 0
        self.syl = []

    def push(self, kind, e):
        bound = self.k if kind == "u" else self.l
        if self.syl and self.syl[-1][0] == kind:
            e += self.syl.pop()[1]
        carry, r = divmod(e, bound)
        self.central += carry
        if r:
            self.syl.append((kind, r))
        # r == 0 leaves the neighbours alternating, since the stack
        # alternated before the merge.

    def letter(self, name, exp):
        if name == "t":
            self.central += exp
        elif name in ("u", "v"):
            bound = self.k if name == "u" else self.l
            if exp == 1:
                self.push(name, 1)
            else:
                self.central -= 1
                self.push(name, bound - 1)
        else:
            raise ValueError("letter %r outside the alphabet {t, u, v}" % name)

    def result(self):
        return TorusNormalForm(self.k, self.l, self.central, tuple(self.syl))


def nf_normalize(w, k, l):
    """Normal form of a word over {t, u, v}."""
    _check_orders(k, l)
    if isinstance(w, str):
        w = Word.parse(w)
    b = _Builder(k, l)
    for name, exp in w.letters:
        b.letter(name, exp)
    return b.result()


def nf_multiply(a, b):
    if (a.k, a.l) != (b.k, b.l):
        raise ValueError("cannot multiply normal forms for (%d,%d) and (%d,%d)"
                         % (a.k, a.l, b.k, b.l))
    out = _Builder(a.k, a.l)
    out.central = a.central + b.central
    out.syl = list(a.syllables)
    for kind, e in b.syllables:
        out.push(kind, e)
    return out.result()


def nf_inverse(a):
    # (t^m s1...sn)^-1 = sn^-1...s1^-1 t^-m and each syllable inverse
    # contributes one t^-1:  (u^e)^-1 = t^-1 u^(k-e).
    out = _Builder(a.k, a.l)
    out.central = -a.central - len(a.syllables)
    for kind, e in reversed(a.syllables):
        bound = a.k if kind == "u" else a.l
        out.push(kind, bound - e)
    return out.result()


def nf_identity(k, l):
    return TorusNormalForm(k, l, 0, ())


def wp_torus(w, k, l):
    """Word problem via the normal form: trivial iff (0, empty)."""
    return nf_normalize(w, k, l).is_identity()


def project_to_free_product(nf):
    """Quotient by the center: drop the t-power.  A homomorphism onto
    C_k * C_l."""
    return FreeProductWord(nf.k, nf.l, nf.syllables)


def parse_nf(text, k, l):
    """Inverse of str(): parse `t^m u^e ...` (any word over {t,u,v} works)."""
    return nf_normalize(Word.parse(text), k, l)


def torus_presentation(k, l):
    """<t,u,v | t = u^k, t = v^l> as a Presentation."""
    _check_orders(k, l)
    return Presentation.parse("< t, u, v | t = u^%d, t = v^%d >" % (k, l))


def detect_torus(p):
    """Recognize a presentation of the form <t,u,v | t = u^k = v^l> (any
    generator names); returns (k, l, {role: name}) or None.

    Accepts two relators, each relating a bare generator occurrence to a
    power of another generator, with a common 'center' generator.
    """
    if len(p.generators) != 3 or len(p.relators) != 2:
        return None
    relations = []
    for r in p.relators:
        syllables = _syllables(r)
        if len(syllables) != 2:
            return None
        single = [s for s in syllables if abs(s[1]) == 1]
        power = [s for s in syllables if abs(s[1]) >= 2]
        if len(single) != 1 or len(power) != 1:
            return None
        (t_name, t_exp), (g_name, g_exp) = single[0], power[0]
        if t_name == g_name:
            return None
        # normalize to  t = g^n  with n >= 2
        if t_exp * g_exp > 0:
            return None
        relations.append((t_name, g_name, abs(g_exp)))
    (t1, g1, n1), (t2, g2, n2) = relations
    if t1 != t2 or g1 == g2 or {t1} & {g1, g2}:
        return None
    return n1, n2, {"t": t1, "u": g1, "v": g2}


def _syllables(w):
    out = []
    for name, exp in w.letters:
        if out and out[-1][0] == name:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([name, exp])
    return [(name, exp) for name, exp in out]


def translate_torus_word(w, names):
    """Rewrite a word over detected generator names into the {t,u,v}
    alphabet."""
    back = {v: k for k, v in names.items()}
    return Word((back[name], exp) for name, exp in w.letters)
