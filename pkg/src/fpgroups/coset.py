"""Todd-Coxeter coset enumeration (HLT strategy with coincidence stack).

The table rows are cosets (coset 0 is the subgroup), the columns are
generators interleaved with their inverses (column 2i for generator i,
column 2i+1 for its inverse), and -1 marks an undefined entry.  Coincidences
are processed with a union-find whose queue re-installs every edge of a dying
coset at the surviving representatives, so live rows always point at live
cosets between scans.

Enumeration is a mutable single-threaded state machine; completed tables are
immutable in practice and safe to share.
"""

from .words import Word


class CosetTable:
    """Result of an enumeration: either complete or overflowed(limit).

    A complete table with trivial subgroup is the regular action of the
    group on itself, so its size is the group order.
    """

    def __init__(self, presentation, subgroup, table, complete, max_cosets):
        self.presentation = presentation
        self.generators = list(presentation.generators)
        self.subgroup = list(subgroup)
        self.table = table
        self.complete = complete
        self.max_cosets = max_cosets
        self._col = {}
        for i, g in enumerate(self.generators):
            self._col[(g, 1)] = 2 * i
            self._col[(g, -1)] = 2 * i + 1

    @property
    def n_cosets(self):
        return len(self.table)

    @property
    def status(self):
        return "complete" if self.complete else "overflowed(%d)" % self.max_cosets

    def columns(self, w):
        return [self._col[letter] for letter in w.letters]

    def trace(self, coset, w):
        """Follow w from a coset; None as soon as an entry is undefined."""
        for x in self.columns(w):
            coset = self.table[coset][x]
            if coset < 0:
                return None
        return coset

    def validate(self):
        """Check inverse-column consistency, that every relator traces every
        coset to itself, and that subgroup generators fix coset 0."""
        ncols = 2 * len(self.generators)
        for c, row in enumerate(self.table):
            for x in range(ncols):
                d = row[x]
                if d < 0:
                    if self.complete:
                        raise AssertionError("undefined entry in complete table")
                    continue
                if self.table[d][x ^ 1] != c:
                    raise AssertionError(
                        "inverse columns inconsistent at coset %d column %d" % (c, x))
        if self.complete:
            for r in self.presentation.relators:
                for c in range(len(self.table)):
                    if self.trace(c, r) != c:
                        raise AssertionError("relator %s does not fix coset %d" % (r, c))
            for w in self.subgroup:
                if self.trace(0, w) != 0:
                    raise AssertionError("subgroup generator %s moves coset 0" % (w,))
        return True

    def __repr__(self):
        return "CosetTable(%d cosets, %s)" % (self.n_cosets, self.status)


class _Enumerator:
    def __init__(self, presentation, subgroup, max_cosets):
        self.presentation = presentation
        self.max_cosets = max_cosets
        self.ncols = 2 * len(presentation.generators)
        col = {}
        for i, g in enumerate(presentation.generators):
            col[(g, 1)] = 2 * i
            col[(g, -1)] = 2 * i + 1
        self.col = col
        self.relators = [self._cols(r) for r in presentation.relators if len(r)]
        self.subgroup = [self._cols(w) for w in subgroup]
        self.table = [[-1] * self.ncols]
        self.p = [0]
        self.overflowed = False

    def _cols(self, w):
        return [self.col[letter] for letter in w.letters]

    def _rep(self, c):
        p = self.p
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def _define(self, alpha, x):
        if len(self.table) >= self.max_cosets:
            self.overflowed = True
            raise _Overflow
        beta = len(self.table)
        self.table.append([-1] * self.ncols)
        self.p.append(beta)
        self.table[alpha][x] = beta
        self.table[beta][x ^ 1] = alpha
        return beta

    def _merge(self, a, b, queue):
        a = self._rep(a)
        b = self._rep(b)
        if a != b:
            if a > b:
                a, b = b, a
            self.p[b] = a
            queue.append(b)

    def _coincidence(self, a, b):
        table = self.table
        queue = []
        self._merge(a, b, queue)
        while queue:
            e = queue.pop()
            for x in range(self.ncols):
                delta = table[e][x]
                if delta < 0:
                    continue
                table[delta][x ^ 1] = -1
                mu = self._rep(e)
                nu = self._rep(delta)
                if table[mu][x] >= 0:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] >= 0:
                    self._merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def _scan_and_fill(self, alpha, word):
        table = self.table
        f = b = alpha
        fi, bi = 0, len(word) - 1
        while True:
            while fi <= bi:
                delta = table[f][word[fi]]
                if delta < 0:
                    break
                f = delta
                fi += 1
            if fi > bi:
                if f != b:
                    self._coincidence(f, b)
                return
            while bi >= fi:
                delta = table[b][word[bi] ^ 1]
                if delta < 0:
                    break
                b = delta
                bi -= 1
            if bi < fi:
                self._coincidence(f, b)
                return
            if bi == fi:
                table[f][word[fi]] = b
                table[b][word[fi] ^ 1] = f
                return
            self._define(f, word[fi])

    def run(self):
        try:
            for w in self.subgroup:
                self._scan_and_fill(0, w)
            alpha = 0
            while alpha < len(self.table):
                if self.p[alpha] == alpha:
                    for rel in self.relators:
                        self._scan_and_fill(alpha, rel)
                        if self.p[alpha] != alpha:
                            break
                    if self.p[alpha] == alpha:
                        for x in range(self.ncols):
                            if self.table[alpha][x] < 0:
                                self._define(alpha, x)
                alpha += 1
        except _Overflow:
            pass
        return self._compress()

    def _compress(self):
        live = [c for c in range(len(self.table)) if self.p[c] == c]
        renumber = {c: i for i, c in enumerate(live)}
        rows = []
        for c in live:
            row = []
            for x in range(self.ncols):
                d = self.table[c][x]
                row.append(renumber[self._rep(d)] if d >= 0 else -1)
            rows.append(row)
        return rows


class _Overflow(Exception):
    pass


def enumerate_cosets(p, subgroup_gens=(), max_cosets=1_000_000):
    """HLT enumeration of the cosets of <subgroup_gens> in the presented
    group.  Overflow is reported in the table status, not raised."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    subgroup = [p.word(w) for w in subgroup_gens]
    enum = _Enumerator(p, subgroup, max_cosets)
    rows = enum.run()
    table = CosetTable(p, subgroup, rows, complete=not enum.overflowed,
                       max_cosets=max_cosets)
    if table.complete:
        table.validate()
    return table


def group_order(t):
    """Coset count of a complete table over the trivial subgroup; None
    (unknown) for overflowed tables."""
    if t.subgroup:
        raise ValueError("group order needs a table over the trivial subgroup")
    if not t.complete:
        return None
    return t.n_cosets


def wp_finite(w, t, check_all=False):
    """Word problem through the regular action: trace from coset 0.

    With check_all the stronger property is asserted: the word fixes every
    coset, which the regular action makes equivalent.
    """
    if not t.complete:
        raise ValueError("word problem needs a complete coset table")
    if t.subgroup:
        raise ValueError("word problem needs the trivial subgroup")
    w = t.presentation.word(w) if isinstance(w, str) else w
    fixed = t.trace(0, w) == 0
    if check_all:
        for c in range(t.n_cosets):
            if (t.trace(c, w) == c) != fixed:
                raise AssertionError("regular action is inconsistent for %s" % (w,))
    return fixed


def to_permutation_rep(t):
    """Each generator as the permutation c -> table[c][g] of the cosets."""
    if not t.complete:
        raise ValueError("permutation representation needs a complete table")
    perms = {}
    for i, g in enumerate(t.generators):
        perms[g] = tuple(row[2 * i] for row in t.table)
    return perms


def permutation_of_word(t, w):
    """Compose generator permutations along a word (for relator checks)."""
    perms = to_permutation_rep(t)
    n = t.n_cosets
    result = tuple(range(n))
    for name, exp in (t.presentation.word(w) if isinstance(w, str) else w).letters:
        perm = perms[name]
        if exp < 0:
            inv = [0] * n
            for a, b in enumerate(perm):
                inv[b] = a
            perm = tuple(inv)
        result = tuple(perm[c] for c in result)
    return result
