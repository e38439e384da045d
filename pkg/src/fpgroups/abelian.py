"""Abelianization invariants via integer Smith normal form.

The exponent matrix of a presentation has one row per relator and one column
per generator; the entry is the total signed exponent of the generator in the
relator.  Its Smith normal form gives the abelianized group: the diagonal is
reported as the invariant-factor list of the cokernel (length = number of
generators), so torsion coefficients are the entries > 1 and the free rank is
the number of zero entries.

Everything runs over plain Python integers, so intermediate entry blow-up is
exact rather than an overflow hazard.  The unimodular transforms are recorded
and satisfy left * m * right == diag exactly.
"""

from dataclasses import dataclass


def exponent_matrix(p):
    """Rows follow p.relators, columns follow p.generators."""
    cols = {g: j for j, g in enumerate(p.generators)}
    matrix = []
    for r in p.relators:
        row = [0] * len(p.generators)
        for name, exp in r.letters:
            row[cols[name]] += exp
        matrix.append(row)
    return matrix


def word_exponent_vector(w, p):
    cols = {g: j for j, g in enumerate(p.generators)}
    vec = [0] * len(p.generators)
    for name, exp in w.letters:
        vec[cols[name]] += exp
    return vec


@dataclass
class SNFResult:
    """diagonal: invariant factors of the cokernel, length ncols, with the
    divisibility chain d1 | d2 | ... and zeros for the free part."""

    diagonal: list
    left: list       # nrows x nrows unimodular
    right: list      # ncols x ncols unimodular
    nrows: int
    ncols: int

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d != 0)

    def diagonal_matrix(self):
        d = [[0] * self.ncols for _ in range(self.nrows)]
        for i in range(min(self.nrows, self.ncols)):
            d[i][i] = self.diagonal[i]
        return d


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(m, ncols=None):
    """Diagonalize an integer matrix by unimodular row/column operations.

    Pivots are chosen with smallest nonzero absolute value, which limits
    entry growth and makes the run deterministic.
    """
    a = [[int(x) for x in row] for row in m]
    nr = len(a)
    if nr:
        nc = len(a[0])
        if any(len(row) != nc for row in a):
            raise ValueError("ragged matrix")
        if ncols is not None and ncols != nc:
            raise ValueError("ncols disagrees with matrix width")
    else:
        nc = ncols or 0
    u = _identity(nr)
    v = _identity(nc)

    def row_op(i, j, q):  # row i -= q * row j
        ai, aj = a[i], a[j]
        for k in range(nc):
            ai[k] -= q * aj[k]
        ui, uj = u[i], u[j]
        for k in range(nr):
            ui[k] -= q * uj[k]

    def col_op(i, j, q):  # col i -= q * col j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(nr, nc):
        pivot = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] != 0 and (pivot is None
                                     or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            swap_rows(t, pivot[0])
        if pivot[1] != t:
            swap_cols(t, pivot[1])

        while True:
            # Euclidean clearing of column t, then row t; column swaps while
            # clearing the row can dirty the column, hence the outer loop.
            cleared = False
            while not cleared:
                cleared = True
                for i in range(nr):
                    if i != t and a[i][t] != 0:
                        if abs(a[i][t]) < abs(a[t][t]):
                            swap_rows(i, t)
                        q = a[i][t] // a[t][t]
                        if q:
                            row_op(i, t, q)
                        if a[i][t] != 0:
                            cleared = False
            cleared = False
            while not cleared:
                cleared = True
                for j in range(nc):
                    if j != t and a[t][j] != 0:
                        if abs(a[t][j]) < abs(a[t][t]):
                            swap_cols(j, t)
                        q = a[t][j] // a[t][t]
                        if q:
                            col_op(j, t, q)
                        if a[t][j] != 0:
                            cleared = False
            if any(a[i][t] for i in range(nr) if i != t):
                continue
            # Pivot now alone in its row and column; pull in any entry it
            # does not divide so the divisibility chain comes out right.
            offender = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(t, offender, -1)
        t += 1

    for i in range(min(nr, nc)):
        if a[i][i] < 0:
            for k in range(nc):
                a[i][k] = -a[i][k]
            for k in range(nr):
                u[i][k] = -u[i][k]

    diagonal = [a[i][i] for i in range(min(nr, nc))]
    diagonal += [0] * (nc - len(diagonal))
    return SNFResult(diagonal=diagonal, left=u, right=v, nrows=nr, ncols=nc)


@dataclass
class AbelianInvariants:
    """Torsion coefficients d1 | d2 | ... (each >= 2) plus the free rank."""

    torsion: list
    free_rank: int

    def order(self):
        """Group order of the abelianization, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def describe(self):
        parts = ["Z"] * self.free_rank + ["Z/%d" % d for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def abelian_invariants(p):
    snf = smith_normal_form(exponent_matrix(p), ncols=len(p.generators))
    torsion = [d for d in snf.diagonal if d > 1]
    free_rank = len(p.generators) - snf.rank
    return AbelianInvariants(torsion=torsion, free_rank=free_rank)


def is_perfect(p):
    """Trivial abelianization: no torsion and no free part."""
    inv = abelian_invariants(p)
    return not inv.torsion and inv.free_rank == 0


def abelian_image_is_trivial(w, p):
    """Whether the word maps to 0 in the abelianization of p, i.e. its
    exponent vector lies in the integer row span of the exponent matrix."""
    vec = word_exponent_vector(w, p)
    snf = smith_normal_form(exponent_matrix(p), ncols=len(p.generators))
    # v in rowspan(M) iff v * right is divisible entrywise by the diagonal.
    transformed = [sum(vec[i] * snf.right[i][j] for i in range(snf.ncols))
                   for j in range(snf.ncols)]
    for j, value in enumerate(transformed):
        d = snf.diagonal[j] if j < min(snf.nrows, snf.ncols) else 0
        if d == 0:
            if value != 0:
                return False
        elif value % d != 0:
            return False
    return True


def mat_mul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for row in a]


def determinant(a):
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]
