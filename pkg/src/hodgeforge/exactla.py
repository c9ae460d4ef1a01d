"""Exact dense linear algebra over the integers and rationals.

Everything here works on small matrices given as lists of Python-int rows,
so there is no floating point anywhere near a rank or a kernel.
"""

from fractions import Fraction


def mat_from_triplets(shape, triplets):
    m, n = shape
    rows = [[0] * n for _ in range(m)]
    for r, c, v in triplets:
        rows[r][c] = v
    return rows


def transpose(rows, shape):
    m, n = shape
    return [[rows[i][j] for i in range(m)] for j in range(n)]


def rank_bareiss(rows, shape):
    """Rank over the rationals via fraction-free (Bareiss) elimination."""
    m, n = shape
    if m == 0 or n == 0:
        return 0
    M = [list(r) for r in rows]
    prev = 1
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        for i in range(r + 1, m):
            row = M[i]
            f = row[c]
            for j in range(c + 1, n):
                row[j] = (p * row[j] - f * M[r][j]) // prev
            row[c] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def column_echelon(rows, shape):
    """Unimodular column reduction A @ U = H with H in column-echelon form.

    Returns (rank, hcols, ucols); hcols[rank:] are zero columns, so
    ucols[rank:] is a basis of the integer kernel lattice and
    ucols[:rank] maps onto a lattice basis of the column span of A.
    """
    m, n = shape
    acols = [[rows[i][j] for i in range(m)] for j in range(n)]
    ucols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    r = 0
    for i in range(m):
        if r == n:
            break
        live = [j for j in range(r, n) if acols[j][i]]
        if not live:
            continue
        while len(live) > 1:
            live.sort(key=lambda j: abs(acols[j][i]))
            j0 = live[0]
            p = acols[j0][i]
            keep = [j0]
            a0, u0 = acols[j0], ucols[j0]
            for j in live[1:]:
                q = acols[j][i] // p
                if q:
                    aj, uj = acols[j], ucols[j]
                    for t in range(m):
                        aj[t] -= q * a0[t]
                    for t in range(n):
                        uj[t] -= q * u0[t]
                if acols[j][i]:
                    keep.append(j)
            live = keep
        j0 = live[0]
        if j0 != r:
            acols[j0], acols[r] = acols[r], acols[j0]
            ucols[j0], ucols[r] = ucols[r], ucols[j0]
        if acols[r][i] < 0:
            acols[r] = [-x for x in acols[r]]
            ucols[r] = [-x for x in ucols[r]]
        r += 1
    return r, acols, ucols


def kernel_lattice_basis(rows, shape):
    """Basis of the lattice {x integer : A x = 0}, one list per basis vector."""
    r, _, ucols = column_echelon(rows, shape)
    return [list(c) for c in ucols[r:]]


def complement_mod_saturation(cols, dim):
    """Integral vectors whose classes form a basis of Z^dim modulo the
    saturation of the lattice spanned by `cols`.

    Used to pick cohomology representatives that generate the free quotient
    on the nose, which keeps intersection pairings unimodular.
    """
    t = len(cols)
    if t == 0:
        return [[1 if i == j else 0 for i in range(dim)] for j in range(dim)]
    # rows of N span the left kernel of the column matrix C
    ct = [list(c) for c in cols]  # C^T, shape t x dim
    ncols = kernel_lattice_basis(ct, (t, dim))
    if not ncols:
        return []
    nrows = [list(v) for v in ncols]  # N, shape (dim-r) x dim
    r, _, ucols = column_echelon(nrows, (len(nrows), dim))
    return [list(ucols[j]) for j in range(r)]


def solve_exact(rows, shape, rhs_cols):
    """Solve A X = B exactly over the rationals (free variables pinned to 0).

    `rhs_cols` is a list of right-hand-side columns; returns one solution
    column per rhs. Raises ValueError on an inconsistent system.
    """
    m, n = shape
    t = len(rhs_cols)
    M = [
        [Fraction(rows[i][j]) for j in range(n)]
        + [Fraction(rhs_cols[c][i]) for c in range(t)]
        for i in range(m)
    ]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        prow = M[r]
        for i in range(m):
            if i == r or not M[i][c]:
                continue
            f = M[i][c] / p
            row = M[i]
            for j in range(c, n + t):
                row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if any(M[i][n:]):
            raise ValueError("inconsistent linear system")
    sols = []
    for c in range(t):
        x = [Fraction(0)] * n
        for i, pc in enumerate(pivots):
            x[pc] = M[i][n + c] / M[i][pc]
        sols.append(x)
    return sols


def det_exact(rows):
    """Determinant of a small square matrix of Fractions/ints."""
    n = len(rows)
    M = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        p = M[c][c]
        det *= p
        for i in range(c + 1, n):
            f = M[i][c] / p
            if f:
                for j in range(c, n):
                    M[i][j] -= f * M[c][j]
    return det
