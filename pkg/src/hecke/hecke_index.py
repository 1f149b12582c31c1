"""Monomial matrices, the sets N_mu and M_mu, and the bijection between them.

A monomial matrix is stored column by column: perm[c] is the (0-based) row
of the unique nonzero entry in column c and entries[c] is that entry's
field code.  A polynomial matrix in M_mu is an l-by-l grid of monic
polynomials with nonzero constant terms whose degree row sums and degree
column sums both equal mu.
"""

from __future__ import annotations

import itertools
import time
from typing import NamedTuple

from hecke.gf import (
    Field,
    Poly,
    enumerate_monic_units,
    format_poly,
    is_monic,
    parse_poly,
    poly_deg,
)
from hecke.guards import check_guard
from hecke.shapes import boundary_set, weak_compositions


class MembershipError(ValueError):
    """Input outside M_mu or N_mu."""


class MonomialMatrix(NamedTuple):
    perm: tuple
    entries: tuple

    @property
    def n(self) -> int:
        return len(self.perm)


class PolyMatrix(NamedTuple):
    entries: tuple  # l-by-l grid of Poly
    mu: tuple

    def degree_matrix(self) -> tuple:
        return tuple(tuple(poly_deg(f) for f in row) for row in self.entries)


def reversal_perm(k: int) -> tuple:
    """The permutation of the reversal matrix w_(k): column j hits row k-1-j."""
    return tuple(k - 1 - j for j in range(k))


def monomial_identity(n: int) -> MonomialMatrix:
    return MonomialMatrix(tuple(range(n)), (1,) * n)


def validate_m_mu(K: Field, a: PolyMatrix):
    l = len(a.mu)
    if len(a.entries) != l or any(len(row) != l for row in a.entries):
        raise MembershipError("entry grid does not match the length of mu")
    for row in a.entries:
        for f in row:
            if not is_monic(f) or f[0] == 0:
                raise MembershipError(
                    f"entry {format_poly(K, f)} is not monic with nonzero constant term"
                )
    d = a.degree_matrix()
    row_sums = tuple(sum(row) for row in d)
    col_sums = tuple(sum(col) for col in zip(*d))
    if row_sums != tuple(a.mu) or col_sums != tuple(a.mu):
        raise MembershipError(
            f"degree sums {row_sums} / {col_sums} do not both equal mu = {a.mu}"
        )


# -- the map f -> v_(f) on 1x1 blocks ----------------------------------------


def v_of_poly(K: Field, f: Poly) -> MonomialMatrix:
    """The monomial matrix of a monic polynomial with nonzero constant term.

    For f = a_0 + a_1 X^{i_1} + ... + a_r X^{i_r} + X^n this is the product
    of the full reversal with the direct sum of the scaled reversals whose
    sizes are the gaps between consecutive exponents in the support of f.
    The constant polynomial 1 gives the empty 0x0 matrix.
    """
    if f == (1,):
        return MonomialMatrix((), ())
    if not is_monic(f) or f[0] == 0:
        raise MembershipError(f"{format_poly(K, f)} is not monic with f(0) != 0")
    n = poly_deg(f)
    support = [d for d in range(n) if f[d] != 0]
    perm = [0] * n
    entries = [0] * n
    for t, start in enumerate(support):
        end = support[t + 1] if t + 1 < len(support) else n
        size = end - start
        for c in range(start, end):
            perm[c] = n - size - start + (c - start)
            entries[c] = f[start]
    return MonomialMatrix(tuple(perm), tuple(entries))


def _poly_of_monomial(K: Field, sub: MonomialMatrix) -> Poly:
    """Inverse of v_of_poly; raises MembershipError off the image."""
    d = sub.n
    if d == 0:
        return (1,)
    rev = [d - 1 - r for r in sub.perm]  # undo the left reversal
    coeffs = [0] * (d + 1)
    coeffs[d] = 1
    start = 0
    while start < d:
        top = rev[start]
        size = top - start + 1
        if size < 1:
            raise MembershipError("monomial block is not a scaled reversal")
        a = sub.entries[start]
        for c in range(start, start + size):
            if c >= d or rev[c] != top - (c - start) or sub.entries[c] != a:
                raise MembershipError("monomial block is not a scaled reversal")
        coeffs[start] = a
        start += size
    return tuple(coeffs)


# -- the bijection M_mu <-> N_mu ----------------------------------------------


def _block_layout(mu: tuple, d: tuple) -> tuple:
    """Row and column start offsets of each sub-block.

    Within block row i the sub-blocks stack top to bottom by decreasing
    column index j; within block column j they run left to right by
    decreasing row index i.
    """
    l = len(mu)
    row_base = tuple(sum(mu[:i]) for i in range(l))
    col_base = tuple(sum(mu[:j]) for j in range(l))
    row_start = [
        [row_base[i] + sum(d[i][j2] for j2 in range(j + 1, l)) for j in range(l)]
        for i in range(l)
    ]
    col_start = [
        [col_base[j] + sum(d[i2][j] for i2 in range(i + 1, l)) for j in range(l)]
        for i in range(l)
    ]
    return row_start, col_start


def v_of_matrix(K: Field, a: PolyMatrix) -> MonomialMatrix:
    """The monomial matrix v_a of a polynomial matrix in M_mu."""
    validate_m_mu(K, a)
    l = len(a.mu)
    n = sum(a.mu)
    d = a.degree_matrix()
    row_start, col_start = _block_layout(a.mu, d)
    perm = [0] * n
    entries = [0] * n
    for i in range(l):
        for j in range(l):
            if d[i][j] == 0:
                continue
            sub = v_of_poly(K, a.entries[i][j])
            for c in range(d[i][j]):
                perm[col_start[i][j] + c] = row_start[i][j] + sub.perm[c]
                entries[col_start[i][j] + c] = sub.entries[c]
    return MonomialMatrix(tuple(perm), tuple(entries))


def matrix_of_v(K: Field, v: MonomialMatrix, mu: tuple) -> PolyMatrix:
    """The unique a in M_mu with v_of_matrix(a) = v.

    Reads the degree matrix off the block pattern of v, then each
    sub-block's scaled anti-diagonal blocks back into coefficients.
    """
    n = sum(mu)
    if v.n != n:
        raise MembershipError(f"matrix size {v.n} does not match |mu| = {n}")
    if not is_in_n_mu_fast(v, mu):
        raise MembershipError("v fails the N_mu membership test")
    l = len(mu)
    bounds = (0,) + boundary_set(mu)

    def block_of(index: int) -> int:
        for i in range(l):
            if bounds[i] <= index < bounds[i + 1]:
                return i
        raise AssertionError

    d = [[0] * l for _ in range(l)]
    for c in range(n):
        d[block_of(v.perm[c])][block_of(c)] += 1
    row_start, col_start = _block_layout(mu, tuple(map(tuple, d)))
    grid = [[(1,)] * l for _ in range(l)]
    for i in range(l):
        for j in range(l):
            if d[i][j] == 0:
                continue
            sub_perm, sub_entries = [], []
            for c in range(col_start[i][j], col_start[i][j] + d[i][j]):
                local_row = v.perm[c] - row_start[i][j]
                if not 0 <= local_row < d[i][j]:
                    raise MembershipError("nonzero entry outside its sub-block")
                sub_perm.append(local_row)
                sub_entries.append(v.entries[c])
            grid[i][j] = _poly_of_monomial(
                K, MonomialMatrix(tuple(sub_perm), tuple(sub_entries))
            )
    a = PolyMatrix(tuple(tuple(row) for row in grid), tuple(mu))
    if v_of_matrix(K, a) != v:
        raise MembershipError("v is not in the image of M_mu")
    return a


# -- membership tests for N_mu ------------------------------------------------


def is_in_n_mu_fast(v: MonomialMatrix, mu: tuple) -> bool:
    """Pattern test: v indexes a nonzero double-coset basis element iff the
    pairs i < j with v(i) < v(j) avoid the forbidden superdiagonal
    configurations relative to the partial sums of mu."""
    n = v.n
    B = set(boundary_set(mu))
    row = tuple(r + 1 for r in v.perm)  # 1-based row of column i
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if row[i - 1] >= row[j - 1]:
                continue
            vi, vj = row[i - 1], row[j - 1]
            if i not in B and vi in B and j == i + 1:
                return False
            if i in B and vi not in B and vj == vi + 1:
                return False
            if i not in B and vi not in B:
                if (j == i + 1) != (vj == vi + 1):
                    return False
                if vj == vi + 1 and v.entries[i - 1] != v.entries[i]:
                    return False
    return True


def is_in_n_mu_direct(K: Field, v: MonomialMatrix, mu: tuple) -> bool:
    """Literal membership check: conjugation by v preserves psi_mu wherever
    it stays inside U.  Iterates over all of U; ground-truth oracle only."""
    from hecke import oracle

    n = v.n
    check_guard(K.q ** (n * (n - 1) // 2), 10**6, "|U|")
    vm = oracle.monomial_to_matrix(K, v)
    vinv = oracle.mat_inv(K, vm)
    for u in oracle.enumerate_u(K, n):
        w = oracle.mat_mul(K, oracle.mat_mul(K, vm, u), vinv)
        if oracle.is_unipotent_upper(w):
            if oracle.psi_mu_eval(K, u, mu) != oracle.psi_mu_eval(K, w, mu):
                return False
    return True


# -- enumeration ---------------------------------------------------------------


def degree_matrices(mu: tuple):
    """All nonnegative l-by-l matrices with row and column sums mu, in
    row-major lexicographic order."""
    l = len(mu)

    def rec(i, col_rem):
        if i == l:
            if all(r == 0 for r in col_rem):
                yield ()
            return
        for row in weak_compositions(mu[i], l):
            if all(x <= r for x, r in zip(row, col_rem)):
                rest = tuple(r - x for r, x in zip(col_rem, row))
                for tail in rec(i + 1, rest):
                    yield (row,) + tail

    yield from rec(0, tuple(mu))


def enumerate_m_mu(K: Field, mu: tuple) -> list:
    """All of M_mu, ordered by degree matrix then entrywise by polynomial."""
    out = []
    for d in degree_matrices(mu):
        l = len(mu)
        per_entry = [enumerate_monic_units(K, d[i][j]) for i in range(l) for j in range(l)]
        for flat in itertools.product(*per_entry):
            grid = tuple(tuple(flat[i * l + j] for j in range(l)) for i in range(l))
            out.append(PolyMatrix(grid, tuple(mu)))
    return out


def enumerate_n(K: Field, n: int) -> list:
    """All monomial matrices, in (permutation, entries) lexicographic order."""
    return [
        MonomialMatrix(perm, entries)
        for perm in itertools.permutations(range(n))
        for entries in itertools.product(K.units(), repeat=n)
    ]


def enumerate_n_mu(K: Field, mu: tuple) -> list:
    """The basis index set N_mu in the canonical order inherited from M_mu."""
    return [v_of_matrix(K, a) for a in enumerate_m_mu(K, mu)]


def bijection_check(K: Field, mu: tuple) -> dict:
    """Exhaustive verification that a -> v_a maps M_mu bijectively onto the
    monomial matrices passing the membership test, with exact roundtrips.
    For small rank the fast test is also compared with the literal
    definition over all of U."""
    mu = tuple(mu)
    n = sum(mu)
    start = time.perf_counter()
    image = []
    roundtrip_ok = True
    membership_ok = True
    for a in enumerate_m_mu(K, mu):
        v = v_of_matrix(K, a)
        membership_ok = membership_ok and is_in_n_mu_fast(v, mu)
        roundtrip_ok = roundtrip_ok and matrix_of_v(K, v, mu) == a
        image.append(v)
    injective = len(set(image)) == len(image)
    filtered = {v for v in enumerate_n(K, n) if is_in_n_mu_fast(v, mu)}
    surjective = set(image) == filtered
    direct_checked = K.q ** (n * (n - 1) // 2) <= 3**3
    direct_ok = True
    if direct_checked:
        for v in enumerate_n(K, n):
            if is_in_n_mu_fast(v, mu) != is_in_n_mu_direct(K, v, mu):
                direct_ok = False
                break
    return {
        "check": "bijection",
        "q": K.q,
        "mu": list(mu),
        "m_mu_count": len(image),
        "n_mu_count": len(filtered),
        "membership_ok": membership_ok,
        "roundtrip_ok": roundtrip_ok,
        "injective": injective,
        "image_equals_filter": surjective,
        "direct_test_checked": direct_checked,
        "direct_test_ok": direct_ok,
        "pass": membership_ok and roundtrip_ok and injective and surjective and direct_ok,
        "timings": {"seconds": round(time.perf_counter() - start, 3)},
    }


# -- serialization --------------------------------------------------------------


def _entry_to_obj(K: Field, e: int):
    return e if K.k == 1 else list(K.coords(e))


def _entry_from_obj(K: Field, obj) -> int:
    if isinstance(obj, int):
        if not 0 <= obj < K.q:
            raise ValueError(f"entry {obj} out of range for q = {K.q}")
        return obj
    return K.from_coords(tuple(obj) + (0,) * (K.k - len(obj)))


def monomial_to_obj(K: Field, v: MonomialMatrix) -> dict:
    return {
        "perm": [r + 1 for r in v.perm],
        "entries": [_entry_to_obj(K, e) for e in v.entries],
    }


def monomial_from_obj(K: Field, obj: dict) -> MonomialMatrix:
    perm = tuple(r - 1 for r in obj["perm"])
    entries = tuple(_entry_from_obj(K, e) for e in obj["entries"])
    if sorted(perm) != list(range(len(perm))):
        raise ValueError("perm is not a permutation")
    if len(entries) != len(perm) or any(e == 0 for e in entries):
        raise ValueError("entries must be nonzero, one per column")
    return MonomialMatrix(perm, entries)


def polymatrix_to_obj(K: Field, a: PolyMatrix) -> dict:
    return {
        "mu": list(a.mu),
        "entries": [[format_poly(K, f) for f in row] for row in a.entries],
    }


def polymatrix_from_obj(K: Field, obj: dict) -> PolyMatrix:
    mu = tuple(obj["mu"])
    grid = tuple(tuple(parse_poly(K, s) for s in row) for row in obj["entries"])
    return PolyMatrix(grid, mu)
