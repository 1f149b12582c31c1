"""Column-insertion RSK and its generalization to M_mu.

The insertion displaces, in the first column, the smallest entry that is at
least the inserted value (appending at the bottom when every entry is
smaller), then carries the displaced entry into the next column, and so on.
Two-line arrays list the matrix positions with the top line weakly
increasing and the bottom line weakly decreasing within blocks.

A label family (the P and Q of the generalized correspondence) is a tuple
of (irreducible polynomial, tableau rows) pairs in the canonical label
order, with empty tableaux omitted.
"""

from __future__ import annotations

import itertools
import time
from bisect import bisect_left

from hecke.gf import (
    Field,
    enumerate_irreducibles,
    factorize,
    format_poly,
    parse_poly,
    poly_deg,
    poly_key,
)
from hecke.hecke_index import PolyMatrix, enumerate_m_mu, validate_m_mu
from hecke.shapes import cst_check, enumerate_cst, partitions_of


def _columns(rows) -> list:
    if not rows:
        return []
    return [
        [rows[r][c] for r in range(len(rows)) if c < len(rows[r])]
        for c in range(len(rows[0]))
    ]


def _rows_from_columns(cols) -> tuple:
    if not cols:
        return ()
    return tuple(
        tuple(col[r] for col in cols if r < len(col)) for r in range(len(cols[0]))
    )


def _insert(rows, entry) -> tuple:
    cols = _columns(rows)
    c = 0
    while True:
        if c == len(cols):
            cols.append([entry])
            break
        col = cols[c]
        idx = bisect_left(col, entry)
        if idx == len(col):
            col.append(entry)
            break
        col[idx], entry = entry, col[idx]
        c += 1
    return _rows_from_columns(cols)


def insert_column(rows, entry: int) -> tuple:
    """Column insertion of a positive entry into a column-strict tableau."""
    rows = tuple(tuple(r) for r in rows)
    shape = tuple(len(r) for r in rows)
    if not cst_check(rows, shape):
        raise ValueError("insertion requires a column-strict tableau")
    if entry < 1:
        raise ValueError("entries must be positive")
    return _insert(rows, entry)


def two_line_array(b) -> tuple:
    """b_{ij} copies of the pair (i, j), top line weakly increasing and the
    bottom line weakly decreasing within constant blocks of the top."""
    pairs = []
    for i, row in enumerate(b, start=1):
        for j in range(len(row), 0, -1):
            pairs.extend([(i, j)] * row[j - 1])
    return tuple(pairs)


def rsk_classical(b) -> tuple:
    """The (P, Q) pair of the matrix b: fold the insertion over the bottom
    line, recording each top-line entry in the box the shape gained."""
    P: tuple = ()
    Q: tuple = ()
    for i, j in two_line_array(b):
        newP = _insert(P, j)
        r = next(
            (k for k in range(len(P)) if len(newP[k]) == len(P[k]) + 1), len(P)
        )
        Q = tuple(
            Q[k] + ((i,) if k == r else ()) for k in range(len(Q))
        ) + (((i,),) if r == len(Q) else ())
        P = newP
    return P, Q


# -- generalized RSK on M_mu -----------------------------------------------------


def phi_factor_matrix(K: Field, a: PolyMatrix) -> tuple:
    """Entry-by-entry factorization of a in M_mu: for each irreducible label
    dividing some entry, the matrix of multiplicities, in canonical label
    order."""
    validate_m_mu(K, a)
    l = len(a.mu)
    mats: dict = {}
    for i in range(l):
        for j in range(l):
            _, factors = factorize(K, a.entries[i][j])
            for g, m in factors:
                mats.setdefault(g, [[0] * l for _ in range(l)])[i][j] = m
    return tuple(
        (g, tuple(tuple(row) for row in mats[g])) for g in sorted(mats, key=poly_key)
    )


def rsk_generalized(K: Field, a: PolyMatrix) -> tuple:
    """Componentwise classical RSK over the factorization labels.  Both
    families share their shape label by label, and both have degree-weighted
    weight mu."""
    fam_p, fam_q = [], []
    for g, mat in phi_factor_matrix(K, a):
        P, Q = rsk_classical(mat)
        fam_p.append((g, P))
        fam_q.append((g, Q))
    return tuple(fam_p), tuple(fam_q)


def family_shape(fam) -> tuple:
    return tuple((g, tuple(len(row) for row in rows)) for g, rows in fam)


def family_weight(fam) -> tuple:
    """Degree-weighted weight: wt_i = sum over labels of deg(label) times
    the number of entries i, with trailing zeros trimmed."""
    counts: dict = {}
    for g, rows in fam:
        d = poly_deg(g)
        for row in rows:
            for e in row:
                counts[e] = counts.get(e, 0) + d
    top = max(counts, default=0)
    return tuple(counts.get(i, 0) for i in range(1, top + 1))


# -- enumeration of label shapes, fillings, and pairs ------------------------------


def enumerate_phi_shapes(K: Field, n: int) -> list:
    """All label-indexed partition families of total degree-weighted size n,
    over labels of degree at most n."""
    if n == 0:
        return [()]
    labels = enumerate_irreducibles(K, n)
    out: list = []

    def rec(idx, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if idx == len(labels):
            return
        g = labels[idx]
        d = poly_deg(g)
        rec(idx + 1, remaining, acc)
        for boxes in range(1, remaining // d + 1):
            for lam in partitions_of(boxes):
                acc.append((g, lam))
                rec(idx + 1, remaining - d * boxes, acc)
                acc.pop()

    rec(0, n, [])
    return [tuple(sorted(shape, key=lambda item: poly_key(item[0]))) for shape in out]


def enumerate_phi_fillings(shape, mu) -> list:
    """All column-strict family fillings of the label shape whose
    degree-weighted weight is exactly mu."""
    l = len(mu)
    out: list = []

    def rec(idx, remaining, acc):
        if idx == len(shape):
            if all(r == 0 for r in remaining):
                out.append(tuple(acc))
            return
        g, lam = shape[idx]
        d = poly_deg(g)
        boxes = sum(lam)
        for w in _bounded_weights(boxes, [r // d for r in remaining]):
            rest = tuple(r - d * wi for r, wi in zip(remaining, w))
            for rows in enumerate_cst(lam, w):
                acc.append((g, rows))
                rec(idx + 1, rest, acc)
                acc.pop()

    rec(0, tuple(mu), [])
    return out


def _bounded_weights(total, bounds):
    if not bounds:
        if total == 0:
            yield ()
        return
    for first in range(min(total, bounds[0]) + 1):
        for rest in _bounded_weights(total - first, bounds[1:]):
            yield (first,) + rest


def enumerate_pairs(K: Field, mu: tuple) -> list:
    """All pairs of label families with equal shape per label and
    degree-weighted weight mu on both sides; the certified codomain of the
    generalized correspondence."""
    pairs = []
    for shape in enumerate_phi_shapes(K, sum(mu)):
        fillings = enumerate_phi_fillings(shape, mu)
        pairs.extend(itertools.product(fillings, fillings))
    return pairs


def rsk_bijectivity_check(K: Field, mu: tuple) -> dict:
    """The generalized correspondence is injective on M_mu and fills out the
    enumerated codomain exactly; weights come out degree-weighted to mu."""
    mu = tuple(mu)
    start = time.perf_counter()
    image = []
    weights_ok = True
    shapes_ok = True
    for a in enumerate_m_mu(K, mu):
        p, q = rsk_generalized(K, a)
        shapes_ok = shapes_ok and family_shape(p) == family_shape(q)
        weights_ok = weights_ok and family_weight(p) == mu == family_weight(q)
        image.append((p, q))
    injective = len(set(image)) == len(image)
    codomain = enumerate_pairs(K, mu)
    onto = set(image) == set(codomain)
    return {
        "check": "rsk_bijectivity",
        "q": K.q,
        "mu": list(mu),
        "m_mu_count": len(image),
        "pairs_count": len(codomain),
        "shapes_match": shapes_ok,
        "weights_match": weights_ok,
        "injective": injective,
        "image_equals_codomain": onto,
        "pass": shapes_ok and weights_ok and injective and onto,
        "timings": {"seconds": round(time.perf_counter() - start, 3)},
    }


# -- serialization ------------------------------------------------------------------


def family_to_obj(K: Field, fam) -> dict:
    return {format_poly(K, g): [list(row) for row in rows] for g, rows in fam}


def family_from_obj(K: Field, obj: dict) -> tuple:
    fam = [
        (parse_poly(K, s), tuple(tuple(row) for row in rows))
        for s, rows in obj.items()
    ]
    return tuple(sorted(fam, key=lambda item: poly_key(item[0])))


def pair_to_obj(K: Field, pair) -> dict:
    return {"P": family_to_obj(K, pair[0]), "Q": family_to_obj(K, pair[1])}
