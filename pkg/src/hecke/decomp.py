"""Multiplicity combinatorics for the unipotent Hecke algebras.

The irreducible-module index sets are label-indexed partition families
("label shapes"); their filling counts give module dimensions, the sum of
squared counts recovers the basis size, and Levi weight-space dimensions
come from per-label Kostka products.  Symmetric-function cross-checks
expand Schur polynomials by the elementary-function determinant.
"""

from __future__ import annotations

import itertools
import time
from functools import lru_cache

from hecke.gf import Field, format_poly, poly_deg
from hecke.guards import check_guard
from hecke.hecke_index import enumerate_m_mu, enumerate_n, is_in_n_mu_fast
from hecke.rsk import enumerate_phi_fillings, enumerate_phi_shapes
from hecke.shapes import conjugate, kostka, partitions_of


def shape_height(shape) -> int:
    """Largest number of rows over the labels of a label shape."""
    return max((len(lam) for _, lam in shape), default=0)


def shape_size(shape) -> int:
    return sum(poly_deg(g) * sum(lam) for g, lam in shape)


def shape_to_obj(K: Field, shape) -> dict:
    return {format_poly(K, g): list(lam) for g, lam in shape}


def h_hat(K: Field, mu: tuple) -> tuple:
    """All label shapes of size |mu| admitting a filling of degree-weighted
    weight mu, each with its filling count (the module dimension)."""
    mu = tuple(mu)
    out = []
    for shape in enumerate_phi_shapes(K, sum(mu)):
        count = len(enumerate_phi_fillings(shape, mu))
        if count:
            out.append((shape, count))
    return tuple(out)


def dim_identity_check(K: Field, mu: tuple) -> dict:
    """|N_mu| three ways: brute-force filter of the monomial matrices, the
    size of M_mu, and the sum of squared filling counts."""
    mu = tuple(mu)
    n = sum(mu)
    check_guard(n, 5, "n")
    check_guard(K.q, 4, "q")
    start = time.perf_counter()
    n_mu_count = sum(1 for v in enumerate_n(K, n) if is_in_n_mu_fast(v, mu))
    m_mu_count = len(enumerate_m_mu(K, mu))
    table = h_hat(K, mu)
    sum_of_squares = sum(count**2 for _, count in table)
    return {
        "check": "dim_identity",
        "mu": list(mu),
        "q": K.q,
        "n_mu_count": n_mu_count,
        "m_mu_count": m_mu_count,
        "sum_of_squares": sum_of_squares,
        "shapes": [
            {"shape": shape_to_obj(K, shape), "count": count} for shape, count in table
        ],
        "pass": n_mu_count == m_mu_count == sum_of_squares,
        "timings": {"seconds": round(time.perf_counter() - start, 3)},
    }


# -- Levi weight spaces -------------------------------------------------------------


def enumerate_levi_weights(K: Field, mu: tuple) -> list:
    """All tuples (gamma_1, ..., gamma_l) of height-one label shapes with
    |gamma_i| = mu_i."""
    factor_sets = []
    for m in mu:
        shapes = [shape for shape, _ in h_hat(K, (m,))]
        assert all(shape_height(s) == 1 for s in shapes)
        factor_sets.append(shapes)
    return list(itertools.product(*factor_sets))


def weight_space_dims(K: Field, lam, mu: tuple) -> tuple:
    """For each Levi weight gamma, the number of family fillings of lam whose
    per-label weight is (|gamma_1 at the label|, ..., |gamma_l at the label|).
    Only nonzero dimensions are listed; they sum to the filling count of lam."""
    mu = tuple(mu)
    if shape_size(lam) != sum(mu):
        raise ValueError("label shape size does not match |mu|")
    lam_parts = dict(lam)
    out = []
    for gamma in enumerate_levi_weights(K, mu):
        per_label: dict = {}
        for i, gamma_i in enumerate(gamma):
            for g, row in gamma_i:
                per_label.setdefault(g, [0] * len(mu))[i] = row[0]
        if set(per_label) - set(lam_parts):
            continue
        dim = 1
        for g, shape in lam_parts.items():
            w = tuple(per_label.get(g, [0] * len(mu)))
            if sum(w) != sum(shape):
                dim = 0
                break
            dim *= kostka(shape, w)
        if dim:
            out.append((gamma, dim))
    return tuple(out)


def weight_space_report(K: Field, lam, mu: tuple) -> dict:
    table = weight_space_dims(K, lam, mu)
    total = sum(dim for _, dim in table)
    expected = len(enumerate_phi_fillings(lam, tuple(mu)))
    return {
        "check": "weight_spaces",
        "mu": list(mu),
        "q": K.q,
        "shape": shape_to_obj(K, lam),
        "weights": [
            {"gamma": [shape_to_obj(K, g) for g in gamma], "dim": dim}
            for gamma, dim in table
        ],
        "sum": total,
        "module_dim": expected,
        "pass": total == expected,
    }


# -- symmetric-function cross-checks ---------------------------------------------
#
# Polynomials in m variables are dicts mapping exponent tuples to integer
# coefficients; operations are exact.


def mp_add(f: dict, g: dict) -> dict:
    out = dict(f)
    for e, c in g.items():
        out[e] = out.get(e, 0) + c
        if not out[e]:
            del out[e]
    return out


def mp_mul(f: dict, g: dict) -> dict:
    out: dict = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def elementary_poly(r: int, m: int) -> tuple:
    """e_r in m variables, as a sorted item tuple; zero outside 0 <= r <= m."""
    if r < 0 or r > m:
        return ()
    if r == 0:
        return (((0,) * m, 1),)
    items = []
    for subset in itertools.combinations(range(m), r):
        e = tuple(1 if i in subset else 0 for i in range(m))
        items.append((e, 1))
    return tuple(items)


def schur_jacobi_trudi(nu: tuple, m: int) -> dict:
    """The Schur polynomial in m variables as the determinant of elementary
    symmetric polynomials indexed by the conjugate partition, expanded over
    the integers."""
    if m < len(nu):
        raise ValueError("need at least as many variables as rows")
    nuc = conjugate(nu)
    size = len(nuc)  # = nu_1
    if size == 0:
        return {(0,) * m: 1}
    grid = [
        [dict(elementary_poly(nuc[i] - i + j, m)) for j in range(size)]
        for i in range(size)
    ]
    total: dict = {}
    for perm in itertools.permutations(range(size)):
        sign = _perm_sign(perm)
        term = {(0,) * m: sign}
        for i in range(size):
            term = mp_mul(term, grid[i][perm[i]])
            if not term:
                break
        total = mp_add(total, term)
    return total


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def pieri_check(nu: tuple, n: int, m: int) -> dict:
    """s_nu * s_(n) against the sum of s_gamma over the shapes gamma obtained
    from nu by adding n boxes with a weight-(n) skew filling."""
    if m < len(nu) + 1:
        raise ValueError("need at least len(nu)+1 variables")
    from hecke.shapes import contains, enumerate_cst

    lhs = mp_mul(schur_jacobi_trudi(nu, m), schur_jacobi_trudi((n,), m))
    rhs: dict = {}
    gammas = []
    for gamma in partitions_of(sum(nu) + n):
        if contains(gamma, nu) and enumerate_cst((gamma, nu), (n,)):
            gammas.append(gamma)
            rhs = mp_add(rhs, schur_jacobi_trudi(gamma, m))
    return {
        "check": "pieri",
        "nu": list(nu),
        "n": n,
        "variables": m,
        "expansion": [list(g) for g in gammas],
        "pass": lhs == rhs,
    }
