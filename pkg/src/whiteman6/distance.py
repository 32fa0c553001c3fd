"""Minimum distances: full enumeration, support search, and theorem values.

Support search relies on the codes being cyclic: a minimum-weight codeword
can always be rotated so that position 0 is in its support, so only
supports containing 0 are examined.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import comb, isqrt
from typing import TYPE_CHECKING

import numpy as np

from .polyring import Poly

if TYPE_CHECKING:
    from .codegen import CyclicCode

DEFAULT_ENUM_BUDGET = 2**22
DEFAULT_SEARCH_CAP = 10**8


@dataclass
class DistanceResult:
    kind: str  # exact | lower-bound | bounded-search-exact | inconclusive
    value: int | None
    method: str  # full-enumeration | support-search | theorem
    budget_used: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    count: int | None = None
    upper_bound: int | None = None
    note: str = ""

    def to_dict(self) -> dict:
        d = asdict(self)
        return {k: v for k, v in d.items() if v not in (None, "", [], {})}


def ceil_sqrt(v: int) -> int:
    r = isqrt(v)
    return r if r * r == v else r + 1


# matrices


def generator_matrix(code: CyclicCode) -> np.ndarray:
    """Rows x^i * gen(x) for 0 <= i < k."""
    n, k = code.n, code.k
    g = code.gen.coeffs
    G = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        G[i, i : i + len(g)] = g
    return G


def parity_check_matrix(code: CyclicCode) -> np.ndarray:
    """(n-k) x n matrix from h(x) = (x^n - 1)/gen(x).

    Row r collects the coefficient of x^(k+r) in c(x)h(x), which vanishes
    for every codeword c.
    """
    n, k = code.n, code.k
    h = code.parity_poly().coeffs
    H = np.zeros((n - k, n), dtype=np.int64)
    rows = np.arange(n - k)
    for t in range(k + 1):
        H[rows, rows + k - t] = h[t]
    return H


def rank_mod_q(A: np.ndarray, q: int) -> int:
    return len(row_reduce(A, q)[1])


def row_reduce(A: np.ndarray, q: int) -> tuple[np.ndarray, list]:
    """Reduced row echelon form over GF(q) and the pivot columns."""
    M = np.array(A, dtype=np.int64) % q
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if not nz.size:
            continue
        p = r + nz[0]
        if p != r:
            M[[r, p]] = M[[p, r]]
        M[r] = (M[r] * pow(int(M[r, c]), -1, q)) % q
        f = M[:, c].copy()
        f[r] = 0
        M = (M - np.outer(f, M[r])) % q
        pivots.append(c)
        r += 1
    return M[:r], pivots


def upper_bound_witness(code: CyclicCode) -> tuple[int, list]:
    """Cheap upper bound: the lightest of gen, the systematic generator rows,
    and the two repetition-pattern words when they are codewords."""
    best = code.gen.weight()
    support = np.flatnonzero(code.gen.coeffs).tolist()
    if 0 < code.k <= 400:
        R, _ = row_reduce(generator_matrix(code), code.q)
        w = np.count_nonzero(R, axis=1)
        i = int(np.argmin(w))
        if w[i] < best:
            best = int(w[i])
            support = np.flatnonzero(R[i]).tolist()
    # sum_j x^(j*p) for p = n1, n2: weights n/p, codewords whenever they lie in the code
    for p in (code.n1, code.n2):
        if p and code.n % p == 0 and code.n // p < best:
            word = np.zeros(code.n, dtype=np.int64)
            word[::p] = 1
            if code.contains(Poly(word, code.gen.field)):
                best = code.n // p
                support = np.flatnonzero(word).tolist()
    return best, support


# full enumeration


def exact_min_distance(code: CyclicCode, budget: int = DEFAULT_ENUM_BUDGET, chunk: int = 1 << 15) -> DistanceResult:
    """Minimum weight over all nonzero m(x)*gen(x) with deg m < k."""
    q, k, n = code.q, code.k, code.n
    if k == 0:
        return DistanceResult("inconclusive", None, "full-enumeration", {"codewords": 0}, note="empty code")
    total = q**k - 1
    if total > budget:
        return DistanceResult(
            "inconclusive", None, "full-enumeration", {"codewords": 0, "required": total},
            note=f"q^k - 1 = {total} exceeds budget {budget}",
        )
    G = generator_matrix(code).astype(np.float64)
    place = q ** np.arange(k, dtype=np.int64)
    best, count, witness = n + 1, 0, None
    for start in range(1, total + 1, chunk):
        v = np.arange(start, min(start + chunk, total + 1), dtype=np.int64)
        msgs = (v[:, None] // place) % q
        words = np.rint(msgs.astype(np.float64) @ G).astype(np.int64) % q
        w = np.count_nonzero(words, axis=1)
        lo = int(w.min())
        if lo < best:
            best, count = lo, int((w == lo).sum())
            witness = np.flatnonzero(words[int(np.argmin(w))]).tolist()
        elif lo == best:
            count += int((w == lo).sum())
    return DistanceResult(
        "exact", best, "full-enumeration", {"codewords": total}, witnesses=[witness], count=count
    )


# support search


def _column_index(cols: list) -> dict:
    index: dict = {}
    for j, key in enumerate(cols):
        index.setdefault(key, []).append(j)
    return index


def _binary_keys(H: np.ndarray) -> list:
    # column j packed into an int, bit r = H[r, j]
    n = H.shape[1]
    weights = [1 << r for r in range(H.shape[0])]
    keys = []
    for j in range(n):
        col = H[:, j]
        keys.append(sum(weights[r] for r in np.flatnonzero(col)))
    return keys


def _search_level_binary(keys: list, index: dict, n: int, w: int):
    """Support {0, t1, .., t_{w-2}, c} whose columns XOR to zero."""

    def rec(span: list, last: int, prefix: list, depth: int):
        if depth == 0:
            for s in span:
                for c in index.get(s, ()):
                    if c > last:
                        return prefix + [c]
            return None
        for t in range(last + 1, n - depth):
            h = keys[t]
            found = rec(span + [s ^ h for s in span], t, prefix + [t], depth - 1)
            if found:
                return found
        return None

    start = [0, keys[0]]
    return rec(start, 0, [0], w - 2)


def _search_level_general(cols: np.ndarray, index: dict, n: int, w: int, q: int):
    lam = np.arange(q, dtype=np.int64)

    def rec(span: np.ndarray, last: int, prefix: list, depth: int):
        if depth == 0:
            for row in span:
                for c in index.get(row.astype(np.int64).tobytes(), ()):
                    if c > last:
                        return prefix + [c]
            return None
        for t in range(last + 1, n - depth):
            nxt = (span[None, :, :] + lam[:, None, None] * cols[t][None, None, :]) % q
            found = rec(nxt.reshape(-1, cols.shape[1]), t, prefix + [t], depth - 1)
            if found:
                return found
        return None

    start = (lam[:, None] * cols[0][None, :]) % q
    return rec(start, 0, [0], w - 2)


def min_weight_support_search(code: CyclicCode, wmax: int, cap: int = DEFAULT_SEARCH_CAP) -> DistanceResult:
    """Smallest w <= wmax admitting a codeword of support size w.

    At level w every support {0 < t1 < ... < t_{w-1}} is tested for rank
    deficiency of its parity-check columns: with smaller weights already
    excluded, the last column must lie in the span of the others.
    """
    n, k, q = code.n, code.k, code.q
    if k == 0:
        return DistanceResult("inconclusive", None, "support-search", {"rank_tests": 0}, note="empty code")
    ub, ub_support = upper_bound_witness(code)
    H = parity_check_matrix(code) % q
    tests = 0
    binary = q == 2
    if binary:
        keys = _binary_keys(H)
        index = _column_index(keys)
    else:
        cols = np.ascontiguousarray(H.T)
        index = _column_index([c.tobytes() for c in cols])
    for w in range(1, wmax + 1):
        level = comb(n - 1, w - 1)
        if tests + level > cap:
            return DistanceResult(
                "inconclusive", w, "support-search", {"rank_tests": tests, "cap": cap},
                upper_bound=ub, note=f"cap reached before weight {w}; d >= {w} certified",
            )
        tests += level
        if w == 1:
            found = [0] if not H[:, 0].any() else None
        elif binary:
            found = _search_level_binary(keys, index, n, w)
        else:
            found = _search_level_general(cols, index, n, w, q)
        if found:
            return DistanceResult(
                "bounded-search-exact", w, "support-search", {"rank_tests": tests}, witnesses=[found]
            )
    return DistanceResult(
        "lower-bound", wmax + 1, "support-search", {"rank_tests": tests},
        witnesses=[ub_support], upper_bound=ub,
        note=f"no codeword of weight <= {wmax}; d <= {ub} by witness",
    )


def codeword_on_support(code: CyclicCode, support: list) -> np.ndarray:
    """A nonzero codeword supported inside `support` (solves H c = 0 there)."""
    H = parity_check_matrix(code)
    sub = H[:, support] % code.q
    R, piv = row_reduce(sub, code.q)
    free = [j for j in range(len(support)) if j not in piv]
    if not free:
        raise ValueError("columns are independent; no codeword on this support")
    f = free[0]
    x = np.zeros(len(support), dtype=np.int64)
    x[f] = 1
    for row, p in zip(R, piv):
        x[p] = (-row[f]) % code.q
    c = np.zeros(code.n, dtype=np.int64)
    c[support] = x
    return c


# theorem values

_THEOREM_KINDS = {3: "exact", 4: "exact", 5: "lower-bound", 6: "lower-bound", 7: "lower-bound", 8: "lower-bound"}


def theorem_value(theorem: int, n1: int, n2: int, indices: tuple = ()) -> tuple[str, int]:
    if theorem == 3:
        i = indices[0]
        return "exact", n2 if i == 1 else n1
    if theorem == 4:
        return "exact", min(n1, n2)
    if theorem in (5, 7):
        i = indices[0]
        return "lower-bound", ceil_sqrt(n2 if i == 1 else n1)
    if theorem in (6, 8):
        return "lower-bound", ceil_sqrt(min(n1, n2))
    raise ValueError(f"no distance statement for theorem {theorem}")


def theorem_bounds(code: CyclicCode, which_theorem: int | None = None) -> DistanceResult:
    if code.theorem is None:
        raise ValueError("code was not built by a theorem constructor")
    if which_theorem is not None and which_theorem != code.theorem:
        raise ValueError(f"code comes from theorem {code.theorem}, not {which_theorem}")
    kind, value = theorem_value(code.theorem, code.n1, code.n2, code.indices)
    return DistanceResult(kind, value, "theorem")
