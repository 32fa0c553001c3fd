"""Exact structural checks for one setting: class multiplication, root-of-unity
sums, the class-wise evaluation table, Frobenius facts for the class of q,
and the factorisation of x^n - 1 into the d_a.

Every check returns a dict with a name, a boolean and a short detail so
that the CLI can serialise the lot.
"""

from __future__ import annotations

import numpy as np

from .codegen import d_poly, exact_div
from .polyring import Poly, _cached_powers, x_n_minus_1
from .sequence import STM_CLASSES, Setting, class_closed_form, stm_support


def _result(name: str, ok: bool, detail: str = "") -> dict:
    out = {"check": name, "ok": bool(ok)}
    if detail:
        out["detail"] = detail
    return out


def class_multiplication(setting: Setting) -> dict:
    """r * D_j = D_(i+j mod 6) for every r in D_i, every j."""
    sys = setting.sys
    n = sys.n
    units = np.array(sys.units, dtype=np.int64)
    cls = np.array([sys.class_index(u) for u in units])
    # products r*u for all pairs, classified through the membership table
    prod = np.outer(units, units) % n
    got = sys.membership[prod].astype(np.int64) - 3
    want = (cls[:, None] + cls[None, :]) % 6
    bad = np.argwhere(got != want)
    if bad.size:
        r, u = units[bad[0][0]], units[bad[0][1]]
        return _result("class_multiplication", False, f"{r}*{u} lands in the wrong class")
    return _result("class_multiplication", True, f"{len(units)}^2 products")


def _power_sum(setting: Setting, exponents) -> np.ndarray:
    table = _cached_powers(setting.beta, setting.n)
    idx = np.asarray(exponents, dtype=np.int64) % setting.n
    return table[idx].sum(axis=0) % setting.q


def root_sums(setting: Setting) -> list:
    F, sys = setting.field, setting.sys
    minus_one = F.scalar(-1).vec
    one = F.one().vec
    checks = []
    for name, support, want in (
        ("sum_N1_is_minus_one", sys.N1, minus_one),
        ("sum_N2_is_minus_one", sys.N2, minus_one),
        ("sum_units_is_one", sys.units, one),
    ):
        checks.append(_result(name, np.array_equal(_power_sum(setting, support), want)))
    return checks


def class_sums(setting: Setting) -> dict:
    """sum_{i in D_j} beta^(a*i) is -(n1-1)/6 on N1 and -(n2-1)/6 on N2."""
    sys, F, q = setting.sys, setting.field, setting.q
    want = {
        "N1": F.scalar(-((sys.n1 - 1) // 6)).vec,
        "N2": F.scalar(-((sys.n2 - 1) // 6)).vec,
    }
    tested = 0
    for label, residues in (("N1", sys.N1), ("N2", sys.N2)):
        for a in residues:
            for j, D in enumerate(sys.classes):
                got = _power_sum(setting, np.array(D, dtype=np.int64) * a)
                if not np.array_equal(got, want[label]):
                    return _result("class_sums", False, f"a={a} ({label}), j={j}")
                tested += 1
    return _result("class_sums", True, f"{tested} sums")


def evaluation_table(setting: Setting, residues=None) -> dict:
    """Direct evaluation at beta^a against the class-wise closed form, for
    S, T and M at every residue (or the given ones)."""
    n = setting.n
    residues = range(n) if residues is None else residues
    supports = {w: np.array(stm_support(setting.sys, w), dtype=np.int64) for w in STM_CLASSES}
    tested = 0
    for a in residues:
        for w, supp in supports.items():
            direct = _power_sum(setting, supp * a)
            predicted = class_closed_form(setting, w, a)
            if not np.array_equal(direct, predicted.vec):
                return _result("evaluation_table", False, f"{w} at beta^{a} ({setting.sys.class_of(a)})")
            tested += 1
    return _result("evaluation_table", True, f"{tested} evaluations")


def frobenius_facts(setting: Setting) -> list:
    qc = setting.q_class
    vals = {w: setting.value_at_beta(w) for w in "STM"}
    if qc % 2 == 1:
        ok = all(not (v.is_zero() or v.is_minus_one()) for v in vals.values())
        return [_result("values_avoid_zero_and_minus_one", ok, f"q in D{qc}")]
    times = 1 if qc == 0 else 3
    ok = all(v.frobenius(times) == v for v in vals.values())
    checks = [_result(f"values_fixed_by_q^{times}", ok, f"q in D{qc}")]
    if qc == 0:
        ok = all(f.descended for f in setting.d_factors)
        checks.append(_result("d_a_descend", ok))
    return checks


def factorisation(setting: Setting) -> dict:
    """x^n - 1 = (x^n1 - 1)(x^n2 - 1)/(x - 1) * prod d_a, in GF(q^m)[x]."""
    F = setting.field
    Fq = setting.polys["S"].field
    n, n1, n2 = setting.n, setting.n1, setting.n2
    head = exact_div(x_n_minus_1(n1, Fq) * x_n_minus_1(n2, Fq), x_n_minus_1(1, Fq))
    acc = head.embed(F)
    for f in setting.d_factors:
        acc = acc * (f.poly.embed(F) if f.descended else f.poly)
    ok = acc == x_n_minus_1(n, Fq).embed(F)
    # the complementary statement used by the distance constructors
    dp = d_poly(setting).embed(F)
    prod = Poly.one(F)
    for f in setting.d_factors:
        prod = prod * (f.poly.embed(F) if f.descended else f.poly)
    return _result("factorisation", ok and dp == prod, f"degree {acc.degree}")


def run_all(setting: Setting) -> list:
    out = [class_multiplication(setting)]
    out += root_sums(setting)
    out.append(class_sums(setting))
    out.append(evaluation_table(setting))
    out += frobenius_facts(setting)
    out.append(factorisation(setting))
    return out
