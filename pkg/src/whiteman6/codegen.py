"""Generator polynomials: the gcd oracle, the closed forms, and the
distance-theorem constructors."""

from __future__ import annotations

from dataclasses import dataclass, field

from .distance import DistanceResult, theorem_bounds
from .polyring import Poly, divrem, poly_gcd, x_n_minus_1
from .sequence import OmegaTriple, Setting, membership

ADMISSIBLE_TRIPLES = ((0, 1, 2), (0, 1, 5), (0, 4, 5), (1, 2, 3), (2, 3, 4), (3, 4, 5))

# omega case number -> (omega1 zero?, omega2 zero?, omega zero?)
OMEGA_CASES = {
    1: (False, False, False),
    2: (False, False, True),
    3: (True, False, True),
    4: (False, True, True),
    5: (True, True, True),
}


class UnverifiableBranch(ValueError):
    """A closed-form branch needs a factor that does not descend to GF(q)."""


@dataclass
class CyclicCode:
    n: int
    q: int
    gen: Poly
    provenance: str
    n1: int | None = None
    n2: int | None = None
    g: int | None = None
    x: int | None = None
    theorem: int | None = None
    indices: tuple = ()
    distance: DistanceResult | None = None

    def __post_init__(self):
        if self.gen.is_ext or self.gen.field.q != self.q:
            raise ValueError("generator must lie in GF(q)[x]")
        if not self.gen.is_monic():
            raise ValueError("generator must be monic")
        if not self.gen.divides(x_n_minus_1(self.n, self.gen.field)):
            raise ValueError("generator does not divide x^n - 1")

    @property
    def k(self) -> int:
        return self.n - self.gen.degree

    def parity_poly(self) -> Poly:
        return divrem(x_n_minus_1(self.n, self.gen.field), self.gen)[0]

    def contains(self, word: Poly) -> bool:
        return self.gen.divides(word)

    def record(self) -> dict:
        d = self.distance
        return {
            "n": self.n,
            "q": self.q,
            "n1": self.n1,
            "n2": self.n2,
            "g": self.g,
            "x": self.x,
            "k": self.k,
            "gen": self.gen.to_comma(),
            "provenance": self.provenance,
            "distance": None if d is None else {"kind": d.kind, "value": d.value},
        }


def _code(setting: Setting, gen: Poly, provenance: str, **kw) -> CyclicCode:
    s = setting.sys
    return CyclicCode(setting.n, setting.q, gen, provenance, s.n1, s.n2, s.g, s.x, **kw)


# pieces of x^n - 1


def _xm1(setting: Setting, k: int) -> Poly:
    return x_n_minus_1(k, setting.polys["S"].field)


def exact_div(a: Poly, b: Poly) -> Poly:
    quo, rem = divrem(a, b)
    if not rem.is_zero():
        raise ArithmeticError("division is not exact")
    return quo


def d_poly(setting: Setting) -> Poly:
    """d(x) = (x^n - 1)(x - 1) / ((x^n1 - 1)(x^n2 - 1))."""
    n1, n2 = setting.n1, setting.n2
    num = _xm1(setting, setting.n) * _xm1(setting, 1)
    return exact_div(num, _xm1(setting, n1) * _xm1(setting, n2))


def omega_case(om: OmegaTriple) -> int:
    z = (om.omega1 == 0, om.omega2 == 0, om.omega == 0)
    for case, pattern in OMEGA_CASES.items():
        if pattern == z:
            return case
    raise ArithmeticError(f"omega pattern {z} cannot occur")


def omega_gcd_part(setting: Setting, case: int) -> Poly:
    """The factor of gcd(x^n - 1, S(x)) supported on R, N1 and N2."""
    n1, n2 = setting.n1, setting.n2
    if case == 1:
        return Poly.one(setting.polys["S"].field)
    if case == 2:
        return _xm1(setting, 1)
    if case == 3:
        return _xm1(setting, n2)
    if case == 4:
        return _xm1(setting, n1)
    return exact_div(_xm1(setting, n1) * _xm1(setting, n2), _xm1(setting, 1))


# classification


@dataclass
class ClassificationReport:
    q_class: int
    omegas: OmegaTriple
    sbeta: object
    tbeta: object
    mbeta: object
    memberships: dict
    branch: str
    omega_case: int
    mst: dict = field(default_factory=dict)

    @property
    def d_indices(self) -> tuple:
        return tuple(sorted(self.mst.values()))

    def to_dict(self) -> dict:
        return {
            "q_class": f"D{self.q_class}",
            "omegas": list(self.omegas.as_tuple()),
            "values": {
                "S": list(self.sbeta.coeffs),
                "T": list(self.tbeta.coeffs),
                "M": list(self.mbeta.coeffs),
            },
            "memberships": self.memberships,
            "branch": self.branch,
            "mst": self.mst,
        }


# which d_a each polynomial selects, for value 0 and value -1
_MST_INDEX = {"S": ("m", 0, 3), "T": ("s", 1, 4), "M": ("t", 2, 5)}


def classify(setting: Setting) -> ClassificationReport:
    qc = setting.q_class
    if qc < 0:
        raise ValueError("q is not a unit modulo n")
    vals = {w: setting.value_at_beta(w) for w in "STM"}
    mem = {w: membership(v) for w, v in vals.items()}
    case = omega_case(setting.omegas)
    mst = {}
    if qc % 2 == 1:
        branch = f"theorem1-case-{case}"
    else:
        hits = [w for w in "STM" if mem[w] != "neither"]
        for w in hits:
            name, zero_idx, minus_idx = _MST_INDEX[w]
            mst[name] = zero_idx if mem[w] == "zero" else minus_idx
        if not hits:
            part = "no-da"
        elif len(hits) == 1:
            part = "I"
        elif len(hits) == 2:
            part = "II(" + {"ST": "i", "SM": "ii", "TM": "iii"}["".join(hits)] + ")"
        else:
            part = "III"
        branch = f"theorem2-{part}-case-{case}"
    return ClassificationReport(qc, setting.omegas, vals["S"], vals["T"], vals["M"], mem, branch, case, mst)


# the two paths


def generator_via_gcd(setting: Setting) -> CyclicCode:
    """g(x) = (x^n - 1) / gcd(x^n - 1, S(x)), all over GF(q)."""
    xn1 = _xm1(setting, setting.n)
    G = poly_gcd(xn1, setting.polys["S"])
    return _code(setting, exact_div(xn1, G), "oracle")


def _product_of_d(setting: Setting, indices) -> Poly:
    """prod d_a over GF(q); non-descending factors are multiplied in the
    extension first and the product is descent-checked."""
    Fq = setting.polys["S"].field
    facs = [setting.d_factors[a] for a in indices]
    acc = Poly.one(Fq)
    ext = Poly.one(setting.field)
    for f in facs:
        if f.descended:
            acc = acc * f.poly
        else:
            ext = ext * f.poly
    if ext.degree > 0:
        if not ext.descends():
            raise UnverifiableBranch(
                f"product of d_a for a in {sorted(a for a in indices if not setting.d_factors[a].descended)} "
                "does not descend to GF(q)"
            )
        acc = acc * ext.descend()
    return acc


def generator_via_theorem1(report: ClassificationReport, setting: Setting) -> CyclicCode:
    if report.q_class not in (1, 3, 5):
        raise ValueError(f"closed form for q in D1/D3/D5 does not apply to D{report.q_class}")
    xn1 = _xm1(setting, setting.n)
    gen = exact_div(xn1, omega_gcd_part(setting, report.omega_case))
    return _code(setting, gen, report.branch)


def generator_via_theorem2(report: ClassificationReport, setting: Setting) -> CyclicCode:
    if report.q_class not in (0, 2, 4):
        raise ValueError(f"closed form for q in D0/D2/D4 does not apply to D{report.q_class}")
    xn1 = _xm1(setting, setting.n)
    divisor = omega_gcd_part(setting, report.omega_case) * _product_of_d(setting, report.d_indices)
    return _code(setting, exact_div(xn1, divisor), report.branch)


def generator_via_theorem(setting: Setting, report: ClassificationReport | None = None) -> CyclicCode:
    report = report or classify(setting)
    if report.q_class % 2:
        return generator_via_theorem1(report, setting)
    return generator_via_theorem2(report, setting)


@dataclass
class DiscrepancyReport:
    agree: bool
    oracle: CyclicCode
    closed_form: CyclicCode | None
    classification: ClassificationReport
    d_divides_gcd: list
    error: str = ""

    def to_dict(self) -> dict:
        out = {
            "agree": self.agree,
            "branch": self.classification.branch,
            "oracle": {"k": self.oracle.k, "deg_gen": self.oracle.gen.degree},
            "d_divides_gcd": self.d_divides_gcd,
        }
        if self.closed_form is not None:
            out["closed_form"] = {"k": self.closed_form.k, "deg_gen": self.closed_form.gen.degree}
        if not self.agree:
            out["oracle"]["gen"] = self.oracle.gen.to_comma()
            if self.closed_form is not None:
                out["closed_form"]["gen"] = self.closed_form.gen.to_comma()
            out["classification"] = self.classification.to_dict()
        if self.error:
            out["error"] = self.error
        return out


def d_divides(setting: Setting, a: int, target: Poly) -> bool:
    f = setting.d_factors[a]
    if f.descended:
        return f.poly.divides(target)
    return f.poly.divides(target.embed(setting.field))


def cross_check(setting: Setting) -> DiscrepancyReport:
    report = classify(setting)
    oracle = generator_via_gcd(setting)
    G = exact_div(_xm1(setting, setting.n), oracle.gen)
    divs = [d_divides(setting, a, G) for a in range(6)]
    try:
        closed = generator_via_theorem(setting, report)
        error = ""
    except UnverifiableBranch as exc:
        closed, error = None, str(exc)
    agree = closed is not None and closed.gen == oracle.gen
    if agree:
        oracle.provenance = f"oracle+{report.branch}"
    return DiscrepancyReport(agree, oracle, closed, report, divs, error)


# constructors with distance statements


def _require_d0(setting: Setting, theorem: int):
    if setting.q_class != 0:
        raise ValueError(f"theorem {theorem} needs q in D0; q is in D{setting.q_class}")


def _check_i(i: int):
    if i not in (1, 2):
        raise ValueError("i must be 1 or 2")


def construct(setting: Setting, theorem: int, indices: tuple = ()) -> CyclicCode:
    """Build the code of a distance theorem and attach its distance statement.

    indices: (i,) for 3; () for 4; (i, j) for 5; (j,) for 6;
    (i, j, h, t) for 7; (i, j, h) for 8.
    """
    indices = tuple(indices)
    n1, n2 = setting.n1, setting.n2
    xn1 = _xm1(setting, setting.n)
    expected = {3: 1, 4: 0, 5: 2, 6: 1, 7: 4, 8: 3}
    if theorem not in expected:
        raise ValueError(f"unknown theorem {theorem}")
    if len(indices) != expected[theorem]:
        raise ValueError(f"theorem {theorem} takes {expected[theorem]} indices, got {indices}")
    if theorem >= 5:
        _require_d0(setting, theorem)
    if theorem in (3, 5, 7):
        _check_i(indices[0])
    for a in indices[1:] if theorem in (5, 7) else (indices if theorem in (6, 8) else ()):
        if not 0 <= a <= 5:
            raise ValueError("class indices must lie in 0..5")
    if theorem == 7 and tuple(indices[1:]) not in ADMISSIBLE_TRIPLES:
        raise ValueError(f"triple {indices[1:]} is not admissible")
    if theorem == 8 and indices not in ADMISSIBLE_TRIPLES:
        raise ValueError(f"triple {indices} is not admissible")

    def xni(i):
        return _xm1(setting, n1 if i == 1 else n2)

    if theorem == 3:
        gen = exact_div(xn1, xni(indices[0]))
    elif theorem == 4:
        gen = d_poly(setting)
    elif theorem == 5:
        gen = exact_div(xn1, xni(indices[0]) * _product_of_d(setting, indices[1:]))
    elif theorem == 6:
        gen = exact_div(d_poly(setting), _product_of_d(setting, indices))
    elif theorem == 7:
        gen = exact_div(xn1, xni(indices[0]) * _product_of_d(setting, indices[1:]))
    else:
        gen = exact_div(d_poly(setting), _product_of_d(setting, indices))
    label = f"theorem{theorem}" + (f"({','.join(map(str, indices))})" if indices else "")
    code = _code(setting, gen, label, theorem=theorem, indices=indices)
    code.distance = theorem_bounds(code)
    return code


def expected_dimension(theorem: int, n1: int, n2: int, indices: tuple = ()) -> int:
    e = (n1 - 1) * (n2 - 1) // 6
    ni = {1: n1, 2: n2}
    if theorem == 3:
        return ni[indices[0]]
    if theorem == 4:
        return n1 + n2 - 1
    if theorem == 5:
        return ni[indices[0]] + e
    if theorem == 6:
        return n1 + n2 - 1 + e
    if theorem == 7:
        return ni[indices[0]] + 3 * e
    if theorem == 8:
        return n1 + n2 - 1 + 3 * e
    raise ValueError(theorem)
