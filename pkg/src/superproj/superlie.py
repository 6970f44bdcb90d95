"""Finite-dimensional Lie superalgebras of vector fields on P^(1|2).

Provides the standard bases of global fields (V/Xi), the SUSY-adapted 4|4
subalgebra (U/Sigma) with its full bracket table, the conformal generators
H, K, D, Y, Q1, Q2, S1, S2 (1/sqrt(2)-normalized, which is what forces the
Q(zeta_8) coefficient field), structure-constant extraction, and the N=2
distribution machinery: symbolic integrability conditions and pointwise
frame checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .linalg import SparseElim, express_in_span
from .scalars import HALF, I, INV_SQRT2, ONE, Scalar
from .superpoly import Context, SuperDerivation, p1m_transition


def _standard_context() -> Context:
    return p1m_transition(2).ctx_a


def standard_fields(ctx: Context = None) -> dict:
    """The 8|8 global fields on P^(1|2) plus the SUSY combinations.

    Works in any context containing (z; t1, t2), so formal even parameters
    can be adjoined for symbolic computations.
    """
    ctx = ctx or _standard_context()
    z, t1, t2 = ctx.var("z"), ctx.var("t1"), ctx.var("t2")
    one = ctx.one()

    def ev(coeffs):  # even field
        return SuperDerivation(ctx, 0, coeffs)

    def od(coeffs):  # odd field
        return SuperDerivation(ctx, 1, coeffs)

    fields = {
        "V1": ev({"z": one}),
        "V2": ev({"z": z}),
        "V3": ev({"z": z * z, "t1": z * t1, "t2": z * t2}),
        "V4": ev({"z": t1 * t2}),
        "V5": ev({"t1": t1}),
        "V6": ev({"t1": t2}),
        "V7": ev({"t2": t1}),
        "V8": ev({"t2": t2}),
        "Xi1": od({"z": t1}),
        "Xi2": od({"z": z * t1, "t2": t1 * t2}),
        "Xi3": od({"z": t2}),
        "Xi4": od({"z": z * t2, "t1": -(t1 * t2)}),
        "Xi5": od({"t1": one}),
        "Xi6": od({"t1": z}),
        "Xi7": od({"t2": one}),
        "Xi8": od({"t2": z}),
    }
    f = fields
    f["U1"] = f["V1"]
    f["U2"] = f["V2"] + f["V5"]
    f["U3"] = f["V3"]
    f["U4"] = f["V2"] + f["V8"]
    f["Sigma1"] = f["Xi1"] + f["Xi7"]
    f["Sigma2"] = f["Xi2"] + f["Xi8"]
    f["Sigma3"] = f["Xi3"] + f["Xi5"]
    f["Sigma4"] = f["Xi4"] + f["Xi6"]
    f["H"] = f["U1"]
    f["K"] = f["U3"]
    f["D"] = (f["U2"] + f["U4"]) * HALF
    f["Y"] = (f["U2"] - f["U4"]) * HALF
    f["Q1"] = (f["Sigma1"] - I * f["Sigma3"]) * INV_SQRT2
    f["Q2"] = (f["Sigma3"] - I * f["Sigma1"]) * INV_SQRT2
    f["S1"] = -((f["Sigma2"] - I * f["Sigma4"]) * INV_SQRT2)
    f["S2"] = -((f["Sigma4"] - I * f["Sigma2"]) * INV_SQRT2)
    return fields


@dataclass
class SuperLieBasis:
    names: list
    elements: dict  # name -> SuperDerivation

    @property
    def parities(self) -> dict:
        return {name: self.elements[name].parity for name in self.names}


def u_sigma_basis() -> SuperLieBasis:
    f = standard_fields()
    names = ["U1", "U2", "U3", "U4", "Sigma1", "Sigma2", "Sigma3", "Sigma4"]
    return SuperLieBasis(names, {n: f[n] for n in names})


def v_xi_basis() -> SuperLieBasis:
    f = standard_fields()
    names = [f"V{i}" for i in range(1, 9)] + [f"Xi{i}" for i in range(1, 9)]
    return SuperLieBasis(names, {n: f[n] for n in names})


def conformal_basis() -> SuperLieBasis:
    f = standard_fields()
    names = ["H", "K", "D", "Y", "Q1", "Q2", "S1", "S2"]
    return SuperLieBasis(names, {n: f[n] for n in names})


class NonClosureError(DomainError):
    def __init__(self, pair, residual):
        super().__init__(
            f"bracket [{pair[0]}, {pair[1]}] falls outside the span; "
            f"residual {residual}"
        )
        self.pair = pair
        self.residual = residual


def structure_constants(basis: SuperLieBasis) -> dict:
    """Tensor {(i, j): {k: Scalar}} with [e_i, e_j] = sum_k c_ij^k e_k."""
    vectors = [basis.elements[name].vectorize() for name in basis.names]
    tensor = {}
    for i, a in enumerate(basis.names):
        for j, b in enumerate(basis.names):
            br = basis.elements[a].bracket(basis.elements[b])
            target = br.vectorize()
            combo = express_in_span(vectors, target)
            if combo is None:
                raise NonClosureError((a, b), br)
            tensor[(a, b)] = {
                basis.names[k]: c for k, c in combo.items() if not c.is_zero()
            }
    return tensor


def bracket_via_constants(tensor, basis: SuperLieBasis, combo_a: dict, combo_b: dict):
    """Expand [sum a_i e_i, sum b_j e_j] through a structure tensor."""
    out = {}
    for i, ca in combo_a.items():
        for j, cb in combo_b.items():
            for k, c in tensor[(i, j)].items():
                cur = out.get(k, Scalar(0))
                out[k] = cur + ca * cb * c
    return {k: v for k, v in out.items() if not v.is_zero()}


# -- osp(2|2) verification ---------------------------------------------------

U_SIGMA_TABLE = {
    ("U1", "U2"): {"U1": 1},
    ("U1", "U3"): {"U2": 1, "U4": 1},
    ("U1", "U4"): {"U1": 1},
    ("U2", "U3"): {"U3": 1},
    ("U2", "U4"): {},
    ("U3", "U4"): {"U3": -1},
    ("Sigma1", "Sigma2"): {},
    ("Sigma1", "Sigma3"): {"U1": 2},
    ("Sigma1", "Sigma4"): {"U2": 2},
    ("Sigma2", "Sigma3"): {"U4": 2},
    ("Sigma2", "Sigma4"): {"U3": 2},
    ("Sigma3", "Sigma4"): {},
    ("U1", "Sigma1"): {},
    ("U1", "Sigma2"): {"Sigma1": 1},
    ("U1", "Sigma3"): {},
    ("U1", "Sigma4"): {"Sigma3": 1},
    ("U2", "Sigma1"): {},
    ("U2", "Sigma2"): {"Sigma2": 1},
    ("U2", "Sigma3"): {"Sigma3": -1},
    ("U2", "Sigma4"): {},
    ("U3", "Sigma1"): {"Sigma2": -1},
    ("U3", "Sigma2"): {},
    ("U3", "Sigma3"): {"Sigma4": -1},
    ("U3", "Sigma4"): {},
    ("U4", "Sigma1"): {"Sigma1": -1},
    ("U4", "Sigma2"): {},
    ("U4", "Sigma3"): {},
    ("U4", "Sigma4"): {"Sigma4": 1},
}


def _eps(i: int, j: int) -> int:
    return 1 if (i, j) == (1, 2) else -1 if (i, j) == (2, 1) else 0


def conformal_equations():
    """(label, left name pair, expected combo) for the unambiguous equations."""
    eqs = []
    m2i = Scalar(-2) * I
    p2i = Scalar(2) * I
    for i in (1, 2):
        for j in (1, 2):
            delta = ONE if i == j else Scalar(0)
            eqs.append((f"{{Q{i},Q{j}}}", (f"Q{i}", f"Q{j}"), {"H": m2i * delta}))
            eqs.append((f"{{S{i},S{j}}}", (f"S{i}", f"S{j}"), {"K": m2i * delta}))
            eqs.append((
                f"{{Q{i},S{j}}}",
                (f"Q{i}", f"S{j}"),
                {"D": p2i * delta, "Y": Scalar(-2 * _eps(i, j))},
            ))
    for i in (1, 2):
        eqs.append((f"[H,Q{i}]", ("H", f"Q{i}"), {}))
        eqs.append((f"[H,S{i}]", ("H", f"S{i}"), {f"Q{i}": Scalar(-1)}))
        eqs.append((f"[D,Q{i}]", ("D", f"Q{i}"), {f"Q{i}": -HALF}))
        eqs.append((f"[D,S{i}]", ("D", f"S{i}"), {f"S{i}": HALF}))
        j = 3 - i
        eqs.append((f"[Y,Q{i}]", ("Y", f"Q{i}"), {f"Q{j}": I * HALF * _eps(i, j)}))
        eqs.append((f"[Y,S{i}]", ("Y", f"S{i}"), {f"S{j}": I * HALF * _eps(i, j)}))
    for name in ("H", "D", "K"):
        eqs.append((f"[Y,{name}]", ("Y", name), {}))
    eqs.append(("[H,D]", ("H", "D"), {"H": ONE}))
    eqs.append(("[H,K]", ("H", "K"), {"D": Scalar(2)}))
    eqs.append(("[D,K]", ("D", "K"), {"K": ONE}))
    return eqs


@dataclass
class VerificationReport:
    entries: list = field(default_factory=list)  # (label, ok, detail)
    computed_only: list = field(default_factory=list)  # (label, value string)

    @property
    def all_passed(self) -> bool:
        return all(ok for _, ok, _ in self.entries)


def _combo_matches(fields, combo, actual: SuperDerivation) -> bool:
    expected = None
    ctx = actual.ctx
    for name, c in combo.items():
        piece = fields[name] * Scalar.coerce(c)
        expected = piece if expected is None else expected + piece
    if expected is None:
        expected = SuperDerivation(ctx, actual.parity, {})
    return expected == actual


def verify_osp22() -> VerificationReport:
    """Exact check of every unambiguous structure equation plus the U/Sigma table.

    Two printed bracket lines conflict ("[H,Q_i] = 0" versus "[H,Q_i] = S_i"
    in one display); the likely-intended [K,Q_i] and [K,S_i] values are
    computed and reported without being asserted.
    """
    f = standard_fields()
    report = VerificationReport()
    for (a, b), combo in U_SIGMA_TABLE.items():
        actual = f[a].bracket(f[b])
        ok = _combo_matches(f, combo, actual)
        report.entries.append((f"[{a},{b}]", ok, str(actual)))
    for label, (a, b), combo in conformal_equations():
        actual = f[a].bracket(f[b])
        ok = _combo_matches(f, combo, actual)
        report.entries.append((label, ok, str(actual)))
    basis = conformal_basis()
    vectors = [basis.elements[n].vectorize() for n in basis.names]
    for i in (1, 2):
        for target in (f"Q{i}", f"S{i}"):
            br = f["K"].bracket(f[target])
            combo = express_in_span(vectors, br.vectorize())
            rendered = " + ".join(
                f"({c})*{basis.names[k]}" for k, c in sorted(combo.items())
            ) if combo else "0"
            report.computed_only.append((f"[K,{target}]", rendered))
    return report


# -- N=2 distributions --------------------------------------------------------

ALPHA_NAMES = tuple(f"a{i}" for i in range(1, 9))
BETA_NAMES = tuple(f"b{i}" for i in range(1, 9))


def ansatz_context(extra=ALPHA_NAMES) -> Context:
    return Context(("z",) + tuple(extra), ("t1", "t2"))


def general_odd_section(param_names=ALPHA_NAMES, ctx: Context = None) -> SuperDerivation:
    """D_odd = sum over i of param_i * Xi_i with formal even parameters."""
    ctx = ctx or ansatz_context(param_names)
    f = standard_fields(ctx)
    total = None
    for i, name in enumerate(param_names, start=1):
        piece = f[f"Xi{i}"] * ONE
        piece = SuperDerivation(
            ctx, 1, {v: ctx.var(name) * c for v, c in piece.coeffs.items()}
        )
        total = piece if total is None else total + piece
    return total


def integrability_conditions(d_odd: SuperDerivation = None) -> list:
    """Quadratic parameter conditions equivalent to D_odd^2 = 0.

    Each condition is returned as a polynomial in the formal parameters
    (a SuperPolynomial with no z/theta content).
    """
    d_odd = d_odd if d_odd is not None else general_odd_section()
    ctx = d_odd.ctx
    square = d_odd.bracket(d_odd) * HALF
    param_positions = [
        i for i, name in enumerate(ctx.even) if name not in ("z", "w")
    ]
    geom_positions = [
        i for i, name in enumerate(ctx.even) if name in ("z", "w")
    ]
    conditions = {}
    for var, poly in square.coeffs.items():
        for (exps, mask), c in poly.terms.items():
            geom_key = (var, tuple(exps[i] for i in geom_positions), mask)
            param_exps = tuple(
                exps[i] if i in param_positions else 0 for i in range(len(exps))
            )
            bucket = conditions.setdefault(geom_key, {})
            key = (param_exps, 0)
            bucket[key] = bucket.get(key, Scalar(0)) + c
    out = []
    seen = set()
    for bucket in conditions.values():
        terms = {k: v for k, v in bucket.items() if not v.is_zero()}
        if not terms:
            continue
        # normalize sign/scale by the leading term for deduplication
        lead = min(terms)
        scale = terms[lead].inverse()
        canon = frozenset((k, (v * scale)) for k, v in terms.items())
        if canon in seen:
            continue
        seen.add(canon)
        from .superpoly import SuperPolynomial

        out.append(SuperPolynomial(ctx, {k: v * scale for k, v in terms.items()}))
    return out


@dataclass
class SrsReport:
    d1_square_zero: bool
    d2_square_zero: bool
    anticommutator: SuperDerivation
    frame_results: list  # (chart, point, ok)

    @property
    def frame_everywhere(self) -> bool:
        return all(ok for _, _, ok in self.frame_results)


DEFAULT_SAMPLES = (0, 1, -1, 2, Fraction(1, 2), -3)


def _frame_rank(fields, even_name, odd_names, point) -> bool:
    elim = SparseElim()
    for d in fields:
        row = {}
        try:
            for k, name in enumerate([even_name] + list(odd_names)):
                val = d.coefficient(name).eval_body(point)
                if not val.is_zero():
                    row[k] = val
        except ZeroDivisionError:
            return False  # a pole at the sample point: no frame there
        elim.add(row)
    return elim.rank == 3


def check_srs_pair(d1: SuperDerivation, d2: SuperDerivation,
                   samples=DEFAULT_SAMPLES) -> SrsReport:
    """Distribution checks for a candidate N=2 pair on P^(1|2).

    Verifies D1^2 = D2^2 = 0, computes {D1, D2}, and samples the frame
    condition (the 3x3 reduced coefficient matrix of D1, D2, {D1,D2} against
    d/dz, d/dt1, d/dt2 is invertible) at rational points in both charts.
    """
    tr = p1m_transition(2)
    if d1.ctx != tr.ctx_a or d2.ctx != tr.ctx_a:
        raise DomainError("expected U-chart fields on P^(1|2)")
    zero = SuperDerivation(tr.ctx_a, 0, {})
    sq1 = d1.bracket(d1) * HALF
    sq2 = d2.bracket(d2) * HALF
    anti = d1.bracket(d2)
    frame = []
    u_fields = [anti, d1, d2]
    for s in samples:
        ok = _frame_rank(u_fields, "z", ("t1", "t2"), {"z": s})
        frame.append(("U", s, ok))
    v_fields = [x.pushforward(tr) for x in u_fields]
    for s in samples:
        ok = _frame_rank(v_fields, "w", ("p1", "p2"), {"w": s})
        frame.append(("V", s, ok))
    return SrsReport(
        d1_square_zero=sq1 == zero,
        d2_square_zero=sq2 == zero,
        anticommutator=anti,
        frame_results=frame,
    )
