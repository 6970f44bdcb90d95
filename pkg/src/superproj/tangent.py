"""Tangent sheaf cohomology and global vector fields.

Dimensions come from the super Euler sequence

    0 -> O -> O(1) (x) C^(n+1|m) -> T -> 0,

whose long exact sequence needs one nontrivial input: the kernel of the edge
map H^n(O) -> H^n(O(1))^(n+1|m).  Serre duality realizes that edge map as the
super gradient on super-symmetric powers of the dual coordinates, whose rank
is computed by an explicit exact integer matrix.

Independently, global fields on P^(1|m) are found by brute force: a
polynomial ansatz on the U chart, pushed to the V chart, with all polar
coefficients required to vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cohomology import DimPair, cohomology_dims
from .errors import DomainError, InstabilityError
from .linalg import SparseElim, bareiss_rank, echelon_basis
from .superpoly import (
    Context,
    SuperDerivation,
    mask_parity,
    p1m_transition,
    pnm_transition,
)


@dataclass
class TangentReport:
    n: int
    m: int
    h0: DimPair
    h1: DimPair
    rigid: bool
    sl_dim: DimPair
    exceptional: bool


def sl_dimension(n: int, m: int) -> DimPair:
    return DimPair(n * n + m * m + 2 * n, 2 * n * m + 2 * m)


def super_gradient_rank(n: int, m: int) -> dict:
    """Rank data of the super gradient on Sym^(m-n-1) of C^(n+1|m) duals.

    The map sends f to (df/dX_0, ..., df/dX_n, -df/dT_1, ..., -df/dT_m); the
    minus signs on odd rows come from the super transposition.  Returns
    domain and kernel dimensions split by source parity.
    """
    d = m - n - 1
    if d < 0:
        return {"domain_dim": DimPair(0, 0), "kernel_dim": DimPair(0, 0)}
    ctx = Context(
        tuple(f"X{j}" for j in range(n + 1)),
        tuple(f"T{i}" for i in range(1, m + 1)),
    )

    def degree_monomials(deg):
        out = []
        for size in range(min(deg, m) + 1):
            rest = deg - size
            for mask_bits in combinations(range(m), size):
                mask = sum(1 << b for b in mask_bits)
                for exps in _compositions(rest, n + 1):
                    out.append((exps, mask))
        return out

    source = degree_monomials(d)
    target_index = {key: i for i, key in enumerate(degree_monomials(d - 1))} if d else {}
    names = ctx.even + ctx.odd

    kernel = {}
    domain = {}
    for parity in (0, 1):
        cols = [key for key in source if mask_parity(key[1]) == parity]
        domain[parity] = len(cols)
        rows = []
        for exps, mask in cols:
            mono = ctx.monomial(1, exps, mask)
            col = [0] * (len(names) * len(target_index))
            for v, name in enumerate(names):
                dm = mono.partial(name)
                sign = -1 if name.startswith("T") else 1
                for (texps, tmask), c in dm.terms.items():
                    col[v * len(target_index) + target_index[(texps, tmask)]] = (
                        sign * int(c.rational_value())
                    )
            rows.append(col)
        # rank of the transpose equals rank of the map on this parity block
        kernel[parity] = len(cols) - bareiss_rank(rows)
    return {
        "domain_dim": DimPair(domain[0], domain[1]),
        "kernel_dim": DimPair(kernel[0], kernel[1]),
    }


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def euler_tangent_dims(n: int, m: int) -> TangentReport:
    """Tangent cohomology assembled from the Euler long exact sequence."""
    if n < 1 or m < 0:
        raise DomainError("need n >= 1 and m >= 0")
    d0 = cohomology_dims(n, m, 0)
    d1 = cohomology_dims(n, m, 1)
    h0_mid = (n + 1) * d1[0] + m * d1[0].swap()
    hn_mid = (n + 1) * d1[n] + m * d1[n].swap()
    kernel = super_gradient_rank(n, m)["kernel_dim"]
    if m % 2:
        # H^n(O) pairs against an odd-twisted dual space
        kernel = kernel.swap()
    if n == 1:
        h0 = h0_mid - d0[0] + kernel
        h1 = hn_mid - (d0[1] - kernel)
    elif n == 2:
        h0 = h0_mid - d0[0]
        h1 = kernel
    else:
        h0 = h0_mid - d0[0]
        h1 = DimPair(0, 0)
    sl = sl_dimension(n, m)
    return TangentReport(
        n=n,
        m=m,
        h0=h0,
        h1=h1,
        rigid=h1 == DimPair(0, 0),
        sl_dim=sl,
        exceptional=h0 != sl,
    )


@dataclass
class GlobalFieldBasis:
    even_fields: list  # SuperDerivation, U-chart representatives
    odd_fields: list

    @property
    def dims(self) -> DimPair:
        return DimPair(len(self.even_fields), len(self.odd_fields))

    def all_fields(self):
        return self.even_fields + self.odd_fields


def _solve_global_fields(m: int, bound_z: int, bound_t: int) -> list:
    tr = p1m_transition(m)
    ctx = tr.ctx_a
    ansatz = []
    for mask in range(1 << m):
        for deg in range(bound_z + 1):
            coeff = ctx.monomial(1, (deg,), mask)
            ansatz.append(SuperDerivation(ctx, mask_parity(mask), {"z": coeff}))
        for i in range(1, m + 1):
            for deg in range(bound_t + 1):
                coeff = ctx.monomial(1, (deg,), mask)
                ansatz.append(
                    SuperDerivation(ctx, mask_parity(mask) ^ 1, {f"t{i}": coeff})
                )
    elim = SparseElim(track=True)
    for j, field in enumerate(ansatz):
        pushed = field.pushforward(tr)
        polar = {
            key: c for key, c in pushed.vectorize().items() if key[1][0] < 0
        }
        elim.add(polar, tag_key=j)
    fields = []
    for combo in elim.kernel:
        total = None
        for j, c in combo.items():
            piece = ansatz[j] * c
            total = piece if total is None else total + piece
        fields.append(total)
    return fields


def _echelonize_fields(fields, ctx) -> list:
    vecs = [f.vectorize() for f in fields]
    out = []
    for row in echelon_basis(vecs):
        coeffs = {}
        parity = None
        for (name, exps, mask), c in row.items():
            kind, _ = ctx.lookup(name)
            p = mask_parity(mask) ^ (0 if kind == "even" else 1)
            parity = p if parity is None else parity
            coeffs.setdefault(name, ctx.zero())
            coeffs[name] = coeffs[name] + ctx.monomial(c, exps, mask)
        out.append(SuperDerivation(ctx, parity, coeffs))
    return out


def global_tangent_fields(m: int, degree_bound: int = None) -> GlobalFieldBasis:
    """All global vector fields on P^(1|m) by the pole-freeness ansatz."""
    if m > 4:
        raise DomainError("global field solver covers m <= 4")
    bound = degree_bound if degree_bound is not None else 2 + m
    if bound < 2:
        raise DomainError("degree_bound must be at least 2")
    ctx = p1m_transition(m).ctx_a
    fields = _solve_global_fields(m, bound, bound - 1)
    again = _solve_global_fields(m, bound + 1, bound)
    if len(again) != len(fields):
        raise InstabilityError(
            f"global field count still growing at degree bound {bound}",
            suggested=bound + 2,
        )
    basis = _echelonize_fields(fields, ctx)
    even = [f for f in basis if f.parity == 0]
    odd = [f for f in basis if f.parity == 1]
    return GlobalFieldBasis(even_fields=even, odd_fields=odd)


def bosonization_check(n: int, m: int) -> bool:
    """Whether any field sum(c_ij^a theta_i theta_j d/dz_a) extends globally."""
    if m < 2:
        return False
    tr = p1m_transition(m) if n == 1 else pnm_transition(n, m)
    ctx = tr.ctx_a
    even_names = ctx.even
    elim = SparseElim(track=True)
    count = 0
    for name in even_names:
        for i, j in combinations(range(m), 2):
            mask = (1 << i) | (1 << j)
            field = SuperDerivation(ctx, 0, {name: ctx.monomial(1, None, mask)})
            pushed = field.pushforward(tr)
            polar = {
                key: c
                for key, c in pushed.vectorize().items()
                if any(e < 0 for e in key[1])
            }
            elim.add(polar, tag_key=count)
            count += 1
    return bool(elim.kernel)


def tangent_report_json(n: int, m: int, with_basis: bool = False) -> dict:
    report = euler_tangent_dims(n, m)
    out = {
        "schema": 1,
        "n": n,
        "m": m,
        "h0": report.h0.to_json(),
        "h1": report.h1.to_json(),
        "rigid": report.rigid,
        "exceptional": report.exceptional,
    }
    if with_basis:
        if n != 1:
            raise DomainError("field basis available only for n = 1")
        basis = global_tangent_fields(m)
        out["basis"] = [str(f) for f in basis.all_fields()]
    return out
