"""Brute-force Cech cohomology over the two-chart cover of P^(1|m).

A rank-1|0 sheaf is described by an even invertible transition function W in
the V-chart variables (w, p1..pm); a section pair (P, Q) glues iff
Q = W * (P o chart).  Cochain spaces are truncated to a finite window and the
computation is repeated at window D and D+1 until the dimensions agree.

The coboundary never mixes odd-mask sectors that are unreachable from each
other through W's terms, so the problem splits into many small exact linear
systems (union-find on masks) instead of one large one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cohomology import DimPair
from .errors import DomainError, InstabilityError, ParityError
from .linalg import SparseElim, echelon_basis
from .scalars import ONE
from .superpoly import (
    ChartTransition,
    SuperPolynomial,
    mask_parity,
    p1m_transition,
)


@lru_cache(maxsize=None)
def standard_transition(m: int) -> ChartTransition:
    return p1m_transition(m)


class TransitionSheaf:
    """A rank-1|0 sheaf on P^(1|m) given by the frame rule e_U = W e_V."""

    def __init__(self, m: int, W: SuperPolynomial):
        if m < 0:
            raise DomainError("need m >= 0")
        self.m = m
        self.transition = standard_transition(m)
        if W.ctx != self.transition.ctx_b:
            raise DomainError("W must live in the V chart (w, p1..pm)")
        if W.parity() != 0:
            raise ParityError("transition function must be even")
        body = W.body().terms
        if len(body) != 1:
            raise DomainError("transition function body must be c*w^k, c != 0")
        self.W = W
        (exps, _), c = next(iter(body.items()))
        self.body_exponent = exps[0]
        self.body_coeff = c

    @property
    def depth(self) -> int:
        """Largest |Laurent exponent| appearing in W."""
        lo, hi = self.W.even_exponent_range("w")
        return max(abs(lo), abs(hi))

    def __repr__(self):
        return f"TransitionSheaf(m={self.m}, W={self.W})"


def twist_sheaf(m: int, ell: int) -> TransitionSheaf:
    """The sheaf O(ell): W = w^ell, calibrated at m=0 against the Bott numbers."""
    ctx_b = standard_transition(m).ctx_b
    return TransitionSheaf(m, ctx_b.monomial(1, (ell,), 0))


@dataclass(frozen=True)
class CechWindow:
    """Degree bound: C0 sections up to degree D, C1 Laurent band [-D, D]."""

    D: int

    def check(self, sheaf: TransitionSheaf):
        if self.D < sheaf.depth + sheaf.m:
            raise DomainError(
                f"window D={self.D} below depth(W)+m = {sheaf.depth + sheaf.m}"
            )


@dataclass
class CohomologyResult:
    h0: DimPair
    h1: DimPair
    generators_h0: list  # V-chart polynomials (the Q component of sections)
    generators_h1: list  # V-chart Laurent polynomials
    window_used: CechWindow
    stabilized: bool
    _image_rref: list = None  # (pivot, row) pairs for the in-window image
    _ctx_b = None

    def h1_class(self, cocycle: SuperPolynomial) -> dict:
        """Canonical coordinates of a V-chart cocycle in the H1 quotient."""
        vec = {(exps[0], mask): c for (exps, mask), c in cocycle.terms.items()}
        for pivot, row in self._image_rref:
            c = vec.get(pivot)
            if c is None or c.is_zero():
                continue
            for k, v in row.items():
                cur = vec.get(k)
                new = (cur - c * v) if cur is not None else -(c * v)
                if new.is_zero():
                    vec.pop(k, None)
                else:
                    vec[k] = new
        return vec

    def h1_span_equals(self, cocycles) -> bool:
        """Whether given cocycles span the computed H1 (compared in the quotient)."""
        from .linalg import spans_equal

        given = [self.h1_class(c) for c in cocycles]
        computed = [self.h1_class(g) for g in self.generators_h1]
        return spans_equal(given, computed)


def _mask_components(m: int, term_masks, mask_pred=None):
    """Partition odd masks into sectors the coboundary cannot mix."""
    masks = [s for s in range(1 << m) if mask_pred is None or mask_pred(s)]
    allowed = set(masks)
    parent = {s: s for s in masks}

    def find(s):
        while parent[s] != s:
            parent[s] = parent[parent[s]]
            s = parent[s]
        return s

    for s in masks:
        for t in term_masks:
            if t and not (s & t) and (s | t) in allowed:
                a, b = find(s), find(s | t)
                if a != b:
                    parent[a] = b
    groups = {}
    for s in masks:
        groups.setdefault(find(s), []).append(s)
    return sorted(groups.values())


def _run_window(sheaf: TransitionSheaf, window: CechWindow, mask_pred,
                want_generators: bool):
    """One full computation at a fixed window; no stabilization logic."""
    window.check(sheaf)
    D = window.D
    depth = sheaf.depth
    tr = sheaf.transition
    ctx_a, ctx_b = tr.ctx_a, tr.ctx_b
    m = sheaf.m
    band = range(-(D - depth), D - depth + 1)  # in-window C1 exponents

    term_masks = {mask for (_, mask) in sheaf.W.terms}
    components = _mask_components(m, term_masks, mask_pred)

    h0 = {0: 0, 1: 0}
    h1 = {0: 0, 1: 0}
    gens_h0, gens_h1 = [], []
    image_rref = []

    for comp in components:
        parity = mask_parity(comp[0])
        comp_set = set(comp)

        # columns of the coboundary, keyed by C1 monomials (w-exp, mask)
        p_monomials = [(a, s) for s in comp for a in range(D + 1)]
        q_monomials = [(b, s) for s in comp for b in range(D + 1)]
        p_images = []
        for a, s in p_monomials:
            mono = ctx_a.monomial(1, (a,), s)
            img = sheaf.W * tr.to_b(mono)
            img = img.mask_filter(lambda mk: mk in comp_set)
            p_images.append({
                (exps[0], mask): c for (exps, mask), c in img.terms.items()
            })

        # ---- h0: kernel of the polar-part map on truncated P space ----
        elim = SparseElim(track=True)
        for j, vec in enumerate(p_images):
            polar = {k: v for k, v in vec.items() if k[0] < 0}
            elim.add(polar, tag_key=j)
        h0[parity] += len(elim.kernel)
        if want_generators:
            for combo in elim.kernel:
                q = ctx_b.zero()
                for j, c in combo.items():
                    for k, v in p_images[j].items():
                        q = q + ctx_b.monomial(c * v, (k[0],), k[1])
                gens_h0.append(q)

        # ---- h1: window quotient ----
        # in-window image = combinations of columns vanishing outside the band
        def in_band(key):
            return key[0] in band

        out_elim = SparseElim(track=True)
        columns = []
        for b, s in q_monomials:
            columns.append({(b, s): ONE})
        columns.extend(p_images)
        for j, col in enumerate(columns):
            out_elim.add({k: v for k, v in col.items() if not in_band(k)}, tag_key=j)

        in_image = []
        for combo in out_elim.kernel:
            vec = {}
            for j, c in combo.items():
                for k, v in columns[j].items():
                    cur = vec.get(k)
                    new = (cur + c * v) if cur is not None else c * v
                    if new.is_zero():
                        vec.pop(k, None)
                    else:
                        vec[k] = new
            if vec:
                in_image.append(vec)

        rref_rows = echelon_basis(in_image)
        pivots = set()
        for row in rref_rows:
            pivot = min(row)
            pivots.add(pivot)
            image_rref.append((pivot, row))
        window_size = len(comp) * len(band)
        h1[parity] += window_size - len(rref_rows)
        if want_generators:
            for s in comp:
                for j in band:
                    if (j, s) not in pivots:
                        gens_h1.append(ctx_b.monomial(1, (j,), s))

    result = CohomologyResult(
        h0=DimPair(h0[0], h0[1]),
        h1=DimPair(h1[0], h1[1]),
        generators_h0=gens_h0,
        generators_h1=gens_h1,
        window_used=window,
        stabilized=False,
        _image_rref=image_rref,
    )
    return result


def default_window(sheaf: TransitionSheaf) -> CechWindow:
    return CechWindow(2 * sheaf.depth + sheaf.m + 2)


def cech_cohomology(sheaf: TransitionSheaf, window: CechWindow = None,
                    mask_pred=None, want_generators: bool = True) -> CohomologyResult:
    """Cech cohomology of a transition sheaf with window stabilization.

    Dimensions are accepted once two consecutive windows agree; otherwise the
    window is advanced once more, and persistent disagreement raises
    InstabilityError with a suggested retry size.
    """
    if window is None:
        window = default_window(sheaf)
    cur = _run_window(sheaf, window, mask_pred, want_generators)
    for attempt in range(2):
        nxt = _run_window(
            sheaf, CechWindow(cur.window_used.D + 1), mask_pred, want_generators
        )
        if (cur.h0, cur.h1) == (nxt.h0, nxt.h1):
            cur.stabilized = True
            return cur
        cur = nxt
    raise InstabilityError(
        f"Cech dimensions did not stabilize by D={cur.window_used.D}",
        suggested=2 * cur.window_used.D,
    )


def oracle_check_line(m: int, ell: int) -> bool:
    """Cech dims of O(ell) on P^(1|m) against the closed forms, parity-resolved."""
    from .cohomology import cohomology_dims

    if m > 6 or abs(ell) > 8:
        raise DomainError("oracle grid limited to m <= 6, |ell| <= 8")
    result = cech_cohomology(twist_sheaf(m, ell), want_generators=False)
    closed = cohomology_dims(1, m, ell)
    return result.h0 == closed[0] and result.h1 == closed[1]
