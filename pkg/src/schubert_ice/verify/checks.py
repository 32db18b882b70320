"""Verification procedures for single permutations and block pairs."""

from __future__ import annotations

import random
from collections import Counter

from .. import bpd as B
from ..ideal import (
    BudgetExceeded,
    DEFAULT_BUDGET,
    Ideal,
    MonomialIdeal,
    buchberger,
    cdg_generators,
    check_minor_leads,
    components,
    equivariant_class,
    first_nonreducing_pair,
    fulton_generators,
    is_groebner,
    is_groebner_reference,
    j_ideal,
    j_lambda,
    l_ideal,
    leading_monomials,
    mono_intersect,
    mono_intersect_all,
    mono_sum,
    same_ideal,
    shift_down,
    shift_right,
)
from ..ideal.monomial import pack
from ..perm import (
    Partition,
    PartialPermutation,
    Permutation,
    as_perm,
    avoids_cdg_patterns,
    block_sum,
    complete,
    corner_block,
    dominant_part,
    is_banner,
    is_block_predominant,
    maximal_corner,
    transition,
)
from ..poly import DIAGONAL, UNVERIFIED, Polynomial, TermOrder, classify_order, schubert_bpd, schubert_oracle, x, y
from ..poly.polynomial import Var
from .report import FAIL, PASS, SKIPPED, VerificationReport, make, timed


# --- helpers -------------------------------------------------------------------


def resolve_order(order, m: int, n: int | None = None) -> TermOrder:
    n = m if n is None else n
    if order is None:
        return TermOrder.row_lex(m, n)
    if isinstance(order, str):
        return TermOrder.named(order, m, n)
    return order.extend(m, n)


def _order_name(order) -> str:
    if order is None:
        return "row-lex"
    return order if isinstance(order, str) else order.name


def _cells_json(cells) -> list:
    return [[int(i), int(j)] for i, j in sorted(cells)]


def _multiset_json(counter: Counter) -> list:
    return sorted([_cells_json(d), k] for d, k in counter.items())


def _bpd_diagrams(w) -> Counter:
    return Counter(frozenset(B.diagram(P)) for P in B.enumerate_bpds(w))


def _ambient(w) -> tuple:
    return (w.rows, w.cols)


# --- BPD formula and transition -------------------------------------------------------


def check_bpd_formula(w) -> VerificationReport:
    """Sum of BPD weights against the divided-difference oracle."""
    w = as_perm(w)
    with timed() as t:
        lhs = schubert_bpd(w)
        rhs = schubert_oracle(w)
        wit = {"bpd_count": len(B.enumerate_bpds(w)), "polynomial": str(lhs)}
        if lhs == rhs:
            return make(w, "bpd-formula", None, PASS, wit, t)
        wit.update(oracle=str(rhs), difference=str(lhs - rhs), violation="BPD sum differs from the oracle")
        return make(w, "bpd-formula", None, FAIL, wit, t)


def check_transition(w) -> VerificationReport:
    """Transition identity for polynomials and for BPD diagram multisets."""
    w = complete(as_perm(w))
    with timed() as t:
        if w.is_identity():
            return make(w, "transition", None, SKIPPED, {"reason": "the identity has no transition"}, t)
        tr = transition(w)
        wit = {
            "r": tr.r,
            "s": tr.s,
            "v": str(tr.v),
            "phi": [str(u) for u in tr.phi],
        }
        lhs = schubert_bpd(w)
        rhs = (x(tr.r) - y(tr.s)) * schubert_bpd(tr.v)
        for u in tr.phi:
            rhs = rhs + schubert_bpd(u)
        want = _bpd_diagrams(w)
        from_v = Counter(d | {(tr.r, tr.s)} for d in _bpd_diagrams(tr.v).elements())
        from_u = Counter()
        for u in tr.phi:
            from_u.update(_bpd_diagrams(u))
        got = from_v + from_u
        wit["v_diagrams"] = _multiset_json(from_v)
        wit["phi_diagrams"] = _multiset_json(from_u)
        if lhs != rhs:
            wit["violation"] = "polynomial transition identity"
            wit["difference"] = str(lhs - rhs)
            return make(w, "transition", None, FAIL, wit, t)
        if got != want:
            wit["violation"] = "diagram multiset identity"
            wit["w_diagrams"] = _multiset_json(want)
            return make(w, "transition", None, FAIL, wit, t)
        return make(w, "transition", None, PASS, wit, t)


# --- Groebner checks -----------------------------------------------------------------


def check_cdg(w, order=None, budget: int | None = DEFAULT_BUDGET) -> VerificationReport:
    """Do the CDG generators form a Groebner basis under ``order``?"""
    w = as_perm(w)
    name = _order_name(order)
    with timed() as t:
        ordr = resolve_order(order, *_ambient(w))
        G = cdg_generators(w)
        wit = {"generators": len(G)}
        try:
            bad = first_nonreducing_pair(G, ordr, budget)
        except BudgetExceeded as exc:
            return make(w, "cdg", name, SKIPPED, {"reason": f"budget: {exc}"}, t)
        if bad is None:
            return make(w, "cdg", name, PASS, wit, t)
        i, j, rem = bad
        wit.update(
            violation="S-polynomial does not reduce to zero",
            pair=[str(G.generators[i]), str(G.generators[j])],
            remainder=str(rem),
        )
        return make(w, "cdg", name, FAIL, wit, t)


def _diagonal_order(order, m, n) -> TermOrder:
    ordr = resolve_order(order, m, n)
    if ordr.classification == UNVERIFIED:
        ordr = ordr.with_classification(classify_order(ordr, min(m, n), m, n))
    return ordr


def check_conjecture1(w, order=None, budget: int | None = DEFAULT_BUDGET, recheck: bool = True) -> VerificationReport:
    """Components of init I_w, with multiplicity, against BPD diagrams."""
    w = as_perm(w)
    name = _order_name(order)
    with timed() as t:
        ordr = _diagonal_order(order, *_ambient(w))
        if ordr.classification != DIAGONAL:
            return make(w, "conjecture1", name, SKIPPED, {"reason": f"order is {ordr.classification}, not diagonal"}, t)
        F = fulton_generators(w)
        check_minor_leads(F.records, ordr)
        try:
            GB = buchberger(F, ordr, budget)
        except BudgetExceeded as exc:
            return make(w, "conjecture1", name, SKIPPED, {"reason": f"budget: {exc}"}, t)
        if recheck and not is_groebner_reference(GB.generators, ordr):
            raise AssertionError(f"Groebner basis for {w} failed the reference check")
        A = MonomialIdeal.from_monomials(leading_monomials(GB, ordr))
        comps = components(A)
        ell = w.length()
        got = Counter({P.cells: mult for P, mult in comps})
        want = _bpd_diagrams(w)
        wit = {
            "length": ell,
            "initial_ideal": str(A),
            "components": sorted([_cells_json(P.cells), mult] for P, mult in comps),
            "bpd_diagrams": _multiset_json(want),
        }
        wrong = [P for P, _ in comps if P.codim != ell]
        if wrong:
            wit["violation"] = "minimal prime of unexpected codimension"
            wit["prime"] = _cells_json(wrong[0].cells)
            return make(w, "conjecture1", name, FAIL, wit, t)
        if got != want:
            wit["violation"] = "component multiset differs from the BPD diagram multiset"
            return make(w, "conjecture1", name, FAIL, wit, t)
        return make(w, "conjecture1", name, PASS, wit, t)


def check_banner(w, order=None, budget: int | None = DEFAULT_BUDGET) -> VerificationReport:
    """For banner w: init I_w is the intersection of the L_P, squarefree, with the right class."""
    w = as_perm(w)
    name = _order_name(order)
    with timed() as t:
        if not is_banner(w):
            return make(w, "banner", name, SKIPPED, {"reason": "not a banner permutation"}, t)
        ordr = resolve_order(order, *_ambient(w))
        try:
            GB = buchberger(fulton_generators(w), ordr, budget)
        except BudgetExceeded as exc:
            return make(w, "banner", name, SKIPPED, {"reason": f"budget: {exc}"}, t)
        A = MonomialIdeal.from_monomials(leading_monomials(GB, ordr))
        L = mono_intersect_all(l_ideal(B.diagram(P)) for P in B.enumerate_bpds(w))
        wit = {"initial_ideal": str(A), "intersection": str(L)}
        if A != L:
            wit["violation"] = "init I_w differs from the intersection of the L_P"
            return make(w, "banner", name, FAIL, wit, t)
        if not A.is_squarefree():
            wit["violation"] = "init I_w is not squarefree"
            return make(w, "banner", name, FAIL, wit, t)
        cls = equivariant_class(A)
        if cls != schubert_oracle(w):
            wit["violation"] = "equivariant class differs from the Schubert polynomial"
            wit["class"] = str(cls)
            return make(w, "banner", name, FAIL, wit, t)
        return make(w, "banner", name, PASS, wit, t)


def check_pattern(w, order=None, budget: int | None = DEFAULT_BUDGET) -> VerificationReport:
    """Eight-pattern avoidance agrees with the CDG property."""
    w = as_perm(w)
    with timed() as t:
        rep = check_cdg(w, order, budget)
        if rep.outcome == SKIPPED:
            return make(w, "pattern", rep.order, SKIPPED, rep.witnesses, t)
        avoids = avoids_cdg_patterns(w)
        wit = {"avoids_patterns": avoids, "cdg": rep.passed}
        if avoids != rep.passed:
            wit["violation"] = "pattern avoidance and CDG disagree"
            return make(w, "pattern", rep.order, FAIL, wit, t)
        return make(w, "pattern", rep.order, PASS, wit, t)


# --- predominant recurrence ------------------------------------------------------------


def _times_variable(A: MonomialIdeal, cell) -> MonomialIdeal:
    z = pack({tuple(cell): 1})
    return MonomialIdeal(g + z for g in A.gens)


def quotient_identity(w, order: TermOrder) -> dict:
    """J_w = J_v + z_rs J^lam_{r-1,s-1}, the quotient statement after adding J_v.

    When the maximal corner lies in Dom(w) the statement degenerates to
    J_w = J_v + <z_rs>.  Otherwise it is checked on the completed block that
    carries the corner, with lam = Dom of that block.
    """
    w = complete(as_perm(w))
    r, s = maximal_corner(w)
    if (r, s) in dominant_part(w):
        tr = transition(w)
        lhs = j_ideal(w, order)
        rhs = mono_sum(j_ideal(tr.v, order), MonomialIdeal.from_cells([(r, s)]))
        return {"form": "dominant corner", "holds": lhs == rhs, "corner": [r, s]}
    blk = corner_block(w)
    tr = transition(blk)
    n = len(blk)
    lam = dominant_part(blk)
    head = Partition(lam[: tr.r - 1])
    JL = j_lambda(head, tr.r - 1, tr.s - 1, order, ambient=(n, n))
    lhs = j_ideal(blk, order)
    rhs = mono_sum(j_ideal(tr.v, order), _times_variable(JL, (tr.r, tr.s)))
    return {
        "form": "corner block",
        "holds": lhs == rhs,
        "block": str(blk),
        "corner": [tr.r, tr.s],
        "lambda": list(head),
        "j_lambda": str(JL),
    }


def check_recurrence(w, order=None) -> VerificationReport:
    """J_w = (J_v + <z_rs>) cap (cap_i J_u(i)) for block predominant w."""
    w = complete(as_perm(w))
    name = _order_name(order)
    with timed() as t:
        if not is_block_predominant(w):
            return make(w, "recurrence", name, SKIPPED, {"reason": "not block predominant"}, t)
        if w.is_identity():
            return make(w, "recurrence", name, PASS, {"trivial": "identity"}, t)
        ordr = resolve_order(order, len(w))
        tr = transition(w)
        Jw = j_ideal(w, ordr)
        Jv = j_ideal(tr.v, ordr)
        Ju = [j_ideal(u, ordr) for u in tr.phi]
        rhs = mono_intersect(mono_sum(Jv, MonomialIdeal.from_cells([(tr.r, tr.s)])), mono_intersect_all(Ju))
        wit = {
            "r": tr.r,
            "s": tr.s,
            "v": str(tr.v),
            "phi": [str(u) for u in tr.phi],
            "lambda": list(dominant_part(w)),
            "phi_dominant_parts": [list(dominant_part(u)) for u in tr.phi],
            "J_w": str(Jw),
        }
        if not Jv.issubset(Jw):
            wit["violation"] = "J_v is not contained in J_w"
            return make(w, "recurrence", name, FAIL, wit, t)
        for u, J in zip(tr.phi, Ju):
            if not Jv.issubset(J):
                wit["violation"] = f"J_v is not contained in J_u for u = {u}"
                return make(w, "recurrence", name, FAIL, wit, t)
        if Jw != rhs:
            wit["violation"] = "ideal recurrence"
            wit["rhs"] = str(rhs)
            return make(w, "recurrence", name, FAIL, wit, t)
        q = quotient_identity(w, ordr)
        wit["quotient"] = q
        if not q["holds"]:
            wit["violation"] = "quotient identity"
            return make(w, "recurrence", name, FAIL, wit, t)
        return make(w, "recurrence", name, PASS, wit, t)


# --- block sums ------------------------------------------------------------------------


def _partial(w) -> PartialPermutation:
    w = as_perm(w)
    return w.to_partial() if isinstance(w, Permutation) else w


def glued_diagram(a: int, b: int, du, dv) -> frozenset:
    """[a] x [b] together with D(B_v) to its right and D(B_u) below."""
    cells = {(i, j) for i in range(1, a + 1) for j in range(1, b + 1)}
    cells |= {(i, j + b) for i, j in dv}
    cells |= {(i + a, j) for i, j in du}
    return frozenset(cells)


def check_block(u, v, order=None, budget: int | None = DEFAULT_BUDGET) -> VerificationReport:
    """BPD product law, glued diagrams and the shifted Groebner concatenation."""
    u, v = _partial(u), _partial(v)
    name = _order_name(order)
    subject = f"{u} (+) {v}"
    with timed() as t:
        w = block_sum(u, v)
        a, b = v.m, u.n
        m, n = w.m, w.n
        Bu, Bv, Bw = B.enumerate_bpds(u), B.enumerate_bpds(v), B.enumerate_bpds(w)
        wit = {"w": str(w), "completion": str(complete(w)), "counts": [len(Bu), len(Bv), len(Bw)]}
        if len(Bw) != len(Bu) * len(Bv):
            wit["violation"] = "|BPD(w)| differs from |BPD(u)| * |BPD(v)|"
            return make(subject, "block", name, FAIL, wit, t)
        rothe = B.rothe_bpd(w)
        glued = set()
        for P in Bu:
            for Q in Bv:
                G = B.glue(rothe, a, b, P, Q)
                if B.diagram(G) != glued_diagram(a, b, B.diagram(P), B.diagram(Q)):
                    wit["violation"] = "glued diagram has the wrong shape"
                    return make(subject, "block", name, FAIL, wit, t)
                glued.add(G.grid)
        if glued != {P.grid for P in Bw}:
            wit["violation"] = "gluing is not a bijection onto BPD(w)"
            return make(subject, "block", name, FAIL, wit, t)
        try:
            ordr = resolve_order(order, m, n)
            Fu = buchberger(fulton_generators(u), ordr, budget)
            Fv = buchberger(fulton_generators(v), ordr, budget)
            box = tuple(Polynomial.var(Var.z(i, j)) for i in range(1, a + 1) for j in range(1, b + 1))
            concat = Ideal(
                shift_down(Fu, a, (m, n)).generators + shift_right(Fv, b, (m, n)).generators + box,
                (m, n),
            )
            wit["concatenation_size"] = len(concat)
            if not is_groebner(concat, ordr, budget):
                wit["violation"] = "shifted concatenation is not a Groebner basis"
                return make(subject, "block", name, FAIL, wit, t)
            if not same_ideal(concat, fulton_generators(w), ordr, budget):
                wit["violation"] = "shifted concatenation does not generate I_w"
                return make(subject, "block", name, FAIL, wit, t)
        except BudgetExceeded as exc:
            return make(subject, "block", name, SKIPPED, {"reason": f"budget: {exc}"}, t)
        return make(subject, "block", name, PASS, wit, t)


def random_partial(rng: random.Random, max_size: int = 3) -> PartialPermutation:
    m, n = rng.randint(1, max_size), rng.randint(1, max_size)
    cols = list(range(1, n + 1))
    rng.shuffle(cols)
    k = rng.randint(0, min(m, n))
    rows = rng.sample(range(m), k)
    assignment = [None] * m
    for r, c in zip(rows, cols):
        assignment[r] = c
    return PartialPermutation(m, n, tuple(assignment))


CHECKS = {
    "bpd-formula": lambda w, order=None, budget=None: check_bpd_formula(w),
    "transition": lambda w, order=None, budget=None: check_transition(w),
    "cdg": lambda w, order=None, budget=DEFAULT_BUDGET: check_cdg(w, order, budget),
    "conjecture1": lambda w, order=None, budget=DEFAULT_BUDGET: check_conjecture1(w, order, budget),
    "recurrence": lambda w, order=None, budget=None: check_recurrence(w, order),
    "banner": lambda w, order=None, budget=DEFAULT_BUDGET: check_banner(w, order, budget),
    "pattern": lambda w, order=None, budget=DEFAULT_BUDGET: check_pattern(w, order, budget),
}

ORDER_FREE = {"bpd-formula", "transition"}
