"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` or ``python3 tests/test_acceptance.py``.
"""

import random

import pytest
from conftest import ACCEPTANCE_LINES

from schubert_ice.bpd import diagram, enumerate_bpds, enumerate_bpds_bruteforce, weight
from schubert_ice.ideal import (
    MonomialIdeal,
    buchberger,
    cdg_generators,
    fulton_generators,
    is_groebner,
    is_groebner_reference,
    j_ideal,
)
from schubert_ice.perm import (
    all_permutations,
    is_banner,
    is_block_predominant,
    transition,
)
from schubert_ice.poly import (
    Polynomial,
    TermOrder,
    Var,
    divided_difference,
    schubert_bpd,
    schubert_oracle,
    x,
    y,
)
from schubert_ice.verify import (
    check_banner,
    check_block,
    check_conjecture1,
    check_pattern_conjecture,
    check_recurrence,
    random_partial,
    scan,
)

WORKED = "6,7,3,4,1,10,2,5,8,9"
BLOCK_U, BLOCK_V = "[010 100 000]", "[10 00]"


def report(number, title, failures):
    ok = not failures
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if failures:
        line += " -- " + "; ".join(str(f) for f in failures[:5])
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def perms_upto(n):
    for k in range(1, n + 1):
        yield from all_permutations(k)


# 1 -----------------------------------------------------------------------------------


def test_bpd_formula_through_s5():
    bad = [str(w) for w in perms_upto(5) if schubert_bpd(w) != schubert_oracle(w)]
    assert report(1, "BPD sum equals the oracle on S_n, n <= 5", bad)


# 2 -----------------------------------------------------------------------------------


def test_golden_42153():
    bad = []
    if len(enumerate_bpds("42153")) != 3:
        bad.append("BPD count")
    product = (
        (x(1) - y(1)) * (x(1) - y(2)) * (x(1) - y(3)) * (x(2) - y(1))
        * ((x(4) - y(3)) + (x(3) - y(1)) + (x(2) - y(2)))
    )
    if schubert_bpd("42153") != product or schubert_oracle("42153") != product:
        bad.append("polynomial")
    quartic = Polynomial.parse("z22*z33*z41 + z23*z31*z42 - z22*z31*z43 - z23*z32*z41")
    want = {Polynomial.var(Var.z(i, j)) for i, j in ((1, 1), (1, 2), (1, 3), (2, 1))} | {quartic}
    if {_up_to_sign(g) for g in cdg_generators("42153")} != {_up_to_sign(g) for g in want}:
        bad.append("CDG generators")
    t = transition("42153")
    if str(t.v) != "42135" or {str(u) for u in t.phi} != {"43125", "42315"}:
        bad.append("transition")
    assert report(2, "42153: BPDs, polynomial, CDG generators, transition", bad)


def _up_to_sign(f):
    return frozenset({f, -f})


# 3 -----------------------------------------------------------------------------------


def test_golden_2143():
    bad = []
    weights = {(x(1) - y(1)) * (x(3) - y(3)), (x(1) - y(1)) * (x(2) - y(1)), (x(1) - y(1)) * (x(1) - y(2))}
    bpds = enumerate_bpds("2143")
    if len(bpds) != 3 or {weight(P) for P in bpds} != weights:
        bad.append("BPD weights")
    pipe = (x(1) - y(1)) * (x(3) - y(1)) + (x(1) - y(1)) * (x(2) - y(2)) + (x(1) - y(1)) * (x(1) - y(3))
    bumpless = sum(weights, Polynomial.zero())
    oracle = schubert_oracle("2143")
    if oracle != pipe:
        bad.append("oracle vs pipe dream expansion")
    if oracle != bumpless:
        bad.append("oracle vs bumpless expansion")
    assert report(3, "2143: three BPD weights and both expansions", bad)


# 4 -----------------------------------------------------------------------------------


def test_cdg_census_s5():
    s = scan(5, "cdg", "row-lex")
    bad = []
    if set(s.failing) != {"13254", "21543"}:
        bad.append(f"failing set {s.failing}")
    if s.skipped:
        bad.append(f"skipped {s.skipped}")
    assert report(4, "S5 CDG census under row-lex fails exactly on 13254, 21543", bad)


# 5 -----------------------------------------------------------------------------------


def test_conjecture1_s5_row_and_col():
    bad = []
    for w in all_permutations(5):
        reps = [check_conjecture1(w, o) for o in ("row-lex", "col-lex")]
        for r in reps:
            if not r.passed:
                bad.append(f"{w} [{r.order}] {r.outcome}: {r.witnesses.get('violation', r.reason)}")
        if all(r.passed for r in reps) and reps[0].witnesses["components"] != reps[1].witnesses["components"]:
            bad.append(f"{w}: component multisets differ between orders")
    assert report(5, "S5 init I_w components: codim l(w), multiset = BPD diagrams, row-lex and col-lex", bad)


# 6 -----------------------------------------------------------------------------------


def test_universal_groebner_42153():
    G = cdg_generators("42153")
    orders = [TermOrder.row_lex(5), TermOrder.col_lex(5), TermOrder.antidiag_lex(5)]
    orders += [TermOrder.random(5, seed=s) for s in range(5)]
    bad = [o.name for o in orders if not is_groebner(G, o)]
    assert report(6, "CDG generators of 42153 are Groebner under 3 named and 5 random lex orders", bad)


# 7 -----------------------------------------------------------------------------------


def test_predominant_recurrence():
    bad = []
    count = 0
    for w in all_permutations(6):
        if is_block_predominant(w):
            count += 1
            rep = check_recurrence(w, "row-lex")
            if not rep.passed:
                bad.append(f"{w}: {rep.witnesses.get('violation')}")
    rep = check_recurrence(WORKED, "row-lex")
    if not rep.passed:
        bad.append(f"{WORKED}: {rep.witnesses.get('violation')}")
    q = rep.witnesses.get("quotient", {})
    if q.get("corner") != [6, 9] or q.get("lambda") != [5, 5, 2, 2] or not q.get("holds"):
        bad.append("z69 quotient identity")
    o = TermOrder.row_lex(10)
    t = transition(WORKED)
    Jv = j_ideal(t.v, o)
    Ju = [j_ideal(u, o) for u in t.phi]
    mono = MonomialIdeal.parse(["z33*z45*z51*z62"]).gens[0]
    if mono not in Jv or mono not in Ju[0]:
        bad.append("z33 z45 z51 z62 membership")
    g2, g3 = MonomialIdeal.parse(["z51*z62"]).gens[0], MonomialIdeal.parse(["z51"]).gens[0]
    if g2 not in Ju[1] or g3 not in Ju[2]:
        bad.append("z51 z62 and z51 generators")
    if count == 0:
        bad.append("no block predominant permutations found")
    assert report(7, f"recurrence on {count} block predominant w in S6 and the worked example", bad)


# 8 -----------------------------------------------------------------------------------


def test_block_laws():
    bad = []
    rep = check_block(BLOCK_U, BLOCK_V, "row-lex")
    if not rep.passed:
        bad.append(f"worked example: {rep.witnesses.get('violation', rep.reason)}")
    rng = random.Random(8)
    for _ in range(50):
        u, v = random_partial(rng), random_partial(rng)
        r = check_block(u, v, "row-lex")
        if not r.passed:
            bad.append(f"{u} (+) {v}: {r.witnesses.get('violation', r.reason)}")
    assert report(8, "block sum: BPD product, glued shape, shifted Groebner concatenation (1 + 50 pairs)", bad)


# 9 -----------------------------------------------------------------------------------


def test_property_suites():
    bad = []
    for w in all_permutations(4):
        if enumerate_bpds(w) != enumerate_bpds_bruteforce(w):
            bad.append(f"droop closure {w}")
    for w in perms_upto(5):
        if any(len(diagram(P)) != w.length() for P in enumerate_bpds(w)):
            bad.append(f"blank count {w}")
    rng = random.Random(9)
    vs = [Var.x(i) for i in range(1, 5)] + [Var.y(j) for j in range(1, 3)]
    for k in range(100):
        terms = {}
        for _ in range(rng.randint(1, 6)):
            terms[tuple((v, rng.randint(0, 3)) for v in vs)] = rng.randint(-5, 5)
        f = Polynomial(terms)
        d = divided_difference
        for i in (1, 2, 3):
            if d(d(f, i), i):
                bad.append(f"d{i}^2 on poly {k}")
        for i in (1, 2):
            if d(d(d(f, i), i + 1), i) != d(d(d(f, i + 1), i), i + 1):
                bad.append(f"braid {i} on poly {k}")
    for w in perms_upto(5):
        for o in (TermOrder.row_lex(len(w)), TermOrder.col_lex(len(w))):
            G = buchberger(fulton_generators(w), o)
            if not is_groebner_reference(G.generators, o):
                bad.append(f"reference recheck {w} [{o.name}]")
    assert report(9, "droops = brute force, |D(P)| = l(w), divided difference relations, GB recheck", bad)


# 10 ----------------------------------------------------------------------------------


def test_banner_theorem_s5():
    bad = []
    count = 0
    for w in all_permutations(5):
        if is_banner(w):
            count += 1
            rep = check_banner(w, "row-lex")
            if not rep.passed:
                bad.append(f"{w}: {rep.witnesses.get('violation', rep.reason)}")
    assert report(10, f"banner w in S5 ({count}): init I_w = cap L_P, squarefree, class = Schubert", bad)


# 11 ----------------------------------------------------------------------------------


def test_pattern_conjecture():
    bad = []
    s5 = check_pattern_conjecture(5)
    bad += [f"S5 {w}" for w in s5.failing + s5.skipped]
    s6 = check_pattern_conjecture(6, sample=200, seed=11)
    bad += [f"S6 {w}" for w in s6.failing + s6.skipped]
    if s6.size != 200:
        bad.append(f"sample size {s6.size}")
    assert report(11, "eight-pattern avoidance iff CDG on S5 and a 200-element S6 sample", bad)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-s", "-q"]))
