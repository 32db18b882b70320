import json

import pytest

from schubert_ice.ideal import (
    BudgetExceeded,
    CoordSubspace,
    GenericMatrix,
    Ideal,
    Minors,
    MonomialIdeal,
    buchberger,
    cdg_generators,
    check_minor_leads,
    components,
    equivariant_class,
    first_nonreducing_pair,
    fulton_generators,
    initial_ideal,
    is_groebner,
    is_groebner_reference,
    j_ideal,
    j_lambda,
    l_ideal,
    leading_monomials,
    minimal_primes,
    minor_records,
    minors,
    mono_intersect,
    mono_intersect_all,
    mono_quotient_by_variable,
    mono_radical,
    mono_saturate,
    mono_sum,
    multiplicity_along,
    same_ideal,
    shift_down,
    shift_right,
)
from schubert_ice.perm import Partition, Permutation, all_permutations, is_vexillary, transition
from schubert_ice.poly import DIAGONAL, OrderError, Polynomial, TermOrder, Var, schubert_oracle, z

M = MonomialIdeal.parse
ROW5 = TermOrder.row_lex(5)

# --- minors and generators --------------------------------------------------------


def test_minor_counts():
    G = GenericMatrix(2, 3)
    assert len(minors(G, 1, 2, 2)) == 4
    two = minors(G, 2, 2, 3)
    assert len(two) == 3 and all(len(f) == 2 for f in two)
    assert minors(G, 0, 2, 2) == [Polynomial.one()]


def test_zeroed_matrix_drops_vanishing_minors():
    G = GenericMatrix(3, 3, Partition((2, 1)))
    assert G.is_zero(1, 2) and G.is_zero(2, 1) and not G.is_zero(2, 2)
    assert G.entry(1, 1) == 0
    # rows 1,2 cols 1,2 are all zero apart from z22
    assert Minors(G).det((1, 2), (1, 2)) == 0
    assert all(f for _, _, f in minor_records(G, 2, 3, 3))


def test_42153_fulton_generators():
    F = fulton_generators("42153")
    assert len(F) == 8
    assert set(F.generators[:4]) == {z(1, 1), z(1, 2), z(1, 3), z(2, 1)}
    D = Minors(GenericMatrix(5, 5))
    for rows in ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)):
        f = D.det(rows, (1, 2, 3))
        assert f in F.generators or -f in F.generators


def test_42153_cdg_generators():
    quartic = Polynomial.parse("z22*z33*z41 + z23*z31*z42 - z22*z31*z43 - z23*z32*z41")
    got = cdg_generators("42153").generators
    assert len(got) == 5
    assert set(got[:4]) == {z(1, 1), z(1, 2), z(1, 3), z(2, 1)}
    assert got[4] in (quartic, -quartic)


def test_13254_cdg_equals_fulton():
    assert set(cdg_generators("13254").generators) == set(fulton_generators("13254").generators)


def test_minor_lead_check_flags_mislabelled_order():
    recs = minor_records(GenericMatrix(3, 3), 2, 3, 3)
    check_minor_leads(recs, TermOrder.row_lex(3))
    check_minor_leads(recs, TermOrder.antidiag_lex(3))
    A = TermOrder.antidiag_lex(3)
    lying = TermOrder("lying", 3, 3, A.variables, DIAGONAL)
    with pytest.raises(OrderError):
        check_minor_leads(recs, lying)


def test_ideal_validation_and_json():
    with pytest.raises(ValueError):
        Ideal((z(3, 1),), (2, 2))
    I = Ideal((z(1, 1), Polynomial.zero(), z(1, 2) * z(2, 1) - z(1, 1) * z(2, 2)), (2, 2))
    assert len(I) == 2
    J = Ideal.from_json(json.dumps(I.to_json()))
    assert J == I


def test_shifts():
    I = Ideal((z(1, 1) * z(2, 2),), (2, 2))
    assert shift_down(I, 1, ambient=(3, 2)).generators == (z(2, 1) * z(3, 2),)
    assert shift_right(I, 2, ambient=(2, 4)).generators == (z(1, 3) * z(2, 4),)
    assert len(shift_down(I, 1)) == 0  # pushed off the grid
    with pytest.raises(ValueError):
        shift_down(I, -1)


# --- Groebner bases ----------------------------------------------------------------------


def test_single_variable_is_groebner():
    I = Ideal((z(1, 1),), (2, 2))
    assert is_groebner(I, TermOrder.row_lex(2))
    assert buchberger(I, TermOrder.row_lex(2)).generators == (z(1, 1),)


def test_two_by_two_minor_ideal():
    o = TermOrder.row_lex(2, 3)
    I = Ideal(tuple(minors(GenericMatrix(2, 3), 2, 2, 3)), (2, 3))
    assert is_groebner(I, o)
    assert is_groebner_reference(I.generators, o)


def test_non_groebner_pair():
    o = TermOrder.row_lex(2)
    I = Ideal((z(1, 1) * z(2, 2) - z(1, 2) * z(2, 1), z(1, 1) * z(1, 2) - z(2, 1) * z(2, 2)), (2, 2))
    assert not is_groebner(I, o)
    assert not is_groebner_reference(I.generators, o)
    i, j, rem = first_nonreducing_pair(I, o)
    assert (i, j) == (0, 1) and rem
    G = buchberger(I, o)
    assert is_groebner(G, o) and is_groebner_reference(G.generators, o)
    assert same_ideal(G, I, o)


def test_13254_fulton_not_groebner_under_row_lex():
    F = fulton_generators("13254")
    assert not is_groebner(F, ROW5)
    lead = MonomialIdeal.from_monomials(leading_monomials(F, ROW5))
    init = initial_ideal(F, ROW5)
    assert lead.issubset(init) and lead != init
    assert init == M(["z11*z22", "z11*z23*z32*z44", "z12*z21*z23*z32*z44"])


def test_buchberger_output_is_reduced_and_passes_reference():
    for w in ("13254", "21543", "42153", "2143"):
        G = buchberger(fulton_generators(w), ROW5)
        assert is_groebner_reference(G.generators, ROW5)
        lead = leading_monomials(G, ROW5)
        for a, ma in enumerate(lead):
            assert all(b == a or not MonomialIdeal.from_monomials([mb]).contains(ma) for b, mb in enumerate(lead))


def test_budget():
    with pytest.raises(BudgetExceeded):
        buchberger(fulton_generators("21543"), ROW5, budget=10)


def test_42153_universal():
    G = cdg_generators("42153")
    for o in (TermOrder.row_lex(5), TermOrder.col_lex(5), TermOrder.antidiag_lex(5)):
        assert is_groebner(G, o)


def test_vexillary_s5_are_cdg():
    for o in (TermOrder.row_lex(5), TermOrder.col_lex(5)):
        for w in all_permutations(5):
            if is_vexillary(w):
                assert is_groebner(cdg_generators(w), o), str(w)


# --- monomial ideals --------------------------------------------------------------------


def test_minimalize_and_text():
    A = M(["z11", "z11*z22", "z22*z31*z43"])
    assert str(A) == "<z11, z22*z31*z43>"
    assert MonomialIdeal.from_json(A.to_json()) == A
    assert A.contains(((Var.z(1, 1), 1), (Var.z(3, 3), 1)))
    assert not A.contains(((Var.z(2, 2), 1),))


def test_lattice_operations():
    A, B = M(["z11"]), M(["z22"])
    assert mono_intersect(A, B) == M(["z11*z22"])
    assert mono_sum(A, B) == M(["z11", "z22"])
    assert mono_intersect_all([]) == MonomialIdeal([0])
    assert mono_radical(M(["z11^2*z22", "z33^3"])) == M(["z11*z22", "z33"])
    assert mono_quotient_by_variable(M(["z11*z22", "z33"]), Var.z(1, 1)) == M(["z22", "z33"])
    assert mono_saturate(M(["z11^3*z22", "z33"]), Var.z(1, 1)) == M(["z22", "z33"])


def test_minimal_primes_examples():
    assert minimal_primes(M(["z11*z22"])) == [CoordSubspace({(1, 1)}), CoordSubspace({(2, 2)})]
    assert minimal_primes(M(["z11", "z11*z22"])) == [CoordSubspace({(1, 1)})]
    assert minimal_primes(M(["z11*z12", "z11*z21"])) == [CoordSubspace({(1, 1)}), CoordSubspace({(1, 2), (2, 1)})]


def test_multiplicity():
    assert multiplicity_along(M(["z11^2"]), CoordSubspace({(1, 1)})) == 2
    assert multiplicity_along(M(["z11^2", "z11*z22", "z22^2"]), CoordSubspace({(1, 1), (2, 2)})) == 3
    assert multiplicity_along(M(["z11^2*z22"]), CoordSubspace({(2, 2)})) == 1
    with pytest.raises(ValueError):
        multiplicity_along(M(["z11*z22"]), CoordSubspace({(1, 1), (2, 2)}))


def test_equivariant_class_examples():
    assert equivariant_class(M([])) == 1  # whole space
    assert equivariant_class(MonomialIdeal([0])) == 0  # empty variety
    # dominant 321: init is <z11, z12, z21>
    A = initial_ideal(fulton_generators("321"), TermOrder.row_lex(3))
    assert A == l_ideal({(1, 1), (1, 2), (2, 1)})
    assert equivariant_class(A) == schubert_oracle("321")
    # z11*z22 gives the sum of two linear classes
    assert equivariant_class(M(["z11*z22"])) == CoordSubspace({(1, 1)}).class_polynomial() + CoordSubspace({(2, 2)}).class_polynomial()


def test_components_of_42153():
    init = initial_ideal(cdg_generators("42153"), ROW5)
    assert init == M(["z11", "z12", "z13", "z21", "z22*z31*z43"])
    dom = {(1, 1), (1, 2), (1, 3), (2, 1)}
    want = {CoordSubspace(dom | {c}) for c in ((2, 2), (3, 1), (4, 3))}
    comps = components(init)
    assert {P for P, _ in comps} == want and all(m == 1 for _, m in comps)
    assert equivariant_class(init) == schubert_oracle("42153")


# --- J ideals and the worked recurrence example --------------------------------------


def test_j_ideal_is_leading_terms_of_cdg():
    assert j_ideal("42153", ROW5) == M(["z11", "z12", "z13", "z21", "z22*z31*z43"])


def test_j_lambda():
    assert j_lambda((), 1, 2, TermOrder.row_lex(2)) == M(["z11", "z12"])
    assert j_lambda((1,), 2, 2, TermOrder.row_lex(2)) == M(["z12*z21"])
    with pytest.raises(ValueError):
        j_lambda((2, 1), 1, 2, TermOrder.row_lex(2))


def test_worked_recurrence_witnesses():
    w = Permutation.parse("6,7,3,4,1,10,2,5,8,9")
    o = TermOrder.row_lex(10)
    t = transition(w)
    Jv = j_ideal(t.v, o)
    Ju = [j_ideal(u, o) for u in t.phi]
    mono = M(["z33*z45*z51*z62"]).gens[0]
    assert mono in Jv and mono in Ju[0]
    assert M(["z51*z62"]).gens[0] in Ju[1]
    assert M(["z51"]).gens[0] in Ju[2]
    assert all(Jv.issubset(J) for J in Ju) and Jv.issubset(j_ideal(w, o))
