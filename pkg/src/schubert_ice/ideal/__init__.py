from .groebner import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    buchberger,
    first_nonreducing_pair,
    initial_ideal,
    is_groebner,
    is_groebner_reference,
    leading_monomials,
    same_ideal,
)
from .matrix import (
    GenericMatrix,
    Ideal,
    Minors,
    cdg_generators,
    check_minor_leads,
    fulton_generators,
    minor_records,
    minors,
    shift_down,
    shift_right,
)
from .monomial import (
    CoordSubspace,
    MonomialIdeal,
    components,
    equivariant_class,
    j_ideal,
    j_lambda,
    l_ideal,
    minimal_primes,
    mono_intersect,
    mono_intersect_all,
    mono_quotient_by_variable,
    mono_radical,
    mono_saturate,
    mono_sum,
    multiplicity_along,
)
