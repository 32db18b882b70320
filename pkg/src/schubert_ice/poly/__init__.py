from .order import (
    ANTIDIAGONAL,
    DIAGONAL,
    NEITHER,
    UNVERIFIED,
    OrderError,
    TermOrder,
    antidiagonal_monomial,
    classify_order,
    diagonal_monomial,
    leading_term,
    verified,
)
from .polynomial import Polynomial, Var, X, Y, Z, mono_degree, mono_str, product, set_y_zero, x, y, z
from .schubert import (
    InexactDivision,
    divide_by_difference,
    divided_difference,
    longest_schubert,
    schubert_bpd,
    schubert_oracle,
    single_schubert,
    swap_x,
    verify_transition_identity,
)
