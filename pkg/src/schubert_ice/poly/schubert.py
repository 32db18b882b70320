"""Double Schubert polynomials: bumpless pipe dream sums and divided differences."""

from __future__ import annotations

from functools import lru_cache

from ..perm import Permutation, as_perm, complete, transition
from .polynomial import Polynomial, Var, X, product, x, y


class InexactDivision(ArithmeticError):
    pass


def swap_x(f: Polynomial, i: int) -> Polynomial:
    a, b = Var.x(i), Var.x(i + 1)
    return f.rename(lambda v: b if v == a else a if v == b else v)


def divide_by_difference(f: Polynomial, top: Var, bottom: Var) -> Polynomial:
    """Exact quotient f / (top - bottom), by synthetic division in ``top``.

    Raises InexactDivision when the remainder is nonzero.
    """
    by_power: dict = {}
    for mono, c in f.items():
        k = 0
        rest = []
        for v, e in mono:
            if v == top:
                k = e
            else:
                rest.append((v, e))
        by_power.setdefault(k, {})[tuple(rest)] = c
    if not by_power:
        return Polynomial.zero()
    coeffs = {k: Polynomial(terms) for k, terms in by_power.items()}
    bot = Polynomial.var(bottom)
    K = max(coeffs)
    quotient = Polynomial.zero()
    carry = Polynomial.zero()  # b_k, starting from b_{K} = 0
    for k in range(K, 0, -1):
        carry = coeffs.get(k, Polynomial.zero()) + bot * carry  # b_{k-1}
        if carry:
            quotient = quotient + carry * Polynomial.monomial(((top, k - 1),) if k > 1 else ())
    remainder = coeffs.get(0, Polynomial.zero()) + bot * carry
    if remainder:
        raise InexactDivision(f"({top} - {bottom}) does not divide the input; remainder {remainder}")
    return quotient


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """(f - s_i f) / (x_i - x_{i+1})."""
    return divide_by_difference(f - swap_x(f, i), Var.x(i), Var.x(i + 1))


def longest_schubert(n: int) -> Polynomial:
    return product(x(i) - y(j) for i in range(1, n + 1) for j in range(1, n + 1) if i + j <= n)


@lru_cache(maxsize=None)
def _oracle(w: Permutation) -> Polynomial:
    n = len(w)
    for i in range(1, n):
        if w(i) < w(i + 1):
            return divided_difference(_oracle(w.swap(i, i + 1)), i)
    return longest_schubert(n)


def schubert_oracle(w) -> Polynomial:
    """Double Schubert polynomial from the longest element by divided differences."""
    return _oracle(complete(as_perm(w)).trimmed())


def schubert_bpd(w) -> Polynomial:
    """Sum of wt(P) over the bumpless pipe dreams of w."""
    from ..bpd import enumerate_bpds, weight

    out = Polynomial.zero()
    for P in enumerate_bpds(w):
        out = out + weight(P)
    return out


def single_schubert(f: Polynomial) -> Polynomial:
    return f.set_zero(lambda v: v.kind not in (X,))


def verify_transition_identity(w, schubert=schubert_bpd) -> bool:
    """S_w == (x_r - y_s) S_v + sum over u in Phi of S_u."""
    t = transition(w)
    rhs = (x(t.r) - y(t.s)) * schubert(t.v)
    for u in t.phi:
        rhs = rhs + schubert(u)
    return schubert(t.w) == rhs
