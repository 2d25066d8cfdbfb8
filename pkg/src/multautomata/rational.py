"""Sum, Cauchy product, star and scalar products of linear representations.

The block formulas are applied literally and nothing is minimized
afterwards, so result dimensions are always ``n + m`` (sum, Cauchy
product) and ``m + 1`` (star).
"""

from __future__ import annotations

from . import matrices as mx
from .errors import NotProperError
from .series import LinearRepresentation, check_compatible, is_proper

__all__ = ["rep_sum", "rep_cauchy", "rep_star", "rep_scale_left", "rep_scale_right"]


def rep_sum(r: LinearRepresentation, s: LinearRepresentation) -> LinearRepresentation:
    """The two automata placed side by side (block-diagonal transitions)."""
    check_compatible(r, s)
    sr = r.semiring
    n, m = r.dim, s.dim
    mu = {
        a: mx.blocks(r.mu[a], mx.zeros(sr, n, m), mx.zeros(sr, m, n), s.mu[a])
        for a in r.alphabet
    }
    return LinearRepresentation(sr, r.alphabet, r.lam + s.lam, mu, r.gamma + s.gamma)


def rep_cauchy(r: LinearRepresentation, s: LinearRepresentation) -> LinearRepresentation:
    """Concatenation product.

    Transitions are upper block-triangular with top-right block
    ``gamma_r · lam_s · mu_s(a)``; outputs are ``gamma_r (lam_s gamma_s)``
    stacked over ``gamma_s``.
    """
    check_compatible(r, s)
    sr = r.semiring
    n, m = r.dim, s.dim
    mu = {}
    for a in r.alphabet:
        charge = mx.vec_mat(sr, s.lam, s.mu[a]) if m else ()
        bridge = mx.outer(sr, r.gamma, charge) if m else tuple(() for _ in range(n))
        mu[a] = mx.blocks(r.mu[a], bridge, mx.zeros(sr, m, n), s.mu[a])
    constant = mx.dot(sr, s.lam, s.gamma)
    gamma = tuple(sr.mul(g, constant) for g in r.gamma) + s.gamma
    lam = r.lam + (sr.zero,) * m
    return LinearRepresentation(sr, r.alphabet, lam, mu, gamma)


def rep_star(s: LinearRepresentation, allow_improper: bool = False) -> LinearRepresentation:
    """Star of a proper series, with one extra state for the empty word.

    The ``m x m`` block is ``mu_s(a) + gamma_s lam_s mu_s(a)``, the new
    bottom row is ``lam_s mu_s(a)``, and the new state carries input and
    output weight one.  With ``allow_improper`` the same matrices are built
    for a series with nonzero constant term; the recognized series is then
    whatever those matrices compute, with no claim that it equals ``S*``.
    """
    if not allow_improper and not is_proper(s):
        raise NotProperError("star of a series with nonzero constant term")
    sr = s.semiring
    m = s.dim
    mu = {}
    for a in s.alphabet:
        charge = mx.vec_mat(sr, s.lam, s.mu[a]) if m else ()
        feedback = mx.mat_mul(sr, mx.outer(sr, s.gamma, s.lam), s.mu[a]) if m else ()
        top = mx.mat_add(sr, s.mu[a], feedback)
        rows = [row + (sr.zero,) for row in top]
        rows.append(tuple(charge) + (sr.zero,))
        mu[a] = tuple(rows)
    lam = (sr.zero,) * m + (sr.one,)
    gamma = s.gamma + (sr.one,)
    return LinearRepresentation(sr, s.alphabet, lam, mu, gamma)


def rep_scale_left(k, s: LinearRepresentation) -> LinearRepresentation:
    """``k·S``: scales the input vector."""
    sr = s.semiring
    k = sr.coerce(k)
    return LinearRepresentation(sr, s.alphabet, tuple(sr.mul(k, x) for x in s.lam), s.mu, s.gamma)


def rep_scale_right(s: LinearRepresentation, k) -> LinearRepresentation:
    """``S·k``: scales the output vector."""
    sr = s.semiring
    k = sr.coerce(k)
    return LinearRepresentation(sr, s.alphabet, s.lam, s.mu, tuple(sr.mul(x, k) for x in s.gamma))
