"""Minimization and rank of representations over a field.

Left reduction keeps a prefix-closed set of words ``U`` whose row vectors
``lam·mu(u)`` form a basis of the reachable space, found breadth first with
letters in alphabet order.  Right reduction is the same procedure on the
transposed representation, giving a suffix-closed set.  Left then right
reduction yields a representation of minimal dimension (the rank).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import matrices as mx
from .errors import CapabilityError
from .rational import rep_scale_left, rep_sum
from .series import LinearRepresentation, check_compatible, coefficient, words_up_to

__all__ = [
    "ReductionResult",
    "left_reduce",
    "right_reduce",
    "minimize",
    "rank",
    "hankel_rank",
    "equivalent",
]


@dataclass(frozen=True)
class ReductionResult:
    reduced: LinearRepresentation
    rank: int
    left_basis_words: tuple[str, ...]
    right_basis_words: tuple[str, ...]


def _require_field(rep: LinearRepresentation) -> None:
    if not rep.semiring.is_field:
        raise CapabilityError(f"reduction needs a field, got {rep.semiring.tag}")


def _left(rep: LinearRepresentation):
    """Left reduction; returns the reduced representation and its basis words."""
    sr = rep.semiring
    basis = mx.Echelon(sr, rep.dim)
    words: list[str] = []
    vectors: list[tuple] = []
    queue = deque([("", rep.lam)])
    while queue:
        word, v = queue.popleft()
        if not basis.add(v):
            continue
        words.append(word)
        vectors.append(v)
        for a in rep.alphabet:
            queue.append((word + a, mx.vec_mat(sr, v, rep.mu[a])))
    k = len(vectors)
    mu = {a: tuple(basis.coordinates(mx.vec_mat(sr, v, rep.mu[a])) for v in vectors) for a in rep.alphabet}
    lam = mx.unit_vector(sr, k, 0) if k else ()
    gamma = tuple(mx.dot(sr, v, rep.gamma) for v in vectors)
    return LinearRepresentation(sr, rep.alphabet, lam, mu, gamma), tuple(words)


def left_reduce(rep: LinearRepresentation) -> LinearRepresentation:
    """Equivalent representation whose reachable space ``lam·mu(K<A>)`` is full."""
    _require_field(rep)
    return _left(rep)[0]


def right_reduce(rep: LinearRepresentation) -> LinearRepresentation:
    """Equivalent representation whose observable space ``mu(K<A>)·gamma`` is full."""
    _require_field(rep)
    return _left(rep.transpose())[0].transpose()


def minimize(rep: LinearRepresentation) -> ReductionResult:
    """Left reduction followed by right reduction."""
    _require_field(rep)
    left, left_words = _left(rep)
    right_t, right_words_t = _left(left.transpose())
    reduced = right_t.transpose()
    return ReductionResult(
        reduced=reduced,
        rank=reduced.dim,
        left_basis_words=left_words,
        right_basis_words=tuple(w[::-1] for w in right_words_t),
    )


def rank(rep: LinearRepresentation) -> int:
    return minimize(rep).rank


def hankel_rank(rep: LinearRepresentation, window: int) -> int:
    """Rank of the Hankel block ``[<S|uv>]`` with ``|u|, |v| < window``."""
    _require_field(rep)
    words = list(words_up_to(rep.alphabet, window - 1)) if window > 0 else []
    matrix = [[coefficient(rep, u + v) for v in words] for u in words]
    return mx.rank(rep.semiring, matrix)


def equivalent(r: LinearRepresentation, s: LinearRepresentation) -> bool:
    """Whether ``r`` and ``s`` recognize the same series (field case)."""
    check_compatible(r, s)
    _require_field(r)
    difference = rep_sum(r, rep_scale_left(r.semiring.neg(r.semiring.one), s))
    return minimize(difference).rank == 0
