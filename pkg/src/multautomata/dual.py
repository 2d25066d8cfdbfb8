"""Laws obtained by dualizing alphabetic coproducts.

A coproduct ``c`` sends every letter to an element of the tensor square and
extends multiplicatively to words.  Its dual law is
``<u ⊙ v | w> = <u ⊗ v | c(w)>``.  The one-parameter family

    c(a) = ε (a⊗1 + 1⊗a) + q a⊗a

gives the shuffle (ε=1, q=0), the infiltration (ε=1, q=1) and the Hadamard
product (ε=0, q=1).  At representation level the law is realized by
``(lam_r ⊗ lam_s, (mu_r ⊗ mu_s)∘c, gamma_r ⊗ gamma_s)``.

General coproducts ``c(a) = Σ α_pq(a) a^p ⊗ a^q`` are available only at
polynomial level (:class:`AlphaTable`), for the structural checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from . import matrices as mx
from .errors import MismatchError, PreconditionError
from .semiring import NATURAL, Semiring
from .series import (
    LinearRepresentation,
    SeriesPolynomial,
    TensorPolynomial,
    check_compatible,
    normalize_alphabet,
)

__all__ = [
    "DualLawParams",
    "LAW_NAMES",
    "coproduct_word",
    "dual_law_poly",
    "rep_dual_law",
    "rep_shuffle",
    "rep_infiltration",
    "rep_hadamard",
    "AlphaTable",
    "alpha_coproduct_word",
    "alpha_law_poly",
    "alpha_locally_finite",
    "alpha_associative",
    "alpha_unital",
]

LAW_NAMES = ("shuffle", "infiltration", "hadamard")


@dataclass(frozen=True)
class DualLawParams:
    """Parameters ``(epsilon, q)`` of the law, as scalars of ``semiring``."""

    semiring: Semiring
    epsilon: object
    q: object

    @classmethod
    def of(cls, semiring: Semiring, epsilon, q) -> DualLawParams:
        return cls(semiring, semiring.coerce(epsilon), semiring.coerce(q))

    @classmethod
    def named(cls, name: str, semiring: Semiring = NATURAL) -> DualLawParams:
        z, o = semiring.zero, semiring.one
        table = {"shuffle": (o, z), "infiltration": (o, o), "hadamard": (z, o)}
        try:
            eps, q = table[name]
        except KeyError:
            raise ValueError(f"unknown law {name!r}; expected one of {LAW_NAMES}") from None
        return cls(semiring, eps, q)

    @classmethod
    def shuffle(cls, semiring: Semiring = NATURAL) -> DualLawParams:
        return cls.named("shuffle", semiring)

    @classmethod
    def infiltration(cls, semiring: Semiring = NATURAL) -> DualLawParams:
        return cls.named("infiltration", semiring)

    @classmethod
    def hadamard(cls, semiring: Semiring = NATURAL) -> DualLawParams:
        return cls.named("hadamard", semiring)

    def to_json(self) -> dict:
        fmt = self.semiring.format
        return {"epsilon": fmt(self.epsilon), "q": fmt(self.q)}

    @classmethod
    def from_json(cls, data, semiring: Semiring) -> DualLawParams:
        if isinstance(data, str):
            return cls.named(data, semiring)
        return cls.of(semiring, str(data["epsilon"]), str(data["q"]))

    def letter_coproduct(self, letter: str) -> TensorPolynomial:
        sr = self.semiring
        return TensorPolynomial._trusted(
            sr,
            {(letter, ""): self.epsilon, ("", letter): self.epsilon, (letter, letter): self.q},
        )


def coproduct_word(w: str, params: DualLawParams | str = "shuffle") -> TensorPolynomial:
    """``c(w) = c(a1) c(a2) ... c(an)`` in the tensor algebra; ``c(1) = 1⊗1``.

    A law name selects that law over the natural numbers, which is what the
    congruence checks use before embedding coefficients elsewhere.
    """
    if isinstance(params, str):
        params = DualLawParams.named(params, NATURAL)
    result = TensorPolynomial.unit(params.semiring)
    for letter in w:
        result = result * params.letter_coproduct(letter)
    return result


def dual_law_poly(u: str, v: str, params: DualLawParams, alphabet=None) -> SeriesPolynomial:
    """The polynomial ``u ⊙_{ε,q} v`` from the letter-by-letter recursion.

    ``1⊙1 = 1``, ``a⊙1 = 1⊙a = εa`` and
    ``au ⊙ bv = ε(a(u ⊙ bv) + b(au ⊙ v)) + q δ_ab a(u ⊙ v)``.
    """
    sr = params.semiring
    eps, q = params.epsilon, params.q
    if alphabet is None:
        alphabet = sorted(set(u) | set(v))
    alphabet = normalize_alphabet(alphabet)

    def prefixed(letter: str, poly: dict, k) -> dict:
        return {letter + w: sr.mul(k, c) for w, c in poly.items()}

    def accumulate(into: dict, poly: dict) -> None:
        for w, c in poly.items():
            into[w] = sr.add(into.get(w, sr.zero), c)

    # memo is local to this call
    @lru_cache(maxsize=None)
    def law(x: str, y: str) -> dict:
        if not x and not y:
            return {"": sr.one}
        if not y:
            # x ⊙ 1 unrolls as ε x1(x' ⊙ 1)
            return prefixed(x[0], law(x[1:], ""), eps)
        if not x:
            return prefixed(y[0], law("", y[1:]), eps)
        a, b = x[0], y[0]
        out: dict = {}
        accumulate(out, prefixed(a, law(x[1:], y), eps))
        accumulate(out, prefixed(b, law(x, y[1:]), eps))
        if a == b:
            accumulate(out, prefixed(a, law(x[1:], y[1:]), q))
        return out

    return SeriesPolynomial._trusted(sr, alphabet, law(u, v))


def _check_family(params: DualLawParams, r: LinearRepresentation) -> None:
    sr = params.semiring
    if sr != r.semiring:
        raise MismatchError(f"law parameters live in {sr.tag}, automata in {r.semiring.tag}")
    if not (sr.eq(params.epsilon, sr.zero) or sr.eq(params.epsilon, sr.one)):
        raise PreconditionError("representation-level laws need epsilon in {0, 1}")


def rep_dual_law(r: LinearRepresentation, s: LinearRepresentation, params: DualLawParams) -> LinearRepresentation:
    """Representation of ``R ⊙_{ε,q} S`` of dimension ``dim(r) * dim(s)``.

    ``mu(a) = ε (mu_r(a)⊗I + I⊗mu_s(a)) + q mu_r(a)⊗mu_s(a)``; the tensor
    basis is ordered lexicographically on index pairs, first factor major.
    """
    check_compatible(r, s)
    _check_family(params, r)
    sr = r.semiring
    id_r, id_s = mx.identity(sr, r.dim), mx.identity(sr, s.dim)
    mu = {}
    for a in r.alphabet:
        interleave = mx.mat_add(sr, mx.kron(sr, r.mu[a], id_s), mx.kron(sr, id_r, s.mu[a]))
        merge = mx.kron(sr, r.mu[a], s.mu[a])
        mu[a] = mx.mat_add(sr, mx.mat_scale(sr, params.epsilon, interleave), mx.mat_scale(sr, params.q, merge))
    return LinearRepresentation(sr, r.alphabet, mx.kron_vec(sr, r.lam, s.lam), mu, mx.kron_vec(sr, r.gamma, s.gamma))


def rep_shuffle(r: LinearRepresentation, s: LinearRepresentation) -> LinearRepresentation:
    """``mu(a) = mu_r(a)⊗I + I⊗mu_s(a)``."""
    check_compatible(r, s)
    sr = r.semiring
    id_r, id_s = mx.identity(sr, r.dim), mx.identity(sr, s.dim)
    mu = {a: mx.mat_add(sr, mx.kron(sr, r.mu[a], id_s), mx.kron(sr, id_r, s.mu[a])) for a in r.alphabet}
    return LinearRepresentation(sr, r.alphabet, mx.kron_vec(sr, r.lam, s.lam), mu, mx.kron_vec(sr, r.gamma, s.gamma))


def rep_infiltration(r: LinearRepresentation, s: LinearRepresentation) -> LinearRepresentation:
    """``mu(a) = mu_r(a)⊗I + I⊗mu_s(a) + mu_r(a)⊗mu_s(a)``."""
    check_compatible(r, s)
    sr = r.semiring
    id_r, id_s = mx.identity(sr, r.dim), mx.identity(sr, s.dim)
    mu = {}
    for a in r.alphabet:
        interleave = mx.mat_add(sr, mx.kron(sr, r.mu[a], id_s), mx.kron(sr, id_r, s.mu[a]))
        mu[a] = mx.mat_add(sr, interleave, mx.kron(sr, r.mu[a], s.mu[a]))
    return LinearRepresentation(sr, r.alphabet, mx.kron_vec(sr, r.lam, s.lam), mu, mx.kron_vec(sr, r.gamma, s.gamma))


def rep_hadamard(r: LinearRepresentation, s: LinearRepresentation) -> LinearRepresentation:
    """Pointwise product: ``mu(a) = mu_r(a)⊗mu_s(a)``."""
    check_compatible(r, s)
    sr = r.semiring
    mu = {a: mx.kron(sr, r.mu[a], s.mu[a]) for a in r.alphabet}
    return LinearRepresentation(sr, r.alphabet, mx.kron_vec(sr, r.lam, s.lam), mu, mx.kron_vec(sr, r.gamma, s.gamma))


# -- general alphabetic coproducts ------------------------------------------


@dataclass(frozen=True)
class AlphaTable:
    """Per-letter coefficients ``α_pq(a)`` of ``c(a) = Σ α_pq a^p ⊗ a^q``.

    Missing entries are zero.  ``max_exponent`` bounds ``p`` and ``q``.
    """

    semiring: Semiring
    entries: Mapping[str, Mapping[tuple[int, int], object]]
    max_exponent: int = 2
    _clean: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        sr = self.semiring
        clean = {}
        for letter, table in self.entries.items():
            row = {}
            for (p, q), value in table.items():
                if not (0 <= p <= self.max_exponent and 0 <= q <= self.max_exponent):
                    raise ValueError(f"exponent ({p}, {q}) exceeds bound {self.max_exponent}")
                value = sr.coerce(value)
                if not sr.is_zero(value):
                    row[(p, q)] = value
            clean[letter] = row
        object.__setattr__(self, "_clean", clean)

    @classmethod
    def from_params(cls, params: DualLawParams, alphabet) -> AlphaTable:
        entry = {(1, 0): params.epsilon, (0, 1): params.epsilon, (1, 1): params.q}
        return cls(params.semiring, {a: dict(entry) for a in alphabet}, max_exponent=1)

    @property
    def letters(self):
        return tuple(self._clean)

    def coefficient(self, letter: str, p: int, q: int):
        return self._clean.get(letter, {}).get((p, q), self.semiring.zero)

    def support(self, letter: str):
        return self._clean.get(letter, {}).items()


def alpha_coproduct_word(w: str, table: AlphaTable) -> TensorPolynomial:
    sr = table.semiring
    result = TensorPolynomial.unit(sr)
    for letter in w:
        image = TensorPolynomial._trusted(sr, {(letter * p, letter * q): c for (p, q), c in table.support(letter)})
        result = result * image
    return result


def _alpha_pairing(u: str, v: str, w: str, table: AlphaTable):
    """``<u ⊗ v | c(w)>`` by dynamic programming over the letters of ``w``."""
    sr = table.semiring

    @lru_cache(maxsize=None)
    def go(i: int, j: int, k: int):
        if k == len(w):
            return sr.one if (i == len(u) and j == len(v)) else sr.zero
        a = w[k]
        total = sr.zero
        for (p, q), c in table.support(a):
            if u[i:i + p] == a * p and v[j:j + q] == a * q and i + p <= len(u) and j + q <= len(v):
                total = sr.add(total, sr.mul(c, go(i + p, j + q, k + 1)))
        return total

    return go(0, 0, 0)


def alpha_law_poly(u: str, v: str, table: AlphaTable, alphabet=None) -> SeriesPolynomial:
    """``u ⊙_α v = Σ_w <u⊗v | c(w)> w`` for a locally finite table.

    Each letter of ``w`` consumes at least one letter of ``u`` or ``v``,
    so only words of length <= |u|+|v| over the letters of ``u`` and ``v``
    can appear.
    """
    if not alpha_locally_finite(table):
        raise PreconditionError("the coproduct is not locally finite (α_00 ≠ 0)")
    from .series import words_up_to

    letters = sorted(set(u) | set(v))
    if alphabet is None:
        alphabet = letters
    coeffs = {}
    for w in words_up_to(letters, len(u) + len(v)):
        c = _alpha_pairing(u, v, w, table)
        if not table.semiring.is_zero(c):
            coeffs[w] = c
    return SeriesPolynomial._trusted(table.semiring, normalize_alphabet(alphabet), coeffs)


def alpha_locally_finite(table: AlphaTable) -> bool:
    sr = table.semiring
    return all(sr.is_zero(table.coefficient(a, 0, 0)) for a in table.letters)


def alpha_associative(table: AlphaTable) -> bool:
    """Letterwise: no exponent >= 2, α_01 and α_10 in {0, 1}, α_01 α_11 = α_10 α_11."""
    if not alpha_locally_finite(table):
        raise PreconditionError("associativity is only characterized for locally finite tables")
    sr = table.semiring

    def is_bit(x):
        return sr.eq(x, sr.zero) or sr.eq(x, sr.one)

    for a in table.letters:
        if any(p >= 2 or q >= 2 for (p, q), _ in table.support(a)):
            return False
        a01, a10, a11 = (table.coefficient(a, *pq) for pq in ((0, 1), (1, 0), (1, 1)))
        if not (is_bit(a01) and is_bit(a10)):
            return False
        if not sr.eq(sr.mul(a01, a11), sr.mul(a10, a11)):
            return False
    return True


def alpha_unital(table: AlphaTable) -> bool:
    """The empty word is a unit iff α_01 = α_10 = 1 for every letter."""
    if not alpha_associative(table):
        raise PreconditionError("unit condition is only characterized for associative tables")
    sr = table.semiring
    return all(
        sr.eq(table.coefficient(a, 0, 1), sr.one) and sr.eq(table.coefficient(a, 1, 0), sr.one)
        for a in table.letters
    )
