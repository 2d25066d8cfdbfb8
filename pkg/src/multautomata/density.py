"""Test series, random automata and the minimality-density experiment.

``tau_from_shifts`` builds the representation of a one-letter rational
series from its shift basis ``(a^-p S)_{0 <= p < n}``: ``lam = e_0``,
``gamma_p = <S|a^p>`` and ``mu(a)`` shifts ``e_p`` to ``e_{p+1}`` except in
the last row, where ``a^-n S`` is written in the basis by solving the
Hankel system of its linear recurrence.

``density_experiment`` samples integer-valued automata, composes them with
sum, Cauchy product or star and counts how often the result is already
minimal.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from . import matrices as mx
from .rational import rep_cauchy, rep_star, rep_sum
from .reduction import rank
from .semiring import RATIONAL, Semiring
from .series import LinearRepresentation, normalize_alphabet

__all__ = [
    "SAlphaN",
    "TN",
    "SGeo",
    "Monomial",
    "tau_from_shifts",
    "random_rep",
    "TrialConfig",
    "DensityReport",
    "density_experiment",
    "splitmix64",
]


@dataclass(frozen=True)
class SAlphaN:
    """``1 / (1 - alpha a)^n``, of rank ``n``."""

    alpha: object
    n: int
    letter: str = "a"

    def validate(self):
        if self.n < 1 or Fraction(self.alpha) == 0:
            raise ValueError("S_alpha_n needs n >= 1 and alpha != 0")

    rank = property(lambda self: self.n)

    def coefficient(self, p: int):
        return comb(p + self.n - 1, self.n - 1) * Fraction(self.alpha) ** p


@dataclass(frozen=True)
class TN:
    """``a^(n-1) / (1 - a^n)``, of rank ``n``."""

    n: int
    letter: str = "a"

    def validate(self):
        if self.n < 1:
            raise ValueError("T_n needs n >= 1")

    rank = property(lambda self: self.n)

    def coefficient(self, p: int):
        return 1 if p % self.n == self.n - 1 else 0


@dataclass(frozen=True)
class SGeo:
    """``1 / (1 - a^n)``, of rank ``n``."""

    n: int
    letter: str = "a"

    def validate(self):
        if self.n < 1:
            raise ValueError("S_geo needs n >= 1")

    rank = property(lambda self: self.n)

    def coefficient(self, p: int):
        return 1 if p % self.n == 0 else 0


@dataclass(frozen=True)
class Monomial:
    """The single word ``letter^k``, of rank ``k + 1``."""

    letter: str
    k: int

    def validate(self):
        if self.k < 0:
            raise ValueError("monomial exponent must be >= 0")

    rank = property(lambda self: self.k + 1)

    def coefficient(self, p: int):
        return 1 if p == self.k else 0


SeriesSpec = SAlphaN | TN | SGeo | Monomial


def tau_from_shifts(spec: SeriesSpec, alphabet="a", semiring: Semiring = RATIONAL) -> LinearRepresentation:
    """Shift-basis representation of a one-letter series.

    Letters of ``alphabet`` other than the series' letter act as zero.
    """
    spec.validate()
    alphabet = normalize_alphabet(alphabet)
    if spec.letter not in alphabet:
        raise ValueError(f"letter {spec.letter!r} not in alphabet")
    sr = semiring
    n = spec.rank
    s = [sr.coerce(spec.coefficient(p)) for p in range(2 * n)]
    # a^-n S = Σ_j c_j a^-j S  <=>  s[n+k] = Σ_j c_j s[j+k] for all k; n equations determine c
    hankel = mx.Echelon(sr, n)
    for j in range(n):
        if not hankel.add(tuple(s[j + k] for k in range(n))):
            raise ValueError(f"{spec} does not have rank {n}")
    last_row = hankel.coordinates(tuple(s[n + k] for k in range(n)))
    shift = [mx.unit_vector(sr, n, p + 1) for p in range(n - 1)] + [last_row]
    zero_matrix = mx.zeros(sr, n, n)
    mu = {a: (tuple(shift) if a == spec.letter else zero_matrix) for a in alphabet}
    return LinearRepresentation(sr, alphabet, mx.unit_vector(sr, n, 0), mu, tuple(s[:n]))


def splitmix64(x: int) -> int:
    """One step of the splitmix64 output function (Steele, Lea, Flood)."""
    mask = (1 << 64) - 1
    x = (x + 0x9E3779B97F4A7C15) & mask
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & mask
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & mask
    return x ^ (x >> 31)


def random_rep(dim: int, alphabet="ab", entry_range: int = 50, seed: int = 0,
               semiring: Semiring = RATIONAL) -> LinearRepresentation:
    """Entries drawn independently and uniformly from the integers in ``[-B, B]``."""
    if dim < 1:
        raise ValueError("dim must be at least 1")
    alphabet = normalize_alphabet(alphabet)
    rng = random.Random(seed)
    B = entry_range

    def draw():
        return semiring.coerce(rng.randint(-B, B))

    lam = tuple(draw() for _ in range(dim))
    mu = {a: tuple(tuple(draw() for _ in range(dim)) for _ in range(dim)) for a in alphabet}
    gamma = tuple(draw() for _ in range(dim))
    return LinearRepresentation(semiring, alphabet, lam, mu, gamma)


_OPERATIONS: dict[str, Callable] = {
    "sum": rep_sum,
    "cauchy": rep_cauchy,
    "star": lambda r: rep_star(r, allow_improper=True),
}


@dataclass(frozen=True)
class TrialConfig:
    operation: str
    dims: tuple[int, ...]
    alphabet: str = "ab"
    entry_range: int = 50
    trials: int = 200
    seed: int = 0

    def __post_init__(self):
        if self.operation not in _OPERATIONS:
            raise ValueError(f"operation must be one of {sorted(_OPERATIONS)}")
        if self.trials < 1 or self.entry_range < 1:
            raise ValueError("trials and entry_range must be at least 1")
        dims = tuple(self.dims)
        if not dims or any(d < 1 for d in dims):
            raise ValueError("dims must be positive")
        if self.operation != "star" and len(dims) < 2:
            raise ValueError(f"{self.operation} needs two dimensions")
        object.__setattr__(self, "dims", dims)

    @property
    def full_dimension(self) -> int:
        if self.operation == "star":
            return self.dims[0] + 1
        return self.dims[0] + self.dims[1]


@dataclass(frozen=True)
class DensityReport:
    operation: str
    dims: tuple[int, ...]
    trials: int
    minimal: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.minimal, self.trials)

    def to_json(self) -> str:
        f = self.fraction
        return json.dumps({
            "operation": self.operation,
            "dims": list(self.dims),
            "trials": self.trials,
            "minimal": self.minimal,
            "fraction": f"{f.numerator}/{f.denominator}",
        })


def trial_is_minimal(cfg: TrialConfig, index: int) -> bool:
    """Run one trial; its randomness depends only on ``cfg.seed`` and ``index``."""
    first = splitmix64(cfg.seed + index)
    second = splitmix64(first)
    r = random_rep(cfg.dims[0], cfg.alphabet, cfg.entry_range, first)
    if cfg.operation == "star":
        compound = _OPERATIONS["star"](r)
    else:
        s = random_rep(cfg.dims[1], cfg.alphabet, cfg.entry_range, second)
        compound = _OPERATIONS[cfg.operation](r, s)
    return rank(compound) == cfg.full_dimension


def density_experiment(cfg: TrialConfig, map_fn: Callable = map) -> DensityReport:
    """Count trials whose compound automaton is minimal.

    ``map_fn`` may be swapped for a parallel map (e.g. an executor's
    ``map``); the report does not depend on evaluation order.
    """
    outcomes = map_fn(trial_is_minimal, [cfg] * cfg.trials, range(cfg.trials))
    minimal = sum(bool(ok) for ok in outcomes)
    return DensityReport(cfg.operation, cfg.dims, cfg.trials, minimal)
