"""
Shuffle, infiltration and Hadamard products
===========================================

All three come from one coproduct c(a) = eps (a⊗1 + 1⊗a) + q a⊗a.
The polynomial law, the coproduct and the automaton construction are
three views of the same object.
"""

from multautomata import (
    NATURAL,
    DualLawParams,
    Monomial,
    SGeo,
    coproduct_word,
    dual_law_poly,
    rank,
    rep_hadamard,
    rep_shuffle,
    tau_from_shifts,
    truncate,
)

for name in ("shuffle", "infiltration", "hadamard"):
    params = DualLawParams.named(name, NATURAL)
    print(f"{name:>12}: ab ⊙ a = {dual_law_poly('ab', 'a', params)}")

# a value of q outside {0, 1}
print("\nq = 2:       ab ⊙ a =", dual_law_poly("ab", "a", DualLawParams.of(NATURAL, 1, 2)))

# the coproduct of cd under the shuffle
print("\nc(cd) =", sorted(coproduct_word("cd", "shuffle").items()))

# shuffle of two monomials reaches the product of the ranks
a2 = tau_from_shifts(Monomial("a", 2), "ab")
b3 = tau_from_shifts(Monomial("b", 3), "ab")
print("\nrank(aaa ⧢ bbbb) =", rank(rep_shuffle(a2, b3)), "(3 x 4)")

# Hadamard of periodic series: period lcm(2, 3)
h = rep_hadamard(tau_from_shifts(SGeo(2)), tau_from_shifts(SGeo(3)))
print("\n1/(1-a^2) ⊙ 1/(1-a^3) up to a^12:", truncate(h, 12))
print("rank:", rank(h), "(coprime periods multiply)")
