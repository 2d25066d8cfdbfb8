"""
Minimizing automata over a field
================================

Left reduction keeps a prefix-closed set of words spanning the reachable
row vectors; right reduction does the same on the transpose.  The result
has the rank of the series as its dimension.
"""

from multautomata import TN, hankel_rank, minimize, random_rep, rep_star, rep_sum, tau_from_shifts, truncate

# a sum of two copies of the same series wastes half its states
t3 = tau_from_shifts(TN(3))
doubled = rep_sum(t3, t3)
res = minimize(doubled)
print("T_3 + T_3: dimension", doubled.dim, "-> rank", res.rank)
print("  prefix basis:", res.left_basis_words)
print("  suffix basis:", res.right_basis_words)

# star adds exactly one to the rank of T_n
for n in range(2, 6):
    print(f"rank(T_{n}*) =", minimize(rep_star(tau_from_shifts(TN(n)))).rank)

# the Hankel matrix gives the same number
r = random_rep(3, "ab", entry_range=2, seed=7)
print("\nrandom rep: rank", minimize(r).rank, "hankel rank", hankel_rank(r, 4))
print("behaviour kept:", truncate(minimize(r).reduced, 5) == truncate(r, 5))
