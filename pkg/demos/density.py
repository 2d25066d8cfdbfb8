"""
How often is a compound automaton minimal?
==========================================

Random automata with integer entries are composed and the rank of the
result is compared with its dimension.  Almost every draw is minimal; tiny
entry ranges on a single letter make the exceptions visible.
"""

from multautomata import SAlphaN, TrialConfig, density_experiment, rank, rep_sum, tau_from_shifts

for op in ("sum", "cauchy", "star"):
    cfg = TrialConfig(op, (2, 2), entry_range=50, trials=40, seed=42)
    print(f"{op:>6} (2, 2), B=50:", density_experiment(cfg).to_json())

# small entries and one letter: degenerate draws appear
cfg = TrialConfig("sum", (2, 2), alphabet="a", entry_range=1, trials=100, seed=3)
print("\n   sum (2, 2), B=1, one letter:", density_experiment(cfg).fraction)

# a non-generic pair: the same series twice
s = tau_from_shifts(SAlphaN(2, 1))
print("rank of S + S for S = 1/(1-2a):", rank(rep_sum(s, s)), "of 2")
