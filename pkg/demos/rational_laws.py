"""
Building automata from rational expressions
===========================================

Sum, Cauchy product and star are applied as block constructions, so the
dimension of a compound automaton can be read off its expression.
"""

from multautomata import (
    RATIONAL,
    SAlphaN,
    compile_expression,
    equivalent,
    parse_expression,
    rank,
    rep_cauchy,
    tau_from_shifts,
    truncate,
)

# (ab)* : coefficient 1 exactly on the powers of ab
expr = parse_expression("(a.b)*", "ab", RATIONAL)
star = compile_expression(expr, "ab", RATIONAL)
print("(ab)* has dimension", star.dim, "and rank", rank(star))
print("  up to length 4:", truncate(star, 4))

# 1/(1-2a) squared, once as an expression and once from the shift basis
sq = compile_expression(parse_expression("([2]a)*.([2]a)*", "a", RATIONAL), "a", RATIONAL)
s21 = tau_from_shifts(SAlphaN(2, 1))
print("\n1/(1-2a)^2:", truncate(sq, 4))
print("  same series as the product of shift-basis automata:", equivalent(sq, rep_cauchy(s21, s21)))
print("  same series as 1/(1-2a)^2 built directly:", equivalent(sq, tau_from_shifts(SAlphaN(2, 2))))
print("  compiled dimension", sq.dim, "but rank", rank(sq))
