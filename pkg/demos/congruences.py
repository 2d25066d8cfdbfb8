"""
Congruences compatible with the shuffle
=======================================

A relator set is compatible when related words have related coproducts.
Commutations and identifications always are; erasing a letter needs
1 + 1 = 1, and in characteristic two some unexpected sets pass.
"""

from multautomata import (
    BOOLEAN,
    NATURAL,
    RATIONAL,
    TROPICAL,
    RelatorSet,
    congruence_class,
    predicted_compatibility,
    shuffle_compatible,
    zmod,
)

sets = {
    "ab = ba": RelatorSet("ab", [("ab", "ba")]),
    "a = 1": RelatorSet("a", [("a", "")]),
    "a = 1, a = b, cd = dc": RelatorSet("abcd", [("a", ""), ("a", "b"), ("cd", "dc")]),
    "char 2 set": RelatorSet("ab", [("abb", "bba"), ("aab", "baa"), ("abab", "baba")]),
}
semirings = [RATIONAL, NATURAL, BOOLEAN, TROPICAL, zmod(2)]

print(f"{'':>22}" + "".join(f"{sr.tag:>10}" for sr in semirings))
for name, rel in sets.items():
    row = "".join(f"{str(shuffle_compatible(rel, sr)):>10}" for sr in semirings)
    print(f"{name:>22}{row}")

print("\npredicted over Z/2Z:")
for name, rel in sets.items():
    print(f"  {name:>22}: {predicted_compatibility(rel, zmod(2))}")

print("\nclass of aab under ab = ba:", sorted(congruence_class("aab", sets["ab = ba"])))
