#!/usr/bin/env python3
"""
Classical patterns and partially ordered patterns (POPs).

A classical pattern occurs in a permutation wherever some subsequence is
order-isomorphic to it.  A POP relaxes this: only the comparisons listed
in a partial order on the positions must hold, so one POP stands for a
whole set of classical patterns.
"""
from shapewilf import (
    avoids_all,
    format_pattern_set,
    occurrences,
    parse_perm,
    parse_pop,
    pattern_occurrences,
    pop_occurrences,
    pop_to_pattern_set,
)

w = parse_perm("31425")
p = parse_perm("123")
print(f"occurrences of 123 in 31425: {pattern_occurrences(p, w)}")
for occ in occurrences(p, w):
    values = "".join(str(w[i - 1]) for i in occ)
    print(f"  indices {occ} -> subsequence {values}")

# The POP on three positions with position 3 below position 1: an
# occurrence only needs its third value smaller than its first.
pop = parse_pop("3; 3<1")
w = parse_perm("41523")
print(f"\nPOP '3; 3<1' occurs {pop_occurrences(pop, w)} times in 41523")
expanded = pop_to_pattern_set(pop)
print(f"avoiding it = avoiding every pattern in {format_pattern_set(expanded)}")
print(f"does 41523 avoid all three? {avoids_all(expanded, w)}")

# Chains are classical patterns; the fan POP puts one position above all
# the others and expands to the patterns with their maximum at that spot.
from shapewilf import fan_pop

for apex in (1, 2, 3):
    fan = fan_pop(3, apex)
    print(f"fan (size 3, apex {apex}) = {format_pattern_set(pop_to_pattern_set(fan))}")
