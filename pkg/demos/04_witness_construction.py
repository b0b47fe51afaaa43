"""Constructive witnesses: factor a target type through a given type.

Given lambda with k parts and a target type mu with at least 8k+9 fixed
points, the pipeline packs shrunken pieces of mu into the cycles of a
canonical gamma of type lambda, picks "valid sequences" realizing each
piece, then grows the shrunken orbits back two points at a time. The
result: delta and delta_bar of type lambda, in the two split classes
when lambda splits, with both products of type mu.
"""

from ancover import Partition, construct_witnesses, cover_with_ncycles
from ancover.permutations import ClassLabel, Permutation, an_class_of, cycle_type

lam = Partition.from_text("29,13,11")
mu = Partition.from_text("9,4,3,2,1x35")
pair = construct_witnesses(lam, mu)
print(f"lambda = {lam}, mu = {mu}")
print("gamma     =", pair.gamma.format_cycles())
print("delta     =", pair.delta.format_cycles())
print("delta_bar =", pair.delta_bar.format_cycles())
print("type(gamma*delta)     =", cycle_type(pair.gamma * pair.delta))
print("type(gamma*delta_bar) =", cycle_type(pair.gamma * pair.delta_bar))
print("class(delta) =", an_class_of(pair.delta), " class(delta_bar) =", an_class_of(pair.delta_bar))
print("rebuild steps:", len(pair.rebuild_log))

# Factoring a concrete element into two n-cycles from chosen classes:
g = Permutation.from_cycles(9, [(1, 2), (3, 4)])
C = ClassLabel(Partition((9,)), "+")
D = ClassLabel(Partition((9,)), "-")
c, d = cover_with_ncycles(g, C, D, seed=1)
print("\nfactor", g.format_cycles(), "as c*d with c in", C, "and d in", D)
print("c =", c.format_cycles())
print("d =", d.format_cycles())
assert c * d == g
