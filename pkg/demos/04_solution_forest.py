"""Ties make the greedy solution a forest; expand it breadth-first."""
from collections import Counter

from maxdet import A1, A3, build_border_form, enumerate_maximizers, grow_forest

found, total = enumerate_maximizers(build_border_form(A1), cap=10)
print(f"1x1 seed has {total} maximizing borders:")
for asg in found:
    print("  x =", asg.x, "y =", asg.y, "->", A1.bordered(asg.x, asg.y).to_strings())

forest = grow_forest(A3, 4, "all", cap=5000)
print("\nforest from A3, nodes per level:", [len(level) for level in forest.levels])
print("dets per level:", [sorted(Counter(n.det for n in level)) for level in forest.levels])
print("truncated:", forest.truncated)

limited = grow_forest(A3, 6, "limit=2")
print("\nlimit=2 per node, nodes per level:", [len(level) for level in limited.levels])
