"""Grow the nested sequence from the 3x3 seed and compare with the published data."""
import time

from maxdet import A1, A3, A15, TABLES, compare_with_reference, grow_sequence

t0 = time.perf_counter()
chain = grow_sequence(A3, 12)
print(f"grew to n={chain[-1].depth} in {time.perf_counter() - t0:.2f}s\n")

print(" n      b_n   stored b_n  stored d_n  ties")
for node in chain:
    n = node.depth
    print(f"{n:>2} {node.det:>8} {TABLES.b_value(n):>12} {TABLES.d_value(n):>11}  {node.tie_count}")

report = compare_with_reference(chain, A15)
print("\nfinal matrix equals the published A_15:", report is None)
print(chain[-1].matrix)

# Starting from 1x1 instead: the first tie picks the identity, and the
# sequence then stalls at det 1
print("\nfrom A1:", [n.det for n in grow_sequence(A1, 4)])
print(compare_with_reference(grow_sequence(A1, 2), A15).describe())
