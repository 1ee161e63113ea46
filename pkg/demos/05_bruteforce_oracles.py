"""Brute-force maxima over 0/1 and -1/+1 matrices, and the relation between them."""
from maxdet import TABLES, brute_dn, brute_Mn, check_relation

for n in range(1, 6):
    rep = brute_dn(n)
    print(f"d_{n} = {rep.value:>2} (published {TABLES.d_value(n)}), {rep.search_space} matrices, {rep.elapsed:.2f}s")

print()
for n in range(1, 6):
    rep = brute_Mn(n)
    print(f"M({n}) = {rep.value:>2}  normalized search over {rep.search_space} matrices")

print()
for n in range(2, 6):
    rel = check_relation(n)
    print(f"M({n}) = {rel.m_value} vs 2^{n - 1} * d_{n - 1} = {rel.rhs}: {'holds' if rel.holds else 'fails'}")
