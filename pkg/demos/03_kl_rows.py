"""Parabolic KL rows on G_even and their closed form as hypercube depths."""
from brauerdm import kl_equals_cube, kl_row
from brauerdm.decomp import export, poly_table
from brauerdm.klpoly import even_subsets, ge_neighbors
from brauerdm.sets import short_label

for a in [set(), {1, 2}, {1, 3}, {3, 4}, {1, 3, 5, 6}]:
    print(f"{short_label(a):>5}  {kl_row(a)}")

print("\nedges at 1356:", [(e.label, short_label(e.lower), short_label(e.upper)) for e in ge_neighbors({1, 3, 5, 6})])
print("closed form holds on all even subsets of 1..9:", all(kl_equals_cube(a) for a in even_subsets(9)))
print("\nexponent table over even subsets of 1..4 (blank = zero)")
print(export(poly_table(4), "polytable"))
