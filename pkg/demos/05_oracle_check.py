"""Recompute simple dimensions from diagram arithmetic and compare with the hypercube rows."""
from brauerdm import Partition
from brauerdm.oracle import cell_gram, dim_identity_report, dim_simple

P = Partition.parse

print("Gram matrix of the cell form on Delta_4(-) at delta=0:")
for row in cell_gram(0, 4, P("-")).entries:
    print("  ", row)
print("simple dimensions at delta=0, n=4:", {str(lam): dim_simple(0, 4, lam) for lam in
                                             [P("4"), P("3.1"), P("2.2"), P("2"), P("1.1"), P("-")]})

for delta in (-1, 0, 1, 2, 3):
    for n in range(7):
        rep = dim_identity_report(delta, n)
        assert rep["pass"], rep
print("dim Delta(nu) = sum_lam D[lam][nu] dim L(lam): holds for delta in -1..3, n <= 6")

try:
    from brauerdm.oracle import hom_dim
    print("dim Hom(Delta_2(2), Delta_2(-)) at delta=0:", hom_dim(0, 2, P("2"), P("-")))
except ImportError:
    print("install brauerdm[slow] for hom_dim")
