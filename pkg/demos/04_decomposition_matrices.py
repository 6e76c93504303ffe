"""Decomposition and Cartan matrices, blocks, and the export formats."""
from brauerdm import Partition, blocks, cartan, decomp_matrix, decomp_row, export

print("delta=0, n=4, module labels (rows: projectives, columns: standard modules)")
print(export(decomp_matrix(0, 4, "module"), "polytable", with_depths=True))
print("\nCartan matrix")
print(export(cartan(0, 4), "polytable"))

print("\nblocks of Lambda^6 at delta=1 (primed labels)")
for b in blocks(1, 6).blocks:
    if len(b.members) > 1:
        print("  ", ", ".join(str(lam) for lam in b.members))

print("\nrow of 7.7.6.5.3.2 at delta=2 as JSON")
print(export(decomp_row(2, Partition.parse("7.7.6.5.3.2")), "json"))
