"""Shifted embedding, doubleton removal and valley sets of a few partitions."""
from fractions import Fraction

from brauerdm import Partition, e_delta, o_delta, o_delta_inverse, reg, same_block, singularity
from brauerdm.sets import format_set

P = Partition.parse

for delta, text in [(2, "-"), (2, "3.3"), (0, "3.3.3.1"), (0, "4.3.3.1"), (2, "7.7.6.5.3.2")]:
    lam = P(text)
    seq = e_delta(delta, lam)
    regular = ",".join(str(Fraction(x, 2)) for x, _ in reg(seq)[:6])
    print(f"delta={delta:2d} lam={text:12s} e={seq}  Reg=({regular},...)  "
          f"singularity={singularity(seq).count}  o={format_set(o_delta(delta, lam))}")

# the valley set is a complete invariant inside a block
lam = P("7.7.6.5.3.2")
b = {1, 2, 5, 6}
mu = o_delta_inverse(2, lam, b)
print(f"\nin the block of {lam} at delta=2, {format_set(b)} belongs to {mu}; same block: {same_block(2, lam, mu)}")
