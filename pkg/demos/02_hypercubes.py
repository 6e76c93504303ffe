"""TL diagrams of binary words and the hypercubes they generate."""
from brauerdm import Partition, hypercube, o_delta, o_delta_inverse, tl_diagram
from brauerdm.sets import short_label
from brauerdm.tlcube import bump_cube, cube_double, to_binary, word_str

a = {1, 3, 5, 6}
print("word", word_str(to_binary(a)), "TL diagram", tl_diagram(to_binary(a)).render())
h = hypercube(a)
lam = Partition.parse("7.7.6.5.3.2")
for depth, layer in enumerate(h.layers()):
    print(f"  depth {depth}: " + ", ".join(f"{short_label(v)} ({o_delta_inverse(2, lam, v)})" for v in layer))
assert h.root == o_delta(2, lam)

# inserting 01 at position 2 and doubling along the new arc builds h^{34} from h^{2}
grown = cube_double(bump_cube(hypercube({2}), 2), 2)
print("\ndoubled cube equals h^{34}:", grown.same_cube(hypercube({3, 4})), "->", grown)

big = hypercube({1, 7, 8, 10, 11})
print("\nh^{1,7,8,10,11}:", len(big.vertices), "vertices; shoulder arcs",
      sorted((g.i, g.j) for _, g in big.shoulder()))
