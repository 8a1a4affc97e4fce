"""Decompositions in the ring of multiples of an integer g.

In the even numbers there is no unit, and 2 times a prime generates a prime
ideal.  Components at the base prime (g) are embedded.

Run: python3 demos/04_multiples_of_g.py
"""

from noether import z_subring as zr

for g, a in ((2, 24), (2, 90), (12, 120), (12, 720)):
    ring = zr.GRing(g)
    ideal = ring.ideal(a)
    print(f"g = {g}, ideal ({a}):")
    for kind in zr.KINDS:
        comps = zr.decompose(ideal, kind)
        text = ", ".join(f"({c.generator})" + ("" if c.isolated else "*") for c in comps)
        print(f"  {kind:12} [{text}]")
    print(f"  lcm of the irreducible pieces: {zr.reconstruct(zr.decompose(ideal, 'irreducible'), ring)}")
print("(* marks an embedded component)")
