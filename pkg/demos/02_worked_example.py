"""Building an ideal from its irreducible pieces and taking it apart again.

Three-space contains a line, two skew lines and a fat point at the origin.
Intersecting the pieces step by step produces the total ideal M, which is
also the product of two coprime ideals.

Run: python3 demos/02_worked_example.py
"""

from noether import LEX, Ideal, RingContext, equal, ideal_sum, intersect, is_coprime, product
from noether import DecompositionClaim, verify_decomposition

ring = RingContext("x, y, z")


def show(name, ideal):
    print(f"{name:3} = ({', '.join(str(g) for g in ideal.groebner(LEX))})")


B = {k: Ideal.parse(text, ring) for k, text in {
    1: "x - 1, y",
    2: "y - 1, z",
    3: "x, z",
    4: "x^3, y, z",
    5: "x^2, y^2, z",
}.items()}
for k, b in B.items():
    show(f"B{k}", b)

print("\nmerging the pieces at the origin:")
Q4 = intersect(B[4], B[5])
show("Q4", Q4)
R3 = intersect(B[3], Q4)
show("R3", R3)
S2 = intersect(B[2], R3)
show("S2", S2)
S1 = B[1]
M = intersect(S1, S2)
show("M", M)

print("\nS1 and S2 are coprime:", is_coprime(S1, S2))
print("so M is also their product:", equal(M, product(S1, S2)))
print("and S1 + S2 is the unit ideal:", ideal_sum(S1, S2).is_unit())

claim = DecompositionClaim(M, list(B.values()), "irreducible")
report = verify_decomposition(claim)
print("\nM = [B1, ..., B5] as an irreducible decomposition:", "passed" if report.passed else "failed")

# The embedded pieces are not unique: other choices give the same M.
D4 = Ideal.parse("x^3, y + x^2, z", ring)
D5 = Ideal.parse("x^2 + 2*x*y, y^2, z", ring)
print("replacing B4, B5 by D4, D5 gives the same Q4:", equal(intersect(D4, D5), Q4))
