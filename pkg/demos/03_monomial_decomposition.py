"""The four decompositions of a monomial ideal.

Run: python3 demos/03_monomial_decomposition.py
"""

from noether import MonomialIdeal, RingContext, decompose
from noether import monomial_decomp as md

ring = RingContext("x, y, z")
M = MonomialIdeal.parse("x^3, x^2*y, x*y^2, z", ring)
print("M =", M)
print("primary:", md.is_primary(M), " irreducible:", md.is_irreducible(M))

for kind in ("irreducible", "primary", "relprime", "coprime"):
    report = decompose(M, kind)
    print(f"\n{report.kind} decomposition (split depth {report.split_depth}, bound {M.degree_sum()}):")
    for c in report.components:
        d = c.as_dict()
        print(f"  ({', '.join(d['generators'])})  prime={d['associated_prime']}  "
              f"exponent={d['exponent']}  isolated={d['isolated']}")

# A witness that (x^2, xy) is not primary: x*y lies in it, x does not, no power of y does.
N = MonomialIdeal.parse("x^2, x*y", RingContext("x, y"))
print("\nwitness against primality of", N, "->", md.primary_witness(N))
