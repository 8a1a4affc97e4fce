"""Polynomials with exact rational coefficients and their Groebner bases.

Run: python3 demos/01_groebner_bases.py
"""

from noether import GREVLEX, LEX, RingContext, buchberger, eliminate, normal_form, parse_polynomial

ring = RingContext("x, y")
f = parse_polynomial("x^2 - y", ring)
g = parse_polynomial("x*y - 1", ring)
print("f =", f)
print("g =", g)
print("f*g =", f * g)

# The same ideal has one reduced basis per monomial order.
for order in (GREVLEX, LEX):
    basis = buchberger([f, g], order)
    print(f"\nreduced basis under {order.kind}:")
    for p in basis:
        print("   ", p)
    stats = basis.stats
    print(f"  {stats.pairs_considered} S-pairs considered, {stats.pairs_skipped} skipped by the product criterion")

# Normal forms decide membership.
basis = buchberger([f, g], LEX)
h = parse_polynomial("y^3 - 1", ring)
print("\nremainder of y^3 - 1 under the lex basis:", basis.reduce(h), "(so it lies in the ideal)")
# Plain division by the original generators need not reach zero.
print("remainder under division by f, g alone:", normal_form(h, [f, g], LEX))

# Eliminating the first variable (x) leaves the part of the ideal that only involves y.
print("eliminating x:", eliminate([f, g], 1))
