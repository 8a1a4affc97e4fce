"""Integer matrices up to two-sided unimodular equivalence.

A class is recorded by its elementary divisors; divisibility, lcm and gcd act
entrywise, and every class splits into prime-power and irreducible pieces.

Run: python3 demos/05_matrix_classes.py
"""

from noether import matrix_classes as mc

A = [[2, 4], [6, 8]]
system, cert = mc.smith_normal_form(A)
print("A =", A)
print("elementary divisors:", system)
print("U =", cert.U, " V =", cert.V)
print("U*A*V =", mc.matmul(mc.matmul(cert.U, A), cert.V))

B = mc.ElementaryDivisorSystem.parse("1|3")
print(f"\nlcm({system}, {B}) = {mc.class_lcm(system, B)}")
print(f"gcd({system}, {B}) = {mc.class_gcd(system, B)}")

C = mc.ElementaryDivisorSystem.parse("2|12|0")
print(f"\n{C} splits by prime into", ", ".join(map(str, mc.prime_split(C))))
print("and into irreducible classes:")
for piece in mc.decompose_class(C):
    note = "rank marker" if piece.is_rank_marker else f"prime {piece.prime}, exponent {piece.exponent}"
    print(f"  {piece}  ({note})")
