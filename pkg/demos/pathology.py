"""Two different points with the same square, over F_9 with the Frobenius.

    python demos/pathology.py
"""

from skewmult import FiniteField, PointSet, SkewPoly, is_p_independent, zero_set_brute

F9 = FiniteField(3, 2, modulus=(1, 0, 1))
g = F9.gen
x = SkewPoly.x(F9)

a, b = 2 * g, g
print("ring:", F9.spec())
print(f"(x - {a})^2 =", (x - a) ** 2)
print(f"(x - {b})^2 =", (x - b) ** 2)
print("right zeros of x^2 + 2:", [str(c) for c in zero_set_brute(x ** 2 + 2)])
print("{a, b} P-independent:", is_p_independent([a, b]))
print("{(x-a)^2, (x-b)^3} P-independent:", is_p_independent(PointSet.powers([(a, 2), (b, 3)])))
