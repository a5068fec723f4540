"""Multiplicity sequences over the rational quaternions.

A pair (a, b) of conjugate quaternions is a valid chain unless b is the
quaternion conjugate of a (for non-real a).
"""

from skewmult import (
    MultSeq, Quaternions, conjclass_minpoly, extend_multseq, linear_product,
    validate_multseq, validate_multseq_specialized,
)

H = Quaternions()
i, j = H.make(0, 1), H.make(0, 0, 1)
a = H.make(1, 1, 1)

for pts in ([i, i], [i, -i], [i, j], [a, H.conj(a)], [a, a, a]):
    print([str(p) for p in pts], validate_multseq(pts), validate_multseq_specialized(pts))

seq = MultSeq([a]).validate()
for _ in range(3):
    seq = extend_multseq(seq)
print("extended:", seq)
print("P =", linear_product(seq.points))
print("class polynomial of", a, "is", conjclass_minpoly(a))
