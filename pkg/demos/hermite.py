"""Hermite interpolation from Hasse derivatives over F_27."""

import random

from skewmult import (
    FiniteField, MultSeq, PointSet, build_vandermonde, extend_multseq, hasse_samples,
    hermite_interpolate, is_p_independent,
)
from skewmult.skewpoly import random_poly

F27 = FiniteField(3, 3)
rng = random.Random(1)
g = F27.gen

s1 = extend_multseq(MultSeq([g]).validate())
s2 = MultSeq([F27.one + g * g]).validate()
seqs = [s1, s2]
N = len(s1) + len(s2)
print("sequences:", s1, s2)
print("P-independent:", is_p_independent(PointSet.sequences(seqs)))
print("confluent Vandermonde:")
print(build_vandermonde(seqs, N))

F = random_poly(F27, rng, N - 1)
samples = hasse_samples(F, seqs)
print("F =", F)
print("samples:", [[str(v) for v in row] for row in samples])
print("recovered:", hermite_interpolate(seqs, samples))
