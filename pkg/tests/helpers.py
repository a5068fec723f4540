"""Shared rings and random generators for the test-suite."""

import json
import os
import random

from skewmult import (
    FiniteField, GaussianRationals, MultSeq, Quaternions, RationalFunctions, SkewPoly,
    conjugate, validate_multseq,
)
from skewmult.skewpoly import random_poly

F9 = FiniteField(3, 2, modulus=(1, 0, 1))
F27 = FiniteField(3, 3)
QUAT = Quaternions()
GAUSS = GaussianRationals()
RATFUN = RationalFunctions(3)

RINGS = {"F9": F9, "F27": F27, "quat": QUAT, "gauss": GAUSS, "ratfun": RATFUN}

_DATA = os.path.join(os.path.dirname(__file__), "data", "frozen.json")


def frozen():
    with open(_DATA) as fh:
        return json.load(fh)


def rng(seed=0):
    return random.Random(seed)


def rand_poly(ctx, r, max_degree=6, monic=False):
    return random_poly(ctx, r, r.randint(0, max_degree), monic=monic)


def rand_poly_or_zero(ctx, r, max_degree=6):
    if r.random() < 0.1:
        return SkewPoly(ctx)
    return rand_poly(ctx, r, max_degree)


def x_of(ctx):
    return SkewPoly.x(ctx)


def random_validated_seq(ctx, r, length, tries=50):
    """Random multiplicity sequence: random conjugation steps, kept when valid."""
    pts = [ctx.random_element(r)]
    while len(pts) < length:
        for _ in range(tries):
            cand = conjugate(pts[-1], ctx.random_nonzero(r))
            if validate_multseq(pts[-1:] + [cand]):
                pts.append(cand)
                break
        else:
            return None
    return MultSeq(pts).validate()
