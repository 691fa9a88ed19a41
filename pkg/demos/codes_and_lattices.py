"""From a self-dual code to a unimodular lattice, step by step.

Run with: python3 demos/codes_and_lattices.py
"""

from fractions import Fraction

from zklat import (
    build_four_negacirculant,
    classify,
    construction_a,
    d_E_upper_bound,
    is_self_dual,
    min_euclidean_weight,
    min_norm,
)

# A length-20 code over Z_5 in four-negacirculant form: the two defining
# rows determine the whole 10 x 20 generator matrix.
code = build_four_negacirculant(5, (0, 0, 0, 1, 1), (1, 4, 2, 1, 0))
print(f"code: length {code.n} over Z_{code.k}, |C| = {code.cardinality}")
print("self-dual:", is_self_dual(code))

# Exhaustive minimum Euclidean weight, compared against the proven bound.
d_e = min_euclidean_weight(code)
bound = d_E_upper_bound(code.n, code.k)
print(f"d_E = {d_e}, bound {bound.value} [{bound.rule}]"
      f" -> {classify(code.n, code.k, d_e)}")

# Construction A turns the code into an odd unimodular lattice; its
# minimum norm obeys min(L) = min(k, d_E / k).
lat = construction_a(code)
print(f"lattice: dim {lat.dim}, unimodular = {lat.is_unimodular()},"
      f" even = {lat.is_even()}")
mn = min_norm(lat)
print(f"min norm {mn} == min(k, d_E/k) = {min(Fraction(code.k), Fraction(d_e, code.k))}")
