"""Convolution through the spectral product, and the Plancherel pairing.

The convolution of two class members is computed as the inverse transform
of the product of their transforms; the direct integral survives only as
the independent oracle.  The L2 pairing is invariant under the transform.
"""

import numpy as np

from polygauss import (
    GaussPoly,
    coefficient_distance,
    convolve,
    format_function,
    fourier_transform,
    inner_product,
    quad_convolve,
)
from polygauss.testing import random_gauss_poly

# Two unit Gaussians convolve to a wider one with mass 2^(-1/2):
g = GaussPoly.standard(1)
gg = convolve(g, g)
print("g * g =", format_function(gg))
for x in (0.0, 0.5, 1.0):
    print(f"  x={x:4.1f}  spectral={gg.evaluate([x]):.12f}  integral={quad_convolve(g, g, [x]):.12f}")

# Commutativity and associativity hold symbolically:
rng = np.random.default_rng(7)
f1 = random_gauss_poly(rng, 1, n_terms=1, max_degree=1)
f2 = random_gauss_poly(rng, 1, n_terms=1, max_degree=1)
f3 = random_gauss_poly(rng, 1, n_terms=1, max_degree=1)
print("\ncommutativity residual :", coefficient_distance(convolve(f1, f2), convolve(f2, f1)))
print(
    "associativity residual :",
    coefficient_distance(convolve(convolve(f1, f2), f3), convolve(f1, convolve(f2, f3))),
)

# The transform turns convolution into a pointwise product:
lhs = fourier_transform(convolve(f1, f2))
rhs = fourier_transform(f1) * fourier_transform(f2)
print("convolution theorem    :", coefficient_distance(lhs, rhs))

# Plancherel: the pairing <f, h> = integral f conj(h) is transform-invariant.
f = random_gauss_poly(rng, 2, n_terms=2, max_degree=2)
h = random_gauss_poly(rng, 2, n_terms=2, max_degree=2)
lhs = inner_product(f, h)
rhs = inner_product(fourier_transform(f), fourier_transform(h))
print("\n<f, h>      =", lhs)
print("<Ff, Fh>    =", rhs)
print("residual    =", abs(lhs - rhs))

# <g, g> for the unit Gaussian is integral exp(-2 pi x^2) = 2^(-1/2):
print("\n<g, g>      =", inner_product(g, g), " (2^-1/2 =", 2.0 ** -0.5, ")")
