"""Build polynomial-times-Gaussian functions and push them around.

Every function here is a finite sum of terms p(x) * exp(-pi x.Qx + b.x)
with Q symmetric positive definite and b complex; the class is closed
under all the operations below, so each result prints as a small list of
terms again.
"""

import math

from polygauss import GaussPoly, LinearMap, SpdForm, format_function

# The standard Gaussian exp(-pi x^2): Q = 1, b = 0, polynomial = 1.
g = GaussPoly.standard(1)
print("g            =", format_function(g))
print("g(0)         =", g.evaluate([0.0]))
print("g(1)         =", g.evaluate([1.0]), "= exp(-pi) =", math.exp(-math.pi))

# Complex arguments use the same formula (the holomorphic extension):
print("g(i)         =", g.evaluate([1j]), "= exp(+pi) =", math.exp(math.pi))

# Multiplying by a monomial, translating, modulating:
xg = g.monomial_times((1,))
print("\nx*g          =", format_function(xg))
print("x*g shifted  =", format_function(xg.translate([1.0])))
print("x*g modulated=", format_function(xg.modulate([0.5])))

# Products multiply polynomials and add exponents:
print("\ng*g          =", format_function(g * g))
print("(x*g)^2      =", format_function(xg * xg))

# Derivatives stay in the class: each step multiplies by a linear factor.
print("\nd/dx g       =", format_function(g.differentiate((1,))))
print("d2/dx2 g     =", format_function(g.differentiate((2,))))

# A 2-D anisotropic example with a complex shift:
quad = SpdForm([[2.0, 0.5], [0.5, 1.0]])
f = GaussPoly.gaussian(quad, shift=[1j, -0.5])
print("\nf            =", format_function(f))

# Invertible changes of variables transform Q congruently:
rot = LinearMap([[0.0, -1.0], [1.0, 0.0]])
print("f o rot      =", format_function(f.compose_linear(rot)))

# Sums merge terms with matching (Q, b) keys into one canonical term:
print("\ng + g        =", format_function(g + g))
print("g - g        =", format_function(g + (-1.0) * g))
