"""The textual expression language, JSON interchange, and the oracle.

The same engine is scriptable from the command line::

    polygauss ft 'x1*exp(-pi*[[1]][x,x])'
    polygauss verify --rule plancherel f.json fhat.json
    polygauss sample --grid=-2:2:41 'exp(-pi*[[1]][x,x])' -o grid.csv
"""

import numpy as np

from polygauss import (
    QuadratureSpec,
    coefficient_distance,
    compare,
    evaluate_ast,
    finite_difference,
    format_function,
    fourier_transform,
    function_from_json,
    function_to_json,
    lower,
    parse,
    quad_fourier,
)

# Parse and lower an expression; the AST interpreter cross-checks lowering.
text = "(2+3i)*x1^2*exp(-pi*[[2,0],[0,1]][x,x] + [1i,0].x)"
ast = parse(text)
f = lower(ast)
print("source :", text)
print("lowered:", format_function(f))
z = np.array([0.3, -0.7])
print("AST value    :", evaluate_ast(ast, z))
print("lowered value:", f.evaluate(z))

# Printing is canonical and parses back to the identical function:
printed = format_function(f)
again = lower(parse(printed))
print("print/parse round trip residual:", coefficient_distance(f, again))

# JSON round trips exactly (17 significant digits):
doc = function_to_json(f)
print("\nJSON:", doc)
print("JSON round trip residual:", coefficient_distance(f, function_from_json(doc)))

# The quadrature oracle checks the closed-form transform independently.
fhat = fourier_transform(f)
for xi in ([0.0, 0.0], [0.5, 0.5]):
    closed = fhat.evaluate(xi)
    direct = quad_fourier(f, xi)
    verdict = compare(closed, direct, 1e-6, 1e-6)
    print(f"\nxi={xi}: closed={closed:.10f}")
    print(f"          direct={direct:.10f}  residual={verdict.residual:.2e}  pass={verdict.passed}")

# Specs certify their truncation error and refuse anything they cannot cover:
try:
    quad_fourier(f, [0.0, 0.0], QuadratureSpec(2, 1.0, 40))
except Exception as err:
    print("\nundersized box rejected:", err)

# Finite differences validate symbolic derivatives:
df = f.differentiate((1, 0))
x = np.array([0.2, 0.4])
print("\nsymbolic derivative :", df.evaluate(x))
print("finite difference   :", finite_difference(f, 0, x, 1e-5))
