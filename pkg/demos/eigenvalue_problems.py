"""Discrete Mittag-Leffler type solutions of the nabla eigenvalue problems.

Solves

    (nabla^0.5 u)(t) + lambda u(t) = 0,    u(0) = 1,

for lambda = +0.5 and -0.5, in Riemann-Liouville and Caputo form, and writes
one SVG chart per case next to this script.
"""

from pathlib import Path

import numpy as np

from fracnabla import eigen_caputo, eigen_rl
from fracnabla.output import emit_svg

outdir = Path(__file__).parent / "output"
outdir.mkdir(exist_ok=True)

cases = {
    "eigen_rl_decay": eigen_rl(0.5, 0.5, 100),
    "eigen_rl_growth": eigen_rl(0.5, -0.5, 100),
    "eigen_caputo_growth": eigen_caputo(0.5, -0.5, 100),
    "eigen_caputo_decay": eigen_caputo(0.5, 0.5, 100),
}

print(f"{'case':<22}{'u(1)':>14}{'u(10)':>14}{'u(100)':>14}  monotone")
for name, sol in cases.items():
    u = sol.values.values
    steps = np.diff(u[1:])
    shape = "down" if np.all(steps < 0) else "up" if np.all(steps > 0) else "no"
    print(f"{name:<22}{u[1]:>14.6g}{u[10]:>14.6g}{u[100]:>14.6g}  {shape}")
    (outdir / f"{name}.svg").write_text(emit_svg(sol, title=name))

# With lambda = 0 the Caputo solution keeps its initial value, because the
# Caputo difference annihilates constants. The R-L one does not.
flat = eigen_caputo(0.5, 0.0, 20).values.values
print("caputo, lambda = 0:", np.ptp(flat))
print("R-L,    lambda = 0:", eigen_rl(0.5, 0.0, 5).values.values)
