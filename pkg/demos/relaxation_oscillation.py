"""Fractional relaxation and oscillation models.

Relaxation (order 0.5, Caputo):

    (nabla^0.5_* u)(t) + 0.5 u(t) = 2^-(t+1) - h_{-0.5}(t+1, 0),  u(0) = 1

Oscillation (order 1.5, Caputo):

    (nabla^1.5_* u)(t) + 0.5 u(t) = 2^-(t+1) - h_{-1.5}(t+1, 0),
    u(0) = u(1) = 1

The oscillation is solved for a few orders between 1 and 2 to show how the
damping weakens as the order approaches 2.
"""

from pathlib import Path

import numpy as np

from fracnabla import oscillation, relaxation, residual
from fracnabla.output import emit_svg
from fracnabla.solver import example_forcing

outdir = Path(__file__).parent / "output"
outdir.mkdir(exist_ok=True)

relax = relaxation(0.5, 0.5, example_forcing(0.5), 1.0, 100)
print("relaxation u(1..5):", np.round(relax.values.values[1:6], 6))
print("relaxation residual:", residual(relax.problem, relax).max_abs)
(outdir / "relaxation.svg").write_text(emit_svg(relax, title="relaxation, alpha = 0.5"))

for beta in (1.2, 1.5, 1.8, 1.95):
    osc = oscillation(beta, 0.5, example_forcing(beta), 1.0, 1.0, 100)
    u = osc.values.values
    sign_changes = int(np.sum(np.diff(np.sign(u[u != 0])) != 0))
    print(
        f"beta = {beta:<5} min u = {u.min():+.4f}  "
        f"sign changes = {sign_changes:2d}  "
        f"residual = {residual(osc.problem, osc).max_abs:.1e}"
    )
    (outdir / f"oscillation_{beta}.svg").write_text(
        emit_svg(osc, title=f"oscillation, beta = {beta}")
    )
