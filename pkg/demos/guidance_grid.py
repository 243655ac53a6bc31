"""Sweep the guidance combiner over a (lambda_ref, lambda_in) grid.

Mirrors the interpolation study: rows increase the reference-effect
guidance, columns increase the input-video guidance; each cell shows the
norm of the combined update relative to the unconditional base term.
"""

import numpy as np

from vfxsynth import GuidanceWeights, VelocityEvalSet, combine


def main():
    rng = np.random.default_rng(3)
    evals = VelocityEvalSet(
        v_full=rng.normal(size=16),
        v_no_text=rng.normal(size=16),
        v_no_ref=rng.normal(size=16),
        v_no_input=rng.normal(size=16),
    )
    lambda_c = 5.0
    grid = [0.0, 1.0, 2.0, 4.0, 8.0]

    print(f"lambda_c = {lambda_c}; cells are |combined - v_no_text|")
    print("ref\\in " + "".join(f"{li:>8.1f}" for li in grid))
    for lr in grid:
        row = []
        for li in grid:
            out = combine(evals, GuidanceWeights(lambda_c, lr, li))
            row.append(np.linalg.norm(out - evals.v_no_text))
        print(f"{lr:6.1f} " + "".join(f"{v:8.3f}" for v in row))


if __name__ == "__main__":
    main()
