#!/usr/bin/env python3
"""Round-trip experiment: eigendecompose random nonsingular h-cyclic
matrices, keep one base chain per root-of-unity orbit, rebuild the matrix
from those chains alone, and report the reconstruction error."""

import argparse
import cmath
import sys
from pathlib import Path

try:
    import hcyclic as hc
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
    import hcyclic as hc

import numpy as np


def random_instance(rng, h, m):
    def disk(shape):
        r = np.sqrt(rng.uniform(0, 1, shape))
        return r * np.exp(1j * rng.uniform(0, 2 * np.pi, shape))

    while True:
        blocks = [disk((m, m)) for _ in range(h)]
        a = hc.assemble_blocks(blocks)
        if np.linalg.matrix_rank(a) == a.shape[0]:
            classes = tuple(
                tuple(range(i * m + 1, (i + 1) * m + 1)) for i in range(h)
            )
            return a, hc.CyclicPartition(h, classes)


def orbit_chains(a, h):
    w, v = np.linalg.eig(a)
    vinv = np.linalg.inv(v)
    rot = hc.omega(h)
    used = [False] * len(w)
    order = sorted(range(len(w)), key=lambda i: (-abs(w[i]), cmath.phase(w[i])))
    rights, lefts, spectrum = [], [], []
    for idx in order:
        if used[idx]:
            continue
        lam = w[idx]
        used[idx] = True
        for k in range(1, h):
            free = [j for j in range(len(w)) if not used[j]]
            pick = min(free, key=lambda j: abs(w[j] - lam * rot**k))
            used[pick] = True
        rights.append(hc.JordanChain(complex(lam), "right", (v[:, idx],)))
        lefts.append(hc.JordanChain(complex(lam), "left", (vinv[idx],)))
        spectrum.append((complex(lam), 1))
    return rights, lefts, spectrum


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--h", type=int, default=3)
    parser.add_argument("--block-size", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    worst = 0.0
    for trial in range(args.trials):
        a, part = random_instance(rng, args.h, args.block_size)
        rights, lefts, spectrum = orbit_chains(a, args.h)
        rebuilt = hc.reconstruct_from_chains(rights, lefts, spectrum, part)
        err = float(np.max(np.abs(rebuilt - a)))
        worst = max(worst, err)
        print(f"trial {trial:2d}: n={a.shape[0]}, max entry error {err:.3e}")
    print(f"worst over {args.trials} trials: {worst:.3e}")


if __name__ == "__main__":
    main()
