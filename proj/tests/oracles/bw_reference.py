"""Independent generator for the ground-state perturbation coefficients.

Uses H = p^2/2 + x^2/2 + lam*x^4 with psi = exp(-x^2/2) * sum_n lam^n phi_n(x),
phi_n = sum_k b[n][k] x^(2k), b[n][0] = 0 for n >= 1.  Order n, power x^(2k):

    2k b[n][k] = (k+1)(2k+1) b[n][k+1] - b[n-1][k-2] + sum_{m=1}^{n-1} E_m b[n-m][k]

with E_n = -b[n][1].  This normalization differs from the library's workspace,
so the two share no intermediate values.  Writes the bw-series v1 cache format.
"""
import sys

import gmpy2
from gmpy2 import mpq


def generate(order):
    b = [[mpq(1)]]
    energies = [mpq(1, 2)]
    for n in range(1, order + 1):
        row = [mpq(0)] * (2 * n + 2)
        b.append(row)

        def prev(i, k):
            return b[i][k] if 0 <= k <= 2 * i else 0

        for k in range(2 * n, 0, -1):
            acc = (k + 1) * (2 * k + 1) * row[k + 1] - prev(n - 1, k - 2)
            for m in range(1, n):
                if k <= 2 * (n - m):
                    acc += energies[m] * b[n - m][k]
            row[k] = acc / (2 * k)
        energies.append(-row[1])
    return energies


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for byte in data:
        h ^= byte
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def render(energies):
    order = len(energies) - 1
    lines = [f"{l} {int(e.numerator)}/{int(e.denominator)}\n" for l, e in enumerate(energies)]
    digest = fnv1a64("".join(lines).encode())
    return f"bw-series v1 order={order}\n" + "".join(lines) + f"checksum={digest:016x}\n"


if __name__ == "__main__":
    order = int(sys.argv[1])
    sys.stdout.write(render(generate(order)))
