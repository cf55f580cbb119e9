#!/usr/bin/env python3
"""Independent re-derivation of the threshold-ledger arithmetic.

Exact fractions end to end. The printed values are frozen into the C++ unit
and acceptance tests; if the library ever disagrees with this script, the
library is wrong until proven otherwise.
"""

from fractions import Fraction as Fr
import math


def comb2(x: int) -> int:
    return x * (x - 1) // 2


def big_m(edges: int, k: int) -> int:
    return comb2(edges + 2 * k)


def nearc_overhead(k: int, m: int, s: int) -> int:
    return (8 * k + 1) * m * s + comb2(2 * k)


def upper_tail(k: int, m: int, eps: Fr):
    n2 = Fr(2 * ((8 * k + 1) * m + comb2(2 * k))) / eps
    a0 = Fr(2 * m) / eps
    return n2, a0


def lbound(k: int, edges: int, eps: Fr, alpha: Fr):
    beta = eps / (8 * alpha)
    c = (comb2(k) + alpha) / beta
    q0 = 2 * k * (2 * edges + 2 * c + 4 * k) * (1 + beta) + 4 * k * k + 2 * alpha
    n0 = math.ceil(2 * q0 / eps)
    q = 8 * c * (n0 + 1) * (1 + beta) + 4 * k * k * (n0 + 2) ** 2 + 2 * comb2(k)
    n1 = math.ceil(2 * q / eps)
    return beta, c, q0, n0, q, n1


def threshold_ledger(k: int, edges: int, eps: Fr):
    m = big_m(edges, k)
    eps_prime = eps / 2
    n2, a0 = upper_tail(k, m, eps_prime)
    eps1 = eps / 2
    while True:
        alpha_d = eps1 / 2
        alpha_u = m + eps1 / 2
        beta_d = eps1 / (8 * alpha_u)
        beta_u = eps1 / (8 * alpha_d)
        c_d = (comb2(k) + alpha_d) / beta_u
        c_u = (comb2(k) + alpha_u) / beta_d
        q0_d = 2 * k * (2 * edges + 2 * c_d + 4 * k) * (1 + beta_d) + 4 * k * k + 2 * alpha_d
        q0_u = 2 * k * (2 * edges + 2 * c_u + 4 * k) * (1 + beta_u) + 4 * k * k + 2 * alpha_u
        n0_d = math.ceil(2 * q0_d / eps1)
        n0_u = math.ceil(2 * q0_u / eps1)
        if n0_d >= n2:
            break
        eps1 = eps1 / 2
    q_u = 8 * c_u * (n0_u + 1) * (1 + beta_u) + 4 * k * k * (n0_u + 2) ** 2 + 2 * comb2(k)
    n1_u = math.ceil(2 * q_u / eps1)
    n_threshold = math.ceil(a0 * n1_u)
    return {
        "eps": eps, "eps1": eps1, "M": m, "n2": n2, "a0": a0,
        "alpha_d": alpha_d, "alpha_u": alpha_u, "beta_d": beta_d, "beta_u": beta_u,
        "c_d": c_d, "c_u": c_u, "Q0_d": q0_d, "Q0_u": q0_u,
        "n0_d": n0_d, "n0_u": n0_u, "Q_u": q_u, "n1_u": n1_u, "N": n_threshold,
    }


def main() -> None:
    assert big_m(0, 0) == 0
    assert big_m(1, 1) == 3
    assert big_m(2, 2) == 15

    assert nearc_overhead(1, 3, 1) == 28
    assert nearc_overhead(0, 0, 5) == 0

    n2, a0 = upper_tail(1, 3, Fr(1))
    assert (n2, a0) == (56, 6), (n2, a0)
    print(f"upper_tail k=1 M=3 eps=1     -> n2={n2} a0={a0}")

    beta, c, q0, n0, q, n1 = lbound(1, 1, Fr(1), Fr(1))
    print(f"lbound k=1 E=1 eps=1 alpha=1  -> beta={beta} c={c} Q0={q0} n0={n0} Q={q} n1={n1}")
    assert beta == Fr(1, 8) and c == 8 and q0 == Fr(111, 2) and n0 == 111

    led = threshold_ledger(1, 1, Fr(1))
    print("threshold_N k=1 E=1 eps=1:")
    for key, val in led.items():
        print(f"  {key} = {val}")

    print("growth over eps grid (edge tile k=1 E=1):")
    points = []
    for j in range(6):
        eps = Fr(1, 2 ** j)
        led = threshold_ledger(1, 1, eps)
        points.append((math.log(2 ** j) if j else 0.0, math.log(led["N"])))
        print(f"  eps=1/{2 ** j:<3} eps1={led['eps1']}  N={led['N']}")
    xs = [math.log(2 ** j) for j in range(6)]
    ys = [p[1] for p in points]
    xbar, ybar = sum(xs) / len(xs), sum(ys) / len(ys)
    slope = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys)) / sum(
        (x - xbar) ** 2 for x in xs)
    print(f"  log-log slope = {slope:.4f}")
    assert abs(slope - 6.0) <= 1.0, slope


if __name__ == "__main__":
    main()
