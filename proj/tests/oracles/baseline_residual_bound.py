#!/usr/bin/env python3
"""Independent oracle for the baseline negation fit.

Reads a lexicon file (skipping the "not" entry), rebuilds the constraint
system from scratch with numpy and solves the normal equations
(A^T A) x = A^T b directly. The printed residual is the least-squares
minimum. Normal equations square the condition number, so the printed
lower_bound is discounted by 1e-12 relative to cover the oracle's own
rounding; the C++ fitter's residual_total must not undercut it.

Rows per sample a, with J = diag(1.., -mu..) and K = diag(1.., -nu..):
  M_not v_a       + M_a v_not = J v_a
  M_not (J v_a)   + M_a v_not = K J v_a
  M_not           = 0            (twice: single and double negation)

Usage: baseline_residual_bound.py <lexicon.tsl> [mu] [nu]
"""
import sys

import numpy as np


def read_lexicon(path):
    lines = [l.split() for l in open(path) if l.strip() and not l.startswith("#")]
    assert lines[0] == ["TRIPSEM", "1"]
    dd, ds, di = map(int, lines[1][1:])
    n = dd + ds + di
    words = {}
    i = 2
    while i < len(lines):
        _, token, alpha = lines[i]
        v = np.array([float(x) for x in lines[i + 1][1:]])
        m = np.array([[float(x) for x in lines[i + 2 + r][1:]] for r in range(n)])
        words[token] = (v, m, float(alpha))
        i += 2 + n
    return (dd, ds, di), words


def main():
    path = sys.argv[1]
    mu = float(sys.argv[2]) if len(sys.argv) > 2 else 0.5
    nu = float(sys.argv[3]) if len(sys.argv) > 3 else mu
    (dd, ds, di), words = read_lexicon(path)
    n = dd + ds + di
    keep = dd + ds
    jmu = np.diag([1.0] * keep + [-mu] * di)
    jnu = np.diag([1.0] * keep + [-nu] * di)

    rows, rhs = [], []
    samples = [w for t, w in words.items() if t != "not"]
    for v, m, _ in samples:
        for inp, tgt in ((v, jmu @ v), (jmu @ v, jnu @ jmu @ v)):
            for i in range(n):
                r = np.zeros(n * n + n)
                r[i * n:(i + 1) * n] = inp
                r[n * n:] = m[i]
                rows.append(r)
                rhs.append(tgt[i])
    for _ in samples:
        for _ in range(2):
            for k in range(n * n):
                r = np.zeros(n * n + n)
                r[k] = 1.0
                rows.append(r)
                rhs.append(0.0)
    a = np.array(rows)
    b = np.array(rhs)
    x = np.linalg.solve(a.T @ a, a.T @ b)
    res = a @ x - b
    total = np.linalg.norm(res)
    print("samples", len(samples))
    print("residual_total %.17g" % total)
    print("lower_bound %.17g" % (total * (1.0 - 1e-12)))


if __name__ == "__main__":
    main()
