"""Independent reference values for the unit tests.

Each value is computed from first principles with NumPy (direct inverses,
closed forms, binomial moments) rather than through the library, then
frozen into tests/unit/*.cpp. Rerun to audit the constants:

    python3 tests/oracles/oracles.py
"""
import numpy as np

np.set_printoptions(precision=17)


def ring_laplacian(n):
    w = np.zeros((n, n))
    for k in range(n):
        w[k, (k + 1) % n] = w[(k + 1) % n, k] = 1.0
    return np.diag(w.sum(1)) - w


def show(name, value):
    print(f"{name} = {np.array2string(np.asarray(value), separator=', ', precision=17)}")


# 2-vertex diffusion kernel, sigma2 = 2: r(lambda) = e^lambda, spectrum {0, 2}.
e = np.exp(-2.0)
show("diffusion_2v", 0.5 * np.array([[1 + e, 1 - e], [1 - e, 1 + e]]))

# Adjacency kernel for W = 0.5 * antidiag, by direct 2x2 inversion.
a = np.eye(2) - 0.5 * np.array([[0, 1], [1, 0]])
show("adjacency_half", np.linalg.inv(a.T @ a))

# r(lambda) = 1 + lambda on the 8-ring: K = (I + L)^{-1}; first row.
show("ring8_regularized_row0", np.linalg.inv(np.eye(8) + ring_laplacian(8))[0])

# Ring Laplacian spectrum, N = 100 (closed form, sorted).
lam = np.sort(2 * (1 - np.cos(2 * np.pi * np.arange(100) / 100)))
show("ring100_eig_min_max_sum", [lam[0], lam[-1], lam.sum()])

# G(100, 0.25) edge count moments.
pairs = 100 * 99 / 2
show("er_mean_sd", [0.25 * pairs, np.sqrt(pairs * 0.25 * 0.75)])
# 10000 Bernoulli(1/2) draws: 4 sd window.
show("coin_sd_10000", np.sqrt(10000 * 0.25))

# Uniform[0,1) moments.
show("uniform_mean_var", [0.5, 1.0 / 12.0])

# Chain GMRF used by the ordering and Markov checks: path Laplacian + 0.1 I.
n = 40
p = ring_laplacian(n)
p[0, n - 1] = p[n - 1, 0] = 0.0
p[0, 0] = p[n - 1, n - 1] = 1.0
p += 0.1 * np.eye(n)
c = np.linalg.inv(p)
show("gmrf_c00_c01_trace", [c[0, 0], c[0, 1], np.trace(c)])

# 2-vertex smoother -> filter: diffusion sigma2 = 1, mu = 0.1, N = 2.
# Response g(lambda) = r^dagger / (r^dagger + mu N) at lambda = 0, 2;
# degree-1 interpolation c0 + c1 lambda.
rd = np.exp(-0.5 * np.array([0.0, 2.0]))
g = rd / (rd + 0.2)
show("two_vertex_filter_taps", [g[0], (g[1] - g[0]) / 2.0])

# Constant r0 = 2, mu = 0.05, N = 8: c0 = 1 / (1 + mu N r0).
show("constant_filter_c0", 1.0 / (1.0 + 0.05 * 8 * 2.0))

# Soft threshold a = [3, 4], zeta = 1.
aa = np.array([3.0, 4.0])
show("soft_threshold", aa * max(0, np.linalg.norm(aa) - 1) / np.linalg.norm(aa))

# KRR with K = I on N = 5, samples {1, 3}, y = (2, -1), mu = 0.25: f = Psi^T y / (1 + mu S).
show("krr_identity", np.array([0, 2, 0, -1, 0]) / (1 + 0.25 * 2))

# Path-4 graph, Laplacian regularization sigma2 = 0.5, samples {0, 2}, y = (1, 3),
# mu = 0.1: K = (I + 0.5 L)^{-1}, alpha = (Kbar + mu S I)^{-1} y, f = K Psi^T alpha.
w = np.zeros((4, 4))
for i in range(3):
    w[i, i + 1] = w[i + 1, i] = 1.0
lp = np.diag(w.sum(1)) - w
k = np.linalg.inv(np.eye(4) + 0.5 * lp)
idx = [0, 2]
kb = k[np.ix_(idx, idx)]
alpha = np.linalg.solve(kb + 0.1 * 2 * np.eye(2), np.array([1.0, 3.0]))
show("krr_path4", k[:, idx] @ alpha)

# Group-lasso all-zero threshold for M = 1, K = I on N = 3, samples {0,1,2},
# y = (1, 2, 2): mu* = (2/S) ||Kbar^{1/2} y|| = (2/3) * 3.
show("rs_zero_threshold", 2.0 / 3.0 * np.linalg.norm([1.0, 2.0, 2.0]))

# Noise variance at 0 dB with ||f||^2 = N.
show("noise_var_0db", 1.0)
