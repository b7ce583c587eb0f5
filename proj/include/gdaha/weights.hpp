#pragma once

#include "gdaha/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace gdaha {

/// gl_N weight in coordinates (length N). sl_N weights are these modulo the
/// all-ones vector; helpers below implement the sl pairing directly.
using Weight = std::vector<int>;

inline int total(const Weight& w) {
    int t = 0;
    for (int x : w) t += x;
    return t;
}

inline bool is_dominant(const Weight& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] < w[i]) return false;
    return true;
}

inline bool is_partition(const Weight& w) {
    return is_dominant(w) && (w.empty() || w.back() >= 0);
}

inline bool sl_equal(const Weight& a, const Weight& b) {
    if (a.size() != b.size() || a.empty()) return a == b;
    const int delta = a[0] - b[0];
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] - b[i] != delta) return false;
    return true;
}

inline Weight eps(int j, int N) {
    Weight w(N, 0);
    w[j - 1] = 1;
    return w;
}

/// Sum of the positive roots: (N-1, N-3, ..., 1-N).
inline Weight two_rho(int N) {
    Weight w(N);
    for (int i = 0; i < N; ++i) w[i] = N - 1 - 2 * i;
    return w;
}

inline Weight add(Weight a, const Weight& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

/// Invariant pairing on sl weight classes, normalized so that
/// (eps_1, eps_1 + 2rho) = N - 1/N. Constant shifts of either argument
/// do not change the value.
inline Rational sl_pairing(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sl_pairing: length mismatch");
    const int N = static_cast<int>(a.size());
    Rational dot(0);
    for (int i = 0; i < N; ++i) dot += Rational(a[i]) * b[i];
    return dot - Rational(total(a)) * total(b) / N;
}

/// Eigenvalue of the quadratic gl Casimir sum E_ab E_ba on V(mu):
/// sum_i mu_i (mu_i + N + 1 - 2i).
inline Rational gl_casimir(const Weight& mu) {
    const int N = static_cast<int>(mu.size());
    Rational c(0);
    for (int i = 1; i <= N; ++i) c += Rational(mu[i - 1]) * (mu[i - 1] + N + 1 - 2 * i);
    return c;
}

/// (mu, mu + 2rho) in the sl pairing; equals gl_casimir(mu) - |mu|^2 / N.
inline Rational sl_casimir(const Weight& mu) {
    return sl_pairing(mu, add(mu, two_rho(static_cast<int>(mu.size()))));
}

/// Dominant weights mu + eps_j, in lexicographically decreasing order.
inline std::vector<Weight> pieri(int N, const Weight& mu) {
    if (static_cast<int>(mu.size()) != N || !is_dominant(mu))
        throw std::invalid_argument("pieri: weight must be dominant of length N");
    std::vector<Weight> out;
    for (int j = 1; j <= N; ++j) {
        if (j > 1 && mu[j - 2] == mu[j - 1]) continue;  // would break dominance
        out.push_back(add(mu, eps(j, N)));
    }
    // Adding a box at an earlier coordinate gives the lexicographically larger
    // weight, so the ascending-j scan already yields decreasing order.
    return out;
}

/// Dimension of the irreducible with highest weight mu (Weyl formula).
inline Integer weyl_dim(const Weight& mu) {
    const int N = static_cast<int>(mu.size());
    Rational d(1);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            d *= Rational(mu[i - 1] - mu[j - 1] + j - i, j - i);
    if (!is_integer(d)) throw std::logic_error("weyl_dim: non-integer product");
    return numerator(d);
}

/// All partitions of `total` into at most `parts` parts, zero-padded to
/// length `parts`, in lexicographically decreasing order.
inline std::vector<Weight> partitions_into(int total, int parts) {
    if (total < 0 || parts < 1) throw std::invalid_argument("partitions_into: bad arguments");
    std::vector<Weight> out;
    Weight current(parts, 0);
    const auto place = [&](auto&& self, int slot, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (slot == parts) return;
        for (int part = std::min(cap, remaining); part >= 1; --part) {
            if (static_cast<long long>(part) * (parts - slot) < remaining) break;
            current[slot] = part;
            self(self, slot + 1, remaining - part, part);
            current[slot] = 0;
        }
    };
    place(place, 0, total, total);
    return out;
}

}  // namespace gdaha
