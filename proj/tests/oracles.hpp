#pragma once

// Reference computations that share no code with the library: character polynomials for SU(2),
// the dimension recursion, path and lattice spectra, brute-force boundaries and free-group return
// counts.

#include "fusionkit/fusion_ring.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <set>
#include <vector>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

/// χ_k as a Laurent polynomial in z: exponent → coefficient, χ_k = z^k + z^{k-2} + ... + z^{-k}.
inline std::map<int, long> su2_character(int k) {
    std::map<int, long> chi;
    for (int e = -k; e <= k; e += 2) {
        chi[e] = 1;
    }
    return chi;
}

/// Decomposes χ_m χ_n into irreducible characters by repeatedly peeling the top degree.
inline std::map<int, long> su2_product(int m, int n) {
    std::map<int, long> poly;
    for (const auto& [a, x] : su2_character(m)) {
        for (const auto& [b, y] : su2_character(n)) {
            poly[a + b] += x * y;
        }
    }
    std::map<int, long> result;
    for (;;) {
        while (!poly.empty() && poly.rbegin()->second == 0) {
            poly.erase(std::prev(poly.end()));
        }
        if (poly.empty()) {
            break;
        }
        const auto [top, c] = *poly.rbegin();
        result[top] += c;
        for (const auto& [e, v] : su2_character(top)) {
            poly[e] -= c * v;
        }
    }
    return result;
}

inline std::vector<BigInt> deformed_dims(long n, int count) {
    std::vector<BigInt> d{1, n};
    while (static_cast<int>(d.size()) < count) {
        d.push_back(n * d[d.size() - 1] - d[d.size() - 2]);
    }
    d.resize(count);
    return d;
}

inline double path_top(int m, double scale) { return scale * std::cos(std::numbers::pi / (m + 1)); }

/// Top eigenvalue of the adjacency of the ℓ¹ ball of radius r in ℤ^d, divided by 2d.
inline double lattice_top(int d, int r) {
    std::vector<std::vector<int>> points;
    std::vector<int> p(d, -r);
    for (;;) {
        int norm = 0;
        for (int x : p) {
            norm += std::abs(x);
        }
        if (norm <= r) {
            points.push_back(p);
        }
        int i = 0;
        while (i < d && p[i] == r) {
            p[i++] = -r;
        }
        if (i == d) {
            break;
        }
        ++p[i];
    }
    const auto n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            int dist = 0;
            for (int k = 0; k < d; ++k) {
                dist += std::abs(points[i][k] - points[j][k]);
            }
            if (dist == 1) {
                a(i, j) = 1.0 / (2.0 * d);
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

struct Boundary {
    fusionkit::LabelSet inner;
    fusionkit::LabelSet outer;
};

/// ∂_S(F) by scanning every label of `universe`, which must contain every candidate.
inline Boundary brute_boundary(const fusionkit::FusionRing& ring, const std::vector<fusionkit::Label>& universe,
                               const fusionkit::LabelSet& S, const fusionkit::LabelSet& F) {
    Boundary b;
    for (const auto& alpha : universe) {
        const bool in_F = F.contains(alpha);
        for (const auto& xi : S) {
            bool leaks = false;
            for (const auto& [gamma, n] : ring.product(alpha, xi)) {
                if (n != 0 && F.contains(gamma) != in_F) {
                    leaks = true;
                }
            }
            if (leaks) {
                (in_F ? b.inner : b.outer).insert(alpha);
                break;
            }
        }
    }
    return b;
}

/// Number of closed walks of each even length 2k ≤ 2n from e in the Cayley graph of the free group
/// on `rank` generators, by convolution over reduced words. Words longer than the remaining number
/// of steps cannot return to e and are dropped.
inline std::vector<BigInt> free_group_returns(int rank, int n) {
    using Word = std::vector<int>;  // letters ±1..±rank
    std::map<Word, BigInt> walk{{Word{}, BigInt(1)}};
    std::vector<BigInt> returns{BigInt(1)};
    const int steps = 2 * n;
    for (int t = 1; t <= steps; ++t) {
        std::map<Word, BigInt> next;
        for (const auto& [w, c] : walk) {
            for (int g = -rank; g <= rank; ++g) {
                if (g == 0) {
                    continue;
                }
                Word v = w;
                if (!v.empty() && v.back() == -g) {
                    v.pop_back();
                } else {
                    v.push_back(g);
                }
                if (static_cast<int>(v.size()) <= steps - t) {
                    next[v] += c;
                }
            }
        }
        walk = std::move(next);
        if (t % 2 == 0) {
            const auto it = walk.find(Word{});
            returns.push_back(it == walk.end() ? BigInt(0) : it->second);
        }
    }
    return returns;
}

}  // namespace oracle
