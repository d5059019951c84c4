#include "fusionkit/spectral.hpp"

#include "fusionkit/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <tuple>

namespace fusionkit {

namespace {

struct Term {
    int row;
    int col;
    double value;
};

/// Sums the terms of each entry in ascending value order. Two entries fed the same multiset
/// of term values therefore come out bit-identical, which keeps symmetric data symmetric.
SparseMatrix assemble(std::size_t n, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return std::tie(a.row, a.col, a.value) < std::tie(b.row, b.col, b.value);
    });
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        double sum = 0.0;
        std::size_t j = i;
        for (; j < terms.size() && terms[j].row == terms[i].row && terms[j].col == terms[i].col; ++j) {
            sum += terms[j].value;
        }
        if (sum != 0.0) {
            triplets.emplace_back(terms[i].row, terms[i].col, sum);
        }
        i = j;
    }
    SparseMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    m.setFromTriplets(triplets.begin(), triplets.end());
    m.makeCompressed();
    return m;
}

void require_window_ring(const FusionRing& ring, const TruncationWindow& window) {
    if (!window.ring().same_ring(ring)) {
        throw FusionError(ErrorKind::RingMismatch, "window belongs to a different ring");
    }
}

/// Appends the terms of scale * Σ_α N_{ξ,η}^α δ_α for every window column η.
void push_left_terms(const FusionRing& ring, const Label& xi, const TruncationWindow& window,
                     const std::function<double(const Integer&)>& weight, std::vector<Term>& terms) {
    const auto& labels = window.labels();
    for (std::size_t col = 0; col < labels.size(); ++col) {
        for (const auto& [alpha, n] : ring.product(xi, labels[col])) {
            if (auto row = window.index_of(alpha)) {
                terms.push_back({static_cast<int>(*row), static_cast<int>(col), weight(n)});
            }
        }
    }
}

Eigen::VectorXd multiply_rows(const SparseMatrix& m, const Eigen::VectorXd& v) {
    Eigen::VectorXd out(m.rows());
    parallel_for(static_cast<std::size_t>(m.rows()), [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            double s = 0.0;
            for (SparseMatrix::InnerIterator it(m, static_cast<Eigen::Index>(r)); it; ++it) {
                s += it.value() * v[it.col()];
            }
            out[static_cast<Eigen::Index>(r)] = s;
        }
    });
    return out;
}

}  // namespace

Eigen::VectorXd CompressedOperator::apply(const Eigen::VectorXd& v) const { return multiply_rows(matrix, v); }

CompressedOperator l_operator(const FusionRing& ring, const Label& xi, const TruncationWindow& window) {
    require_window_ring(ring, window);
    ring.require(xi);
    const double d = ring.dim_value(xi);
    std::vector<Term> terms;
    push_left_terms(ring, xi, window, [d](const Integer& n) { return to_double(n) / d; }, terms);
    const bool selfadjoint = ring.conjugate(xi) == xi;
    return CompressedOperator{window, assemble(window.size(), std::move(terms)), selfadjoint};
}

CompressedOperator l_measure_operator(const FusionRing& ring, const ProbMeasure& mu, const TruncationWindow& window) {
    require_same_ring(ring, mu.ring());
    require_window_ring(ring, window);
    std::vector<Term> terms;
    for (const auto& [xi, w] : mu.weights()) {
        const double d = ring.dim_value(xi);
        push_left_terms(ring, xi, window, [w, d](const Integer& n) { return w * (to_double(n) / d); }, terms);
    }
    return CompressedOperator{window, assemble(window.size(), std::move(terms)), mu.symmetric()};
}

CompressedOperator gns_operator(const FusionRing& ring, const Element& x, const TruncationWindow& window) {
    require_same_ring(ring, x.ring());
    require_window_ring(ring, window);
    std::vector<Term> terms;
    for (const auto& [xi, k] : x.coeffs()) {
        // d(ξ) l_ξ has entries N_{ξ,η}^α exactly
        push_left_terms(ring, xi, window, [&k](const Integer& n) { return to_double(Integer(k * n)); }, terms);
    }
    const bool selfadjoint = conjugate_element(x) == x;
    return CompressedOperator{window, assemble(window.size(), std::move(terms)), selfadjoint};
}

Function rho1_operator_apply(const FusionRing& ring, const Label& xi, const Function& f) {
    require_same_ring(ring, f.ring());
    ring.require(xi);
    const Label cxi = ring.conjugate(xi);
    const double dxi = ring.dim_value(xi);
    // η contributes only if N_{η,ξ}^α > 0 for some α ∈ supp f, i.e. η ∈ supp(α conj ξ)
    LabelSet candidates;
    for (const auto& [alpha, v] : f.coeffs()) {
        for (const auto& [eta, n] : ring.product(alpha, cxi)) {
            candidates.insert(eta);
        }
    }
    std::map<Label, double> out;
    for (const auto& eta : candidates) {
        const double deta = ring.dim_value(eta);
        double s = 0.0;
        for (const auto& [alpha, n] : ring.product(eta, xi)) {
            const double fa = f.at(alpha);
            if (fa != 0.0) {
                s += fa * ring.dim_value(alpha) / deta / dxi * to_double(n);
            }
        }
        out.emplace(eta, s);
    }
    return Function(ring, out);
}

Function rho_measure_apply(const FusionRing& ring, const ProbMeasure& mu, const Function& f) {
    require_same_ring(ring, mu.ring());
    std::map<Label, double> acc;
    for (const auto& [omega, w] : mu.weights()) {
        const Function image = rho1_operator_apply(ring, omega, f);
        for (const auto& [eta, v] : image.coeffs()) {
            acc[eta] += w * v;
        }
    }
    return Function(ring, acc);
}

Function lambda_apply(const FusionRing& ring, const Label& xi, const Function& f) {
    require_same_ring(ring, f.ring());
    ring.require(xi);
    const Label cxi = ring.conjugate(xi);
    const double dxi = ring.dim_value(xi);
    // N_{conj ξ,η}^α = N_{ξ,α}^η, so η ranges over supp(ξ α)
    LabelSet candidates;
    for (const auto& [alpha, v] : f.coeffs()) {
        for (const auto& [eta, n] : ring.product(xi, alpha)) {
            candidates.insert(eta);
        }
    }
    std::map<Label, double> out;
    for (const auto& eta : candidates) {
        const double deta = ring.dim_value(eta);
        double s = 0.0;
        for (const auto& [alpha, n] : ring.product(cxi, eta)) {
            const double fa = f.at(alpha);
            if (fa != 0.0) {
                s += fa * ring.dim_value(alpha) / dxi / deta * to_double(n);
            }
        }
        out.emplace(eta, s);
    }
    return Function(ring, out);
}

EigenEstimate top_eigenvalue(const CompressedOperator& op, double tol, int max_iter) {
    if (!op.selfadjoint) {
        throw FusionError(ErrorKind::NotSelfAdjoint, "top_eigenvalue needs a self-adjoint compression");
    }
    const auto n = op.matrix.rows();
    EigenEstimate est;
    if (static_cast<std::size_t>(n) <= kDenseEigenLimit) {
        const Eigen::MatrixXd dense(op.matrix);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
        if (solver.info() != Eigen::Success) {
            throw NoConvergence(0, 0.0, INFINITY);
        }
        est.value = solver.eigenvalues()(n - 1);
        const Eigen::VectorXd v = solver.eigenvectors().col(n - 1);
        est.residual = (dense * v - est.value * v).norm();
        est.dense = true;
        return est;
    }

    // Power iteration on B = (I + M)/2, whose spectrum lies in [0, 1].
    Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    double theta = 0.0;
    double residual = INFINITY;
    for (int iter = 1; iter <= max_iter; ++iter) {
        const Eigen::VectorXd w = 0.5 * (v + op.apply(v));
        theta = v.dot(w);
        // residual of M at λ = 2θ - 1 is twice that of B at θ
        residual = 2.0 * (w - theta * v).norm();
        const double norm = w.norm();
        if (residual <= tol || norm == 0.0) {
            est.value = 2.0 * theta - 1.0;
            est.residual = residual;
            est.iterations = iter;
            return est;
        }
        v = w / norm;
    }
    throw NoConvergence(max_iter, 2.0 * theta - 1.0, residual);
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::EvidenceAmenable: return "EVIDENCE_AMENABLE";
        case Verdict::EvidenceNonamenable: return "EVIDENCE_NONAMENABLE";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

AmenabilityReport amenability_estimate(const FusionRing& ring, const ProbMeasure& mu, std::vector<int> radii,
                                       const AmenabilityOptions& options) {
    require_same_ring(ring, mu.ring());
    if (!mu.symmetric()) {
        throw FusionError(ErrorKind::NonSymmetricMeasure, "the Kesten test needs a symmetric measure");
    }
    if (radii.empty()) {
        throw FusionError(ErrorKind::InvalidParam, "no radii given");
    }
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

    AmenabilityReport report;
    const LabelSet support = mu.support();
    for (const int r : radii) {
        const TruncationWindow window = build_window(ring, support, r, options.cap);
        const CompressedOperator op = l_measure_operator(ring, mu, window);
        const EigenEstimate est = top_eigenvalue(op, options.tol, options.max_iter);
        report.estimates.push_back({r, window.size(), est.value, est.residual, est.dense});
    }

    const auto& seq = report.estimates;
    report.gap = 1.0 - seq.back().lambda_max;
    bool stalled = seq.size() >= 3;
    for (std::size_t i = seq.size() >= 3 ? seq.size() - 2 : 0; stalled && i < seq.size(); ++i) {
        stalled = std::abs(seq[i].lambda_max - seq[i - 1].lambda_max) < options.stall_threshold;
    }
    if (report.gap < options.gap_threshold) {
        report.verdict = Verdict::EvidenceAmenable;
    } else if (stalled && report.gap > 10.0 * options.gap_threshold) {
        report.verdict = Verdict::EvidenceNonamenable;
    } else {
        report.verdict = Verdict::Inconclusive;
    }
    report.note =
        "heuristic: finite windows give lower bounds on sup spec(l_mu) for one measure; this is evidence, not a "
        "decision";
    return report;
}

}  // namespace fusionkit
