#pragma once

#include "fusionkit/element.hpp"
#include "fusionkit/window.hpp"

#include <Eigen/SparseCore>

#include <string>
#include <vector>

namespace fusionkit {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Compression of a convolution operator to a window, in the plain ℓ²(I) picture
/// (conjugated by U: δ_η ↦ δ_η / d(η)). Row and column indices are window positions.
struct CompressedOperator {
    TruncationWindow window;
    SparseMatrix matrix;
    /// Set when the defining data is symmetric; the matrix then equals its transpose exactly.
    bool selfadjoint = false;

    /// Matrix action on a vector indexed by window position.
    Eigen::VectorXd apply(const Eigen::VectorXd& v) const;
};

/// l_ξ: δ_η ↦ (1/d(ξ)) Σ_α N_{ξ,η}^α δ_α. Products leaving the window are dropped.
CompressedOperator l_operator(const FusionRing& ring, const Label& xi, const TruncationWindow& window);

/// l_μ = Σ_ξ μ(ξ) l_ξ; self-adjoint iff μ is symmetric.
CompressedOperator l_measure_operator(const FusionRing& ring, const ProbMeasure& mu, const TruncationWindow& window);

/// GNS representation π_τ(x) = Σ_ξ k_ξ d(ξ) l_ξ of an integer element.
CompressedOperator gns_operator(const FusionRing& ring, const Element& x, const TruncationWindow& window);

/// ρ_ξ(f)(η) = Σ_α f(α) (δ_η * δ_ξ)(α), evaluated exactly on the finite support.
Function rho1_operator_apply(const FusionRing& ring, const Label& xi, const Function& f);
/// Σ_ω μ(ω) ρ_ω(f).
Function rho_measure_apply(const FusionRing& ring, const ProbMeasure& mu, const Function& f);
/// λ_ξ(f)(η) = Σ_α f(α) (δ_{conj ξ} * δ_η)(α), the weighted ℓ²(I,σ) picture of l_ξ.
Function lambda_apply(const FusionRing& ring, const Label& xi, const Function& f);

struct EigenEstimate {
    double value = 0.0;
    /// ‖Mv - λv‖ for the returned unit vector v.
    double residual = 0.0;
    int iterations = 0;
    bool dense = false;
};

inline constexpr std::size_t kDenseEigenLimit = 512;

/// Top of the spectrum of a self-adjoint compression. Dimensions up to kDenseEigenLimit use a
/// dense symmetric eigensolver; larger ones use power iteration on (I + M)/2 from the uniform
/// positive vector, stopping once the residual drops below tol.
/// Throws NotSelfAdjoint or NoConvergence (with the best estimate).
EigenEstimate top_eigenvalue(const CompressedOperator& op, double tol = 1e-10, int max_iter = 200000);

enum class Verdict { EvidenceAmenable, EvidenceNonamenable, Inconclusive };
std::string verdict_name(Verdict v);

struct AmenabilityOptions {
    std::size_t cap = 200000;
    double tol = 1e-10;
    int max_iter = 200000;
    double gap_threshold = 1e-3;
    double stall_threshold = 1e-6;
};

struct RadiusEstimate {
    int radius = 0;
    std::size_t window_size = 0;
    double lambda_max = 0.0;
    double residual = 0.0;
    bool dense = false;
};

struct AmenabilityReport {
    std::vector<RadiusEstimate> estimates;
    double gap = 1.0;
    Verdict verdict = Verdict::Inconclusive;
    /// Verdicts come from finitely many windows and one measure; they are heuristic evidence.
    std::string note;
};

/// Truncated Kesten test: λ_max(l_μ) on windows generated by supp(μ) for each radius.
/// Throws NonSymmetricMeasure, BudgetExceeded.
AmenabilityReport amenability_estimate(const FusionRing& ring, const ProbMeasure& mu, std::vector<int> radii,
                                       const AmenabilityOptions& options = {});

}  // namespace fusionkit
