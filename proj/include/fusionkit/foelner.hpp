#pragma once

#include "fusionkit/element.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fusionkit {

/// ∂_S(F) split into its part inside F and its part outside F, with σ-weights.
struct BoundaryResult {
    LabelSet inner;
    LabelSet outer;
    Quantity weight_inner;
    Quantity weight_outer;
    Quantity weight_F;

    LabelSet all() const;
    Quantity weight() const { return weight_inner + weight_outer; }
};

/// ∂_S(F) = {α ∈ F : supp(αξ) ⊄ F for some ξ ∈ S} ∪ {α ∉ F : supp(αξ) ∩ F ≠ ∅ for some ξ ∈ S}.
/// The outer part is found without scanning F^c: by Frobenius reciprocity its members lie in
/// ∪_{η∈F, ξ∈S} supp(η conj ξ), and only that finite set is probed. Throws EmptySet.
BoundaryResult boundary(const FusionRing& ring, const LabelSet& S, const LabelSet& F);

enum class Condition { FC1, FC2, FC3 };
std::string condition_name(Condition c);

struct CurvePoint {
    int step = 0;
    std::size_t set_size = 0;
    Quantity weight_F;
    Quantity weight_boundary;
    double ratio = 0.0;
};

struct FoelnerReport {
    Condition condition = Condition::FC3;
    LabelSet support;                    ///< S, or supp(μ) for FC1
    std::map<Label, double> measure;     ///< μ for FC1, empty otherwise
    LabelSet F;
    double epsilon = 0.0;
    Quantity lhs;
    Quantity rhs;
    /// Σ_F d² (equal to ‖χ_F‖_{1,σ}).
    Quantity weight_F;
    /// lhs < rhs, decided exactly when both sides are exact.
    bool satisfied = false;
    /// FC2: ‖ρ_{1,ξ}(χ_F) − χ_F‖_{1,σ} per ξ ∈ S.
    std::vector<std::pair<Label, Quantity>> per_generator;
    /// FC1: whether supp(χ_F * μ) = F ∪ ∂_{supp μ}(F).
    std::optional<bool> support_identity;
    std::vector<CurvePoint> curve;
    /// lhs over the unscaled right-hand weight (compare with ε, or 1+ε for FC1).
    double ratio = 0.0;
};

/// Σ_{∂_S(F)} d² < ε Σ_F d².
FoelnerReport fc3_check(const FusionRing& ring, const LabelSet& S, const LabelSet& F, double epsilon);
/// Σ_{supp(χ_F * μ)} d² < (1+ε) Σ_F d²; needs μ symmetric with e ∈ supp μ.
FoelnerReport fc1_check(const FusionRing& ring, const ProbMeasure& mu, const LabelSet& F, double epsilon);
/// ‖ρ_{1,ξ}(χ_F) − χ_F‖_{1,σ} < ε ‖χ_F‖_{1,σ} for every ξ ∈ S, each side via the closed expansion
/// Σ_{α∉F} Σ_{η∈F} d(η)d(α)/d(ξ) (N_{η,conj ξ}^α + N_{η,ξ}^α).
FoelnerReport fc2_check(const FusionRing& ring, const LabelSet& S, const LabelSet& F, double epsilon);

/// The closed expansion above for a single ξ.
Quantity fc2_value(const FusionRing& ring, const Label& xi, const LabelSet& F);
/// The same quantity by applying ρ_{1,ξ} to χ_F and taking the ℓ¹(I,σ) norm of the difference.
double fc2_value_direct(const FusionRing& ring, const Label& xi, const LabelSet& F);

/// supp(χ_F * μ).
LabelSet convolution_support(const FusionRing& ring, const LabelSet& F, const LabelSet& support);

/// p_μ(ξ,η) = (δ_ξ * μ)(η).
double transition_kernel(const FusionRing& ring, const ProbMeasure& mu, const Label& xi, const Label& eta);
/// Same value in exact arithmetic (measure weights taken as the exact rationals they store).
Quantity transition_kernel_exact(const FusionRing& ring, const ProbMeasure& mu, const Label& xi, const Label& eta);

/// (½ Σ_{ξ,η} σ(ξ) p_μ(ξ,η) |f(ξ) − f(η)|^r)^{1/r}, summed over the finite set of pairs that can
/// contribute. Throws InvalidParam for r < 1.
double dirichlet_norm(const FusionRing& ring, const ProbMeasure& mu, const Function& f, int r);
/// (Σ σ(ξ)|f(ξ)|^r)^{1/r}.
double weighted_norm(const Function& f, int r);
/// ⟨f, g⟩_{2,σ}.
double weighted_inner(const Function& f, const Function& g);
/// Dirichlet norm over weighted ℓ^r norm. Throws ZeroFunction.
double nw_ratio(const FusionRing& ring, const ProbMeasure& mu, const Function& f, int r);

enum class SearchStrategy { Balls, Greedy };

struct SearchResult {
    FoelnerReport report;  ///< the first satisfying F, or the best F seen
    bool found = false;
    bool budget_exhausted = false;
};

/// Looks for F with the FC3 ratio below ε. Balls tries window(S, r) for r = 1, 2, ...; greedy
/// grows {e} one outer-boundary label at a time, choosing the smallest resulting ratio (ties by
/// label order). Stops at the first success or when F would exceed `budget` labels.
SearchResult foelner_search(const FusionRing& ring, const LabelSet& S, double epsilon, SearchStrategy strategy,
                            std::size_t budget);

}  // namespace fusionkit
