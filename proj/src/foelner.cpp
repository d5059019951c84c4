#include "fusionkit/foelner.hpp"

#include "fusionkit/spectral.hpp"
#include "fusionkit/window.hpp"

#include <algorithm>
#include <cmath>

namespace fusionkit {

namespace {

void require_nonempty(const LabelSet& s, const char* what) {
    if (s.empty()) {
        throw FusionError(ErrorKind::EmptySet, std::string(what) + " must be non-empty");
    }
}

Quantity exact_epsilon(double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw FusionError(ErrorKind::InvalidParam, "epsilon must be a positive finite number");
    }
    return Quantity::exact(decimal_rational(epsilon));
}

double safe_ratio(const Quantity& num, const Quantity& den) {
    return den.is_zero() ? INFINITY : (num / den).value();
}

bool leaks_out(const FusionRing& ring, const Label& alpha, const LabelSet& S, const LabelSet& F) {
    for (const auto& xi : S) {
        for (const auto& [beta, n] : ring.product(alpha, xi)) {
            if (!F.contains(beta)) {
                return true;
            }
        }
    }
    return false;
}

bool leaks_in(const FusionRing& ring, const Label& alpha, const LabelSet& S, const LabelSet& F) {
    for (const auto& xi : S) {
        for (const auto& [beta, n] : ring.product(alpha, xi)) {
            if (F.contains(beta)) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace

LabelSet BoundaryResult::all() const {
    LabelSet s = inner;
    s.insert(outer.begin(), outer.end());
    return s;
}

BoundaryResult boundary(const FusionRing& ring, const LabelSet& S, const LabelSet& F) {
    require_nonempty(S, "S");
    require_nonempty(F, "F");
    for (const auto& x : S) {
        ring.require(x);
    }
    for (const auto& x : F) {
        ring.require(x);
    }

    BoundaryResult result;
    for (const auto& alpha : F) {
        if (leaks_out(ring, alpha, S, F)) {
            result.inner.insert(result.inner.end(), alpha);
        }
    }

    LabelSet conj_s;
    for (const auto& xi : S) {
        conj_s.insert(ring.conjugate(xi));
    }
    LabelSet candidates;
    for (const auto& eta : F) {
        for (const auto& cxi : conj_s) {
            for (const auto& [alpha, n] : ring.product(eta, cxi)) {
                if (!F.contains(alpha)) {
                    candidates.insert(alpha);
                }
            }
        }
    }
    for (const auto& alpha : candidates) {
        if (leaks_in(ring, alpha, S, F)) {
            result.outer.insert(result.outer.end(), alpha);
        }
    }

    result.weight_inner = subset_weight(ring, result.inner);
    result.weight_outer = subset_weight(ring, result.outer);
    result.weight_F = subset_weight(ring, F);
    return result;
}

std::string condition_name(Condition c) {
    switch (c) {
        case Condition::FC1: return "FC1";
        case Condition::FC2: return "FC2";
        case Condition::FC3: return "FC3";
    }
    return "FC?";
}

FoelnerReport fc3_check(const FusionRing& ring, const LabelSet& S, const LabelSet& F, double epsilon) {
    const Quantity eps = exact_epsilon(epsilon);
    const BoundaryResult b = boundary(ring, S, F);
    FoelnerReport report;
    report.condition = Condition::FC3;
    report.support = S;
    report.F = F;
    report.epsilon = epsilon;
    report.lhs = b.weight();
    report.rhs = eps * b.weight_F;
    report.weight_F = b.weight_F;
    report.satisfied = report.lhs < report.rhs;
    report.ratio = safe_ratio(report.lhs, b.weight_F);
    return report;
}

LabelSet convolution_support(const FusionRing& ring, const LabelSet& F, const LabelSet& support) {
    LabelSet out;
    for (const auto& alpha : F) {
        for (const auto& omega : support) {
            for (const auto& [beta, n] : ring.product(alpha, omega)) {
                out.insert(beta);
            }
        }
    }
    return out;
}

FoelnerReport fc1_check(const FusionRing& ring, const ProbMeasure& mu, const LabelSet& F, double epsilon) {
    require_same_ring(ring, mu.ring());
    if (!mu.symmetric()) {
        throw FusionError(ErrorKind::NonSymmetricMeasure, "FC1 needs a symmetric measure");
    }
    if (!mu.contains_unit()) {
        throw FusionError(ErrorKind::MeasureMissingUnit, "FC1 needs e in supp(mu)");
    }
    require_nonempty(F, "F");
    const Quantity eps = exact_epsilon(epsilon);
    const LabelSet support = mu.support();
    const LabelSet grown = convolution_support(ring, F, support);
    const Quantity weight_F = subset_weight(ring, F);

    FoelnerReport report;
    report.condition = Condition::FC1;
    report.support = support;
    report.measure = mu.weights();
    report.F = F;
    report.epsilon = epsilon;
    report.lhs = subset_weight(ring, grown);
    report.rhs = (Quantity(1) + eps) * weight_F;
    report.weight_F = weight_F;
    report.satisfied = report.lhs < report.rhs;
    report.ratio = safe_ratio(report.lhs, weight_F);

    LabelSet closure = F;
    const LabelSet b = boundary(ring, support, F).all();
    closure.insert(b.begin(), b.end());
    report.support_identity = closure == grown;
    return report;
}

Quantity fc2_value(const FusionRing& ring, const Label& xi, const LabelSet& F) {
    ring.require(xi);
    const Label cxi = ring.conjugate(xi);
    const Quantity& dxi = ring.dim(xi);
    Quantity total;
    for (const auto& eta : F) {
        const ProductMap& forward = ring.product(eta, xi);
        const ProductMap& backward = ring.product(eta, cxi);
        LabelSet outside;
        for (const auto* m : {&forward, &backward}) {
            for (const auto& [alpha, n] : *m) {
                if (!F.contains(alpha)) {
                    outside.insert(alpha);
                }
            }
        }
        for (const auto& alpha : outside) {
            const Integer n = ring.coefficient(eta, cxi, alpha) + ring.coefficient(eta, xi, alpha);
            total += ring.dim(eta) * ring.dim(alpha) / dxi * Quantity::exact(n);
        }
    }
    return total;
}

double fc2_value_direct(const FusionRing& ring, const Label& xi, const LabelSet& F) {
    const Function chi = Function::indicator(ring, F);
    const Function image = rho1_operator_apply(ring, xi, chi);
    LabelSet labels = image.support();
    labels.insert(F.begin(), F.end());
    double total = 0.0;
    for (const auto& alpha : labels) {
        const double d = ring.dim_value(alpha);
        total += std::abs(image.at(alpha) - chi.at(alpha)) * d * d;
    }
    return total;
}

FoelnerReport fc2_check(const FusionRing& ring, const LabelSet& S, const LabelSet& F, double epsilon) {
    require_nonempty(S, "S");
    require_nonempty(F, "F");
    const Quantity eps = exact_epsilon(epsilon);
    const Quantity weight_F = subset_weight(ring, F);

    FoelnerReport report;
    report.condition = Condition::FC2;
    report.support = S;
    report.F = F;
    report.epsilon = epsilon;
    report.rhs = eps * weight_F;
    report.weight_F = weight_F;
    report.satisfied = true;
    for (const auto& xi : S) {
        Quantity v = fc2_value(ring, xi, F);
        if (report.per_generator.empty() || report.lhs < v) {
            report.lhs = v;
        }
        report.satisfied = report.satisfied && v < report.rhs;
        report.per_generator.emplace_back(xi, std::move(v));
    }
    report.ratio = safe_ratio(report.lhs, weight_F);
    return report;
}

double transition_kernel(const FusionRing& ring, const ProbMeasure& mu, const Label& xi, const Label& eta) {
    require_same_ring(ring, mu.ring());
    ring.require(xi);
    ring.require(eta);
    const double dxi = ring.dim_value(xi);
    const double deta = ring.dim_value(eta);
    double p = 0.0;
    for (const auto& [omega, w] : mu.weights()) {
        const Integer n = ring.coefficient(xi, omega, eta);
        if (n != 0) {
            p += w * deta / (dxi * ring.dim_value(omega)) * to_double(n);
        }
    }
    return p;
}

Quantity transition_kernel_exact(const FusionRing& ring, const ProbMeasure& mu, const Label& xi, const Label& eta) {
    require_same_ring(ring, mu.ring());
    ring.require(xi);
    ring.require(eta);
    Quantity p;
    for (const auto& [omega, w] : mu.weights()) {
        const Integer n = ring.coefficient(xi, omega, eta);
        if (n != 0) {
            p += Quantity::from_double(w) * ring.dim(eta) / (ring.dim(xi) * ring.dim(omega)) * Quantity::exact(n);
        }
    }
    return p;
}

double dirichlet_norm(const FusionRing& ring, const ProbMeasure& mu, const Function& f, int r) {
    require_same_ring(ring, mu.ring());
    require_same_ring(ring, f.ring());
    if (r < 1) {
        throw FusionError(ErrorKind::InvalidParam, "Dirichlet norm order r must be >= 1");
    }
    // ξ can pair with some η ∈ supp f only if p_μ(ξ,η) > 0, i.e. ξ ∈ supp(η conj ω)
    LabelSet rows = f.support();
    for (const auto& [eta, v] : f.coeffs()) {
        for (const auto& [omega, w] : mu.weights()) {
            for (const auto& [xi, n] : ring.product(eta, ring.conjugate(omega))) {
                rows.insert(xi);
            }
        }
    }
    double total = 0.0;
    for (const auto& xi : rows) {
        const double fxi = f.at(xi);
        const double dxi = ring.dim_value(xi);
        for (const auto& [omega, w] : mu.weights()) {
            const double domega = ring.dim_value(omega);
            for (const auto& [eta, n] : ring.product(xi, omega)) {
                const double diff = std::abs(fxi - f.at(eta));
                if (diff == 0.0) {
                    continue;
                }
                // σ(ξ) p = d(ξ)² · w d(η)/(d(ξ) d(ω)) N
                const double weight = w * dxi * ring.dim_value(eta) / domega * to_double(n);
                total += weight * std::pow(diff, r);
            }
        }
    }
    return std::pow(0.5 * total, 1.0 / r);
}

double weighted_norm(const Function& f, int r) {
    if (r < 1) {
        throw FusionError(ErrorKind::InvalidParam, "norm order r must be >= 1");
    }
    double total = 0.0;
    for (const auto& [label, v] : f.coeffs()) {
        const double d = f.ring().dim_value(label);
        total += std::pow(std::abs(v), r) * d * d;
    }
    return std::pow(total, 1.0 / r);
}

double weighted_inner(const Function& f, const Function& g) {
    require_same_ring(f.ring(), g.ring());
    double total = 0.0;
    for (const auto& [label, v] : f.coeffs()) {
        const double d = f.ring().dim_value(label);
        total += v * g.at(label) * d * d;
    }
    return total;
}

double nw_ratio(const FusionRing& ring, const ProbMeasure& mu, const Function& f, int r) {
    if (f.is_zero()) {
        throw FusionError(ErrorKind::ZeroFunction, "NW ratio of the zero function");
    }
    const double denom = weighted_norm(f, r);
    return dirichlet_norm(ring, mu, f, r) / denom;
}

namespace {

CurvePoint curve_point(int step, const FoelnerReport& report) {
    return {step, report.F.size(), report.weight_F, report.lhs, report.ratio};
}

/// Smaller boundary-to-set weight ratio, compared exactly when possible.
bool better(const FoelnerReport& a, const FoelnerReport& b) {
    return a.lhs * b.weight_F < b.lhs * a.weight_F;
}

SearchResult search_balls(const FusionRing& ring, const LabelSet& S, double epsilon, std::size_t budget) {
    SearchResult result;
    std::vector<CurvePoint> curve;
    std::optional<FoelnerReport> best;
    std::size_t previous_size = 0;
    for (int r = 1;; ++r) {
        LabelSet F;
        try {
            F = build_window(ring, S, r, budget).label_set();
        } catch (const BudgetExceeded&) {
            result.budget_exhausted = true;
            break;
        }
        FoelnerReport report = fc3_check(ring, S, F, epsilon);
        curve.push_back(curve_point(r, report));
        if (!best || better(report, *best)) {
            best = report;
        }
        if (report.satisfied) {
            result.found = true;
            best = std::move(report);
            break;
        }
        if (F.size() == previous_size) {
            break;  // the balls stopped growing
        }
        previous_size = F.size();
    }
    if (!best) {
        // not even radius 1 fits: fall back to {e}
        best = fc3_check(ring, S, LabelSet{ring.unit()}, epsilon);
        curve.push_back(curve_point(0, *best));
    }
    result.report = std::move(*best);
    result.report.curve = std::move(curve);
    return result;
}

SearchResult search_greedy(const FusionRing& ring, const LabelSet& S, double epsilon, std::size_t budget) {
    SearchResult result;
    std::vector<CurvePoint> curve;
    LabelSet F{ring.unit()};
    FoelnerReport current = fc3_check(ring, S, F, epsilon);
    FoelnerReport best = current;
    curve.push_back(curve_point(0, current));
    for (int step = 1; !current.satisfied; ++step) {
        const LabelSet candidates = boundary(ring, S, F).outer;
        if (candidates.empty()) {
            break;
        }
        if (F.size() + 1 > budget) {
            result.budget_exhausted = true;
            break;
        }
        std::optional<FoelnerReport> pick;
        for (const auto& c : candidates) {
            LabelSet trial = F;
            trial.insert(c);
            FoelnerReport report = fc3_check(ring, S, trial, epsilon);
            if (!pick || better(report, *pick)) {
                pick = std::move(report);
            }
        }
        F = pick->F;
        current = std::move(*pick);
        curve.push_back(curve_point(step, current));
        if (better(current, best) || current.satisfied) {
            best = current;
        }
    }
    result.found = best.satisfied;
    result.report = std::move(best);
    result.report.curve = std::move(curve);
    return result;
}

}  // namespace

SearchResult foelner_search(const FusionRing& ring, const LabelSet& S, double epsilon, SearchStrategy strategy,
                            std::size_t budget) {
    require_nonempty(S, "S");
    exact_epsilon(epsilon);
    if (budget < 1) {
        throw FusionError(ErrorKind::InvalidParam, "search budget must be >= 1");
    }
    return strategy == SearchStrategy::Balls ? search_balls(ring, S, epsilon, budget)
                                             : search_greedy(ring, S, epsilon, budget);
}

}  // namespace fusionkit
