#pragma once

#include "fusionkit/fusion_ring.hpp"

#include <map>
#include <utility>

namespace fusionkit {

/// Finitely supported combination Σ c_α α over the basis of one ring.
/// Coefficients equal to zero are dropped on insertion, so the stored keys are the support.
template <class Coeff>
class BasicElement {
public:
    using Coefficients = std::map<Label, Coeff>;

    explicit BasicElement(FusionRing ring) : ring_(std::move(ring)) {}
    BasicElement(FusionRing ring, const Coefficients& coeffs) : ring_(std::move(ring)) {
        for (const auto& [label, c] : coeffs) {
            add(label, c);
        }
    }

    static BasicElement basis(FusionRing ring, const Label& label, Coeff c = Coeff(1)) {
        BasicElement x(std::move(ring));
        x.add(label, c);
        return x;
    }

    /// Characteristic function of a finite label set.
    static BasicElement indicator(FusionRing ring, const LabelSet& labels) {
        BasicElement x(std::move(ring));
        for (const auto& label : labels) {
            x.add(label, Coeff(1));
        }
        return x;
    }

    const FusionRing& ring() const { return ring_; }
    const Coefficients& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Coeff at(const Label& label) const {
        auto it = coeffs_.find(label);
        return it == coeffs_.end() ? Coeff(0) : it->second;
    }

    LabelSet support() const {
        LabelSet s;
        for (const auto& [label, c] : coeffs_) {
            s.insert(s.end(), label);
        }
        return s;
    }

    void add(const Label& label, const Coeff& c) {
        ring_.require(label);
        auto [it, inserted] = coeffs_.try_emplace(label, Coeff(0));
        it->second += c;
        if (it->second == Coeff(0)) {
            coeffs_.erase(it);
        }
    }

    friend bool operator==(const BasicElement& a, const BasicElement& b) {
        return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
    }

private:
    FusionRing ring_;
    Coefficients coeffs_;
};

/// Ring element with exact integer coefficients.
using Element = BasicElement<Integer>;
/// Finitely supported real function on the basis (an element of ℓ^p(I)).
using Function = BasicElement<double>;

Element multiply(const Element& x, const Element& y);
Element conjugate_element(const Element& x);
Function conjugate_element(const Function& f);
/// Coefficient at the unit.
Integer natural_trace(const Element& x);

/// Weighted convolution δ_a * δ_b = Σ_c d(c)/(d(a)d(b)) N_{a,b}^c δ_c, extended bilinearly.
Function convolve(const Function& f, const Function& g);

Function to_function(const Element& x);

/// Finitely supported probability measure on the basis.
class ProbMeasure {
public:
    /// Validates weights in (0,1] summing to 1 within kTolerance; zero weights are dropped.
    ProbMeasure(FusionRing ring, const std::map<Label, double>& weights);

    static ProbMeasure delta(FusionRing ring, const Label& label);
    static ProbMeasure uniform(FusionRing ring, const LabelSet& labels);

    const FusionRing& ring() const { return ring_; }
    const std::map<Label, double>& weights() const { return weights_; }
    double weight(const Label& label) const;
    LabelSet support() const;
    /// μ(conj ξ) == μ(ξ) on the support, compared exactly on stored values.
    bool symmetric() const { return symmetric_; }
    bool contains_unit() const { return weights_.contains(ring_.unit()); }
    Function as_function() const;

private:
    FusionRing ring_;
    std::map<Label, double> weights_;
    bool symmetric_ = false;
};

/// Throws RingMismatch unless both handles share one ring.
void require_same_ring(const FusionRing& a, const FusionRing& b);

}  // namespace fusionkit
