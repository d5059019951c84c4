#include "fusionkit/element.hpp"

#include <cmath>
#include <string>

namespace fusionkit {

void require_same_ring(const FusionRing& a, const FusionRing& b) {
    if (!a.same_ring(b)) {
        throw FusionError(ErrorKind::RingMismatch,
                          "operands belong to different rings (" + a.description() + " vs " + b.description() + ")");
    }
}

Element multiply(const Element& x, const Element& y) {
    require_same_ring(x.ring(), y.ring());
    const auto& ring = x.ring();
    std::map<Label, Integer> acc;
    for (const auto& [a, ka] : x.coeffs()) {
        for (const auto& [b, kb] : y.coeffs()) {
            const Integer k = ka * kb;
            for (const auto& [c, n] : ring.product(a, b)) {
                acc[c] += k * n;
            }
        }
    }
    return Element(ring, acc);
}

Element conjugate_element(const Element& x) {
    Element out(x.ring());
    for (const auto& [a, k] : x.coeffs()) {
        out.add(x.ring().conjugate(a), k);
    }
    return out;
}

Function conjugate_element(const Function& f) {
    Function out(f.ring());
    for (const auto& [a, v] : f.coeffs()) {
        out.add(f.ring().conjugate(a), v);
    }
    return out;
}

Integer natural_trace(const Element& x) { return x.at(x.ring().unit()); }

Function convolve(const Function& f, const Function& g) {
    require_same_ring(f.ring(), g.ring());
    const auto& ring = f.ring();
    std::map<Label, double> acc;
    for (const auto& [a, fa] : f.coeffs()) {
        const double da = ring.dim_value(a);
        for (const auto& [b, gb] : g.coeffs()) {
            const double scale = fa * gb / (da * ring.dim_value(b));
            for (const auto& [c, n] : ring.product(a, b)) {
                acc[c] += scale * ring.dim_value(c) * to_double(n);
            }
        }
    }
    return Function(ring, acc);
}

Function to_function(const Element& x) {
    Function f(x.ring());
    for (const auto& [a, k] : x.coeffs()) {
        f.add(a, to_double(k));
    }
    return f;
}

ProbMeasure::ProbMeasure(FusionRing ring, const std::map<Label, double>& weights) : ring_(std::move(ring)) {
    double total = 0.0;
    for (const auto& [label, w] : weights) {
        ring_.require(label);
        if (!(w >= 0.0 && w <= 1.0)) {
            throw FusionError(ErrorKind::InvalidParam,
                              "measure weight " + std::to_string(w) + " outside (0,1] at " + ring_.render(label));
        }
        if (w > 0.0) {
            weights_.emplace(label, w);
            total += w;
        }
    }
    if (weights_.empty() || std::abs(total - 1.0) > kTolerance) {
        throw FusionError(ErrorKind::InvalidParam, "measure weights sum to " + std::to_string(total) + ", not 1");
    }
    symmetric_ = true;
    for (const auto& [label, w] : weights_) {
        auto it = weights_.find(ring_.conjugate(label));
        if (it == weights_.end() || it->second != w) {
            symmetric_ = false;
            break;
        }
    }
}

ProbMeasure ProbMeasure::delta(FusionRing ring, const Label& label) {
    return ProbMeasure(std::move(ring), {{label, 1.0}});
}

ProbMeasure ProbMeasure::uniform(FusionRing ring, const LabelSet& labels) {
    if (labels.empty()) {
        throw FusionError(ErrorKind::EmptySet, "uniform measure on an empty set");
    }
    std::map<Label, double> w;
    const double p = 1.0 / static_cast<double>(labels.size());
    for (const auto& label : labels) {
        w.emplace(label, p);
    }
    return ProbMeasure(std::move(ring), w);
}

double ProbMeasure::weight(const Label& label) const {
    auto it = weights_.find(label);
    return it == weights_.end() ? 0.0 : it->second;
}

LabelSet ProbMeasure::support() const {
    LabelSet s;
    for (const auto& [label, w] : weights_) {
        s.insert(s.end(), label);
    }
    return s;
}

Function ProbMeasure::as_function() const { return Function(ring_, weights_); }

}  // namespace fusionkit
