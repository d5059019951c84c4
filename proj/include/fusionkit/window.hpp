#pragma once

#include "fusionkit/fusion_ring.hpp"

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

namespace fusionkit {

/// Finite ordered set of basis labels onto which operators are compressed.
/// Unit first, deduplicated, closed under conjugation.
class TruncationWindow {
public:
    TruncationWindow(FusionRing ring, std::vector<Label> labels, int radius, LabelSet generator_support);

    const FusionRing& ring() const { return ring_; }
    const std::vector<Label>& labels() const { return labels_; }
    int radius() const { return radius_; }
    const LabelSet& generator_support() const { return generators_; }
    std::size_t size() const { return labels_.size(); }
    bool contains(const Label& label) const { return position_.contains(label); }
    std::optional<std::size_t> index_of(const Label& label) const;
    LabelSet label_set() const { return LabelSet(labels_.begin(), labels_.end()); }

private:
    FusionRing ring_;
    std::vector<Label> labels_;
    int radius_;
    LabelSet generators_;
    std::unordered_map<Label, std::size_t, LabelHash> position_;
};

/// Supports of all products of at most `radius` factors from S ∪ conj(S) ∪ {e}, closed under
/// conjugation. Labels appear in breadth-first discovery order; within one expansion, factors
/// and product supports are visited in label order. Throws BudgetExceeded past `cap` labels.
TruncationWindow build_window(const FusionRing& ring, const LabelSet& generators, int radius, std::size_t cap);

/// Window over an explicit label list; the unit is moved first and conjugates are appended.
TruncationWindow window_from_labels(const FusionRing& ring, const std::vector<Label>& labels);

}  // namespace fusionkit
