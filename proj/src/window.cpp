#include "fusionkit/window.hpp"

#include <string>

namespace fusionkit {

TruncationWindow::TruncationWindow(FusionRing ring, std::vector<Label> labels, int radius, LabelSet generator_support)
    : ring_(std::move(ring)), labels_(std::move(labels)), radius_(radius), generators_(std::move(generator_support)) {
    if (labels_.empty() || labels_.front() != ring_.unit()) {
        throw FusionError(ErrorKind::InvalidParam, "window must list the unit first");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        ring_.require(labels_[i]);
        if (!position_.emplace(labels_[i], i).second) {
            throw FusionError(ErrorKind::InvalidParam, "duplicate window label " + ring_.render(labels_[i]));
        }
    }
    for (const auto& label : labels_) {
        if (!position_.contains(ring_.conjugate(label))) {
            throw FusionError(ErrorKind::InvalidParam, "window not closed under conjugation at " + ring_.render(label));
        }
    }
}

std::optional<std::size_t> TruncationWindow::index_of(const Label& label) const {
    auto it = position_.find(label);
    if (it == position_.end()) {
        return std::nullopt;
    }
    return it->second;
}

namespace {

class Collector {
public:
    Collector(const FusionRing& ring, std::size_t cap) : ring_(ring), cap_(cap) {}

    bool add(const Label& label) {
        if (!seen_.insert(label).second) {
            return false;
        }
        order_.push_back(label);
        return true;
    }
    bool over_cap() const { return order_.size() > cap_; }
    std::vector<Label>& order() { return order_; }

    void close_under_conjugation() {
        const std::size_t n = order_.size();
        for (std::size_t i = 0; i < n; ++i) {
            add(ring_.conjugate(order_[i]));
        }
    }

private:
    const FusionRing& ring_;
    std::size_t cap_;
    LabelSet seen_;
    std::vector<Label> order_;
};

}  // namespace

TruncationWindow build_window(const FusionRing& ring, const LabelSet& generators, int radius, std::size_t cap) {
    if (generators.empty()) {
        throw FusionError(ErrorKind::EmptySet, "window generator set is empty");
    }
    if (radius < 0 || cap < 1) {
        throw FusionError(ErrorKind::InvalidParam, "window radius must be >= 0 and cap >= 1");
    }
    LabelSet factors;
    for (const auto& g : generators) {
        factors.insert(g);
        factors.insert(ring.conjugate(g));
    }
    factors.insert(ring.unit());

    Collector collector(ring, cap);
    collector.add(ring.unit());
    std::vector<Label> frontier{ring.unit()};
    for (int step = 1; step <= radius; ++step) {
        std::vector<Label> next;
        for (const auto& x : frontier) {
            for (const auto& g : factors) {
                for (const auto& [alpha, n] : ring.product(x, g)) {
                    if (collector.add(alpha)) {
                        next.push_back(alpha);
                        if (collector.over_cap()) {
                            throw BudgetExceeded(cap, step - 1);
                        }
                    }
                }
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) {
            break;  // finite ring exhausted
        }
    }
    collector.close_under_conjugation();
    if (collector.over_cap()) {
        throw BudgetExceeded(cap, radius - 1);
    }
    return TruncationWindow(ring, std::move(collector.order()), radius, generators);
}

TruncationWindow window_from_labels(const FusionRing& ring, const std::vector<Label>& labels) {
    Collector collector(ring, labels.size() * 2 + 1);
    collector.add(ring.unit());
    for (const auto& label : labels) {
        ring.require(label);
        collector.add(label);
    }
    collector.close_under_conjugation();
    LabelSet gens(labels.begin(), labels.end());
    return TruncationWindow(ring, std::move(collector.order()), -1, std::move(gens));
}

}  // namespace fusionkit
