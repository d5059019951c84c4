#include "fusionkit/fusion_ring.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace fusionkit {

std::string_view error_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidLabel: return "InvalidLabel";
        case ErrorKind::IncompleteTable: return "IncompleteTable";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::InvalidTable: return "InvalidTable";
        case ErrorKind::InvalidParam: return "InvalidParam";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NotSelfAdjoint: return "NotSelfAdjoint";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::NonSymmetricMeasure: return "NonSymmetricMeasure";
        case ErrorKind::EmptySet: return "EmptySet";
        case ErrorKind::MeasureMissingUnit: return "MeasureMissingUnit";
        case ErrorKind::ZeroFunction: return "ZeroFunction";
    }
    return "FusionError";
}

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<Label, Label>& p) const noexcept {
        const LabelHash h;
        return h(p.first) * 0x100000001b3ULL ^ h(p.second);
    }
};

struct DimEntry {
    Quantity exact;
    double value;
};

}  // namespace

struct FusionRing::State {
    std::shared_ptr<const FusionRules> rules;
    Label unit;

    mutable std::shared_mutex product_mutex;
    mutable std::unordered_map<std::pair<Label, Label>, ProductMap, PairHash> products;

    mutable std::shared_mutex dim_mutex;
    mutable std::unordered_map<Label, DimEntry, LabelHash> dims;
};

FusionRing::FusionRing(std::shared_ptr<const FusionRules> rules) : state_(std::make_shared<State>()) {
    if (!rules) {
        throw FusionError(ErrorKind::InvalidParam, "null fusion rules");
    }
    state_->unit = rules->unit();
    state_->rules = std::move(rules);
}

const FusionRules& FusionRing::rules() const { return *state_->rules; }

std::string FusionRing::description() const { return state_->rules->description(); }

const Label& FusionRing::unit() const { return state_->unit; }

bool FusionRing::is_valid(const Label& label) const { return state_->rules->is_valid(label); }

void FusionRing::require(const Label& label) const {
    if (!state_->rules->is_valid(label)) {
        std::string text = "(";
        for (std::size_t i = 0; i < label.size(); ++i) {
            text += (i ? "," : "") + std::to_string(label[i]);
        }
        throw FusionError(ErrorKind::InvalidLabel, "label " + text + ") is not in " + description());
    }
}

Label FusionRing::conjugate(const Label& label) const {
    require(label);
    return state_->rules->conjugate(label);
}

const Quantity& FusionRing::dim(const Label& label) const {
    {
        std::shared_lock lock(state_->dim_mutex);
        if (auto it = state_->dims.find(label); it != state_->dims.end()) {
            return it->second.exact;
        }
    }
    require(label);
    Quantity d = state_->rules->dimension(label);
    const double v = d.value();
    std::unique_lock lock(state_->dim_mutex);
    auto [it, inserted] = state_->dims.try_emplace(label, DimEntry{std::move(d), v});
    return it->second.exact;
}

double FusionRing::dim_value(const Label& label) const {
    {
        std::shared_lock lock(state_->dim_mutex);
        if (auto it = state_->dims.find(label); it != state_->dims.end()) {
            return it->second.value;
        }
    }
    dim(label);
    std::shared_lock lock(state_->dim_mutex);
    return state_->dims.find(label)->second.value;
}

const ProductMap& FusionRing::product(const Label& a, const Label& b) const {
    auto key = std::make_pair(a, b);
    {
        std::shared_lock lock(state_->product_mutex);
        if (auto it = state_->products.find(key); it != state_->products.end()) {
            return it->second;
        }
    }
    require(a);
    require(b);
    ProductMap result = state_->rules->product(a, b);
    std::unique_lock lock(state_->product_mutex);
    // unordered_map nodes are stable, so the returned reference survives rehashing
    auto [it, inserted] = state_->products.try_emplace(std::move(key), std::move(result));
    return it->second;
}

Integer FusionRing::coefficient(const Label& a, const Label& b, const Label& c) const {
    const auto& p = product(a, b);
    auto it = p.find(c);
    return it == p.end() ? Integer(0) : it->second;
}

std::string FusionRing::render(const Label& label) const { return state_->rules->render(label); }

Label FusionRing::parse(std::string_view text) const { return state_->rules->parse(text); }

std::vector<Label> FusionRing::generators() const { return state_->rules->generators(); }

std::size_t FusionRing::cached_products() const {
    std::shared_lock lock(state_->product_mutex);
    return state_->products.size();
}

Quantity subset_weight(const FusionRing& ring, const LabelSet& labels) {
    Quantity total;
    for (const auto& label : labels) {
        const auto& d = ring.dim(label);
        total += d * d;
    }
    return total;
}

}  // namespace fusionkit
