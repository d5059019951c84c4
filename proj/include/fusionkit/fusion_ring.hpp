#pragma once

#include "fusionkit/errors.hpp"
#include "fusionkit/label.hpp"
#include "fusionkit/numeric.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fusionkit {

/// Fusion coefficients N_{a,b}^c of one basis product, keyed by c. Zero entries are never stored.
using ProductMap = std::map<Label, Integer>;

/// The rule oracle behind a fusion ring.
///
/// Implementations describe a (possibly infinite) basis lazily: nothing is ever
/// enumerated, every query is answered on demand. Implementations must be pure:
/// the same query always yields the same answer, from any thread.
class FusionRules {
public:
    virtual ~FusionRules() = default;

    virtual std::string description() const = 0;
    virtual Label unit() const = 0;
    virtual bool is_valid(const Label& label) const = 0;
    virtual Label conjugate(const Label& label) const = 0;
    virtual Quantity dimension(const Label& label) const = 0;
    virtual ProductMap product(const Label& a, const Label& b) const = 0;

    virtual std::string render(const Label& label) const = 0;
    /// Inverse of render; throws InvalidLabel.
    virtual Label parse(std::string_view text) const = 0;

    /// Declared generating labels (used for default windows and "uniform-gens" measures).
    virtual std::vector<Label> generators() const = 0;
    /// The whole basis, for finite rings.
    virtual std::optional<std::vector<Label>> finite_basis() const { return std::nullopt; }
    /// Label corresponding to an integer, for rings whose basis is indexed by integers.
    virtual std::optional<Label> from_integer(std::int64_t) const { return std::nullopt; }
};

/// Shared, immutable handle to a fusion ring with memoized products and dimensions.
///
/// Copies share the same oracle and cache. The cache is safe under concurrent
/// readers: a product is computed at most a few times and every caller observes
/// the same stored map.
class FusionRing {
public:
    explicit FusionRing(std::shared_ptr<const FusionRules> rules);

    const FusionRules& rules() const;
    std::string description() const;

    const Label& unit() const;
    bool is_valid(const Label& label) const;
    /// Throws InvalidLabel unless the label belongs to this ring.
    void require(const Label& label) const;

    Label conjugate(const Label& label) const;
    const Quantity& dim(const Label& label) const;
    double dim_value(const Label& label) const;
    /// Exact map of a*b. The reference stays valid for the lifetime of the ring.
    const ProductMap& product(const Label& a, const Label& b) const;
    /// Single coefficient N_{a,b}^c.
    Integer coefficient(const Label& a, const Label& b, const Label& c) const;

    std::string render(const Label& label) const;
    Label parse(std::string_view text) const;
    std::vector<Label> generators() const;

    /// Number of memoized products (diagnostics).
    std::size_t cached_products() const;

    bool same_ring(const FusionRing& other) const { return state_ == other.state_; }
    friend bool operator==(const FusionRing& a, const FusionRing& b) { return a.same_ring(b); }

private:
    struct State;
    std::shared_ptr<State> state_;
};

/// product_basis: coefficient map of the basis product a*b.
inline const ProductMap& product_basis(const FusionRing& ring, const Label& a, const Label& b) {
    return ring.product(a, b);
}

/// Total σ-weight Σ d(α)² of a finite label set.
Quantity subset_weight(const FusionRing& ring, const LabelSet& labels);

}  // namespace fusionkit
