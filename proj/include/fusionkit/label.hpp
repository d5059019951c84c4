#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <vector>

namespace fusionkit {

/// Basis label of a fusion ring.
///
/// A label is an opaque tuple of integers whose meaning is owned by the ring that
/// issued it: a highest weight for the SU(2) family, a lattice vector for Z^d, a
/// reduced word for free groups, a table index for table rings. Only the issuing
/// ring can render or parse it. Ordering is lexicographic on the tuple and is used
/// for deterministic tie-breaking and output only.
class Label {
public:
    Label() = default;
    explicit Label(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {}
    Label(std::initializer_list<std::int64_t> parts) : parts_(parts) {}

    std::span<const std::int64_t> parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    std::int64_t operator[](std::size_t i) const { return parts_[i]; }

    friend auto operator<=>(const Label&, const Label&) = default;
    friend bool operator==(const Label&, const Label&) = default;

private:
    std::vector<std::int64_t> parts_;
};

struct LabelHash {
    std::size_t operator()(const Label& label) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL ^ label.size();
        for (const auto p : label.parts()) {
            h ^= std::hash<std::int64_t>{}(p) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

using LabelSet = std::set<Label>;

}  // namespace fusionkit
