#pragma once

#include "fusionkit/catalog.hpp"
#include "fusionkit/window.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace fusionkit {

/// Ring documents are JSON objects of two shapes:
///
///   {"type": "builtin", "name": "zd|free|cyclic|su2|deformed_su2|tensor|trivial|group_table",
///    "params": {...}}
///   {"type": "table", "labels": [...], "unit": "...", "conjugate": {"a": "b"},
///    "dim": {"a": 2}, "products": {"a|b": {"c": 1}}}
///
/// Builtin params: zd {"d"}, free {"rank"}, cyclic {"n"}, deformed_su2 {"n"},
/// tensor {"left": doc, "right": doc}, group_table {"table": [[...]], "names": [...]}.
/// Table dims are JSON numbers (integers are exact) or decimal strings for exact big integers.
/// A table may carry "truncated": true when it is the restriction of a larger ring to a window;
/// such tables skip the axiom gate since products leaving the window are cut.
struct RingLoadOptions {
    /// Run verify_axioms over the whole table before accepting it.
    bool verify = true;
};

FusionRing ring_from_json(std::string_view text, RingLoadOptions options = {});
FusionRing load_ring_file(const std::filesystem::path& path, RingLoadOptions options = {});

/// Table document for the restriction of `ring` to `window`. Product entries keep only window
/// labels; "truncated" is set when some product leaves the window.
std::string export_table_json(const FusionRing& ring, const TruncationWindow& window);

}  // namespace fusionkit
