#pragma once

#include "fusionkit/window.hpp"

#include <string>
#include <vector>

namespace fusionkit {

struct AxiomCheck {
    std::string name;
    bool passed = true;
    std::size_t probes = 0;
    /// First counterexample found, rendered with ring labels; empty when passed.
    std::string witness;
};

struct AxiomReport {
    std::string ring;
    /// Rendered window labels; every global statement is only claimed on this window.
    std::vector<std::string> window;
    std::vector<AxiomCheck> checks;

    bool all_passed() const;
    const AxiomCheck& check(const std::string& name) const;
};

/// Checks the fusion-algebra axioms on every label, pair and triple drawn from the window:
/// unit law, involution, dimension symmetry and bound, nonnegative integral coefficients,
/// anti-multiplicativity of the involution, Frobenius reciprocity, dimension multiplicativity,
/// associativity, and the bound N_{a,b}^c > 0 ⟹ d(c)d(b) ≥ d(a).
/// Undefined table products propagate as IncompleteTable.
AxiomReport verify_axioms(const FusionRing& ring, const TruncationWindow& window);

}  // namespace fusionkit
