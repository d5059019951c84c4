#pragma once

#include "fusionkit/element.hpp"
#include "fusionkit/foelner.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fusionkit {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitYes = 0, kExitNo = 1, kExitInputError = 2, kExitBudget = 3 };

/// Runs `fusionkit <subcommand> ...`; `args` excludes the program name.
/// Subcommands: axioms, foelner, spectrum, check, dirichlet, export.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A ring argument is a path to a ring document, or the document itself when it starts with '{'.
FusionRing load_ring_argument(const std::string& argument, bool verify = true);

/// Comma-separated label list; commas inside parentheses belong to the label.
LabelSet parse_label_list(const FusionRing& ring, std::string_view text);

/// Measure specs: "uniform-gens", "delta:L", "decomp:L=k,...", "uniform:L,...", "weights:L=w,...".
ProbMeasure parse_measure_spec(const FusionRing& ring, std::string_view spec);

/// Set specs: "interval:A..B" (integer-labelled rings), "set:a,b,c", "ball:r" (window of radius r
/// generated by `generators`).
LabelSet parse_set_spec(const FusionRing& ring, std::string_view spec, const LabelSet& generators);

/// 12 significant digits; integers below 10^15 print in full.
std::string format_number(double x);
std::string format_quantity(const Quantity& q);

}  // namespace fusionkit
