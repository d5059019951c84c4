#pragma once

#include "fusionkit/element.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fusionkit {

/// Full description of a finite fusion ring given by tables.
struct TableSpec {
    std::vector<std::string> labels;
    std::string unit;
    std::map<std::string, std::string> conjugate;
    std::map<std::string, Quantity> dim;
    /// Keyed by (a, b); missing pairs surface as IncompleteTable when probed.
    std::map<std::pair<std::string, std::string>, std::map<std::string, Integer>> products;
    std::string description = "table ring";
};

enum class RingKind { group_Zd, group_free, group_finite_table, su2, deformed_su2, tensor_product, table, trivial };

/// Declarative ring description, validated when built.
struct RingSpec {
    RingKind kind = RingKind::su2;
    int rank = 1;      ///< d for Z^d, k for F_k
    int n = 2;         ///< deformation parameter of deformed_su2
    std::vector<std::vector<int>> group_table;       ///< Cayley table, entries are indices
    std::vector<std::string> group_names;            ///< optional element names for finite groups
    std::shared_ptr<const RingSpec> left, right;     ///< tensor factors
    TableSpec table;
};

/// Group ring Z[Γ] for Z^d, free groups and finite groups: d ≡ 1, conjugation is inversion.
FusionRing build_group_ring(const RingSpec& spec);
FusionRing build_zd_ring(int d);
/// Labels are freely reduced words; generator i renders as the i-th lowercase letter and its
/// inverse as the uppercase letter, the empty word as "e".
FusionRing build_free_group_ring(int rank);
/// Finite group from a Cayley table (`table[i][j]` = index of i*j). Throws InvalidTable unless
/// the table is a group.
FusionRing build_finite_group_ring(const std::vector<std::vector<int>>& table,
                                   std::vector<std::string> names = {});
FusionRing build_cyclic_ring(int n);
/// The ring with the single basis label e.
FusionRing build_trivial_ring();

/// Clebsch–Gordan fusion rules: N_{m,n}^k = 1 iff |m-n| ≤ k ≤ m+n and m+n+k is even; d(k) = k+1.
FusionRing build_su2_ring();
/// Same fusion rules with d(0)=1, d(1)=n, d(k+1) = n d(k) - d(k-1).
FusionRing build_deformed_su2_ring(int n);

/// Labels are pairs, N_{(a,b),(c,d)}^{(x,y)} = N_{a,c}^x N_{b,d}^y, d((a,b)) = d(a) d(b).
FusionRing tensor_product(const FusionRing& left, const FusionRing& right);
/// Splits a tensor-product label into its two factors.
std::pair<Label, Label> split_tensor_label(const Label& label);
Label make_tensor_label(const Label& a, const Label& b);

/// Finite table ring; validates closure (every pair present, every key a label, "|" unused).
FusionRing build_table_ring(const TableSpec& spec);

FusionRing build_ring(const RingSpec& spec);

/// Exact symmetrized measure ½μ_u + ½μ_ū where μ_u(α) = k_α d(α) / Σ_β k_β d(β).
std::map<Label, Quantity> decomposition_weights(const FusionRing& ring, const std::map<Label, Integer>& decomposition);
ProbMeasure measure_from_decomposition(const FusionRing& ring, const std::map<Label, Integer>& decomposition);

/// Uniform measure on the declared generators and their conjugates.
ProbMeasure uniform_generator_measure(const FusionRing& ring);

}  // namespace fusionkit
