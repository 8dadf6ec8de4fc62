#pragma once

#include "ddbar/cohomology.hpp"
#include "ddbar/hodge_table.hpp"

#include <json.hpp>

#include <vector>

namespace ddbar {

// Non-Kaehlerness degree: h^k_BC + h^{2n-k}_BC - 2 b_k. May be negative for
// tables that do not come from valid complexes; reported, never clamped.
int delta_k(const HodgeTable& t, int k);

// Revised degree: h^k_BC - h^k_A.
int n_k(const HodgeTable& t, int k);

// Slack of sum_{p+q=k}(h_BC + h_A) >= 2 b_k; nonnegative on tables of valid
// compact-manifold models.
int at_inequality(const HodgeTable& t, int k);

// Entrywise h_bc[p][q] == h_a[n-p][n-q].
std::vector<std::vector<bool>> duality_check(const HodgeTable& t);

// The three ddbar-lemma criteria. They are equivalent on manifold models;
// agreement on every input we can build is an engine-correctness check.
struct VerdictDetail {
    bool delta_zero = false;               // (a) delta^k = 0 for all k
    bool bc_equals_a = false;              // (b) per-k sums of h_bc - h_a all zero
    bool bc_to_de_rham_injective = false;  // (c) natural map rank = h^k_BC for all k
    bool agree() const {
        return delta_zero == bc_equals_a && bc_equals_a == bc_to_de_rham_injective;
    }
};

// Evaluates all three criteria; InvalidComplexError when they disagree
// (possible only for an engine bug or a complex outside manifold behavior).
VerdictDetail ddbar_verdict(const DoubleComplex& k);

struct DiagnosticsReport {
    int n = 0;
    std::vector<int> delta;          // k = 0..2n
    std::vector<int> n_revised;      // k = 0..2n
    std::vector<int> frolicher_gap;  // sum h_dolb - b_k
    std::vector<int> at_slack;
    bool frolicher_ok = false;       // all gaps >= 0
    bool at_ok = false;              // all slacks >= 0
    std::vector<std::vector<bool>> duality;
    bool duality_ok = false;
    VerdictDetail detail;
    bool verdict = false;

    nlohmann::ordered_json to_json() const;
};

// Table-level half of the report (no verdict; detail untouched).
DiagnosticsReport diagnose_table(const HodgeTable& t);

// Full report for a validated complex, verdict included.
DiagnosticsReport diagnose(const DoubleComplex& k, const HodgeTable& t);

} // namespace ddbar
