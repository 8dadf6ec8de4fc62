#include "ddbar/diagnostics.hpp"

#include "ddbar/errors.hpp"

#include <algorithm>
#include <string>

namespace ddbar {

namespace {

void check_k(const HodgeTable& t, int k) {
    if (k < 0 || k > 2 * t.n)
        throw DimensionError("degree " + std::to_string(k) + " out of range for n = " +
                             std::to_string(t.n));
}

} // namespace

int delta_k(const HodgeTable& t, int k) {
    check_k(t, k);
    return degree_sum(t.h_bc, k) + degree_sum(t.h_bc, 2 * t.n - k) - 2 * t.b[k];
}

int n_k(const HodgeTable& t, int k) {
    check_k(t, k);
    return degree_sum(t.h_bc, k) - degree_sum(t.h_a, k);
}

int at_inequality(const HodgeTable& t, int k) {
    check_k(t, k);
    return degree_sum(t.h_bc, k) + degree_sum(t.h_a, k) - 2 * t.b[k];
}

std::vector<std::vector<bool>> duality_check(const HodgeTable& t) {
    std::vector<std::vector<bool>> ok(t.n + 1, std::vector<bool>(t.n + 1));
    for (int p = 0; p <= t.n; ++p)
        for (int q = 0; q <= t.n; ++q)
            ok[p][q] = t.h_bc[p][q] == t.h_a[t.n - p][t.n - q];
    return ok;
}

VerdictDetail ddbar_verdict(const DoubleComplex& k) {
    HodgeTable t = hodge_table(k);
    VerdictDetail detail;
    detail.delta_zero = true;
    detail.bc_equals_a = true;
    detail.bc_to_de_rham_injective = true;
    for (int deg = 0; deg <= 2 * t.n; ++deg) {
        if (delta_k(t, deg) != 0) detail.delta_zero = false;
        if (n_k(t, deg) != 0) detail.bc_equals_a = false;
        if (natural_map_rank_de_rham(k, deg) != degree_sum(t.h_bc, deg))
            detail.bc_to_de_rham_injective = false;
    }
    if (!detail.agree())
        throw InvalidComplexError(
            "ddbar-lemma criteria disagree (delta=" + std::to_string(detail.delta_zero) +
            ", bc_vs_a=" + std::to_string(detail.bc_equals_a) +
            ", injectivity=" + std::to_string(detail.bc_to_de_rham_injective) +
            "); the complex is outside manifold behavior or the engine is broken");
    return detail;
}

DiagnosticsReport diagnose_table(const HodgeTable& t) {
    t.check_shapes();
    DiagnosticsReport r;
    r.n = t.n;
    for (int k = 0; k <= 2 * t.n; ++k) {
        r.delta.push_back(delta_k(t, k));
        r.n_revised.push_back(n_k(t, k));
        r.frolicher_gap.push_back(degree_sum(t.h_dolb, k) - t.b[k]);
        r.at_slack.push_back(at_inequality(t, k));
    }
    auto nonneg = [](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
    };
    r.frolicher_ok = nonneg(r.frolicher_gap);
    r.at_ok = nonneg(r.at_slack);
    r.duality = duality_check(t);
    r.duality_ok = true;
    for (const auto& row : r.duality)
        for (bool ok : row)
            if (!ok) r.duality_ok = false;
    return r;
}

DiagnosticsReport diagnose(const DoubleComplex& k, const HodgeTable& t) {
    DiagnosticsReport r = diagnose_table(t);
    r.detail = ddbar_verdict(k);
    r.verdict = r.detail.delta_zero;
    return r;
}

nlohmann::ordered_json DiagnosticsReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["delta"] = delta;
    doc["n_revised"] = n_revised;
    doc["frolicher_gap"] = frolicher_gap;
    doc["frolicher_ok"] = frolicher_ok;
    doc["at_slack"] = at_slack;
    doc["at_ok"] = at_ok;
    doc["duality_ok"] = duality_ok;
    doc["duality"] = duality;
    doc["verdict"] = nlohmann::ordered_json{{"delta_zero", detail.delta_zero},
                                            {"bc_equals_a", detail.bc_equals_a},
                                            {"bc_to_de_rham_injective",
                                             detail.bc_to_de_rham_injective},
                                            {"value", verdict}};
    return doc;
}

} // namespace ddbar
