#include "ddbar/render.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace ddbar {

namespace {

std::string int_list(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os.str();
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

void append_grid(std::ostringstream& os, const std::string& title, const Grid& grid) {
    size_t width = 1;
    for (const auto& row : grid)
        for (int v : row) width = std::max(width, std::to_string(v).size());
    os << title << " (rows p = 0.." << grid.size() - 1 << ", columns q = 0.."
       << grid.size() - 1 << ")\n";
    for (const auto& row : grid) {
        os << " ";
        for (int v : row) {
            std::string s = std::to_string(v);
            os << ' ' << std::string(width - s.size(), ' ') << s;
        }
        os << '\n';
    }
}

void append_labeled_rows(std::ostringstream& os,
                         const std::vector<std::pair<std::string, std::string>>& rows) {
    size_t width = 0;
    for (const auto& [label, value] : rows) width = std::max(width, label.size());
    for (const auto& [label, value] : rows)
        os << label << std::string(width - label.size(), ' ') << " : " << value << '\n';
}

} // namespace

std::string render_table_text(const HodgeTable& t) {
    std::ostringstream os;
    os << "complex dimension n = " << t.n << "\n\n";
    append_grid(os, "h_bc", t.h_bc);
    os << '\n';
    append_grid(os, "h_dolb", t.h_dolb);
    os << '\n';
    if (t.h_del) {
        append_grid(os, "h_del", *t.h_del);
        os << '\n';
    }
    append_grid(os, "h_a", t.h_a);
    os << '\n';
    os << "b_k (k = 0.." << 2 * t.n << ") : " << int_list(t.b) << '\n';
    return os.str();
}

std::string render_diagnostics_text(const DiagnosticsReport& r, bool include_verdict) {
    std::ostringstream os;
    std::vector<std::pair<std::string, std::string>> rows;
    const int top = 2 * r.n;

    // delta^k and delta^{2n-k} agree exactly when b_k = b_{2n-k}; pair the
    // labels only in that case so asymmetric tables stay honest.
    bool paired = true;
    for (int k = 0; k <= top; ++k)
        if (r.delta[k] != r.delta[top - k]) paired = false;
    if (paired) {
        for (int k = 0; 2 * k <= top; ++k) {
            std::string label = "delta^" + std::to_string(k);
            if (k != top - k) label += " = delta^" + std::to_string(top - k);
            rows.push_back({label, std::to_string(r.delta[k])});
        }
    } else {
        for (int k = 0; k <= top; ++k)
            rows.push_back({"delta^" + std::to_string(k), std::to_string(r.delta[k])});
    }
    rows.push_back({"N^k (k = 0.." + std::to_string(top) + ")", int_list(r.n_revised)});
    rows.push_back({"frolicher gap", int_list(r.frolicher_gap) +
                                         "  (all >= 0: " + yes_no(r.frolicher_ok) + ")"});
    rows.push_back({"AT slack", int_list(r.at_slack) +
                                    "  (all >= 0: " + yes_no(r.at_ok) + ")"});
    rows.push_back({"duality h_bc = dual h_a", yes_no(r.duality_ok)});
    append_labeled_rows(os, rows);

    if (include_verdict) {
        os << "ddbar verdict : " << yes_no(r.verdict) << '\n';
        std::vector<std::pair<std::string, std::string>> vrows = {
            {"  (a) all delta^k = 0", yes_no(r.detail.delta_zero)},
            {"  (b) degreewise h_bc sums = h_a sums", yes_no(r.detail.bc_equals_a)},
            {"  (c) H_BC -> H_dR injective", yes_no(r.detail.bc_to_de_rham_injective)},
        };
        append_labeled_rows(os, vrows);
    }
    return os.str();
}

std::string render_cells_text(const DoubleComplex& k) {
    std::ostringstream os;
    Grid dims(k.n() + 1, std::vector<int>(k.n() + 1, 0));
    for (int p = 0; p <= k.n(); ++p)
        for (int q = 0; q <= k.n(); ++q) dims[p][q] = k.cell_dim(p, q);
    append_grid(os, "cell dimensions", dims);
    os << '\n';
    for (int p = 0; p <= k.n(); ++p)
        for (int q = 0; q <= k.n(); ++q)
            os << "A^{" << p << "," << q << "}: dim " << k.cell_dim(p, q)
               << ", rank del " << rank(k.del(p, q))
               << ", rank delbar " << rank(k.delbar(p, q))
               << ", rank del.delbar " << rank(k.ddbar_from(p, q)) << '\n';
    return os.str();
}

std::string render_cells_csv(const DoubleComplex& k) {
    std::ostringstream os;
    os << "p,q,dim,rank_del,rank_delbar,rank_del_delbar\n";
    for (int p = 0; p <= k.n(); ++p)
        for (int q = 0; q <= k.n(); ++q)
            os << p << ',' << q << ',' << k.cell_dim(p, q) << ',' << rank(k.del(p, q))
               << ',' << rank(k.delbar(p, q)) << ',' << rank(k.ddbar_from(p, q)) << '\n';
    return os.str();
}

nlohmann::ordered_json cells_json(const DoubleComplex& k) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (int p = 0; p <= k.n(); ++p)
        for (int q = 0; q <= k.n(); ++q)
            cells.push_back(nlohmann::ordered_json{{"p", p},
                                                   {"q", q},
                                                   {"dim", k.cell_dim(p, q)},
                                                   {"rank_del", rank(k.del(p, q))},
                                                   {"rank_delbar", rank(k.delbar(p, q))},
                                                   {"rank_del_delbar", rank(k.ddbar_from(p, q))}});
    return cells;
}

std::string render_table_csv(const HodgeTable& t, const DiagnosticsReport* diag) {
    std::ostringstream os;
    os << "p,q,h_bc,h_dolb,h_del,h_a,b_k\n";
    for (int p = 0; p <= t.n; ++p)
        for (int q = 0; q <= t.n; ++q) {
            os << p << ',' << q << ',' << t.h_bc[p][q] << ',' << t.h_dolb[p][q] << ',';
            if (t.h_del) os << (*t.h_del)[p][q];
            os << ',' << t.h_a[p][q] << ',' << t.b[p + q] << '\n';
        }
    if (diag) {
        os << "\nk,delta,n_revised,frolicher_gap,at_slack\n";
        for (int k = 0; k <= 2 * t.n; ++k)
            os << k << ',' << diag->delta[k] << ',' << diag->n_revised[k] << ','
               << diag->frolicher_gap[k] << ',' << diag->at_slack[k] << '\n';
    }
    return os.str();
}

std::string render_invariance_text(const InvarianceCheck& c) {
    std::ostringstream os;
    std::vector<std::pair<std::string, std::string>> rows;
    rows.push_back({"initial delta", int_list(c.initial_delta)});
    rows.push_back({"initial N", int_list(c.initial_n)});
    int stage = 0;
    for (const StepOutcome& s : c.steps) {
        ++stage;
        std::string label = "after step " + std::to_string(stage) + " (";
        label += s.step.kind == BlowupStep::Kind::point
                     ? "point"
                     : "curve g=" + std::to_string(s.step.genus);
        label += ")";
        rows.push_back({label, "delta " + int_list(s.delta) + "  N " + int_list(s.n_revised)});
    }
    rows.push_back({"delta invariant", yes_no(c.delta_invariant)});
    rows.push_back({"N invariant", yes_no(c.n_invariant)});
    rows.push_back({"point steps preserve N", yes_no(c.point_steps_preserve_n)});
    append_labeled_rows(os, rows);
    return os.str();
}

std::string render_sweep_text(const SweepReport& r) {
    std::ostringstream os;
    os << "seed " << r.seed << ": " << r.iterations << " trial(s), " << r.failures
       << " failure(s)";
    os << (r.all_ok ? "; delta invariance and point-step N invariance held in every trial"
                    : "") << '\n';
    for (const SweepFailure& f : r.failed_trials)
        os << "  trial " << f.trial << " (seed " << f.trial_seed << "): " << f.detail << '\n';
    if (r.failures > static_cast<int>(r.failed_trials.size()))
        os << "  ... " << r.failures - static_cast<int>(r.failed_trials.size())
           << " further failure(s) not listed\n";
    return os.str();
}

std::string render_sweep_csv(const SweepReport& r) {
    std::ostringstream os;
    os << "trial,trial_seed,detail\n";
    for (const SweepFailure& f : r.failed_trials) {
        std::string quoted = f.detail;
        size_t pos = 0;
        while ((pos = quoted.find('"', pos)) != std::string::npos) {
            quoted.insert(pos, 1, '"');
            pos += 2;
        }
        os << f.trial << ',' << f.trial_seed << ",\"" << quoted << "\"\n";
    }
    return os.str();
}

} // namespace ddbar
