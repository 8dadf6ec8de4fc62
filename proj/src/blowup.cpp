#include "ddbar/blowup.hpp"

#include "ddbar/diagnostics.hpp"
#include "ddbar/errors.hpp"

#include <random>
#include <sstream>
#include <string>

namespace ddbar {

namespace {

// splitmix64 finalizer; derives independent per-trial seeds from one master.
uint64_t mix_seed(uint64_t a, uint64_t b) {
    uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int grid_shift_sum(const Grid& grid, int p, int q, int shifts) {
    const int m = static_cast<int>(grid.size()) - 1;
    int total = 0;
    for (int i = 1; i <= shifts; ++i) {
        int a = p - i, b = q - i;
        if (a >= 0 && a <= m && b >= 0 && b <= m) total += grid[a][b];
    }
    return total;
}

std::vector<int> delta_vector(const HodgeTable& t) {
    std::vector<int> v;
    for (int k = 0; k <= 2 * t.n; ++k) v.push_back(delta_k(t, k));
    return v;
}

std::vector<int> n_vector(const HodgeTable& t) {
    std::vector<int> v;
    for (int k = 0; k <= 2 * t.n; ++k) v.push_back(n_k(t, k));
    return v;
}

} // namespace

HodgeTable curve_table(int genus) {
    if (genus < 0) throw DimensionError("genus must be nonnegative");
    HodgeTable t;
    t.n = 1;
    Grid grid = {{1, genus}, {genus, 1}};
    t.h_bc = grid;
    t.h_dolb = grid;
    t.h_a = grid;
    t.h_del = grid;
    t.b = {1, 2 * genus, 1};
    return t;
}

HodgeTable blow_up_point(const HodgeTable& t) {
    t.check_shapes();
    if (t.n < 2) throw DimensionError("point blow-up needs n >= 2");
    HodgeTable out = t;
    for (int p = 1; p <= t.n - 1; ++p) {
        out.h_bc[p][p] += 1;
        out.h_dolb[p][p] += 1;
        if (out.h_del) (*out.h_del)[p][p] += 1;
        out.h_a[t.n - p][t.n - p] += 1;
    }
    for (int k = 2; k <= 2 * t.n - 2; k += 2) out.b[k] += 1;
    return out;
}

HodgeTable blow_up_curve(const HodgeTable& t, int genus) {
    t.check_shapes();
    if (t.n != 3) throw DimensionError("curve blow-up is proven for threefolds only");
    if (genus < 0) throw DimensionError("genus must be nonnegative");
    HodgeTable curve = curve_table(genus);
    HodgeTable out = t;
    for (int p = 1; p <= 2; ++p)
        for (int q = 1; q <= 2; ++q) {
            int inc = curve.h_dolb[p - 1][q - 1];
            out.h_bc[p][q] += inc;
            out.h_dolb[p][q] += inc;
            if (out.h_del) (*out.h_del)[p][q] += inc;
            // dual positions; the curve grid is symmetric so this matches
            // the (1,1)-shifted increment as well
            out.h_a[3 - p][3 - q] += inc;
        }
    for (int k = 2; k <= 4; ++k) out.b[k] += curve.b[k - 2];
    return out;
}

HodgeTable blow_up_general(const HodgeTable& x, const HodgeTable& center, int codim,
                           bool allow_conjectural) {
    x.check_shapes();
    center.check_shapes();
    if (codim < 2) throw DimensionError("blow-up codimension must be at least 2");
    if (center.n != x.n - codim)
        throw DimensionError("center dimension " + std::to_string(center.n) +
                             " does not match codimension " + std::to_string(codim) +
                             " in an n = " + std::to_string(x.n) + " table");
    bool proven = codim == x.n || (x.n == 3 && codim == 2);
    if (!proven && !allow_conjectural)
        throw ConjecturalError("blow-up formula for codimension " + std::to_string(codim) +
                               " centers in n = " + std::to_string(x.n) +
                               " is conjectural; pass --allow-conjectural to apply it");

    HodgeTable out = x;
    const int shifts = codim - 1;
    for (int p = 0; p <= x.n; ++p)
        for (int q = 0; q <= x.n; ++q) {
            out.h_bc[p][q] += grid_shift_sum(center.h_bc, p, q, shifts);
            out.h_dolb[p][q] += grid_shift_sum(center.h_dolb, p, q, shifts);
            out.h_a[p][q] += grid_shift_sum(center.h_a, p, q, shifts);
            if (out.h_del && center.h_del)
                (*out.h_del)[p][q] += grid_shift_sum(*center.h_del, p, q, shifts);
        }
    if (out.h_del && !center.h_del) out.h_del.reset();
    for (int k = 0; k <= 2 * x.n; ++k) {
        int inc = 0;
        for (int i = 1; i <= shifts; ++i) {
            int j = k - 2 * i;
            if (j >= 0 && j <= 2 * center.n) inc += center.b[j];
        }
        out.b[k] += inc;
    }

    for (int p = 0; p <= x.n; ++p)
        if (out.h_bc[p][0] != x.h_bc[p][0] || out.h_bc[0][p] != x.h_bc[0][p])
            throw InternalError("blow-up changed an h^{p,0}/h^{0,q} entry; the "
                                "increment arithmetic is broken");
    return out;
}

InvarianceCheck check_delta_invariance(const HodgeTable& t,
                                       const std::vector<BlowupStep>& steps) {
    t.check_shapes();
    if (t.n != 3) throw DimensionError("invariance sequences are defined for threefolds");
    InvarianceCheck check;
    check.initial_delta = delta_vector(t);
    check.initial_n = n_vector(t);
    check.delta_invariant = true;
    check.n_invariant = true;
    check.point_steps_preserve_n = true;

    HodgeTable current = t;
    std::vector<int> previous_n = check.initial_n;
    for (const BlowupStep& step : steps) {
        current = step.kind == BlowupStep::Kind::point ? blow_up_point(current)
                                                       : blow_up_curve(current, step.genus);
        StepOutcome outcome;
        outcome.step = step;
        outcome.delta = delta_vector(current);
        outcome.n_revised = n_vector(current);
        if (outcome.delta != check.initial_delta) check.delta_invariant = false;
        if (outcome.n_revised != check.initial_n) check.n_invariant = false;
        if (step.kind == BlowupStep::Kind::point && outcome.n_revised != previous_n)
            check.point_steps_preserve_n = false;
        previous_n = outcome.n_revised;
        check.steps.push_back(std::move(outcome));
    }
    return check;
}

nlohmann::ordered_json InvarianceCheck::to_json() const {
    nlohmann::ordered_json doc;
    doc["initial_delta"] = initial_delta;
    doc["initial_n"] = initial_n;
    nlohmann::ordered_json steps_doc = nlohmann::ordered_json::array();
    for (const StepOutcome& s : steps) {
        nlohmann::ordered_json step_doc;
        step_doc["kind"] = s.step.kind == BlowupStep::Kind::point ? "point" : "curve";
        if (s.step.kind == BlowupStep::Kind::curve) step_doc["genus"] = s.step.genus;
        step_doc["delta"] = s.delta;
        step_doc["n_revised"] = s.n_revised;
        steps_doc.push_back(std::move(step_doc));
    }
    doc["steps"] = std::move(steps_doc);
    doc["delta_invariant"] = delta_invariant;
    doc["n_invariant"] = n_invariant;
    doc["point_steps_preserve_n"] = point_steps_preserve_n;
    return doc;
}

HodgeTable random_threefold_table(uint64_t seed) {
    std::mt19937_64 rng(seed);
    // raw modulo on the 64-bit stream; std distributions vary by platform
    auto draw = [&](int bound) { return static_cast<int>(rng() % static_cast<uint64_t>(bound)); };

    HodgeTable t;
    t.n = 3;
    t.h_bc.assign(4, std::vector<int>(4, 0));
    for (int p = 0; p <= 3; ++p)
        for (int q = p; q <= 3; ++q) {
            int v = draw(7);
            t.h_bc[p][q] = v;
            t.h_bc[q][p] = v;
        }
    t.h_bc[0][0] = 1;

    t.h_a.assign(4, std::vector<int>(4, 0));
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) t.h_a[a][b] = t.h_bc[3 - a][3 - b];

    t.h_dolb.assign(4, std::vector<int>(4, 0));
    for (int p = 0; p <= 3; ++p)
        for (int q = p; q <= 3; ++q) {
            int v = draw(7);
            t.h_dolb[p][q] = v;
            t.h_dolb[q][p] = v;
        }
    t.h_dolb[0][0] = 1;
    t.h_del = t.h_dolb; // symmetric grid, so transpose equals itself

    t.b.assign(7, 0);
    t.b[0] = t.b[6] = 1;
    t.b[1] = t.b[5] = draw(9);
    t.b[2] = t.b[4] = draw(12);
    t.b[3] = draw(15);

    t.check_shapes();
    return t;
}

SweepReport invariance_sweep(uint64_t seed, int iterations) {
    if (iterations < 0) throw DimensionError("iteration count must be nonnegative");
    SweepReport report;
    report.seed = seed;
    report.iterations = iterations;
    for (int trial = 0; trial < iterations; ++trial) {
        uint64_t trial_seed = mix_seed(seed, static_cast<uint64_t>(trial));
        HodgeTable t = random_threefold_table(trial_seed);
        std::mt19937_64 rng(mix_seed(trial_seed, 0x6a09e667f3bcc909ULL));
        int count = 1 + static_cast<int>(rng() % 5);
        std::vector<BlowupStep> steps;
        for (int s = 0; s < count; ++s) {
            BlowupStep step;
            step.kind = rng() % 2 == 0 ? BlowupStep::Kind::point : BlowupStep::Kind::curve;
            step.genus = step.kind == BlowupStep::Kind::curve
                             ? static_cast<int>(rng() % 4)
                             : 0;
            steps.push_back(step);
        }
        InvarianceCheck check = check_delta_invariance(t, steps);
        if (!check.delta_invariant || !check.point_steps_preserve_n) {
            ++report.failures;
            if (report.failed_trials.size() < 10) {
                std::ostringstream os;
                os << "trial " << trial << ": delta_invariant=" << check.delta_invariant
                   << " point_steps_preserve_n=" << check.point_steps_preserve_n
                   << " over " << steps.size() << " step(s)";
                report.failed_trials.push_back({trial, trial_seed, os.str()});
            }
        }
    }
    report.all_ok = report.failures == 0;
    return report;
}

nlohmann::ordered_json SweepReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["seed"] = seed;
    doc["iterations"] = iterations;
    doc["failures"] = failures;
    doc["all_ok"] = all_ok;
    nlohmann::ordered_json failed = nlohmann::ordered_json::array();
    for (const SweepFailure& f : failed_trials)
        failed.push_back(nlohmann::ordered_json{
            {"trial", f.trial}, {"trial_seed", f.trial_seed}, {"detail", f.detail}});
    doc["failed_trials"] = std::move(failed);
    return doc;
}

} // namespace ddbar
