#pragma once

#include "ddbar/hodge_table.hpp"

#include <cstdint>
#include <vector>

namespace ddbar {

/* Blow-up calculus on Hodge tables. The blow-up of a nilmanifold is not a
   nilmanifold, so these operate on dimension tables, which is also the level
   at which the invariance arithmetic runs. All operations return a new
   table; h_del is updated when the inputs carry it and dropped otherwise. */

// Hodge table of a compact curve of the given genus.
HodgeTable curve_table(int genus);

// Blow-up at a point: +1 on the h diagonals at 1 <= p <= n-1 (exceptional
// divisor is projective space), the dual positions of h_a, and even Betti
// numbers 2..2n-2. Requires n >= 2.
HodgeTable blow_up_point(const HodgeTable& t);

// Blow-up along a genus-g curve in a threefold: increments are the curve's
// Dolbeault numbers shifted by (1,1); b_k += b_{k-2}(curve) for k = 2..4.
// Requires n = 3.
HodgeTable blow_up_curve(const HodgeTable& t, int genus);

// General-center formula: every grid gains sum_{i=1..codim-1} of the
// center's grid shifted by (i,i); b_k += sum_i b_{k-2i}(center). Proven for
// codim = n (points) and (n, codim) = (3, 2) (curves); other shapes require
// allow_conjectural and throw ConjecturalError without it.
HodgeTable blow_up_general(const HodgeTable& x, const HodgeTable& center, int codim,
                           bool allow_conjectural);

struct BlowupStep {
    enum class Kind { point, curve };
    Kind kind = Kind::point;
    int genus = 0; // curve steps only
};

struct StepOutcome {
    BlowupStep step;
    std::vector<int> delta;     // after the step
    std::vector<int> n_revised; // after the step
};

struct InvarianceCheck {
    std::vector<int> initial_delta, initial_n;
    std::vector<StepOutcome> steps;
    bool delta_invariant = false;        // every stage matches the initial delta
    bool n_invariant = false;            // every stage matches the initial N
    bool point_steps_preserve_n = false; // N unchanged across each point step

    nlohmann::ordered_json to_json() const;
};

// Applies the steps in order to a threefold table, recording delta and N
// after each stage.
InvarianceCheck check_delta_invariance(const HodgeTable& t,
                                       const std::vector<BlowupStep>& steps);

// Deterministic fuzz table: n = 3, symmetric grids, h^{0,0} = 1, h_a derived
// from h_bc by duality, Poincare-symmetric Betti vector. Draws use
// mt19937_64 with raw modulo so the stream is identical across platforms.
// The Frolicher inequality is deliberately not imposed.
HodgeTable random_threefold_table(uint64_t seed);

struct SweepFailure {
    int trial = 0;
    uint64_t trial_seed = 0;
    std::string detail;
};

struct SweepReport {
    uint64_t seed = 0;
    int iterations = 0;
    int failures = 0;
    std::vector<SweepFailure> failed_trials; // capped at 10 entries
    bool all_ok = false;

    nlohmann::ordered_json to_json() const;
};

// Random tables x random step sequences (length 1..5, genus 0..3), checking
// delta invariance at every step and N invariance across point steps.
SweepReport invariance_sweep(uint64_t seed, int iterations);

} // namespace ddbar
