#pragma once

#include "ddbar/blowup.hpp"
#include "ddbar/diagnostics.hpp"
#include "ddbar/double_complex.hpp"
#include "ddbar/hodge_table.hpp"

#include <string>

namespace ddbar {

/* Plain-text and CSV renderers. All output is deterministic: fixed label
   order, fixed column widths derived from the data, ASCII only. */

// The four dimension grids plus the Betti row.
std::string render_table_text(const HodgeTable& t);

// Degree diagnostics. Delta rows are paired as delta^k = delta^{2n-k} when
// the Betti vector is symmetric (the two are equal exactly then); the
// verdict block is included only for reports computed from a complex.
std::string render_diagnostics_text(const DiagnosticsReport& r, bool include_verdict);

// Cell dimensions and the ranks of del, delbar and del.delbar out of each
// cell (the --show-cells payload), in the three output formats.
std::string render_cells_text(const DoubleComplex& k);
std::string render_cells_csv(const DoubleComplex& k);
nlohmann::ordered_json cells_json(const DoubleComplex& k);

// One row per (p,q) cell: p,q,h_bc,h_dolb,h_del,h_a,b_{p+q}. With a
// diagnostics report, a per-degree block follows after a blank line.
std::string render_table_csv(const HodgeTable& t, const DiagnosticsReport* diag);

// Per-step delta / N trace of one blow-up sequence.
std::string render_invariance_text(const InvarianceCheck& c);

// Sweep summary; failures listed up to the report's cap.
std::string render_sweep_text(const SweepReport& r);
std::string render_sweep_csv(const SweepReport& r);

} // namespace ddbar
