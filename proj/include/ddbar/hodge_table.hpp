#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ddbar {

using Grid = std::vector<std::vector<int>>; // (n+1) x (n+1)

// Per-manifold summary: cohomology dimension grids and Betti numbers for a
// fixed complex dimension n. h_del is known for engine-computed tables, and
// optional for file-borne ones (the serialized format does not require it).
struct HodgeTable {
    int n = 0;
    Grid h_bc, h_dolb, h_a;
    std::optional<Grid> h_del;
    std::vector<int> b; // length 2n+1

    void check_shapes() const; // DimensionError

    nlohmann::ordered_json to_json() const;
    // Accepts either a bare table object or an envelope containing a
    // "hodge_table" key (the analyze command's JSON output).
    static HodgeTable from_json(const nlohmann::json& doc);
    static HodgeTable from_file(const std::string& path);
};

// Sum of grid entries on the antidiagonal p + q = k.
int degree_sum(const Grid& grid, int k);

} // namespace ddbar
