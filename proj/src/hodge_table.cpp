#include "ddbar/hodge_table.hpp"

#include "ddbar/errors.hpp"

#include <fstream>
#include <set>

namespace ddbar {

namespace {

void check_grid(const Grid& grid, int n, const char* name) {
    if (grid.size() != static_cast<size_t>(n + 1))
        throw DimensionError(std::string(name) + " grid must have n+1 rows");
    for (const auto& row : grid) {
        if (row.size() != static_cast<size_t>(n + 1))
            throw DimensionError(std::string(name) + " grid must have n+1 columns");
        for (int v : row)
            if (v < 0) throw DimensionError(std::string(name) + " entries must be nonnegative");
    }
}

Grid grid_from_json(const nlohmann::json& doc, const char* name) {
    if (!doc.is_array()) throw ParseError(std::string("\"") + name + "\" must be a grid");
    Grid grid;
    for (const auto& row_doc : doc) {
        if (!row_doc.is_array())
            throw ParseError(std::string("\"") + name + "\" must be a grid");
        std::vector<int> row;
        for (const auto& v : row_doc) {
            if (!v.is_number_integer())
                throw ParseError(std::string("\"") + name + "\" entries must be integers");
            row.push_back(v.get<int>());
        }
        grid.push_back(std::move(row));
    }
    return grid;
}

} // namespace

void HodgeTable::check_shapes() const {
    if (n < 0) throw DimensionError("table dimension must be nonnegative");
    check_grid(h_bc, n, "h_bc");
    check_grid(h_dolb, n, "h_dolb");
    check_grid(h_a, n, "h_a");
    if (h_del) check_grid(*h_del, n, "h_del");
    if (b.size() != static_cast<size_t>(2 * n + 1))
        throw DimensionError("betti vector must have length 2n+1");
    for (int v : b)
        if (v < 0) throw DimensionError("betti numbers must be nonnegative");
}

nlohmann::ordered_json HodgeTable::to_json() const {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["h_bc"] = h_bc;
    doc["h_dolb"] = h_dolb;
    if (h_del) doc["h_del"] = *h_del;
    doc["h_a"] = h_a;
    doc["b"] = b;
    return doc;
}

HodgeTable HodgeTable::from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("hodge table document must be an object");
    if (doc.contains("hodge_table")) return from_json(doc["hodge_table"]);
    static const std::set<std::string> known = {"n", "h_bc", "h_dolb", "h_del", "h_a", "b"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!known.count(it.key()))
            throw ParseError("unknown key in hodge table document: \"" + it.key() + "\"");
    for (const char* key : {"n", "h_bc", "h_dolb", "h_a", "b"})
        if (!doc.contains(key))
            throw ParseError(std::string("hodge table document missing \"") + key + "\"");
    if (!doc["n"].is_number_integer())
        throw ParseError("\"n\" must be an integer");
    HodgeTable t;
    t.n = doc["n"].get<int>();
    t.h_bc = grid_from_json(doc["h_bc"], "h_bc");
    t.h_dolb = grid_from_json(doc["h_dolb"], "h_dolb");
    t.h_a = grid_from_json(doc["h_a"], "h_a");
    if (doc.contains("h_del")) t.h_del = grid_from_json(doc["h_del"], "h_del");
    if (!doc["b"].is_array()) throw ParseError("\"b\" must be an array");
    for (const auto& v : doc["b"]) {
        if (!v.is_number_integer()) throw ParseError("\"b\" entries must be integers");
        t.b.push_back(v.get<int>());
    }
    try {
        t.check_shapes();
    } catch (const DimensionError& e) {
        throw ParseError(std::string("invalid hodge table document: ") + e.what());
    }
    return t;
}

HodgeTable HodgeTable::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return from_json(doc);
}

int degree_sum(const Grid& grid, int k) {
    const int n = static_cast<int>(grid.size()) - 1;
    int total = 0;
    for (int p = std::max(0, k - n); p <= std::min(n, k); ++p) total += grid[p][k - p];
    return total;
}

} // namespace ddbar
