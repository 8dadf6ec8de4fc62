#include "ddbar/double_complex.hpp"

#include "ddbar/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace ddbar {

namespace {

std::string cell_name(int p, int q) {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

void check_grid_shape(int n, size_t outer, const char* what) {
    if (outer != static_cast<size_t>(n + 1))
        throw DimensionError(std::string(what) + " grid must have n+1 rows");
}

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) {
            const Complex& z = m.at(i, j);
            row.push_back({format_rational(z.re), format_rational(z.im)});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& doc, int rows, int cols,
                        const std::string& where) {
    if (!doc.is_array() || doc.size() != static_cast<size_t>(rows))
        throw ParseError("matrix at " + where + " must have " + std::to_string(rows) +
                         " rows");
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = doc[i];
        if (!row.is_array() || row.size() != static_cast<size_t>(cols))
            throw ParseError("matrix row " + std::to_string(i) + " at " + where +
                             " must have " + std::to_string(cols) + " entries");
        for (int j = 0; j < cols; ++j) {
            const auto& e = row[j];
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") at " + where + " must be a pair of rational strings");
            m.at(i, j) = Complex(parse_rational(e[0].get<std::string>()),
                                 parse_rational(e[1].get<std::string>()));
        }
    }
    return m;
}

} // namespace

std::string JacobiReport::summary() const {
    if (ok) return "all identities hold";
    std::ostringstream os;
    os << failures.size() << " identity failure(s); first: " << failures[0].identity
       << " at cell " << cell_name(failures[0].p, failures[0].q);
    return os.str();
}

DoubleComplex::DoubleComplex(int n, std::vector<std::vector<int>> dims,
                             std::vector<std::vector<Matrix>> del,
                             std::vector<std::vector<Matrix>> delbar,
                             std::optional<std::vector<std::vector<Matrix>>> sigma)
    : n_(n), dims_(std::move(dims)), del_(std::move(del)), delbar_(std::move(delbar)),
      sigma_(std::move(sigma)) {
    if (n_ < 0) throw DimensionError("complex dimension must be nonnegative");
    check_grid_shape(n_, dims_.size(), "dimension");
    check_grid_shape(n_, del_.size(), "del");
    check_grid_shape(n_, delbar_.size(), "delbar");
    if (sigma_) check_grid_shape(n_, sigma_->size(), "sigma");
    for (int p = 0; p <= n_; ++p) {
        check_grid_shape(n_, dims_[p].size(), "dimension");
        check_grid_shape(n_, del_[p].size(), "del");
        check_grid_shape(n_, delbar_[p].size(), "delbar");
        if (sigma_) check_grid_shape(n_, (*sigma_)[p].size(), "sigma");
        for (int q = 0; q <= n_; ++q) {
            if (dims_[p][q] < 0)
                throw DimensionError("negative cell dimension at " + cell_name(p, q));
            const Matrix& d = del_[p][q];
            if (d.rows() != cell_dim(p + 1, q) || d.cols() != dims_[p][q])
                throw DimensionError("del shape mismatch at " + cell_name(p, q));
            const Matrix& db = delbar_[p][q];
            if (db.rows() != cell_dim(p, q + 1) || db.cols() != dims_[p][q])
                throw DimensionError("delbar shape mismatch at " + cell_name(p, q));
            if (sigma_) {
                const Matrix& s = (*sigma_)[p][q];
                if (s.rows() != dims_[q][p] || s.cols() != dims_[p][q])
                    throw DimensionError("sigma shape mismatch at " + cell_name(p, q));
            }
        }
    }
}

int DoubleComplex::cell_dim(int p, int q) const {
    return in_grid(p, q) ? dims_[p][q] : 0;
}

int DoubleComplex::total_dim() const {
    int total = 0;
    for (int p = 0; p <= n_; ++p)
        for (int q = 0; q <= n_; ++q) total += dims_[p][q];
    return total;
}

Matrix DoubleComplex::del(int p, int q) const {
    if (!in_grid(p, q)) return Matrix(cell_dim(p + 1, q), 0);
    return del_[p][q];
}

Matrix DoubleComplex::delbar(int p, int q) const {
    if (!in_grid(p, q)) return Matrix(cell_dim(p, q + 1), 0);
    return delbar_[p][q];
}

Matrix DoubleComplex::sigma(int p, int q) const {
    if (!sigma_) throw InternalError("sigma requested on a complex without one");
    if (!in_grid(p, q)) return Matrix(cell_dim(q, p), 0);
    return (*sigma_)[p][q];
}

Matrix DoubleComplex::ddbar_into(int p, int q) const {
    return del(p - 1, q) * delbar(p - 1, q - 1);
}

Matrix DoubleComplex::ddbar_from(int p, int q) const {
    return del(p, q + 1) * delbar(p, q);
}

JacobiReport DoubleComplex::validate_jacobi() const {
    JacobiReport report;
    auto record = [&](int p, int q, const char* identity) {
        report.ok = false;
        report.failures.push_back({p, q, identity});
    };
    for (int p = 0; p <= n_; ++p)
        for (int q = 0; q <= n_; ++q) {
            if (!(del(p + 1, q) * del(p, q)).is_zero()) record(p, q, "del_del");
            if (!(delbar(p, q + 1) * delbar(p, q)).is_zero()) record(p, q, "delbar_delbar");
            if (!(del(p, q + 1) * delbar(p, q) + delbar(p + 1, q) * del(p, q)).is_zero())
                record(p, q, "anticommute");
            if (sigma_) {
                if (!(sigma(q, p) * sigma(p, q).conjugate() == Matrix::identity(dims_[p][q])))
                    record(p, q, "sigma_involution");
                if (!(sigma(p + 1, q) * del(p, q).conjugate() ==
                      delbar(q, p) * sigma(p, q)))
                    record(p, q, "sigma_intertwine");
            }
        }
    return report;
}

nlohmann::ordered_json DoubleComplex::to_json() const {
    nlohmann::ordered_json doc;
    doc["n"] = n_;
    doc["dim"] = dims_;
    auto grid_out = [&](const std::vector<std::vector<Matrix>>& grid) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int p = 0; p <= n_; ++p) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int q = 0; q <= n_; ++q) row.push_back(matrix_to_json(grid[p][q]));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    doc["del"] = grid_out(del_);
    doc["delbar"] = grid_out(delbar_);
    if (sigma_) doc["sigma"] = grid_out(*sigma_);
    return doc;
}

DoubleComplex DoubleComplex::from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("double complex document must be an object");
    static const std::set<std::string> known = {"n", "dim", "del", "delbar", "sigma"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!known.count(it.key()))
            throw ParseError("unknown key in double complex document: \"" + it.key() + "\"");
    for (const char* key : {"n", "dim", "del", "delbar"})
        if (!doc.contains(key))
            throw ParseError(std::string("double complex document missing \"") + key + "\"");
    if (!doc["n"].is_number_integer() || doc["n"].get<int>() < 0)
        throw ParseError("\"n\" must be a nonnegative integer");
    int n = doc["n"].get<int>();

    const auto& dim_doc = doc["dim"];
    if (!dim_doc.is_array() || dim_doc.size() != static_cast<size_t>(n + 1))
        throw ParseError("\"dim\" must be an (n+1) x (n+1) grid");
    std::vector<std::vector<int>> dims(n + 1, std::vector<int>(n + 1));
    for (int p = 0; p <= n; ++p) {
        const auto& row = dim_doc[p];
        if (!row.is_array() || row.size() != static_cast<size_t>(n + 1))
            throw ParseError("\"dim\" must be an (n+1) x (n+1) grid");
        for (int q = 0; q <= n; ++q) {
            if (!row[q].is_number_integer() || row[q].get<int>() < 0)
                throw ParseError("cell dimension at " + cell_name(p, q) +
                                 " must be a nonnegative integer");
            dims[p][q] = row[q].get<int>();
        }
    }
    auto dim_at = [&](int p, int q) {
        return (p >= 0 && p <= n && q >= 0 && q <= n) ? dims[p][q] : 0;
    };
    auto grid_in = [&](const char* key, auto target_dim) {
        const auto& grid_doc = doc[key];
        if (!grid_doc.is_array() || grid_doc.size() != static_cast<size_t>(n + 1))
            throw ParseError(std::string("\"") + key + "\" must be an (n+1) x (n+1) grid");
        std::vector<std::vector<Matrix>> grid(n + 1);
        for (int p = 0; p <= n; ++p) {
            const auto& row = grid_doc[p];
            if (!row.is_array() || row.size() != static_cast<size_t>(n + 1))
                throw ParseError(std::string("\"") + key +
                                 "\" must be an (n+1) x (n+1) grid");
            for (int q = 0; q <= n; ++q)
                grid[p].push_back(matrix_from_json(row[q], target_dim(p, q), dims[p][q],
                                                   std::string(key) + cell_name(p, q)));
        }
        return grid;
    };
    auto del = grid_in("del", [&](int p, int q) { return dim_at(p + 1, q); });
    auto delbar = grid_in("delbar", [&](int p, int q) { return dim_at(p, q + 1); });
    std::optional<std::vector<std::vector<Matrix>>> sigma;
    if (doc.contains("sigma"))
        sigma = grid_in("sigma", [&](int p, int q) { return dim_at(q, p); });

    try {
        return DoubleComplex(n, std::move(dims), std::move(del), std::move(delbar),
                             std::move(sigma));
    } catch (const DimensionError& e) {
        throw ParseError(std::string("invalid double complex document: ") + e.what());
    }
}

DoubleComplex DoubleComplex::from_file(const std::string& path) {
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

std::vector<std::pair<int, int>> cells_of_degree(int n, int k) {
    std::vector<std::pair<int, int>> cells;
    for (int p = std::max(0, k - n); p <= std::min(n, k); ++p) cells.push_back({p, k - p});
    return cells;
}

TotalComplex totalize(const DoubleComplex& k) {
    JacobiReport report = k.validate_jacobi();
    if (!report.ok)
        throw InvalidComplexError("cannot totalize: " + report.summary());

    const int n = k.n();
    TotalComplex total;
    total.n = n;
    total.dim.resize(2 * n + 1, 0);
    for (int deg = 0; deg <= 2 * n; ++deg)
        for (auto [p, q] : cells_of_degree(n, deg)) total.dim[deg] += k.cell_dim(p, q);

    auto offsets_of = [&](int deg) {
        std::vector<std::pair<std::pair<int, int>, int>> offsets;
        int at = 0;
        for (auto cell : cells_of_degree(n, deg)) {
            offsets.push_back({cell, at});
            at += k.cell_dim(cell.first, cell.second);
        }
        return offsets;
    };

    total.d.reserve(2 * n + 1);
    for (int deg = 0; deg <= 2 * n; ++deg) {
        int target_dim = deg + 1 <= 2 * n ? total.dim[deg + 1] : 0;
        Matrix d(target_dim, total.dim[deg]);
        auto src = offsets_of(deg);
        auto tgt = offsets_of(deg + 1);
        auto target_offset = [&](int p, int q) -> int {
            for (const auto& [cell, off] : tgt)
                if (cell.first == p && cell.second == q) return off;
            return -1;
        };
        for (const auto& [cell, src_off] : src) {
            auto [p, q] = cell;
            auto place = [&](const Matrix& block, int tp, int tq) {
                int tgt_off = target_offset(tp, tq);
                if (tgt_off < 0) return;
                for (int i = 0; i < block.rows(); ++i)
                    for (int j = 0; j < block.cols(); ++j)
                        d.at(tgt_off + i, src_off + j) = block.at(i, j);
            };
            place(k.del(p, q), p + 1, q);
            place(k.delbar(p, q), p, q + 1);
        }
        total.d.push_back(std::move(d));
    }

    for (int deg = 0; deg + 1 <= 2 * n; ++deg)
        if (!(total.d[deg + 1] * total.d[deg]).is_zero())
            throw InternalError("totalization violates d^2 = 0 although the bidegree "
                                "identities hold; block assembly is broken");
    return total;
}

} // namespace ddbar
