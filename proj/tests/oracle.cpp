#include "oracle.hpp"

#include <algorithm>
#include <random>

namespace ddbar::testing {

namespace {

constexpr size_t npos = static_cast<size_t>(-1);

size_t first_nonzero(const std::vector<Complex>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return npos;
}

Complex det(const Matrix& m, std::vector<int> rows, std::vector<int> cols) {
    if (rows.empty()) return Complex(1);
    Complex total;
    const int r0 = rows.front();
    std::vector<int> rest(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < cols.size(); ++j) {
        const Complex& entry = m.at(r0, cols[j]);
        if (entry.is_zero()) continue;
        std::vector<int> sub;
        for (size_t t = 0; t < cols.size(); ++t)
            if (t != j) sub.push_back(cols[t]);
        Complex minor = det(m, rest, sub);
        Complex term = entry * minor;
        total += j % 2 == 0 ? term : -term;
    }
    return total;
}

bool next_combination(std::vector<int>& c, int limit) {
    const int r = static_cast<int>(c.size());
    for (int i = r - 1; i >= 0; --i) {
        if (c[i] < limit - (r - i)) {
            ++c[i];
            for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::vector<Complex>> matrix_columns(const Matrix& m) {
    std::vector<std::vector<Complex>> cols;
    for (int c = 0; c < m.cols(); ++c) {
        std::vector<Complex> v(m.rows());
        for (int r = 0; r < m.rows(); ++r) v[r] = m.at(r, c);
        cols.push_back(std::move(v));
    }
    return cols;
}

// cocycles and coboundaries in the same ambient space -> quotient dimension
int quotient_dim(const std::vector<std::vector<Complex>>& cocycles,
                 const std::vector<std::vector<Complex>>& coboundaries, uint64_t seed) {
    std::vector<std::vector<Complex>> joint = coboundaries;
    joint.insert(joint.end(), cocycles.begin(), cocycles.end());
    return span_dim(std::move(joint), seed) -
           span_dim(coboundaries, seed ^ 0x9e3779b97f4a7c15ULL);
}

// rows of a stacked on top of rows of b, assembled by hand
Matrix stack_rows(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() + b.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) out.at(a.rows() + r, c) = b.at(r, c);
    return out;
}

// plain triple-loop product, assembled by hand
Matrix product(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) {
            Complex sum;
            for (int t = 0; t < a.cols(); ++t) sum += a.at(r, t) * b.at(t, c);
            out.at(r, c) = sum;
        }
    return out;
}

// cells of total degree deg in ascending p, with block offsets
std::vector<std::pair<int, int>> degree_cells(const DoubleComplex& k, int deg) {
    std::vector<std::pair<int, int>> cells;
    for (int p = 0; p <= k.n(); ++p) {
        int q = deg - p;
        if (q >= 0 && q <= k.n()) cells.push_back({p, q});
    }
    return cells;
}

int degree_dim(const DoubleComplex& k, int deg) {
    int total = 0;
    for (auto [p, q] : degree_cells(k, deg)) total += k.cell_dim(p, q);
    return total;
}

// the total differential T^deg -> T^{deg+1}, assembled block by block
Matrix total_d(const DoubleComplex& k, int deg) {
    if (deg < 0 || deg > 2 * k.n()) return Matrix(0, 0);
    Matrix out(degree_dim(k, deg + 1), degree_dim(k, deg));
    int col_off = 0;
    for (auto [p, q] : degree_cells(k, deg)) {
        int row_off = 0;
        for (auto [tp, tq] : degree_cells(k, deg + 1)) {
            const bool is_del = tp == p + 1 && tq == q;
            const bool is_delbar = tp == p && tq == q + 1;
            if (is_del || is_delbar) {
                Matrix block = is_del ? k.del(p, q) : k.delbar(p, q);
                for (int r = 0; r < block.rows(); ++r)
                    for (int c = 0; c < block.cols(); ++c)
                        out.at(row_off + r, col_off + c) = block.at(r, c);
            }
            row_off += k.cell_dim(tp, tq);
        }
        col_off += k.cell_dim(p, q);
    }
    return out;
}

} // namespace

int minor_rank(const Matrix& m) {
    for (int r = std::min(m.rows(), m.cols()); r >= 1; --r) {
        std::vector<int> rows(r), cols(r);
        for (int i = 0; i < r; ++i) rows[i] = i;
        do {
            for (int i = 0; i < r; ++i) cols[i] = i;
            do {
                if (!det(m, rows, cols).is_zero()) return r;
            } while (next_combination(cols, m.cols()));
        } while (next_combination(rows, m.rows()));
    }
    return 0;
}

int span_dim(std::vector<std::vector<Complex>> vectors, uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (size_t i = vectors.size(); i > 1; --i)
        std::swap(vectors[i - 1], vectors[rng() % i]);

    std::vector<std::pair<size_t, std::vector<Complex>>> kept; // (lead, vector)
    for (auto& v : vectors) {
        size_t lead = first_nonzero(v);
        bool reduced = true;
        while (reduced && lead != npos) {
            reduced = false;
            for (const auto& [kl, kv] : kept) {
                if (kl != lead) continue;
                Complex f = v[lead] / kv[lead];
                for (size_t j = lead; j < v.size(); ++j) v[j] -= f * kv[j];
                lead = first_nonzero(v);
                reduced = true;
                break;
            }
        }
        if (lead != npos) kept.push_back({lead, std::move(v)});
    }
    return static_cast<int>(kept.size());
}

std::vector<std::vector<Complex>> kernel_vectors(const Matrix& m) {
    const int R = m.rows(), C = m.cols();
    std::vector<std::vector<Complex>> cols = matrix_columns(m);
    std::vector<std::vector<Complex>> combo(C, std::vector<Complex>(C));
    for (int c = 0; c < C; ++c) combo[c][c] = Complex(1);

    int done = 0;
    for (int r = 0; r < R && done < C; ++r) {
        int pivot = -1;
        for (int c = done; c < C; ++c)
            if (!cols[c][r].is_zero()) {
                pivot = c;
                break;
            }
        if (pivot < 0) continue;
        std::swap(cols[done], cols[pivot]);
        std::swap(combo[done], combo[pivot]);
        for (int c = 0; c < C; ++c) {
            if (c == done || cols[c][r].is_zero()) continue;
            Complex f = cols[c][r] / cols[done][r];
            for (int i = 0; i < R; ++i) cols[c][i] -= f * cols[done][i];
            for (int i = 0; i < C; ++i) combo[c][i] -= f * combo[done][i];
        }
        ++done;
    }
    return {combo.begin() + done, combo.end()};
}

int h_dolb(const DoubleComplex& k, int p, int q, uint64_t seed) {
    return quotient_dim(kernel_vectors(k.delbar(p, q)),
                        matrix_columns(k.delbar(p, q - 1)), seed);
}

int h_del(const DoubleComplex& k, int p, int q, uint64_t seed) {
    return quotient_dim(kernel_vectors(k.del(p, q)), matrix_columns(k.del(p - 1, q)), seed);
}

int h_bc(const DoubleComplex& k, int p, int q, uint64_t seed) {
    return quotient_dim(kernel_vectors(stack_rows(k.del(p, q), k.delbar(p, q))),
                        matrix_columns(product(k.del(p - 1, q), k.delbar(p - 1, q - 1))),
                        seed);
}

int h_a(const DoubleComplex& k, int p, int q, uint64_t seed) {
    std::vector<std::vector<Complex>> cobound = matrix_columns(k.del(p - 1, q));
    for (auto& v : matrix_columns(k.delbar(p, q - 1))) cobound.push_back(std::move(v));
    return quotient_dim(kernel_vectors(product(k.del(p, q + 1), k.delbar(p, q))), cobound,
                        seed);
}

int betti(const DoubleComplex& k, int deg, uint64_t seed) {
    std::vector<std::vector<Complex>> cobound;
    if (deg > 0)
        cobound = matrix_columns(total_d(k, deg - 1));
    else
        cobound = {};
    return quotient_dim(kernel_vectors(total_d(k, deg)), cobound, seed);
}

} // namespace ddbar::testing
