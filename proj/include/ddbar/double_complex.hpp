#pragma once

#include "ddbar/matrix.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ddbar {

struct JacobiFailure {
    int p, q;
    std::string identity; // del_del, delbar_delbar, anticommute, sigma_*
};

struct JacobiReport {
    bool ok = true;
    std::vector<JacobiFailure> failures;
    std::string summary() const;
};

// Bounded double complex: cells A^{p,q} for 0 <= p,q <= n with differentials
// del: A^{p,q} -> A^{p+1,q} and delbar: A^{p,q} -> A^{p,q+1}, plus an optional
// anti-linear conjugation sigma: A^{p,q} -> A^{q,p} (matrix applied after
// entrywise scalar conjugation of the argument). Cells outside the grid are
// zero-dimensional and every accessor is total on them.
class DoubleComplex {
public:
    DoubleComplex(int n, std::vector<std::vector<int>> dims,
                  std::vector<std::vector<Matrix>> del,
                  std::vector<std::vector<Matrix>> delbar,
                  std::optional<std::vector<std::vector<Matrix>>> sigma = std::nullopt);

    int n() const { return n_; }
    int cell_dim(int p, int q) const;
    int total_dim() const;

    // Differentials leaving (p,q); zero-shaped when source or target is
    // outside the grid.
    Matrix del(int p, int q) const;
    Matrix delbar(int p, int q) const;

    bool has_sigma() const { return sigma_.has_value(); }
    Matrix sigma(int p, int q) const; // shape dim(q,p) x dim(p,q)

    // Composite del(delbar(.)) landing in (p,q) from (p-1,q-1), and leaving
    // (p,q) toward (p+1,q+1).
    Matrix ddbar_into(int p, int q) const;
    Matrix ddbar_from(int p, int q) const;

    // Per-cell pass/fail for del^2 = 0, delbar^2 = 0, del delbar + delbar del
    // = 0, and (when sigma is present) sigma^2 = id and the sigma/del/delbar
    // intertwine identity.
    JacobiReport validate_jacobi() const;

    nlohmann::ordered_json to_json() const;
    static DoubleComplex from_json(const nlohmann::json& doc); // ParseError
    static DoubleComplex from_file(const std::string& path);

private:
    bool in_grid(int p, int q) const { return p >= 0 && p <= n_ && q >= 0 && q <= n_; }

    int n_;
    std::vector<std::vector<int>> dims_;
    std::vector<std::vector<Matrix>> del_, delbar_;
    std::optional<std::vector<std::vector<Matrix>>> sigma_;
};

// Totalization T^k = direct sum of A^{p,q} with p+q = k, blocks ordered by
// ascending p.
struct TotalComplex {
    int n = 0;
    std::vector<int> dim;  // length 2n+1
    std::vector<Matrix> d; // d[k]: T^k -> T^{k+1}; d[2n] has zero rows
};

std::vector<std::pair<int, int>> cells_of_degree(int n, int k);

// InvalidComplexError when validate_jacobi fails; asserts d^2 = 0 on the
// assembled blocks as a cross-check.
TotalComplex totalize(const DoubleComplex& k);

} // namespace ddbar
