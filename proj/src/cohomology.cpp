#include "ddbar/cohomology.hpp"

#include "ddbar/errors.hpp"

#include <string>

namespace ddbar {

namespace {

void check_cell(const DoubleComplex& k, int p, int q) {
    if (p < 0 || p > k.n() || q < 0 || q > k.n())
        throw DimensionError("cell (" + std::to_string(p) + "," + std::to_string(q) +
                             ") out of range for n = " + std::to_string(k.n()));
}

void check_degree(const DoubleComplex& k, int deg) {
    if (deg < 0 || deg > 2 * k.n())
        throw DimensionError("degree " + std::to_string(deg) +
                             " out of range for n = " + std::to_string(k.n()));
}

void insert_columns(SpanTracker& tracker, const Matrix& m) {
    for (int c = 0; c < m.cols(); ++c) tracker.insert(m.column(c));
}

// Basis of ker del ^ ker delbar at (p,q), as columns.
Matrix bc_cocycle_basis(const DoubleComplex& k, int p, int q) {
    return kernel_basis(vstack(k.del(p, q), k.delbar(p, q)));
}

// Coboundary generators of the target cohomology at (p,q), as columns.
Matrix target_coboundaries(const DoubleComplex& k, int p, int q, CohTarget target) {
    switch (target) {
    case CohTarget::dolbeault:
        return k.delbar(p, q - 1);
    case CohTarget::del:
        return k.del(p - 1, q);
    case CohTarget::aeppli:
        return hstack(k.del(p - 1, q), k.delbar(p, q - 1));
    case CohTarget::de_rham:
        break;
    }
    throw DimensionError("de Rham target takes a total degree, not a bidegree");
}

// rank of the induced map on quotients: representatives of the source
// cohomology (source cocycles modulo source coboundaries) counted by how
// much they grow the span of the target coboundaries.
int induced_rank(const Matrix& source_cocycles, const Matrix& source_coboundaries,
                 const Matrix& target_cobound, int ambient_dim) {
    SpanTracker source_span(ambient_dim);
    insert_columns(source_span, source_coboundaries);
    SpanTracker target_span(ambient_dim);
    insert_columns(target_span, target_cobound);
    int grown = 0;
    for (int c = 0; c < source_cocycles.cols(); ++c) {
        std::vector<Complex> v = source_cocycles.column(c);
        if (!source_span.insert(v)) continue; // not a new cohomology class
        if (target_span.insert(std::move(v))) ++grown;
    }
    return grown;
}

} // namespace

int h_dolbeault(const DoubleComplex& k, int p, int q) {
    check_cell(k, p, q);
    return kernel_dim(k.delbar(p, q)) - rank(k.delbar(p, q - 1));
}

int h_del(const DoubleComplex& k, int p, int q) {
    check_cell(k, p, q);
    return kernel_dim(k.del(p, q)) - rank(k.del(p - 1, q));
}

int h_bott_chern(const DoubleComplex& k, int p, int q) {
    check_cell(k, p, q);
    Matrix in = k.ddbar_into(p, q);
    if (!(k.del(p, q) * in).is_zero() || !(k.delbar(p, q) * in).is_zero())
        throw InternalError("im(del delbar) escapes ker del ^ ker delbar at (" +
                            std::to_string(p) + "," + std::to_string(q) +
                            "); complex slipped validation");
    return kernel_dim(vstack(k.del(p, q), k.delbar(p, q))) - rank(in);
}

int h_aeppli(const DoubleComplex& k, int p, int q) {
    check_cell(k, p, q);
    Matrix out = k.ddbar_from(p, q);
    Matrix images = hstack(k.del(p - 1, q), k.delbar(p, q - 1));
    if (!(out * images).is_zero())
        throw InternalError("im del + im delbar escapes ker(del delbar) at (" +
                            std::to_string(p) + "," + std::to_string(q) +
                            "); complex slipped validation");
    return kernel_dim(out) - rank(images);
}

int betti(const DoubleComplex& k, int deg) {
    check_degree(k, deg);
    TotalComplex total = totalize(k);
    int previous = deg >= 1 ? rank(total.d[deg - 1]) : 0;
    return kernel_dim(total.d[deg]) - previous;
}

int natural_map_rank(const DoubleComplex& k, int p, int q, CohTarget target) {
    check_cell(k, p, q);
    return induced_rank(bc_cocycle_basis(k, p, q), k.ddbar_into(p, q),
                        target_coboundaries(k, p, q, target), k.cell_dim(p, q));
}

int natural_map_rank_de_rham(const DoubleComplex& k, int deg) {
    check_degree(k, deg);
    TotalComplex total = totalize(k);
    const int dim = total.dim[deg];

    SpanTracker source_span(dim);
    SpanTracker target_span(dim);
    Matrix previous = deg >= 1 ? total.d[deg - 1] : Matrix(dim, 0);
    insert_columns(target_span, previous);

    int grown = 0;
    int offset = 0;
    for (auto [p, q] : cells_of_degree(k.n(), deg)) {
        auto embed = [&](const Matrix& block, int c) {
            std::vector<Complex> v(dim);
            for (int i = 0; i < block.rows(); ++i) v[offset + i] = block.at(i, c);
            return v;
        };
        Matrix coboundaries = k.ddbar_into(p, q);
        for (int c = 0; c < coboundaries.cols(); ++c)
            source_span.insert(embed(coboundaries, c));
        Matrix cocycles = bc_cocycle_basis(k, p, q);
        for (int c = 0; c < cocycles.cols(); ++c) {
            std::vector<Complex> v = embed(cocycles, c);
            if (!source_span.insert(v)) continue;
            if (target_span.insert(std::move(v))) ++grown;
        }
        offset += k.cell_dim(p, q);
    }
    return grown;
}

int del_to_aeppli_rank(const DoubleComplex& k, int p, int q) {
    check_cell(k, p, q);
    return induced_rank(kernel_basis(k.del(p, q)), k.del(p - 1, q),
                        target_coboundaries(k, p, q, CohTarget::aeppli), k.cell_dim(p, q));
}

int dolbeault_to_aeppli_rank(const DoubleComplex& k, int p, int q) {
    check_cell(k, p, q);
    return induced_rank(kernel_basis(k.delbar(p, q)), k.delbar(p, q - 1),
                        target_coboundaries(k, p, q, CohTarget::aeppli), k.cell_dim(p, q));
}

int de_rham_to_aeppli_rank(const DoubleComplex& k, int p, int q) {
    check_cell(k, p, q);
    const int deg = p + q;
    TotalComplex total = totalize(k);
    const int dim = total.dim[deg];
    const int cell = k.cell_dim(p, q);

    int cell_offset = 0;
    for (auto [cp, cq] : cells_of_degree(k.n(), deg)) {
        if (cp == p && cq == q) break;
        cell_offset += k.cell_dim(cp, cq);
    }

    SpanTracker source_span(dim);
    Matrix previous = deg >= 1 ? total.d[deg - 1] : Matrix(dim, 0);
    insert_columns(source_span, previous);
    SpanTracker target_span(cell);
    insert_columns(target_span, target_coboundaries(k, p, q, CohTarget::aeppli));

    Matrix closed = kernel_basis(total.d[deg]);
    int grown = 0;
    for (int c = 0; c < closed.cols(); ++c) {
        std::vector<Complex> v = closed.column(c);
        if (!source_span.insert(v)) continue;
        std::vector<Complex> projected(v.begin() + cell_offset,
                                       v.begin() + cell_offset + cell);
        if (target_span.insert(std::move(projected))) ++grown;
    }
    return grown;
}

HodgeTable hodge_table(const DoubleComplex& k) {
    const int n = k.n();
    HodgeTable t;
    t.n = n;
    t.h_bc.assign(n + 1, std::vector<int>(n + 1, 0));
    t.h_dolb = t.h_bc;
    t.h_a = t.h_bc;
    Grid del_grid = t.h_bc;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            t.h_bc[p][q] = h_bott_chern(k, p, q);
            t.h_dolb[p][q] = h_dolbeault(k, p, q);
            del_grid[p][q] = h_del(k, p, q);
            t.h_a[p][q] = h_aeppli(k, p, q);
        }
    t.h_del = std::move(del_grid);

    TotalComplex total = totalize(k);
    std::vector<int> d_rank(2 * n + 1);
    for (int deg = 0; deg <= 2 * n; ++deg) d_rank[deg] = rank(total.d[deg]);
    t.b.resize(2 * n + 1);
    for (int deg = 0; deg <= 2 * n; ++deg)
        t.b[deg] = (total.dim[deg] - d_rank[deg]) - (deg >= 1 ? d_rank[deg - 1] : 0);

    t.check_shapes();
    return t;
}

} // namespace ddbar
