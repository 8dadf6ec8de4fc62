#pragma once

#include "ddbar/double_complex.hpp"
#include "ddbar/hodge_table.hpp"

namespace ddbar {

/* Cohomology dimensions of a single cell / degree, all by exact rank
   arithmetic. Quotient dimensions use rank-nullity; no quotient space is
   ever materialized. Indices outside 0 <= p,q <= n (or 0 <= deg <= 2n) throw
   DimensionError; cells outside the grid contribute zero inside formulas. */

// dim ker(delbar at (p,q)) - rank(delbar at (p,q-1))
int h_dolbeault(const DoubleComplex& k, int p, int q);
// dim ker(del at (p,q)) - rank(del at (p-1,q))
int h_del(const DoubleComplex& k, int p, int q);
// dim (ker del ^ ker delbar) - rank(deldelbar into (p,q)); asserts the image
// containment that makes the quotient well defined (InternalError if broken)
int h_bott_chern(const DoubleComplex& k, int p, int q);
// dim ker(deldelbar from (p,q)) - rank[im del + im delbar]; same assertion
int h_aeppli(const DoubleComplex& k, int p, int q);
// de Rham dimension of the totalization at the given total degree
int betti(const DoubleComplex& k, int deg);

enum class CohTarget { de_rham, dolbeault, del, aeppli };

// Rank of the identity-induced map out of Bott-Chern cohomology at cell
// (p,q) into the named target cohomology of the same cell. Representatives
// of H_BC are chosen by extending a pivot basis of im(deldelbar) to a pivot
// basis of ker del ^ ker delbar in deterministic column order; the rank is
// rank[reps | target coboundaries] - rank[target coboundaries].
int natural_map_rank(const DoubleComplex& k, int p, int q, CohTarget target);

// Same map with target de Rham, where the source is the direct sum of all
// Bott-Chern cells of the given total degree, block-embedded into T^deg.
int natural_map_rank_de_rham(const DoubleComplex& k, int deg);

/* The remaining arrows of the comparison diagram between the five
   cohomologies (everything factors through Aeppli). */
int del_to_aeppli_rank(const DoubleComplex& k, int p, int q);
int dolbeault_to_aeppli_rank(const DoubleComplex& k, int p, int q);
// de Rham class projected onto its (p,q) component, which is an Aeppli
// cocycle whenever the total form is d-closed.
int de_rham_to_aeppli_rank(const DoubleComplex& k, int p, int q);

// All four grids (h_del included), plus Betti numbers, in one pass.
HodgeTable hodge_table(const DoubleComplex& k);

} // namespace ddbar
