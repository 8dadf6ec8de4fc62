#include <doctest.h>

#include "builders.hpp"
#include "ddbar/cohomology.hpp"
#include "ddbar/diagnostics.hpp"
#include "ddbar/errors.hpp"
#include "ddbar/structure_spec.hpp"
#include "frozen.hpp"
#include "oracle.hpp"

#include <random>
#include <string>
#include <vector>

using namespace ddbar;
namespace oracle = ddbar::testing;
using ddbar::testing::RandSpec;
using ddbar::testing::random_two_step_spec;
using ddbar::testing::spec_text;

namespace {

DoubleComplex builtin_complex(const std::string& name, std::optional<int> n = std::nullopt) {
    return build_bicomplex(builtin_spec(name, n));
}

// BC -> dR is injective iff its rank carries the full Bott-Chern dimension in
// every degree.
bool bc_to_de_rham_injective(const DoubleComplex& k, const HodgeTable& t) {
    for (int deg = 0; deg <= 2 * k.n(); ++deg)
        if (natural_map_rank_de_rham(k, deg) != degree_sum(t.h_bc, deg)) return false;
    return true;
}

// Every arrow of the comparison diagram between the five cohomologies is an
// isomorphism: the four cellwise arrows through Dolbeault / del, the
// degreewise BC -> dR, and dR -> A (whose components must then be onto).
bool all_comparison_maps_iso(const DoubleComplex& k, const HodgeTable& t) {
    const Grid& del_grid = *t.h_del;
    for (int p = 0; p <= k.n(); ++p)
        for (int q = 0; q <= k.n(); ++q) {
            int bc = t.h_bc[p][q], dolb = t.h_dolb[p][q];
            int del = del_grid[p][q], a = t.h_a[p][q];
            if (bc != dolb || natural_map_rank(k, p, q, CohTarget::dolbeault) != bc)
                return false;
            if (bc != del || natural_map_rank(k, p, q, CohTarget::del) != bc) return false;
            if (dolb != a || dolbeault_to_aeppli_rank(k, p, q) != dolb) return false;
            if (del != a || del_to_aeppli_rank(k, p, q) != del) return false;
            if (de_rham_to_aeppli_rank(k, p, q) != a) return false;
        }
    for (int deg = 0; deg <= 2 * k.n(); ++deg) {
        if (degree_sum(t.h_bc, deg) != t.b[deg]) return false;
        if (degree_sum(t.h_a, deg) != t.b[deg]) return false;
        if (natural_map_rank_de_rham(k, deg) != t.b[deg]) return false;
    }
    return true;
}

void check_against_oracle(const DoubleComplex& k, uint64_t seed) {
    for (int p = 0; p <= k.n(); ++p)
        for (int q = 0; q <= k.n(); ++q) {
            CAPTURE(p);
            CAPTURE(q);
            CHECK(h_dolbeault(k, p, q) == oracle::h_dolb(k, p, q, seed));
            CHECK(h_del(k, p, q) == oracle::h_del(k, p, q, seed));
            CHECK(h_bott_chern(k, p, q) == oracle::h_bc(k, p, q, seed));
            CHECK(h_aeppli(k, p, q) == oracle::h_a(k, p, q, seed));
        }
    for (int deg = 0; deg <= 2 * k.n(); ++deg) {
        CAPTURE(deg);
        CHECK(betti(k, deg) == oracle::betti(k, deg, seed));
    }
}

} // namespace

TEST_CASE("hodge tables of the shipped structures") {
    CHECK(hodge_table(builtin_complex("torus", 1)).to_json() ==
          ddbar::testing::frozen_torus1().to_json());
    CHECK(hodge_table(builtin_complex("torus", 2)).to_json() ==
          ddbar::testing::frozen_torus2().to_json());
    CHECK(hodge_table(builtin_complex("torus", 3)).to_json() ==
          ddbar::testing::frozen_torus3().to_json());
    CHECK(hodge_table(builtin_complex("iwasawa")).to_json() ==
          ddbar::testing::frozen_iwasawa().to_json());
    CHECK(hodge_table(builtin_complex("kodaira_thurston")).to_json() ==
          ddbar::testing::frozen_kodaira_thurston().to_json());
}

TEST_CASE("individual dimensions at marked cells") {
    DoubleComplex iw = builtin_complex("iwasawa");
    CHECK(h_dolbeault(iw, 1, 0) == 3);
    CHECK(h_dolbeault(iw, 0, 1) == 2);
    CHECK(h_del(iw, 1, 0) == 2);
    CHECK(h_del(iw, 0, 1) == 3);
    CHECK(h_bott_chern(iw, 1, 0) == 2);
    CHECK(h_aeppli(iw, 1, 0) == 3);
    CHECK(h_aeppli(iw, 3, 3) == 1);
    CHECK(betti(iw, 1) == 4);
    CHECK(betti(iw, 3) == 10);

    DoubleComplex kt = builtin_complex("kodaira_thurston");
    CHECK(h_bott_chern(kt, 1, 0) == 1);
    CHECK(h_aeppli(kt, 1, 0) == 2);
    CHECK(betti(kt, 1) == 3);

    CHECK(betti(builtin_complex("torus", 2), 2) == 6);
}

TEST_CASE("indices outside the grid are rejected") {
    DoubleComplex kt = builtin_complex("kodaira_thurston");
    CHECK_THROWS_AS(h_dolbeault(kt, -1, 0), DimensionError);
    CHECK_THROWS_AS(h_del(kt, 0, 3), DimensionError);
    CHECK_THROWS_AS(h_bott_chern(kt, 3, 0), DimensionError);
    CHECK_THROWS_AS(h_aeppli(kt, 0, -2), DimensionError);
    CHECK_THROWS_AS(betti(kt, 5), DimensionError);
    CHECK_THROWS_AS(betti(kt, -1), DimensionError);
    CHECK_THROWS_AS(natural_map_rank(kt, 3, 0, CohTarget::aeppli), DimensionError);
    CHECK_THROWS_AS(natural_map_rank_de_rham(kt, 5), DimensionError);
    CHECK_THROWS_AS(del_to_aeppli_rank(kt, -1, 0), DimensionError);
}

TEST_CASE("comparison-map ranks against frozen values") {
    struct Row {
        const char* name;
        std::optional<int> n;
        ddbar::testing::FrozenMapRanks frozen;
    };
    const Row rows[] = {
        {"iwasawa", std::nullopt, ddbar::testing::frozen_maps_iwasawa()},
        {"kodaira_thurston", std::nullopt, ddbar::testing::frozen_maps_kodaira_thurston()},
        {"torus", 2, ddbar::testing::frozen_maps_torus2()},
    };
    for (const Row& row : rows) {
        CAPTURE(row.name);
        DoubleComplex k = builtin_complex(row.name, row.n);
        for (int deg = 0; deg <= 2 * k.n(); ++deg) {
            CAPTURE(deg);
            CHECK(natural_map_rank_de_rham(k, deg) == row.frozen.bc_to_de_rham[deg]);
        }
        for (int p = 0; p <= k.n(); ++p)
            for (int q = 0; q <= k.n(); ++q) {
                CAPTURE(p);
                CAPTURE(q);
                CHECK(natural_map_rank(k, p, q, CohTarget::dolbeault) ==
                      row.frozen.bc_to_dolb[p][q]);
                CHECK(natural_map_rank(k, p, q, CohTarget::del) == row.frozen.bc_to_del[p][q]);
                CHECK(natural_map_rank(k, p, q, CohTarget::aeppli) ==
                      row.frozen.bc_to_aeppli[p][q]);
            }
    }
}

TEST_CASE("on a torus every comparison map is an isomorphism") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        DoubleComplex k = builtin_complex("torus", n);
        HodgeTable t = hodge_table(k);
        CHECK(bc_to_de_rham_injective(k, t));
        CHECK(all_comparison_maps_iso(k, t));
    }
}

TEST_CASE("injectivity into de Rham and the full comparison diagram stand or fall together") {
    struct Row {
        const char* name;
        std::optional<int> n;
        bool expected;
    };
    const Row rows[] = {{"torus", 1, true},           {"torus", 2, true}, {"torus", 3, true},
                        {"iwasawa", std::nullopt, false},
                        {"kodaira_thurston", std::nullopt, false}};
    for (const Row& row : rows) {
        CAPTURE(row.name);
        DoubleComplex k = builtin_complex(row.name, row.n);
        HodgeTable t = hodge_table(k);
        CHECK(bc_to_de_rham_injective(k, t) == row.expected);
        CHECK(all_comparison_maps_iso(k, t) == row.expected);
    }
}

TEST_CASE("map ranks never exceed source or target dimension") {
    DoubleComplex iw = builtin_complex("iwasawa");
    HodgeTable t = hodge_table(iw);
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            int bc = t.h_bc[p][q];
            CHECK(natural_map_rank(iw, p, q, CohTarget::dolbeault) <= bc);
            CHECK(natural_map_rank(iw, p, q, CohTarget::dolbeault) <= t.h_dolb[p][q]);
            CHECK(natural_map_rank(iw, p, q, CohTarget::del) <= bc);
            CHECK(natural_map_rank(iw, p, q, CohTarget::aeppli) <= t.h_a[p][q]);
            CHECK(del_to_aeppli_rank(iw, p, q) <= (*t.h_del)[p][q]);
            CHECK(dolbeault_to_aeppli_rank(iw, p, q) <= t.h_dolb[p][q]);
            CHECK(de_rham_to_aeppli_rank(iw, p, q) <= t.h_a[p][q]);
        }
    for (int deg = 0; deg <= 6; ++deg)
        CHECK(natural_map_rank_de_rham(iw, deg) <= std::min(degree_sum(t.h_bc, deg), t.b[deg]));
}

TEST_CASE("hand-computed fixture dimensions") {
    DoubleComplex one_del = ddbar::testing::fixture_one_del();
    HodgeTable t = hodge_table(one_del);
    CHECK((t.h_bc == Grid{{0, 1}, {1, 1}}));
    CHECK((t.h_dolb == Grid{{1, 1}, {1, 1}}));
    REQUIRE(t.h_del.has_value());
    CHECK((*t.h_del == Grid{{0, 1}, {0, 1}}));
    CHECK((t.h_a == Grid{{1, 1}, {0, 1}}));
    CHECK((t.b == std::vector<int>{0, 1, 1}));

    DoubleComplex acyclic = ddbar::testing::fixture_acyclic();
    HodgeTable ta = hodge_table(acyclic);
    CHECK((ta.h_bc == Grid{{0, 0}, {0, 0}}));
    CHECK((ta.h_dolb == Grid{{0, 0}, {0, 0}}));
    CHECK((*ta.h_del == Grid{{0, 0}, {0, 0}}));
    CHECK((ta.h_a == Grid{{0, 0}, {0, 0}}));
    CHECK((ta.b == std::vector<int>{0, 0, 0}));

    DoubleComplex cell = ddbar::testing::fixture_single_cell();
    HodgeTable tc = hodge_table(cell);
    CHECK((tc.h_bc == Grid{{1, 0}, {0, 0}}));
    CHECK((tc.b == std::vector<int>{1, 0, 0}));
}

TEST_CASE("engine agrees with the independent oracle on small complexes") {
    check_against_oracle(builtin_complex("torus", 1), 0x101ULL);
    check_against_oracle(builtin_complex("torus", 2), 0x202ULL);
    check_against_oracle(builtin_complex("kodaira_thurston"), 0x303ULL);
    check_against_oracle(ddbar::testing::fixture_single_cell(), 0x404ULL);
    check_against_oracle(ddbar::testing::fixture_one_del(), 0x505ULL);
    check_against_oracle(ddbar::testing::fixture_acyclic(), 0x606ULL);
}

TEST_CASE("randomized structures: symmetry, duality, bounds, conjugation") {
    std::mt19937_64 rng(0xAB12CD34ULL);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        RandSpec s = random_two_step_spec(n, rng, false);
        DoubleComplex k = build_bicomplex(parse_spec(spec_text(s)));
        REQUIRE(k.validate_jacobi().ok);
        HodgeTable t = hodge_table(k);
        const Grid& del_grid = *t.h_del;
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                // conjugation symmetry and duality of the four grids
                CHECK(t.h_bc[p][q] == t.h_bc[q][p]);
                CHECK(t.h_a[p][q] == t.h_a[q][p]);
                CHECK(t.h_dolb[p][q] == del_grid[q][p]);
                CHECK(t.h_bc[p][q] == t.h_a[n - p][n - q]);
            }
        for (int deg = 0; deg <= 2 * n; ++deg) {
            CHECK(degree_sum(t.h_dolb, deg) >= t.b[deg]); // Frolicher
            CHECK(t.b[deg] == t.b[2 * n - deg]);          // Poincare
        }
        // injectivity into de Rham is equivalent to the whole diagram being
        // isomorphisms
        CHECK(bc_to_de_rham_injective(k, t) == all_comparison_maps_iso(k, t));

        // conjugating every structure constant leaves the table unchanged
        DoubleComplex conj = build_bicomplex(parse_spec(spec_text(s, true)));
        CHECK(hodge_table(conj).to_json() == t.to_json());
    }
}

TEST_CASE("randomized structures agree with the oracle") {
    std::mt19937_64 rng(0xF00DULL);
    for (int trial = 0; trial < 4; ++trial) {
        RandSpec s = random_two_step_spec(2, rng, false);
        DoubleComplex k = build_bicomplex(parse_spec(spec_text(s)));
        check_against_oracle(k, 0x700ULL + trial);
    }
}
