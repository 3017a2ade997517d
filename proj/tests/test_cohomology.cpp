#include "modcohom/cohomology.hpp"

#include "naive_gauss.hpp"

#include <doctest.h>

using namespace modcohom;

namespace {

CohomologyReport report_for(PrimeField f, const std::string& algebra, const ModuleSelector& sel,
                            bool factors = true) {
    return compute_cohomology_report(f, algebra, sel, 1, factors);
}

std::vector<std::size_t> dims_of(const CohomologyReport& r) {
    std::vector<std::size_t> out;
    for (const auto& d : r.degrees) out.push_back(d.total);
    return out;
}

// Independent degree-1 oracle: dim H^1 from the raw cocycle condition
// phi([x,y]) = x phi(y) - y phi(x) and the inner maps m -> (x m)_x, solved by
// the naive dense elimination with no cochain machinery involved.
std::size_t brute_h1(const Representation& m) {
    const auto& g = m.algebra;
    std::size_t n_ops = g.dim(), d = m.dim, cols = n_ops * d;
    std::uint32_t p = m.field.p;
    std::vector<std::vector<std::vector<std::uint32_t>>> act;
    for (const auto& a : m.actions) act.push_back(a.to_dense());
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t i = 0; i < n_ops; ++i) {
        for (std::size_t j = i + 1; j < n_ops; ++j) {
            for (std::size_t r = 0; r < d; ++r) {
                std::vector<std::uint32_t> row(cols, 0);
                for (const auto& [k, c] : g.bracket(i, j)) {
                    row[k * d + r] = (row[k * d + r] + m.field.reduce(c)) % p;
                }
                for (std::size_t c2 = 0; c2 < d; ++c2) {
                    row[j * d + c2] = (row[j * d + c2] + p - act[i][r][c2]) % p;
                    row[i * d + c2] = (row[i * d + c2] + act[j][r][c2]) % p;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    std::size_t z1 = cols - naive::rank(rows, p);
    std::vector<std::vector<std::uint32_t>> d0(d, std::vector<std::uint32_t>(cols, 0));
    for (std::size_t mc = 0; mc < d; ++mc) {
        for (std::size_t x = 0; x < n_ops; ++x) {
            for (std::size_t r = 0; r < d; ++r) d0[mc][x * d + r] = act[x][r][mc];
        }
    }
    return z1 - naive::rank(d0, p);
}

// Independent degree-2 oracle, same spirit: antisymmetric 2-cochains as raw
// unknowns phi(x_i,x_j), i<j, the cocycle identity over all ordered triples,
// and the coboundary image of 1-cochains, all solved by naive elimination.
std::size_t brute_h2(const Representation& m) {
    const auto& g = m.algebra;
    const std::size_t nops = g.dim(), d = m.dim;
    const std::uint32_t p = m.field.p;
    std::vector<std::vector<std::vector<std::uint32_t>>> act;
    for (const auto& a : m.actions) act.push_back(a.to_dense());

    std::vector<std::vector<std::size_t>> pair_id(nops, std::vector<std::size_t>(nops, 0));
    std::size_t npairs = 0;
    for (std::size_t i = 0; i < nops; ++i) {
        for (std::size_t j = i + 1; j < nops; ++j) pair_id[i][j] = npairs++;
    }
    const std::size_t cols = npairs * d;

    // phi([x,y], z) expanded through the bracket with antisymmetry signs
    auto add_bracket_term = [&](std::vector<std::uint32_t>& row, std::size_t x, std::size_t y,
                                std::size_t z, std::int64_t outer_sign, std::size_t r) {
        for (const auto& [k, c] : g.bracket(x, y)) {
            if (k == z) continue;
            std::int64_t sign = outer_sign * c * (k < z ? 1 : -1);
            std::size_t pid = k < z ? pair_id[k][z] : pair_id[z][k];
            std::uint32_t v = m.field.reduce(sign);
            row[pid * d + r] = (row[pid * d + r] + v) % p;
        }
    };

    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t a = 0; a < nops; ++a) {
        for (std::size_t b = a + 1; b < nops; ++b) {
            for (std::size_t c = b + 1; c < nops; ++c) {
                for (std::size_t r = 0; r < d; ++r) {
                    std::vector<std::uint32_t> row(cols, 0);
                    for (std::size_t m2 = 0; m2 < d; ++m2) {
                        row[pair_id[b][c] * d + m2] =
                            (row[pair_id[b][c] * d + m2] + act[a][r][m2]) % p;
                        row[pair_id[a][c] * d + m2] =
                            (row[pair_id[a][c] * d + m2] + p - act[b][r][m2]) % p;
                        row[pair_id[a][b] * d + m2] =
                            (row[pair_id[a][b] * d + m2] + act[c][r][m2]) % p;
                    }
                    add_bracket_term(row, a, b, c, -1, r);
                    add_bracket_term(row, a, c, b, +1, r);
                    add_bracket_term(row, b, c, a, -1, r);
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    std::size_t z2 = cols - naive::rank(rows, p);

    // d1: (x_i, x_j) component of d(phi) is x_i phi(x_j) - x_j phi(x_i) - phi([x_i,x_j])
    std::vector<std::vector<std::uint32_t>> d1(nops * d, std::vector<std::uint32_t>(cols, 0));
    for (std::size_t x = 0; x < nops; ++x) {
        for (std::size_t mc = 0; mc < d; ++mc) {
            auto& row = d1[x * d + mc];  // image of the 1-cochain x* (x) m_c
            for (std::size_t i = 0; i < nops; ++i) {
                for (std::size_t j = i + 1; j < nops; ++j) {
                    std::size_t base = pair_id[i][j] * d;
                    if (j == x) {
                        for (std::size_t r = 0; r < d; ++r) {
                            row[base + r] = (row[base + r] + act[i][r][mc]) % p;
                        }
                    }
                    if (i == x) {
                        for (std::size_t r = 0; r < d; ++r) {
                            row[base + r] = (row[base + r] + p - act[j][r][mc]) % p;
                        }
                    }
                    for (const auto& [k, c] : g.bracket(i, j)) {
                        if (k != x) continue;
                        row[base + mc] = (row[base + mc] + m.field.reduce(-c)) % p;
                    }
                }
            }
        }
    }
    return z2 - naive::rank(d1, p);
}

}  // namespace

TEST_CASE("degree-2 dimensions agree with the raw bilinear-cocycle oracle") {
    PrimeField f = make_prime_field(5);
    struct Case {
        ModuleSelector sel;
        std::size_t h2;
    };
    for (const Case& c : std::initializer_list<Case>{{{"trivial", 0, 0}, 0},
                                                     {{"simple", 2, 0}, 3},
                                                     {{"simple", 3, 1}, 0},
                                                     {{"weyl", 3, 1}, 0},
                                                     {{"induced", 3, 1}, 3},
                                                     {{"weyl", 3, 3}, 0}}) {
        CAPTURE(c.sel.str());
        Representation m = build_module(f, c.sel);
        CHECK(brute_h2(m) == c.h2);
        CohomologyReport r = report_for(f, "sl3", c.sel, false);
        CHECK(r.degrees[2].total == c.h2);
    }
}

TEST_CASE("degree-1 dimensions agree with the raw derivation-space oracle") {
    PrimeField f = make_prime_field(5);
    struct Case {
        ModuleSelector sel;
        std::size_t h1;
    };
    // includes the two families where the computed tables disagree with the
    // bundled corollary2/corollary3 expectations: the oracle sides with the
    // complex computation
    for (const Case& c : std::initializer_list<Case>{{{"trivial", 0, 0}, 0},
                                                     {{"simple", 3, 1}, 3},
                                                     {{"simple", 3, 3}, 1},
                                                     {{"simple", 1, 1}, 0},
                                                     {{"weyl", 3, 1}, 0},
                                                     {{"weyl", 3, 3}, 1},
                                                     {{"induced", 3, 1}, 3},
                                                     {{"induced", 3, 3}, 0}}) {
        CAPTURE(c.sel.str());
        Representation m = build_module(f, c.sel);
        CHECK(brute_h1(m) == c.h1);
        CohomologyReport r = report_for(f, "sl3", c.sel, false);
        CHECK(r.degrees[1].total == c.h1);
    }
}

TEST_CASE("trivial coefficients: one-dimensional classes in degrees 0,3,5,8") {
    PrimeField f = make_prime_field(5);
    CohomologyReport r = report_for(f, "sl3", {"trivial", 0, 0});
    CHECK(dims_of(r) == std::vector<std::size_t>{1, 0, 0, 1, 0, 1, 0, 0, 1});
    for (std::size_t n : {0, 3, 5, 8}) {
        REQUIRE(r.degrees[n].factors.size() == 1);
        CHECK(r.degrees[n].factors[0] == CohomFactor{{0, 0}, 1, 1});
    }
    CHECK(euler_check(r));
}

TEST_CASE("simple(3,1) at p=5: dims 3,6,3 in degrees 1,4,7") {
    PrimeField f = make_prime_field(5);
    CohomologyReport r = report_for(f, "sl3", {"simple", 3, 1});
    CHECK(dims_of(r) == std::vector<std::size_t>{0, 3, 0, 0, 6, 0, 0, 3, 0});
    CHECK(r.degrees[4].factors == std::vector<CohomFactor>{{{1, 0}, 1, 2}});
    // each of the three p-divisible weights carries dimension 2 in degree 4
    for (Weight w : {Weight{5, 0}, {-5, 5}, {0, -5}}) {
        CHECK(r.degrees[4].weight_dims.at(w) == 2);
    }
    CHECK(euler_check(r));
}

TEST_CASE("a non-peculiar module has zero cohomology") {
    PrimeField f7 = make_prime_field(7);
    CHECK(report_for(f7, "sl3", {"simple", 2, 2}, false).all_zero());
    PrimeField f5 = make_prime_field(5);
    CHECK(report_for(f5, "sl3", {"simple", 1, 1}, false).all_zero());
}

TEST_CASE("threaded block computation is identical to serial") {
    PrimeField f = make_prime_field(5);
    GradedComplex rcx = restrict_to_pXT(build_complex(sl3_spec(), simple_module(f, 3, 3)));
    CohomologyReport serial = cohomology(rcx, 1);
    CohomologyReport parallel = cohomology(rcx, 4);
    REQUIRE(serial.degrees.size() == parallel.degrees.size());
    for (std::size_t n = 0; n < serial.degrees.size(); ++n) {
        CHECK(serial.degrees[n].total == parallel.degrees[n].total);
        CHECK(serial.degrees[n].weight_dims == parallel.degrees[n].weight_dims);
    }
}

TEST_CASE("character decomposition") {
    PrimeField f = make_prime_field(5);
    CharacterTable table(f);

    SUBCASE("single standard-module character") {
        std::map<Weight, std::size_t> ms{{{1, 0}, 1}, {{-1, 1}, 1}, {{0, -1}, 1}};
        CharacterDecomposition dc = decompose_character(ms, table);
        CHECK(dc.residual.empty());
        CHECK(dc.factors == std::vector<CohomFactor>{{{1, 0}, 1, 1}});
    }

    SUBCASE("degree 4 of simple(3,3) decomposes as 2 L(1,1) + 2 k") {
        CohomologyReport r = report_for(f, "sl3", {"simple", 3, 3});
        CHECK(dims_of(r) == std::vector<std::size_t>{0, 1, 0, 8, 18, 8, 0, 1, 0});
        auto factors = r.degrees[4].factors;
        REQUIRE(factors.size() == 2);
        CHECK(factors[0] == CohomFactor{{1, 1}, 1, 2});
        CHECK(factors[1] == CohomFactor{{0, 0}, 1, 2});
    }

    SUBCASE("non-dominant maximal weight is an error") {
        std::map<Weight, std::size_t> ms{{{-1, 1}, 1}, {{0, -1}, 1}};
        CHECK_THROWS_AS(decompose_character(ms, table), Error);
    }

    SUBCASE("unmatchable multiset lands in the residual") {
        std::map<Weight, std::size_t> ms{{{1, 0}, 1}};
        CharacterDecomposition dc = decompose_character(ms, table);
        CHECK(dc.factors.empty());
        CHECK(dc.residual == ms);
    }
}

TEST_CASE("duality pairs reports across the top degree") {
    PrimeField f = make_prime_field(5);
    CHECK(verify_duality(sl3_spec(), trivial_module(sl3_spec(), f)));
    CHECK(verify_duality(sl3_spec(), simple_module(f, 3, 1)));
    CHECK(verify_duality(sl3_spec(), weyl_module(f, 3, 3)));

    SUBCASE("the self-dual module has palindromic dimensions") {
        Representation m = simple_module(f, 3, 3);
        CHECK(character(dual_module(m)) == character(m));
        CohomologyReport r = report_for(f, "sl3", {"simple", 3, 3}, false);
        auto d = dims_of(r);
        for (std::size_t n = 0; n <= 8; ++n) CHECK(d[n] == d[8 - n]);
    }
}

TEST_CASE("gl3 via the degree-shift sum matches the direct gl3 complex") {
    PrimeField f = make_prime_field(5);
    for (ModuleSelector sel : {ModuleSelector{"trivial", 0, 0}, {"simple", 3, 1}}) {
        CohomologyReport split = gl3_from_sl3(report_for(f, "sl3", sel));
        CohomologyReport direct = report_for(f, "gl3", sel);
        REQUIRE(split.degrees.size() == direct.degrees.size());
        for (std::size_t n = 0; n < split.degrees.size(); ++n) {
            CHECK(split.degrees[n].total == direct.degrees[n].total);
            CHECK(split.degrees[n].weight_dims == direct.degrees[n].weight_dims);
        }
    }
    SUBCASE("trivial coefficients spread to degrees 0,1,3,4,5,6,8,9") {
        CohomologyReport g = gl3_from_sl3(report_for(f, "sl3", {"trivial", 0, 0}));
        CHECK(dims_of(g) == std::vector<std::size_t>{1, 1, 0, 1, 1, 1, 1, 0, 1, 1});
    }
    SUBCASE("zero maps to zero") {
        CohomologyReport z = gl3_from_sl3(report_for(f, "sl3", {"simple", 1, 1}));
        CHECK(z.all_zero());
    }
    SUBCASE("simple(3,3): degrees 4 and 5 collect 3 L(1,1) + 2 k") {
        CohomologyReport g = gl3_from_sl3(report_for(f, "sl3", {"simple", 3, 3}));
        for (std::size_t n : {4, 5}) {
            CHECK(g.degrees[n].total == 26);
            CHECK(g.degrees[n].factors ==
                  std::vector<CohomFactor>{{{0, 0}, 1, 2}, {{1, 1}, 1, 3}});
        }
    }
}

TEST_CASE("global unblocked ranks reproduce the per-weight-block computation") {
    PrimeField f = make_prime_field(5);
    for (auto sel : {ModuleSelector{"trivial", 0, 0}, {"simple", 1, 0}, {"simple", 2, 0}}) {
        CAPTURE(sel.str());
        Representation m = build_module(f, sel);
        GradedComplex cx = build_complex(sl3_spec(), m);
        CohomologyReport blocked = cohomology(cx);
        std::size_t prev_rank = 0;
        for (std::size_t n = 0; n < cx.degrees.size(); ++n) {
            RankKernel rk = rank_and_kernel(cx.degrees[n].d);
            std::size_t h = rk.kernel.dim() - prev_rank;
            CHECK(h == blocked.degrees[n].total);
            prev_rank = rk.rank;
        }
    }
}

TEST_CASE("euler check rejects an unbalanced report") {
    CohomologyReport bad;
    bad.p = 5;
    bad.degrees.resize(9);
    bad.degrees[2].total = 1;
    bad.degrees[2].weight_dims[{5, 0}] = 1;
    CHECK(!euler_check(bad));
}

TEST_CASE("long-exact-sequence dimension consistency") {
    PrimeField f = make_prime_field(5);

    SUBCASE("socle sequence of the self-dual induced module") {
        Representation a = simple_module(f, 3, 3);
        Representation b = induced_module(f, 3, 3);
        Representation c = trivial_module(sl3_spec(), f);
        CHECK(ses_consistency(a, b, c));
    }

    SUBCASE("split sum") {
        Representation k = trivial_module(sl3_spec(), f);
        CHECK(ses_consistency(k, direct_sum(k, k), k));
    }

    SUBCASE("character mismatch is an error") {
        Representation k = trivial_module(sl3_spec(), f);
        CHECK_THROWS_AS(ses_consistency(k, k, simple_module(f, 1, 0)), Error);
    }
}

TEST_CASE("module selectors parse and validate") {
    CHECK(parse_selector("trivial").family == "trivial");
    ModuleSelector s = parse_selector("simple:3,1");
    CHECK(s.family == "simple");
    CHECK(s.r == 3);
    CHECK(s.s == 1);
    CHECK(parse_selector("weyl:0,4").s == 4);
    CHECK_THROWS_AS(parse_selector("simple"), std::invalid_argument);
    CHECK_THROWS_AS(parse_selector("steinberg:1,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_selector("simple:x,y"), std::invalid_argument);
    CHECK(parse_selector("simple:3,1").str() == "simple:3,1");
}
