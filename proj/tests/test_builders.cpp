#include <doctest.h>

#include "netmat/builders.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace netmat;
using fixtures::make_system;
using fixtures::rmat;

TEST_CASE("cycle fixture matrices") {
    auto g3 = fixtures::g3();
    CHECK(mat_eq(adjacency_matrix<Rational>(g3), rmat({{0, 2, 0}, {0, 0, 3}, {4, 0, 0}})));
    CHECK(mat_eq(out_degree_matrix<Rational>(g3), rmat({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}})));
    CHECK(mat_eq(in_degree_matrix<Rational>(g3), rmat({{4, 0, 0}, {0, 2, 0}, {0, 0, 3}})));
    CHECK(mat_eq(laplacian_matrix<Rational>(g3), rmat({{2, -2, 0}, {0, 3, -3}, {-4, 0, 4}})));
    // edge heads are a, b, c in order, so the out-incidence is the identity
    CHECK(mat_eq(out_incidence_matrix<Rational>(g3), Matrix<Rational>::identity(3)));
    CHECK(mat_eq(in_incidence_matrix<Rational>(g3), rmat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})));
    CHECK(mat_eq(incidence_matrix<Rational>(g3), rmat({{1, 0, -1}, {-1, 1, 0}, {0, -1, 1}})));
    CHECK(mat_eq(weight_matrix<Rational>(g3), rmat({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}})));
}

TEST_CASE("two-cycle and path fixtures") {
    auto cyc = fixtures::two_cycle();
    CHECK(mat_eq(adjacency_matrix<Rational>(cyc), rmat({{0, 2}, {2, 0}})));
    CHECK(mat_eq(out_degree_matrix<Rational>(cyc), rmat({{2, 0}, {0, 2}})));
    CHECK(mat_eq(in_degree_matrix<Rational>(cyc), rmat({{2, 0}, {0, 2}})));
    CHECK(mat_eq(laplacian_matrix<Rational>(cyc), rmat({{2, -2}, {-2, 2}})));
    CHECK(mat_eq(weight_matrix<Rational>(cyc), rmat({{2, 0}, {0, 2}})));

    auto p3 = fixtures::p3();  // node order (a, c, b)
    CHECK(mat_eq(laplacian_matrix<Rational>(p3), rmat({{1, 0, -1}, {0, 1, -1}, {-1, -1, 2}})));
}

TEST_CASE("self-loops flow through adjacency but not incidence") {
    auto loop = fixtures::self_loop_single();
    CHECK(mat_eq(adjacency_matrix<Rational>(loop), rmat({{5}})));
    CHECK(mat_eq(out_degree_matrix<Rational>(loop), rmat({{5}})));
    CHECK(mat_eq(in_degree_matrix<Rational>(loop), rmat({{5}})));
    CHECK(mat_eq(laplacian_matrix<Rational>(loop), rmat({{0}})));
    CHECK(mat_eq(weight_matrix<Rational>(loop), rmat({{5}})));
    CHECK_THROWS_AS(out_incidence_matrix<Rational>(loop), TierError);
    CHECK_THROWS_AS(incidence_matrix<Rational>(loop), TierError);

    auto bundle = build_all<Rational>(loop);
    CHECK_FALSE(bundle.has_incidence());
    CHECK_FALSE(bundle.out_incidence.has_value());
}

TEST_CASE("binary systems give 0/1 adjacency and identity weight matrix") {
    auto binary = make_system({"a", "b"}, {{"a", "b", 1}, {"b", "a", 1}});
    CHECK(mat_eq(adjacency_matrix<Rational>(binary), rmat({{0, 1}, {1, 0}})));
    CHECK(mat_eq(weight_matrix<Rational>(binary), Matrix<Rational>::identity(2)));
}

TEST_CASE("single directed edge incidence") {
    auto single = make_system({"a", "b"}, {{"a", "b", 7}});
    CHECK(mat_eq(out_incidence_matrix<Rational>(single), rmat({{1}, {0}})));
    CHECK(mat_eq(in_incidence_matrix<Rational>(single), rmat({{0}, {1}})));
    CHECK(mat_eq(incidence_matrix<Rational>(single), rmat({{1}, {-1}})));
    CHECK(mat_eq(weight_matrix<Rational>(single), rmat({{7}})));
}

TEST_CASE("builders reject systems below the weighted tier") {
    auto lonely = NetworkSystem::build({"a"}, {}, {});
    REQUIRE(lonely.ok());
    CHECK_THROWS_AS(adjacency_matrix<Rational>(*lonely.system), TierError);
    CHECK_THROWS_AS(build_all<Rational>(*lonely.system), TierError);
}

TEST_CASE("bundle members agree with the individual builders") {
    auto g3 = fixtures::g3();
    auto t = build_all<Rational>(g3);
    CHECK(mat_eq(t.adjacency, adjacency_matrix<Rational>(g3)));
    CHECK(mat_eq(t.laplacian, laplacian_matrix<Rational>(g3)));
    CHECK(t.has_incidence());
    CHECK(mat_eq(*t.incidence, incidence_matrix<Rational>(g3)));
}

TEST_CASE("incidence column structure on generated simple systems") {
    for (std::uint64_t seed = 300; seed < 330; ++seed) {
        testgen::GenSpec spec;
        spec.tier = Tier::SimpleWeighted;
        spec.seed = seed;
        NetworkSystem sys = testgen::gen_system(spec);
        auto iout = out_incidence_matrix<Rational>(sys);
        auto iin = in_incidence_matrix<Rational>(sys);
        auto k = incidence_matrix<Rational>(sys);
        for (std::size_t j = 0; j < sys.edge_count(); ++j) {
            Rational out_sum, in_sum, k_sum;
            for (std::size_t i = 0; i < sys.node_count(); ++i) {
                out_sum += iout(i, j);
                in_sum += iin(i, j);
                k_sum += k(i, j);
                // head and tail rows never coincide on a simple system
                CHECK_FALSE((iout(i, j) == Rational(1) && iin(i, j) == Rational(1)));
            }
            CHECK(out_sum == Rational(1));
            CHECK(in_sum == Rational(1));
            CHECK(k_sum == Rational(0));
        }
    }
}

TEST_CASE("adjacency entries are nonnegative and mark exactly the edges") {
    for (std::uint64_t seed = 400; seed < 430; ++seed) {
        testgen::GenSpec spec;
        spec.seed = seed;
        NetworkSystem sys = testgen::gen_system(spec);
        auto a = adjacency_matrix<Rational>(sys);
        for (std::size_t i = 0; i < sys.node_count(); ++i)
            for (std::size_t j = 0; j < sys.node_count(); ++j) {
                CHECK_FALSE(a(i, j).is_negative());
                bool edge = sys.has_edge(sys.nodes()[i], sys.nodes()[j]);
                CHECK(edge == !a(i, j).is_zero());
            }
    }
}

TEST_CASE("builders agree with the literal-transcription oracle") {
    auto check_against_oracle = [](const NetworkSystem& sys) {
        auto built = build_all<Rational>(sys);
        auto truth = oracle::all(sys);
        CHECK(mat_eq(built.adjacency, truth.adjacency));
        CHECK(mat_eq(built.out_degree, truth.out_degree));
        CHECK(mat_eq(built.in_degree, truth.in_degree));
        CHECK(mat_eq(built.laplacian, truth.laplacian));
        CHECK(mat_eq(built.edge_weights, truth.edge_weights));
        REQUIRE(built.has_incidence() == truth.has_incidence());
        if (built.has_incidence()) {
            CHECK(mat_eq(*built.out_incidence, *truth.out_incidence));
            CHECK(mat_eq(*built.in_incidence, *truth.in_incidence));
            CHECK(mat_eq(*built.incidence, *truth.incidence));
        }
    };

    check_against_oracle(fixtures::g3());
    check_against_oracle(fixtures::p3());
    check_against_oracle(fixtures::self_loop_single());
    check_against_oracle(make_system({"a", "b"}, {{"a", "b", 7}}));

    for (std::uint64_t seed = 500; seed < 560; ++seed) {
        testgen::GenSpec spec;
        spec.seed = seed;
        spec.tier = seed % 3 == 0 ? Tier::SimpleWeighted : Tier::Weighted;
        check_against_oracle(testgen::gen_system(spec));
    }
}

TEST_CASE("float builders track the rational ones within tolerance") {
    auto g3 = fixtures::g3();
    auto exact = build_all<Rational>(g3);
    auto approx = build_all<double>(g3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(scalar_traits<double>::eq(approx.adjacency(i, j),
                                            exact.adjacency(i, j).to_double(), 1e-12));
            CHECK(scalar_traits<double>::eq(approx.laplacian(i, j),
                                            exact.laplacian(i, j).to_double(), 1e-12));
            CHECK(scalar_traits<double>::eq(approx.out_degree(i, j),
                                            exact.out_degree(i, j).to_double(), 1e-12));
        }
}

TEST_CASE("laplacian diagonal excludes the self-loop weight") {
    // the self-loop contributes to both the out-degree and the adjacency
    // diagonal, so it cancels in the Laplacian
    auto sys = make_system({"a", "b"}, {{"a", "a", 5}, {"a", "b", 2}, {"b", "a", 1}});
    CHECK(mat_eq(laplacian_matrix<Rational>(sys), rmat({{2, -2}, {-1, 1}})));
}
