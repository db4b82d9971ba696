#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <scldpc/protograph.hpp>

using namespace scldpc;

TEST_CASE("(3,6,L=5) chain has 7 check groups and a 3-group band per bit group", "[protograph]") {
    const auto proto = build_coupled_protograph({3, 6, 5});
    CHECK(proto.params.check_groups() == 7);
    CHECK(proto.params.chain_length == 5);
    CHECK(proto.params.bits_per_group() == 2);
    CHECK(proto.params.checks_per_group() == 1);
    for (int col = 0; col < proto.params.bit_cols(); ++col) {
        std::set<int> groups;
        for (int j = 0; j < 3; ++j) groups.insert(proto.slot(col, j).check_group);
        const int t = col / 2;
        CHECK(groups == std::set<int>{t, t + 1, t + 2});
    }
}

TEST_CASE("boundary case L = d_l is accepted with rate 1/6", "[protograph]") {
    const auto proto = build_coupled_protograph({3, 6, 3});
    CHECK(proto.params.check_groups() == 5);
    const auto cp = code_params(proto.params, 1);
    CHECK(cp.block_length == 6);
    CHECK(cp.rate_num == 1);
    CHECK(cp.rate_den == 6);
}

TEST_CASE("(4,8,L=129) has 132 check groups", "[protograph]") {
    const auto proto = build_coupled_protograph({4, 8, 129});
    CHECK(proto.params.check_groups() == 132);
    // count distinct check groups appearing in the slots as well
    std::set<int> groups;
    for (const auto& s : proto.slots) groups.insert(s.check_group);
    CHECK(static_cast<int>(groups.size()) == 132);
}

TEST_CASE("paper operating point: (4,8,129) with M=400", "[protograph]") {
    const auto cp = code_params({4, 8, 129}, 400);
    CHECK(cp.block_length == 103200);
    CHECK(cp.rate_num == 126);
    CHECK(cp.rate_den == 258);
    CHECK(cp.rate() == Catch::Approx(0.488).margin(5e-4));
}

TEST_CASE("rate loss vanishes as L grows", "[protograph]") {
    const auto cp = code_params({3, 6, 1000}, 1);
    CHECK(cp.rate_num == 998);
    CHECK(cp.rate_den == 2000);
    CHECK(cp.rate() == Catch::Approx(0.499));
}

TEST_CASE("invalid parameters are rejected with the right category", "[protograph]") {
    CHECK_THROWS_MATCHES(build_coupled_protograph({3, 5, 10}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::invalid_params &&
                                    std::string(e.what()).find("construction-undefined") !=
                                        std::string::npos;
                         }));
    CHECK_THROWS_MATCHES(build_coupled_protograph({3, 6, 2}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::invalid_params &&
                                    std::string(e.what()).find("degenerate-rate") != std::string::npos;
                         }));
    CHECK_THROWS_AS(build_coupled_protograph({1, 6, 10}), error);
}

TEST_CASE("slot count and check-degree bookkeeping", "[protograph]") {
    for (const ProtoParams p : {ProtoParams{3, 6, 7}, ProtoParams{4, 8, 9}, ProtoParams{4, 6, 9}}) {
        const auto proto = build_coupled_protograph(p);
        const int nb = p.bits_per_group();
        CHECK(static_cast<int>(proto.slots.size()) == p.chain_length * nb * p.bit_degree);

        // per-block-row degrees: interior rows carry d_r edges, ends fewer
        std::vector<int> row_degree(static_cast<std::size_t>(p.block_rows()), 0);
        for (const auto& s : proto.slots) ++row_degree[static_cast<std::size_t>(s.block_row)];
        long long total = 0;
        int full_rows = 0;
        for (int deg : row_degree) {
            total += deg;
            CHECK(deg <= p.check_degree);
            if (deg == p.check_degree) ++full_rows;
        }
        CHECK(total == static_cast<long long>(proto.slots.size()));
        CHECK(full_rows >= (p.chain_length - p.bit_degree) * p.checks_per_group());
    }
}

TEST_CASE("design rate increases toward the uncoupled rate", "[protograph]") {
    double prev = 0.0;
    for (int length = 4; length <= 256; length *= 2) {
        const auto cp = code_params({4, 8, length}, 1);
        CHECK(cp.rate() > prev);
        CHECK(cp.rate() < 0.5);
        prev = cp.rate();
    }
    CHECK(prev > 0.48);
}
