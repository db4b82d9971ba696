#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <scldpc/protograph.hpp>
#include <scldpc/qc.hpp>
#include <scldpc/sparse.hpp>

using namespace scldpc;

TEST_CASE("hand-written 2x4 alist parses to the expected adjacency", "[alist]") {
    // two checks: first covers bits 1,2; second covers bits 3,4 (1-based)
    const std::string text = "4 2\n1 2\n1 1 1 1\n2 2\n1\n1\n2\n2\n1 2\n3 4\n";
    std::istringstream in(text);
    const auto h = read_alist(in);
    REQUIRE(h.n_cols() == 4);
    REQUIRE(h.n_rows() == 2);
    CHECK(h.col(0) == std::vector<int>{0});
    CHECK(h.col(1) == std::vector<int>{0});
    CHECK(h.col(2) == std::vector<int>{1});
    CHECK(h.col(3) == std::vector<int>{1});
    CHECK(h.row(0) == std::vector<int>{0, 1});
    CHECK(h.row(1) == std::vector<int>{2, 3});
}

TEST_CASE("round trip is the identity for constructed matrices", "[alist]") {
    const auto proto = build_coupled_protograph({3, 6, 6});
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const auto sm = assign_shifts(proto, 11, 2, seed);
        const auto h = expand(sm);
        std::ostringstream out;
        write_alist(h, out);
        std::istringstream in(out.str());
        const auto back = read_alist(in);
        REQUIRE(back == h);
    }
}

TEST_CASE("truncated file names the missing section", "[alist]") {
    const std::string text = "4 2\n1 2\n1 1 1 1\n";
    std::istringstream in(text);
    try {
        read_alist(in);
        FAIL("expected a parse error");
    } catch (const error& e) {
        CHECK(e.code() == errc::parse_failure);
        CHECK(std::string(e.what()).find("row degree list") != std::string::npos);
    }
}

TEST_CASE("row/column disagreement is an inconsistency error", "[alist]") {
    // row block says check 2 covers bits 3,4 but the column block says 2 covers 4,3->(4,2)
    const std::string text = "4 2\n1 2\n1 1 1 1\n2 2\n1\n1\n2\n1\n1 2\n3 4\n";
    std::istringstream in(text);
    try {
        read_alist(in);
        FAIL("expected an inconsistency error");
    } catch (const error& e) {
        CHECK(e.code() == errc::inconsistent_matrix);
    }
}

TEST_CASE("garbage tokens carry line/column diagnostics", "[alist]") {
    const std::string text = "4 x\n";
    std::istringstream in(text);
    try {
        read_alist(in);
        FAIL("expected a parse error");
    } catch (const error& e) {
        CHECK(e.code() == errc::parse_failure);
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
}

TEST_CASE("duplicate entries are rejected", "[alist]") {
    std::vector<std::vector<int>> cols{{0, 0}, {1}};
    CHECK_THROWS_AS(SparseBinaryMatrix::from_column_lists(2, 2, std::move(cols)), error);
}
