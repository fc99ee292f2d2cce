#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cellres/criteria.hpp"
#include "cellres/homology.hpp"

using namespace cellres;

namespace {

LabeledComplex full_edge(int m, int n, std::vector<std::vector<std::int64_t>> omega) {
    return LabeledComplex::full(edge_weight_labels(EdgeWeighting(m, n, std::move(omega))));
}

std::vector<long> padded(std::vector<long> v, std::size_t len) {
    v.resize(std::max(v.size(), len), 0);
    return v;
}

bool profiles_equal(const HomologyProfile& a, const HomologyProfile& b) {
    std::size_t len = std::max(a.betti.size(), b.betti.size());
    return padded(a.betti, len) == padded(b.betti, len) && a.torsion == b.torsion;
}

IntegerMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

}  // namespace

TEST_CASE("smith normal form basics") {
    CHECK(smith_normal_form(from_rows({{2, 0}, {0, 3}})) == std::vector<BigInt>{1, 6});
    CHECK(smith_normal_form(from_rows({{2}})) == std::vector<BigInt>{2});
    CHECK(smith_normal_form(from_rows({{0, 0}, {0, 0}})).empty());
    CHECK(smith_normal_form(from_rows({{1, 2}, {3, 4}})) == std::vector<BigInt>{1, 2});
    // divisibility chain holds
    auto inv = smith_normal_form(from_rows({{6, 4}, {4, 6}}));
    REQUIRE(inv.size() == 2);
    CHECK(inv[1] % inv[0] == 0);
}

TEST_CASE("smith normal form is invariant under row and column shuffles") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 5;
        IntegerMatrix a(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) a.at(r, c) = entry(rng);
        std::vector<std::size_t> rp(rows), cp(cols);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        IntegerMatrix b(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) b.at(r, c) = a.at(rp[r], cp[c]);
        CHECK(smith_normal_form(a) == smith_normal_form(b));
    }
}

TEST_CASE("rank over Q dominates rank over GF(p)") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> entry(-8, 8);
    for (int trial = 0; trial < 80; ++trial) {
        IntegerMatrix a(4, 5);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 5; ++c) a.at(r, c) = entry(rng);
        auto inv = smith_normal_form(a);
        for (int p : {2, 3, 5}) CHECK(field_rank(inv, 0) >= field_rank(inv, p));
    }
}

TEST_CASE("two isolated vertices are not acyclic") {
    LabeledComplex c = full_edge(2, 2, {{2, 3}, {3, 2}});
    LabeledComplex r = c.restricted(Monomial(Ambient{2, 2}, {2, 2, 2, 2}));
    HomologyProfile p = reduced_homology(r, 0);
    CHECK(p.betti == std::vector<long>{0, 1});
    CHECK_FALSE(p.all_zero());
    CHECK_FALSE(is_acyclic(r, 0));
}

TEST_CASE("the full square is acyclic") {
    CHECK(is_acyclic(full_edge(2, 2, {{1, 1}, {1, 1}}), 0));
}

TEST_CASE("the hollow square has a one-dimensional cycle") {
    // vertices and edges of the square without its 2-cell, assembled directly
    SignComplex circle;
    circle.dims = {1, 4, 4};
    circle.diff.resize(3);
    circle.diff[1] = from_rows({{1, 1, 1, 1}});
    // columns (1,12),(12,1),(12,2),(2,12); rows (1,1),(1,2),(2,1),(2,2)
    circle.diff[2] = from_rows({{1, -1, 0, 0}, {-1, 0, -1, 0}, {0, 1, 0, 1}, {0, 0, 1, -1}});
    HomologyProfile p = homology(circle, 0);
    CHECK(p.betti == std::vector<long>{0, 0, 1});
}

TEST_CASE("paths and simplices are acyclic") {
    LabeledComplex square = full_edge(2, 2, {{1, 1}, {2, 3}});
    LabeledComplex path = square.restricted(Monomial(Ambient{2, 2}, {2, 2, 2, 1}));
    CHECK(path.faces_by_degree()[1].size() == 3);
    CHECK(path.faces_by_degree()[2].size() == 2);
    CHECK(is_acyclic(path, 0));
    CHECK(is_acyclic(full_edge(1, 3, {{1, 2, 3}}), 0));
}

TEST_CASE("empty complex is rejected") {
    LabeledComplex c = full_edge(2, 2, {{1, 1}, {1, 1}});
    LabeledComplex none = c.restricted(Monomial::y(Ambient{2, 2}, 1, 1));
    CHECK(none.is_empty());
    CHECK_THROWS_AS(reduced_homology(none, 0), std::invalid_argument);
}

TEST_CASE("torsion is reported and characteristic matters") {
    SignComplex c;
    c.dims = {1, 1};
    c.diff.resize(2);
    c.diff[1] = from_rows({{2}});
    HomologyProfile char0 = homology(c, 0);
    CHECK(char0.betti == std::vector<long>{0, 0});
    REQUIRE(char0.torsion.size() == 1);
    CHECK(char0.torsion[0].first == 0);
    CHECK(char0.torsion[0].second == std::vector<BigInt>{2});
    HomologyProfile char2 = homology(c, 2);
    CHECK(char2.betti == std::vector<long>{1, 1});
    HomologyProfile char3 = homology(c, 3);
    CHECK(char3.betti == std::vector<long>{0, 0});
}

TEST_CASE("strand at the top multidegree is the whole sign complex") {
    LabeledComplex c = full_edge(2, 2, {{1, 1}, {1, 1}});
    FreeChainComplex f = build_cellular(c);
    Monomial top = c.face_label(Face{{1, 2}, {1, 2}});
    SignComplex s = strand(f, top);
    SignComplex a = augmented_sign_complex(c);
    CHECK(s.dims == a.dims);
    for (std::size_t d = 1; d < s.diff.size(); ++d) CHECK(s.diff[d] == a.diff[d]);
}

TEST_CASE("strand at the isolating multidegree") {
    LabeledComplex c = full_edge(2, 2, {{2, 3}, {3, 2}});
    FreeChainComplex f = build_cellular(c);
    SignComplex s = strand(f, Monomial(Ambient{2, 2}, {2, 2, 2, 2}));
    CHECK(s.dims == std::vector<std::size_t>{1, 2});
    HomologyProfile p = homology(s, 0);
    CHECK(p.betti == std::vector<long>{0, 1});
}

TEST_CASE("strand at a single generator is acyclic") {
    LabeledComplex c = full_edge(2, 2, {{2, 3}, {3, 2}});
    FreeChainComplex f = build_cellular(c);
    SignComplex s = strand(f, c.labeling().label(1, 1));
    CHECK(s.dims == std::vector<std::size_t>{1, 1});
    CHECK(homology(s, 0).all_zero());
}

TEST_CASE("strand homology equals restriction homology across a small grid") {
    for (std::int64_t a = 1; a <= 2; ++a)
        for (std::int64_t b = 1; b <= 2; ++b)
            for (std::int64_t c = 1; c <= 2; ++c)
                for (std::int64_t d = 1; d <= 2; ++d) {
                    LabeledComplex complex = full_edge(2, 2, {{a, b}, {c, d}});
                    FreeChainComplex f = build_cellular(complex);
                    for (const Monomial& mono : lcm_lattice(complex.labeling())) {
                        HomologyProfile via_strand = homology(strand(f, mono), 0);
                        HomologyProfile via_restrict =
                            reduced_homology(complex.restricted(mono), 0);
                        CHECK(profiles_equal(via_strand, via_restrict));
                    }
                }
}
