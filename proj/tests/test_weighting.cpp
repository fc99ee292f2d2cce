#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cellres/render.hpp"
#include "cellres/weighting.hpp"

using namespace cellres;

namespace {

std::set<std::string> label_set(const VertexLabeling& labeling) {
    std::set<std::string> out;
    for (const Monomial& m : labeling.labels) out.insert(render_monomial(m));
    return out;
}

}  // namespace

TEST_CASE("edge weight labels") {
    CHECK(label_set(edge_weight_labels(EdgeWeighting(2, 2, {{1, 1}, {1, 1}}))) ==
          std::set<std::string>{"X1*Y1", "X1*Y2", "X2*Y1", "X2*Y2"});
    CHECK(label_set(edge_weight_labels(EdgeWeighting(2, 2, {{2, 2}, {3, 2}}))) ==
          std::set<std::string>{"X1^2*Y1^2", "X1^2*Y2^2", "X2^3*Y1^3", "X2^2*Y2^2"});
    CHECK(label_set(edge_weight_labels(EdgeWeighting(1, 1, {{5}}))) ==
          std::set<std::string>{"X1^5*Y1^5"});
}

TEST_CASE("vertex weight labels") {
    // (a,b,c,d) = (1,2,3,4)
    CHECK(label_set(vertex_weight_labels(VertexWeighting(2, 2, {1, 3}, {2, 4}))) ==
          std::set<std::string>{"X1*Y1^2", "X1*Y2^4", "X2^3*Y1^2", "X2^3*Y2^4"});
    CHECK(label_set(vertex_weight_labels(VertexWeighting(2, 2, {1, 1}, {1, 1}))) ==
          label_set(edge_weight_labels(EdgeWeighting(2, 2, {{1, 1}, {1, 1}}))));
    CHECK(label_set(vertex_weight_labels(VertexWeighting(1, 3, {2}, {1, 1, 1}))) ==
          std::set<std::string>{"X1^2*Y1", "X1^2*Y2", "X1^2*Y3"});
}

TEST_CASE("edge labels have equal X and Y exponents, vertex labels generally not") {
    VertexLabeling edge = edge_weight_labels(EdgeWeighting(2, 2, {{2, 3}, {3, 2}}));
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            CHECK(edge.label(i, j).x_exponent(i) == edge.label(i, j).y_exponent(j));
    VertexLabeling vertex = vertex_weight_labels(VertexWeighting(2, 2, {1, 3}, {2, 4}));
    CHECK(vertex.label(1, 1).x_exponent(1) != vertex.label(1, 1).y_exponent(1));
}

TEST_CASE("delete_vertex") {
    EdgeWeighting w(2, 2, {{2, 2}, {3, 2}});
    EdgeWeighting dx = delete_vertex(w, Side::X, 2);
    CHECK(dx.m == 1);
    CHECK(dx.omega == std::vector<std::vector<std::int64_t>>{{2, 2}});

    EdgeWeighting fail(2, 2, {{2, 3}, {3, 2}});
    EdgeWeighting dy = delete_vertex(fail, Side::Y, 1);
    CHECK(dy.omega == std::vector<std::vector<std::int64_t>>{{3}, {2}});

    EdgeWeighting wide(2, 3, {{1, 1, 1}, {2, 3, 4}});
    EdgeWeighting dx1 = delete_vertex(wide, Side::X, 1);
    CHECK(dx1.omega == std::vector<std::vector<std::int64_t>>{{2, 3, 4}});

    CHECK_THROWS_AS(delete_vertex(dx1, Side::X, 1), std::invalid_argument);
    CHECK_THROWS_AS(delete_vertex(w, Side::X, 3), std::invalid_argument);
}

TEST_CASE("delete then label equals label then delete") {
    EdgeWeighting w(3, 3, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    for (int i = 1; i <= 3; ++i) {
        VertexLabeling after = edge_weight_labels(delete_vertex(w, Side::X, i));
        VertexLabeling full = edge_weight_labels(w);
        for (int r = 1, src = 1; r <= 2; ++r, ++src) {
            if (src == i) ++src;
            for (int j = 1; j <= 3; ++j) {
                // the deleted row drops out; the survivors keep their exponents
                // on the re-numbered X variable
                CHECK(after.label(r, j).x_exponent(r) == full.label(src, j).x_exponent(src));
                CHECK(after.label(r, j).y_exponent(j) == full.label(src, j).y_exponent(j));
            }
        }
    }
}

TEST_CASE("min_weight") {
    CHECK(min_weight(EdgeWeighting(2, 2, {{2, 3}, {3, 2}})) == 2);
    CHECK(min_weight(EdgeWeighting(1, 1, {{7}})) == 7);
    CHECK(min_weight(EdgeWeighting(2, 2, {{1, 2}, {3, 4}})) == 1);
}

TEST_CASE("weighting validation") {
    CHECK_THROWS_AS(EdgeWeighting(2, 2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeWeighting(1, 2, {{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(VertexWeighting(2, 1, {1}, {1}), std::invalid_argument);
}
