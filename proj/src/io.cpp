#include "cellres/io.hpp"

#include <sstream>
#include <stdexcept>

#include "cellres/render.hpp"

namespace cellres {

namespace {

std::vector<std::int64_t> int_vector(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<std::int64_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + " entries must be integers");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

}  // namespace

GraphInput parse_graph_input(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("graph input must be a JSON object");
    if (!j.contains("m") || !j.contains("n") || !j.at("m").is_number_integer() ||
        !j.at("n").is_number_integer())
        throw std::invalid_argument("graph input needs integer fields \"m\" and \"n\"");
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    const bool has_edge = j.contains("edge_weights");
    const bool has_vertex = j.contains("vertex_weights");
    if (has_edge == has_vertex)
        throw std::invalid_argument(
            "graph input needs exactly one of \"edge_weights\" or \"vertex_weights\"");
    if (has_edge) {
        const auto& rows = j.at("edge_weights");
        if (!rows.is_array()) throw std::invalid_argument("edge_weights must be an array of rows");
        std::vector<std::vector<std::int64_t>> omega;
        for (const auto& row : rows) omega.push_back(int_vector(row, "edge_weights row"));
        return EdgeWeighting(m, n, std::move(omega));
    }
    const auto& vw = j.at("vertex_weights");
    if (!vw.is_object() || !vw.contains("x") || !vw.contains("y"))
        throw std::invalid_argument("vertex_weights must be an object with \"x\" and \"y\"");
    return VertexWeighting(m, n, int_vector(vw.at("x"), "vertex_weights.x"),
                           int_vector(vw.at("y"), "vertex_weights.y"));
}

GraphInput parse_graph_input_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
    return parse_graph_input(j);
}

VertexLabeling labels_of(const GraphInput& input) {
    if (std::holds_alternative<EdgeWeighting>(input))
        return edge_weight_labels(std::get<EdgeWeighting>(input));
    return vertex_weight_labels(std::get<VertexWeighting>(input));
}

nlohmann::json monomial_json(const Monomial& m) {
    return nlohmann::json(m.exponents());
}

nlohmann::json entry_json(const MonomialSum& s) {
    if (s.is_zero()) return nullptr;
    if (s.is_single_term()) {
        auto [mono, coeff] = s.single_term();
        return nlohmann::json{{"coeff", coeff}, {"exponents", monomial_json(mono)}};
    }
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mono, coeff] : s.terms())
        terms.push_back({{"coeff", coeff}, {"exponents", monomial_json(mono)}});
    return nlohmann::json{{"terms", terms}};
}

nlohmann::json matrix_json(const MonomialMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(entry_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json complex_json(const FreeChainComplex& f) {
    nlohmann::json out;
    out["m"] = f.amb.m;
    out["n"] = f.amb.n;
    out["ranks"] = f.ranks();
    nlohmann::json bases = nlohmann::json::array();
    for (const auto& bucket : f.basis) {
        nlohmann::json degree = nlohmann::json::array();
        for (const auto& el : bucket) degree.push_back(render_tag(el.tag));
        bases.push_back(std::move(degree));
    }
    out["basis"] = std::move(bases);
    nlohmann::json mats = nlohmann::json::array();
    for (int d = 1; d <= f.top_degree(); ++d)
        mats.push_back({{"degree", d},
                        {"rows", f.diff[d].rows()},
                        {"cols", f.diff[d].cols()},
                        {"entries", matrix_json(f.diff[d])}});
    out["differentials"] = std::move(mats);
    return out;
}

nlohmann::json profile_json(const HomologyProfile& p) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& [d, invs] : p.torsion) {
        nlohmann::json list = nlohmann::json::array();
        for (const BigInt& v : invs) list.push_back(v.str());
        torsion.push_back(nlohmann::json::array({d, list}));
    }
    return nlohmann::json{
        {"betti", p.betti}, {"torsion", torsion}, {"characteristic", p.characteristic}};
}

nlohmann::json survey_json(const SurveyReport& r, bool include_verdicts) {
    nlohmann::json out;
    out["m"] = r.m;
    out["n"] = r.n;
    out["max_weight"] = r.max_weight;
    out["characteristic"] = r.characteristic;
    out["total"] = r.total;
    out["agreements"] = r.agreements;
    out["predicate_true"] = r.predicate_true;
    out["betti_mismatches"] = r.betti_mismatches;
    out["minimality_failures"] = r.minimality_failures;
    out["compose_failures"] = r.compose_failures;
    nlohmann::json dis = nlohmann::json::array();
    for (const auto& d : r.disagreements) {
        nlohmann::json item{{"weights", d.weights},
                            {"theorem", d.theorem_ok},
                            {"oracle", d.oracle_ok}};
        if (d.witness) item["witness"] = render_monomial(*d.witness);
        dis.push_back(std::move(item));
    }
    out["disagreements"] = std::move(dis);
    nlohmann::json tors = nlohmann::json::array();
    for (const auto& t : r.torsion) {
        nlohmann::json invs = nlohmann::json::array();
        for (const BigInt& v : t.sighting.invariants) invs.push_back(v.str());
        tors.push_back({{"weights", t.weights},
                        {"multidegree", render_monomial(t.sighting.multidegree)},
                        {"degree", t.sighting.degree},
                        {"invariants", invs}});
    }
    out["torsion_sightings"] = std::move(tors);
    if (include_verdicts) {
        nlohmann::json verdicts = nlohmann::json::array();
        for (const auto& v : r.verdicts)
            verdicts.push_back(
                {{"weights", v.weights}, {"theorem", v.theorem_ok}, {"oracle", v.oracle_ok}});
        out["verdicts"] = std::move(verdicts);
    }
    return out;
}

std::string m2_script(const FreeChainComplex& f, const VertexLabeling& labeling,
                      int characteristic) {
    std::ostringstream os;
    os << "-- cellres export: ideal and cellular differentials\n";
    os << "R = " << (characteristic == 0 ? std::string("QQ")
                                         : "ZZ/" + std::to_string(characteristic))
       << "[";
    for (int i = 1; i <= f.amb.m; ++i) os << "X" << i << ",";
    for (int j = 1; j <= f.amb.n; ++j) os << "Y" << j << (j == f.amb.n ? "" : ",");
    os << "];\n";
    os << "I = ideal(";
    for (std::size_t k = 0; k < labeling.labels.size(); ++k) {
        if (k) os << ",";
        os << render_monomial(labeling.labels[k]);
    }
    os << ");\n";
    for (int d = 1; d <= f.top_degree(); ++d) {
        os << "d" << d << " = map(R^" << f.diff[d].rows() << ", R^" << f.diff[d].cols()
           << ", matrix{";
        for (std::size_t r = 0; r < f.diff[d].rows(); ++r) {
            if (r) os << ",";
            os << "{";
            for (std::size_t c = 0; c < f.diff[d].cols(); ++c) {
                if (c) os << ",";
                const MonomialSum& e = f.diff[d].at(r, c);
                os << (e.is_zero() ? std::string("0_R") : render_sum(e));
            }
            os << "}";
        }
        os << "});\n";
    }
    for (int d = 2; d <= f.top_degree(); ++d)
        os << "assert(d" << (d - 1) << " * d" << d << " == 0);\n";
    if (f.top_degree() >= 1) os << "assert(ideal(d1) == I);\n";
    return os.str();
}

}  // namespace cellres
