#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "cellres/chain_complex.hpp"
#include "cellres/criteria.hpp"
#include "cellres/homology.hpp"
#include "cellres/weighting.hpp"

namespace cellres {

using GraphInput = std::variant<EdgeWeighting, VertexWeighting>;

/// Parses {"m":..,"n":..,"edge_weights":[[..]]} or
/// {"m":..,"n":..,"vertex_weights":{"x":[..],"y":[..]}}.  Exactly one of the
/// two weight keys must be present; throws std::invalid_argument otherwise.
GraphInput parse_graph_input(const nlohmann::json& j);
GraphInput parse_graph_input_text(const std::string& text);

VertexLabeling labels_of(const GraphInput& input);

nlohmann::json monomial_json(const Monomial& m);
nlohmann::json entry_json(const MonomialSum& s);  // null for zero entries
nlohmann::json matrix_json(const MonomialMatrix& m);
nlohmann::json complex_json(const FreeChainComplex& f);
nlohmann::json profile_json(const HomologyProfile& p);
nlohmann::json survey_json(const SurveyReport& r, bool include_verdicts);

/// A script for an external computer-algebra cross-check: declares the ring,
/// the ideal, and every differential, and asserts the compositions vanish.
std::string m2_script(const FreeChainComplex& f, const VertexLabeling& labeling,
                      int characteristic);

}  // namespace cellres
