#ifndef COGDIM_JSON_IO_HPP
#define COGDIM_JSON_IO_HPP

#include <json.hpp>

#include "cogdim/boxes.hpp"
#include "cogdim/certificate.hpp"
#include "cogdim/coloring.hpp"
#include "cogdim/decomposition.hpp"
#include "cogdim/recognition.hpp"
#include "cogdim/threshold_cover.hpp"

namespace cogdim {

using json = nlohmann::json;

json graph_to_json(const Graph& g);

json representation_to_json(const Representation& rep);
Representation representation_from_json(const json& j);

json certificate_to_json(const Certificate& cert);

json tree_decomposition_to_json(const TreeDecomposition& dec);
TreeDecomposition tree_decomposition_from_json(const json& j);

json path_decomposition_to_json(const PathDecomposition& dec);
PathDecomposition path_decomposition_from_json(const json& j);

json box_representation_to_json(const BoxRepresentation& rep);
BoxRepresentation box_representation_from_json(const json& j);

json coloring_to_json(const Coloring& coloring);
Coloring coloring_from_json(const json& j);

json witness_check_to_json(const WitnessCheck& check);
json auxiliary_graph_to_json(const AuxiliaryGraph& aux);

}  // namespace cogdim

#endif
