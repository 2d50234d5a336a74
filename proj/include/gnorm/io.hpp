#pragma once

#include "gnorm/constructions.hpp"
#include "gnorm/cycles.hpp"
#include "gnorm/density.hpp"
#include "gnorm/graph.hpp"
#include "gnorm/symmetry.hpp"

#include <json.hpp>

#include <string>

namespace gnorm {

using nlohmann::json;

// ParseError messages carry "line L, column C".
json parse_json_text(const std::string &text, const std::string &source = "<input>");
json read_json_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

json graph_to_json(const BipartiteGraph &g);
BipartiteGraph graph_from_json(const json &j);

json colouring_to_json(const Colouring &a);
Colouring colouring_from_json(const json &j);

json kernel_to_json(const StepKernel &f);
StepKernel kernel_from_json(const json &j);

json tournament_to_json(const Tournament &t);
Tournament tournament_from_json(const json &j);

json hypergraph_to_json(const UniformHypergraph &h);
UniformHypergraph hypergraph_from_json(const json &j);

json witness_to_json(const Witness &w, const Colouring &a);
Witness witness_from_json(const json &j);

json symmetry_to_json(const SymmetryReport &s);
json cycle_to_json(const BipartiteGraph &g, const Cycle &c);
json profile_to_json(const FourCycleProfile &p);
json complex_to_json(cplx z);

} // namespace gnorm
