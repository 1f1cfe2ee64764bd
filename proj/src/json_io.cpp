#include "nullcert/json_io.hpp"

#include <string>

namespace nullcert {

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.push_back(Edge::of(e.at(0).get<Vertex>(), e.at(1).get<Vertex>()));
  return Graph(j.at("n").get<int>(), edges);
}

Json exponents_to_json(const ExponentVector& m) {
  Json out = Json::object();
  for (const auto& f : m.factors()) out[std::to_string(f.vertex)] = f.exponent;
  return out;
}

ExponentVector exponents_from_json(const Json& j) {
  std::vector<VarPower> f;
  for (const auto& [key, value] : j.items()) f.push_back({std::stoi(key), value.get<int>()});
  return ExponentVector(std::move(f));
}

}  // namespace nullcert
