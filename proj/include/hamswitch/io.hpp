#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hamswitch/analysis.hpp"
#include "hamswitch/graph.hpp"
#include "hamswitch/js_chain.hpp"
#include "hamswitch/monotone.hpp"
#include "hamswitch/reconfigure.hpp"
#include "hamswitch/switch_chain.hpp"

namespace hamswitch {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = HAMSWITCH_VERSION;

/// Header "n m [bipartite a]" then m lines "u v", 0-indexed. Blank lines and
/// lines starting with '#' are skipped. Throws ParseError with the line.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

/// Same layout as a graph file ("n m" header); every edge must be in g.
EdgeList read_edges(std::istream& in, const Graph& g);
EdgeList read_edges_file(const std::string& path, const Graph& g);
void write_edges(std::ostream& out, int n, const EdgeList& e);
void write_edges_file(const std::string& path, int n, const EdgeList& e);

Json to_json(const EdgeList& e);
Json to_json(const ChainConfig& c);
Json to_json(const Trajectory& t);
Json to_json(const TransformTrace& t);
Json to_json(const MixReport& r);
Json to_json(const JsReport& r);
Json to_json(const PathSystem& ps);
Json to_json(const PhiResult& r);
Json to_json(const Rational& r);

/// Wraps a payload with tool name, version, RNG identity, the config and a
/// timestamp. Everything except "timestamp" is a function of the inputs.
Json envelope(const std::string& command, const Json& config, const Json& result);

/// Copy of j with every "timestamp" key removed, recursively.
Json strip_timestamps(Json j);

}  // namespace hamswitch
