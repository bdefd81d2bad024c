#include "regembed/graph_io.hpp"

#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

#include "regembed/errors.hpp"

namespace regembed {

namespace {

using nlohmann::json;

Multigraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_n = false;
  Multigraph g;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    if (!have_n) {
      long long n;
      if (!(fields >> n)) {
        if (fields.eof()) continue;  // blank or comment-only line before n
        throw ValidationError("line " + std::to_string(lineno) + ": expected vertex count");
      }
      std::string rest;
      if (fields >> rest)
        throw ValidationError("line " + std::to_string(lineno) + ": trailing tokens after vertex count");
      if (n < 0 || n > 1000000)
        throw ValidationError("line " + std::to_string(lineno) + ": vertex count out of range");
      g = Multigraph(static_cast<int>(n));
      have_n = true;
      continue;
    }
    long long i, j, m = 1;
    if (!(fields >> i)) {
      if (fields.eof()) continue;
      throw ValidationError("line " + std::to_string(lineno) + ": malformed edge line");
    }
    if (!(fields >> j))
      throw ValidationError("line " + std::to_string(lineno) + ": edge line needs two endpoints");
    if (!(fields >> m)) {
      if (!fields.eof())
        throw ValidationError("line " + std::to_string(lineno) + ": malformed multiplicity");
      m = 1;
    } else {
      std::string rest;
      if (fields >> rest)
        throw ValidationError("line " + std::to_string(lineno) + ": trailing tokens on edge line");
    }
    if (i < 1 || i > g.order() || j < 1 || j > g.order())
      throw ValidationError("line " + std::to_string(lineno) + ": vertex out of range 1.." +
                            std::to_string(g.order()));
    if (i == j) throw ValidationError("line " + std::to_string(lineno) + ": loop edge rejected");
    if (m < 0) throw ValidationError("line " + std::to_string(lineno) + ": negative multiplicity");
    g.add_edge(static_cast<int>(i) - 1, static_cast<int>(j) - 1, static_cast<int>(m));
  }
  if (!have_n) throw ValidationError("empty input: missing vertex count");
  return g;
}

Multigraph parse_json_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw ValidationError("JSON graph must be an object with an integer field \"n\"");
  long long n = doc["n"].get<long long>();
  if (n < 0 || n > 1000000) throw ValidationError("vertex count out of range");
  Multigraph g(static_cast<int>(n));
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ValidationError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3)
        throw ValidationError("each edge must be [i, j] or [i, j, m]");
      for (const auto& x : e)
        if (!x.is_number_integer()) throw ValidationError("edge entries must be integers");
      long long i = e[0].get<long long>();
      long long j = e[1].get<long long>();
      long long m = e.size() == 3 ? e[2].get<long long>() : 1;
      if (i < 1 || i > n || j < 1 || j > n)
        throw ValidationError("edge endpoint out of range 1.." + std::to_string(n));
      if (i == j) throw ValidationError("loop edge rejected");
      if (m < 0) throw ValidationError("negative multiplicity");
      g.add_edge(static_cast<int>(i) - 1, static_cast<int>(j) - 1, static_cast<int>(m));
    }
  }
  return g;
}

}  // namespace

Multigraph parse_multigraph(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_json_graph(text);
    return parse_edge_list(text);
  }
  throw ValidationError("empty input");
}

std::string serialize_multigraph(const Multigraph& g, GraphFormat format) {
  if (format == GraphFormat::edge_list) {
    std::ostringstream out;
    out << g.order() << "\n";
    for (const auto& [i, j, m] : g.edge_list()) {
      out << (i + 1) << " " << (j + 1);
      if (m != 1) out << " " << m;
      out << "\n";
    }
    return out.str();
  }
  json edges = json::array();
  for (const auto& [i, j, m] : g.edge_list()) edges.push_back({i + 1, j + 1, m});
  json doc = {{"n", g.order()}, {"edges", edges}};
  return doc.dump();
}

}  // namespace regembed
