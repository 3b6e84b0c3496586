#include "core/formats.hpp"

#include <algorithm>
#include <sstream>

#include "core/error.hpp"
#include "json.hpp"

namespace cg {

using nlohmann::json;

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail_parse(std::string(what) + ": " + e.what());
  }
}

std::string concept_string(const Bitset& concept_bits, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int p = 0; p < n; ++p)
    if (concept_bits.test(static_cast<std::size_t>(p))) s[static_cast<std::size_t>(p)] = '1';
  return s;
}

}  // namespace

std::string class_to_json(const ConceptClass& cls) {
  json j;
  j["domain_size"] = cls.domain_size();
  if (!cls.point_names().empty()) j["point_names"] = cls.point_names();
  json concepts = json::array();
  for (const auto& c : cls.concepts()) concepts.push_back(concept_string(c, cls.domain_size()));
  j["concepts"] = std::move(concepts);
  return j.dump();
}

ConceptClass class_from_json(std::string_view text) {
  json j = parse_json(text, "class file");
  if (!j.is_object() || !j.contains("domain_size") || !j.contains("concepts"))
    fail_parse("class file: expected an object with domain_size and concepts");
  if (!j["domain_size"].is_number_integer())
    fail_parse("class file: domain_size must be an integer");
  const int n = j["domain_size"].get<int>();
  if (n < 1) fail_argument("class file: domain_size must be >= 1, got " + std::to_string(n));
  if (!j["concepts"].is_array()) fail_parse("class file: concepts must be an array of strings");

  std::vector<Bitset> concepts;
  std::size_t index = 0;
  for (const auto& item : j["concepts"]) {
    if (!item.is_string()) fail_parse("class file: concept " + std::to_string(index) + " is not a string");
    const std::string s = item.get<std::string>();
    if (s.size() != static_cast<std::size_t>(n))
      fail_parse("class file: concept " + std::to_string(index) + " has length " +
                 std::to_string(s.size()) + ", expected " + std::to_string(n));
    Bitset bits(static_cast<std::size_t>(n));
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      if (s[pos] == '1')
        bits.set(pos);
      else if (s[pos] != '0')
        fail_parse("class file: concept " + std::to_string(index) + " has invalid character '" +
                   std::string(1, s[pos]) + "' at position " + std::to_string(pos));
    }
    concepts.push_back(std::move(bits));
    ++index;
  }

  std::vector<std::string> names;
  if (j.contains("point_names")) {
    if (!j["point_names"].is_array()) fail_parse("class file: point_names must be an array");
    for (const auto& item : j["point_names"]) {
      if (!item.is_string()) fail_parse("class file: point_names entries must be strings");
      names.push_back(item.get<std::string>());
    }
    if (names.size() != static_cast<std::size_t>(n))
      fail_parse("class file: point_names has " + std::to_string(names.size()) +
                 " entries, expected " + std::to_string(n));
  }
  return ConceptClass(n, std::move(concepts), std::move(names));
}

namespace {

json graph_body(const ContradictionGraph& g) {
  json vertices = json::array();
  for (const auto& s : g.vertices()) {
    json seq = json::array();
    for (const auto& [p, b] : s) seq.push_back(json::array({p, b}));
    vertices.push_back(std::move(seq));
  }
  json edges = json::array();
  for (std::int32_t u = 0; u < g.vertex_count(); ++u) {
    for (std::ptrdiff_t v = g.adjacency()[static_cast<std::size_t>(u)].find_next(
             static_cast<std::size_t>(u));
         v >= 0;
         v = g.adjacency()[static_cast<std::size_t>(u)].find_next(static_cast<std::size_t>(v)))
      edges.push_back(json::array({u, static_cast<std::int32_t>(v)}));
  }
  json body;
  body["m"] = g.order();
  body["vertices"] = std::move(vertices);
  body["edges"] = std::move(edges);
  return body;
}

}  // namespace

std::string graph_to_json(const ContradictionGraph& g) {
  json body = graph_body(g);
  json out;
  out["m"] = body["m"];
  out["class"] = fnv1a_digest(body.dump());
  out["vertices"] = std::move(body["vertices"]);
  out["edges"] = std::move(body["edges"]);
  return out.dump();
}

ContradictionGraph graph_from_json(std::string_view text) {
  json j = parse_json(text, "graph file");
  if (!j.is_object() || !j.contains("m") || !j.contains("vertices") || !j.contains("edges"))
    fail_parse("graph file: expected an object with m, vertices and edges");
  if (!j["m"].is_number_integer() || j["m"].get<int>() < 1)
    fail_parse("graph file: m must be a positive integer");
  const int m = j["m"].get<int>();

  std::vector<LabeledSequence> vertices;
  int max_point = -1;
  std::size_t index = 0;
  for (const auto& seq : j["vertices"]) {
    if (!seq.is_array() || seq.size() != static_cast<std::size_t>(m))
      fail_parse("graph file: vertex " + std::to_string(index) + " is not a length-" +
                 std::to_string(m) + " sequence");
    LabeledSequence s;
    for (const auto& entry : seq) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
          !entry[1].is_number_integer())
        fail_parse("graph file: vertex " + std::to_string(index) +
                   " has a malformed (point, bit) entry");
      const int p = entry[0].get<int>();
      const int b = entry[1].get<int>();
      if (p < 0) fail_parse("graph file: vertex " + std::to_string(index) + " has a negative point");
      if (b != 0 && b != 1)
        fail_parse("graph file: vertex " + std::to_string(index) + " has a bit outside {0,1}");
      max_point = std::max(max_point, p);
      s.emplace_back(p, b);
    }
    if (!vertices.empty() && !(vertices.back() < s))
      fail_parse("graph file: vertices are not in canonical order at index " +
                 std::to_string(index));
    vertices.push_back(std::move(s));
    ++index;
  }
  if (vertices.empty()) fail_parse("graph file: vertex list is empty");

  const std::size_t v = vertices.size();
  std::vector<Bitset> adjacency(v, Bitset(v));
  index = 0;
  std::pair<std::int64_t, std::int64_t> prev{-1, -1};
  for (const auto& edge : j["edges"]) {
    if (!edge.is_array() || edge.size() != 2 || !edge[0].is_number_integer() ||
        !edge[1].is_number_integer())
      fail_parse("graph file: edge " + std::to_string(index) + " is malformed");
    const std::int64_t a = edge[0].get<std::int64_t>();
    const std::int64_t b = edge[1].get<std::int64_t>();
    if (a < 0 || b < 0 || a >= static_cast<std::int64_t>(v) || b >= static_cast<std::int64_t>(v))
      fail_parse("graph file: edge " + std::to_string(index) + " references a missing vertex");
    if (a >= b) fail_parse("graph file: edge " + std::to_string(index) + " must satisfy u < v");
    if (std::pair{a, b} <= prev)
      fail_parse("graph file: edges out of order or duplicated at index " + std::to_string(index));
    prev = {a, b};
    adjacency[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
    adjacency[static_cast<std::size_t>(b)].set(static_cast<std::size_t>(a));
    ++index;
  }
  return ContradictionGraph(m, nullptr, std::move(vertices), std::move(adjacency), max_point + 1);
}

// ---------------------------------------------------------------------------
// graph6 / DIMACS
// ---------------------------------------------------------------------------

std::string to_graph6(const std::vector<Bitset>& adjacency) {
  const std::size_t n = adjacency.size();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else if (n <= 68719476735ull) {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    fail_limit("graph6: vertex count " + std::to_string(n) + " exceeds the format limit");
  }

  int bits = 0;
  int group = 0;
  for (std::size_t col = 1; col < n; ++col) {
    for (std::size_t row = 0; row < col; ++row) {
      group = (group << 1) | (adjacency[row].test(col) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + group));
        bits = 0;
        group = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (group << (6 - bits))));
  return out;
}

std::vector<Bitset> from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  if (text.empty()) fail_parse("graph6: empty input");

  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) fail_parse("graph6: truncated input at offset " + std::to_string(pos));
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
      fail_parse("graph6: invalid character at offset " + std::to_string(pos));
    ++pos;
    return c - 63;
  };

  std::uint64_t n = 0;
  int first = next();
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
  } else {
    int second = next();
    if (second < 63) {
      n = static_cast<std::uint64_t>(second);
      for (int i = 0; i < 2; ++i) n = (n << 6) | static_cast<std::uint64_t>(next());
    } else {
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::uint64_t>(next());
    }
  }

  const std::uint64_t pair_bits = n * (n - 1) / 2;
  const std::uint64_t expected = (pair_bits + 5) / 6;
  if (text.size() - pos != expected)
    fail_parse("graph6: expected " + std::to_string(expected) + " adjacency characters, got " +
               std::to_string(text.size() - pos));

  std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  int bits = 0;
  int group = 0;
  for (std::size_t col = 1; col < n; ++col) {
    for (std::size_t row = 0; row < col; ++row) {
      if (bits == 0) {
        group = next();
        bits = 6;
      }
      if ((group >> (bits - 1)) & 1) {
        rows[row].set(col);
        rows[col].set(row);
      }
      --bits;
    }
  }
  return rows;
}

std::string to_dimacs(const std::vector<Bitset>& adjacency) {
  const std::size_t n = adjacency.size();
  std::int64_t edges = 0;
  for (const auto& row : adjacency) edges += static_cast<std::int64_t>(row.count());
  edges /= 2;

  std::ostringstream out;
  out << "p edge " << n << ' ' << edges << '\n';
  for (std::size_t u = 0; u < n; ++u)
    for (std::ptrdiff_t v = adjacency[u].find_next(u); v >= 0;
         v = adjacency[u].find_next(static_cast<std::size_t>(v)))
      out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
  return out.str();
}

std::vector<Bitset> from_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0;
  std::int64_t declared_edges = -1;
  std::int64_t seen_edges = 0;
  std::vector<Bitset> rows;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string kind;
      std::int64_t nn = -1, mm = -1;
      ls >> kind >> nn >> mm;
      if (kind != "edge" || nn < 1 || mm < 0)
        fail_parse("dimacs: bad problem line at line " + std::to_string(line_no));
      n = static_cast<std::size_t>(nn);
      declared_edges = mm;
      rows.assign(n, Bitset(n));
    } else if (tag == "e") {
      if (rows.empty()) fail_parse("dimacs: edge before problem line at line " + std::to_string(line_no));
      std::int64_t u = 0, v = 0;
      if (!(ls >> u >> v) || u < 1 || v < 1 || u > static_cast<std::int64_t>(n) ||
          v > static_cast<std::int64_t>(n) || u == v)
        fail_parse("dimacs: bad edge at line " + std::to_string(line_no));
      const auto a = static_cast<std::size_t>(u - 1);
      const auto b = static_cast<std::size_t>(v - 1);
      if (rows[a].test(b)) fail_parse("dimacs: duplicate edge at line " + std::to_string(line_no));
      rows[a].set(b);
      rows[b].set(a);
      ++seen_edges;
    } else {
      fail_parse("dimacs: unknown line type '" + tag + "' at line " + std::to_string(line_no));
    }
  }
  if (rows.empty()) fail_parse("dimacs: missing problem line");
  if (declared_edges >= 0 && declared_edges != seen_edges)
    fail_parse("dimacs: header declares " + std::to_string(declared_edges) + " edges but " +
               std::to_string(seen_edges) + " were listed");
  return rows;
}

// ---------------------------------------------------------------------------
// Certificates and reports
// ---------------------------------------------------------------------------

namespace {

std::string coordinate_string(CubeWord w, int m) {
  std::string s(static_cast<std::size_t>(m), '0');
  for (int i = 0; i < m; ++i)
    if ((w >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

}  // namespace

std::string certificate_to_json(const CubeTraceCertificate& cert) {
  json j;
  j["m"] = cert.m;
  j["clique"] = cert.clique;
  json phi = json::object();
  for (std::size_t i = 0; i < cert.clique.size(); ++i)
    phi[std::to_string(cert.clique[i])] = coordinate_string(cert.phi[i], cert.m);
  j["phi"] = std::move(phi);
  if (!cert.traces.empty()) {
    json traces = json::object();
    for (const auto& [id, sub] : cert.traces) {
      json t;
      t["fixed"] = coordinate_string(sub.fixed, cert.m);
      t["pattern"] = coordinate_string(sub.pattern, cert.m);
      traces[std::to_string(id)] = std::move(t);
    }
    j["traces"] = std::move(traces);
  }
  return j.dump();
}

std::string detect_report_to_json(const DetectReport& report, std::string_view input_digest) {
  json j;
  switch (report.verdict) {
    case DetectVerdict::found: j["verdict"] = "found"; break;
    case DetectVerdict::not_found: j["verdict"] = "not-found"; break;
    case DetectVerdict::resource_limit: j["verdict"] = "resource-limit"; break;
  }
  if (report.certificate) j["certificate"] = json::parse(certificate_to_json(*report.certificate));
  json counters;
  counters["cliques_examined"] = report.cliques_examined;
  counters["bijections_examined"] = report.bijection_nodes;
  counters["twin_classes"] = report.twin_classes;
  j["counters"] = std::move(counters);
  j["elapsed_ms"] = report.elapsed_ms;
  if (!input_digest.empty()) j["input_digest"] = std::string(input_digest);
  return j.dump();
}

}  // namespace cg
