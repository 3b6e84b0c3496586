#ifndef CONTRAGRAPH_CORE_FORMATS_HPP
#define CONTRAGRAPH_CORE_FORMATS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "core/certificate.hpp"
#include "core/concepts.hpp"
#include "core/graph.hpp"

namespace cg {

// FNV-1a over the raw bytes, rendered as 16 hex digits.
std::string fnv1a_digest(std::string_view bytes);

// Class files: {"domain_size": n, "point_names": [...]?, "concepts": ["0110", ...]}
// where character j of a concept string is the label of point j.
std::string class_to_json(const ConceptClass& cls);
ConceptClass class_from_json(std::string_view text);

// Graph files: {"class": <content digest>, "edges": [[u,v],...], "m": m,
// "vertices": [[[point,bit],...],...]} with edges u < v sorted. The digest
// covers m, vertices and edges, so equal graphs serialize byte-identically.
std::string graph_to_json(const ContradictionGraph& g);
ContradictionGraph graph_from_json(std::string_view text);

// Adjacency-only formats.
std::string to_graph6(const std::vector<Bitset>& adjacency);
std::vector<Bitset> from_graph6(std::string_view text);
std::string to_dimacs(const std::vector<Bitset>& adjacency);
std::vector<Bitset> from_dimacs(std::string_view text);

// Certificate and report payloads.
std::string certificate_to_json(const CubeTraceCertificate& cert);
std::string detect_report_to_json(const DetectReport& report, std::string_view input_digest = {});

}  // namespace cg

#endif
