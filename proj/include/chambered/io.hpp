#pragma once

#include "chambered/coxeter.hpp"
#include "chambered/fan.hpp"
#include "chambered/trunc.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace chambered::io {

using Json = nlohmann::ordered_json;

// {"vertices": n, "edges": [[i, j], ...]} with 1-based indices; parallel
// edges are listed repeatedly. Throws InputError.
InputGraph parse_graph(std::string_view text);
InputGraph load_graph(const std::string& path);  // IoError if unreadable
Json graph_to_json(const InputGraph& g);

// 1-based generators separated by spaces or commas; "" is the identity.
Word parse_word(std::string_view text, int rank);
Json word_to_json(const Word& w);

// Row-major, decimal strings.
Json matrix_to_json(const IntMatrix& m);
Json vector_to_json(const RatVector& v);
Json vector_to_json(const IntVector& v);

Json to_json(const GMatrix& g);
Json to_json(const ChamberResult& r);
Json to_json(const CoverageReport& r);
Json to_json(const SliceCell& c);
Json to_json(const trunc::Presentation& p);
Json to_json(const trunc::OracleResult& r);

// Comma separated, one matrix row per line prefixed by the element word.
std::string gmatrices_to_csv(const std::vector<GMatrix>& gs);

} // namespace chambered::io
