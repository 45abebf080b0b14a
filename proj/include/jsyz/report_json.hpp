#pragma once

// JSON and plain-text renderings of reports. Key order is fixed so output is
// byte-identical for a fixed input and seed.

#include <string>

#include <json.hpp>

#include "jsyz/corpus.hpp"
#include "jsyz/search.hpp"

namespace jsyz {

using Json = nlohmann::ordered_json;

Json to_json(const CurveReport& r, bool timings);
Json to_json(const ArrangementCombinatorics& c);
Json to_json(const ArrangementReport& r, bool timings);
Json to_json(const CorpusResult& r, bool timings);
Json to_json(const SearchResult& r, const SearchParams& p);

std::string render_table(const CurveReport& r, bool timings);
std::string render_table(const ArrangementReport& r, bool timings);
/// One line per entry plus failing comparisons underneath.
std::string render_table(const std::vector<CorpusResult>& results);
std::string render_table(const SearchResult& r, const SearchParams& p);

std::string tuple_string(const std::vector<int>& v);

}  // namespace jsyz
