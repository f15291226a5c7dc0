#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zeon/hypergraph.hpp"
#include "zeon/rational.hpp"

namespace zeon {

/// One enumerated structure: its vertex set, its hyperedge set (empty when the
/// enumeration does not track edges) and a multiplicity.
struct Record {
    VertexSet vertices;
    EdgeSet edges;
    Rational count{1};

    friend bool operator==(const Record&, const Record&) = default;
};

/// Lexicographic by vertex set, then edge set, then count.
bool record_less(const Record& a, const Record& b);
void sort_records(std::vector<Record>& records);

/// {"vertices": [...], "edges": [...], "count": c}, ids 1-based. Counts that
/// do not fit a 64-bit integer are written as decimal strings.
nlohmann::json to_json(const Record& r);
/// {"kind": kind, "k": k, "records": [...]}, records sorted.
nlohmann::json structure_report(const std::string& kind, unsigned k, std::vector<Record> records);

nlohmann::json ids_to_json(const std::vector<std::uint32_t>& ids);
nlohmann::json to_json(const Rational& r);

}  // namespace zeon
