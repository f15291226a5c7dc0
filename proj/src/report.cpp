#include "zeon/report.hpp"

#include <algorithm>

namespace zeon {

bool record_less(const Record& a, const Record& b) {
    if (a.vertices != b.vertices) {
        return a.vertices < b.vertices;
    }
    if (a.edges != b.edges) {
        return a.edges < b.edges;
    }
    return a.count < b.count;
}

void sort_records(std::vector<Record>& records) {
    std::stable_sort(records.begin(), records.end(), record_less);
}

nlohmann::json ids_to_json(const std::vector<std::uint32_t>& ids) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto id : ids) {
        arr.push_back(id + 1);
    }
    return arr;
}

nlohmann::json to_json(const Rational& r) {
    if (auto v = r.to_int64()) {
        return *v;
    }
    return r.to_string();
}

nlohmann::json to_json(const Record& r) {
    return {{"vertices", ids_to_json(r.vertices)},
            {"edges", ids_to_json(r.edges)},
            {"count", to_json(r.count)}};
}

nlohmann::json structure_report(const std::string& kind, unsigned k, std::vector<Record> records) {
    sort_records(records);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        arr.push_back(to_json(r));
    }
    return {{"kind", kind}, {"k", k}, {"records", std::move(arr)}};
}

}  // namespace zeon
