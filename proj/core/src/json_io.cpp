#include "trgr/json_io.hpp"

#include <json.hpp>

namespace trgr {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json matrix_json(const RationalMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json vector_json(const std::vector<Rat>& v) {
    ordered_json out = ordered_json::array();
    for (const Rat& x : v) out.push_back(rat_str(x));
    return out;
}

}  // namespace

std::string to_json(const RationalMatrix& m) { return matrix_json(m).dump(); }

RationalMatrix matrix_from_json(const std::string& text) {
    const ordered_json rows = ordered_json::parse(text);
    if (!rows.is_array()) throw std::invalid_argument("matrix_from_json: expected array");
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("matrix_from_json: ragged rows");
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = rat_parse(rows[i][j].get<std::string>());
    }
    return m;
}

std::string to_json(const PluckerVector& v) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < v.index.size(); ++i)
        obj[v.index[i].key()] = rat_str(v.coords[i]);
    return obj.dump();
}

std::string to_json(const ExceptionalProbe& probe) {
    ordered_json j;
    j["n"] = probe.n;
    j["d"] = probe.d;
    j["r"] = probe.r;
    j["seed"] = probe.seed;
    j["curves"] = ordered_json::array();
    for (const CurveLimit& c : probe.curves) {
        ordered_json cj;
        cj["valuation"] = c.valuation;
        cj["limit"] = vector_json(c.limit);
        j["curves"].push_back(std::move(cj));
    }
    j["span_dim"] = probe.span_dim;
    j["proj_dim"] = probe.proj_dim;
    j["quadratic_fallback"] = probe.quadratic_fallback;
    return j.dump();
}

std::string to_json(const SmoothnessReport& report) {
    ordered_json j;
    j["n"] = report.n;
    j["d"] = report.d;
    j["seed"] = report.seed;
    j["expected_rank"] = report.expected_rank;
    j["samples"] = ordered_json::array();
    for (const SmoothnessSample& s : report.samples) {
        ordered_json sj;
        sj["on_exceptional"] = s.on_exceptional;
        sj["rank"] = s.rank;
        sj["full"] = s.full;
        j["samples"].push_back(std::move(sj));
    }
    j["pass"] = report.pass;
    return j.dump();
}

}  // namespace trgr
