#include "decomp/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "decomp/combinatorics.hpp"

namespace decomp {

namespace {

int get_int_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw std::invalid_argument(std::string("decomposition file: missing integer field '") + key + "'");
    return j[key].get<int>();
}

}  // namespace

nlohmann::json decomposition_to_json(const Decomposition& d) {
    nlohmann::json j;
    j["n"] = d.order();
    j["r"] = d.uniformity();
    j["k"] = d.parts();
    j["colors"] = nlohmann::json::array();
    for (std::uint8_t c : d.colors()) j["colors"].push_back(static_cast<int>(c));
    return j;
}

nlohmann::json decomposition_to_explicit_json(const Decomposition& d) {
    nlohmann::json j;
    j["n"] = d.order();
    j["r"] = d.uniformity();
    j["k"] = d.parts();
    auto edges = nlohmann::json::array();
    for (std::uint32_t t = 0; t < d.edge_count(); ++t) {
        nlohmann::json e;
        e["vertices"] = unrank_edge(EdgeId{t}, d.order(), d.uniformity());
        e["part"] = static_cast<int>(d.color_of(EdgeId{t}));
        edges.push_back(std::move(e));
    }
    j["edges"] = std::move(edges);
    return j;
}

Decomposition decomposition_from_json(const nlohmann::json& j) {
    int n = get_int_field(j, "n");
    int r = get_int_field(j, "r");
    int k = get_int_field(j, "k");
    if (n < 0 || r < 2 || k < 1 || k > 255)
        throw std::invalid_argument("decomposition file: parameters out of range");
    std::uint64_t ecount = binomial(n, r);
    std::vector<std::uint8_t> colors(ecount, 0);
    if (j.contains("colors")) {
        const auto& arr = j["colors"];
        if (!arr.is_array() || arr.size() != ecount)
            throw std::invalid_argument("decomposition file: colors array must list every edge");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_number_integer())
                throw std::invalid_argument("decomposition file: colors must be integers");
            long long c = arr[i].get<long long>();
            if (c < 0 || c >= k)
                throw std::invalid_argument("decomposition file: color out of range");
            colors[i] = static_cast<std::uint8_t>(c);
        }
    } else if (j.contains("edges")) {
        const auto& arr = j["edges"];
        if (!arr.is_array() || arr.size() != ecount)
            throw std::invalid_argument("decomposition file: edges array must list every edge");
        std::vector<bool> seen(ecount, false);
        for (const auto& e : arr) {
            if (!e.is_object() || !e.contains("vertices") || !e.contains("part"))
                throw std::invalid_argument("decomposition file: edge entries need vertices and part");
            std::vector<int> vs = e["vertices"].get<std::vector<int>>();
            long long c = e["part"].get<long long>();
            if (c < 0 || c >= k)
                throw std::invalid_argument("decomposition file: part index out of range");
            std::uint32_t rank = rank_rset(vs, n, r);
            if (seen[rank])
                throw std::invalid_argument("decomposition file: duplicate edge entry");
            seen[rank] = true;
            colors[rank] = static_cast<std::uint8_t>(c);
        }
    } else {
        throw std::invalid_argument("decomposition file: need a colors or edges array");
    }
    return {n, r, k, std::move(colors)};
}

namespace {

nlohmann::json witness_json(const char* type, const std::vector<int>& data) {
    nlohmann::json j;
    j["type"] = type;
    j["data"] = data;
    return j;
}

std::vector<int> witness_data(const nlohmann::json& j, const char* type) {
    if (!j.is_object() || !j.contains("type") || !j.contains("data") || j["type"] != type ||
        !j["data"].is_array())
        throw std::invalid_argument(std::string("witness file: expected type '") + type + "'");
    return j["data"].get<std::vector<int>>();
}

}  // namespace

nlohmann::json clique_witness_to_json(const CliqueWitness& w) {
    return witness_json("clique", w.vertices);
}

nlohmann::json coloring_witness_to_json(const ColoringWitness& w) {
    return witness_json("coloring", w.labels);
}

CliqueWitness clique_witness_from_json(const nlohmann::json& j) {
    return {witness_data(j, "clique")};
}

ColoringWitness coloring_witness_from_json(const nlohmann::json& j) {
    return {witness_data(j, "coloring")};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace decomp
