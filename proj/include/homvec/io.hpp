#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "arith.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace homvec {

// graph6: size prefix N(n) followed by the upper triangle of the adjacency
// matrix read column by column ((0,1), (0,2), (1,2), (0,3), ...), six bits
// per byte, big-endian, padded with zeros, each byte offset by 63.

inline std::string write_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        throw ValidationError("graph6 writer supports at most 258047 vertices");
    }
    int bits = 0, acc = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                bits = acc = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

inline Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range 63..126", i);
    }
    auto byte = [&](std::size_t i) { return static_cast<std::size_t>(static_cast<unsigned char>(text[i]) - 63); };
    std::size_t n = 0, pos = 0;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else {
        if (text.size() < 4) throw ParseError("truncated graph6 size field", text.size());
        if (byte(1) == 63) throw ParseError("graph6 sizes above 258047 are not supported", 1);
        n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    }
    const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() != pos + nbytes)
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " + std::to_string(nbytes),
                         std::min(text.size(), pos + nbytes));
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            std::size_t b = byte(pos + k / 6);
            if ((b >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (nbits % 6 != 0) {
        std::size_t last = byte(pos + nbytes - 1);
        if (last & ((std::size_t{1} << (6 - nbits % 6)) - 1)) throw ParseError("nonzero graph6 padding bits", pos + nbytes - 1);
    }
    return Graph(n, edges);
}

// Weighted-graph JSON:
// {"n": int, "edges": [[u,v],...], "loops": [v,...], "vw": ["p/q",...],
//  "ew": ["p/q",...], "lw": ["p/q",...]}

inline std::string write_weighted_json(const WeightedGraph& w) {
    using nlohmann::json;
    json j;
    j["n"] = w.vertex_count();
    j["edges"] = json::array();
    for (auto [u, v] : w.edges()) j["edges"].push_back({u, v});
    j["loops"] = w.loops();
    auto rationals = [](const std::vector<Rational>& rs) {
        json a = json::array();
        for (const auto& r : rs) a.push_back(format_rational(r));
        return a;
    };
    j["vw"] = rationals(w.vertex_weights());
    j["ew"] = rationals(w.edge_weights());
    j["lw"] = rationals(w.loop_weights());
    return j.dump();
}

inline WeightedGraph parse_weighted_json(std::string_view text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("weighted graph JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    try {
        auto n = j.at("n").get<std::size_t>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ValidationError("edge entries must be [u, v]");
            edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
        }
        auto loops = j.value("loops", json::array()).get<std::vector<Vertex>>();
        auto rationals = [](const json& a) {
            std::vector<Rational> out;
            for (const auto& s : a) out.push_back(s.is_string() ? parse_rational(s.get<std::string>()) : Rational(s.get<long long>()));
            return out;
        };
        return WeightedGraph(n, edges, loops, rationals(j.at("vw")), rationals(j.at("ew")),
                             rationals(j.value("lw", json::array())));
    } catch (const json::exception& e) {
        throw ParseError(std::string("weighted graph JSON: ") + e.what(), 0);
    }
}

}  // namespace homvec
