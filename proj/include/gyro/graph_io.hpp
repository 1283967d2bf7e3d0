#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gyro/errors.hpp"
#include "gyro/graph.hpp"
#include "gyro/json_io.hpp"

namespace gyro {

/// Edge-list format: a header line "n m", then m lines "u v" (0-indexed).
/// '#' starts a comment anywhere; blank lines are skipped.
inline Graph read_edge_list(std::istream& in, std::string label = "edge-list") {
    auto next_line = [&in](std::string& line) {
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok) return true;
        }
        return false;
    };

    std::string line;
    if (!next_line(line)) throw input_error("edge list: missing header line \"n m\"");
    std::istringstream header(line);
    std::int64_t n, m;
    if (!(header >> n >> m)) throw input_error("edge list: header must be \"n m\"");
    if (n < 1) throw input_error("edge list: vertex count must be >= 1");

    std::vector<std::pair<int, int>> edges;
    for (std::int64_t i = 0; i < m; ++i) {
        if (!next_line(line)) throw input_error("edge list: expected " + std::to_string(m) + " edges, got " +
                                                std::to_string(i));
        std::istringstream es(line);
        std::int64_t u, v;
        if (!(es >> u >> v)) throw input_error("edge list: bad edge line: " + line);
        edges.emplace_back((int)u, (int)v);
    }
    return make_graph((int)n, edges, std::move(label));
}

inline void write_edge_list(std::ostream& out, const Graph& G) {
    auto E = G.edges();
    out << "# " << G.label << "\n";
    out << G.n << " " << E.size() << "\n";
    for (auto [u, v] : E) out << u << " " << v << "\n";
}

inline AbelianGroup parse_group_spec(const std::string& spec) {
    std::vector<std::int64_t> moduli;
    std::string tok;
    std::istringstream in(spec);
    while (std::getline(in, tok, 'x')) {
        try {
            moduli.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw input_error("bad group spec \"" + spec + "\" (expected e.g. \"12\" or \"5x5\")");
        }
    }
    return AbelianGroup(moduli);
}

namespace detail {

inline std::vector<std::int64_t> parse_int_list(const std::string& s, char sep) {
    std::vector<std::int64_t> out;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, sep)) {
        try {
            out.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw input_error("bad integer list \"" + s + "\"");
        }
    }
    return out;
}

/// Split "A,B" at the top-level comma (respecting parentheses).
inline std::pair<std::string, std::string> split_two_args(const std::string& s, const std::string& ctx) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == ',' && depth == 0) return {s.substr(0, i), s.substr(i + 1)};
    }
    throw input_error(ctx + " expects two comma-separated arguments");
}

} // namespace detail

/// Connection-set JSON for "cayley:MODS:file.json": {"elements": [[r,...],...]}
/// with an optional "moduli" cross-check.
inline ConnectionSet read_connection_set(const std::string& path, const AbelianGroup& Z) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open connection set file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    json j = parse_json_text(buf.str());
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
        throw input_error(path + ": expected {\"elements\": [[..],..]}");
    if (j.contains("moduli")) {
        std::vector<std::int64_t> declared = j["moduli"].get<std::vector<std::int64_t>>();
        if (declared != Z.moduli) throw input_error(path + ": moduli do not match the group spec");
    }
    std::vector<GroupElement> elems;
    for (const auto& e : j["elements"]) elems.push_back(element_from_json(e, Z, path));
    return ConnectionSet(Z, elems);
}

/// Generator DSL:
///   kneser:N,K  circulant:N:s1,s2,...  cayley:M1xM2x..:file.json
///   circclique:P,Q  hamming:N,D  KN (complete graph)
///   cartesian(A,B)  lex(A,B)  union(A,B)  line(A)  complement(A)
///   "-" reads an edge list from stdin; anything else is an edge-list path.
inline Graph parse_graph_spec(const std::string& raw) {
    std::string s = raw;
    // trim
    auto notspace = [](unsigned char ch) { return !std::isspace(ch); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    if (s.empty()) throw input_error("empty graph spec");

    auto unary = [&](const std::string& head) -> std::optional<std::string> {
        if (s.rfind(head + "(", 0) == 0 && s.back() == ')')
            return s.substr(head.size() + 1, s.size() - head.size() - 2);
        return std::nullopt;
    };

    if (auto body = unary("cartesian")) {
        auto [a, b] = detail::split_two_args(*body, "cartesian");
        return cartesian(parse_graph_spec(a), parse_graph_spec(b));
    }
    if (auto body = unary("lex")) {
        auto [a, b] = detail::split_two_args(*body, "lex");
        return lexicographic(parse_graph_spec(a), parse_graph_spec(b));
    }
    if (auto body = unary("union")) {
        auto [a, b] = detail::split_two_args(*body, "union");
        return disjoint_union(parse_graph_spec(a), parse_graph_spec(b));
    }
    if (auto body = unary("line")) return line_graph(parse_graph_spec(*body));
    if (auto body = unary("complement")) return complement(parse_graph_spec(*body));

    auto after = [&](const std::string& head) -> std::optional<std::string> {
        if (s.rfind(head, 0) == 0) return s.substr(head.size());
        return std::nullopt;
    };
    if (auto rest = after("kneser:")) {
        auto v = detail::parse_int_list(*rest, ',');
        if (v.size() != 2) throw input_error("kneser:N,K expects two integers");
        return kneser((int)v[0], (int)v[1]);
    }
    if (auto rest = after("circclique:")) {
        auto v = detail::parse_int_list(*rest, ',');
        if (v.size() != 2) throw input_error("circclique:P,Q expects two integers");
        return circular_clique((int)v[0], (int)v[1]);
    }
    if (auto rest = after("hamming:")) {
        auto v = detail::parse_int_list(*rest, ',');
        if (v.size() != 2) throw input_error("hamming:N,D expects two integers");
        return hamming_cayley((int)v[0], (int)v[1]);
    }
    if (auto rest = after("circulant:")) {
        auto colon = rest->find(':');
        if (colon == std::string::npos) throw input_error("circulant:N:s1,s2,... expects a connection list");
        std::int64_t N = std::stoll(rest->substr(0, colon));
        return circulant(N, detail::parse_int_list(rest->substr(colon + 1), ','));
    }
    if (auto rest = after("cayley:")) {
        auto colon = rest->find(':');
        if (colon == std::string::npos) throw input_error("cayley:MODS:file.json expects a connection set file");
        AbelianGroup Z = parse_group_spec(rest->substr(0, colon));
        return cayley(Z, read_connection_set(rest->substr(colon + 1), Z));
    }
    if (s.size() >= 2 && s[0] == 'K' && std::isdigit((unsigned char)s[1])) {
        try {
            return complete_graph(std::stoi(s.substr(1)));
        } catch (const input_error&) {
            throw;
        } catch (const std::exception&) {
            // fall through to file path
        }
    }
    if (s == "-") return read_edge_list(std::cin, "stdin");

    std::ifstream in(s);
    if (!in) throw input_error("unrecognized graph spec and no such file: " + s);
    return read_edge_list(in, s);
}

} // namespace gyro
