// Copyright 2026 The berge-turan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "berge/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "berge/error.hpp"

namespace berge::io {

namespace {

using json = nlohmann::json;

struct RawFamily {
    std::optional<std::int64_t> n;
    std::vector<std::vector<std::int64_t>> members;
};

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::int64_t parse_label(std::string_view tok, std::size_t line_no) {
    std::int64_t value = -1;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
        fail(ErrorCode::parse,
             "line " + std::to_string(line_no) + ": bad vertex label '" + std::string(tok) + "'");
    }
    return value;
}

RawFamily parse_raw_text(std::string_view text) {
    RawFamily raw;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        if (line.rfind("n=", 0) == 0) {
            if (raw.n || !raw.members.empty())
                fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": misplaced n= header");
            raw.n = parse_label(trim(line.substr(2)), line_no);
            continue;
        }
        std::vector<std::int64_t> members;
        std::size_t pos = 0;
        while (pos < line.size()) {
            const auto start = line.find_first_not_of(" \t", pos);
            if (start == std::string_view::npos) break;
            const auto end = std::min(line.find_first_of(" \t", start), line.size());
            members.push_back(parse_label(line.substr(start, end - start), line_no));
            pos = end;
        }
        raw.members.push_back(std::move(members));
    }
    return raw;
}

RawFamily parse_raw_json(std::string_view text, const char* key) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::parse, std::string("JSON: ") + e.what());
    }
    RawFamily raw;
    try {
        if (!doc.is_object()) fail(ErrorCode::parse, "JSON: expected an object");
        if (doc.contains("n")) {
            raw.n = doc.at("n").get<std::int64_t>();
            if (*raw.n < 0) fail(ErrorCode::parse, "JSON: negative n");
        }
        const json* list = nullptr;
        if (doc.contains(key)) list = &doc.at(key);
        else if (doc.contains("hyperedges")) list = &doc.at("hyperedges");
        else fail(ErrorCode::parse, std::string("JSON: missing '") + key + "'");
        for (const auto& item : *list) {
            std::vector<std::int64_t> members;
            for (const auto& v : item) {
                const auto x = v.get<std::int64_t>();
                if (x < 0) fail(ErrorCode::parse, "JSON: negative vertex label");
                members.push_back(x);
            }
            raw.members.push_back(std::move(members));
        }
    } catch (const json::exception& e) {
        fail(ErrorCode::parse, std::string("JSON: ") + e.what());
    }
    return raw;
}

/// Resolves labels to dense ids.
std::pair<std::vector<std::vector<Vertex>>, std::vector<std::int64_t>> densify(const RawFamily& raw, int& n) {
    std::vector<std::vector<Vertex>> out;
    std::vector<std::int64_t> labels;
    if (raw.n) {
        if (*raw.n > (1 << 30)) fail(ErrorCode::parse, "vertex count too large");
        n = static_cast<int>(*raw.n);
        for (const auto& m : raw.members) {
            std::vector<Vertex> e;
            for (auto x : m) {
                if (x >= *raw.n)
                    fail(ErrorCode::parse, "vertex label " + std::to_string(x) + " not below n=" + std::to_string(n));
                e.push_back(static_cast<Vertex>(x));
            }
            out.push_back(std::move(e));
        }
        labels.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i;
        return {out, labels};
    }
    std::map<std::int64_t, Vertex> dense;
    for (const auto& m : raw.members)
        for (auto x : m) dense.emplace(x, 0);
    Vertex next = 0;
    for (auto& [label, id] : dense) {
        id = next++;
        labels.push_back(label);
    }
    n = next;
    for (const auto& m : raw.members) {
        std::vector<Vertex> e;
        for (auto x : m) e.push_back(dense.at(x));
        out.push_back(std::move(e));
    }
    return {out, labels};
}

LabeledHypergraph to_hypergraph(const RawFamily& raw) {
    int n = 0;
    auto [edges, labels] = densify(raw, n);
    return {Hypergraph(n, std::move(edges)), std::move(labels)};
}

LabeledGraph to_graph(const RawFamily& raw) {
    int n = 0;
    auto [edges, labels] = densify(raw, n);
    std::vector<Edge> list;
    for (const auto& e : edges) {
        if (e.size() != 2) fail(ErrorCode::parse, "graph lines must have exactly two labels");
        list.emplace_back(e[0], e[1]);
    }
    try {
        return {Graph(n, list), std::move(labels)};
    } catch (const Error& err) {
        fail(ErrorCode::parse, err.what());
    }
}

bool looks_like_json(std::string_view text) {
    const auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string_view::npos && text[p] == '{';
}

bool is_identity(const std::vector<std::int64_t>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != static_cast<std::int64_t>(i)) return false;
    return true;
}

void write_label_comment(std::ostringstream& out, const std::vector<std::int64_t>& labels) {
    if (labels.empty() || is_identity(labels)) return;
    out << "# labels:";
    for (auto l : labels) out << ' ' << l;
    out << '\n';
}

}  // namespace

LabeledHypergraph parse_hypergraph_text(std::string_view text) { return to_hypergraph(parse_raw_text(text)); }

LabeledHypergraph parse_hypergraph_json(std::string_view text) {
    return to_hypergraph(parse_raw_json(text, "hyperedges"));
}

LabeledHypergraph parse_hypergraph(std::string_view text) {
    return looks_like_json(text) ? parse_hypergraph_json(text) : parse_hypergraph_text(text);
}

LabeledGraph parse_graph(std::string_view text) {
    return to_graph(looks_like_json(text) ? parse_raw_json(text, "edges") : parse_raw_text(text));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io, "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

LabeledHypergraph read_hypergraph(const std::filesystem::path& path) { return parse_hypergraph(read_file(path)); }

LabeledGraph read_graph(const std::filesystem::path& path) { return parse_graph(read_file(path)); }

std::string write_hypergraph_text(const Hypergraph& h, const std::vector<std::int64_t>& labels) {
    std::ostringstream out;
    out << "n=" << h.order() << '\n';
    write_label_comment(out, labels);
    for (const auto& e : h.hyperedges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

std::string write_hypergraph_json(const Hypergraph& h, const std::vector<std::int64_t>& labels) {
    json doc;
    doc["n"] = h.order();
    doc["hyperedges"] = json::array();
    for (const auto& e : h.hyperedges()) doc["hyperedges"].push_back(e);
    if (!labels.empty() && !is_identity(labels)) doc["labels"] = labels;
    return doc.dump() + "\n";
}

std::string write_graph_text(const Graph& g, const std::vector<std::int64_t>& labels) {
    std::ostringstream out;
    out << "n=" << g.order() << '\n';
    write_label_comment(out, labels);
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace berge::io
