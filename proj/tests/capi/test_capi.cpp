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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

#include "berge/berge.h"

using Json = nlohmann::json;

namespace {

struct HostDeleter {
    void operator()(berge_hypergraph* h) const { berge_hypergraph_free(h); }
};
using Host = std::unique_ptr<berge_hypergraph, HostDeleter>;

Host parse(const char* text) {
    berge_hypergraph* h = nullptr;
    REQUIRE(berge_hypergraph_parse(text, &h) == BERGE_OK);
    return Host(h);
}

/// Takes ownership of a library string.
std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    berge_string_free(s);
    return out;
}

Json take_json(char* s) { return Json::parse(take(s)); }

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(berge_version()) == "1.0.0");
    CHECK(std::string(berge_status_name(BERGE_OK)) == "ok");
    CHECK(std::string(berge_status_name(BERGE_ERR_GUARD)) != "");
    berge_config c;
    berge_config_init(&c);
    CHECK(c.workers == 1);
    CHECK(c.search_guard == 7);
    CHECK(c.graph_guard == 9);
}

TEST_CASE("hypergraph lifecycle") {
    berge_hypergraph* h = nullptr;
    REQUIRE(berge_hypergraph_new(5, &h) == BERGE_OK);
    const int32_t a[] = {0, 1, 2};
    const int32_t b[] = {2, 3, 4};
    CHECK(berge_hypergraph_add(h, a, 3) == BERGE_OK);
    CHECK(berge_hypergraph_add(h, b, 3) == BERGE_OK);
    const int32_t out_of_range[] = {0, 9};
    CHECK(berge_hypergraph_add(h, out_of_range, 2) == BERGE_ERR_INVALID_ARGUMENT);
    CHECK(std::string(berge_last_error()).size() > 0);
    CHECK(berge_hypergraph_order(h) == 5);
    CHECK(berge_hypergraph_size(h) == 2);

    char* text = nullptr;
    REQUIRE(berge_hypergraph_write(h, 0, &text) == BERGE_OK);
    const std::string body = take(text);
    CHECK(body.rfind("n=5", 0) == 0);
    Host back = parse(body.c_str());
    CHECK(berge_hypergraph_size(back.get()) == 2);

    char* json = nullptr;
    REQUIRE(berge_hypergraph_write(h, 1, &json) == BERGE_OK);
    Host from_json = parse(take(json).c_str());
    CHECK(berge_hypergraph_order(from_json.get()) == 5);

    berge_hypergraph_free(h);
    berge_hypergraph_free(nullptr);
}

TEST_CASE("null and malformed arguments") {
    berge_hypergraph* h = nullptr;
    CHECK(berge_hypergraph_new(-1, &h) == BERGE_ERR_INVALID_ARGUMENT);
    CHECK(berge_hypergraph_new(3, nullptr) == BERGE_ERR_INVALID_ARGUMENT);
    CHECK(berge_hypergraph_parse("1 2\nx y\n", &h) == BERGE_ERR_PARSE);
    CHECK(h == nullptr);
    CHECK(berge_hypergraph_read("/nonexistent/host.txt", &h) == BERGE_ERR_IO);
    char* json = nullptr;
    CHECK(berge_check(nullptr, "K3", nullptr, &json) == BERGE_ERR_INVALID_ARGUMENT);
    Host host = parse("1 2 3\n");
    CHECK(berge_check(host.get(), "Q9", nullptr, &json) == BERGE_ERR_PARSE);
    CHECK(json == nullptr);
}

TEST_CASE("check reports witness or absence") {
    Host host = parse("n=6\n0 1 2\n2 3 4\n4 5 0\n");
    char* json = nullptr;
    REQUIRE(berge_check(host.get(), "C3", nullptr, &json) == BERGE_OK);
    const Json found = take_json(json);
    CHECK(found["schema_version"] == 1);
    CHECK(found["found"] == true);
    CHECK(found["witness"]["edge_assignment"].size() == 3);

    REQUIRE(berge_check(host.get(), "K4", nullptr, &json) == BERGE_ABSENT);
    CHECK(take_json(json)["found"] == false);
}

TEST_CASE("validation and counts") {
    Host bad = parse("n=4\n0 0 1\n");
    char* json = nullptr;
    CHECK(berge_hypergraph_validate(bad.get(), &json) == BERGE_VIOLATED);
    CHECK(take_json(json)["valid"] == false);
    CHECK(berge_check(bad.get(), "K2", nullptr, &json) == BERGE_ERR_INVALID_ARGUMENT);

    Host good = parse("n=5\n0 1 2\n0 3 4\n");
    REQUIRE(berge_count_report(good.get(), &json) == BERGE_OK);
    const Json c = take_json(json);
    CHECK(c["edge_count"] == 2);
    CHECK(c["degree_sum"] == 6);
}

TEST_CASE("labels survive a round trip through reports") {
    Host host = parse("10 20 30\n30 40 50\n50 60 10\n");
    CHECK(berge_hypergraph_order(host.get()) == 6);
    char* json = nullptr;
    REQUIRE(berge_check(host.get(), "C3", nullptr, &json) == BERGE_OK);
    const Json w = take_json(json)["witness"]["vertex_map"];
    for (const auto& [k, v] : w.items()) CHECK(v.get<int>() % 10 == 0);
    char* text = nullptr;
    REQUIRE(berge_hypergraph_write(host.get(), 0, &text) == BERGE_OK);
    CHECK(take(text).find("# labels:") != std::string::npos);
}

TEST_CASE("verify") {
    berge_verify_params p;
    berge_verify_params_init(&p);
    char* json = nullptr;
    REQUIRE(berge_verify("ramsey-k5", &p, nullptr, &json) == BERGE_OK);
    const Json k5 = take_json(json);
    CHECK(k5["checked"] == 1024);
    CHECK(k5["holds"] == true);

    p.vertices = 5;
    CHECK(berge_verify("mono-triangle", &p, nullptr, &json) == BERGE_VIOLATED);
    CHECK(take_json(json)["counterexample"].is_object());

    berge_verify_params_init(&p);
    p.trials = 50;
    REQUIRE(berge_verify("rainbow", &p, nullptr, &json) == BERGE_OK);
    CHECK(take_json(json)["bad_outputs"] == 0);
    CHECK(berge_verify("nonsense", &p, nullptr, &json) == BERGE_ERR_INVALID_ARGUMENT);
}

TEST_CASE("construct") {
    berge_construct_params p;
    berge_construct_params_init(&p);
    p.n = 6;
    p.r = 3;
    char* body = nullptr;
    char* json = nullptr;
    REQUIRE(berge_construct("kr-blowup", &p, nullptr, nullptr, &body, &json) == BERGE_OK);
    Host h = parse(take(body).c_str());
    CHECK(berge_hypergraph_size(h.get()) == 9);
    CHECK(take_json(json)["passed"] == true);

    Host c5 = parse("n=5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    berge_construct_params_init(&p);
    REQUIRE(berge_construct("kst-blowup", &p, c5.get(), nullptr, &body, &json) == BERGE_OK);
    Host kst = parse(take(body).c_str());
    CHECK(berge_hypergraph_size(kst.get()) == 4);
    take(json);

    Host c4 = parse("n=4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(berge_construct("kst-blowup", &p, c4.get(), nullptr, &body, &json) == BERGE_ERR_PRECONDITION);
    CHECK(berge_construct("kst-blowup", &p, nullptr, nullptr, &body, &json) == BERGE_ERR_INVALID_ARGUMENT);
}

TEST_CASE("embed") {
    Host copies = parse("n=4\n0 1 2 3\n0 1 2 3\n0 1 2 3\n0 1 2 3\n0 1 2 3\n0 1 2 3\n0 1 2 3\n");
    char* shadow = nullptr;
    char* json = nullptr;
    REQUIRE(berge_embed(copies.get(), "c4", nullptr, nullptr, nullptr, &shadow, &json) == BERGE_VIOLATED);
    take(shadow);
    const Json v = take_json(json);
    CHECK(v["violation"]["witness"].is_object());

    Host one = parse("n=7\n0 1 2 3 4 5 6\n");
    REQUIRE(berge_embed(one.get(), "triangle", nullptr, nullptr, nullptr, &shadow, &json) == BERGE_OK);
    take(shadow);
    CHECK(take_json(json)["per_hyperedge_counts"][0] == 4);
    CHECK(berge_embed(one.get(), "matching", nullptr, nullptr, nullptr, &shadow, &json) == BERGE_ERR_INVALID_ARGUMENT);
}

TEST_CASE("search, bounds, inequality and table") {
    const char* forbid[] = {"K3"};
    const int sizes[] = {3};
    berge_search_params s{4, forbid, 1, sizes, 1, 1, "edges", 0};
    char* json = nullptr;
    REQUIRE(berge_search(&s, nullptr, &json) == BERGE_OK);
    CHECK(take_json(json)["optimum"] == 2);

    const char* c4[] = {"C4"};
    berge_search_params g{4, c4, 1, nullptr, 0, 1, nullptr, 1};
    REQUIRE(berge_search(&g, nullptr, &json) == BERGE_OK);
    CHECK(take_json(json)["optimum"] == 4);

    berge_config tight;
    berge_config_init(&tight);
    tight.search_guard = 3;
    CHECK(berge_search(&s, &tight, &json) == BERGE_ERR_GUARD);

    const char* keys[] = {"n", "k", "m"};
    const int64_t values[] = {12, 4, 3};
    REQUIRE(berge_bounds("path_bound", keys, values, 3, &json) == BERGE_OK);
    CHECK(take_json(json)["exact"] == "12");

    Host h = parse("n=5\n0 1 2\n0 3 4\n");
    REQUIRE(berge_inequality("linear_observation", h.get(), "K3", 5, nullptr, &json) == BERGE_OK);
    const Json ineq = take_json(json);
    CHECK(ineq["command"] == "inequality");
    CHECK(ineq["satisfied"] == true);

    const int ns[] = {9};
    char* csv = nullptr;
    REQUIRE(berge_table("paper", ns, 1, nullptr, &csv) == BERGE_OK);
    const std::string table = take(csv);
    CHECK(table.find("\r\n") != std::string::npos);
    CHECK(berge_table("other", ns, 1, nullptr, &csv) == BERGE_ERR_INVALID_ARGUMENT);
}

TEST_CASE("read from a file") {
    const auto path = std::filesystem::temp_directory_path() / "berge_capi_host.txt";
    std::ofstream(path) << "n=3\n0 1 2\n";
    berge_hypergraph* h = nullptr;
    REQUIRE(berge_hypergraph_read(path.string().c_str(), &h) == BERGE_OK);
    CHECK(berge_hypergraph_size(h) == 1);
    berge_hypergraph_free(h);
    std::filesystem::remove(path);
}
