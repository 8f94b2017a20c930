#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI and captures stdout (stderr is discarded).
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
    int status = pclose(f);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

json load_schema(const std::string& name) {
    std::ifstream in(std::string(SCHEMA_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

// Minimal JSON-schema checker covering the subset used by the schemas in
// this repository: "type" (object/array/integer/string/boolean),
// "required", "properties", and "items".
bool conforms(const json& schema, const json& value, std::string& err) {
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        bool ok = (t == "object" && value.is_object()) ||
                  (t == "array" && value.is_array()) ||
                  (t == "integer" && value.is_number_integer()) ||
                  (t == "string" && value.is_string()) ||
                  (t == "boolean" && value.is_boolean());
        if (!ok) {
            err = "expected type " + t + ", got " + value.dump().substr(0, 80);
            return false;
        }
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!value.contains(key.get<std::string>())) {
                err = "missing required key " + key.get<std::string>();
                return false;
            }
    if (schema.contains("properties") && value.is_object())
        for (auto it = schema["properties"].begin(); it != schema["properties"].end();
             ++it)
            if (value.contains(it.key()) && !conforms(it.value(), value[it.key()], err)) {
                err = it.key() + ": " + err;
                return false;
            }
    if (schema.contains("items") && value.is_array()) {
        size_t i = 0;
        for (const auto& elem : value) {
            if (!conforms(schema["items"], elem, err)) {
                err = "item " + std::to_string(i) + ": " + err;
                return false;
            }
            ++i;
        }
    }
    return true;
}

void check_schema(const std::string& schema_name, const std::string& text) {
    json value = json::parse(text);
    std::string err;
    bool ok = conforms(load_schema(schema_name), value, err);
    INFO(schema_name << ": " << err);
    CHECK(ok);
}

}  // namespace

TEST_CASE("group-order") {
    RunResult r = run_cli("group-order --q 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("15625") != std::string::npos);
}

TEST_CASE("verify report conforms to its schema and is deterministic") {
    RunResult a = run_cli("verify --suite group --q 3 --format json");
    CHECK(a.exit_code == 0);
    check_schema("verify_report.schema.json", a.out);
    RunResult b = run_cli("verify --suite group --q 3 --format json");
    CHECK(a.out == b.out);
    json rep = json::parse(a.out);
    CHECK(rep["pass"] == true);
    CHECK(rep["q"] == 3);
}

TEST_CASE("supercharacter table conforms to its schema") {
    RunResult r = run_cli("supercharacter-table --q 3 --format json");
    CHECK(r.exit_code == 0);
    check_schema("supercharacter_table.schema.json", r.out);
    json tab = json::parse(r.out);
    CHECK(tab["superclasses"].size() == 17);        // q^2 + 4q - 4 at q = 3
    CHECK(tab["characters"].size() == 17);
}

TEST_CASE("character table conforms to its schema") {
    RunResult r = run_cli("character-table --q 5 --format json");
    CHECK(r.exit_code == 0);
    check_schema("character_table.schema.json", r.out);
    json tab = json::parse(r.out);
    CHECK(tab["classes"].size() == 169);            // q^3 + 2q^2 - q - 1 at q = 5
    CHECK(tab["characters"].size() == 169);
}

TEST_CASE("character table is deterministic") {
    RunResult a = run_cli("character-table --q 5 --format csv");
    RunResult b = run_cli("character-table --q 5 --format csv");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("exit codes") {
    // Characteristic 3 has no irreducible-character closed forms.
    CHECK(run_cli("character-table --q 9").exit_code == 2);
    CHECK(run_cli("character-table --q 3").exit_code == 2);
    // Enumerative commands refuse q beyond the budget.
    CHECK(run_cli("verify --suite group --q 25").exit_code == 2);
    // Unknown subcommand / missing arguments.
    CHECK(run_cli("no-such-command").exit_code == 2);
    // Invalid field size.
    CHECK(run_cli("group-order --q 8").exit_code == 2);
    // Successful verify exits 0.
    CHECK(run_cli("verify --suite super --q 3").exit_code == 0);
}

TEST_CASE("markdown and csv outputs are non-empty and stable") {
    for (const char* cmd :
         {"superclasses --q 3 --format md", "superclasses --q 3 --format csv",
          "commutators-check --q 3", "classes --q 3 --format md"}) {
        RunResult r = run_cli(cmd);
        CHECK(r.exit_code == 0);
        CHECK(!r.out.empty());
    }
}
