#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "branchcheck/cli.hpp"
#include "schema_validator.hpp"

using namespace branchcheck;
using namespace branchcheck::testutil;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json load_schema() {
    std::ifstream in(std::string(BRANCHCHECK_SOURCE_DIR) +
                     "/schema/branchcheck-output.schema.json");
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

void check_schema(const nlohmann::json& schema, const std::string& output) {
    nlohmann::json doc = nlohmann::json::parse(output);
    for (const std::string& problem : validate_against_schema(schema, doc)) FAIL(problem);
}

}  // namespace

TEST_CASE("verdict lines and exit statuses of the worked examples") {
    CliRun local = run({"local", "(y^2-x^3)^2-x^5*y"});
    CHECK(local.code == 0);
    CHECK(local.out.find("irreducible; semigroup <4,6,13>") != std::string::npos);

    CliRun smooth = run({"local", "y^2 - x"});
    CHECK(smooth.code == 0);
    CHECK(smooth.out == "smooth at origin (trivially irreducible)\n");

    CliRun merle = run({"merle", "6,1;14,2"});
    CHECK(merle.code == 0);
    CHECK(merle.out.find("not Merle: condition (iii) fails at i=2 (gcd=2, expected 1)") !=
          std::string::npos);

    CliRun infinity = run({"infinity", "x+(x+y^3)^3", "--json"});
    CHECK(infinity.code == 0);
    nlohmann::json doc = nlohmann::json::parse(infinity.out);
    CHECK(doc["verdict"] == "reducible");
    CHECK(doc["diagram"] == nlohmann::json::parse("[[12,2],[48,6]]"));

    CliRun inapplicable = run({"infinity", "y^2-x^3"});
    CHECK(inapplicable.code == 2);

    CliRun bad = run({"local", "y^-2"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("parse error at 2") != std::string::npos);

    CliRun bad_diagram = run({"merle", "6;1"});
    CHECK(bad_diagram.code == 1);

    CliRun no_sub = run({"frobnicate"});
    CHECK(no_sub.code == 1);

    CliRun help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("local") != std::string::npos);
}

TEST_CASE("at-point options") {
    CliRun with_point = run({"at-point", "(y-1)^2-x^5", "--point", "1", "--json"});
    CHECK(with_point.code == 0);
    nlohmann::json doc = nlohmann::json::parse(with_point.out);
    CHECK(doc["verdict"] == "irreducible");
    CHECK(doc["point"] == "1");
    CHECK(doc["semigroup"] == nlohmann::json::parse("[2,5]"));

    CliRun detected = run({"at-point", "(y-1/2)^2-x^3", "--json"});
    CHECK(nlohmann::json::parse(detected.out)["point"] == "1/2");

    CliRun bad_point = run({"at-point", "y^2-x", "--point", "x"});
    CHECK(bad_point.code == 1);
}

TEST_CASE("json output is deterministic") {
    for (std::vector<std::string> args :
         {std::vector<std::string>{"local", "(y^2-x^3)^2-x^5*y", "--json", "--trace"},
          std::vector<std::string>{"infinity", "x+(x+y^3)^3", "--json"},
          std::vector<std::string>{"am", "x+(x+y^3)^3", "--json"}}) {
        CliRun first = run(args);
        CliRun second = run(args);
        CHECK(first.out == second.out);
        CHECK(first.code == second.code);
    }
}

TEST_CASE("every json output validates against the shipped schema") {
    nlohmann::json schema = load_schema();
    const std::vector<std::vector<std::string>> invocations = {
        {"local", "(y^2-x^3)^2-x^5*y", "--json"},
        {"local", "(y^2-x^3)^2-x^5*y", "--json", "--trace"},
        {"local", "(y^2-x^3)^2-x^7", "--json", "--trace"},
        {"local", "y^2 - x", "--json"},
        {"local", "(y^2-x^3)^2", "--json"},
        {"at-point", "(y-1)^2-x^5", "--json", "--trace"},
        {"at-point", "y^2-x-2", "--json"},
        {"infinity", "x+(x+y^3)^3", "--json", "--trace"},
        {"infinity", "y^2-x", "--json"},
        {"infinity", "y^2-x^3", "--json"},
        {"diagram", "(y^2-x^3)^2-x^5*y", "--json"},
        {"diagram", "x*y", "--json"},
        {"merle", "6,1;13,2", "--json", "--trace"},
        {"merle", "6,1;14,2", "--json", "--trace"},
        {"merle", "3,inf", "--json"},
        {"am", "x+(x+y^3)^3", "--json"},
        {"am", "y", "--json"},
    };
    for (const auto& args : invocations) {
        CliRun result = run(args);
        INFO("invocation: ", args[0], " ", args[1]);
        REQUIRE(!result.out.empty());
        check_schema(schema, result.out);
    }
}

TEST_CASE("am subcommand output") {
    CliRun am = run({"am", "x+(x+y^3)^3", "--json"});
    CHECK(am.code == 0);
    nlohmann::json doc = nlohmann::json::parse(am.out);
    CHECK(doc["am"]["q"] == "8");
    CHECK(doc["am"]["n"] == 9);
    CHECK(doc["am"]["holds"] == true);

    CliRun human = run({"am", "y^2-x"});
    CHECK(human.out == "Abhyankar-Moh inequality holds: q = 1 < n = 2\n");

    CliRun degenerate = run({"am", "y"});
    CHECK(degenerate.code == 2);
}

TEST_CASE("diagram subcommand exposes the diagram alone") {
    CliRun d = run({"diagram", "(y^2-x^3)^2-x^5*y"});
    CHECK(d.code == 0);
    CHECK(d.out == "diagram: 6,1;13,2\n");

    CliRun failed = run({"diagram", "x*y"});
    CHECK(failed.code == 2);

    CliRun json_doc = run({"diagram", "x^8+(x^2+y^3)^3", "--json"});
    nlohmann::json doc = nlohmann::json::parse(json_doc.out);
    CHECK(doc["verdict"].is_null());
    CHECK(doc["diagram"] == nlohmann::json::parse("[[12,2],[48,6]]"));
}
