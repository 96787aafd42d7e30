#include "doctest.h"

#include "iqinv/errors.hpp"
#include "iqinv/report.hpp"

using namespace iqinv;

namespace {

HalfInt H(int doubled) { return HalfInt::from_doubled(doubled); }

}  // namespace

TEST_CASE("check names and grids") {
    CHECK(check_names().size() == 19);
    CHECK(check_names().back() == "all");
    CHECK(known_check("fft-i"));
    CHECK(!known_check("bogus"));
    CHECK(check_param_names("fft-i") == std::vector<std::string>{"n", "p", "r", "d"});
    CHECK(check_param_names("field-axioms").empty());

    RunOptions opts;
    opts.dmax = 2;
    CHECK(plan("field-axioms", {}, opts).size() == 1);
    CHECK(plan("fft-i", {}, opts).size() == 4 * 4 * 4 * 3);
    CHECK(plan("hecke-relations", {}, opts).size() == 4 * 2);  // d starts at 1
    ParamSet fixed;
    fixed.n = H(1);
    fixed.d = 2;
    auto t = plan("rho", fixed, opts);
    REQUIRE(t.size() == 4);
    CHECK(param_list(t[0]) == std::vector<std::pair<std::string, std::string>>{{"n", "1/2"}, {"m", "0"}, {"d", "2"}});
    // a smaller dmax gives a prefix of the grid
    auto all2 = plan("all", {}, opts);
    opts.dmax = 1;
    auto all1 = plan("all", {}, opts);
    CHECK(all1.size() < all2.size());
    CHECK_THROWS_AS(plan("bogus", {}, opts), DomainError);
}

TEST_CASE("evaluation and budget") {
    Task t{"fft-i", ParamSet{H(1), std::nullopt, H(2), H(2), 2}};
    CHECK(evaluate(t, 2000).pass);
    CHECK_THROWS_AS(evaluate(Task{"fft-i", ParamSet{H(1), std::nullopt, H(2), std::nullopt, 2}}, 0), DomainError);
    CHECK_THROWS_AS(evaluate(Task{"coord-dim", ParamSet{H(3), H(3), std::nullopt, std::nullopt, 3}}, 500), BudgetExceeded);
    RunOptions opts;
    opts.budget = 500;
    auto res = run(std::vector<Task>{{"coord-dim", ParamSet{H(3), H(3), std::nullopt, std::nullopt, 3}}, t}, opts);
    CHECK(res.records.size() == 1);
    CHECK(res.skipped.size() == 1);
    CHECK(res.ok());
}

TEST_CASE("parallel runs match serial runs") {
    RunOptions opts;
    opts.dmax = 1;
    opts.timing = false;
    auto serial = run("all", {}, opts);
    opts.jobs = 3;
    auto par = run("all", {}, opts);
    CHECK(render(serial, Format::Json) == render(par, Format::Json));
    CHECK(serial.ok());
}

TEST_CASE("reports") {
    RunResult empty;
    CHECK(summary_line(empty) == "0/0");
    CHECK(empty.ok());
    CHECK(render(empty, Format::Text) == "0/0\n");

    CheckRecord good{"rho", {{"n", "1/2"}, {"m", "1"}, {"d", "2"}}, "dim 3", "dim 3", true, 12, ""};
    CheckRecord bad{"fft-i", {{"n", "1/2"}, {"p", "1"}, {"r", "1"}, {"d", "0"}}, "a, \"b\"", "c", false, 0, "witness here"};
    RunResult r{{good, bad}, {}};
    CHECK(summary_line(r) == "1/2");
    CHECK(!r.ok());
    for (const auto& rec : r.records) {
        auto back = record_from_json(nlohmann::json::parse(to_json(rec).dump()));
        CHECK(to_json(back).dump() == to_json(rec).dump());
    }
    CHECK(to_json(good).dump() ==
          R"({"check":"rho","params":{"n":"1/2","m":"1","d":"2"},"expected":"dim 3","actual":"dim 3","pass":true,"elapsed_ms":12,"witness":null})");
    std::string csv = render(r, Format::Csv);
    CHECK(csv.rfind("check,params,expected,actual,pass,elapsed_ms,witness\n", 0) == 0);
    CHECK(csv.find("\"a, \"\"b\"\"\"") != std::string::npos);
    std::string text = render(r, Format::Text);
    CHECK(text.find("witness: witness here") != std::string::npos);
    CHECK(text.substr(text.size() - 4) == "1/2\n");
    CHECK_THROWS_AS(parse_format("xml"), DomainError);
}
