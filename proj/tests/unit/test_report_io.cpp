#include <doctest.h>

#include <json.hpp>

#include "bernstein/errors.hpp"
#include "bernstein/gallery_json.hpp"
#include "bernstein/report_io.hpp"

using namespace bernstein;
using nlohmann::json;

TEST_CASE("format_double round trips") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-300) == "1e-300");
  for (double v : {1.0 / 3.0, 0.006233092681880132, 12345.678, -2.5e-17}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("convergence report CSV and JSON") {
  const ConvergenceReport r = converge_report(preset("square"), Rational(1, 2), {16, 32, 64, 128}, Rational(1, 100));
  CHECK(report_csv(r) ==
        "n,value,target,error,mode\n"
        "16,17/64,1/4,1/64,exact\n"
        "32,33/128,1/4,1/128,exact\n"
        "64,65/256,1/4,1/256,exact\n"
        "128,129/512,1/4,1/512,exact\n");
  const json j = json::parse(report_json(r));
  CHECK(j["x0"] == "1/2");
  CHECK(j["mode"] == "exact");
  CHECK(j["target"]["kind"] == "FunctionValue");
  CHECK(j["schedule"] == json::array({16, 32, 64, 128}));
  CHECK(j["errors"][0] == "1/64");
  CHECK(j["verdict"]["kind"] == "Converged");
  CHECK(j["verdict"]["at_n"] == 32);

  const ConvergenceReport f =
      converge_report(preset("square"), Rational(1, 2), {16, 32, 64}, Rational(1, 100), Mode::Float);
  const std::string csv = report_csv(f);
  CHECK(csv.find("16,0.26562") != std::string::npos);
  const json jf = json::parse(report_json(f));
  CHECK(jf["values"][0].is_number_float());
  CHECK(jf["verdict"]["at_n"].is_null());
}

TEST_CASE("variation, jump set, cover and probe output") {
  const VariationProfile p = variation_profile(preset("heaviside"), {Rational(0), Rational(1, 2), Rational(1)});
  CHECK(variation_csv(p) == "node,cumulative,flag\n0/1,0/1,Exact\n1/2,1/1,Exact\n1/1,1/1,Exact\n");
  const json jv = json::parse(variation_json(p));
  CHECK(jv["cumulative"] == json::array({"0/1", "1/1", "1/1"}));

  const json js = json::parse(jump_set_json(jump_set(preset("heaviside"), 2)));
  CHECK(js["k"] == 2);
  CHECK(js["points"] == json::array({"1/2"}));
  CHECK(js["bounded_depth"] == false);

  const json jc = json::parse(cover_json(cover({Rational(1, 2)}, Rational(1, 4))));
  CHECK(jc["intervals"][0] == json::array({"7/16", "9/16"}));
  CHECK(jc["total_length"] == "1/8");

  const auto probes = b_set_sweep(preset("square"), {Rational(1, 3)}, {64, 128, 256}, Rational(1, 100));
  const std::string pc = probe_csv(probes, Mode::Exact);
  CHECK(pc.rfind("x,verdict,estimate,target\n1/3,InBf,", 0) == 0);
  const json jp = json::parse(probe_json(probes, Mode::Exact));
  CHECK(jp[0]["target"] == "1/9");
}

TEST_CASE("classification and analysis output") {
  const ClassReport c = classify(preset("heaviside"));
  const json j = json::parse(classification_json(c));
  CHECK(j["regulated"] == true);
  CHECK(j["bv"]["kind"] == "Bounded");
  Analysis a;
  a.function_type = "piecewise";
  a.classification = c;
  a.jump_sets.push_back(jump_set(preset("heaviside"), 1));
  a.oscillation.emplace_back(Rational(1, 2), Rational(1));
  const std::string csv = analysis_csv(a);
  CHECK(csv.find("# classification\n") == 0);
  CHECK(csv.find("# jump_sets\nk,points,bounded_depth\n1,1/2,false\n") != std::string::npos);
  CHECK(csv.find("# oscillation\nx,oscillation\n1/2,1/1\n") != std::string::npos);
  CHECK(csv.find("# variation") == std::string::npos);
  const json ja = json::parse(analysis_json(a));
  CHECK(ja["own_oscillation"].is_null());
  CHECK(ja["variation"].is_null());
}

TEST_CASE("schedule parsing") {
  CHECK(parse_schedule("16,32,2^10") == std::vector<std::size_t>{16, 32, 1024});
  CHECK(parse_schedule("2^4..2^7") == std::vector<std::size_t>{16, 32, 64, 128});
  CHECK(parse_schedule("5") == std::vector<std::size_t>{5});
  CHECK_THROWS_AS(parse_schedule("16,,32"), ParseError);
  CHECK_THROWS_AS(parse_schedule("3^2"), ParseError);
  CHECK_THROWS_AS(parse_schedule("2^8..2^4"), ParseError);
}

TEST_CASE("tolerance parsing") {
  CHECK(parse_tolerance("1/100", Mode::Exact) == Rational(1, 100));
  CHECK(parse_tolerance("0.5", Mode::Float) == Rational(1, 2));
  CHECK(parse_tolerance("1e-3", Mode::Float) == Rational::from_double(1e-3));
  CHECK_THROWS_AS(parse_tolerance("0.01", Mode::Exact), ParseError);
  CHECK_THROWS_AS(parse_tolerance("0.01x", Mode::Float), ParseError);
}

TEST_CASE("run config") {
  const RunConfig d = parse_run_config("{}");
  CHECK(d.mode == Mode::Exact);
  CHECK(d.tol == Rational(1, 50));
  CHECK(d.grid.materialize().size() == 33u);
  CHECK(d.effective_schedule() == default_schedule(Mode::Exact));

  const RunConfig c = parse_run_config(
      R"({"mode":"float","schedule":[16,"2^6"],"grid":{"explicit":["1/3","1/2"]},"tol":0.25,"output":"json","seed":9})");
  CHECK(c.mode == Mode::Float);
  CHECK(c.schedule == std::vector<std::size_t>{16, 64});
  CHECK(c.grid.materialize() == std::vector<Rational>{Rational(1, 3), Rational(1, 2)});
  CHECK(c.tol == Rational(1, 4));
  CHECK(c.output == OutputFormat::Json);
  CHECK(c.seed == 9u);

  CHECK_THROWS_AS(parse_run_config("[1]"), ParseError);
  CHECK_THROWS_AS(parse_run_config("{not json"), ParseError);
  CHECK_THROWS_AS(parse_run_config(R"({"mode":"fast"})"), ParseError);
  CHECK_THROWS_AS(parse_run_config(R"({"tol":0.1})"), ParseError);
  CHECK_THROWS_AS(parse_run_config(R"({"schedule":[32,16]})"), DomainError);
  CHECK_THROWS_AS(parse_run_config(R"({"grid":{"uniform":1}})"), DomainError);
  CHECK_THROWS_AS(parse_run_config(R"({"grid":{"explicit":["3/2"]}})"), DomainError);
  CHECK_THROWS_AS(parse_run_config(R"({"tol":"-1/2"})"), DomainError);
}

TEST_CASE("function documents round trip") {
  for (const auto& name : preset_names()) {
    const GalleryFn f = preset(name);
    const GalleryFn back = gallery_from_json(to_json(f));
    CHECK(to_json(back) == to_json(f));
    for (int i = 0; i <= 12; ++i) CHECK(eval(back, Rational(i, 12)) == eval(f, Rational(i, 12)));
  }
}
