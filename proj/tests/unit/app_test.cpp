#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "app/cache.hpp"
#include "app/config.hpp"
#include "app/ledger.hpp"
#include "app/pipeline.hpp"
#include "trivex/error.hpp"

using namespace trivex;
using namespace trivex::app;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("trivex-test-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("cache round trip and corruption") {
  const auto dir = scratch("cache");
  const Cache c(dir);
  CHECK(c.enabled());
  CHECK(!c.load("k").has_value());
  c.store("k", "{\"v\":1}");
  REQUIRE(c.load("k").has_value());
  CHECK(*c.load("k") == "{\"v\":1}");
  CHECK(!c.load("other").has_value());
  CHECK(c.path_for("k") != c.path_for("other"));

  {
    std::ofstream f(c.path_for("k"), std::ios::trunc);
    f << "{\"format\": \"trivex.cache\", truncated";
  }
  CHECK(!c.load("k").has_value());

  c.store("k", "{\"v\":2}");
  auto env = nlohmann::json::parse(std::ifstream(c.path_for("k")));
  env["payload"] = "{\"v\":3}";
  std::ofstream(c.path_for("k"), std::ios::trunc) << env.dump();
  CHECK(!c.load("k").has_value());
  CHECK(!Cache().enabled());
  fs::remove_all(dir);
}

TEST_CASE("ledger ordering and JSON") {
  Ledger l;
  l.add({"AC-02", "b", "e", "c", "0", true, 1.5});
  l.add({"AC-01", "a", "e", "c", "0", false, 2.0});
  REQUIRE(l.rows().size() == 2);
  CHECK(l.rows()[0].id == "AC-01");
  CHECK(!l.all_pass());
  const auto j = nlohmann::json::parse(l.json(false));
  CHECK(j.dump().find("runtime_ms") == std::string::npos);
  CHECK(nlohmann::json::parse(l.json(true)).dump().find("runtime_ms") != std::string::npos);
  const auto t = l.table();
  CHECK(t.find("FAIL AC-01") != std::string::npos);
  CHECK(t.find("PASS AC-02") != std::string::npos);
  CHECK(t.find("1/2 rows pass") != std::string::npos);
}

TEST_CASE("config validation") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  c.k = 0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = RunConfig{};
  c.k_max = kMaxClass + 1;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = RunConfig{};
  c.enum_cap = 0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = RunConfig{};
  c.tol = -1;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
}

TEST_CASE("cached spectra equal fresh spectra") {
  const auto dir = scratch("pipeline");
  RunConfig c;
  c.cache_dir = dir.string();
  double first = 0;
  {
    Pipeline p(c);
    first = p.spectrum(3, Which::X).lambda1;
  }
  Pipeline warm(c);
  const auto r = warm.spectrum(3, Which::X);
  CHECK(r.lambda1 == first);
  REQUIRE(r.spectrum);
  CHECK(r.spectrum->size() == 128);
  RunConfig nc;
  Pipeline fresh(nc);
  CHECK(fresh.spectrum(3, Which::X).lambda1 == doctest::Approx(first).epsilon(1e-12));
  CHECK(warm.input_hash(3) == fresh.input_hash(3));
  CHECK(warm.input_hash(2) != warm.input_hash(3));
  fs::remove_all(dir);
}
