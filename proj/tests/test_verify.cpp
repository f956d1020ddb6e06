#include "doctest.h"
#include "degcx/verify.hpp"

using namespace degcx;

TEST_CASE("registry") {
  const auto& ids = verify_registry();
  CHECK(ids.size() == 17);
  CHECK_THROWS_AS(run_verify("bogus"), std::invalid_argument);

  VerifyOptions small;
  small.instances = 5;
  for (const std::string& id : ids) {
    VerifyReport r = run_verify(id, small);
    CHECK(r.ok());
    CHECK(r.theorem == id);
    CHECK(r.instances == 5);
  }
}

TEST_CASE("aliases resolve to the same checks") {
  VerifyOptions small;
  small.instances = 4;
  CHECK(run_verify("power-of-sum", small).theorem == "3.9");
  CHECK(run_verify("mixed-product", small).theorem == "5.2");
}

TEST_CASE("reports are deterministic under a fixed seed") {
  VerifyOptions opts;
  opts.instances = 10;
  opts.seed = 99;
  CHECK(run_verify("3.9", opts).to_json().dump() == run_verify("3.9", opts).to_json().dump());
  CHECK(run_verify("4.10", opts).to_json().dump() ==
        run_verify("4.10", opts).to_json().dump());
}

TEST_CASE("resolution notes are recorded") {
  VerifyOptions small;
  small.instances = 8;
  CHECK(run_verify("3.13", small).notes.count("index-convention") == 1);
  CHECK(run_verify("3.14", small).notes.count("index-convention") == 1);
  CHECK(run_verify("3.15", small).notes.count("index-convention") == 1);
  VerifyReport fiber = run_verify("4.10", small);
  CHECK(fiber.notes.count("diamond-ordinary") == 1);
  CHECK(fiber.notes.count("diamond-symbolic") == 1);
  CHECK(run_verify("4.6", small).notes.count("antichain") == 1);
}

TEST_CASE("report JSON shape") {
  VerifyOptions small;
  small.instances = 3;
  small.seed = 7;
  nlohmann::json j = run_verify("3.6", small).to_json();
  CHECK(j["theorem"] == "3.6");
  CHECK(j["seed"] == 7);
  CHECK(j["instances"] == 3);
  CHECK(j["failures"].is_array());
  CHECK(j["failures"].empty());
}
