#pragma once

#include <functional>
#include <string>
#include <vector>

#include "seriescone/json_io.hpp"

namespace seriescone {

struct FixtureCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct FixtureResult {
  std::string fixture;
  bool pass = false;
  std::vector<FixtureCheck> checks;
  Json report;
};

// Bundled worked examples with their expected values. Provenance records how
// each expectation was obtained: "reference" for values printed in the
// source example, "derived" for values recomputed by hand or by an
// independent oracle, "direct" for immediate consequences of definitions.
struct Fixture {
  std::string name;
  std::string provenance;
  std::string notes;
  std::function<FixtureResult()> run;
};

const std::vector<Fixture>& fixtures();
const Fixture* find_fixture(const std::string& name);

// Support specs reused by tests and by the CLI plot command.
SupportSpec fixture_spec_ex_min(Int rebase);
SupportSpec fixture_spec_ex_c();
SupportSpec fixture_spec_ex4(Int p);
SupportSpec fixture_spec_last_ex(Int p);
SupportSpec fixture_spec_bad_ex(bool replaced);
std::vector<std::vector<RatVec>> fixture_truncations_ex1(const std::vector<Int>& sizes);
std::vector<std::vector<RatVec>> fixture_truncations_ex2(const std::vector<Int>& sizes);

}  // namespace seriescone
