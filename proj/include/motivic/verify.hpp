#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motivic/curves.hpp"
#include "motivic/strata.hpp"

namespace motivic {

struct VerifyOptions {
  int precision = 10;
  std::uint64_t seed = 20240601;
  std::vector<unsigned> field_checks = {2, 3};
  int instances = 0;  ///< 0 picks each suite's default size
};

/// Suite names accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or "all"). Throws InvalidInput for an unknown name.
std::vector<Check> run_suite(const std::string& name, const VerifyOptions& opt = {});

/// Germs with known invariants used by the curve suites.
struct CorpusGerm {
  std::string name;
  CurveGerm germ;
};
std::vector<CorpusGerm> germ_corpus();

}  // namespace motivic
