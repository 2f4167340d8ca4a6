#pragma once

#include <string>
#include <vector>

namespace cactuslab {

// outcome of one axiom family over a batch of randomized trials; the
// witness keeps the first counterexample found
struct AxiomReport {
  std::string axiom;
  bool pass = true;
  std::string witness;
  int trials = 0;
};

// JSON array of {"axiom", "pass", "witness", "trials"} objects; witness
// is null when the axiom passed
std::string reports_to_json(const std::vector<AxiomReport>& reports);

bool all_pass(const std::vector<AxiomReport>& reports);

// mark rep failed, remembering the first witness
void report_fail(AxiomReport& rep, const std::string& witness);

}  // namespace cactuslab
