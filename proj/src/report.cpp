#include "cactuslab/report.hpp"

#include <json.hpp>

namespace cactuslab {

std::string reports_to_json(const std::vector<AxiomReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& rep : reports) {
    nlohmann::ordered_json obj;
    obj["axiom"] = rep.axiom;
    obj["pass"] = rep.pass;
    if (rep.pass)
      obj["witness"] = nullptr;
    else
      obj["witness"] = nlohmann::ordered_json{{"detail", rep.witness}};
    obj["trials"] = rep.trials;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

bool all_pass(const std::vector<AxiomReport>& reports) {
  for (const auto& rep : reports)
    if (!rep.pass) return false;
  return true;
}

void report_fail(AxiomReport& rep, const std::string& witness) {
  if (rep.pass) {
    rep.pass = false;
    rep.witness = witness;
  }
}

}  // namespace cactuslab
