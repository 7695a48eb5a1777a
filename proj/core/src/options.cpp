#include "tgs/options.hpp"

#include "tgs/errors.hpp"

namespace tgs {

std::string to_string(PrimaryParams v) { return v == PrimaryParams::shared ? "shared" : "independent"; }
std::string to_string(RadicalIteration v) { return v == RadicalIteration::once ? "once" : "fixpoint"; }
std::string to_string(ModuleAssociativity v) {
  return v == ModuleAssociativity::surrogate ? "surrogate" : "printed";
}

PrimaryParams parse_primary_params(const std::string& s) {
  if (s == "shared") return PrimaryParams::shared;
  if (s == "independent") return PrimaryParams::independent;
  throw InputError("primary-quantify-params must be shared or independent");
}

RadicalIteration parse_radical_iteration(const std::string& s) {
  if (s == "once") return RadicalIteration::once;
  if (s == "fixpoint") return RadicalIteration::fixpoint;
  throw InputError("radical-iterate must be once or fixpoint");
}

ModuleAssociativity parse_module_associativity(const std::string& s) {
  if (s == "surrogate") return ModuleAssociativity::surrogate;
  if (s == "printed") return ModuleAssociativity::printed;
  throw InputError("module-assoc must be surrogate or printed");
}

}  // namespace tgs
