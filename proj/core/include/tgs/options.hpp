#pragma once

#include <string>

namespace tgs {

/// Which parameters the cubes in the primary-ideal test use: the same (α, β)
/// as the product in the hypothesis, or any pair.
enum class PrimaryParams { shared, independent };

/// Element radical: one self-product a_α a_β a, or iterate cubes to a fixpoint.
enum class RadicalIteration { once, fixpoint };

/// Module associativity law to enforce; see gamma_modules.hpp.
enum class ModuleAssociativity { surrogate, printed };

struct AnalysisOptions {
  PrimaryParams primary_params = PrimaryParams::shared;
  RadicalIteration radical_iteration = RadicalIteration::once;
  ModuleAssociativity module_associativity = ModuleAssociativity::surrogate;
  bool gamma_relabeling = false;
};

std::string to_string(PrimaryParams v);
std::string to_string(RadicalIteration v);
std::string to_string(ModuleAssociativity v);

/// Parses "shared"/"independent" etc.; throws InputError on anything else.
PrimaryParams parse_primary_params(const std::string& s);
RadicalIteration parse_radical_iteration(const std::string& s);
ModuleAssociativity parse_module_associativity(const std::string& s);

}  // namespace tgs
