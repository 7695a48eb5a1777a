#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tgs/structure.hpp"

namespace tgs {

/// The lexicographically least table serialization over all relabelings.
struct CanonicalForm {
  std::string bytes;

  /// 64-bit FNV-1a of the bytes, as 16 hex digits. Used as a structure id.
  std::string hash_hex() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalOptions {
  /// Off: Γ is a labeled set and only element permutations fixing 0 count as
  /// isomorphisms. On: parameter relabelings are minimized over as well.
  bool gamma_relabeling = false;
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> sigma;     ///< element relabeling achieving the form
  std::vector<int> gamma_pi;  ///< parameter relabeling (identity when off)
};

/// All permutations of [0, n) with sigma[0] = 0, in lexicographic order.
std::vector<std::vector<int>> zero_fixing_permutations(int n);

/// Serialization of the tables as they stand (no minimization).
std::string serialize_tables(const GammaStructure& s);

CanonicalLabeling canonical_labeling(const GammaStructure& s, CanonicalOptions options = {});
CanonicalForm canonical_form(const GammaStructure& s, CanonicalOptions options = {});

/// The relabeled structure whose tables serialize to the canonical form.
GammaStructure canonical_representative(const GammaStructure& s, CanonicalOptions options = {});

}  // namespace tgs
