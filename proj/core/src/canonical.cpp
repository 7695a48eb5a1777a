#include "tgs/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace tgs {

std::string CanonicalForm::hash_hex() const {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::vector<std::vector<int>> zero_fixing_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (n > 1 && std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

std::string serialize_tables(const GammaStructure& s) {
  std::string out;
  out.push_back(static_cast<char>(s.order()));
  out.push_back(static_cast<char>(s.gamma_size()));
  for (auto v : s.addition_table()) out.push_back(static_cast<char>(v));
  for (auto v : s.ternary_tables()) out.push_back(static_cast<char>(v));
  return out;
}

namespace {

std::vector<std::vector<int>> all_permutations(int m) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Serializes sigma·S·pi without materializing the relabeled structure.
void serialize_relabeled(const GammaStructure& s, const std::vector<int>& sigma,
                         const std::vector<int>& inv_sigma, const std::vector<int>& inv_pi,
                         std::string& out) {
  const int n = s.order();
  const int m = s.gamma_size();
  out.clear();
  out.push_back(static_cast<char>(n));
  out.push_back(static_cast<char>(m));
  auto img = [&](int e) { return static_cast<char>(sigma[static_cast<std::size_t>(e)]); };
  auto pre = [&](int e) { return inv_sigma[static_cast<std::size_t>(e)]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.push_back(img(s.add(pre(a), pre(b))));
  for (int alpha = 0; alpha < m; ++alpha)
    for (int beta = 0; beta < m; ++beta) {
      const int al = inv_pi[static_cast<std::size_t>(alpha)];
      const int be = inv_pi[static_cast<std::size_t>(beta)];
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) out.push_back(img(s.mul(pre(a), al, pre(b), be, pre(c))));
    }
}

std::vector<int> invert(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return inv;
}

}  // namespace

CanonicalLabeling canonical_labeling(const GammaStructure& s, CanonicalOptions options) {
  const auto sigmas = zero_fixing_permutations(s.order());
  std::vector<std::vector<int>> pis;
  if (options.gamma_relabeling) {
    pis = all_permutations(s.gamma_size());
  } else {
    std::vector<int> id(static_cast<std::size_t>(s.gamma_size()));
    std::iota(id.begin(), id.end(), 0);
    pis.push_back(id);
  }
  CanonicalLabeling best;
  bool have = false;
  std::string buf;
  for (const auto& pi : pis) {
    const auto inv_pi = invert(pi);
    for (const auto& sigma : sigmas) {
      serialize_relabeled(s, sigma, invert(sigma), inv_pi, buf);
      if (!have || buf < best.form.bytes) {
        best.form.bytes = buf;
        best.sigma = sigma;
        best.gamma_pi = pi;
        have = true;
      }
    }
  }
  return best;
}

CanonicalForm canonical_form(const GammaStructure& s, CanonicalOptions options) {
  return canonical_labeling(s, options).form;
}

GammaStructure canonical_representative(const GammaStructure& s, CanonicalOptions options) {
  const auto labeling = canonical_labeling(s, options);
  auto relabeled = apply_permutation(s, labeling.sigma);
  if (options.gamma_relabeling) relabeled = apply_gamma_permutation(relabeled, labeling.gamma_pi);
  return relabeled;
}

}  // namespace tgs
