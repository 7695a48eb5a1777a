#include "tgs/structure.hpp"

#include <algorithm>
#include <sstream>

#include "tgs/errors.hpp"

namespace tgs {

std::string to_string(ElementSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out << ',';
    out << e;
    first = false;
  }
  out << '}';
  return out.str();
}

namespace {

std::vector<std::uint8_t> narrow(const std::vector<int>& values, int order, const char* what) {
  std::vector<std::uint8_t> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int v = values[i];
    if (v < 0 || v >= order) {
      std::ostringstream msg;
      msg << what << " entry " << i << " = " << v << " is outside [0, " << order << ")";
      throw InputError(msg.str());
    }
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

void check_permutation(const std::vector<int>& sigma, int n, bool must_fix_zero) {
  if (static_cast<int>(sigma.size()) != n) throw InputError("permutation has wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw InputError("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (must_fix_zero && sigma[0] != 0) throw InputError("permutation must fix element 0");
}

}  // namespace

GammaStructure::GammaStructure(int order, int gamma_size, std::vector<int> addition,
                               std::vector<int> ternary, std::vector<std::string> names)
    : order_(order), gamma_(gamma_size), names_(std::move(names)) {
  if (order < 1 || order > kMaxCarrier) throw InputError("order must lie in [1, 32]");
  if (gamma_size < 1) throw InputError("gamma size must be at least 1");
  const auto n = static_cast<std::size_t>(order);
  const auto m = static_cast<std::size_t>(gamma_size);
  if (addition.size() != n * n) throw InputError("addition table must be n x n");
  if (ternary.size() != m * m * n * n * n)
    throw InputError("ternary tables must be m x m x n x n x n");
  addition_ = narrow(addition, order, "addition");
  ternary_ = narrow(ternary, order, "ternary");
  if (names_.empty()) {
    for (int i = 0; i < order; ++i) names_.push_back(std::to_string(i));
  } else if (names_.size() != n) {
    throw InputError("names must have one entry per element");
  }
}

GammaStructure GammaStructure::from_functions(int order, int gamma_size, const AdditionFn& add,
                                              const TernaryFn& mul,
                                              std::vector<std::string> names) {
  std::vector<int> addition;
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) addition.push_back(add(a, b));
  std::vector<int> ternary;
  for (int alpha = 0; alpha < gamma_size; ++alpha)
    for (int beta = 0; beta < gamma_size; ++beta)
      for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
          for (int c = 0; c < order; ++c) ternary.push_back(mul(a, alpha, b, beta, c));
  return GammaStructure(order, gamma_size, std::move(addition), std::move(ternary),
                        std::move(names));
}

bool GammaStructure::is_additive_group() const {
  for (int a = 0; a < order_; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < order_ && !has_inverse; ++b) has_inverse = add(a, b) == 0;
    if (!has_inverse) return false;
  }
  return true;
}

int ternary_product(const GammaStructure& s, int a, int alpha, int b, int beta, int c) {
  const int n = s.order();
  const int m = s.gamma_size();
  if (a < 0 || a >= n || b < 0 || b >= n || c < 0 || c >= n)
    throw InputError("element index out of range");
  if (alpha < 0 || alpha >= m || beta < 0 || beta >= m)
    throw InputError("parameter index out of range");
  return s.mul(a, alpha, b, beta, c);
}

GammaStructure apply_permutation(const GammaStructure& s, const std::vector<int>& sigma) {
  const int n = s.order();
  const int m = s.gamma_size();
  check_permutation(sigma, n, true);
  std::vector<int> inverse(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inverse[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
  auto img = [&](int e) { return sigma[static_cast<std::size_t>(e)]; };
  auto pre = [&](int e) { return inverse[static_cast<std::size_t>(e)]; };
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names[static_cast<std::size_t>(img(i))] = s.element_name(i);
  return GammaStructure::from_functions(
      n, m, [&](int a, int b) { return img(s.add(pre(a), pre(b))); },
      [&](int a, int alpha, int b, int beta, int c) {
        return img(s.mul(pre(a), alpha, pre(b), beta, pre(c)));
      },
      std::move(names));
}

GammaStructure apply_gamma_permutation(const GammaStructure& s, const std::vector<int>& pi) {
  const int m = s.gamma_size();
  check_permutation(pi, m, false);
  std::vector<int> inverse(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) inverse[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])] = i;
  return GammaStructure::from_functions(
      s.order(), m, [&](int a, int b) { return s.add(a, b); },
      [&](int a, int alpha, int b, int beta, int c) {
        return s.mul(a, inverse[static_cast<std::size_t>(alpha)], b,
                     inverse[static_cast<std::size_t>(beta)], c);
      },
      s.names());
}

ElementSet product_set(const GammaStructure& s, ElementSet x, ElementSet y, ElementSet z) {
  ElementSet out;
  const int m = s.gamma_size();
  for (int a : x.elements())
    for (int b : y.elements())
      for (int c : z.elements())
        for (int alpha = 0; alpha < m; ++alpha)
          for (int beta = 0; beta < m; ++beta) out.insert(s.mul(a, alpha, b, beta, c));
  return out;
}

std::string format_set(const GammaStructure& s, ElementSet set) {
  std::string out = "{";
  bool first = true;
  for (int e : set.elements()) {
    if (!first) out += ',';
    out += s.element_name(e);
    first = false;
  }
  return out + "}";
}

}  // namespace tgs
