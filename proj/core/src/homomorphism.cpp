#include "tgs/homomorphism.hpp"

#include <numeric>

#include "tgs/errors.hpp"
#include "tgs/ideals.hpp"

namespace tgs {

HomomorphismMap HomomorphismMap::identity(const GammaStructure& s) {
  HomomorphismMap f;
  f.source = &s;
  f.target = &s;
  f.element_map.resize(static_cast<std::size_t>(s.order()));
  std::iota(f.element_map.begin(), f.element_map.end(), 0);
  f.param_map.resize(static_cast<std::size_t>(s.gamma_size()));
  std::iota(f.param_map.begin(), f.param_map.end(), 0);
  return f;
}

ElementSet HomomorphismMap::image() const {
  ElementSet out;
  for (int v : element_map) out.insert(v);
  return out;
}

bool HomomorphismMap::surjective() const { return image() == target->all(); }

Verdict is_homomorphism(const HomomorphismMap& f) {
  if (f.source == nullptr || f.target == nullptr) throw InputError("homomorphism without endpoints");
  const auto& s = *f.source;
  const auto& t = *f.target;
  const int n = s.order();
  const int m = s.gamma_size();
  if (static_cast<int>(f.element_map.size()) != n || static_cast<int>(f.param_map.size()) != m)
    throw InputError("map sizes do not match the source structure");
  for (int v : f.element_map)
    if (v < 0 || v >= t.order()) throw InputError("element map leaves the target carrier");
  for (int v : f.param_map)
    if (v < 0 || v >= t.gamma_size()) throw InputError("parameter map leaves the target Γ");
  auto img = [&](int e) { return f.element_map[static_cast<std::size_t>(e)]; };
  auto par = [&](int p) { return f.param_map[static_cast<std::size_t>(p)]; };
  if (img(0) != 0) return Verdict::fail({"f(0) = 0", {0}, {}, "f(0) = " + std::to_string(img(0))});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (img(s.add(a, b)) != t.add(img(a), img(b)))
        return Verdict::fail({"additive", {a, b}, {}, "f(a+b) != f(a)+f(b)"});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int al = 0; al < m; ++al)
          for (int be = 0; be < m; ++be)
            if (img(s.mul(a, al, b, be, c)) != t.mul(img(a), par(al), img(b), par(be), img(c)))
              return Verdict::fail({"ternary", {a, b, c}, {al, be}, "f(a_al b_be c) != f(a)_al' f(b)_be' f(c)"});
  return Verdict::pass();
}

std::vector<HomomorphismMap> find_homomorphisms(const GammaStructure& source, const GammaStructure& target) {
  std::vector<HomomorphismMap> out;
  if (source.gamma_size() != target.gamma_size()) return out;
  const int n = source.order();
  const int k = target.order();
  double candidates = 1;
  for (int i = 1; i < n; ++i) candidates *= k;
  if (candidates > 1e6) throw ResourceError("homomorphism search exceeds 10^6 candidate maps");
  HomomorphismMap f;
  f.source = &source;
  f.target = &target;
  f.element_map.assign(static_cast<std::size_t>(n), 0);
  f.param_map.resize(static_cast<std::size_t>(source.gamma_size()));
  std::iota(f.param_map.begin(), f.param_map.end(), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (is_homomorphism(f).holds) out.push_back(f);
      return;
    }
    for (int v = 0; v < k; ++v) {
      f.element_map[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return out;
}

ElementSet pullback_ideal(const HomomorphismMap& f, ElementSet target_ideal) {
  if (const auto v = is_homomorphism(f); !v.holds)
    throw InputError("pullback along a map that is not a homomorphism: " + describe(*v.witness));
  if (target_ideal.empty() || !is_ideal(*f.target, target_ideal).holds)
    throw InputError("pullback requires an ideal of the target");
  ElementSet out;
  for (int a = 0; a < f.source->order(); ++a)
    if (target_ideal.contains(f.element_map[static_cast<std::size_t>(a)])) out.insert(a);
  if (!is_ideal(*f.source, out).holds) throw ConsistencyError("preimage of an ideal is not an ideal");
  return out;
}

GammaStructure image_structure(const HomomorphismMap& f) {
  const auto elems = f.image().elements();
  std::vector<int> index(static_cast<std::size_t>(f.target->order()), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) index[static_cast<std::size_t>(elems[i])] = static_cast<int>(i);
  const auto& t = *f.target;
  const int k = static_cast<int>(elems.size());
  auto at = [&](int e) {
    const int i = index[static_cast<std::size_t>(e)];
    if (i < 0) throw ConsistencyError("image is not closed under the operations");
    return i;
  };
  std::vector<std::string> names;
  for (int e : elems) names.push_back(t.element_name(e));
  return GammaStructure::from_functions(
      k, t.gamma_size(),
      [&](int a, int b) { return at(t.add(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)])); },
      [&](int a, int al, int b, int be, int c) {
        return at(t.mul(elems[static_cast<std::size_t>(a)], al, elems[static_cast<std::size_t>(b)], be,
                        elems[static_cast<std::size_t>(c)]));
      },
      std::move(names));
}

}  // namespace tgs
