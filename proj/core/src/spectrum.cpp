#include "tgs/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "tgs/decomposition.hpp"
#include "tgs/errors.hpp"
#include "tgs/ideals.hpp"
#include "tgs/radicals.hpp"

namespace tgs {

namespace {

PointSet bit(std::size_t i) { return PointSet{1} << i; }

std::string point_list(const SpectrumView& v, const GammaStructure& s, PointSet set) {
  std::string out = "[";
  bool first = true;
  for (std::size_t i = 0; i < v.points.size(); ++i) {
    if (!(set & bit(i))) continue;
    if (!first) out += ",";
    first = false;
    out += format_set(s, v.points[i]);
  }
  return out + "]";
}

std::vector<PointSet> clopen_atoms(const SpectrumView& v) {
  const PointSet all = v.all_points();
  std::set<PointSet> family(v.closed.begin(), v.closed.end());
  std::vector<PointSet> clopen;
  for (PointSet c : family)
    if (family.count(all & ~c)) clopen.push_back(c);
  std::vector<PointSet> out;
  for (std::size_t i = 0; i < v.points.size(); ++i) {
    PointSet comp = all;
    for (PointSet c : clopen)
      if (c & bit(i)) comp &= c;
    if (std::find(out.begin(), out.end(), comp) == out.end()) out.push_back(comp);
  }
  return out;
}

}  // namespace

PointSet SpectrumView::all_points() const {
  return points.size() == kMaxSpectrumPoints ? ~PointSet{0} : bit(points.size()) - 1;
}

PointSet SpectrumView::closed_of(ElementSet ideal) const {
  PointSet out = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (ideal.subset_of(points[i])) out |= bit(i);
  return out;
}

std::vector<ElementSet> SpectrumView::points_of(PointSet set) const {
  std::vector<ElementSet> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (set & bit(i)) out.push_back(points[i]);
  return out;
}

SpectrumView spec(const GammaStructure& s) {
  SpectrumView v;
  v.ideals = enumerate_ideals(s);
  v.points = prime_ideals(s, v.ideals);
  if (v.points.size() > kMaxSpectrumPoints)
    throw ResourceError("spectrum has more than " + std::to_string(kMaxSpectrumPoints) + " points");
  for (ElementSet i : v.ideals) v.closed.push_back(v.closed_of(i));
  v.components = clopen_atoms(v);
  return v;
}

std::vector<ElementSet> closed_set(const GammaStructure& s, ElementSet ideal) {
  if (ideal.empty() || !is_ideal(s, ideal).holds)
    throw InputError("closed set requires an ideal; got " + format_set(s, ideal));
  std::vector<ElementSet> out;
  for (ElementSet p : prime_ideals(s, enumerate_ideals(s)))
    if (ideal.subset_of(p)) out.push_back(p);
  return out;
}

std::vector<CheckResult> verify_topology(const GammaStructure& s) {
  const SpectrumView v = spec(s);
  const auto& ideals = v.ideals;
  const std::size_t k = ideals.size();
  const PointSet all = v.all_points();
  auto V = [&](std::size_t i) { return v.closed[i]; };
  auto name = [&](std::size_t i) { return format_set(s, ideals[i]); };
  auto pts = [&](PointSet p) { return point_list(v, s, p); };
  std::vector<CheckResult> out;

  CheckResult boundary("zariski.boundary", "V({0}) = Spec and V(T) = empty", CheckKind::asserted);
  boundary.record(v.closed_of(ElementSet::zero()) == all,
                  [&] { return "V({0}) = " + pts(v.closed_of(ElementSet::zero())); });
  boundary.record(v.closed_of(s.all()) == 0, [&] { return "V(T) = " + pts(v.closed_of(s.all())); });
  out.push_back(boundary);

  CheckResult meet("zariski.intersection", "V(I ∩ J) = V(I) ∪ V(J)", CheckKind::asserted);
  CheckResult sum("zariski.sum", "V(I + J) = V(I) ∩ V(J)", CheckKind::asserted);
  CheckResult reverse("spec.order_reversal", "I ⊆ J implies V(J) ⊆ V(I)", CheckKind::asserted);
  CheckResult converse("spec.order_reversal_converse", "V(I) ⊆ V(J) implies J ⊆ I", CheckKind::reported);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const PointSet vm = v.closed_of(ideals[i] & ideals[j]);
      meet.record(vm == (V(i) | V(j)), [&] { return "I=" + name(i) + " J=" + name(j) + " V(I∩J)=" + pts(vm); });
      const ElementSet ij = ideal_sum(s, ideals[i], ideals[j]);
      const PointSet vs = v.closed_of(ij);
      sum.record(vs == (V(i) & V(j)), [&] { return "I=" + name(i) + " J=" + name(j) + " V(I+J)=" + pts(vs); });
      if (ideals[i].subset_of(ideals[j]))
        reverse.record((V(j) & ~V(i)) == 0, [&] { return "I=" + name(i) + " J=" + name(j); });
      if ((V(i) & ~V(j)) == 0)
        converse.record(ideals[j].subset_of(ideals[i]), [&] {
          return "I=" + name(i) + " J=" + name(j) + " V(I)=" + pts(V(i)) + " V(J)=" + pts(V(j));
        });
    }
  out.push_back(meet);
  out.push_back(sum);

  // Arbitrary families: every subfamily when small, otherwise the whole family.
  CheckResult family("zariski.family_sum", "V(sum of a family) = intersection of the V(I)", CheckKind::asserted);
  auto check_family = [&](std::uint64_t members) {
    ElementSet total = ElementSet::zero();
    PointSet meet_all = all;
    for (std::size_t i = 0; i < k; ++i)
      if (members >> i & 1u) {
        total = ideal_sum(s, total, ideals[i]);
        meet_all &= V(i);
      }
    family.record(v.closed_of(total) == meet_all, [&] { return "family sum " + format_set(s, total); });
  };
  if (k <= 12) {
    for (std::uint64_t members = 1; members < (std::uint64_t{1} << k); ++members) check_family(members);
  } else {
    check_family((std::uint64_t{1} << k) - 1);
  }
  out.push_back(family);

  std::set<PointSet> closed_family(v.closed.begin(), v.closed.end());
  CheckResult closure("zariski.closed_family", "closed sets are closed under union and intersection",
                      CheckKind::asserted);
  for (PointSet a : closed_family)
    for (PointSet b : closed_family) {
      closure.record(closed_family.count(a | b) > 0, [&] { return "union " + pts(a | b) + " is not closed"; });
      closure.record(closed_family.count(a & b) > 0,
                     [&] { return "intersection " + pts(a & b) + " is not closed"; });
    }
  out.push_back(closure);
  out.push_back(reverse);
  out.push_back(converse);

  CheckResult t0("spec.t0", "distinct points have distinct closures V(P)", CheckKind::asserted);
  CheckResult point_closure("spec.point_closure", "the closure of {P} is V(P)", CheckKind::asserted);
  for (std::size_t i = 0; i < v.points.size(); ++i) {
    const PointSet vp = v.closed_of(v.points[i]);
    PointSet closure_of_point = all;
    for (PointSet c : closed_family)
      if (c & bit(i)) closure_of_point &= c;
    point_closure.record(closure_of_point == vp,
                         [&] { return "P=" + format_set(s, v.points[i]) + " closure=" + pts(closure_of_point); });
    for (std::size_t j = i + 1; j < v.points.size(); ++j)
      t0.record(vp != v.closed_of(v.points[j]), [&] {
        return "P1=" + format_set(s, v.points[i]) + " P2=" + format_set(s, v.points[j]);
      });
  }
  out.push_back(t0);
  out.push_back(point_closure);

  CheckResult radical("spec.radical_closed_set", "intersection of the points of V(I) is the prime radical of I",
                      CheckKind::asserted);
  for (std::size_t i = 0; i < k; ++i) {
    ElementSet meet_points = s.all();
    for (ElementSet p : v.points_of(V(i))) meet_points = meet_points & p;
    const ElementSet r = radical_by_primes(s, ideals[i], v.points);
    radical.record(meet_points == r, [&] {
      return "I=" + name(i) + " meet=" + format_set(s, meet_points) + " radical=" + format_set(s, r);
    });
  }
  out.push_back(radical);
  return out;
}

std::optional<std::pair<ElementSet, ElementSet>> find_algebraic_splitting(const GammaStructure& s) {
  const auto ideals = enumerate_ideals(s);
  for (ElementSet i : ideals) {
    if (i == ElementSet::zero()) continue;
    for (ElementSet j : ideals) {
      if (j == ElementSet::zero()) continue;
      if ((i & j) != ElementSet::zero() || ideal_sum(s, i, j) != s.all()) continue;
      if (product_set(s, i, j, s.all()) != ElementSet::zero()) continue;
      return std::pair{i, j};
    }
  }
  return std::nullopt;
}

ConnectivityReport connected_components(const GammaStructure& s) {
  const SpectrumView v = spec(s);
  ConnectivityReport r;
  r.component_count = static_cast<int>(v.components.size());
  for (PointSet c : v.components) r.components.push_back(v.points_of(c));
  r.connected = r.component_count <= 1;
  r.splitting = find_algebraic_splitting(s);
  r.criterion_agrees = r.connected == !r.splitting.has_value();
  r.idempotent_count = find_idempotents(s).size();
  r.idempotent_count_matches = r.idempotent_count == r.component_count;
  return r;
}

std::string spec_to_dot(const GammaStructure& s, const SpectrumView& view) {
  std::ostringstream out;
  out << "digraph spec {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < view.points.size(); ++i)
    out << "  p" << i << " [label=\"" << format_set(s, view.points[i]) << "\"];\n";
  for (std::size_t i = 0; i < view.points.size(); ++i)
    for (std::size_t j = 0; j < view.points.size(); ++j)
      if (view.points[i].proper_subset_of(view.points[j])) out << "  p" << i << " -> p" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tgs
