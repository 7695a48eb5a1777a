#include "tgs/theorems.hpp"

#include <algorithm>
#include <map>

#include "tgs/axioms.hpp"
#include "tgs/canonical.hpp"
#include "tgs/congruence.hpp"
#include "tgs/decomposition.hpp"
#include "tgs/errors.hpp"
#include "tgs/gamma_modules.hpp"
#include "tgs/homomorphism.hpp"
#include "tgs/ideals.hpp"
#include "tgs/parallel.hpp"
#include "tgs/radicals.hpp"
#include "tgs/spectrum.hpp"

namespace tgs {

namespace {

constexpr CheckKind A = CheckKind::asserted;
constexpr CheckKind R = CheckKind::reported;

std::string blocks_text(const GammaStructure& s, const CongruencePartition& rho) {
  std::string out;
  for (ElementSet b : rho.blocks()) out += format_set(s, b);
  return out;
}

std::string verdict_text(const Verdict& v) { return v.witness ? describe(*v.witness) : "holds"; }

void ideal_checks(const GammaStructure& s, const SuiteOptions& o, std::vector<CheckResult>& out) {
  const auto ideals = enumerate_ideals(s);
  const auto T = s.all();
  auto F = [&](ElementSet x) { return format_set(s, x); };

  CheckResult meet("ideal.intersection", "the intersection of two ideals is an ideal", A);
  for (ElementSet i : ideals)
    for (ElementSet j : ideals) meet.record(is_ideal(s, i & j).holds, [&] { return F(i) + " ∩ " + F(j); });
  out.push_back(meet);

  CheckResult gen("ideal.generated_is_meet", "⟨X⟩ is the intersection of all ideals containing X", A);
  const int n = s.order();
  auto check_seed = [&](ElementSet seed) {
    ElementSet meet_all = T;
    for (ElementSet i : ideals)
      if (seed.subset_of(i)) meet_all = meet_all & i;
    const ElementSet g = generated_ideal(s, seed);
    gen.record(g == meet_all, [&] { return "X=" + F(seed) + " ⟨X⟩=" + F(g) + " meet=" + F(meet_all); });
  };
  if (n <= 10) {
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) check_seed(ElementSet(bits));
  } else {
    for (int e = 0; e < n; ++e) check_seed(ElementSet::of({e}));
  }
  out.push_back(gen);

  CheckResult max_prime("ideal.maximal_implies_prime", "every maximal ideal is prime", R);
  CheckResult prime_primary("ideal.prime_implies_primary", "every prime ideal is primary", A);
  CheckResult prime_semi("ideal.prime_implies_semiprime", "every prime ideal is semiprime", A);
  CheckResult triple("ideal.prime_ideal_triples",
                     "P is prime iff IΓJΓK ⊆ P forces I, J or K into P for all ideals I, J, K", R);
  std::vector<ElementSet> proper;
  for (ElementSet i : ideals)
    if (i != T) proper.push_back(i);
  for (ElementSet p : proper) {
    const Verdict prime = is_prime(s, p);
    if (is_maximal(s, p, ideals).holds)
      max_prime.record(prime.holds, [&] { return "M=" + F(p) + ": " + verdict_text(prime); });
    if (prime.holds) {
      const Verdict q = is_primary(s, p, o.analysis.primary_params);
      prime_primary.record(q.holds, [&] { return "P=" + F(p) + ": " + verdict_text(q); });
      const Verdict sp = is_semiprime(s, p);
      prime_semi.record(sp.holds, [&] { return "P=" + F(p) + ": " + verdict_text(sp); });
    }
    bool ideal_prime = true;
    std::string bad;
    for (ElementSet i : ideals)
      for (ElementSet j : ideals)
        for (ElementSet k : ideals) {
          if (!ideal_prime) break;
          if (product_set(s, i, j, k).subset_of(p) && !i.subset_of(p) && !j.subset_of(p) && !k.subset_of(p)) {
            ideal_prime = false;
            bad = F(i) + "Γ" + F(j) + "Γ" + F(k) + " ⊆ " + F(p);
          }
        }
    triple.record(ideal_prime == prime.holds, [&] {
      return "P=" + F(p) + " elementwise=" + (prime.holds ? "prime" : "not prime") +
             (bad.empty() ? std::string(" ideal-wise=prime") : " ideal-wise fails: " + bad);
    });
  }
  out.push_back(max_prime);
  out.push_back(prime_primary);
  out.push_back(prime_semi);
  out.push_back(triple);

  CheckResult semi_meet("ideal.semiprime_intersection", "proper intersections of semiprime ideals are semiprime", A);
  std::vector<ElementSet> semis;
  for (ElementSet p : proper)
    if (is_semiprime(s, p).holds) semis.push_back(p);
  for (ElementSet a : semis)
    for (ElementSet b : semis) {
      const Verdict v = is_semiprime(s, a & b);
      semi_meet.record(v.holds, [&] { return F(a) + " ∩ " + F(b) + ": " + verdict_text(v); });
    }
  if (!semis.empty()) {
    ElementSet all_meet = T;
    for (ElementSet q : semis) all_meet = all_meet & q;
    const Verdict v = is_semiprime(s, all_meet);
    semi_meet.record(v.holds, [&] { return "whole family " + F(all_meet) + ": " + verdict_text(v); });
  }
  out.push_back(semi_meet);
}

void radical_checks(const GammaStructure& s, const SuiteOptions& o, std::vector<CheckResult>& out) {
  const auto ideals = enumerate_ideals(s);
  const auto primes = prime_ideals(s, ideals);
  const auto T = s.all();
  auto F = [&](ElementSet x) { return format_set(s, x); };
  auto rad = [&](ElementSet i) { return radical_by_primes(s, i, primes); };

  CheckResult contains("radical.extensive", "I ⊆ √I", A);
  CheckResult semi("radical.semiprime", "√I is semiprime when proper", A);
  CheckResult idem("radical.idempotent", "√√I = √I", A);
  CheckResult mono("radical.monotone", "I ⊆ J implies √I ⊆ √J", A);
  CheckResult fixed("radical.semiprime_fixed", "a semiprime Q equals {a : a_α a_β a ∈ Q}", A);
  CheckResult chars("radical.element_characterization",
                    "√I equals {a : a_α a_β a ∈ I for some α, β}", R);
  CheckResult primary("radical.primary_radical_prime", "√Q is prime for every primary Q", R);
  for (ElementSet i : ideals) {
    const ElementSet r = rad(i);
    contains.record(i.subset_of(r), [&] { return "I=" + F(i) + " √I=" + F(r); });
    if (r != T) {
      const Verdict v = is_semiprime(s, r);
      semi.record(v.holds, [&] { return "I=" + F(i) + " √I=" + F(r) + ": " + verdict_text(v); });
    }
    idem.record(rad(r) == r, [&] { return "I=" + F(i) + " √I=" + F(r) + " √√I=" + F(rad(r)); });
    for (ElementSet j : ideals)
      if (i.subset_of(j))
        mono.record(r.subset_of(rad(j)), [&] { return "I=" + F(i) + " J=" + F(j); });
    const auto report = radical_report(s, i, o.analysis.radical_iteration);
    chars.record(report.agree, [&] {
      return "I=" + F(i) + " by primes " + F(report.by_primes) + ", by elements " + F(report.by_elements);
    });
    if (i == T) continue;
    if (is_semiprime(s, i).holds) {
      const ElementSet e = radical_by_elements(s, i, RadicalIteration::once);
      fixed.record(e == i, [&] { return "Q=" + F(i) + " elements=" + F(e); });
    }
    if (is_primary(s, i, o.analysis.primary_params).holds) {
      if (r == T) {
        primary.record(false, [&] { return "Q=" + F(i) + " has √Q = T"; });
      } else {
        const Verdict v = is_prime(s, r);
        primary.record(v.holds, [&] { return "Q=" + F(i) + " √Q=" + F(r) + ": " + verdict_text(v); });
      }
    }
  }
  out.push_back(contains);
  out.push_back(semi);
  out.push_back(idem);
  out.push_back(mono);
  out.push_back(fixed);
  out.push_back(chars);
  out.push_back(primary);

  CheckResult jac("radical.jacobson_semiprime", "J(T) is semiprime when proper and every maximal ideal is prime",
                  A);
  const auto maxes = maximal_ideals(s, ideals);
  const bool all_prime = std::all_of(maxes.begin(), maxes.end(), [&](ElementSet m) { return is_prime(s, m).holds; });
  const ElementSet J = jacobson_radical(s);
  if (all_prime && J != T) {
    const Verdict v = is_semiprime(s, J);
    jac.record(v.holds, [&] { return "J=" + F(J) + ": " + verdict_text(v); });
  }
  out.push_back(jac);
}

void congruence_checks(const GammaStructure& s, std::vector<CheckResult>& out) {
  const auto ideals = enumerate_ideals(s);
  const bool group = s.is_additive_group();
  const auto T = s.all();
  auto F = [&](ElementSet x) { return format_set(s, x); };

  CheckResult bourne("congruence.bourne_is_congruence", "the Bourne relation of an ideal is a congruence", A);
  CheckResult contains("congruence.bourne_zero_class_contains", "I ⊆ zero class of ρ_I", A);
  CheckResult equal(group ? "congruence.bourne_zero_class.group" : "congruence.bourne_zero_class.monoid",
                    "I equals the zero class of ρ_I", group ? A : R);
  CheckResult charac(group ? "quotient.prime_characterization.group" : "quotient.prime_characterization.monoid",
                     "P is prime iff T/ρ_P has no nonzero zero-divisors", group ? A : R);
  for (ElementSet i : ideals) {
    const auto rho = bourne_congruence(s, i);
    const Verdict v = is_congruence(s, rho);
    bourne.record(v.holds, [&] { return "I=" + F(i) + ": " + verdict_text(v); });
    const ElementSet zero = rho.zero_class();
    contains.record(i.subset_of(zero), [&] { return "I=" + F(i) + " zero class " + F(zero); });
    equal.record(zero == i, [&] { return "I=" + F(i) + " zero class " + F(zero); });
    if (i == T || !v.holds) continue;
    const Verdict prime = is_prime(s, i);
    const auto q = quotient_structure(s, rho);
    const auto zd = find_nonzero_zero_divisor(q);
    charac.record(prime.holds == !zd.has_value(), [&] {
      std::string w = "P=" + F(i) + (prime.holds ? " prime" : " not prime (" + verdict_text(prime) + ")");
      w += zd ? "; quotient zero-divisor " + describe(*zd) : "; quotient has no zero-divisors";
      return w;
    });
  }
  out.push_back(bourne);
  out.push_back(contains);
  out.push_back(equal);
  out.push_back(charac);

  if (s.order() > kPartitionScanCap) return;
  const auto congruences = enumerate_congruences(s);
  CheckResult zero_ideal("congruence.zero_class_is_ideal", "the zero class of every congruence is an ideal", A);
  CheckResult quotient("quotient.axioms", "every quotient structure satisfies the axioms", A);
  CheckResult trip("congruence.round_trip", "ρ equals the Bourne congruence of its zero class", R);
  CheckResult bij("congruence.correspondence", "distinct congruences have distinct zero classes", R);
  std::map<std::uint32_t, std::vector<std::size_t>> by_zero;
  for (std::size_t c = 0; c < congruences.size(); ++c) {
    const auto& rho = congruences[c];
    const ElementSet z = congruence_to_ideal(s, rho);
    const Verdict v = is_ideal(s, z);
    zero_ideal.record(v.holds, [&] { return "ρ=" + blocks_text(s, rho) + ": " + verdict_text(v); });
    const auto report = verify_axioms(quotient_structure(s, rho));
    quotient.record(report.all_pass(), [&] {
      return "ρ=" + blocks_text(s, rho) + ": " + verdict_text(*report.first_failure());
    });
    if (v.holds) {
      const auto back = bourne_congruence(s, z);
      trip.record(back == rho, [&] {
        return "ρ=" + blocks_text(s, rho) + " I_ρ=" + F(z) + " ρ_{I_ρ}=" + blocks_text(s, back);
      });
    }
    by_zero[z.bits()].push_back(c);
  }
  for (const auto& [bits, members] : by_zero)
    bij.record(members.size() == 1, [&] {
      std::string w = "zero class " + F(ElementSet(bits)) + " shared by";
      for (std::size_t c : members) w += " " + blocks_text(s, congruences[c]);
      return w;
    });
  out.push_back(zero_ideal);
  out.push_back(quotient);
  out.push_back(trip);
  out.push_back(bij);
}

void structure_checks(const GammaStructure& s, std::vector<CheckResult>& out) {
  auto F = [&](ElementSet x) { return format_set(s, x); };
  const auto conn = connected_components(s);
  CheckResult crit("spec.connectedness_criterion",
                   "Spec is connected iff there is no splitting T = I ⊕ J with IΓJΓT = 0", R);
  crit.record(conn.criterion_agrees, [&] {
    std::string w = std::to_string(conn.component_count) + " components, ";
    w += conn.splitting ? "splitting " + F(conn.splitting->first) + " ⊕ " + F(conn.splitting->second)
                        : std::string("no splitting");
    return w;
  });
  out.push_back(crit);
  CheckResult idem("spec.idempotent_count", "the number of idempotents equals the number of components", R);
  idem.record(conn.idempotent_count_matches, [&] {
    return std::to_string(conn.idempotent_count) + " idempotents " + F(find_idempotents(s)) + ", " +
           std::to_string(conn.component_count) + " components";
  });
  out.push_back(idem);

  CheckResult dec("decomposition.idempotent", "every idempotent e splits T as I_e ⊕ J with I_e Γ J Γ T = 0", R);
  for (int e : find_idempotents(s).elements()) {
    const auto d = idempotent_decomposition(s, e);
    dec.record(d.complement.has_value(), [&] {
      return "e=" + s.element_name(e) + " I_e=" + F(d.generated) +
             (d.complement_ignoring_products ? " complement " + F(*d.complement_ignoring_products) +
                                                   " fails the product condition"
                                             : std::string(" has no complement"));
    });
  }
  out.push_back(dec);

  const auto ideals = enumerate_ideals(s);
  const auto maxes = maximal_ideals(s, ideals);
  const bool group = s.is_additive_group();
  CheckResult quotient_simple("simplicity.maximal_quotient", "T/ρ_M is simple for every maximal M", R);
  for (ElementSet m : maxes) {
    const auto q = quotient_structure(s, bourne_congruence(s, m));
    quotient_simple.record(is_simple(q), [&] {
      return "M=" + F(m) + " quotient of order " + std::to_string(q.order()) + " has " +
             std::to_string(enumerate_ideals(q).size()) + " ideals";
    });
  }
  out.push_back(quotient_simple);

  CheckResult simple_cong("simplicity.congruences",
                          "T is simple iff every quotient map other than T → 0 is injective", R);
  if (s.order() <= kPartitionScanCap && s.order() > 1) {
    const auto congruences = enumerate_congruences(s);
    const bool only_trivial = std::all_of(congruences.begin(), congruences.end(), [&](const auto& rho) {
      return rho.block_count() == 1 || rho.block_count() == s.order();
    });
    simple_cong.record(is_simple(s) == only_trivial, [&] {
      return std::string(is_simple(s) ? "simple" : "not simple") + " with " + std::to_string(congruences.size()) +
             " congruences";
    });
  }
  out.push_back(simple_cong);

  CheckResult crt(group ? "crt.maximal_family.group" : "crt.maximal_family.monoid",
                  "T maps onto the product of T/ρ_M over pairwise comaximal maximal ideals", R);
  if (maxes.size() >= 2) {
    const auto r = crt_check(s, maxes);
    if (r.pairwise_comaximal)
      crt.record(r.surjective && r.kernel_matches, [&] {
        std::string w = "kernel class " + F(r.kernel_zero_class) + " vs " + F(r.intersection);
        if (!r.surjective) w += ", not surjective";
        return w;
      });
  }
  out.push_back(crt);
}

void module_checks(const GammaStructure& s, const SuiteOptions& o, std::vector<CheckResult>& out) {
  auto F = [&](ElementSet x) { return format_set(s, x); };
  const auto regular = ModuleAction::regular(s);
  const auto zero = ModuleAction::zero(s);
  CheckResult axioms("module.regular_axioms", "the regular module satisfies M1-M3", A);
  const auto report = verify_module_axioms(regular, o.analysis.module_associativity);
  axioms.record(report.all_pass(), [&] {
    for (const Verdict* v : {&report.carrier, &report.m1, &report.m2(), &report.m3})
      if (!v->holds) return verdict_text(*v);
    return std::string("?");
  });
  out.push_back(axioms);

  CheckResult ann_ideal("module.annihilator_ideal", "a proper annihilator is an ideal", A);
  CheckResult ann_prime("module.annihilator_prime", "the annihilator of a simple module is prime", R);
  for (const ModuleAction* m : {&regular, &zero}) {
    const auto ann = annihilator(*m);
    if (ann.proper) ann_ideal.record(ann.ideal.holds, [&] { return "Ann=" + F(ann.set) + ": " + verdict_text(ann.ideal); });
    if (ann.prime) ann_prime.record(ann.prime->holds, [&] { return "Ann=" + F(ann.set) + ": " + verdict_text(*ann.prime); });
  }

  CheckResult primitive("module.primitive_prime", "every primitive ideal is prime", R);
  CheckResult search_ann("module.search_annihilator_ideal",
                         "proper annihilators of simple modules found by search are ideals", R);
  CheckResult complete("module.primitive_search_complete", "the primitive-ideal search finishes within budget", R);
  if (s.order() <= o.primitive_max_order && s.gamma_size() == 1) {
    PrimitiveSearchOptions po;
    po.associativity = o.analysis.module_associativity;
    try {
      const auto found = find_primitive_ideals(s, po);
      complete.record(true, [] { return std::string(); });
      for (const auto& p : found.ideals) {
        search_ann.record(true, [] { return std::string(); });
        primitive.record(p.prime, [&] {
          return "P=" + F(p.ideal) + " (carrier " + std::to_string(p.carrier_order) + "): " +
                 (p.prime_witness ? describe(*p.prime_witness) : std::string("not prime"));
        });
      }
      for (const auto& [set, w] : found.non_ideal_annihilators)
        search_ann.record(false, [&] { return "Ann=" + F(set) + ": " + describe(w); });
    } catch (const ResourceError& e) {
      complete.record(false, [&] { return std::string(e.what()) + " (" + e.progress() + ")"; });
    }
  }
  out.push_back(ann_ideal);
  out.push_back(ann_prime);
  out.push_back(primitive);
  out.push_back(search_ann);
  out.push_back(complete);

  CheckResult sub("module.hom_kernel_image", "kernels and images of module homomorphisms are submodules", A);
  CheckResult iso("module.first_isomorphism", "M/ker f has as many classes as Im f", A);
  CheckResult bourne_iso("module.first_isomorphism_bourne",
                         "the quotient of M by the submodule ker f has |Im f| elements", R);
  if (s.order() <= 4) {
    for (const ModuleAction* from : {&regular, &zero})
      for (const ModuleAction* to : {&regular, &zero})
        for (const auto& h : find_module_homomorphisms(*from, *to)) {
          sub.record(is_submodule(*from, h.kernel) && is_submodule(*to, h.image), [&] {
            return "ker " + to_string(h.kernel) + " im " + to_string(h.image);
          });
          iso.record(kernel_congruence(h.map).block_count() == h.image.size(),
                     [&] { return "im " + to_string(h.image); });
          const int q = quotient_carrier_size(*from, h.kernel);
          bourne_iso.record(q == h.image.size(), [&] {
            return "ker " + to_string(h.kernel) + " quotient " + std::to_string(q) + " vs im " + to_string(h.image);
          });
        }
  }
  out.push_back(sub);
  out.push_back(iso);
  out.push_back(bourne_iso);
}

}  // namespace

std::vector<CheckResult> structure_theorems(const GammaStructure& s, const SuiteOptions& options) {
  std::vector<CheckResult> out;
  ideal_checks(s, options, out);
  radical_checks(s, options, out);
  congruence_checks(s, out);
  for (auto& c : verify_topology(s)) out.push_back(std::move(c));
  structure_checks(s, out);
  module_checks(s, options, out);
  return out;
}

std::vector<CheckResult> corpus_theorems(const std::vector<GammaStructure>& corpus, int max_order, int jobs) {
  std::vector<const GammaStructure*> small;
  for (const auto& s : corpus)
    if (s.order() <= max_order) small.push_back(&s);
  const std::size_t k = small.size();
  std::vector<std::vector<CheckResult>> partial(k * k);
  parallel_for(k * k, jobs, [&](std::size_t idx) {
    const GammaStructure& src = *small[idx / k];
    const GammaStructure& tgt = *small[idx % k];
    const std::string pair = "#" + std::to_string(idx / k) + " → #" + std::to_string(idx % k) + " ";
    CheckResult hom("hom.pullback_ideal", "the preimage of an ideal is an ideal", A);
    CheckResult prime("hom.pullback_prime", "the preimage of a prime along a surjection is prime", A);
    CheckResult maximal("hom.pullback_maximal", "the preimage of a maximal ideal along a surjection is maximal", R);
    CheckResult first("hom.first_isomorphism", "T/ker f is isomorphic to the image of a surjection", A);
    CheckResult cont("hom.continuity", "the induced map on spectra is continuous", A);
    const auto tgt_ideals = enumerate_ideals(tgt);
    const auto tgt_primes = prime_ideals(tgt, tgt_ideals);
    const auto tgt_max = maximal_ideals(tgt, tgt_ideals);
    const auto src_ideals = enumerate_ideals(src);
    for (const auto& f : find_homomorphisms(src, tgt)) {
      std::string map = "f=[";
      for (std::size_t i = 0; i < f.element_map.size(); ++i) map += (i ? "," : "") + std::to_string(f.element_map[i]);
      map += "] ";
      for (ElementSet i : tgt_ideals) {
        const ElementSet back = pullback_ideal(f, i);
        hom.record(is_ideal(src, back).holds, [&] { return pair + map + format_set(tgt, i); });
      }
      if (!f.surjective()) continue;
      for (ElementSet p : tgt_primes) {
        const ElementSet back = pullback_ideal(f, p);
        const Verdict v = back == src.all() ? Verdict::fail({"proper", {}, {}, "preimage is T"}) : is_prime(src, back);
        prime.record(v.holds, [&] { return pair + map + format_set(tgt, p) + ": " + verdict_text(v); });
      }
      for (ElementSet m : tgt_max) {
        const ElementSet back = pullback_ideal(f, m);
        const bool ok = back != src.all() && is_maximal(src, back, src_ideals).holds;
        maximal.record(ok, [&] { return pair + map + format_set(tgt, m) + " pulls back to " + format_set(src, back); });
      }
      const auto q = quotient_structure(src, kernel_congruence(f.element_map));
      first.record(canonical_form(q) == canonical_form(image_structure(f)), [&] { return pair + map; });
      // Preimage under f* of V(I) must be V(⟨f(I)⟩).
      for (ElementSet i : src_ideals) {
        ElementSet image;
        for (int a : i.elements()) image.insert(f.element_map[static_cast<std::size_t>(a)]);
        const ElementSet gen = generated_ideal(tgt, image);
        for (ElementSet p : tgt_primes) {
          const bool in_preimage = i.subset_of(pullback_ideal(f, p));
          cont.record(in_preimage == gen.subset_of(p), [&] {
            return pair + map + "I=" + format_set(src, i) + " P'=" + format_set(tgt, p);
          });
        }
      }
    }
    partial[idx] = {hom, prime, maximal, first, cont};
  });
  std::vector<CheckResult> out;
  for (const auto& p : partial) merge_checks(out, p);
  return out;
}

void merge_checks(std::vector<CheckResult>& a, const std::vector<CheckResult>& b, const std::string& label) {
  for (const auto& c : b) {
    auto it = std::find_if(a.begin(), a.end(), [&](const CheckResult& x) { return x.id == c.id; });
    if (it == a.end()) {
      CheckResult fresh(c.id, c.statement, c.kind);
      a.push_back(fresh);
      it = a.end() - 1;
    }
    it->cases += c.cases;
    it->failures += c.failures;
    it->holds = it->holds && c.holds;
    for (const auto& w : c.witnesses)
      if (it->witnesses.size() < kMaxWitnesses) it->witnesses.push_back(label.empty() ? w : label + ": " + w);
  }
}

bool all_asserted_hold(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.kind == CheckKind::reported || c.holds; });
}

}  // namespace tgs
