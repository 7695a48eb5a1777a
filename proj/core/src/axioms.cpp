#include "tgs/axioms.hpp"

#include <sstream>

namespace tgs {

std::string describe(const Witness& w) {
  std::ostringstream out;
  out << w.law << " at (";
  for (std::size_t i = 0; i < w.elements.size(); ++i) out << (i ? "," : "") << w.elements[i];
  if (!w.params.empty()) {
    out << " | ";
    for (std::size_t i = 0; i < w.params.size(); ++i) out << (i ? "," : "") << w.params[i];
  }
  out << ")";
  if (!w.detail.empty()) out << ": " << w.detail;
  return out.str();
}

const Verdict* AxiomReport::first_failure() const {
  for (const Verdict* v : {&t1, &t2, &t3, &t4}) {
    if (!v->holds) return v;
  }
  if (commutativity_checked && !commutativity.holds) return &commutativity;
  return nullptr;
}

namespace {

std::string mismatch(int lhs, int rhs) {
  return std::to_string(lhs) + " != " + std::to_string(rhs);
}

}  // namespace

Verdict check_t1(const GammaStructure& s) {
  const int n = s.order();
  for (int a = 0; a < n; ++a) {
    if (s.add(0, a) != a || s.add(a, 0) != a)
      return Verdict::fail({"T1 identity", {a}, {}, "0 + a = " + std::to_string(s.add(0, a)) +
                                                       ", a + 0 = " + std::to_string(s.add(a, 0))});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (s.add(a, b) != s.add(b, a))
        return Verdict::fail({"T1 commutativity", {a, b}, {}, mismatch(s.add(a, b), s.add(b, a))});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int lhs = s.add(s.add(a, b), c);
        const int rhs = s.add(a, s.add(b, c));
        if (lhs != rhs)
          return Verdict::fail({"T1 associativity", {a, b, c}, {}, mismatch(lhs, rhs)});
      }
  return Verdict::pass();
}

Verdict check_t2(const GammaStructure& s) {
  const int n = s.order();
  const int m = s.gamma_size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int al = 0; al < m; ++al)
              for (int be = 0; be < m; ++be)
                for (int ga = 0; ga < m; ++ga)
                  for (int de = 0; de < m; ++de) {
                    const int lhs = s.mul(s.mul(a, al, b, be, c), ga, d, de, e);
                    const int rhs = s.mul(a, al, b, be, s.mul(c, ga, d, de, e));
                    if (lhs != rhs)
                      return Verdict::fail(
                          {"T2 associativity", {a, b, c, d, e}, {al, be, ga, de}, mismatch(lhs, rhs)});
                  }
  return Verdict::pass();
}

Verdict check_t3(const GammaStructure& s) {
  const int n = s.order();
  const int m = s.gamma_size();
  for (int pos = 0; pos < 3; ++pos)
    for (int x = 0; x < n; ++x)
      for (int x2 = 0; x2 < n; ++x2)
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v)
            for (int al = 0; al < m; ++al)
              for (int be = 0; be < m; ++be) {
                auto eval = [&](int slot) {
                  switch (pos) {
                    case 0: return s.mul(slot, al, u, be, v);
                    case 1: return s.mul(u, al, slot, be, v);
                    default: return s.mul(u, al, v, be, slot);
                  }
                };
                const int lhs = eval(s.add(x, x2));
                const int rhs = s.add(eval(x), eval(x2));
                if (lhs != rhs)
                  return Verdict::fail({"T3 distributivity (argument " + std::to_string(pos + 1) + ")",
                                        {pos, x, x2, u, v},
                                        {al, be},
                                        mismatch(lhs, rhs)});
              }
  return Verdict::pass();
}

Verdict check_t4(const GammaStructure& s) {
  const int n = s.order();
  const int m = s.gamma_size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a != 0 && b != 0 && c != 0) continue;
        for (int al = 0; al < m; ++al)
          for (int be = 0; be < m; ++be) {
            const int v = s.mul(a, al, b, be, c);
            if (v != 0)
              return Verdict::fail({"T4 absorbing zero", {a, b, c}, {al, be}, "product = " + std::to_string(v)});
          }
      }
  return Verdict::pass();
}

Verdict check_commutativity(const GammaStructure& s) {
  const int n = s.order();
  const int m = s.gamma_size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int al = 0; al < m; ++al)
          for (int be = 0; be < m; ++be) {
            const int v = s.mul(a, al, b, be, c);
            const int swapped_front = s.mul(b, be, a, al, c);
            if (v != swapped_front)
              return Verdict::fail({"commutativity a_al b_be c = b_be a_al c", {a, b, c}, {al, be},
                                    mismatch(v, swapped_front)});
            const int swapped_ends = s.mul(c, al, b, be, a);
            if (v != swapped_ends)
              return Verdict::fail({"commutativity a_al b_be c = c_al b_be a", {a, b, c}, {al, be},
                                    mismatch(v, swapped_ends)});
          }
  return Verdict::pass();
}

AxiomReport verify_axioms(const GammaStructure& s, bool require_commutative) {
  AxiomReport r;
  r.t1 = check_t1(s);
  r.t2 = check_t2(s);
  r.t3 = check_t3(s);
  r.t4 = check_t4(s);
  r.commutativity_checked = require_commutative;
  if (require_commutative) r.commutativity = check_commutativity(s);
  return r;
}

}  // namespace tgs
