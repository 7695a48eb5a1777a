#pragma once

#include "tgs/structure.hpp"
#include "tgs/verdict.hpp"

namespace tgs {

/// Per-law verdicts for one structure.
///
/// T1: (T,+) is a commutative monoid with identity 0. Witness tuples are
///     (a) for identity, (a,b) for commutativity, (a,b,c) for associativity.
/// T2: (a_α b_β c)_γ d_δ e = a_α b_β (c_γ d_δ e); tuple (a,b,c,d,e | α,β,γ,δ).
/// T3: additivity of each argument; tuple (position, x, x', u, v | α,β) where the
///     sum x + x' sits in the given position and u, v fill the other two.
/// T4: a zero argument forces a zero product; tuple (a,b,c | α,β).
/// Commutativity: a_α b_β c = b_β a_α c and a_α b_β c = c_α b_β a, as displayed.
struct AxiomReport {
  Verdict t1;
  Verdict t2;
  Verdict t3;
  Verdict t4;
  Verdict commutativity;
  bool commutativity_checked = false;

  /// T1–T4 hold, and commutativity too when it was requested.
  bool all_pass() const {
    return t1.holds && t2.holds && t3.holds && t4.holds &&
           (!commutativity_checked || commutativity.holds);
  }
  /// The first failing verdict in T1, T2, T3, T4, commutativity order.
  const Verdict* first_failure() const;
};

AxiomReport verify_axioms(const GammaStructure& s, bool require_commutative = true);

Verdict check_t1(const GammaStructure& s);
Verdict check_t2(const GammaStructure& s);
Verdict check_t3(const GammaStructure& s);
Verdict check_t4(const GammaStructure& s);
Verdict check_commutativity(const GammaStructure& s);

}  // namespace tgs
