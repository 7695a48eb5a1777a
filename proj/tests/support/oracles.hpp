#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "tgs/element_set.hpp"
#include "tgs/structure.hpp"

// Deliberately naive reference implementations for differential tests.
namespace oracle {

struct Axioms {
  bool t1 = true, t2 = true, t3 = true, t4 = true, commutative = true;
  bool all() const { return t1 && t2 && t3 && t4 && commutative; }
};

Axioms axioms(const tgs::GammaStructure& s);

/// Every addition table with identity 0 that is commutative and associative, unreduced.
std::vector<std::vector<int>> raw_additive_tables(int n);

/// Canonical-form bytes of every structure (m = 1) found by filling all
/// ternary cells with no zero argument and filtering with axioms().
std::set<std::string> structure_forms(int n);

bool is_ideal(const tgs::GammaStructure& s, tgs::ElementSet set);
std::vector<tgs::ElementSet> ideals(const tgs::GammaStructure& s);
/// Intersection of every ideal containing seed ∪ {0}.
tgs::ElementSet generated_ideal(const tgs::GammaStructure& s, tgs::ElementSet seed);
bool is_prime(const tgs::GammaStructure& s, tgs::ElementSet ideal);

/// All compatible partitions as normalized label vectors, by brute force over set partitions.
std::vector<std::vector<int>> congruences(const tgs::GammaStructure& s);

/// Random tables of the right shape; corrupt() overwrites `count` random cells.
tgs::GammaStructure random_structure(std::mt19937& rng, int n, int m);
tgs::GammaStructure corrupt(const tgs::GammaStructure& s, std::mt19937& rng, int count);
std::vector<int> random_zero_fixing_permutation(std::mt19937& rng, int n);

}  // namespace oracle
