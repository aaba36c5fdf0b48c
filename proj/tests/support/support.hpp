#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "skewcat/skewcat.hpp"

namespace skew::testing {

// Every bracketing of the leaf sequence, in a fixed order.
std::vector<Formula> bracketings(const std::vector<Formula>& leaves);

// Formulas with at most `max_atoms` atom occurrences drawn from `atoms` and
// at most `max_units` units, every bracketing.
std::vector<Formula> corpus(int max_atoms, int max_units,
                            const std::vector<std::string>& atoms = {"X", "Y"});

// Atom names read off the printed formula; independent of frontier().
std::vector<std::string> printed_atoms(const Formula& f);

// Unfocused derivability by brute-force backward search over the rules of
// the sequent calculus, memoized on the printed sequent.
class DerivabilityOracle {
 public:
  explicit DerivabilityOracle(const Flags& flags) : fl_(flags) {}
  bool derivable(const Sequent& s);

  // Premise lists of every rule instance with conclusion `s`; each entry is
  // paired with a builder for the derivation.
  struct Step {
    std::vector<Sequent> premises;
    std::function<SeqDeriv(const std::vector<SeqDeriv>&)> build;
  };
  std::vector<Step> steps(const Sequent& s) const;

  // All unfocused derivations (small sequents only).
  std::vector<SeqDeriv> enumerate(const Sequent& s, std::size_t limit = 100000);

 private:
  Flags fl_;
  std::map<std::string, bool> memo_;
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return pick(0, 1) == 1; }
  std::mt19937_64& rng() { return rng_; }

  Formula atom();
  Formula formula(int max_leaves);
  Formula bracket(const std::vector<Formula>& leaves);
  // Leaves: atoms with units sprinkled in.
  std::vector<Formula> leaves(int max_atoms, int max_units);

  // Well-typed map out of `src` with at most `max_size` nodes.
  CatDeriv cat(const Formula& src, int max_size, const Flags& flags);

  // Derivable sequent with the given shape budget (found by rejection).
  Sequent derivable_sequent(const Flags& flags, DerivabilityOracle& oracle, int max_atoms = 3,
                            int max_units = 2);
  // Random derivation of a derivable sequent.
  SeqDeriv seq(const Sequent& s, const Flags& flags, DerivabilityOracle& oracle);
  SeqDeriv seq(const Flags& flags, DerivabilityOracle& oracle, int max_atoms = 3,
               int max_units = 2);

 private:
  std::mt19937_64 rng_;
};

}  // namespace skew::testing
