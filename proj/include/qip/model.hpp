// Instance data model for quantified integer programs with polyhedral
// uncertainty: variable blocks with alternating quantifiers, an existential
// constraint system A@x <= b@ deciding win/loss, and a universal constraint
// system restricting the universal player's moves (zero coefficients on
// existential variables, so universal legality depends on universal
// variables only).
#pragma once

#include "qip/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qip {

enum class Quantifier : std::uint8_t { Exists, Forall };

struct RowTerm {
  int var = 0;
  Rat coeff{0};
  bool operator==(const RowTerm&) const = default;
};

// One row "sum coeff*x <= rhs". Terms sorted by variable, no zeros, no dups.
struct SparseRow {
  std::vector<RowTerm> terms;
  Rat rhs{0};
  bool operator==(const SparseRow&) const = default;
};

struct Block {
  Quantifier quant = Quantifier::Exists;
  int first = 0;
  int size = 0;  // zero only allowed for a trailing vacuous existential block
  bool operator==(const Block&) const = default;
};

struct QipInstance {
  int num_vars = 0;
  std::vector<Rat> objective;          // length num_vars
  std::vector<SparseRow> exist_rows;   // A@ x <= b@ (existential system)
  std::vector<SparseRow> univ_rows;    // universal system
  std::vector<long long> lower, upper;
  std::vector<Quantifier> quantifiers; // per variable, consistent with blocks
  std::vector<Block> blocks;

  bool is_binary() const;
  std::vector<int> universal_vars() const;  // ascending variable order
  int universal_count() const;
  int block_of(int var) const;

  bool operator==(const QipInstance&) const = default;
};

struct Play {
  std::vector<long long> values;
  bool operator==(const Play&) const = default;
};

// Payoff of a completed play. Loss (existential system violated) compares
// greater than every finite payoff: the existential player minimizes.
struct Payoff {
  bool loss = false;
  Rat value{0};

  static Payoff Loss() { return Payoff{true, Rat(0)}; }
  static Payoff Finite(const Rat& v) { return Payoff{false, v}; }

  friend bool operator==(const Payoff& a, const Payoff& b) {
    return a.loss == b.loss && (a.loss || a.value == b.value);
  }
  friend bool operator<(const Payoff& a, const Payoff& b) {
    if (a.loss) return false;
    if (b.loss) return true;
    return a.value < b.value;
  }
};

// Partial assignment over all variables; nullopt = unassigned.
using PartialAssignment = std::vector<std::optional<long long>>;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Structural validation. Empty report iff all instance invariants hold,
// including nonemptiness of the uncertainty set.
std::vector<std::string> validate_instance(const QipInstance& inst);

Payoff evaluate_play(const QipInstance& inst, const Play& play);

// True iff assigning value to the universal variable var, on top of the
// given partial assignment, leaves some integer completion of the remaining
// universal variables that satisfies the whole universal system.
bool is_legal_universal(const QipInstance& inst, const PartialAssignment& partial,
                        int var, long long value);

// Underlying completion test (partial may already include var assignments).
bool universal_completion_exists(const QipInstance& inst,
                                 const PartialAssignment& partial);

// Complete universal assignment membership in the uncertainty set.
bool universal_assignment_feasible(const QipInstance& inst,
                                   const std::vector<long long>& universal_values);

QipInstance parse_instance(const std::string& text);
std::string write_instance(const QipInstance& inst);

}  // namespace qip
