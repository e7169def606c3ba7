#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace somix {

// Dominant-weight label (a_1, ..., a_n) of an irreducible representation of
// SO(2n+1). Valid labels satisfy 0 <= a_1 <= ... <= a_n; (0^n) is the trivial
// representation and (0^{n-1}, 1) the standard one.
//
// The struct itself does not enforce validity so that validate_odd can be a
// total predicate; every operation that needs a valid label checks it.
struct OddLabel {
  std::vector<int> parts;

  int n() const { return static_cast<int>(parts.size()); }
  int top() const { return parts.empty() ? 0 : parts.back(); }
  long long total() const;
  bool is_trivial() const;

  // L_q = 2 a_q + 2q - 1, i.e. twice the half-integer shift a_q + q - 1/2.
  // Strictly increasing positive odd integers for a valid label.
  std::vector<long long> doubled_shifts() const;

  // "0,1,3"
  std::string to_string() const;
  // Inverse of to_string; throws DomainError on malformed text. Validity
  // (monotonicity) is not checked here.
  static OddLabel parse(std::string_view text);
  static OddLabel trivial(int n);

  friend auto operator<=>(const OddLabel&, const OddLabel&) = default;
  friend bool operator==(const OddLabel&, const OddLabel&) = default;
};

// Label (b_1, ..., b_n) of an irreducible representation of SO(2n):
// |b_1| <= b_2 <= ... <= b_n. Only produced internally by branching.
struct EvenLabel {
  std::vector<int> parts;

  int n() const { return static_cast<int>(parts.size()); }
  std::string to_string() const;

  friend auto operator<=>(const EvenLabel&, const EvenLabel&) = default;
  friend bool operator==(const EvenLabel&, const EvenLabel&) = default;
};

// Finite truncation of the SO(2n+1) dual: sum a_q <= max_total, a_n <= max_top.
struct LabelBudget {
  int n = 1;
  int max_total = 0;
  int max_top = 0;
};

bool validate_odd(const OddLabel& label);
bool validate_even(const EvenLabel& label);
bool validate_budget(const LabelBudget& budget);

// Throws DomainError naming the label if validate_odd fails.
void require_valid(const OddLabel& label);

// Every valid label inside the budget, lexicographically ordered, (0^n) first.
std::vector<OddLabel> enumerate_odd(const LabelBudget& budget);

}  // namespace somix
