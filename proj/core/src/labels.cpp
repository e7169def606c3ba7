#include "somix/labels.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "somix/errors.hpp"

namespace somix {

namespace {

std::string join(const std::vector<int>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

// Fills parts[q..n) with nondecreasing values >= floor, honoring both caps.
void extend(std::vector<int>& parts, std::size_t q, int floor, long long remaining,
            int max_top, std::vector<OddLabel>& out) {
  if (q == parts.size()) {
    out.push_back(OddLabel{parts});
    return;
  }
  const long long slots = static_cast<long long>(parts.size() - q);
  for (int v = floor; v <= max_top && static_cast<long long>(v) * slots <= remaining; ++v) {
    parts[q] = v;
    extend(parts, q + 1, v, remaining - v, max_top, out);
  }
}

}  // namespace

long long OddLabel::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0LL);
}

bool OddLabel::is_trivial() const {
  for (int a : parts)
    if (a != 0) return false;
  return true;
}

std::vector<long long> OddLabel::doubled_shifts() const {
  std::vector<long long> shifts(parts.size());
  for (std::size_t q = 0; q < parts.size(); ++q)
    shifts[q] = 2LL * parts[q] + 2LL * static_cast<long long>(q + 1) - 1;
  return shifts;
}

std::string OddLabel::to_string() const { return join(parts); }

std::string EvenLabel::to_string() const { return join(parts); }

OddLabel OddLabel::parse(std::string_view text) {
  OddLabel label;
  if (text.empty()) throw DomainError("empty label");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
      throw DomainError("malformed label '" + std::string(text) + "'");
    label.parts.push_back(value);
    pos = comma + 1;
  }
  return label;
}

OddLabel OddLabel::trivial(int n) {
  if (n < 1) throw DomainError("label rank must be positive");
  return OddLabel{std::vector<int>(static_cast<std::size_t>(n), 0)};
}

bool validate_odd(const OddLabel& label) {
  if (label.parts.empty() || label.parts.front() < 0) return false;
  for (std::size_t q = 1; q < label.parts.size(); ++q)
    if (label.parts[q] < label.parts[q - 1]) return false;
  return true;
}

bool validate_even(const EvenLabel& label) {
  if (label.parts.empty()) return false;
  if (label.parts.size() == 1) return true;  // SO(2): any integer
  if (std::abs(label.parts[0]) > label.parts[1]) return false;
  for (std::size_t q = 2; q < label.parts.size(); ++q)
    if (label.parts[q] < label.parts[q - 1]) return false;
  return true;
}

bool validate_budget(const LabelBudget& budget) {
  return budget.n >= 1 && budget.max_total >= 0 && budget.max_top >= 0;
}

void require_valid(const OddLabel& label) {
  if (!validate_odd(label))
    throw DomainError("invalid SO(2n+1) label (" + label.to_string() +
                      "): entries must be nonnegative and nondecreasing");
}

std::vector<OddLabel> enumerate_odd(const LabelBudget& budget) {
  if (!validate_budget(budget)) throw DomainError("invalid label budget");
  std::vector<OddLabel> out;
  std::vector<int> parts(static_cast<std::size_t>(budget.n), 0);
  extend(parts, 0, 0, budget.max_total, budget.max_top, out);
  return out;
}

}  // namespace somix
