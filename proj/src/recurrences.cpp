#include "patex/recurrences.hpp"

#include <sstream>
#include <stdexcept>

#include "patex/shape.hpp"

namespace patex {

namespace {

void check_domain(std::size_t s, std::size_t j) {
  if (s < 1 || j < 2) throw std::domain_error("recurrence domain is s >= 1, j >= 2");
}

BigInt pow2(std::size_t e) { return BigInt(1) << e; }

}  // namespace

BigInt rec_R(std::size_t s, std::size_t j) {
  check_domain(s, j);
  if (s == 1) return 2;
  if (s == 2) return 3;
  if (j == 2) return pow2(s - 1) + 1;
  static std::map<std::pair<std::size_t, std::size_t>, BigInt> memo;
  auto key = std::make_pair(s, j);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  BigInt a = rec_R(s, j - 1), b = rec_R(s - 2, j), c = rec_R(s - 1, j);
  BigInt v = a * b + 2 * c - 3 * b - a + 2;
  memo.emplace(key, v);
  return v;
}

BigInt rec_D(std::size_t s, std::size_t j) {
  check_domain(s, j);
  if (s == 1) return 0;
  if (s == 2) return 2;
  if (j == 2) return pow2(s - 1) + pow2(s - 2) - 1;
  static std::map<std::pair<std::size_t, std::size_t>, BigInt> memo;
  auto key = std::make_pair(s, j);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  BigInt r = rec_R(s, j - 1);
  BigInt v = 2 * rec_D(s - 1, j) + (rec_D(s - 2, j) + 1) * (r - 3) + rec_D(s, j - 1) - r + 1;
  memo.emplace(key, v);
  return v;
}

RecurrenceTable RecurrenceTable::build(char kind, std::size_t max_s, std::size_t max_j) {
  require(kind == 'R' || kind == 'D', "kind must be R or D");
  require(max_s >= 1 && max_j >= 2, "table domain is s >= 1, j >= 2");
  RecurrenceTable t;
  t.kind = kind;
  for (std::size_t s = 1; s <= max_s; ++s)
    for (std::size_t j = 2; j <= max_j; ++j)
      t.values[{s, j}] = kind == 'R' ? rec_R(s, j) : rec_D(s, j);
  return t;
}

std::string RecurrenceTable::to_tsv() const {
  std::ostringstream out;
  out << "kind\ts\tj\tvalue\n";
  for (const auto& [sj, v] : values)
    out << kind << '\t' << sj.first << '\t' << sj.second << '\t' << v.str() << '\n';
  return out.str();
}

std::optional<BigInt> ack(std::size_t j, const BigInt& n, const BigInt& guard) {
  require(j >= 1, "hierarchy level must be >= 1");
  require(n >= 1, "argument must be >= 1");
  require(guard >= 2, "guard must be >= 2");
  if (j == 1) {
    BigInt v = 2 * n;
    if (v > guard) return std::nullopt;
    return v;
  }
  if (n == 1) return BigInt(2);
  // Each step at least doubles (a_k(x) >= 2x), so after n-1 steps the value
  // is >= 2^n; bail out without looping when that already beats the guard.
  if (n > msb(guard) + 1) return std::nullopt;
  std::size_t steps = static_cast<std::size_t>(n - 1);
  BigInt v = 2;
  for (std::size_t i = 0; i < steps; ++i) {
    auto nxt = ack(j - 1, v, guard);
    if (!nxt) return std::nullopt;
    v = *nxt;
  }
  return v;
}

BigInt alpha_level(std::size_t j, const BigInt& n) {
  require(j >= 1, "hierarchy level must be >= 1");
  require(n >= 1, "argument must be >= 1");
  if (n <= 2) return 1;             // a_j(1) = 2 >= n
  if (j == 1) return (n + 1) / 2;   // min k with 2k >= n
  for (std::size_t k = 1;; ++k) {
    auto v = ack(j, k, n - 1);  // exceeding n-1 means a_j(k) >= n
    if (!v) return k;
  }
}

std::size_t alpha(const BigInt& n) {
  require(n >= 1, "argument must be >= 1");
  for (std::size_t j = 1;; ++j)
    if (alpha_level(j, n) <= 3) return j;
}

BigInt formation_binom_bound(std::size_t m, std::size_t s) {
  require(m >= 1 && s >= 1, "arguments must be >= 1");
  if ((s + 1) / 2 > m) return 0;  // negative upper index
  std::size_t a = m - (s + 1) / 2, b = s / 2;
  if (b > a) return 0;
  BigInt v = 1;
  for (std::size_t i = 1; i <= b; ++i) v = v * BigInt(a - b + i) / BigInt(i);
  return v;
}

}  // namespace patex
