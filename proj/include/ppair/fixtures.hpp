#pragma once

// Bundled regression fixtures (compiled in from data/*.csv).

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace ppair::fixtures {

/// One printed row of the sieve table: q, m, e, s, delta, Delta, LHS, RHS.
struct Table1Row {
  std::uint64_t q = 0;
  unsigned m = 0;
  std::uint64_t e = 0;
  unsigned s = 0;
  double delta = 0;
  double Delta = 0;
  double lhs = 0;
  double rhs = 0;
};

/// The exceptional list is announced as having this many pairs.
inline constexpr std::size_t kAnnouncedExceptionalCount = 162;

std::vector<Table1Row> parse_table1(std::string_view csv);
std::vector<std::pair<std::uint64_t, unsigned>> parse_pairs(std::string_view csv);

const std::vector<Table1Row>& table1();
const std::vector<std::pair<std::uint64_t, unsigned>>& exceptional_pairs();

}  // namespace ppair::fixtures
