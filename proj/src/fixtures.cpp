#include "ppair/fixtures.hpp"

#include <sstream>
#include <string>

#include "ppair/error.hpp"

namespace ppair::fixtures {

namespace detail {
extern const std::string_view kTable1Csv;
extern const std::string_view kExceptionalCsv;
}  // namespace detail

namespace {

std::vector<std::vector<std::string>> parse_csv(std::string_view csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(csv)};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace

std::vector<Table1Row> parse_table1(std::string_view csv) {
  std::vector<Table1Row> out;
  for (const auto& f : parse_csv(csv)) {
    if (f.size() != 8) throw InputError("table1.csv: expected 8 columns");
    Table1Row r;
    r.q = std::stoull(f[0]);
    r.m = static_cast<unsigned>(std::stoul(f[1]));
    r.e = std::stoull(f[2]);
    r.s = static_cast<unsigned>(std::stoul(f[3]));
    r.delta = std::stod(f[4]);
    r.Delta = std::stod(f[5]);
    r.lhs = std::stod(f[6]);
    r.rhs = std::stod(f[7]);
    out.push_back(r);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> parse_pairs(std::string_view csv) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (const auto& f : parse_csv(csv)) {
    if (f.size() != 2) throw InputError("exceptional_pairs.csv: expected 2 columns");
    out.emplace_back(std::stoull(f[0]), static_cast<unsigned>(std::stoul(f[1])));
  }
  return out;
}

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = parse_table1(detail::kTable1Csv);
  return rows;
}

const std::vector<std::pair<std::uint64_t, unsigned>>& exceptional_pairs() {
  static const std::vector<std::pair<std::uint64_t, unsigned>> rows = parse_pairs(detail::kExceptionalCsv);
  return rows;
}

}  // namespace ppair::fixtures
