#include "ivlab/lab/corpus.hpp"

namespace ivlab::lab {

namespace {

struct Row {
  const char* coefficients;  // ascending
  const char* bracket;
  const char* zero;
  const char* start;
};

constexpr Row kQuadraticRows[] = {
    {"-4, 0, 1", "[1.3, 2.6]", "2", "2.02"},
    {"-6, 1, 1", "[1.7, 2.2]", "2", "2.02"},
    {"-2, -1, 1", "[1.55, 2.4]", "2", "2.02"},
    {"3, -4, 1", "[2.4, 3.3]", "3", "3.02"},
    {"-10, 3, 1", "[1.2, 2.9]", "2", "2.02"},
    {"-3, -2, 1", "[2.2, 3.9]", "3", "3.02"},
    {"-2, -3, 2", "[1.4, 2.7]", "2", "2.02"},
    {"-3, 1, 2", "[0.6, 1.7]", "1", "1.02"},
    {"-2, 5, 3", "[0.1, 0.7]", "1/3", "0.35"},
    {"-1, 0, 4", "[0.3, 1.1]", "1/2", "0.52"},
    {"6, -5, 1", "[1.3, 2.4]", "2", "2.02"},
    {"-2.25, 0, 1", "[1.1, 2.3]", "1.5", "1.52"},
    {"-7, 6, 1", "[0.4, 1.45]", "1", "1.02"},
    {"-2, -3, 5", "[0.7, 1.6]", "1", "1.02"},
    {"16, -10, 1", "[0.9, 3.4]", "2", "2.02"},
    {"-4, 0, 9", "[0.35, 1.2]", "2/3", "0.69"},
    {"-12, 1, 1", "[2.3, 3.8]", "3", "3.02"},
    {"-1, -1, 6", "[0.3, 0.95]", "1/2", "0.52"},
    {"-15, 2, 1", "[2.3, 3.7]", "3", "3.02"},
    {"-5, -3, 2", "[1.9, 3.1]", "2.5", "2.52"},
};

constexpr Row kCubicRows[] = {
    {"-12, 0, 1, 1", "[1.6, 2.3]", "2", "2.02"},
    {"-8, 0, 0, 1", "[1.8, 2.1]", "2", "2.02"},
    {"-24, 18, -8, 6", "[0.95, 1.85]", "4/3", "1.35"},
    {"-3, -5, -4, 2", "[2.7, 3.4]", "3", "3.02"},
    {"-18, 9, -4, 4", "[0.7, 2.3]", "1.5", "1.52"},
    {"-15, 16, -14, 4", "[2.2, 2.7]", "2.5", "2.52"},
    {"-9, 9, -8, 2", "[2.2, 3.6]", "3", "3.02"},
    {"-6, 3, 7, 3", "[0.25, 1.35]", "2/3", "0.69"},
    {"-10, 1, 0, 1", "[1.4, 2.6]", "2", "2.02"},
    {"-12, 6, -2, 1", "[1.1, 2.3]", "2", "2.02"},
    {"-4, 6, -2, 3", "[0.45, 1.25]", "2/3", "0.69"},
    {"-18, 6, -2, 4", "[1, 2.1]", "1.5", "1.52"},
    {"-4, -1, -1, 3", "[1.15, 2.05]", "4/3", "1.35"},
    {"-6, -1, -2, 1", "[2.4, 3.5]", "3", "3.02"},
    {"-8, 8, 4, 3", "[0.35, 0.95]", "2/3", "0.69"},
    {"-24, 14, -5, 6", "[0.85, 1.55]", "4/3", "1.35"},
    {"-6, 3, 2, 1", "[0.5, 1.8]", "1", "1.02"},
    {"-6, 6, -1, 1", "[0.7, 1.4]", "1", "1.02"},
    {"-12, -1, 3, 2", "[1, 2.3]", "1.5", "1.52"},
    {"-10, 9, 7, 3", "[0.45, 1.55]", "2/3", "0.69"},
};

template <std::size_t N>
std::vector<CorpusEntry> build(const Row (&rows)[N]) {
  std::vector<CorpusEntry> out;
  for (const Row& row : rows) {
    const Polynomial p = Polynomial::parse(row.coefficients);
    out.push_back(CorpusEntry{p.to_string(), check_bracket(p, parse_interval(row.bracket)), parse_decimal(row.zero),
                              parse_decimal(row.start)});
  }
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& test_corpus() {
  static const std::vector<CorpusEntry> corpus = build(kQuadraticRows);
  return corpus;
}

const std::vector<CorpusEntry>& cubic_corpus() {
  static const std::vector<CorpusEntry> corpus = build(kCubicRows);
  return corpus;
}

std::vector<Rational> default_beta_grid() {
  std::vector<Rational> grid;
  for (int m = 0; m < 10; ++m) grid.push_back(Rational(-2) + ratio(m, 2));
  return grid;
}

}  // namespace ivlab::lab
