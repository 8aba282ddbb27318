#pragma once

// Corpora of 20 bracketed polynomials with known rational zeros, our own
// (artifact-chosen). On every bracket f' and f'' are sign-definite, and the
// brackets are asymmetric around the zero so that no early midpoint lands
// exactly on it.
//
// test_corpus() holds quadratics. Exact five-step KingLike runs grow the
// endpoint size about 7x per step on quadratics and 17x to 29x on cubics,
// which puts a cubic cell at many minutes and the corpus at hours. The price
// is that on a quadratic (f''' = 0) the scalar King error constant
// (1 + 2 beta) c2^3 - c2 c3 vanishes at beta = -1/2, where the order is 5.
//
// cubic_corpus() holds generic cubics, where that constant never vanishes on
// the beta grid. It is cheap for everything except exact KingLike runs.

#include <string>
#include <vector>

#include "ivlab/bracket.hpp"

namespace ivlab::lab {

struct CorpusEntry {
  std::string name;
  BracketedFunction f;
  Rational zero;
  Rational scalar_start;  // start point for the scalar methods, about 0.02 above the zero
};

const std::vector<CorpusEntry>& test_corpus();
const std::vector<CorpusEntry>& cubic_corpus();

/// beta = -2 + 0.5 m, m = 0..9.
std::vector<Rational> default_beta_grid();

}  // namespace ivlab::lab
