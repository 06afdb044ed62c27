#pragma once

#include <iosfwd>
#include <string>

#include "patex/bitmatrix.hpp"
#include "patex/pattern.hpp"

namespace patex {

// Text formats (version "v1").  A pattern file:
//
//   pat v1
//   dim 2
//   shape 3 3
//   ones
//   1 1
//   2 2
//
// A matrix file uses header "mat v1" and either an "ones" body as above or,
// for dim 2 only, a "dense" body of rows over {0,1}:
//
//   mat v1
//   dim 2
//   shape 2 3
//   dense
//   101
//   010
//
// Serialization always emits the sorted "ones" body, so parse-then-serialize
// is the identity on canonical files.  Blank lines and trailing whitespace
// are tolerated on input.

Pattern parse_pattern(std::istream& in);
BitMatrix parse_matrix(std::istream& in);

std::string serialize_pattern(const Pattern& p);
std::string serialize_matrix(const BitMatrix& m);
// Human-oriented dense rendering; dim 2 only.
std::string serialize_matrix_dense(const BitMatrix& m);

Pattern load_pattern_file(const std::string& path);
BitMatrix load_matrix_file(const std::string& path);
void save_pattern_file(const std::string& path, const Pattern& p);
void save_matrix_file(const std::string& path, const BitMatrix& m);

}  // namespace patex
