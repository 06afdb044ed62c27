#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "patex/search.hpp"

namespace patex {

// FNV-1a 64-bit digest, hex encoded; used as the short cache key.
std::string fnv1a64_hex(const std::string& data);

// Run-length encoding of the matrix bits in linear (lexicographic) cell
// order: comma-separated runs "bit*count", e.g. "0*5,1*2,0*9".
std::string rle_encode_bits(const BitMatrix& m);
BitMatrix rle_decode_bits(const Shape& shape, const std::string& rle);

struct CacheRecord {
  std::string key;      // digest of problem
  std::string problem;  // full canonical problem string (compared exactly on get)
  std::string engine_version;
  std::string mode;  // "ex" | "lx"
  std::size_t k = 1;
  Shape shape;
  std::size_t value = 0;
  std::string status;  // "exact" | "lower_bound"
  std::string witness_rle;
  std::uint64_t nodes = 0;
  double elapsed = 0;
};

// Append-only JSONL store of search results.  Lines that fail to parse are
// skipped with a warning (a torn trailing line from a crash is expected);
// lookups compare the full canonical problem string, never just the digest.
class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {}
  const std::string& path() const { return path_; }

  void put(const std::string& problem, const std::string& mode, std::size_t k,
           const ExtremalResult& res);
  std::optional<ExtremalResult> get(const std::string& problem) const;

  // All well-formed records in file order.
  std::vector<CacheRecord> list() const;

  // Rewrite the file keeping, per problem, the latest record with the current
  // engine version; returns the number of lines dropped.
  std::size_t gc();

 private:
  std::string path_;
};

}  // namespace patex
