#include "patex/cache.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace patex {

std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string rle_encode_bits(const BitMatrix& m) {
  const std::size_t n = cell_count(m.shape());
  std::string out;
  std::size_t i = 0;
  while (i < n) {
    const bool v = m.get_index(i);
    std::size_t j = i + 1;
    while (j < n && m.get_index(j) == v) ++j;
    if (!out.empty()) out += ',';
    out += v ? '1' : '0';
    out += '*';
    out += std::to_string(j - i);
    i = j;
  }
  return out;
}

BitMatrix rle_decode_bits(const Shape& shape, const std::string& rle) {
  BitMatrix m(shape);
  const std::size_t n = cell_count(shape);
  std::size_t at = 0;
  std::stringstream ss(rle);
  std::string run;
  while (std::getline(ss, run, ',')) {
    const auto star = run.find('*');
    require(star != std::string::npos && star == 1, "malformed RLE run");
    require(run[0] == '0' || run[0] == '1', "malformed RLE bit");
    const bool v = run[0] == '1';
    const std::size_t len = std::stoull(run.substr(star + 1));
    require(len >= 1 && at + len <= n, "RLE length mismatch");
    if (v)
      for (std::size_t i = 0; i < len; ++i) m.set_index(at + i, true);
    at += len;
  }
  require(at == n, "RLE length mismatch");
  return m;
}

namespace {

using nlohmann::json;

json record_to_json(const CacheRecord& r) {
  json j;
  j["key"] = r.key;
  j["problem"] = r.problem;
  j["engine_version"] = r.engine_version;
  j["mode"] = r.mode;
  j["k"] = r.k;
  j["shape"] = r.shape;
  j["value"] = r.value;
  j["status"] = r.status;
  j["witness"] = r.witness_rle;
  j["nodes"] = r.nodes;
  j["elapsed"] = r.elapsed;
  return j;
}

bool record_from_json(const json& j, CacheRecord& r) {
  try {
    r.key = j.at("key").get<std::string>();
    r.problem = j.at("problem").get<std::string>();
    r.engine_version = j.at("engine_version").get<std::string>();
    r.mode = j.at("mode").get<std::string>();
    r.k = j.at("k").get<std::size_t>();
    r.shape = j.at("shape").get<Shape>();
    r.value = j.at("value").get<std::size_t>();
    r.status = j.at("status").get<std::string>();
    r.witness_rle = j.at("witness").get<std::string>();
    r.nodes = j.at("nodes").get<std::uint64_t>();
    r.elapsed = j.at("elapsed").get<double>();
  } catch (const json::exception&) {
    return false;
  }
  if (r.mode != "ex" && r.mode != "lx") return false;
  if (r.status != "exact" && r.status != "lower_bound") return false;
  if (r.shape.empty()) return false;
  for (std::size_t e : r.shape)
    if (e < 1) return false;
  return true;
}

std::vector<CacheRecord> read_all(const std::string& path, bool warn) {
  std::vector<CacheRecord> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    CacheRecord r;
    bool ok = false;
    auto j = json::parse(line, nullptr, false);
    if (!j.is_discarded()) ok = record_from_json(j, r);
    if (!ok) {
      if (warn)
        std::cerr << "cache: skipping malformed line " << lineno << " of "
                  << path << "\n";
      continue;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

void ResultCache::put(const std::string& problem, const std::string& mode,
                      std::size_t k, const ExtremalResult& res) {
  CacheRecord r;
  r.key = fnv1a64_hex(problem);
  r.problem = problem;
  r.engine_version = kEngineVersion;
  r.mode = mode;
  r.k = k;
  r.shape = res.witness.shape();
  r.value = res.value;
  r.status = to_string(res.status);
  r.witness_rle = rle_encode_bits(res.witness);
  r.nodes = res.nodes;
  r.elapsed = res.elapsed;
  std::ofstream out(path_, std::ios::app);
  require(static_cast<bool>(out), "cannot open cache file for append: " + path_);
  out << record_to_json(r).dump() << "\n";
}

std::optional<ExtremalResult> ResultCache::get(const std::string& problem) const {
  std::optional<CacheRecord> hit;
  for (auto& r : read_all(path_, /*warn=*/true)) {
    if (r.problem == problem && r.engine_version == kEngineVersion)
      hit = std::move(r);  // last record wins
  }
  if (!hit) return std::nullopt;
  ExtremalResult res;
  res.value = hit->value;
  res.status = hit->status == "exact" ? SearchStatus::exact : SearchStatus::lower_bound;
  res.witness = rle_decode_bits(hit->shape, hit->witness_rle);
  if (hit->mode == "lx") {
    res.letters = LetterAssignment{hit->k, {}};
    // Letters are reconstructed from the stripped witness: consecutive
    // k-blocks of ones within each row.
    std::vector<std::vector<Coord>> rows(row_count(hit->shape));
    for (const Coord& c : res.witness.ones())
      rows[row_index_of(c, hit->shape)].push_back(c);
    for (auto& ones : rows)
      for (std::size_t i = 0; i + hit->k <= ones.size(); i += hit->k)
        res.letters->letters.emplace_back(ones.begin() + i,
                                          ones.begin() + i + hit->k);
  }
  res.nodes = hit->nodes;
  res.elapsed = hit->elapsed;
  return res;
}

std::vector<CacheRecord> ResultCache::list() const {
  return read_all(path_, /*warn=*/true);
}

std::size_t ResultCache::gc() {
  std::size_t total_lines = 0;
  {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) ++total_lines;
  }
  auto records = read_all(path_, /*warn=*/false);
  std::map<std::string, CacheRecord> keep;  // problem -> latest current-version record
  for (auto& r : records)
    if (r.engine_version == kEngineVersion) keep[r.problem] = std::move(r);
  const std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    require(static_cast<bool>(out), "cannot open cache file for rewrite: " + tmp);
    for (auto& [problem, r] : keep) out << record_to_json(r).dump() << "\n";
  }
  require(std::rename(tmp.c_str(), path_.c_str()) == 0, "cache rewrite failed");
  return total_lines - keep.size();
}

}  // namespace patex
