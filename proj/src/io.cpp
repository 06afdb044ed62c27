#include "patex/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace patex {

namespace {

// Reads the next non-blank line, with trailing CR/whitespace stripped.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
      line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

std::size_t parse_size(const std::string& t) {
  std::size_t pos = 0;
  std::size_t v = 0;
  try {
    v = std::stoull(t, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected a non-negative integer, got '" + t + "'");
  }
  require(pos == t.size(), "trailing junk in integer '" + t + "'");
  return v;
}

struct PointFile {
  Shape shape;
  std::vector<Coord> ones;
};

PointFile parse_point_file(std::istream& in, const std::string& magic) {
  std::string line;
  require(next_line(in, line), "empty input");
  require(line == magic + " v1", "expected header '" + magic + " v1'");

  require(next_line(in, line), "missing 'dim' line");
  auto t = tokens_of(line);
  require(t.size() == 2 && t[0] == "dim", "expected 'dim <d>'");
  const std::size_t d = parse_size(t[1]);
  require(d >= 1, "dim must be at least 1");

  require(next_line(in, line), "missing 'shape' line");
  t = tokens_of(line);
  require(t.size() == d + 1 && t[0] == "shape", "expected 'shape' with one length per axis");
  PointFile f;
  for (std::size_t i = 1; i < t.size(); ++i) f.shape.push_back(parse_size(t[i]));

  require(next_line(in, line), "missing body ('ones' or 'dense')");
  if (line == "ones") {
    while (next_line(in, line)) {
      t = tokens_of(line);
      require(t.size() == d, "one-entry line must have one coordinate per axis");
      Coord c;
      for (auto& s : t) c.push_back(parse_size(s));
      f.ones.push_back(std::move(c));
    }
    return f;
  }
  if (line == "dense") {
    require(d == 2, "dense body requires dim 2");
    std::size_t r = 0;
    while (next_line(in, line)) {
      ++r;
      require(r <= f.shape[0], "more dense rows than shape allows");
      require(line.size() == f.shape[1], "dense row width mismatch");
      for (std::size_t j = 0; j < line.size(); ++j) {
        require(line[j] == '0' || line[j] == '1', "dense rows use only 0 and 1");
        if (line[j] == '1') f.ones.push_back({r, j + 1});
      }
    }
    require(r == f.shape[0], "fewer dense rows than shape requires");
    return f;
  }
  throw std::invalid_argument("expected body marker 'ones' or 'dense'");
}

std::string serialize_points(const std::string& magic, const Shape& shape,
                             const std::vector<Coord>& ones) {
  std::string out = magic + " v1\n";
  out += "dim " + std::to_string(dim(shape)) + "\n";
  out += "shape";
  for (std::size_t e : shape) out += " " + std::to_string(e);
  out += "\nones\n";
  for (const Coord& c : ones) {
    for (std::size_t i = 0; i < c.size(); ++i)
      out += (i ? " " : "") + std::to_string(c[i]);
    out += "\n";
  }
  return out;
}

}  // namespace

Pattern parse_pattern(std::istream& in) {
  auto f = parse_point_file(in, "pat");
  return Pattern(f.shape, f.ones);
}

BitMatrix parse_matrix(std::istream& in) {
  auto f = parse_point_file(in, "mat");
  BitMatrix m(f.shape);
  for (const Coord& c : f.ones) {
    require(in_bounds(c, f.shape), "one out of bounds");
    m.set(c, true);
  }
  return m;
}

std::string serialize_pattern(const Pattern& p) {
  return serialize_points("pat", p.shape(), p.ones());
}

std::string serialize_matrix(const BitMatrix& m) {
  return serialize_points("mat", m.shape(), m.ones());
}

std::string serialize_matrix_dense(const BitMatrix& m) {
  require(dim(m.shape()) == 2, "dense rendering requires dim 2");
  std::string out = "mat v1\n";
  out += "dim 2\n";
  out += "shape " + std::to_string(m.shape()[0]) + " " +
         std::to_string(m.shape()[1]) + "\n";
  out += "dense\n";
  for (std::size_t i = 1; i <= m.shape()[0]; ++i) {
    for (std::size_t j = 1; j <= m.shape()[1]; ++j)
      out += m.get({i, j}) ? '1' : '0';
    out += "\n";
  }
  return out;
}

namespace {
template <typename T, typename F>
T load_file(const std::string& path, F parse) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open file: " + path);
  try {
    return parse(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}
}  // namespace

Pattern load_pattern_file(const std::string& path) {
  return load_file<Pattern>(path, [](std::istream& in) { return parse_pattern(in); });
}

BitMatrix load_matrix_file(const std::string& path) {
  return load_file<BitMatrix>(path, [](std::istream& in) { return parse_matrix(in); });
}

namespace {
void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  require(static_cast<bool>(out), "cannot open file for write: " + path);
  out << text;
}
}  // namespace

void save_pattern_file(const std::string& path, const Pattern& p) {
  save_text(path, serialize_pattern(p));
}

void save_matrix_file(const std::string& path, const BitMatrix& m) {
  save_text(path, serialize_matrix(m));
}

}  // namespace patex
