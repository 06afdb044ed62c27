#include "patex/family.hpp"

#include <algorithm>
#include <sstream>

namespace patex {

namespace {

std::string pattern_key(const Pattern& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.dim(); ++i) out << (i ? "x" : "") << p.shape()[i];
  out << ":";
  for (const Coord& c : p.ones()) out << coord_to_string(c);
  return out.str();
}

}  // namespace

std::size_t ForbiddenFamily::host_dim() const {
  require(!patterns.empty() || !formations.empty() || !doubled.empty(),
          "forbidden family must be nonempty");
  std::size_t d = 0;
  auto meet = [&](std::size_t dm) {
    require(d == 0 || d == dm, "family members disagree on host dimensionality");
    d = dm;
  };
  for (const Pattern& p : patterns) {
    require(p.weight() >= 1, "forbidden patterns must have at least one one");
    meet(p.dim());
  }
  for (const FormationSpec& f : formations) meet(f.base.dim() + 1);
  for (std::size_t i = 0; i < doubled.size(); ++i) meet(2);
  return d;
}

std::string ForbiddenFamily::canonical_key() const {
  std::vector<std::string> parts;
  for (const Pattern& p : patterns) parts.push_back("pat{" + pattern_key(p) + "}");
  std::sort(parts.begin(), parts.end());
  std::vector<std::string> fparts;
  for (const FormationSpec& f : formations) {
    std::ostringstream out;
    out << "form{" << pattern_key(f.base) << "|s=" << f.s << "}";
    fparts.push_back(out.str());
  }
  std::sort(fparts.begin(), fparts.end());
  std::vector<std::string> dparts;
  for (const DoubledSpec& dd : doubled) {
    std::ostringstream out;
    out << "dbl{r=" << dd.r << ",s=" << dd.s << "}";
    dparts.push_back(out.str());
  }
  std::sort(dparts.begin(), dparts.end());
  std::ostringstream out;
  for (const auto& s : parts) out << s << ";";
  for (const auto& s : fparts) out << s << ";";
  for (const auto& s : dparts) out << s << ";";
  return out.str();
}

bool validate_witness(const BitMatrix& M, const ForbiddenFamily& F) {
  for (const Pattern& p : F.patterns)
    if (contains(M, p)) return false;
  for (const FormationSpec& f : F.formations)
    if (contains_formation(M, f)) return false;
  for (const DoubledSpec& d : F.doubled)
    if (contains_doubled_formation(M, d)) return false;
  return true;
}

}  // namespace patex
