// Python bindings: a thin film over the C++ API.  Arbitrary-precision values
// cross the boundary as decimal strings; the patex package converts them to
// Python ints, and report JSON is returned as text for json.loads.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "patex/cache.hpp"
#include "patex/contains.hpp"
#include "patex/formations.hpp"
#include "patex/io.hpp"
#include "patex/pattern.hpp"
#include "patex/recurrences.hpp"
#include "patex/search.hpp"
#include "patex/verify.hpp"

namespace py = pybind11;
using namespace patex;

namespace {

using FormationArg = std::pair<Pattern, std::size_t>;
using DoubledArg = std::pair<std::size_t, std::size_t>;
using Range = std::pair<std::size_t, std::size_t>;

ForbiddenFamily build_family(const std::vector<Pattern>& patterns,
                             const std::vector<FormationArg>& formations,
                             const std::vector<DoubledArg>& doubled) {
  ForbiddenFamily F;
  F.patterns = patterns;
  for (const auto& [base, s] : formations) F.formations.emplace_back(base, s);
  for (const auto& [r, s] : doubled) F.doubled.emplace_back(r, s);
  return F;
}

GridRange range_of(const Range& r) { return GridRange(r.first, r.second); }

py::dict result_dict(const ExtremalResult& res) {
  py::dict d;
  d["value"] = res.value;
  d["status"] = std::string(to_string(res.status));
  d["witness"] = res.witness;
  if (res.letters)
    d["letters"] = res.letters->letters;
  else
    d["letters"] = py::none();
  d["nodes"] = res.nodes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_patex, m) {
  m.doc() = "exact extremal-function toolkit for forbidden patterns in 0-1 matrices";
  m.attr("engine_version") = kEngineVersion;

  py::register_exception<BudgetExhausted>(m, "BudgetExhausted");
  py::register_exception<CapExceeded>(m, "CapExceeded");

  py::class_<Pattern>(m, "Pattern")
      .def(py::init<Shape, std::vector<Coord>>(), py::arg("shape"), py::arg("ones"))
      .def_static("from_rows", &pattern_from_rows, py::arg("rows"))
      .def_property_readonly("shape", [](const Pattern& p) { return p.shape(); })
      .def_property_readonly("dim", &Pattern::dim)
      .def_property_readonly("ones", [](const Pattern& p) { return p.ones(); })
      .def_property_readonly("weight", &Pattern::weight)
      .def("is_light", &Pattern::is_light)
      .def("normalize", &Pattern::normalize)
      .def("project_first", &Pattern::project_first)
      .def("transpose_dims",
           py::overload_cast<std::size_t, std::size_t>(&Pattern::transpose_dims, py::const_),
           py::arg("a"), py::arg("b"))
      .def("transpose_dims",
           py::overload_cast<const std::vector<std::size_t>&>(&Pattern::transpose_dims,
                                                              py::const_),
           py::arg("perm"))
      .def("serialize", [](const Pattern& p) { return serialize_pattern(p); })
      .def("__eq__", [](const Pattern& a, const Pattern& b) { return a == b; })
      .def("__repr__", [](const Pattern& p) { return serialize_pattern(p); });

  py::class_<BitMatrix>(m, "BitMatrix")
      .def(py::init<Shape>(), py::arg("shape"))
      .def_property_readonly("shape", [](const BitMatrix& m_) { return m_.shape(); })
      .def("set", [](BitMatrix& m_, const Coord& c, bool v) { m_.set(c, v); },
           py::arg("coord"), py::arg("value") = true)
      .def("get", [](const BitMatrix& m_, const Coord& c) { return m_.get(c); },
           py::arg("coord"))
      .def("ones", [](const BitMatrix& m_) { return m_.ones(); })
      .def("count_ones", &BitMatrix::count_ones)
      .def("to_pattern", &BitMatrix::to_pattern)
      .def("or_project_first", &BitMatrix::or_project_first)
      .def("insert_zero_hyperplane", &BitMatrix::insert_zero_hyperplane, py::arg("axis"),
           py::arg("pos"))
      .def("transpose_dims",
           py::overload_cast<std::size_t, std::size_t>(&BitMatrix::transpose_dims, py::const_),
           py::arg("a"), py::arg("b"))
      .def("transpose_dims",
           py::overload_cast<const std::vector<std::size_t>&>(&BitMatrix::transpose_dims,
                                                              py::const_),
           py::arg("perm"))
      .def("serialize", [](const BitMatrix& m_) { return serialize_matrix(m_); })
      .def("serialize_dense", [](const BitMatrix& m_) { return serialize_matrix_dense(m_); })
      .def("__eq__", [](const BitMatrix& a, const BitMatrix& b) { return a == b; })
      .def("__repr__", [](const BitMatrix& m_) { return serialize_matrix(m_); });

  m.def("parse_pattern", [](const std::string& text) {
    std::istringstream in(text);
    return parse_pattern(in);
  });
  m.def("parse_matrix", [](const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
  });
  m.def("load_pattern_file", &load_pattern_file, py::arg("path"));
  m.def("load_matrix_file", &load_matrix_file, py::arg("path"));
  m.def("save_pattern_file", &save_pattern_file, py::arg("path"), py::arg("pattern"));
  m.def("save_matrix_file", &save_matrix_file, py::arg("path"), py::arg("matrix"));

  m.def("contains", &contains, py::arg("matrix"), py::arg("pattern"));
  m.def(
      "find_occurrence",
      [](const BitMatrix& M, const Pattern& P) -> py::object {
        auto occ = find_occurrence(M, P);
        if (!occ) return py::none();
        return py::cast(occ->axis_maps);
      },
      py::arg("matrix"), py::arg("pattern"));
  m.def(
      "contains_formation",
      [](const BitMatrix& M, const Pattern& base, std::size_t s) {
        return contains_formation(M, FormationSpec(base, s));
      },
      py::arg("matrix"), py::arg("base"), py::arg("s"));
  m.def(
      "contains_doubled_formation",
      [](const BitMatrix& M, std::size_t r, std::size_t s) {
        return contains_doubled_formation(M, DoubledSpec(r, s));
      },
      py::arg("matrix"), py::arg("r"), py::arg("s"));

  m.def(
      "ex",
      [](const Shape& shape, const std::vector<Pattern>& patterns,
         const std::vector<FormationArg>& formations, const std::vector<DoubledArg>& doubled,
         std::uint64_t max_nodes, double max_seconds) {
        return result_dict(ex_exact(shape, build_family(patterns, formations, doubled),
                                    SearchBudget(max_nodes, max_seconds)));
      },
      py::arg("shape"), py::arg("patterns") = std::vector<Pattern>{},
      py::arg("formations") = std::vector<FormationArg>{},
      py::arg("doubled") = std::vector<DoubledArg>{},
      py::arg("max_nodes") = std::uint64_t{1} << 62, py::arg("max_seconds") = 3600.0);
  m.def(
      "lx",
      [](const Shape& shape, std::size_t k, const std::vector<Pattern>& patterns,
         const std::vector<FormationArg>& formations, const std::vector<DoubledArg>& doubled,
         std::uint64_t max_nodes, double max_seconds) {
        return result_dict(lx_exact(shape, k, build_family(patterns, formations, doubled),
                                    SearchBudget(max_nodes, max_seconds)));
      },
      py::arg("shape"), py::arg("k"), py::arg("patterns") = std::vector<Pattern>{},
      py::arg("formations") = std::vector<FormationArg>{},
      py::arg("doubled") = std::vector<DoubledArg>{},
      py::arg("max_nodes") = std::uint64_t{1} << 62, py::arg("max_seconds") = 3600.0);
  m.def(
      "compute_G",
      [](std::size_t n, std::size_t m_, std::size_t d_plus_1, std::size_t k, const Pattern& P,
         std::size_t s, std::uint64_t max_nodes, double max_seconds) {
        BigRat g = compute_G(n, m_, d_plus_1, k, P, s, SearchBudget(max_nodes, max_seconds));
        return g.str();
      },
      py::arg("n"), py::arg("m"), py::arg("d_plus_1"), py::arg("k"), py::arg("pattern"),
      py::arg("s"), py::arg("max_nodes") = std::uint64_t{1} << 62,
      py::arg("max_seconds") = 3600.0);
  m.def("validate_witness",
        [](const BitMatrix& M, const std::vector<Pattern>& patterns,
           const std::vector<FormationArg>& formations, const std::vector<DoubledArg>& doubled) {
          return validate_witness(M, build_family(patterns, formations, doubled));
        },
        py::arg("matrix"), py::arg("patterns") = std::vector<Pattern>{},
        py::arg("formations") = std::vector<FormationArg>{},
        py::arg("doubled") = std::vector<DoubledArg>{});
  m.def("clear_search_memo", &clear_search_memo);

  m.def("rec_R", [](std::size_t s, std::size_t j) { return rec_R(s, j).str(); }, py::arg("s"),
        py::arg("j"));
  m.def("rec_D", [](std::size_t s, std::size_t j) { return rec_D(s, j).str(); }, py::arg("s"),
        py::arg("j"));
  m.def(
      "recurrence_table_tsv",
      [](char kind, std::size_t max_s, std::size_t max_j) {
        return RecurrenceTable::build(kind, max_s, max_j).to_tsv();
      },
      py::arg("kind"), py::arg("max_s"), py::arg("max_j"));
  m.def(
      "ack",
      [](std::size_t j, const std::string& n, const std::string& guard) -> py::object {
        auto v = ack(j, BigInt(n), BigInt(guard));
        if (!v) return py::none();
        return py::cast(v->str());
      },
      py::arg("j"), py::arg("n"), py::arg("guard"));
  m.def("alpha", [](const std::string& n) { return alpha(BigInt(n)); }, py::arg("n"));
  m.def(
      "alpha_level",
      [](std::size_t j, const std::string& n) { return alpha_level(j, BigInt(n)).str(); },
      py::arg("j"), py::arg("n"));
  m.def(
      "formation_binom_bound",
      [](std::size_t m_, std::size_t s) { return formation_binom_bound(m_, s).str(); },
      py::arg("m"), py::arg("s"));

  m.def(
      "check_relate",
      [](const std::vector<Pattern>& patterns, const std::vector<FormationArg>& formations,
         const std::vector<DoubledArg>& doubled, const Range& n, const Range& m_,
         const Range& k, std::uint64_t max_nodes, double max_seconds) {
        return check_relate(build_family(patterns, formations, doubled), range_of(n),
                            range_of(m_), range_of(k), SearchBudget(max_nodes, max_seconds))
            .to_json_text();
      },
      py::arg("patterns"), py::arg("formations"), py::arg("doubled"), py::arg("n"),
      py::arg("m"), py::arg("k"), py::arg("max_nodes") = std::uint64_t{1} << 62,
      py::arg("max_seconds") = 3600.0);
  m.def(
      "check_binomial",
      [](const Pattern& base, const Range& n, const Range& m_, const Range& s,
         std::uint64_t max_nodes, double max_seconds) {
        return check_binomial(base, range_of(n), range_of(m_), range_of(s),
                              SearchBudget(max_nodes, max_seconds))
            .to_json_text();
      },
      py::arg("base"), py::arg("n"), py::arg("m"), py::arg("s"),
      py::arg("max_nodes") = std::uint64_t{1} << 62, py::arg("max_seconds") = 3600.0);
  m.def(
      "check_recurrence_doubling",
      [](const Pattern& base, std::size_t s, const Range& n, const Range& m_, const Range& k,
         std::uint64_t max_nodes, double max_seconds) {
        return check_recurrence_doubling(base, s, range_of(n), range_of(m_), range_of(k),
                                         SearchBudget(max_nodes, max_seconds))
            .to_json_text();
      },
      py::arg("base"), py::arg("s"), py::arg("n"), py::arg("m"), py::arg("k"),
      py::arg("max_nodes") = std::uint64_t{1} << 62, py::arg("max_seconds") = 3600.0);
  m.def(
      "check_recurrence_partition",
      [](const Pattern& base, std::size_t s, const std::array<std::size_t, 4>& ks,
         std::size_t t, const Range& n, const std::vector<std::size_t>& ms,
         std::uint64_t max_nodes, double max_seconds) {
        return check_recurrence_partition(base, s, ks, t, range_of(n), ms,
                                          SearchBudget(max_nodes, max_seconds))
            .to_json_text();
      },
      py::arg("base"), py::arg("s"), py::arg("ks"), py::arg("t"), py::arg("n"), py::arg("ms"),
      py::arg("max_nodes") = std::uint64_t{1} << 62, py::arg("max_seconds") = 3600.0);
  m.def(
      "check_fp3",
      [](const Pattern& base, const Range& n, std::uint64_t max_nodes, double max_seconds) {
        return check_fp3(base, range_of(n), SearchBudget(max_nodes, max_seconds))
            .to_json_text();
      },
      py::arg("base"), py::arg("n"), py::arg("max_nodes") = std::uint64_t{1} << 62,
      py::arg("max_seconds") = 3600.0);
  m.def(
      "check_light_reduction",
      [](const Pattern& p, const Shape& host_bound, std::size_t trials, std::uint64_t seed) {
        return check_light_reduction(p, host_bound, trials, seed).to_json_text();
      },
      py::arg("pattern"), py::arg("host_bound"), py::arg("trials") = 8,
      py::arg("seed") = 2026);
}
