// Command-line front end: containment and formation queries, extremal
// searches, recurrence tables, inequality sweeps, and result-cache upkeep.
// Exit codes: 0 = true / pass, 1 = false / failed verdict, 2 = error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "patex/cache.hpp"
#include "patex/contains.hpp"
#include "patex/formations.hpp"
#include "patex/io.hpp"
#include "patex/recurrences.hpp"
#include "patex/search.hpp"
#include "patex/verify.hpp"

namespace {

using namespace patex;

Pattern load_cli_pattern(const std::string& path, bool raw) {
  Pattern p = load_pattern_file(path);
  if (raw) return p;
  require(p.weight() >= 1, path + ": empty pattern");
  Pattern np = p.normalize();
  if (np != p)
    std::cerr << "note: " << path
              << " normalized to its occupied shape (pass --raw to keep empty hyperplanes)\n";
  return np;
}

Shape parse_shape(const std::string& text) {
  Shape s;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    require(!part.empty(), "malformed shape '" + text + "'");
    s.push_back(std::stoull(part));
  }
  require(!s.empty(), "malformed shape '" + text + "'");
  for (std::size_t e : s) require(e >= 1, "shape lengths must be positive");
  return s;
}

GridRange parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const std::size_t v = std::stoull(text);
    return GridRange(v, v);
  }
  return GridRange(std::stoull(text.substr(0, colon)), std::stoull(text.substr(colon + 1)));
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(std::stoull(part));
  require(!out.empty(), "empty list '" + text + "'");
  return out;
}

// Family-building flags shared by search and verify subcommands.
struct FamilyArgs {
  std::vector<std::string> forbid_files;
  std::vector<std::string> formation_specs;  // "path,s"
  std::vector<std::string> doubled_specs;    // "r,s"
  bool raw = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--forbid", forbid_files, "forbidden pattern file (repeatable)");
    cmd->add_option("--formation", formation_specs,
                    "formation family as <base.pat>,<s> (repeatable)");
    cmd->add_option("--doubled", doubled_specs,
                    "doubled formation family as <r>,<s> (repeatable)");
    cmd->add_flag("--raw", raw, "use patterns as written; skip normalization");
  }

  ForbiddenFamily build() const {
    ForbiddenFamily F;
    for (const auto& f : forbid_files) F.patterns.push_back(load_cli_pattern(f, raw));
    for (const auto& spec : formation_specs) {
      const auto comma = spec.rfind(',');
      require(comma != std::string::npos, "--formation needs <base.pat>,<s>");
      F.formations.emplace_back(load_cli_pattern(spec.substr(0, comma), raw),
                                std::stoull(spec.substr(comma + 1)));
    }
    for (const auto& spec : doubled_specs) {
      const auto nums = parse_size_list(spec);
      require(nums.size() == 2, "--doubled needs <r>,<s>");
      F.doubled.emplace_back(nums[0], nums[1]);
    }
    return F;
  }
};

struct BudgetArgs {
  std::uint64_t nodes = 50'000'000;
  double seconds = 600;

  void attach(CLI::App* cmd) {
    cmd->add_option("--budget-nodes", nodes, "search node budget");
    cmd->add_option("--budget-seconds", seconds, "search time budget");
  }
  SearchBudget build() const { return SearchBudget(nodes, seconds); }
};

std::optional<std::string> resolve_cache_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("PATEX_CACHE"); env && *env) return std::string(env);
  return std::nullopt;
}

void print_search_stats(const ExtremalResult& r) {
  std::cerr << "search: status=" << to_string(r.status) << " nodes=" << r.nodes
            << " elapsed=" << r.elapsed << "s\n";
}

int run_extremal(const std::string& mode, const Shape& shape, std::size_t k,
                 const FamilyArgs& fam, const BudgetArgs& bud, const std::string& cache_flag,
                 bool show_witness) {
  const ForbiddenFamily F = fam.build();
  const SearchBudget budget = bud.build();
  const std::string key = problem_key(mode, k, shape, F);
  const auto cache_path = resolve_cache_path(cache_flag);

  std::optional<ExtremalResult> res;
  if (cache_path) {
    ResultCache cache(*cache_path);
    if (auto hit = cache.get(key); hit && hit->status == SearchStatus::exact) {
      std::cerr << "cache: hit in " << *cache_path << "\n";
      res = std::move(hit);
    }
  }
  if (!res) {
    res = mode == "ex" ? ex_exact(shape, F, budget) : lx_exact(shape, k, F, budget);
    if (cache_path) ResultCache(*cache_path).put(key, mode, k, *res);
  }
  print_search_stats(*res);
  if (res->status != SearchStatus::exact)
    std::cout << "lower_bound " << res->value << "\n";
  else
    std::cout << res->value << "\n";
  if (show_witness) std::cout << serialize_matrix(res->witness);
  return 0;
}

std::string report_text(const BoundReport& rep, const std::string& format) {
  if (format == "json") return rep.to_json_text();
  return rep.to_tsv();
}

int emit_report(const BoundReport& rep, const std::string& format, const std::string& out) {
  const std::string text = report_text(rep, format);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::trunc);
    require(static_cast<bool>(f), "cannot write " + out);
    f << text;
  }
  std::cerr << "verify: " << rep.bound_id << " rows=" << rep.rows.size()
            << " passed=" << rep.passed() << " failed=" << rep.failed()
            << " inconclusive=" << rep.inconclusive() << "\n";
  return rep.verdict() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact containment, formation, and extremal-function toolkit for 0-1 matrices"};
  app.require_subcommand(1);

  // ---- contains / occurrence ----
  std::string host_file, pattern_file;
  bool raw = false;
  auto* c_contains = app.add_subcommand("contains", "does the host contain the pattern?");
  c_contains->add_option("--host", host_file, "host matrix file")->required();
  c_contains->add_option("--pattern", pattern_file, "pattern file")->required();
  c_contains->add_flag("--raw", raw, "use the pattern as written; skip normalization");

  auto* c_occ = app.add_subcommand("occurrence", "print the least occurrence, if any");
  c_occ->add_option("--host", host_file, "host matrix file")->required();
  c_occ->add_option("--pattern", pattern_file, "pattern file")->required();
  c_occ->add_flag("--raw", raw, "use the pattern as written; skip normalization");

  // ---- formation / doubled ----
  std::size_t form_s = 1, dbl_r = 1, dbl_s = 2;
  bool show_witness = false, show_max = false;
  auto* c_form = app.add_subcommand("formation", "detect an s-group formation of a base pattern");
  c_form->add_option("--host", host_file, "host matrix file")->required();
  c_form->add_option("--base", pattern_file, "base pattern file")->required();
  c_form->add_option("--s", form_s, "number of groups")->required();
  c_form->add_flag("--raw", raw, "use the base as written; skip normalization");
  c_form->add_flag("--witness", show_witness, "print the witness rows and groups");
  c_form->add_flag("--max", show_max, "print the largest achievable group count instead");

  auto* c_dbl = app.add_subcommand("doubled", "detect a doubled (r,s)-formation in a 2-d host");
  c_dbl->add_option("--host", host_file, "host matrix file")->required();
  c_dbl->add_option("--r", dbl_r, "number of columns")->required();
  c_dbl->add_option("--s", dbl_s, "number of intervals")->required();

  // ---- ex / lx ----
  std::string shape_text, cache_flag;
  std::size_t lx_k = 1;
  FamilyArgs ex_fam, lx_fam;
  BudgetArgs ex_bud, lx_bud;
  auto* c_ex = app.add_subcommand("ex", "max ones over hosts avoiding the family");
  c_ex->add_option("--shape", shape_text, "host shape, e.g. 6x4x4")->required();
  ex_fam.attach(c_ex);
  ex_bud.attach(c_ex);
  c_ex->add_option("--cache", cache_flag, "result cache file (overrides PATEX_CACHE)");
  c_ex->add_flag("--witness", show_witness, "print an extremal host");

  auto* c_lx = app.add_subcommand("lx", "max letter count over hosts avoiding the family");
  c_lx->add_option("--shape", shape_text, "host shape, e.g. 6x4x4")->required();
  c_lx->add_option("--k", lx_k, "ones per letter")->required();
  lx_fam.attach(c_lx);
  lx_bud.attach(c_lx);
  c_lx->add_option("--cache", cache_flag, "result cache file (overrides PATEX_CACHE)");
  c_lx->add_flag("--witness", show_witness, "print an extremal host");

  // ---- g-ratio ----
  std::string gr_pattern;
  std::size_t gr_n = 1, gr_m = 1, gr_k = 1, gr_s = 1, gr_d = 0;
  BudgetArgs gr_bud;
  auto* c_gr = app.add_subcommand("g-ratio", "exact lx/ex ratio for a formation family");
  c_gr->add_option("--p", gr_pattern, "base pattern file")->required();
  c_gr->add_option("--s", gr_s, "number of groups")->required();
  c_gr->add_option("--n", gr_n, "cube side")->required();
  c_gr->add_option("--m", gr_m, "first-axis length")->required();
  c_gr->add_option("--k", gr_k, "ones per letter")->required();
  c_gr->add_option("--d", gr_d, "host dimensionality (default: base dim + 1)");
  c_gr->add_flag("--raw", raw, "use the base as written; skip normalization");
  gr_bud.attach(c_gr);

  // ---- rec / alpha / gen-at ----
  std::string rec_kind;
  std::size_t rec_s = 1, rec_j = 2;
  bool rec_table = false;
  auto* c_rec = app.add_subcommand("rec", "recurrence values R and D");
  c_rec->add_option("--kind", rec_kind, "R or D")->required();
  c_rec->add_option("--s", rec_s, "s index (>= 1)")->required();
  c_rec->add_option("--j", rec_j, "j index (>= 2)")->required();
  c_rec->add_flag("--table", rec_table, "print the whole table up to (s, j)");

  std::string alpha_n;
  std::size_t alpha_j = 0;
  auto* c_alpha = app.add_subcommand("alpha", "inverse tower levels");
  c_alpha->add_option("--n", alpha_n, "argument (arbitrary precision)")->required();
  c_alpha->add_option("--j", alpha_j, "hierarchy level; omit for the 3-threshold inverse");

  std::size_t gen_t = 1;
  std::string out_file;
  auto* c_gen = app.add_subcommand("gen-at", "write the 2-row zigzag pattern with t ones");
  c_gen->add_option("--t", gen_t, "number of ones")->required();
  c_gen->add_option("--out", out_file, "output file (default stdout)");

  // ---- verify ----
  auto* c_verify = app.add_subcommand("verify", "sweep one bound over a small grid");
  c_verify->require_subcommand(1);
  std::string v_format = "tsv", v_out;
  std::string vn = "1", vm = "1", vk = "1", vs_range = "1";
  BudgetArgs v_bud;
  FamilyArgs v_fam;
  std::string v_base, v_gtable;
  std::size_t v_c = 0, v_s = 1, v_t = 1, v_trials = 200;
  std::uint64_t v_seed = 1;
  std::string v_ks, v_mlist, v_bound_shape;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", v_format, "tsv or json");
    cmd->add_option("--out", v_out, "write the report here instead of stdout");
    v_bud.attach(cmd);
  };
  auto* vb_relate = c_verify->add_subcommand("relate", "ex vs k*(lx + row count)");
  v_fam.attach(vb_relate);
  vb_relate->add_option("--n", vn, "n range lo:hi")->required();
  vb_relate->add_option("--m", vm, "m range lo:hi")->required();
  vb_relate->add_option("--k", vk, "k range lo:hi")->required();
  add_common(vb_relate);

  auto* vb_lemma2 = c_verify->add_subcommand("lemma2", "linear hypothesis to letter bound");
  v_fam.attach(vb_lemma2);
  vb_lemma2->add_option("--c", v_c, "linear coefficient c")->required();
  vb_lemma2->add_option("--g-table", v_gtable, "g as m:value,m:value,...")->required();
  vb_lemma2->add_option("--n", vn, "n range lo:hi")->required();
  vb_lemma2->add_option("--m", vm, "m range lo:hi")->required();
  vb_lemma2->add_option("--k", vk, "k range lo:hi")->required();
  add_common(vb_lemma2);

  auto* vb_binom = c_verify->add_subcommand("binomial", "formation letter bound");
  vb_binom->add_option("--base", v_base, "base pattern file")->required();
  vb_binom->add_option("--n", vn, "n range lo:hi")->required();
  vb_binom->add_option("--m", vm, "m range lo:hi")->required();
  vb_binom->add_option("--s", vs_range, "s range lo:hi")->required();
  vb_binom->add_flag("--raw", raw, "use the base as written; skip normalization");
  add_common(vb_binom);

  auto* vb_rec1 = c_verify->add_subcommand("rec1", "first-axis doubling recurrence");
  vb_rec1->add_option("--base", v_base, "base pattern file")->required();
  vb_rec1->add_option("--s", v_s, "group count")->required();
  vb_rec1->add_option("--n", vn, "n range lo:hi")->required();
  vb_rec1->add_option("--m", vm, "m range lo:hi")->required();
  vb_rec1->add_option("--k", vk, "k range lo:hi")->required();
  vb_rec1->add_flag("--raw", raw, "use the base as written; skip normalization");
  add_common(vb_rec1);

  auto* vb_rec2 = c_verify->add_subcommand("rec2", "interval partition recurrence");
  vb_rec2->add_option("--base", v_base, "base pattern file")->required();
  vb_rec2->add_option("--s", v_s, "group count (>= 3)")->required();
  vb_rec2->add_option("--ks", v_ks, "letter sizes k,k1,k2,k3")->required();
  vb_rec2->add_option("--t", v_t, "interval length")->required();
  vb_rec2->add_option("--n", vn, "n range lo:hi")->required();
  vb_rec2->add_option("--m-list", v_mlist, "first-axis lengths, multiples of t")->required();
  vb_rec2->add_flag("--raw", raw, "use the base as written; skip normalization");
  add_common(vb_rec2);

  auto* vb_fp3 = c_verify->add_subcommand("fp3", "3-group formation extremal bound");
  vb_fp3->add_option("--base", v_base, "base pattern file")->required();
  vb_fp3->add_option("--n", vn, "n range lo:hi")->required();
  vb_fp3->add_flag("--raw", raw, "use the base as written; skip normalization");
  add_common(vb_fp3);

  auto* vb_light = c_verify->add_subcommand("light", "light-pattern formation reduction");
  vb_light->add_option("--pattern", v_base, "light pattern file")->required();
  vb_light->add_option("--host-bound", v_bound_shape, "enumeration host, e.g. 4x3x3")->required();
  vb_light->add_option("--trials", v_trials, "stretched-member trials");
  vb_light->add_option("--seed", v_seed, "trial seed");
  vb_light->add_flag("--raw", raw, "use the pattern as written; skip normalization");
  vb_light->add_option("--format", v_format, "tsv or json");
  vb_light->add_option("--out", v_out, "write the report here instead of stdout");

  // ---- cache ----
  auto* c_cache = app.add_subcommand("cache", "inspect or compact the result cache");
  c_cache->require_subcommand(1);
  std::string cache_path_flag;
  auto* cc_ls = c_cache->add_subcommand("ls", "list well-formed records");
  cc_ls->add_option("--cache", cache_path_flag, "cache file (overrides PATEX_CACHE)");
  auto* cc_gc = c_cache->add_subcommand("gc", "drop stale, duplicate, and malformed records");
  cc_gc->add_option("--cache", cache_path_flag, "cache file (overrides PATEX_CACHE)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_contains || *c_occ) {
      const BitMatrix M = load_matrix_file(host_file);
      const Pattern P = load_cli_pattern(pattern_file, raw);
      if (*c_contains) {
        const bool hit = contains(M, P);
        std::cout << (hit ? "true" : "false") << "\n";
        return hit ? 0 : 1;
      }
      const auto occ = find_occurrence(M, P);
      if (!occ) {
        std::cout << "none\n";
        return 1;
      }
      for (std::size_t ax = 0; ax < occ->axis_maps.size(); ++ax) {
        std::cout << "axis " << ax + 1 << ":";
        for (std::size_t v : occ->axis_maps[ax]) std::cout << " " << v;
        std::cout << "\n";
      }
      return 0;
    }

    if (*c_form) {
      const BitMatrix M = load_matrix_file(host_file);
      const Pattern base = load_cli_pattern(pattern_file, raw);
      if (show_max) {
        std::cout << max_formation_groups(M, base) << "\n";
        return 0;
      }
      const FormationSpec spec(base, form_s);
      if (show_witness) {
        const auto w = find_formation(M, spec);
        if (!w) {
          std::cout << "false\n";
          return 1;
        }
        std::cout << "true\n";
        std::cout << "rows:";
        for (const Coord& t : w->tails) std::cout << " " << coord_to_string(t);
        std::cout << "\n";
        for (std::size_t g = 0; g < w->groups.size(); ++g) {
          std::cout << "group " << g + 1 << ":";
          for (const Coord& c : w->groups[g]) std::cout << " " << coord_to_string(c);
          std::cout << "\n";
        }
        return 0;
      }
      const bool hit = contains_formation(M, spec);
      std::cout << (hit ? "true" : "false") << "\n";
      return hit ? 0 : 1;
    }

    if (*c_dbl) {
      const BitMatrix M = load_matrix_file(host_file);
      const bool hit = contains_doubled_formation(M, DoubledSpec(dbl_r, dbl_s));
      std::cout << (hit ? "true" : "false") << "\n";
      return hit ? 0 : 1;
    }

    if (*c_ex)
      return run_extremal("ex", parse_shape(shape_text), 1, ex_fam, ex_bud, cache_flag,
                          show_witness);
    if (*c_lx)
      return run_extremal("lx", parse_shape(shape_text), lx_k, lx_fam, lx_bud, cache_flag,
                          show_witness);

    if (*c_gr) {
      const Pattern base = load_cli_pattern(gr_pattern, raw);
      const std::size_t d1 = gr_d == 0 ? base.dim() + 1 : gr_d;
      const BigRat g = compute_G(gr_n, gr_m, d1, gr_k, base, gr_s, gr_bud.build());
      std::cout << g.str() << "\n";
      return 0;
    }

    if (*c_rec) {
      require(rec_kind == "R" || rec_kind == "D", "--kind must be R or D");
      if (rec_table) {
        std::cout << RecurrenceTable::build(rec_kind[0], rec_s, rec_j).to_tsv();
        return 0;
      }
      const BigInt v = rec_kind == "R" ? rec_R(rec_s, rec_j) : rec_D(rec_s, rec_j);
      std::cout << v.str() << "\n";
      return 0;
    }

    if (*c_alpha) {
      const BigInt n(alpha_n);
      if (c_alpha->count("--j"))
        std::cout << alpha_level(alpha_j, n) << "\n";
      else
        std::cout << alpha(n) << "\n";
      return 0;
    }

    if (*c_gen) {
      const std::string text = serialize_pattern(zigzag_pattern(gen_t));
      if (out_file.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(out_file, std::ios::trunc);
        require(static_cast<bool>(f), "cannot write " + out_file);
        f << text;
      }
      return 0;
    }

    if (*c_verify) {
      require(v_format == "tsv" || v_format == "json", "--format must be tsv or json");
      const SearchBudget budget = v_bud.build();
      if (*vb_relate)
        return emit_report(check_relate(v_fam.build(), parse_range(vn), parse_range(vm),
                                        parse_range(vk), budget),
                           v_format, v_out);
      if (*vb_lemma2) {
        std::map<std::size_t, BigInt> g;
        for (const std::string& pair_text : [&] {
               std::vector<std::string> parts;
               std::stringstream ss(v_gtable);
               std::string p;
               while (std::getline(ss, p, ',')) parts.push_back(p);
               return parts;
             }()) {
          const auto colon = pair_text.find(':');
          require(colon != std::string::npos, "--g-table needs m:value pairs");
          g[std::stoull(pair_text.substr(0, colon))] = BigInt(pair_text.substr(colon + 1));
        }
        return emit_report(check_lemma2(v_fam.build(), v_c, g, parse_range(vn),
                                        parse_range(vm), parse_range(vk), budget),
                           v_format, v_out);
      }
      if (*vb_binom)
        return emit_report(check_binomial(load_cli_pattern(v_base, raw), parse_range(vn),
                                          parse_range(vm), parse_range(vs_range), budget),
                           v_format, v_out);
      if (*vb_rec1)
        return emit_report(
            check_recurrence_doubling(load_cli_pattern(v_base, raw), v_s, parse_range(vn),
                                      parse_range(vm), parse_range(vk), budget),
            v_format, v_out);
      if (*vb_rec2) {
        const auto ks = parse_size_list(v_ks);
        require(ks.size() == 4, "--ks needs k,k1,k2,k3");
        return emit_report(
            check_recurrence_partition(load_cli_pattern(v_base, raw), v_s,
                                       {ks[0], ks[1], ks[2], ks[3]}, v_t, parse_range(vn),
                                       parse_size_list(v_mlist), budget),
            v_format, v_out);
      }
      if (*vb_fp3)
        return emit_report(check_fp3(load_cli_pattern(v_base, raw), parse_range(vn), budget),
                           v_format, v_out);
      if (*vb_light)
        return emit_report(check_light_reduction(load_cli_pattern(v_base, raw),
                                                 parse_shape(v_bound_shape), v_trials, v_seed),
                           v_format, v_out);
    }

    if (*c_cache) {
      const auto path = resolve_cache_path(cache_path_flag);
      require(path.has_value(), "no cache file: pass --cache or set PATEX_CACHE");
      ResultCache cache(*path);
      if (*cc_ls) {
        for (const auto& r : cache.list())
          std::cout << r.key << "\t" << r.engine_version << "\t" << r.mode << "\t" << r.k
                    << "\t" << shape_to_string(r.shape) << "\t" << r.value << "\t" << r.status
                    << "\n";
        return 0;
      }
      const std::size_t dropped = cache.gc();
      std::cout << "dropped " << dropped << "\n";
      return 0;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
