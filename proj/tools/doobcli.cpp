// Command-line surface: graph info, file verification, constructions,
// admissibility classification, and brute-force searches.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "doob/constructions.hpp"
#include "doob/eqpart.hpp"
#include "doob/io.hpp"
#include "doob/search.hpp"

namespace {

using namespace doob;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void print_duration(const Timer& t) {
  std::printf("duration: %.3f s\n", t.seconds());
}

std::string spec_name(const GraphSpec& s) {
  return "D(" + std::to_string(s.m) + "," + std::to_string(s.n) + ")";
}

int cmd_info(int m, int n) {
  GraphSpec s{m, n};
  validate(s);
  std::printf("graph: %s\n", spec_name(s).c_str());
  std::printf("vertices: %llu\n", static_cast<unsigned long long>(num_vertices(s)));
  std::printf("degree: %d\n", degree(s));
  std::printf("diameter parameter 2m+n: %d\n", diameter_param(s));
  std::printf("eigenvalues (multiplicity):");
  for (int i = 0; i <= diameter_param(s); ++i)
    std::printf(" %d(%llu)", degree(s) - 4 * i,
                static_cast<unsigned long long>(eigenvalue_multiplicity(s, i)));
  std::printf("\n");
  return kExitOk;
}

// First header token of a data file ("pc1" or "code1").
std::string sniff_magic(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    return tok;
  }
  throw std::runtime_error(path + ": empty file");
}

int cmd_verify(const std::string& file, const std::string& quotient_text, bool crc, int mu) {
  Timer timer;
  std::string magic = sniff_magic(file);
  int rc = kExitOk;
  if (magic == "pc1") {
    Coloring c = read_pc1(file);
    std::printf("file: %s (%s, %d colors)\n", file.c_str(), spec_name(c.spec).c_str(), c.k);
    QuotientResult r = quotient_text.empty()
                           ? compute_quotient(c)
                           : verify_quotient(c, parse_quotient(quotient_text));
    if (r.ok()) {
      std::printf("status: ok\nquotient:\n%s\n",
                  (quotient_text.empty() ? r.matrix->to_string()
                                         : parse_quotient(quotient_text).to_string())
                      .c_str());
    } else {
      std::printf("status: fail\nwitness: %s\n", r.failure->to_string().c_str());
      rc = kExitVerifyFail;
    }
  } else if (magic == "code1") {
    Code c = read_code1(file);
    std::printf("file: %s (%s, %llu codewords)\n", file.c_str(), spec_name(c.spec).c_str(),
                static_cast<unsigned long long>(c.size()));
    if (mu > 0) {
      if (is_mu_fold_perfect(c, mu)) {
        std::printf("status: ok (%d-fold 1-perfect)\n", mu);
      } else {
        std::printf("status: fail (not %d-fold 1-perfect)\n", mu);
        rc = kExitVerifyFail;
      }
    }
    if (crc) {
      CrcResult r = completely_regular_check(c);
      if (r.ok()) {
        std::printf("status: ok (completely regular)\nintersection array: %s\nquotient:\n%s\n",
                    r.array->to_string().c_str(), r.quotient->to_string().c_str());
      } else {
        std::printf("status: fail (not completely regular)");
        if (r.failure) std::printf("\nwitness: %s", r.failure->to_string().c_str());
        std::printf("\n");
        rc = kExitVerifyFail;
      }
    }
    if (mu <= 0 && !crc) {
      std::printf("status: ok (parsed; pass --mu or --crc to verify)\n");
    }
  } else {
    throw std::runtime_error(file + ": unknown file type '" + magic + "'");
  }
  print_duration(timer);
  return rc;
}

int cmd_admissible(int b, int c) {
  if (b < 1 || c < 1) throw std::invalid_argument("admissible: b,c >= 1 required");
  AdmissibilityRecord r = admissibility(b, c);
  std::printf("(%d,%d): %s\n", b, c, r.to_string().c_str());
  return kExitOk;
}

void write_coloring_report(const Coloring& col, const QuotientMatrix& S,
                           const std::string& out, const std::string& what) {
  std::printf("graph: %s\ncolors: %d\nquotient:\n%s\n", spec_name(col.spec).c_str(), col.k,
              S.to_string().c_str());
  if (!out.empty()) {
    write_pc1(out, col, what);
    std::printf("wrote: %s\n", out.c_str());
  }
}

int cmd_construct(const std::vector<std::string>& args, std::string out, int b_flag,
                  const std::string& prefer) {
  Timer timer;
  if (args.empty()) throw std::invalid_argument("construct: missing builder name");
  const std::string& name = args[0];
  auto iarg = [&](size_t i) {
    if (i >= args.size())
      throw std::invalid_argument("construct " + name + ": missing argument");
    return std::stoi(args[i]);
  };
  auto arg_desc = [&] {
    std::string d = "construct";
    for (const std::string& a : args) d += " " + a;
    return d;
  };

  if (name == "mds" || name == "codepart" || name == "threej" || name == "threejme" ||
      name == "gammamds" || name == "multipartite" || name == "bc" || name == "recipe") {
    Coloring col;
    if (name == "mds") {
      col = mds_partition(GraphSpec{iarg(1), iarg(2)}).coloring;
    } else if (name == "codepart") {
      col = perfect_code_partition(GraphSpec{iarg(1), iarg(2)}).coloring;
    } else if (name == "threej") {
      col = three_j(GraphSpec{iarg(1), iarg(2)});
    } else if (name == "threejme") {
      col = three_j_minus_e(GraphSpec{iarg(1), iarg(2)});
    } else if (name == "gammamds") {
      col = gamma_mds_coloring(GraphSpec{iarg(1), iarg(2)}, iarg(3));
    } else if (name == "multipartite") {
      col = multipartite(iarg(1), GraphSpec{iarg(2), iarg(3)}).coloring;
    } else if (name == "bc") {
      BcPreference pref = BcPreference::Auto;
      if (prefer == "doob") pref = BcPreference::PreferDoob;
      if (prefer == "hamming") pref = BcPreference::PreferHamming;
      BcColoring bc = build_bc_coloring(iarg(1), iarg(2), pref);
      std::printf("method: %s\n", bc.method.c_str());
      col = bc.coloring;
    } else {
      RecipeResult r = eval_recipe_file(args.at(1));
      std::printf("recipe: %s\n", r.summary.c_str());
      col = r.coloring;
    }
    QuotientResult q = compute_quotient(col);
    if (!q.ok()) throw std::logic_error("construct: output failed verification");
    write_coloring_report(col, *q.matrix, out, arg_desc());
    std::printf("status: ok\n");
    print_duration(timer);
    return kExitOk;
  }
  if (name == "multifold") {
    MultifoldPartition mp = multifold_partition(GraphSpec{iarg(1), iarg(2)});
    std::printf("graph: %s\ncodes: %zu, each %d-fold 1-perfect\n",
                spec_name(mp.spec).c_str(), mp.codes.size(), mp.alpha);
    if (out.empty())
      out = "multifold_" + std::to_string(mp.spec.m) + "_" + std::to_string(mp.spec.n);
    for (size_t i = 0; i < mp.codes.size(); ++i) {
      std::string path = out + "." + std::to_string(i) + ".code1";
      write_code1(path, mp.codes[i], arg_desc() + " (code " + std::to_string(i) + ")");
      std::printf("wrote: %s\n", path.c_str());
    }
    std::printf("status: ok\n");
    print_duration(timer);
    return kExitOk;
  }
  if (name == "rad2") {
    if (b_flag < 1) throw std::invalid_argument("construct rad2: pass --b");
    Rad2Code rc = rad2_code(GraphSpec{iarg(1), iarg(2)}, b_flag);
    std::printf("graph: %s\nb: %d (c = %d)\ndistance quotient:\n%s\n",
                spec_name(rc.spec).c_str(), rc.b, rc.c, rc.quotient.to_string().c_str());
    Rad2Report rep = rad2_verify(rc, 10000, 1);
    if (!rep.ok) {
      std::printf("status: fail\nwitness: %s\n", rep.detail.c_str());
      print_duration(timer);
      return kExitVerifyFail;
    }
    std::printf("status: ok (64 coset representatives + 10000 random vertices)\n");
    print_duration(timer);
    return kExitOk;
  }
  throw std::invalid_argument("construct: unknown builder '" + name + "'");
}

int cmd_search(const std::string& kind, int m, int n, int mu, const std::string& quotient_text,
               uint64_t seed, uint64_t nodes, double time_limit, const std::string& out) {
  Timer timer;
  GraphSpec spec{m, n};
  validate(spec);
  SearchBudget budget;
  budget.seed = seed;
  if (nodes > 0) budget.node_limit = nodes;
  if (time_limit > 0) budget.time_limit_sec = time_limit;

  if (kind == "code") {
    CodeSearchResult r = find_perfect_code(spec, mu, budget);
    if (r.status == SearchStatus::Found) {
      std::printf("status: found (%llu codewords, mu = %d)\n",
                  static_cast<unsigned long long>(r.code->size()), mu);
      if (!out.empty()) {
        write_code1(out, *r.code,
                    "search code " + std::to_string(m) + " " + std::to_string(n) +
                        " --mu " + std::to_string(mu) + " --seed " + std::to_string(seed));
        std::printf("wrote: %s\n", out.c_str());
      }
      print_duration(timer);
      return kExitOk;
    }
    std::printf("status: %s\n",
                r.status == SearchStatus::Unsatisfiable ? "unsatisfiable" : "budget exhausted");
    print_duration(timer);
    return r.status == SearchStatus::Unsatisfiable ? kExitVerifyFail : kExitBudget;
  }
  if (kind == "coloring") {
    if (quotient_text.empty())
      throw std::invalid_argument("search coloring: pass --quotient");
    QuotientMatrix S = parse_quotient(quotient_text);
    ColoringSearchResult r = find_perfect_coloring(spec, S, {}, budget);
    if (r.status == SearchStatus::Found) {
      std::printf("status: found\nquotient:\n%s\n", S.to_string().c_str());
      if (!out.empty()) {
        write_pc1(out, *r.coloring,
                  "search coloring " + std::to_string(m) + " " + std::to_string(n) +
                      " --quotient \"" + quotient_text + "\" --seed " + std::to_string(seed));
        std::printf("wrote: %s\n", out.c_str());
      }
      print_duration(timer);
      return kExitOk;
    }
    std::printf("status: %s\n",
                r.status == SearchStatus::Unsatisfiable ? "unsatisfiable" : "budget exhausted");
    print_duration(timer);
    return r.status == SearchStatus::Unsatisfiable ? kExitVerifyFail : kExitBudget;
  }
  if (kind == "additive") {
    AdditiveCodeResult r = find_additive_perfect_code(spec);
    if (!r.found) {
      std::printf("status: no additive code found\n");
      print_duration(timer);
      return kExitVerifyFail;
    }
    std::printf("status: found (kernel + %zu cosets)\n", r.cosets.size());
    if (!out.empty()) {
      for (size_t i = 0; i < r.cosets.size(); ++i) {
        std::string path = out + "." + std::to_string(i) + ".code1";
        write_code1(path, r.cosets[i],
                    "search additive " + std::to_string(m) + " " + std::to_string(n) +
                        " (coset " + std::to_string(i) + ")");
        std::printf("wrote: %s\n", path.c_str());
      }
    }
    print_duration(timer);
    return kExitOk;
  }
  throw std::invalid_argument("search: unknown kind '" + kind + "' (code|coloring|additive)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect colorings and completely regular codes in Doob and H(n,4) graphs"};
  app.require_subcommand(1);

  int m = 0, n = 0, b = 0, c = 0, mu = 0, b_flag = 0;
  bool crc = false;
  std::string file, quotient_text, out, prefer, kind;
  std::vector<std::string> builder_args;
  uint64_t seed = 1, nodes = 0;
  double time_limit = 0;

  CLI::App* info = app.add_subcommand("info", "Graph parameters and spectrum");
  info->add_option("m", m)->required();
  info->add_option("n", n)->required();

  CLI::App* verify = app.add_subcommand("verify", "Verify a pc1/code1 file");
  verify->add_option("file", file)->required();
  verify->add_option("--quotient", quotient_text, "expected quotient, rows ';'-separated");
  verify->add_flag("--crc", crc, "completely-regular check (code1)");
  verify->add_option("--mu", mu, "mu-fold 1-perfect check (code1)");

  CLI::App* construct = app.add_subcommand("construct", "Run a named builder or recipe");
  construct->add_option("builder", builder_args, "builder name and arguments")->required();
  construct->add_option("--out", out, "output path");
  construct->add_option("--b", b_flag, "first-class count for rad2");
  construct->add_option("--prefer", prefer, "doob|hamming spec preference");

  CLI::App* admissible = app.add_subcommand("admissible", "Classify a (b,c) pair");
  admissible->add_option("b", b)->required();
  admissible->add_option("c", c)->required();

  CLI::App* search = app.add_subcommand("search", "Brute-force search");
  search->add_option("kind", kind, "code|coloring|additive")->required();
  search->add_option("m", m)->required();
  search->add_option("n", n)->required();
  search->add_option("--mu", mu)->default_val(1);
  search->add_option("--quotient", quotient_text);
  search->add_option("--seed", seed);
  search->add_option("--nodes", nodes, "node budget");
  search->add_option("--time", time_limit, "time budget in seconds");
  search->add_option("--out", out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_info(m, n);
    if (verify->parsed()) return cmd_verify(file, quotient_text, crc, mu);
    if (construct->parsed()) return cmd_construct(builder_args, out, b_flag, prefer);
    if (admissible->parsed()) return cmd_admissible(b, c);
    if (search->parsed()) return cmd_search(kind, m, n, mu, quotient_text, seed, nodes,
                                            time_limit, out);
  } catch (const doob::DeskScaleExceeded& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitVerifyFail;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
