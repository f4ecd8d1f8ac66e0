// Command-line front end: compute differential-operator realizations of the
// simple complex Lie algebras, verify them independently, and print bracket
// tables and benchmark figures.
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parweyl/printing.hpp"
#include "parweyl/serialize.hpp"
#include "parweyl/verify.hpp"

using namespace parweyl;

namespace {

std::vector<int> parse_crossed(const std::string& s, int rank) {
  std::vector<int> ind(rank, 0);
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int v = std::stoi(tok);
    if (v < 1 || v > rank) throw CLI::ValidationError("--crossed", "node out of range: " + tok);
    ind[v - 1] = 1;
  }
  return ind;
}

std::vector<Rational> parse_lambda(const std::string& s, int rank) {
  std::vector<Rational> lam(rank, Rational(0));
  if (s.empty()) return lam;
  std::stringstream ss(s);
  std::string tok;
  size_t i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= lam.size()) throw CLI::ValidationError("--lambda", "more entries than the rank");
    lam[i++] = Rational::from_string(tok);
  }
  if (i != lam.size()) throw CLI::ValidationError("--lambda", "expected one entry per node");
  return lam;
}

std::string lambda_str(const std::vector<Rational>& lam) {
  std::string s = "(";
  for (size_t i = 0; i < lam.size(); ++i) s += (i ? "," : "") + lam[i].str();
  return s + ")";
}

struct EmbedSetup {
  ChevalleyAlgebra alg;
  ParabolicDatum par;
  LeviModule mod;
  std::vector<Rational> lambda;

  EmbedSetup(const std::string& type, const std::string& crossed, const std::string& lambda_s,
             int dim_cap)
      : alg(SimpleType::parse(type)),
        par(alg, parse_crossed(crossed, alg.rank())),
        mod(),
        lambda(parse_lambda(lambda_s, alg.rank())) {
    bool trivial = true;
    for (const Rational& c : lambda)
      if (!c.is_zero()) trivial = false;
    mod = trivial ? trivial_module(par) : build_irreducible(par, lambda, dim_cap);
  }
};

int run_embed(const std::string& type, const std::string& crossed, const std::string& lambda_s,
              const std::string& format, bool trace, long budget, int dim_cap) {
  EmbedSetup s(type, crossed, lambda_s, dim_cap);
  PrintStyle st = format == "latex" ? PrintStyle::latex : PrintStyle::text;
  if (trace && format != "json") {
    Uea U(s.par);
    std::cout << "word:";
    for (int t = 1; t <= s.par.n(); ++t)
      std::cout << " u" << t << "=" << gen_str(s.alg, s.par.word_gen(t), st);
    std::cout << "\n";
    for (const GenIndex g : [&] {
           std::vector<GenIndex> v;
           for (int i = 1; i <= s.alg.rank(); ++i) {
             v.push_back(+i);
             v.push_back(-i);
           }
           for (int i = 1; i <= s.alg.rank(); ++i) v.push_back(s.alg.cartan_gen(i));
           return v;
         }()) {
      UeaElement red = Uea(s.par).generic_product(g, budget);
      std::cout << gen_str(s.alg, g, st) << " . u = " << to_string(red, Uea(s.par), st) << "\n";
    }
    std::cout << "\n";
  }
  EmbeddingResult res = embed(s.par, s.mod, s.lambda, budget);
  if (format == "json") {
    std::cout << to_json(res, s.alg).dump(2) << "\n";
    return 0;
  }
  std::cout << "type " << res.type << ", crossed {";
  for (size_t i = 0; i < res.crossed.size(); ++i) std::cout << (i ? "," : "") << res.crossed[i];
  std::cout << "}, lambda " << lambda_str(res.lambda) << ", n=" << res.n << ", dim V=" << res.dimV
            << "\n";
  for (const GenImage& im : res.images) {
    std::string body = to_string(im.op, st);
    const char* sep = (res.dimV > 1 && body != "0") ? "\n" : " ";
    std::cout << "Phi(" << gen_str(s.alg, im.gen, st) << ") =" << sep << body << "\n";
  }
  std::fprintf(stderr, "rational ops: %llu, %.3f s\n",
               static_cast<unsigned long long>(res.op_count), res.seconds);
  return 0;
}

int run_check(const std::string& type, const std::string& crossed, const std::string& lambda_s,
              int degree, int max_dim, long max_brackets, long budget, int dim_cap) {
  EmbedSetup s(type, crossed, lambda_s, dim_cap);
  EmbeddingResult res = embed(s.par, s.mod, s.lambda, budget);
  int expected = s.alg.dim();
  ClosureReport cr = lie_closure(res, max_dim > 0 ? max_dim : expected + 8, max_brackets);
  std::printf("closure: dim %d (algebra dim %d), %s, %ld brackets, %.3f s\n", cr.dim, expected,
              cr.complete ? "stabilized" : "budget exhausted", cr.brackets, cr.seconds);
  OracleReport orep = action_oracle(res, s.par, s.mod, degree);
  std::printf("action oracle: %ld checks to degree %d, %ld mismatches%s%s\n", orep.checked, degree,
              orep.mismatches, orep.first_mismatch.empty() ? "" : ", first at ",
              orep.first_mismatch.c_str());
  bool ok = cr.complete && cr.dim == expected && orep.pass();
  std::printf("%s\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}

int run_table(const std::string& type, const std::string& format) {
  ChevalleyAlgebra alg(SimpleType::parse(type));
  std::cout << bracket_table(alg, format == "latex" ? PrintStyle::latex : PrintStyle::text);
  return 0;
}

int run_bench(bool long_run) {
  struct Case {
    const char* type;
    const char* crossed;
    unsigned long long baseline;  // rational-operation count of the
                                  // reference computation of the same
                                  // realization
    double baseline_seconds;
  };
  std::vector<Case> cases{{"G2", "1", 22185ull, 0.0},   {"G2", "2", 14072ull, 0.0},
                          {"F4", "1", 374377ull, 0.0},  {"F4", "4", 469892ull, 0.0},
                          {"E6", "1", 487021ull, 0.0}};
  if (long_run) {
    cases.push_back({"E7", "7", 2431419ull, 0.0});
    cases.push_back({"E8", "8", 28754380ull, 52.10});
  }
  std::printf("%-5s %-8s %14s %10s %14s %10s\n", "type", "crossed", "ops", "seconds", "reference",
              "ref-sec");
  for (const Case& c : cases) {
    EmbedSetup s(c.type, c.crossed, "", 4096);
    reset_rational_op_count();
    EmbeddingResult res = embed(s.par, s.mod, s.lambda);
    std::printf("%-5s %-8s %14llu %10.3f %14llu %10s\n", c.type, c.crossed,
                static_cast<unsigned long long>(res.op_count), res.seconds, c.baseline,
                c.baseline_seconds > 0 ? std::to_string(c.baseline_seconds).substr(0, 5).c_str()
                                       : "-");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"differential-operator realizations of simple Lie algebras"};
  app.require_subcommand(1);

  std::string type = "G2", crossed = "1", lambda = "", format = "text";
  bool trace = false, long_run = false;
  long budget = 1000000, max_brackets = 100000;
  int degree = 4, max_dim = 0, dim_cap = 4096;

  auto add_common = [&](CLI::App* sub, bool with_lambda) {
    sub->add_option("--type", type, "simple type, e.g. A3, B2, E8")->required();
    sub->add_option("--crossed", crossed, "crossed nodes, comma separated, e.g. 1,3")->required();
    if (with_lambda) {
      sub->add_option("--lambda", lambda,
                      "highest weight, fundamental coordinates, comma separated rationals "
                      "(default all zero)");
      sub->add_option("--dim-cap", dim_cap, "abort if dim V exceeds this");
    }
    sub->add_option("--budget", budget, "straightening step budget");
  };

  CLI::App* embed_cmd = app.add_subcommand("embed", "compute the realization and print it");
  add_common(embed_cmd, true);
  embed_cmd->add_option("--format", format, "text, latex, or json")
      ->check(CLI::IsMember({"text", "latex", "json"}));
  embed_cmd->add_flag("--trace", trace, "also print the straightened products g . u");

  CLI::App* check_cmd =
      app.add_subcommand("check", "compute, then verify by Lie closure and the action oracle");
  add_common(check_cmd, true);
  check_cmd->add_option("--degree", degree, "oracle checks all monomials up to this degree");
  check_cmd->add_option("--max-dim", max_dim, "closure dimension budget (default dim g + 8)");
  check_cmd->add_option("--max-brackets", max_brackets, "closure bracket budget");

  CLI::App* table_cmd = app.add_subcommand("table", "print the full bracket table of a type");
  table_cmd->add_option("--type", type, "simple type")->required();
  table_cmd->add_option("--format", format, "text or latex")
      ->check(CLI::IsMember({"text", "latex"}));

  CLI::App* bench_cmd =
      app.add_subcommand("bench", "time the standard parabolic series and report op counts");
  bench_cmd->add_flag("--long", long_run, "include E7 and E8");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(embed_cmd))
      return run_embed(type, crossed, lambda, format, trace, budget, dim_cap);
    if (app.got_subcommand(check_cmd))
      return run_check(type, crossed, lambda, degree, max_dim, max_brackets, budget, dim_cap);
    if (app.got_subcommand(table_cmd)) return run_table(type, format);
    if (app.got_subcommand(bench_cmd)) return run_bench(long_run);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
