#include "surfpts/classify.hpp"
#include "surfpts/corpus.hpp"
#include "surfpts/error.hpp"
#include "surfpts/json_io.hpp"
#include "surfpts/lattice.hpp"
#include "surfpts/numeric.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#ifndef SURFPTS_CORPUS_PATH
#define SURFPTS_CORPUS_PATH "data/corpus.txt"
#endif

namespace {

using namespace surfpts;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kInvalid = 2;
constexpr int kInternal = 3;

struct PolyArgs {
  std::string q;
  std::string poly;
  std::string a1;
  std::string a2;
};

struct Options {
  PolyArgs poly;
  bool json = false;
  std::string group;
  std::string ell;
  int depth = -1;
  unsigned jobs = 1;
  std::string exponents;
  bool allow_char_prime = false;
  bool exhaustive = false;
  std::string file = SURFPTS_CORPUS_PATH;
};

Integer parse_integer(const std::string& text, const char* what) {
  auto n = Integer::parse(text);
  if (!n) fail(Errc::parse_error, std::string(what) + " must be an integer, got '" + text + "'");
  return *n;
}

WeilPolynomial read_polynomial(const PolyArgs& args) {
  if (args.q.empty()) fail(Errc::invalid_argument, "--q is required");
  const Integer q = parse_integer(args.q, "--q");
  if (!args.poly.empty()) {
    if (!args.a1.empty() || !args.a2.empty()) fail(Errc::invalid_argument, "use either --poly or --a1/--a2");
    return validate_weil(q, parse_coefficients(args.poly));
  }
  if (args.a1.empty() || args.a2.empty()) fail(Errc::invalid_argument, "give --poly or both --a1 and --a2");
  const Integer a1 = parse_integer(args.a1, "--a1");
  const Integer a2 = parse_integer(args.a2, "--a2");
  const std::vector<Integer> coeffs{1, a1, a2, a1 * q, q * q};
  return validate_weil(q, coeffs);
}

Integer read_prime(const std::string& text) {
  if (text.empty()) fail(Errc::invalid_argument, "--ell is required");
  const Integer ell = parse_integer(text, "--ell");
  if (ell < Integer(2) || !is_prime(ell)) fail(Errc::invalid_argument, "--ell must be prime, got " + text);
  return ell;
}

std::string tuple(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string factorization_text(const Integer& n) {
  const auto fac = factorize(n);
  if (fac.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < fac.size(); ++i) {
    if (i) s += " * ";
    s += fac[i].prime.str();
    if (fac[i].exponent > 1) s += "^" + std::to_string(fac[i].exponent);
  }
  return s;
}

std::string linear_factor(int sigma, const Integer& s) {
  return std::string("(t ") + (sigma > 0 ? "+ " : "- ") + s.str() + ")";
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_classify(const Options& o) {
  const WeilPolynomial f = read_polynomial(o.poly);
  const IsogenyShape shape = detect_shape(f);
  const Integer f1 = f.value_at_one();
  if (o.json) {
    print_json({{"valid", true}, {"polynomial", weil_json(f)}, {"shape", shape_json(shape)}});
    return kOk;
  }
  std::cout << "polynomial: " << f.poly() << '\n';
  std::cout << "q: " << f.q << " = " << f.p << (f.n > 1 ? "^" + std::to_string(f.n) : "") << '\n';
  std::cout << "valid: yes\n";
  std::cout << "case: " << case_number(shape) << '\n';
  if (const auto* s = std::get_if<Case1>(&shape)) {
    std::cout << "factors: " << s->f << " (square-free)\n";
  } else if (const auto* s = std::get_if<Case2>(&shape)) {
    std::cout << "factors: (" << s->P << ")^2\n";
    std::cout << "P: " << s->P << '\n';
  } else if (const auto* s = std::get_if<Case3>(&shape)) {
    std::cout << "factors: (" << s->P << ") * " << linear_factor(s->sigma, s->s) << "^2\n";
    std::cout << "P: " << s->P << '\n';
  } else {
    const auto& s4 = std::get<Case4>(shape);
    std::cout << "factors: " << linear_factor(s4.sigma, s4.s) << "^4\n";
  }
  std::cout << "f(1): " << f1 << " = " << factorization_text(f1) << '\n';
  return kOk;
}

int cmd_groups(const Options& o) {
  const WeilPolynomial f = read_polynomial(o.poly);
  const ClassificationResult r = enumerate_groups(f);
  if (o.json) {
    print_json(classification_json(f, r));
    return kOk;
  }
  for (const auto& g : r.groups) std::cout << format_group(g) << '\n';
  return kOk;
}

int cmd_check(const Options& o) {
  const WeilPolynomial f = read_polynomial(o.poly);
  if (o.group.empty()) fail(Errc::invalid_argument, "--group is required");
  const FiniteAbelianGroup G = parse_group(o.group);
  const Decision d = decide_group(f, G);
  if (o.json) {
    Json j = decision_json(d);
    j["group"] = group_json(G);
    print_json(j);
  } else if (d.accepted) {
    std::cout << "YES\n";
  } else {
    std::cout << "NO: " << d.reason;
    if (d.prime) std::cout << " at ell=" << *d.prime;
    if (d.vector) std::cout << " exponents " << tuple(d.vector->exponents);
    std::cout << '\n';
  }
  return d.accepted ? kOk : kNo;
}

OracleReport run_oracle(const WeilPolynomial& f, const Integer& ell, int depth, const Options& o) {
  OracleOptions opts;
  opts.jobs = o.jobs;
  opts.allow_char_prime = o.allow_char_prime;
  opts.split_scalar_block = !o.exhaustive;
  return oracle_realized_set(f, ell, depth, opts);
}

std::set<std::vector<int>> expected_vectors(const WeilPolynomial& f, const Integer& ell) {
  std::set<std::vector<int>> out;
  for (const auto& hv : admissible_vectors(f, detect_shape(f), ell)) out.insert(hv.exponents);
  return out;
}

std::set<std::vector<int>> realized_set(const OracleReport& r) {
  std::set<std::vector<int>> out;
  for (const auto& [exps, lattice] : r.realized) out.insert(exps);
  return out;
}

int cmd_oracle(const Options& o) {
  const WeilPolynomial f = read_polynomial(o.poly);
  const Integer ell = read_prime(o.ell);
  const int depth = o.depth >= 0 ? o.depth : default_depth(f, ell);
  const OracleReport report = run_oracle(f, ell, depth, o);
  const auto realized = realized_set(report);
  const auto expected = expected_vectors(f, ell);
  const bool match = realized == expected;
  if (o.json) {
    Json j = oracle_json(report);
    Json exp = Json::array();
    for (const auto& e : expected) exp.push_back(e);
    j["expected"] = exp;
    j["match"] = match;
    print_json(j);
  } else {
    std::cout << "ell: " << ell << '\n';
    std::cout << "depth: " << depth << '\n';
    std::cout << "lattices: " << report.lattice_count << '\n';
    for (const auto& e : realized) std::cout << "realized: " << tuple(e) << '\n';
    for (const auto& e : expected) std::cout << "expected: " << tuple(e) << '\n';
    std::cout << (match ? "MATCH" : "MISMATCH") << '\n';
  }
  return match ? kOk : kInternal;
}

std::vector<int> parse_exponents(const std::string& text) {
  if (text.empty()) fail(Errc::invalid_argument, "--exponents is required");
  std::vector<int> out;
  for (const auto& c : parse_coefficients(text)) {
    if (c.sign() < 0 || !c.fits_int64() || c > Integer(1 << 20)) fail(Errc::parse_error, "bad exponent " + c.str());
    out.push_back(static_cast<int>(c.to_int64()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int cmd_witness(const Options& o) {
  const WeilPolynomial f = read_polynomial(o.poly);
  const Integer ell = read_prime(o.ell);
  const HodgeVector hv{ell, parse_exponents(o.exponents)};
  const int depth = o.depth >= 0 ? o.depth : default_depth(f, ell);
  const auto admissible = admissible_vectors(f, detect_shape(f), ell);
  if (hv.slots() != 4 || std::find(admissible.begin(), admissible.end(), hv) == admissible.end()) {
    if (o.json) {
      print_json({{"admissible", false}, {"exponents", hv.exponents}});
    } else {
      std::cout << "NO: " << tuple(hv.exponents) << " is not admissible at ell=" << ell << '\n';
    }
    return kNo;
  }
  const Witness w = witness_for(f, ell, hv, depth);
  const IntPolynomial cp = charpoly(w.matrix);
  const SnfResult s = snf(w.matrix);
  if (o.json) {
    Json invariants = Json::array();
    for (const auto& d : s.invariants) invariants.push_back(integer_json(d));
    Json j{{"admissible", true},
           {"ell", integer_json(ell)},
           {"exponents", hv.exponents},
           {"matrix", matrix_json(w.matrix)},
           {"charpoly", coefficients_json(cp)},
           {"snf", invariants}};
    if (w.lattice) j["lattice"] = matrix_json(w.lattice->basis);
    print_json(j);
    return kOk;
  }
  std::cout << "matrix:\n";
  for (Eigen::Index i = 0; i < w.matrix.rows(); ++i) {
    std::cout << "  [";
    for (Eigen::Index j = 0; j < w.matrix.cols(); ++j) std::cout << (j ? ", " : "") << w.matrix(i, j);
    std::cout << "]\n";
  }
  std::cout << "charpoly: " << cp << '\n';
  std::cout << "snf: " << format_coefficients(s.invariants) << '\n';
  std::cout << "exponents: " << tuple(hv.exponents) << '\n';
  if (w.lattice) {
    std::cout << "lattice:\n";
    for (Eigen::Index i = 0; i < w.lattice->basis.rows(); ++i) {
      std::cout << "  [";
      for (Eigen::Index j = 0; j < w.lattice->basis.cols(); ++j) std::cout << (j ? ", " : "") << w.lattice->basis(i, j);
      std::cout << "]\n";
    }
  }
  return kOk;
}

int cmd_corpus(const Options& o) {
  std::ifstream in(o.file);
  if (!in) fail(Errc::invalid_argument, "cannot open corpus file " + o.file);
  const auto entries = parse_corpus(in);
  bool all_match = true;
  Json out = Json::array();
  for (const auto& e : entries) {
    const WeilPolynomial f = validate_weil(e.q, e.coefficients);
    const ClassificationResult r = enumerate_groups(f);
    Json entry{{"line", e.line}, {"q", integer_json(f.q)}, {"coefficients", coefficients_json(f.poly())},
               {"case", case_number(r.shape)}};
    std::string groups;
    Json gj = Json::array();
    for (const auto& g : r.groups) {
      groups += (groups.empty() ? "" : ";") + format_group(g);
      gj.push_back(format_group(g));
    }
    entry["groups"] = gj;
    if (!o.json) {
      std::cout << "q=" << f.q << " poly=" << format_coefficients(f.poly().descending()) << " case=" << case_number(r.shape)
                << " groups=" << groups << '\n';
    }
    Json checks = Json::array();
    for (const auto& pp : factorize(f.value_at_one())) {
      if ((f.q % pp.prime).is_zero()) continue;
      const int depth = default_depth(f, pp.prime);
      const bool match = realized_set(run_oracle(f, pp.prime, depth, o)) == expected_vectors(f, pp.prime);
      all_match = all_match && match;
      checks.push_back({{"ell", integer_json(pp.prime)}, {"depth", depth}, {"match", match}});
      if (!o.json) std::cout << "  ell=" << pp.prime << " depth=" << depth << ' ' << (match ? "MATCH" : "MISMATCH") << '\n';
    }
    entry["oracle"] = checks;
    out.push_back(std::move(entry));
  }
  if (o.json) print_json(out);
  return all_match ? kOk : kInternal;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::internal_invariant:
      return kInternal;
    case Errc::depth_exhausted:
      return kNo;
    default:
      return kInvalid;
  }
}

void add_poly_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--q", o.poly.q, "field size q = p^n");
  cmd->add_option("--poly", o.poly.poly, "coefficients, descending, e.g. 1,3,4,12,16");
  cmd->add_option("--a1", o.poly.a1, "coefficient of t^3");
  cmd->add_option("--a2", o.poly.a2, "coefficient of t^2");
  cmd->add_flag("--json", o.json, "JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groups of rational points on abelian surfaces over finite fields"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "validate f and detect its factorization shape");
  add_poly_flags(classify, o);
  auto* groups = app.add_subcommand("groups", "list every group of points in the isogeny class");
  add_poly_flags(groups, o);
  auto* check = app.add_subcommand("check", "decide whether a group occurs");
  add_poly_flags(check, o);
  check->add_option("--group", o.group, "invariant factors, e.g. 3,12");
  auto* oracle = app.add_subcommand("oracle", "enumerate F-stable lattices and compare");
  add_poly_flags(oracle, o);
  auto* witness = app.add_subcommand("witness", "matrix of 1 - F realizing an exponent vector");
  add_poly_flags(witness, o);
  for (auto* cmd : {oracle, witness}) {
    cmd->add_option("--ell", o.ell, "prime");
    cmd->add_option("--depth", o.depth, "lattice depth (default ord f(1) + 1)")->check(CLI::NonNegativeNumber);
  }
  oracle->add_flag("--allow-char-prime", o.allow_char_prime, "run the lattice model at ell | q");
  oracle->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  oracle->add_flag("--exhaustive", o.exhaustive, "do not split off scalar blocks");
  witness->add_option("--exponents", o.exponents, "sorted ell-exponents, e.g. 0,0,1,1");
  auto* corpus = app.add_subcommand("corpus", "run classification and oracle over a corpus file");
  corpus->add_option("--file", o.file, "corpus path");
  corpus->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  corpus->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }

  try {
    if (*classify) return cmd_classify(o);
    if (*groups) return cmd_groups(o);
    if (*check) return cmd_check(o);
    if (*oracle) return cmd_oracle(o);
    if (*witness) return cmd_witness(o);
    return cmd_corpus(o);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: internal-invariant-violation: " << e.what() << '\n';
    return kInternal;
  }
}
