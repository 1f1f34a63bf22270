// Command-line front end: regularity checks, fixed-point listings, period
// formula assembly, Weyl double-coset sets, the finite-field Grassmannian
// oracle, and Whittaker normalizations.  All output is deterministic byte-wise
// for fixed inputs (independent of --threads).
//
// Exit codes: 0 success, 1 domain error (JSON diagnostic on stderr), 2 usage.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "lperiod/errors.hpp"
#include "lperiod/fixed_points.hpp"
#include "lperiod/grassmannian_oracle.hpp"
#include "lperiod/json_io.hpp"
#include "lperiod/period_formula.hpp"
#include "lperiod/weyl.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace lperiod;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("io", "cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(cur, &used));
      if (used != cur.size()) throw std::invalid_argument(cur);
    } catch (const std::exception&) {
      throw DomainError("schema", "bad integer '" + cur + "' in " + flag, flag);
    }
  }
  if (out.empty()) throw DomainError("schema", "empty list for " + flag, flag);
  return out;
}

Json one_based(const std::vector<int>& v) {
  Json arr = Json::array();
  for (int x : v) arr.push_back(x + 1);
  return arr;
}

Json fixed_point_json(const FixedPoint& fp) {
  return Json{{"I", one_based(fp.subset)}, {"t", fp.split}, {"sigma", one_based(fp.sigma)}};
}

std::string subset_str(const std::vector<int>& v) {
  std::string out = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i] + 1);
  }
  return out + "}";
}

// --- Subcommand bodies --------------------------------------------------------

int run_check_regularity(const std::string& input, const std::string& format) {
  CuspidalDatum datum = datum_from_json_text(read_file(input));
  auto violation = first_regularity_violation(datum);
  bool even = is_even(datum);
  if (format == "table") {
    std::cout << "regular: " << (violation ? "no" : "yes") << "\n";
    std::cout << "even:    " << (even ? "yes" : "no") << "\n";
    if (violation)
      std::cout << "violation: I=" << subset_str(violation->subset) << " blocks " << violation->i + 1
                << " and " << violation->j + 1 << " share label '" << datum.label(violation->i)
                << "'\n";
    return 0;
  }
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["regular"] = !violation.has_value();
  j["even"] = even;
  if (violation) {
    j["violation"] = Json{{"I", one_based(violation->subset)},
                          {"i", violation->i + 1},
                          {"j", violation->j + 1},
                          {"label", datum.label(violation->i)}};
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_fix_points(const std::string& input, const std::string& format) {
  CuspidalDatum datum = datum_from_json_text(read_file(input));
  std::vector<FixedPoint> fps = enumerate_fix(datum);
  MatchReport match = fix_matches_weyl(datum);
  if (!match.ok)
    throw DomainError("precondition", "fixed-point/Weyl cross-check failed: " + match.detail);
  if (format == "table") {
    std::cout << "count: " << fps.size() << "\n";
    for (const FixedPoint& fp : fps) {
      std::cout << "I=" << subset_str(fp.subset) << " t=" << fp.split << " sigma=(";
      for (size_t i = 0; i < fp.sigma.size(); ++i)
        std::cout << (i ? "," : "") << fp.sigma[i] + 1;
      std::cout << ")\n";
    }
    return 0;
  }
  std::cout << Json::parse(fixed_points_to_json_text(datum, fps)).dump(2) << "\n";
  return 0;
}

int run_formula(const std::string& input, const std::string& format, const std::string& s_tag,
                bool equal_rank, const std::string& phi_tag) {
  CuspidalDatum datum = datum_from_json_text(read_file(input));
  PeriodFormula formula = equal_rank ? assemble_equal_rank(datum, s_tag, phi_tag)
                                     : assemble_period(datum, s_tag);
  if (format == "latex") {
    std::cout << emit(formula, EmitFormat::latex) << "\n";
    return 0;
  }
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["regular"] = check_regularity(datum);
  j["equal_rank"] = formula.equal_rank;
  j["s_tag"] = formula.s_tag;
  if (formula.equal_rank) j["phi_tag"] = formula.phi_tag;
  j["vanishing_reason"] = to_string(formula.reason);
  j["expr"] = Json::parse(expr_to_json_text(formula.expr));
  Json terms = Json::array();
  for (const PeriodTerm& term : formula.terms)
    terms.push_back(Json{{"fixed_point", fixed_point_json(term.fp)},
                         {"expr", Json::parse(expr_to_json_text(term.expr))}});
  j["terms"] = std::move(terms);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_weyl(const std::string& p_str, const std::string& q_str, const std::string& set,
             const std::string& format) {
  Composition P(parse_int_list(p_str, "--p"));
  Composition Q(parse_int_list(q_str, "--q"));

  if (set == "associate") {
    bool assoc = are_associate(P, Q);
    if (format == "table")
      std::cout << "associate: " << (assoc ? "yes" : "no") << "\n";
    else
      std::cout << Json{{"schema_version", kSchemaVersion}, {"associate", assoc}}.dump(2) << "\n";
    return 0;
  }

  std::vector<WeylElement> elements;
  std::vector<BlockPermutation> bps;
  if (set == "min-reps") {
    elements = enumerate_min_reps(P, Q);
  } else if (set == "levi-embed") {
    elements = w_p_semicolon_q(P, Q);
  } else {
    bps = w_p_q(P, Q);
    for (const BlockPermutation& bp : bps) elements.push_back(bp.underlying);
  }

  if (format == "table") {
    std::cout << "count: " << elements.size() << "\n";
    for (size_t i = 0; i < elements.size(); ++i) {
      std::cout << "(";
      for (size_t j = 0; j < elements[i].perm.size(); ++j)
        std::cout << (j ? "," : "") << elements[i].perm[j] + 1;
      std::cout << ")";
      if (!bps.empty()) {
        std::cout << "  sigma=(";
        for (size_t j = 0; j < bps[i].sigma.size(); ++j)
          std::cout << (j ? "," : "") << bps[i].sigma[j] + 1;
        std::cout << ")";
      }
      std::cout << "\n";
    }
    return 0;
  }

  Json j;
  j["schema_version"] = kSchemaVersion;
  j["p"] = P.parts();
  j["q"] = Q.parts();
  j["set"] = set;
  j["count"] = elements.size();
  Json arr = Json::array();
  for (size_t i = 0; i < elements.size(); ++i) {
    Json e;
    e["perm"] = one_based(elements[i].perm);
    if (!bps.empty()) e["sigma"] = one_based(bps[i].sigma);
    arr.push_back(std::move(e));
  }
  j["elements"] = std::move(arr);
  std::cout << j.dump(2) << "\n";
  return 0;
}

Json matrix_json(const FqMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_oracle(const std::string& input, const std::string& q_str, int threads, int q_max,
               bool list_splittings, const std::string& format) {
  RepSpec spec = rep_spec_from_json_text(read_file(input));
  std::vector<int> q_list;
  if (!q_str.empty())
    q_list = parse_int_list(q_str, "--q");
  else if (spec.default_q > 0)
    q_list.push_back(spec.default_q);
  else
    throw DomainError("schema", "no q given: pass --q or put \"q\" in the input document", "q");

  OracleOptions opts;
  opts.threads = threads;
  opts.q_max = q_max;

  FinitenessReport report = check_finiteness_criterion(spec, q_list, opts);

  if (format == "table") {
    std::cout << "multiplicity-free cuts: " << (report.condition_holds ? "yes" : "no") << "\n";
    std::cout << "balanced subsets:       " << report.subset_count << "\n";
    for (const FinitenessRun& run : report.runs)
      std::cout << "q=" << run.q << ": " << run.count << " invariant splittings\n";
    std::cout << "branch: " << report.branch << "\n";
    std::cout << "verdict: " << (report.pass ? "PASS" : "FAIL") << "\n";
    return report.pass ? 0 : 1;
  }

  Json j = Json::parse(finiteness_report_to_json_text(spec, report));
  if (list_splittings) {
    Json& runs = j["runs"];
    for (size_t i = 0; i < q_list.size(); ++i) {
      FqMatrixRep rep = FqMatrixRep::materialize(spec, q_list[i]);
      Json arr = Json::array();
      for (const InvariantSplitting& s : enumerate_splittings(rep, spec.n, opts))
        arr.push_back(Json{{"v", matrix_json(s.v_basis)}, {"w", matrix_json(s.w_basis)}});
      runs.at(i)["splittings"] = std::move(arr);
    }
  }
  std::cout << j.dump(2) << "\n";
  return report.pass ? 0 : 1;
}

int run_whittaker(const std::string& input, const std::string& format, const std::string& s_tag) {
  CuspidalDatum datum = datum_from_json_text(read_file(input));
  LExpr expr = whittaker_normalization(datum, s_tag);
  if (format == "latex") {
    std::cout << expr_to_latex(expr) << "\n";
    return 0;
  }
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["vanishes"] = expr.is_zero();
  j["expr"] = Json::parse(expr_to_json_text(expr));
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic engine for period identities of parabolic Eisenstein inductions"};
  app.require_subcommand(1);

  std::string input, format = "json", s_tag = "S", phi_tag = "Phi";
  std::string p_str, q_str, set = "min-reps", oracle_q;
  int threads = 1, q_max = 7;
  bool equal_rank = false, list_splittings = false;

  auto* reg = app.add_subcommand("check-regularity", "Decide the regularity condition of a datum");
  reg->add_option("--input", input, "cuspidal datum JSON file")->required();
  reg->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  auto* fix = app.add_subcommand("fix-points", "Enumerate the fixed points of a datum");
  fix->add_option("--input", input, "cuspidal datum JSON file")->required();
  fix->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  auto* formula = app.add_subcommand("formula", "Assemble the period identity right-hand side");
  formula->add_option("--input", input, "cuspidal datum JSON file")->required();
  formula->add_option("--format", format)->check(CLI::IsMember({"json", "latex"}));
  formula->add_option("--s-tag", s_tag, "place-set tag (default S)");
  formula->add_flag("--equal-rank", equal_rank, "use the equal-rank assembly (needs m = 0)");
  formula->add_option("--phi-tag", phi_tag, "Schwartz tag for --equal-rank (default Phi)");

  auto* weyl = app.add_subcommand("weyl", "Double-coset representative sets of two compositions");
  weyl->add_option("--p", p_str, "source composition, e.g. 2,1")->required();
  weyl->add_option("--q", q_str, "target composition, e.g. 1,2")->required();
  weyl->add_option("--set", set)
      ->check(CLI::IsMember({"min-reps", "levi-embed", "levi-match", "associate"}));
  weyl->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  auto* oracle = app.add_subcommand("oracle", "Finite-field fixed-point finiteness verification");
  oracle->add_option("--input", input, "representation spec JSON file")->required();
  oracle->add_option("--q", oracle_q, "comma-separated list of primes (default: q from the file)");
  oracle->add_option("--threads", threads, "worker threads (output is thread-count independent)")
      ->check(CLI::Range(1, 16));
  oracle->add_option("--q-max", q_max, "raise the default cap q <= 7");
  oracle->add_flag("--list-splittings", list_splittings, "include the invariant splittings");
  oracle->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  auto* whittaker = app.add_subcommand("whittaker", "Whittaker-coefficient normalization");
  whittaker->add_option("--input", input, "cuspidal datum JSON file")->required();
  whittaker->add_option("--format", format)->check(CLI::IsMember({"json", "latex"}));
  whittaker->add_option("--s-tag", s_tag, "place-set tag (default S)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*reg) return run_check_regularity(input, format);
    if (*fix) return run_fix_points(input, format);
    if (*formula) return run_formula(input, format, s_tag, equal_rank, phi_tag);
    if (*weyl) return run_weyl(p_str, q_str, set, format);
    if (*oracle) return run_oracle(input, oracle_q, threads, q_max, list_splittings, format);
    if (*whittaker) return run_whittaker(input, format, s_tag);
  } catch (const DomainError& e) {
    Json err;
    err["error"] = Json{{"code", e.code()}, {"message", e.what()}, {"field", e.field()}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = Json{{"code", "internal"}, {"message", e.what()}, {"field", ""}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 2;
}
