#include "cli.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fratio/bezout.hpp"
#include "fratio/decide.hpp"
#include "fratio/errors.hpp"
#include "fratio/landau.hpp"
#include "fratio/monodromy.hpp"
#include "fratio/params.hpp"
#include "fratio/search.hpp"

namespace fratio::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

int64_t parse_int64(const std::string& text) {
  size_t used = 0;
  int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw Error("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw Error("not an integer: '" + text + "'");
  return value;
}

std::string rat(const Rational& x) { return x.get_str(); }
std::string big(const Integer& x) { return x.get_str(); }
std::string num(int64_t x) { return std::to_string(x); }

ordered_json angles_json(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const Rational& x : v) a.push_back(rat(x));
  return a;
}

ordered_json coeffs_json(const IntPolynomial& p) {
  ordered_json a = ordered_json::array();
  for (const Integer& c : p.coeffs()) a.push_back(big(c));
  return a;
}

ordered_json matrix_json(const RationalMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json symmetric_json(const SymmetricIntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(big(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string angles_human(const std::vector<Rational>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat(v[i]);
  }
  return s;
}

GammaVector load_gamma_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open gamma file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string contents = buffer.str();

  size_t first = contents.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error("gamma file is empty: " + path);

  if (contents[first] == '[') {
    ordered_json doc;
    try {
      doc = ordered_json::parse(contents);
    } catch (const std::exception& e) {
      throw Error(std::string("gamma file is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw Error("gamma file must hold a list of pairs");
    std::vector<GammaEntry> entries;
    std::set<int64_t> seen;
    for (const auto& item : doc) {
      if (!item.is_array() || item.size() != 2 ||
          !item[0].is_number_integer() || !item[1].is_number_integer()) {
        throw Error("gamma file entries must be [nu, gamma] integer pairs");
      }
      int64_t nu = item[0].get<int64_t>();
      int64_t exponent = item[1].get<int64_t>();
      if (nu < 1) throw Error("gamma support index must be >= 1");
      if (exponent == 0) throw Error("gamma exponent must be nonzero");
      if (!seen.insert(nu).second) {
        throw Error("duplicate support index " + num(nu) + " in gamma file");
      }
      entries.push_back({nu, exponent});
    }
    return GammaVector(std::move(entries));
  }
  return parse_gamma(contents);
}

GammaVector resolve_gamma(const std::string& inline_text,
                          const std::string& file) {
  if (!inline_text.empty() && !file.empty()) {
    throw Error("gamma given both inline and via --file");
  }
  if (inline_text.empty() && file.empty()) {
    throw Error("missing gamma: pass it inline or via --file");
  }
  return inline_text.empty() ? load_gamma_file(file) : parse_gamma(inline_text);
}

void emit(std::ostream& out, bool quiet, bool json, const ordered_json& doc,
          const std::string& human) {
  if (quiet) return;
  if (json) {
    out << doc.dump() << "\n";
  } else {
    out << human;
  }
}

ordered_json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  ordered_json doc;
  if (const auto* nb = std::get_if<NegativeBreakpoint>(&*w)) {
    doc["type"] = "negative_breakpoint";
    doc["breakpoint"] = rat(nb->breakpoint);
    doc["value"] = num(nb->value);
  } else if (const auto* na = std::get_if<NonAlternating>(&*w)) {
    doc["type"] = "non_alternating";
    doc["angle1"] = rat(na->angle1);
    doc["angle2"] = rat(na->angle2);
    doc["side"] = na->alpha_side ? "alpha" : "beta";
  } else if (const auto* ra = std::get_if<RepeatedAngle>(&*w)) {
    doc["type"] = "repeated_angle";
    doc["angle"] = rat(ra->angle);
  }
  return doc;
}

std::string witness_human(const Witness& w) {
  if (const auto* nb = std::get_if<NegativeBreakpoint>(&w)) {
    return "witness: L(" + rat(nb->breakpoint) + ") = " + num(nb->value) +
           " < 0";
  }
  if (const auto* na = std::get_if<NonAlternating>(&w)) {
    return "witness: angles " + rat(na->angle1) + " and " + rat(na->angle2) +
           " adjacent on " + (na->alpha_side ? "alpha" : "beta");
  }
  const auto& ra = std::get<RepeatedAngle>(w);
  return "witness: repeated angle " + rat(ra.angle);
}

std::string order_text(const std::optional<int64_t>& order) {
  return order ? num(*order) : "unbounded";
}

struct CommandContext {
  std::ostream& out;
  bool json = false;
  bool quiet = false;
};

void run_check(const CommandContext& ctx, const GammaVector& g) {
  if (!is_regular(g)) throw NotRegularError();
  LandauProfile profile = landau_profile(g);
  bool integral = profile.min_value >= 0;

  ordered_json doc;
  doc["regular"] = true;
  doc["d"] = num(profile.d);
  doc["integral"] = integral;
  doc["min_value"] = num(profile.min_value);
  doc["max_value"] = num(profile.max_value);

  std::ostringstream human;
  human << "gamma: " << format_gamma(g) << "\n"
        << "regular: yes\n"
        << "d: " << profile.d << "\n"
        << "integral: " << (integral ? "yes" : "no") << "\n"
        << "landau min: " << profile.min_value << "\n"
        << "landau max: " << profile.max_value << "\n";
  emit(ctx.out, ctx.quiet, ctx.json, doc, human.str());
}

void run_term(const CommandContext& ctx, const GammaVector& g, uint64_t n) {
  Rational u = term(g, n);
  ordered_json doc;
  doc["n"] = std::to_string(n);
  doc["value"] = rat(u);

  std::ostringstream human;
  human << "u_" << n << " = " << rat(u) << "\n";
  if (!is_integer(u)) {
    human << "denominator: " << big(Integer(u.get_den())) << "\n";
  }
  emit(ctx.out, ctx.quiet, ctx.json, doc, human.str());
}

void run_landau(const CommandContext& ctx, const GammaVector& g, bool table) {
  LandauProfile profile = landau_profile(g);

  ordered_json doc;
  ordered_json breakpoints = ordered_json::array();
  ordered_json values = ordered_json::array();
  for (size_t i = 0; i < profile.breakpoints.size(); ++i) {
    breakpoints.push_back(rat(profile.breakpoints[i]));
    values.push_back(num(profile.values[i]));
  }
  doc["breakpoints"] = std::move(breakpoints);
  doc["values"] = std::move(values);
  doc["d"] = num(profile.d);
  doc["min_value"] = num(profile.min_value);
  doc["max_value"] = num(profile.max_value);

  std::ostringstream human;
  human << "gamma: " << format_gamma(g) << "\n"
        << "d: " << profile.d << "\n"
        << "blocks: " << profile.breakpoints.size() << "\n"
        << "min: " << profile.min_value << "\n"
        << "max: " << profile.max_value << "\n";
  if (table) {
    human << "breakpoint  value\n";
    for (size_t i = 0; i < profile.breakpoints.size(); ++i) {
      human << rat(profile.breakpoints[i]) << "  " << profile.values[i]
            << "\n";
    }
  }
  emit(ctx.out, ctx.quiet, ctx.json, doc, human.str());
}

void run_params(const CommandContext& ctx, const GammaVector& g) {
  HypergeometricParams pr = gamma_to_params(g);
  auto [p, q] = params_to_polynomials(pr);

  ordered_json doc;
  doc["alpha"] = angles_json(pr.alpha);
  doc["beta"] = angles_json(pr.beta);
  doc["r"] = num(pr.r);
  doc["M"] = rat(pr.scale);
  doc["p"] = coeffs_json(p);
  doc["q"] = coeffs_json(q);

  std::ostringstream human;
  human << "gamma: " << format_gamma(g) << "\n"
        << "alpha: " << angles_human(pr.alpha) << "\n"
        << "beta: " << angles_human(pr.beta) << "\n"
        << "r: " << pr.r << "\n"
        << "M: " << rat(pr.scale) << "\n"
        << "p(t) = " << p.to_string() << "\n"
        << "q(t) = " << q.to_string() << "\n";
  emit(ctx.out, ctx.quiet, ctx.json, doc, human.str());
}

void run_bezout(const CommandContext& ctx, const GammaVector& g) {
  HypergeometricParams pr = gamma_to_params(g);
  auto [p, q] = params_to_polynomials(pr);
  SymmetricIntMatrix bez = bezoutian(p, q);
  Integer det = determinant(bez);
  Integer res = resultant(p, q);
  Inertia in = inertia(bez);
  int64_t winding = winding_degree(p, q);

  ordered_json doc;
  doc["p"] = coeffs_json(p);
  doc["q"] = coeffs_json(q);
  doc["bezoutian"] = symmetric_json(bez);
  doc["det"] = big(det);
  doc["resultant"] = big(res);
  doc["inertia"] = ordered_json{{"n_plus", num(in.n_plus)},
                                {"n_minus", num(in.n_minus)},
                                {"n_zero", num(in.n_zero)}};
  doc["winding_degree"] = num(winding);

  std::ostringstream human;
  human << "gamma: " << format_gamma(g) << "\n"
        << "p(t) = " << p.to_string() << "\n"
        << "q(t) = " << q.to_string() << "\n"
        << "bezoutian (" << bez.size() << "x" << bez.size() << "):\n";
  for (int i = 0; i < bez.size(); ++i) {
    human << "  ";
    for (int j = 0; j < bez.size(); ++j) {
      human << big(bez.at(i, j)) << (j + 1 < bez.size() ? " " : "");
    }
    human << "\n";
  }
  human << "det: " << big(det) << "\n"
        << "resultant: " << big(res) << "\n"
        << "inertia: (" << in.n_plus << ", " << in.n_minus << ", "
        << in.n_zero << ")\n"
        << "winding degree: " << winding << "\n";
  emit(ctx.out, ctx.quiet, ctx.json, doc, human.str());
}

void run_monodromy(const CommandContext& ctx, const GammaVector& g,
                   int64_t cap) {
  HypergeometricParams pr = gamma_to_params(g);
  CompanionPair pair = build_monodromy(pr);
  EigenvalueOneStructure eig = eigenvalue_one_structure(pair.B);
  std::optional<int64_t> order_a = element_order(pair.A, cap);
  std::optional<int64_t> order_b = element_order(pair.B, cap);

  ordered_json doc;
  doc["r"] = num(pair.r);
  doc["A"] = matrix_json(pair.A);
  doc["B"] = matrix_json(pair.B);
  doc["sigma"] = matrix_json(pair.sigma);
  doc["eigenvalue_one"] =
      ordered_json{{"algebraic_multiplicity", num(eig.algebraic_multiplicity)},
                   {"largest_jordan_block", num(eig.largest_jordan_block)}};
  doc["order_cap"] = num(cap);
  doc["order_A"] = order_text(order_a);
  doc["order_B"] = order_text(order_b);

  auto print_matrix = [](std::ostringstream& s, const RationalMatrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
      s << "  ";
      for (int j = 0; j < m.cols(); ++j) {
        s << rat(m.at(i, j)) << (j + 1 < m.cols() ? " " : "");
      }
      s << "\n";
    }
  };
  std::ostringstream human;
  human << "gamma: " << format_gamma(g) << "\n"
        << "r: " << pair.r << "\n";
  human << "A (monodromy at infinity):\n";
  print_matrix(human, pair.A);
  human << "B (monodromy at 0):\n";
  print_matrix(human, pair.B);
  human << "sigma (monodromy at 1):\n";
  print_matrix(human, pair.sigma);
  human << "eigenvalue 1 of B: multiplicity " << eig.algebraic_multiplicity
        << ", largest jordan block " << eig.largest_jordan_block << "\n"
        << "order of A (cap " << cap << "): " << order_text(order_a) << "\n"
        << "order of B (cap " << cap << "): " << order_text(order_b) << "\n";
  emit(ctx.out, ctx.quiet, ctx.json, doc, human.str());
}

void run_decide(const CommandContext& ctx, const GammaVector& g) {
  AlgebraicityReport report = decide_algebraic(g);

  ordered_json doc;
  doc["regular"] = report.regular;
  doc["d"] = num(report.d);
  doc["integral"] = report.integral;
  doc["interlacing"] = report.interlacing;
  doc["algebraic"] = report.algebraic;
  doc["r"] = num(report.r);
  doc["witness"] = witness_json(report.witness);
  doc["alpha"] = angles_json(report.params.alpha);
  doc["beta"] = angles_json(report.params.beta);
  doc["M"] = rat(report.params.scale);

  std::ostringstream human;
  human << "gamma: " << format_gamma(g) << "\n"
        << "verdict: " << (report.algebraic ? "ALGEBRAIC" : "NOT ALGEBRAIC")
        << "\n"
        << "regular: yes\n"
        << "d: " << report.d << "\n"
        << "integral: " << (report.integral ? "yes" : "no") << "\n"
        << "interlacing: " << (report.interlacing ? "yes" : "no") << "\n"
        << "r: " << report.r << "\n";
  if (report.witness) human << witness_human(*report.witness) << "\n";
  emit(ctx.out, ctx.quiet, ctx.json, doc, human.str());
}

void run_search(const CommandContext& ctx, const SearchBounds& bounds,
                int jobs) {
  std::vector<SearchHit> hits = enumerate_integral(bounds, jobs);

  ordered_json doc = ordered_json::array();
  for (const SearchHit& h : hits) {
    ordered_json item;
    item["gamma"] = format_gamma(h.gamma);
    item["d"] = num(h.d);
    item["r"] = num(h.r);
    item["height"] = num(h.height);
    item["algebraic"] = h.algebraic;
    doc.push_back(std::move(item));
  }

  std::ostringstream human;
  for (const SearchHit& h : hits) {
    human << format_gamma(h.gamma) << "  d=" << h.d << " r=" << h.r
          << " height=" << h.height << "\n";
  }
  human << "hits: " << hits.size() << "\n";
  emit(ctx.out, ctx.quiet, ctx.json, doc, human.str());
}

}  // namespace

GammaVector parse_gamma(const std::string& text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw Error("empty gamma");

  std::vector<GammaEntry> entries;
  std::set<int64_t> seen;
  size_t pos = 0;
  while (pos < compact.size() || entries.empty()) {
    size_t semi = compact.find(';', pos);
    std::string item = semi == std::string::npos
                           ? compact.substr(pos)
                           : compact.substr(pos, semi - pos);
    if (item.empty()) throw Error("empty gamma entry");
    size_t colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error("gamma entry must look like nu:gamma, got '" + item + "'");
    }
    int64_t nu = parse_int64(item.substr(0, colon));
    int64_t exponent = parse_int64(item.substr(colon + 1));
    if (nu < 1) throw Error("gamma support index must be >= 1");
    if (exponent == 0) throw Error("gamma exponent must be nonzero");
    if (!seen.insert(nu).second) {
      throw Error("duplicate support index " + num(nu));
    }
    entries.push_back({nu, exponent});
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return GammaVector(std::move(entries));
}

std::string format_gamma(const GammaVector& g) {
  std::string s;
  for (const auto& e : g.entries()) {
    if (!s.empty()) s += ";";
    s += num(e.nu) + ":" + num(e.exponent);
  }
  return s.empty() ? "0" : s;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact toolkit for factorial-ratio sequences and their "
               "generating series"};
  app.name("fratio");

  bool json = false;
  bool quiet = false;
  app.add_flag("--json", json, "emit machine-readable JSON");
  app.add_flag("--quiet", quiet, "suppress normal output");
  app.require_subcommand(1);

  struct GammaArgs {
    std::string inline_text;
    std::string file;
  };
  auto add_gamma = [](CLI::App* cmd, GammaArgs& dst) {
    cmd->add_option("gamma", dst.inline_text,
                    "gamma vector as nu:gamma;nu:gamma");
    cmd->add_option("--file", dst.file,
                    "file with a JSON pair list or the compact form");
  };

  GammaArgs check_args, term_args, landau_args, params_args, bezout_args,
      monodromy_args, decide_args;
  uint64_t term_n = 0;
  bool landau_table = false;
  int64_t monodromy_cap = 10000;
  SearchBounds bounds;
  int64_t height_cap = 0;
  int jobs = 1;

  CLI::App* check = app.add_subcommand(
      "check", "regularity, dimension and integrality summary");
  check->fallthrough();
  add_gamma(check, check_args);

  CLI::App* term_cmd =
      app.add_subcommand("term", "exact value of a single term u_n");
  term_cmd->fallthrough();
  add_gamma(term_cmd, term_args);
  term_cmd->add_option("--n", term_n, "term index")->required();

  CLI::App* landau =
      app.add_subcommand("landau", "landau step-function profile");
  landau->fallthrough();
  add_gamma(landau, landau_args);
  landau->add_flag("--table", landau_table, "print the full block table");

  CLI::App* params = app.add_subcommand(
      "params", "hypergeometric angles and characteristic polynomials");
  params->fallthrough();
  add_gamma(params, params_args);

  CLI::App* bezout = app.add_subcommand(
      "bezout", "bezoutian form, resultant, inertia and winding degree");
  bezout->fallthrough();
  add_gamma(bezout, bezout_args);

  CLI::App* monodromy = app.add_subcommand(
      "monodromy", "companion realization of the monodromy generators");
  monodromy->fallthrough();
  add_gamma(monodromy, monodromy_args);
  monodromy->add_option("--cap", monodromy_cap,
                        "upper bound for element-order detection");

  CLI::App* decide = app.add_subcommand(
      "decide", "full algebraicity decision with witness");
  decide->fallthrough();
  add_gamma(decide, decide_args);

  CLI::App* search = app.add_subcommand(
      "search", "enumerate integral dimension-1 vectors within bounds");
  search->fallthrough();
  search->add_option("--max-nu", bounds.max_nu, "largest support index")
      ->required();
  search->add_option("--max-support", bounds.max_support,
                     "largest support size")
      ->required();
  search->add_option("--max-exp", bounds.max_exponent,
                     "largest |gamma| exponent")
      ->required();
  search->add_option("--height", height_cap,
                     "cap on the height sum nu * |gamma|");
  search->add_option("--jobs", jobs, "worker threads for the support scan");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("fratio");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());

    CommandContext ctx{out, json, quiet};
    if (check->parsed()) {
      run_check(ctx, resolve_gamma(check_args.inline_text, check_args.file));
    } else if (term_cmd->parsed()) {
      run_term(ctx, resolve_gamma(term_args.inline_text, term_args.file),
               term_n);
    } else if (landau->parsed()) {
      run_landau(ctx, resolve_gamma(landau_args.inline_text, landau_args.file),
                 landau_table);
    } else if (params->parsed()) {
      run_params(ctx, resolve_gamma(params_args.inline_text, params_args.file));
    } else if (bezout->parsed()) {
      run_bezout(ctx, resolve_gamma(bezout_args.inline_text, bezout_args.file));
    } else if (monodromy->parsed()) {
      if (monodromy_cap < 1) throw Error("--cap must be >= 1");
      run_monodromy(
          ctx, resolve_gamma(monodromy_args.inline_text, monodromy_args.file),
          monodromy_cap);
    } else if (decide->parsed()) {
      run_decide(ctx, resolve_gamma(decide_args.inline_text, decide_args.file));
    } else if (search->parsed()) {
      if (jobs < 1) throw Error("--jobs must be >= 1");
      if (search->count("--height") > 0) bounds.height_cap = height_cap;
      run_search(ctx, bounds, jobs);
    }
    return kExitOk;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TheoremViolationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace fratio::cli
