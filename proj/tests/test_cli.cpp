#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "fratio/decide.hpp"
#include "fratio/errors.hpp"
#include "fratio/bezout.hpp"
#include "fratio/landau.hpp"
#include "fratio/monodromy.hpp"
#include "test_support.hpp"

using namespace fratio;
using nlohmann::ordered_json;
using testsupport::chebyshev_gamma;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kChebyshev = "30:1;15:-1;10:-1;6:-1;1:1";

}  // namespace

TEST_CASE("gamma parsing") {
  CHECK(cli::parse_gamma("30:1;15:-1;10:-1;6:-1;1:1") == chebyshev_gamma());
  CHECK((cli::parse_gamma(" 2 : 1 ; 1 : -2 ") == GammaVector{{2, 1}, {1, -2}}));
  CHECK_THROWS_AS(cli::parse_gamma("2:1;2:1"), Error);   // duplicate nu
  CHECK_THROWS_AS(cli::parse_gamma("2:0"), Error);       // zero exponent
  CHECK_THROWS_AS(cli::parse_gamma("0:1"), Error);       // bad support
  CHECK_THROWS_AS(cli::parse_gamma("2;1"), Error);       // missing colon
  CHECK_THROWS_AS(cli::parse_gamma("a:b"), Error);
  CHECK_THROWS_AS(cli::parse_gamma(""), Error);
  CHECK(cli::format_gamma(chebyshev_gamma()) == "1:1;6:-1;10:-1;15:-1;30:1");
  CHECK(cli::format_gamma(GammaVector{}) == "0");
}

TEST_CASE("decide subcommand on the chebyshev vector") {
  CliResult r = invoke({"decide", kChebyshev});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("verdict: ALGEBRAIC") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("check rejects non-regular input with exit 2") {
  CliResult r = invoke({"check", "1:1"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.out.empty());
  CHECK(r.err.find("not regular") != std::string::npos);
}

TEST_CASE("term subcommand prints exact rationals") {
  CliResult r = invoke({"term", "1:2;2:-1", "--n", "1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("1/2") != std::string::npos);
  CHECK(r.out.find("denominator: 2") != std::string::npos);

  CliResult big = invoke({"term", kChebyshev, "--n", "3", "--json"});
  CHECK(big.code == cli::kExitOk);
  ordered_json doc = ordered_json::parse(big.out);
  Rational expected = term(chebyshev_gamma(), 3);
  CHECK(doc["value"].get<std::string>() == expected.get_str());
}

TEST_CASE("json output round-trips byte-identically") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"decide", kChebyshev, "--json"},
        std::vector<std::string>{"check", kChebyshev, "--json"},
        std::vector<std::string>{"landau", "2:1;1:-2", "--json"},
        std::vector<std::string>{"params", kChebyshev, "--json"},
        std::vector<std::string>{"bezout", "2:1;1:-2", "--json"},
        std::vector<std::string>{"monodromy", "2:1;1:-2", "--json"},
        std::vector<std::string>{"search", "--max-nu", "4", "--max-support",
                                 "3", "--max-exp", "2", "--json"}}) {
    CliResult r = invoke(args);
    REQUIRE(r.code == cli::kExitOk);
    ordered_json doc = ordered_json::parse(r.out);
    CHECK(doc.dump() + "\n" == r.out);
  }
}

TEST_CASE("decide json carries the stable report schema") {
  CliResult r = invoke({"decide", kChebyshev, "--json"});
  REQUIRE(r.code == cli::kExitOk);
  ordered_json doc = ordered_json::parse(r.out);

  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  CHECK((keys == std::vector<std::string>{"regular", "d", "integral",
                                         "interlacing", "algebraic", "r",
                                         "witness", "alpha", "beta", "M"}));

  AlgebraicityReport report = decide_algebraic(chebyshev_gamma());
  CHECK(doc["regular"].get<bool>() == report.regular);
  CHECK(doc["d"].get<std::string>() == std::to_string(report.d));
  CHECK(doc["integral"].get<bool>() == report.integral);
  CHECK(doc["interlacing"].get<bool>() == report.interlacing);
  CHECK(doc["algebraic"].get<bool>() == report.algebraic);
  CHECK(doc["r"].get<std::string>() == std::to_string(report.r));
  CHECK(doc["witness"].is_null());
  CHECK(doc["alpha"].size() == report.params.alpha.size());
  for (size_t i = 0; i < report.params.alpha.size(); ++i) {
    CHECK(doc["alpha"][i].get<std::string>() ==
          report.params.alpha[i].get_str());
  }
  CHECK(doc["M"].get<std::string>() == report.params.scale.get_str());
}

TEST_CASE("witness appears in json for non-algebraic vectors") {
  CliResult r = invoke({"decide", "1:2;2:-1", "--json"});
  REQUIRE(r.code == cli::kExitOk);
  ordered_json doc = ordered_json::parse(r.out);
  CHECK_FALSE(doc["algebraic"].get<bool>());
  CHECK(doc["witness"]["type"].get<std::string>() == "negative_breakpoint");
  CHECK(doc["witness"]["breakpoint"].get<std::string>() == "1/2");
  CHECK(doc["witness"]["value"].get<std::string>() == "-1");
}

TEST_CASE("check json matches the landau profile") {
  CliResult r = invoke({"check", kChebyshev, "--json"});
  REQUIRE(r.code == cli::kExitOk);
  ordered_json doc = ordered_json::parse(r.out);
  LandauProfile profile = landau_profile(chebyshev_gamma());
  CHECK(doc["d"].get<std::string>() == std::to_string(profile.d));
  CHECK(doc["min_value"].get<std::string>() ==
        std::to_string(profile.min_value));
  CHECK(doc["max_value"].get<std::string>() ==
        std::to_string(profile.max_value));
  CHECK(doc["integral"].get<bool>());
}

TEST_CASE("gamma can come from a file") {
  std::string compact_path = "cli_gamma_compact.txt";
  {
    std::ofstream f(compact_path);
    f << "2:1;1:-2\n";
  }
  CliResult r = invoke({"check", "--file", compact_path});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("integral: yes") != std::string::npos);

  std::string json_path = "cli_gamma_pairs.json";
  {
    std::ofstream f(json_path);
    f << "[[30, 1], [15, -1], [10, -1], [6, -1], [1, 1]]\n";
  }
  CliResult rj = invoke({"decide", "--file", json_path, "--json"});
  CHECK(rj.code == cli::kExitOk);
  ordered_json doc = ordered_json::parse(rj.out);
  CHECK(doc["algebraic"].get<bool>());

  std::string dup_path = "cli_gamma_dup.json";
  {
    std::ofstream f(dup_path);
    f << "[[2, 1], [2, 1]]\n";
  }
  CHECK(invoke({"check", "--file", dup_path}).code == cli::kExitUsage);

  CHECK(invoke({"check", "2:1;1:-2", "--file", compact_path}).code ==
        cli::kExitUsage);
  CHECK(invoke({"check", "--file", "no_such_file.txt"}).code ==
        cli::kExitUsage);

  std::remove(compact_path.c_str());
  std::remove(json_path.c_str());
  std::remove(dup_path.c_str());
}

TEST_CASE("quiet suppresses stdout") {
  CliResult r = invoke({"decide", kChebyshev, "--quiet"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.empty());

  CliResult bad = invoke({"check", "1:1", "--quiet"});
  CHECK(bad.code == cli::kExitUsage);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("zero gamma and malformed flags exit 2") {
  CHECK(invoke({"decide", "2:1;2:-1"}).code == cli::kExitUsage);  // duplicate
  CHECK(invoke({"params", "1:1"}).code == cli::kExitUsage);       // irregular
  CHECK(invoke({"term", "2:1;1:-2"}).code == cli::kExitUsage);    // missing --n
  CHECK(invoke({"unknown-subcommand"}).code == cli::kExitUsage);
  CHECK(invoke({}).code == cli::kExitUsage);
}

TEST_CASE("help exits zero") {
  CliResult r = invoke({"--help"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("decide") != std::string::npos);
}

TEST_CASE("search subcommand output is deterministic") {
  std::vector<std::string> args{"search", "--max-nu", "6", "--max-support",
                                "3",      "--max-exp", "2"};
  CliResult a = invoke(args);
  CliResult b = invoke(args);
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out == b.out);

  std::vector<std::string> jargs = args;
  jargs.push_back("--jobs");
  jargs.push_back("3");
  CliResult c = invoke(jargs);
  CHECK(c.out == a.out);
}

TEST_CASE("subcommands are thin wrappers over the library") {
  // The CLI must report exactly what the library computes.
  GammaVector g = chebyshev_gamma();
  HypergeometricParams pr = gamma_to_params(g);
  auto [p, q] = params_to_polynomials(pr);

  ordered_json params_doc =
      ordered_json::parse(invoke({"params", kChebyshev, "--json"}).out);
  CHECK(params_doc["r"].get<std::string>() == std::to_string(pr.r));
  CHECK(params_doc["M"].get<std::string>() == pr.scale.get_str());
  REQUIRE(params_doc["alpha"].size() == pr.alpha.size());
  REQUIRE(params_doc["beta"].size() == pr.beta.size());
  for (size_t i = 0; i < pr.alpha.size(); ++i) {
    CHECK(params_doc["alpha"][i].get<std::string>() == pr.alpha[i].get_str());
    CHECK(params_doc["beta"][i].get<std::string>() == pr.beta[i].get_str());
  }
  REQUIRE(int(params_doc["p"].size()) == p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) {
    CHECK(params_doc["p"][size_t(i)].get<std::string>() ==
          p.coeff(i).get_str());
    CHECK(params_doc["q"][size_t(i)].get<std::string>() ==
          q.coeff(i).get_str());
  }

  ordered_json bez_doc =
      ordered_json::parse(invoke({"bezout", kChebyshev, "--json"}).out);
  SymmetricIntMatrix bez = bezoutian(p, q);
  Inertia in = inertia(bez);
  CHECK(bez_doc["det"].get<std::string>() == determinant(bez).get_str());
  CHECK(bez_doc["resultant"].get<std::string>() == resultant(p, q).get_str());
  CHECK(bez_doc["inertia"]["n_plus"].get<std::string>() ==
        std::to_string(in.n_plus));
  CHECK(bez_doc["winding_degree"].get<std::string>() ==
        std::to_string(winding_degree(p, q)));
  REQUIRE(int(bez_doc["bezoutian"].size()) == bez.size());
  for (int i = 0; i < bez.size(); ++i) {
    for (int j = 0; j < bez.size(); ++j) {
      CHECK(bez_doc["bezoutian"][size_t(i)][size_t(j)].get<std::string>() ==
            bez.at(i, j).get_str());
    }
  }

  ordered_json mono_doc =
      ordered_json::parse(invoke({"monodromy", kChebyshev, "--json"}).out);
  CompanionPair pair = build_monodromy(pr);
  REQUIRE(int(mono_doc["A"].size()) == pair.A.rows());
  for (int i = 0; i < pair.A.rows(); ++i) {
    for (int j = 0; j < pair.A.cols(); ++j) {
      CHECK(mono_doc["A"][size_t(i)][size_t(j)].get<std::string>() ==
            pair.A.at(i, j).get_str());
      CHECK(mono_doc["sigma"][size_t(i)][size_t(j)].get<std::string>() ==
            pair.sigma.at(i, j).get_str());
    }
  }
}

TEST_CASE("search height cap flag") {
  CliResult capped = invoke({"search", "--max-nu", "6", "--max-support", "3",
                             "--max-exp", "2", "--height", "8", "--json"});
  REQUIRE(capped.code == cli::kExitOk);
  ordered_json doc = ordered_json::parse(capped.out);
  for (const auto& hit : doc) {
    CHECK(std::stoll(hit["height"].get<std::string>()) <= 8);
  }
}

TEST_CASE("landau table lists every block") {
  CliResult r = invoke({"landau", "2:1;1:-2", "--table"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("breakpoint") != std::string::npos);
  CHECK(r.out.find("1/2") != std::string::npos);
}

TEST_CASE("monodromy subcommand reports orders") {
  CliResult r = invoke({"monodromy", kChebyshev, "--json"});
  REQUIRE(r.code == cli::kExitOk);
  ordered_json doc = ordered_json::parse(r.out);
  CHECK(doc["order_A"].get<std::string>() == "30");
  CHECK(doc["order_B"].get<std::string>() == "30");
  CHECK(doc["eigenvalue_one"]["algebraic_multiplicity"].get<std::string>() ==
        "1");

  CliResult u = invoke({"monodromy", "2:2;1:-4", "--cap", "200", "--json"});
  REQUIRE(u.code == cli::kExitOk);
  ordered_json udoc = ordered_json::parse(u.out);
  CHECK(udoc["order_B"].get<std::string>() == "unbounded");
}
