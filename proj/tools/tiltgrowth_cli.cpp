#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "tiltgrowth/asymptotics.hpp"
#include "tiltgrowth/char_oracle.hpp"
#include "tiltgrowth/fourier.hpp"
#include "tiltgrowth/fractal.hpp"
#include "tiltgrowth/sequences.hpp"

using namespace tiltgrowth;

namespace {

constexpr int EXIT_PROPERTY = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_RESOURCE = 3;

std::string real_str(const Real& x) {
  return x.str(static_cast<int>(precision()));
}

int parse_p(const std::string& s) {
  if (s == "inf") return P_INFINITY;
  int p = std::stoi(s);
  require_prime(p, "--p");
  return p;
}

int run_seq(const std::string& kind, const std::string& p_str, int n_max,
            const std::string& format) {
  int p = parse_p(p_str);
  BigSequence s;
  if (kind == "b") {
    s = b_seq(p, n_max);
  } else if (kind == "l") {
    if (p == P_INFINITY) s = b_char_zero(n_max);
    else s = l_product(p, n_max);
  } else if (kind == "cantor") {
    if (p == P_INFINITY) throw std::invalid_argument("cantor: finite p required");
    s = cantor_seq(p, n_max);
  } else if (kind == "dimL") {
    if (p == P_INFINITY) throw std::invalid_argument("dimL: finite p required");
    s.p = p;
    s.kind = SeqKind::dimL;
    for (int n = 0; n <= n_max; ++n) s.values.push_back(dim_simple(p, n));
  } else {
    throw CLI::ValidationError("seq", "unknown kind: " + kind);
  }
  if (format == "csv") {
    std::cout << "n,value\n";
    for (int n = 0; n <= n_max; ++n)
      std::cout << n << "," << s.values[n].str() << "\n";
  } else {
    nlohmann::json j;
    j["schema"] = 1;
    j["p"] = (p == P_INFINITY) ? nlohmann::json("inf") : nlohmann::json(p);
    j["kind"] = kind;
    nlohmann::json vals = nlohmann::json::array();
    const Int safe = (Int(1) << 53);
    for (const Int& v : s.values) {
      if (v < safe)
        vals.push_back(v.convert_to<long long>());
      else
        vals.push_back(v.str());
    }
    j["values"] = std::move(vals);
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int run_verify(const std::string& p_str, int n_max, int oracle_max) {
  int p = parse_p(p_str);
  if (p == P_INFINITY)
    throw std::invalid_argument("verify: finite prime p required");
  bool ok = true;
  auto report = [&](const std::string& name, bool pass,
                    const std::string& detail = "") {
    std::cout << name << ": " << (pass ? "pass" : "FAIL")
              << (detail.empty() ? "" : " (" + detail + ")") << "\n";
    if (!pass) ok = false;
  };

  BigSequence b = b_seq(p, n_max);
  BigSequence l = l_product(p, n_max);

  {
    bool pass = true;
    std::string detail;
    for (int n = 0; n <= oracle_max; ++n) {
      if (oracle_b(p, n) != b.values[n] || oracle_l(p, n) != l.values[n]) {
        pass = false;
        detail = "first mismatch at n=" + std::to_string(n);
        break;
      }
    }
    report("oracle equivalence (n <= " + std::to_string(oracle_max) + ")", pass,
           detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (int n = 0; n + 2 <= n_max; ++n)
      if (b.values[n + 2] > 4 * b.values[n]) {
        pass = false;
        detail = "b_{n+2} > 4 b_n at n=" + std::to_string(n);
        break;
      }
    report("b_{n+2} <= 4 b_n", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (int n = 0; n + 1 <= n_max; ++n)
      if (b.values[n] > b.values[n + 1]) {
        pass = false;
        detail = "b not monotone at n=" + std::to_string(n);
        break;
      }
    report("b_n <= b_{n+1}", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (int n = 0; n + 2 <= n_max; ++n)
      if (4 * l.values[n] < l.values[n + 2]) {
        pass = false;
        detail = "4 l_n < l_{n+2} at n=" + std::to_string(n);
        break;
      }
    report("4 l_n >= l_{n+2}", pass, detail);
  }
  {
    bool pass = true;
    for (int n = 0; n <= n_max; ++n)
      if (b.values[n] > l.values[n]) pass = false;
    report("b_n <= l_n", pass);
  }
  if (p == 2) {
    bool pass = true;
    for (int n = 1; 2 * n <= n_max; ++n)
      if (b.values[2 * n - 1] != b.values[2 * n]) pass = false;
    for (int n = 0; 2 * n + 1 <= n_max; ++n)
      if (l.values[2 * n] != l.values[2 * n + 1]) pass = false;
    report("parity equalities (p=2)", pass);
    try {
      second_difference_c(std::max(0, n_max - 4));
      report("c_n = b_{n+4} - 8 b_{n+2} + 16 b_n >= 0", true);
    } catch (const property_violation_error& e) {
      report("c_n = b_{n+4} - 8 b_{n+2} + 16 b_n >= 0", false, e.what());
    }
  }
  try {
    gap_d(p, std::max(0, n_max - 2));
    report("d_n >= 0", true);
  } catch (const property_violation_error& e) {
    report("d_n >= 0", false, e.what());
  }
  std::cout << (ok ? "all properties passed" : "verification FAILED") << "\n";
  return ok ? 0 : EXIT_PROPERTY;
}

int run_asympt(const std::string& p_str, int n_max, const std::string& parity,
               bool quadruple) {
  int p = parse_p(p_str);
  if (p == P_INFINITY)
    throw std::invalid_argument("asympt: finite prime p required");
  if (quadruple) {
    if (p != 2) throw std::invalid_argument("--quadruple requires --p 2");
    auto rows = quadruple_ratio(n_max / 8);
    std::cout << "n,quadruple_ratio\n";
    for (const auto& [n, r] : rows) std::cout << n << "," << real_str(r) << "\n";
    return 0;
  }
  char par = parity.empty() ? 'a' : parity[0];
  RatioProfile prof = ratio_profile(p, n_max, par);
  std::cout << "n,ratio\n";
  for (const auto& [n, r] : prof.rows) std::cout << n << "," << real_str(r) << "\n";
  std::cout << "# min=" << real_str(prof.min) << " at n=" << prof.argmin
            << " max=" << real_str(prof.max) << " at n=" << prof.argmax << "\n";
  return 0;
}

int run_genfun(const std::string& p_str, const std::vector<double>& ws, int K) {
  int p = parse_p(p_str);
  if (p == P_INFINITY)
    throw std::invalid_argument("genfun: finite prime p required");
  std::cout << "w,F,residual,F0\n";
  for (double wd : ws) {
    if (!(wd > 0 && wd < 1))
      throw CLI::ValidationError("genfun", "w must lie in (0,1)");
    Real w(wd);
    FValue f = eval_F(p, w, K);
    Real res = functional_eq_residual(p, w, K);
    Real f0 = eval_F0(p, w);
    std::cout << wd << "," << real_str(f.value) << "," << real_str(res) << ","
              << real_str(f0) << "\n";
  }
  return 0;
}

int run_fourier(const std::string& p_str, const std::vector<int>& ns, int N,
                const std::string& nu_str, bool ratio) {
  int p = parse_p(p_str);
  if (p == P_INFINITY)
    throw std::invalid_argument("fourier: finite prime p required");
  bool both = (nu_str == "both");
  int nu = 0;
  if (!both && !nu_str.empty()) nu = std::stoi(nu_str);
  std::cout << "n,ReL,ImL,absL,S,Reh,Imh" << (both ? ",Reh_nu_p,Imh_nu_p" : "")
            << "\n";
  for (int n : ns) {
    FourierResult r = fourier_L(p, n, N, both ? 0 : nu);
    std::cout << n << "," << real_str(r.L.re) << "," << real_str(r.L.im) << ","
              << real_str(abs(r.L)) << "," << real_str(r.S_magnitude) << ","
              << real_str(r.h.re) << "," << real_str(r.h.im);
    if (both) {
      FourierResult rp = fourier_L(p, n, N, p);
      std::cout << "," << real_str(rp.h.re) << "," << real_str(rp.h.im);
    }
    std::cout << "\n";
    if (ratio) {
      Real denom = boost::multiprecision::pow(Real(3), N);
      std::cout << "# S/3^N=" << real_str(r.S_magnitude / denom) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tiltgrowth: growth sequences of SL2 tensor powers in characteristic p"};
  app.require_subcommand(1);

  unsigned prec = 60;
  app.add_option("--precision", prec, "working precision in decimal digits")
      ->envname("TILTGROWTH_PRECISION")
      ->default_val(60);

  std::string kind, p_str = "2", parity = "all", format = "csv", nu_str;
  int n_max = 30, oracle_max = 60, K = 40, N = 10;
  bool quadruple = false, ratio = false;
  std::vector<double> ws;
  std::vector<int> ns{0};

  auto* seq = app.add_subcommand("seq", "emit a sequence");
  seq->add_option("kind", kind, "b | l | cantor | dimL")->required();
  seq->add_option("--p", p_str, "prime or 'inf'");
  seq->add_option("--n", n_max, "largest index");
  seq->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_option("--p", p_str, "prime");
  verify->add_option("--n", n_max, "sequence range");
  verify->add_option("--oracle", oracle_max, "oracle cross-check range");

  auto* asympt = app.add_subcommand("asympt", "ratio profiles");
  asympt->add_option("--p", p_str, "prime");
  asympt->add_option("--n", n_max, "largest index");
  asympt->add_option("--parity", parity, "even | odd | all")
      ->check(CLI::IsMember({"even", "odd", "all"}));
  asympt->add_flag("--quadruple", quadruple, "emit a'_{4n}/a'_n instead (p=2)");

  auto* genfun = app.add_subcommand("genfun", "generating function diagnostics");
  genfun->add_option("--p", p_str, "prime");
  genfun->add_option("--w", ws, "evaluation points in (0,1)")
      ->required()
      ->delimiter(',');
  genfun->add_option("--K", K, "outer truncation of the explicit formula");

  auto* fourier = app.add_subcommand("fourier", "Fourier coefficients L_n");
  fourier->add_option("--p", p_str, "prime");
  fourier->add_option("--n", ns, "Fourier indices")->delimiter(',');
  fourier->add_option("--N", N, "digit-sum depth");
  fourier->add_option("--nu", nu_str, "Gamma-argument base (int or 'both')");
  fourier->add_flag("--ratio", ratio, "also print S/3^N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : EXIT_USAGE;
  }

  set_precision(prec);
  try {
    if (seq->parsed()) return run_seq(kind, p_str, n_max, format);
    if (verify->parsed()) return run_verify(p_str, n_max, oracle_max);
    if (asympt->parsed()) return run_asympt(p_str, n_max, parity, quadruple);
    if (genfun->parsed()) return run_genfun(p_str, ws, K);
    if (fourier->parsed()) return run_fourier(p_str, ns, N, nu_str, ratio);
  } catch (const resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return EXIT_RESOURCE;
  } catch (const property_violation_error& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return EXIT_PROPERTY;
  } catch (const not_in_cone_error& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return EXIT_PROPERTY;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return EXIT_USAGE;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return EXIT_USAGE;
  }
  return 0;
}
