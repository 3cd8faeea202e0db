// Batch front-end for the U_5 slope computations on 5-adic overconvergent
// modular forms of level 25.
//
// Exit codes: 0 success, 1 mathematical failure, 2 precision shortfall,
// 64 usage error.

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include "u5slopes/dims.hpp"
#include "u5slopes/errors.hpp"
#include "u5slopes/modforms.hpp"
#include "u5slopes/reports.hpp"
#include "u5slopes/slopes.hpp"
#include "u5slopes/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitPrecision = 2;
constexpr int kExitUsage = 64;

struct Output {
  std::string path;  // empty = stdout
  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text << "\n";
      return;
    }
    std::ofstream os(path, std::ios::app);
    os << text << "\n";
  }
};

int parse_char_exponent(const std::string& name) {
  // accepted form: a=<exponent> with exponent odd, prime to 5, in [1, 19]
  if (name.rfind("a=", 0) != 0) throw u5s::domain_error("character must be given as a=<exponent>");
  int a = std::stoi(name.substr(2));
  if (a < 1 || a >= 20 || a % 2 == 0 || a % 5 == 0)
    throw u5s::domain_error("exponent " + std::to_string(a) +
                            " is not an odd primitive conductor-25 character");
  return a;
}

struct CommonOpts {
  unsigned digits = 32;
  int n = 30;
  int window_override = 0;
  std::string char_name;
  bool all_chars = false;
  int t = 0;
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_char) {
  cmd->add_option("--digits", opts.digits, "5-adic precision digits (8..100)")
      ->check(CLI::Range(8u, 100u));
  cmd->add_option("--n", opts.n, "matrix truncation size")->check(CLI::Range(1, 60));
  cmd->add_option("--window", opts.window_override, "q-expansion window override");
  if (with_char) {
    cmd->add_option("--char", opts.char_name, "character, e.g. a=1");
    cmd->add_flag("--all", opts.all_chars, "run all 8 odd primitive characters");
  }
  cmd->add_option("--t", opts.t, "weight offset: weight is 1+t")->check(CLI::Range(0, 40));
  cmd->add_option("--format", opts.format, "output format: json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", opts.out_path, "append output to this file instead of stdout");
}

int cmd_slopes(const CommonOpts& opts) {
  Output out{opts.out_path};
  std::vector<u5s::DirichletCharacter> chars;
  if (opts.all_chars) {
    chars = u5s::enumerate_odd_primitive_25();
  } else if (!opts.char_name.empty()) {
    chars.push_back({25, parse_char_exponent(opts.char_name)});
  } else {
    std::cerr << "slopes: give --char a=<e> or --all\n";
    return kExitUsage;
  }

  u5s::SlopeSweep sweep(opts.n, opts.digits);
  std::vector<std::future<u5s::SlopeReport>> futures;
  for (const auto& chi : chars)
    futures.push_back(std::async(std::launch::async, [&sweep, chi, &opts] {
      return sweep.run(chi, u5s::tau_designated(), opts.t);
    }));

  bool all_match = true;
  for (auto& fut : futures) {
    u5s::SlopeReport rep = fut.get();
    if (!rep.formula_match) all_match = false;
    if (opts.format == "csv")
      out.emit(u5s::slopes_csv(rep));
    else if (opts.format == "text") {
      std::ostringstream os;
      os << "char a=" << rep.params.char_exponent << " class " << u5s::class_name(rep.cls)
         << " t=" << rep.params.t << " certified=" << rep.certified << " slopes:";
      for (int i = 0; i < rep.certified; ++i) os << " " << rep.slopes[static_cast<std::size_t>(i)].str();
      out.emit(os.str());
    } else {
      out.emit(u5s::to_json(rep));
    }
  }
  return all_match ? kExitOk : kExitFail;
}

int cmd_valtable(const CommonOpts& opts, const std::string& cls_name) {
  Output out{opts.out_path};
  std::vector<u5s::DirichletCharacter> chars;
  if (!opts.char_name.empty()) {
    chars.push_back({25, parse_char_exponent(opts.char_name)});
  } else if (cls_name == "f1") {
    chars.push_back({25, 3});
  } else if (cls_name == "f2") {
    chars.push_back({25, 1});
  } else {
    std::cerr << "valtable: give --char a=<e> or --class f1|f2\n";
    return kExitUsage;
  }
  u5s::PrecisionContext ctx(opts.digits);
  u5s::Workspace ws = u5s::make_workspace(ctx, 5);
  bool pass = true;
  for (const auto& chi : chars) {
    u5s::ValTableReport rep = u5s::build_valtable(ws, chi);
    if (!rep.pass) pass = false;
    out.emit(opts.format == "json" ? u5s::to_json(rep) : u5s::to_csv(rep));
  }
  return pass ? kExitOk : kExitFail;
}

int cmd_verify(const std::string& what, const CommonOpts& opts) {
  Output out{opts.out_path};
  u5s::PrecisionContext ctx(opts.digits);
  std::ostringstream os;
  if (what == "phi20") {
    u5s::Phi20Factorization fac = u5s::factor_phi20(ctx);
    os << "phi20: f1 = x^4+2x^3+4x^2+3x+1 mod 5, f2 = x^4+3x^3+4x^2+2x+1 mod 5, ";
    static constexpr int r1[5] = {1, 3, 4, 2, 1};
    static constexpr int r2[5] = {1, 2, 4, 3, 1};
    for (int i = 0; i < 5; ++i) {
      if (ctx.mod5(fac.f1[static_cast<std::size_t>(i)].coeff(0).a) != r1[i] ||
          ctx.mod5(fac.f2[static_cast<std::size_t>(i)].coeff(0).a) != r2[i]) {
        out.emit("phi20: residue mismatch");
        return kExitFail;
      }
    }
    os << "lift exact at " << ctx.digits() << " digits: pass";
    out.emit(os.str());
    return kExitOk;
  }
  if (what == "rat-fns") {
    int window = opts.window_override > 0 ? opts.window_override : 200;
    u5s::RatFnsReport rep = u5s::verify_rat_fns(ctx, window);
    os << "rat-fns: window " << window << ": " << (rep.pass ? "pass" : "fail");
    if (!rep.pass) os << " (first bad exponent " << rep.first_bad_exponent << ")";
    out.emit(os.str());
    return rep.pass ? kExitOk : kExitFail;
  }
  if (what == "t5-congruence") {
    int window = opts.window_override > 0 ? opts.window_override : 150;
    u5s::T5CongruenceReport rep = u5s::verify_t5_congruence(ctx, window);
    os << "t5-congruence: v(U5(T^5) - T) >= 1 over q-window " << window << ": "
       << (rep.pass ? "pass" : "fail") << " (min " << rep.min_val.str() << ")";
    out.emit(os.str());
    return rep.pass ? kExitOk : kExitFail;
  }
  if (what == "mult" || what == "uv") {
    u5s::RingBasics basics = u5s::RingBasics::make(ctx);
    u5s::MultiplierReport rep = u5s::verify_multiplier(basics, 60);
    os << "mult: canonical identity "
       << "(1+5T+5(2+I)T^2)/(1+(2+I)T+(2+I)T^2): "
       << (rep.canonical_exact ? "exact" : "FAILED") << "; printed form matched by tau with tau(2)="
       << (rep.matched_tau_exponent == 1 ? "I" : rep.matched_tau_exponent == 3 ? "-I" : "none")
       << " up to unit mu = " << rep.mu_decimal << " on the fractional part"
       << "; valuations coefficientwise: " << (rep.printed_valuations_match ? "match" : "differ")
       << "; v(2+I) = v(3-I) = 1: " << (rep.v2i_ok ? "pass" : "fail");
    out.emit(os.str());
    bool ok = rep.canonical_exact && rep.printed_proportional && rep.v2i_ok &&
              rep.matched_tau_exponent == 1 && rep.printed_valuations_match;
    return ok ? kExitOk : kExitFail;
  }
  if (what == "congruence-patterns") {
    u5s::Workspace ws = u5s::make_workspace(ctx, 5);
    bool pass = true;
    for (int exp : {1, 3}) {
      u5s::CongruencePatternReport rep = u5s::verify_congruence_patterns(ws, {25, exp});
      os.str("");
      os << "congruence-patterns a=" << exp << ":";
      for (std::size_t j = 0; j < rep.min_rows.size(); ++j) {
        os << " col" << (j + 1) << "{";
        for (std::size_t k = 0; k < rep.min_rows[j].size(); ++k)
          os << (k ? "," : "") << rep.min_rows[j][k];
        os << "}@" << rep.min_vals[j].str();
      }
      os << " u5t5{";
      for (std::size_t k = 0; k < rep.u5t5_min_rows.size(); ++k)
        os << (k ? "," : "") << rep.u5t5_min_rows[k];
      os << "} " << (rep.pass ? "pass" : "fail");
      out.emit(os.str());
      if (!rep.pass) pass = false;
    }
    return pass ? kExitOk : kExitFail;
  }
  std::cerr << "verify: unknown identity '" << what
            << "' (use rat-fns | mult | uv | t5-congruence | phi20 | congruence-patterns)\n";
  return kExitUsage;
}

int cmd_serre(const CommonOpts& opts, int m_max) {
  Output out{opts.out_path};
  int exponent = opts.char_name.empty() ? 1 : parse_char_exponent(opts.char_name);
  u5s::PrecisionContext ctx(opts.digits);
  int n = std::max(opts.n, m_max);
  u5s::Workspace ws = u5s::make_workspace(ctx, n);
  u5s::DirichletCharacter chi{25, exponent};
  u5s::ColumnSet cols = u5s::build_column_set(ws, chi, n);
  u5s::UMatrix m = u5s::assemble(ws, cols, u5s::tau_designated(), opts.t, n);
  u5s::CharacterClass cls = u5s::classify(chi, ws.phi, ws.basics);
  u5s::SerreReport rep = u5s::serre_audit(m, cls, m_max);
  out.emit(u5s::to_json(rep, chi.name()));
  return rep.pass_a && rep.pass_b ? kExitOk : kExitFail;
}

int cmd_classify(const CommonOpts& opts) {
  Output out{opts.out_path};
  u5s::ClassifyReport rep = u5s::build_classify_report(std::min(opts.n, 12), opts.digits);
  out.emit(u5s::to_json(rep));
  return rep.pass ? kExitOk : kExitFail;
}

int cmd_dims(const CommonOpts& opts, int k) {
  Output out{opts.out_path};
  int exponent = opts.char_name.empty() ? 1 : parse_char_exponent(opts.char_name);
  u5s::PrecisionContext ctx(opts.digits);
  u5s::RingBasics basics = u5s::RingBasics::make(ctx);
  u5s::Phi20Factorization fac = u5s::factor_phi20(ctx);
  u5s::DirichletCharacter chi{25, exponent};
  if (k % 2 == 0) {
    u5s::DimResult r = u5s::cohen_oesterle_dim(k, u5s::char_product(chi, u5s::tau_designated(), k - 1),
                                               basics);
    if (!r.integral) {
      out.emit("{\"k\":" + std::to_string(k) + ",\"char\":\"" + chi.name() +
               "\",\"diagnostic\":\"" + r.diagnostic + "\"}");
      return kExitFail;
    }
  }
  u5s::ClassicalSlopeList rep = u5s::classical_slope_list(k, chi, basics, fac);
  out.emit(u5s::to_json(rep));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slopes of the U_5 operator on 5-adic overconvergent modular forms of level 25"};
  app.require_subcommand(1);

  CommonOpts opts;

  auto* slopes = app.add_subcommand("slopes", "certified slope sequences");
  add_common(slopes, opts, true);

  auto* valtable = app.add_subcommand("valtable", "column valuation tables vs golden copies");
  std::string cls_name;
  add_common(valtable, opts, true);
  valtable->add_option("--class", cls_name, "character class f1 | f2");

  auto* verify = app.add_subcommand("verify", "verify a named identity");
  std::string what;
  verify->add_option("identity", what, "rat-fns | mult | uv | t5-congruence | phi20 | congruence-patterns")
      ->required();
  add_common(verify, opts, false);

  auto* serre = app.add_subcommand("serre", "Serre criterion audit");
  int m_max = 20;
  add_common(serre, opts, true);
  serre->add_option("--m", m_max, "audit conditions up to this block size")->check(CLI::Range(1, 40));

  auto* classify = app.add_subcommand("classify", "factor/slope correlation for all 8 characters");
  add_common(classify, opts, false);

  auto* dims = app.add_subcommand("dims", "classical dimensions and slope lists");
  int k = 3;
  add_common(dims, opts, true);
  dims->add_option("--k", k, "classical weight")->check(CLI::Range(2, 60));

  CLI11_PARSE(app, argc, argv);

  try {
    if (slopes->parsed()) return cmd_slopes(opts);
    if (valtable->parsed()) return cmd_valtable(opts, cls_name);
    if (verify->parsed()) return cmd_verify(what, opts);
    if (serre->parsed()) return cmd_serre(opts, m_max);
    if (classify->parsed()) return cmd_classify(opts);
    if (dims->parsed()) return cmd_dims(opts, k);
  } catch (const u5s::precision_error& e) {
    std::cerr << "precision: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const u5s::domain_error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const u5s::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
