#include "mocktheta/cli.hpp"

#include "mocktheta/special_series.hpp"
#include "mocktheta/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace mocktheta {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Flags = std::map<std::string, std::string>;

const std::string& need(const Flags& f, const std::string& key) {
  auto it = f.find(key);
  if (it == f.end() || it->second.empty()) throw UsageError("missing --" + key);
  return it->second;
}

std::string get(const Flags& f, const std::string& key, const std::string& dflt) {
  auto it = f.find(key);
  return it == f.end() || it->second.empty() ? dflt : it->second;
}

HalfInt hi(const Flags& f, const std::string& key) { return HalfInt::parse(need(f, key)); }
HalfInt hi(const Flags& f, const std::string& key, const std::string& dflt) { return HalfInt::parse(get(f, key, dflt)); }
QExp rat(const Flags& f, const std::string& key, const std::string& dflt) { return parse_rational(get(f, key, dflt)); }

long integer(const Flags& f, const std::string& key) {
  QExp q = parse_rational(need(f, key));
  if (q.get_den() != 1) throw ParamDomain("--" + key + " must be an integer");
  return q.get_num().get_si();
}

Sign sign_of(const Flags& f) { return parse_sign(get(f, "sign", "plus")); }

PhiPart part_of(const Flags& f) {
  const std::string p = get(f, "part", "full");
  if (p == "1" || p == "one") return PhiPart::one;
  if (p == "2" || p == "two") return PhiPart::two;
  if (p == "full") return PhiPart::full;
  throw ParamDomain("--part must be 1, 2 or full");
}

BracketPhase phase_of(const std::string& s) {
  if (s == "j") return BracketPhase::minus_one_pow_j;
  if (s == "r") return BracketPhase::minus_one_pow_r;
  if (s == "plus") return BracketPhase::plus;
  throw ParamDomain("--phase must be j, r or plus");
}

BracketVariant variant_of(const std::string& s) {
  if (s == "half_open") return BracketVariant::half_open;
  if (s == "closed") return BracketVariant::closed;
  if (s == "shifted") return BracketVariant::shifted;
  throw ParamDomain("--variant must be half_open, closed or shifted");
}

FormalSeries expand(const Flags& f) {
  const std::string fn = need(f, "fn");
  const QExp order = parse_rational(need(f, "order"));
  if (sgn(order) <= 0) throw ParamDomain("--order must be positive");
  if (fn == "eta") return eta_series(rat(f, "scale", "1"), order);
  if (fn == "theta0") return theta_nullwert_series(hi(f, "j"), hi(f, "m"), sign_of(f), order);
  if (fn == "g") return g_series(GFamilyIndex(int(integer(f, "i")), hi(f, "m"), integer(f, "p"), hi(f, "k")), order);
  if (fn == "gtilde") return gtilde_series(int(integer(f, "n")), order);
  if (fn == "bracket") {
    BracketSumSpec spec{rat(f, "alpha", "1"), rat(f, "c", "0"), rat(f, "beta", "1"), rat(f, "d", "0"),
                        phase_of(get(f, "phase", "plus")), variant_of(get(f, "variant", "half_open"))};
    return bracket_sum_series(spec, order);
  }
  throw UsageError("unknown --fn for expand: " + fn);
}

cplx cflag(const Flags& f, const std::string& key) { return parse_complex(get(f, key, "0")); }

RArgument r_argument(const Flags& f, cplx tau) {
  const HalfInt j = hi(f, "j"), m = hi(f, "m");
  if (f.count("a") || f.count("b")) return RArgument::exact(j, m, rat(f, "a", "0"), rat(f, "b", "0"), tau);
  return RArgument::generic(j, m, parse_complex(need(f, "w")));
}

cplx evaluate(const Flags& f) {
  const std::string fn = need(f, "fn");
  const cplx tau = parse_complex(need(f, "tau"));
  const cplx z1 = f.count("z") ? cflag(f, "z") : cflag(f, "z1");
  const EvalPoint pt(tau, z1, cflag(f, "z2"), cflag(f, "t"));
  NumericParams np;
  if (f.count("max-terms")) np.max_terms = integer(f, "max-terms");
  np.validate();
  if (fn == "theta") return theta_num(sign_of(f), hi(f, "j"), hi(f, "m"), tau, z1, np);
  if (fn == "eta") return eta_num(rat(f, "scale", "1"), tau);
  if (fn == "phi") return phi_num(sign_of(f), hi(f, "m"), hi(f, "s", "1/2"), part_of(f), pt, np);
  if (fn == "phiadd") return phi_add_num(sign_of(f), hi(f, "m"), hi(f, "s", "1/2"), part_of(f), pt, np);
  if (fn == "phitilde") return phi_tilde_num(sign_of(f), hi(f, "m"), hi(f, "s", "1/2"), part_of(f), pt, np);
  if (fn == "R") return r_num(sign_of(f), r_argument(f, tau), tau, np);
  if (fn == "P" || fn == "Q") {
    const long width = f.count("width") ? integer(f, "width") : 30;
    return fn == "P" ? p_num(sign_of(f), r_argument(f, tau), tau, width) : q_num(sign_of(f), r_argument(f, tau), tau, width);
  }
  const int i = int(integer(f, "i"));
  if (fn == "psi") return psi_num(i, hi(f, "m"), tau, z1, np);
  const long p = integer(f, "p");
  if (fn == "xi") return xi_num(i, hi(f, "m"), p, tau, z1, np);
  if (fn == "upsilon") return upsilon_num(i, hi(f, "m"), p, tau, z1, np);
  if (fn == "G") return G_num(i, hi(f, "m"), p, tau, z1, np);
  throw UsageError("unknown --fn for eval: " + fn);
}

int exit_code(Outcome o) { return o == Outcome::pass ? 0 : (o == Outcome::fail ? 1 : 3); }

void write_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    os << text;
    if (!os.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot read config file " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

const char* const kParamKeys[] = {"m", "s", "p", "j", "k", "a", "b", "i"};

}  // namespace

cplx parse_complex(const std::string& text) {
  static const std::regex full(R"(\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*)");
  static const std::regex imag_only(R"(\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*)");
  std::smatch mt;
  if (std::regex_match(text, mt, imag_only)) {
    const double v = mt[2].matched ? std::stod(mt[2].str()) : 1.0;
    return {0.0, mt[1].str() == "-" ? -v : v};
  }
  if (!text.empty() && std::regex_match(text, mt, full) && (mt[1].matched || mt[2].matched)) {
    const double re = mt[1].matched ? std::stod(mt[1].str()) : 0.0;
    double im = 0.0;
    if (mt[2].matched) {
      im = mt[3].matched ? std::stod(mt[3].str()) : 1.0;
      if (mt[2].str() == "-") im = -im;
    }
    return {re, im};
  }
  throw ParamDomain("not a complex number: '" + text + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"mock theta toolkit: exact q-series, numeric evaluators and identity checks", "mocktheta"};
  app.require_subcommand(1);
  Flags flags;
  bool json_out = false;

  auto flag = [&](CLI::App* sub, const std::string& key, const std::string& help) {
    sub->add_option("--" + key, flags[key], help);
  };

  auto* ex = app.add_subcommand("expand", "exact q-expansion of a series");
  for (auto k : {"fn", "order", "scale", "j", "m", "sign", "i", "p", "k", "n", "alpha", "c", "beta", "d", "phase", "variant"})
    flag(ex, k, "");
  ex->add_flag("--json", json_out, "emit the canonical JSON encoding");

  auto* ev = app.add_subcommand("eval", "numeric evaluation at a point");
  for (auto k : {"fn", "tau", "z", "z1", "z2", "t", "w", "a", "b", "sign", "j", "m", "s", "part", "i", "p", "scale", "width",
                 "max-terms"})
    flag(ev, k, "");
  ev->add_flag("--json", json_out, "emit JSON");

  auto* ck = app.add_subcommand("check", "run one registered identity check");
  for (auto k : {"name", "order", "tol", "tau", "z", "z2"}) flag(ck, k, "");
  for (auto k : kParamKeys) flag(ck, k, "comma-separated list allowed");
  ck->add_flag("--json", json_out, "emit the result as JSON");

  std::string config_path, out_path;
  auto* su = app.add_subcommand("suite", "run the verification suite");
  su->add_option("--config", config_path, "SuiteConfig JSON file (default: $MOCKTHETA_SUITE_CONFIG)");
  su->add_option("--out", out_path, "write the report here (.json for JSON, otherwise markdown)");
  su->add_flag("--json", json_out, "print the JSON report instead of markdown");

  auto* ls = app.add_subcommand("list", "list registered checks");
  ls->add_flag("--json", json_out, "emit JSON");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }
  for (auto it = flags.begin(); it != flags.end();) it = it->second.empty() ? flags.erase(it) : std::next(it);

  try {
    if (ex->parsed()) {
      const FormalSeries s = expand(flags);
      out << (json_out ? series_to_json(s, 2) : series_to_text(s, 40)) << "\n";
      return 0;
    }
    if (ev->parsed()) {
      const cplx v = evaluate(flags);
      if (json_out) {
        nlohmann::json j{{"fn", flags["fn"]}, {"value", {{"re", v.real()}, {"im", v.imag()}}}, {"modulus", std::abs(v)}};
        out << j.dump(2) << "\n";
      } else {
        std::ostringstream os;
        os.precision(15);
        os << v.real() << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i  |value| = " << std::abs(v);
        out << os.str() << "\n";
      }
      return 0;
    }
    if (ck->parsed()) {
      CheckSpec spec;
      spec.name = need(flags, "name");
      for (auto k : kParamKeys)
        if (flags.count(k)) spec.params[k] = flags[k];
      if (flags.count("order")) spec.order = parse_rational(flags["order"]);
      if (flags.count("tol")) spec.tolerance = std::stod(flags["tol"]);
      if (flags.count("tau")) spec.points.emplace_back(parse_complex(flags["tau"]), cflag(flags, "z"), cflag(flags, "z2"));
      const CheckResult r = run_check(spec);
      if (json_out) {
        out << result_to_json(r, 2) << "\n";
      } else {
        out << r.name << " " << to_string(r.outcome) << " residual=" << r.residual;
        if (r.kind == CheckKind::numeric) out << " tol=" << r.tolerance;
        out << " comparisons=" << r.comparisons;
        if (!r.worst.empty() && !r.pass) out << " worst=[" << r.worst << "]";
        for (const auto& d : r.differences) out << "\n  differs: " << d;
        if (!r.detail.empty()) out << "\n  " << r.detail;
        out << "\n";
      }
      return exit_code(r.outcome);
    }
    if (su->parsed()) {
      if (config_path.empty())
        if (const char* env = std::getenv("MOCKTHETA_SUITE_CONFIG")) config_path = env;
      const SuiteConfig cfg = config_path.empty() ? SuiteConfig{} : SuiteConfig::from_json(read_file(config_path));
      const SuiteReport rep = run_suite(cfg);
      out << (json_out ? rep.to_json() : rep.to_markdown()) << "\n";
      if (!out_path.empty()) {
        const bool as_json = std::filesystem::path(out_path).extension() == ".json";
        write_atomic(out_path, as_json ? rep.to_json() : rep.to_markdown());
      }
      return rep.errors ? 3 : (rep.failed ? 1 : 0);
    }
    if (ls->parsed()) {
      if (json_out) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : list_checks())
          arr.push_back({{"name", c.name},
                         {"kind", to_string(c.kind)},
                         {"citation", c.citation},
                         {"defaults", c.defaults},
                         {"tolerance", c.kind == CheckKind::symbolic ? nlohmann::json("exact") : nlohmann::json(c.tolerance)}});
        out << arr.dump(2) << "\n";
      } else {
        for (const auto& c : list_checks()) out << c.name << "\t" << to_string(c.kind) << "\t" << c.citation << "\n";
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParamDomain& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return 2;
  } catch (const UnknownCheck& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace mocktheta
