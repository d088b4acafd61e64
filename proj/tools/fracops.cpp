// fracops: command-line front end for the fractional-operator library.
//
// Subcommands:
//   eval    apply one operator to a spec'd function at points
//   verify  run a named verification suite
//   mellin  emit (t, |m|) rows for a multiplier on the critical line
//   norms   emit the zero-order norm table (closed form vs Plancherel sup)
//   table   emit complex multiplier values on a vertical line
//
// Exit codes: 0 ok, 1 failed verification, 2 config error, 3 numerical error.

#include <complex>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fracops/bessel_frac.hpp"
#include "fracops/buschman_erdelyi.hpp"
#include "fracops/classical.hpp"
#include "fracops/errors.hpp"
#include "fracops/funcmodel.hpp"
#include "fracops/mellin.hpp"
#include "fracops/verify.hpp"

namespace {

using namespace fracops;
using funcmodel::FunctionHandle;
using quadrature::QuadratureConfig;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

struct OpSpec {
  std::string name;
  std::map<std::string, std::string> kv;
};

OpSpec parse_op_spec(const std::string& spec) {
  OpSpec op;
  const auto colon = spec.find(':');
  op.name = spec.substr(0, colon);
  if (colon != std::string::npos) {
    for (const auto& item : split(spec.substr(colon + 1), ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw ConfigError("operator spec: expected key=value, got '" + item +
                          "'");
      op.kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  return op;
}

double num(const OpSpec& op, const std::string& key) {
  auto it = op.kv.find(key);
  if (it == op.kv.end())
    throw ConfigError("operator '" + op.name + "' needs parameter '" + key +
                      "'");
  try {
    size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("operator '" + op.name + "': bad number for '" + key +
                      "'");
  }
}

double num_or(const OpSpec& op, const std::string& key, double fallback) {
  return op.kv.count(key) ? num(op, key) : fallback;
}

std::string str_or(const OpSpec& op, const std::string& key,
                   const std::string& fallback) {
  auto it = op.kv.find(key);
  return it == op.kv.end() ? fallback : it->second;
}

be::ZeroOrderKind parse_kind(const std::string& s) {
  if (s == "s0plus") return be::ZeroOrderKind::S0plus;
  if (s == "p0plus") return be::ZeroOrderKind::P0plus;
  if (s == "sminus") return be::ZeroOrderKind::Sminus;
  if (s == "pminus") return be::ZeroOrderKind::Pminus;
  throw ConfigError("unknown zero-order kind '" + s + "'");
}

// Binds an operator spec to an evaluator (function, x) -> value.  The
// spec is validated fully here, before any computation.
std::function<double(const FunctionHandle&, double)> bind_operator(
    const OpSpec& op, const QuadratureConfig& cfg) {
  const std::string& n = op.name;
  if (n == "rl-left") {
    const double a = num_or(op, "a", 0.0), alpha = num(op, "alpha");
    return [=](const FunctionHandle& f, double x) {
      return classical::rl_integral_left(f, a, alpha, x, cfg);
    };
  }
  if (n == "rl-right") {
    const double b = num(op, "b"), alpha = num(op, "alpha");
    return [=](const FunctionHandle& f, double x) {
      return classical::rl_integral_right(f, b, alpha, x, cfg);
    };
  }
  if (n == "rld-left") {
    const double a = num_or(op, "a", 0.0), alpha = num(op, "alpha");
    return [=](const FunctionHandle& f, double x) {
      return classical::rl_derivative_left(f, a, alpha, x, cfg);
    };
  }
  if (n == "rld-right") {
    const double b = num(op, "b"), alpha = num(op, "alpha");
    return [=](const FunctionHandle& f, double x) {
      return classical::rl_derivative_right(f, b, alpha, x, cfg);
    };
  }
  if (n == "liouville-left") {
    const double alpha = num(op, "alpha");
    return [=](const FunctionHandle& f, double x) {
      return classical::liouville_left(f, alpha, x, cfg);
    };
  }
  if (n == "liouville-right") {
    const double alpha = num(op, "alpha");
    return [=](const FunctionHandle& f, double x) {
      return classical::liouville_right(f, alpha, x, cfg);
    };
  }
  if (n == "ek-left") {
    const double alpha = num(op, "alpha"), y = num_or(op, "y", 0.0);
    const int nn = int(num_or(op, "n", 1.0));
    return [=](const FunctionHandle& f, double x) {
      return classical::erdelyi_kober_left(f, alpha, y, x, cfg, nn);
    };
  }
  if (n == "ek-right") {
    const double alpha = num(op, "alpha"), y = num_or(op, "y", 0.0);
    return [=](const FunctionHandle& f, double x) {
      return classical::erdelyi_kober_right(f, alpha, y, x, cfg);
    };
  }
  if (n == "fracg-left") {
    const double alpha = num(op, "alpha"), lo = num_or(op, "lo", 0.0);
    const std::string g = str_or(op, "g", "id");
    FunctionHandle weight;
    if (g == "id") weight = classical::identity_weight();
    else if (g == "sq") weight = classical::square_weight();
    else if (g == "ln") weight = classical::log_weight();
    else throw ConfigError("fracg-left: unknown weight '" + g + "'");
    return [=](const FunctionHandle& f, double x) {
      return classical::frac_by_function_left(f, weight, alpha, x, lo, cfg);
    };
  }
  if (n == "hadamard") {
    const double alpha = num(op, "alpha"), lo = num_or(op, "lo", 1.0);
    return [=](const FunctionHandle& f, double x) {
      return classical::hadamard_left(f, alpha, x, lo, cfg);
    };
  }
  if (n == "gerasimov") {
    const double alpha = num(op, "alpha");
    return [=](const FunctionHandle& f, double x) {
      return classical::gerasimov_derivative(f, alpha, x, cfg);
    };
  }
  if (n == "gc") {
    const double alpha = num(op, "alpha");
    const int nn = int(num_or(op, "n", std::floor(alpha) + 1.0));
    return [=](const FunctionHandle& f, double x) {
      return classical::gerasimov_caputo(f, alpha, x, nn, cfg);
    };
  }
  if (n == "dn") {
    auto it = op.kv.find("g");
    if (it == op.kv.end()) throw ConfigError("dn: needs g=<o0;o1;...>");
    std::vector<double> gammas;
    for (const auto& part : split(it->second, ';'))
      gammas.push_back(std::stod(part));
    const classical::DNSignature sig(gammas);
    const double a = num_or(op, "a", 0.0);
    return [=](const FunctionHandle& f, double x) {
      return classical::dn_apply(sig, f, x, a, cfg);
    };
  }
  if (n == "be-first") {
    be::BEParams p;
    p.nu = num(op, "nu");
    p.mu = num(op, "mu");
    const std::string side = str_or(op, "side", "0+");
    if (side == "0+") p.side = be::BEParams::Side::ZeroPlus;
    else if (side == "-") p.side = be::BEParams::Side::Minus;
    else throw ConfigError("be-first: side must be '0+' or '-'");
    const std::string fam = str_or(op, "family", "B");
    if (fam == "B") p.family = be::BEParams::Family::B;
    else if (fam == "E") p.family = be::BEParams::Family::E;
    else throw ConfigError("be-first: family must be 'B' or 'E'");
    return [=](const FunctionHandle& f, double x) {
      return be::be_first_kind(p, f, x, cfg);
    };
  }
  if (n == "be-zero") {
    const auto kind = parse_kind(str_or(op, "kind", "s0plus"));
    const double nu = num(op, "nu");
    return [=](const FunctionHandle& f, double x) {
      return be::be_zero_order(kind, nu, f, x, cfg);
    };
  }
  if (n == "be-third") {
    const std::string kind = str_or(op, "kind", "su");
    if (kind != "su" && kind != "pu")
      throw ConfigError("be-third: kind must be 'su' or 'pu'");
    const auto which = kind == "su" ? be::ThirdKind::SU : be::ThirdKind::PU;
    const double nu = num(op, "nu");
    return [=](const FunctionHandle& f, double x) {
      return be::be_third_kind(which, nu, f, x, cfg);
    };
  }
  if (n == "ib") {
    const double nu = num(op, "nu"), alpha = num(op, "alpha");
    return [=](const FunctionHandle& f, double x) {
      return bessel::ib(nu, alpha, f, x, cfg);
    };
  }
  if (n == "ib-legendre") {
    const double nu = num(op, "nu"), alpha = num(op, "alpha");
    return [=](const FunctionHandle& f, double x) {
      return bessel::ib_legendre_form(nu, alpha, f, x, cfg);
    };
  }
  if (n == "db") {
    const double nu = num(op, "nu"), alpha = num(op, "alpha");
    return [=](const FunctionHandle& f, double x) {
      return bessel::db(nu, alpha, f, x, cfg);
    };
  }
  if (n == "saigo") {
    bessel::SaigoParams p;
    p.gamma = num(op, "gamma");
    p.beta = num(op, "beta");
    p.eta = num(op, "eta");
    return [=](const FunctionHandle& f, double x) {
      return bessel::saigo(p, f, x, cfg);
    };
  }
  throw ConfigError("unknown operator '" + n + "'");
}

// Plain key=value defaults file; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    if (!key.empty()) kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ','))
    if (!part.empty()) out.push_back(std::stod(part));
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ConfigError("cannot open output file '" + out_path + "'");
  out << text;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------- commands

struct Common {
  std::string format = "csv";
  std::string out;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;

  QuadratureConfig cfg() const {
    QuadratureConfig c;
    c.rel_tol = rel_tol;
    c.abs_tol = abs_tol;
    return c;
  }
};

int cmd_eval(const std::string& op_spec, const std::string& fn_spec,
             std::vector<double> points, const std::string& grid_spec,
             const Common& common) {
  if (!grid_spec.empty()) {
    const auto parts = split(grid_spec, ':');
    if (parts.size() != 3) throw ConfigError("--grid expects lo:hi:n");
    const double lo = std::stod(parts[0]), hi = std::stod(parts[1]);
    const int n = std::stoi(parts[2]);
    if (n < 2 || !(lo < hi)) throw ConfigError("--grid expects lo < hi, n >= 2");
    for (int i = 0; i < n; ++i)
      points.push_back(lo + (hi - lo) * double(i) / double(n - 1));
  }
  if (points.empty()) throw ConfigError("eval: no points given");
  const auto cfg = common.cfg();
  auto apply = bind_operator(parse_op_spec(op_spec), cfg);
  const auto f = funcmodel::parse_function_spec(fn_spec);
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream csv;
  csv << "x,value,abs_err_estimate\n";
  for (double x : points) {
    const double v = apply(f, x);
    const double err = cfg.abs_tol + cfg.rel_tol * std::abs(v);
    csv << fmt(x) << "," << fmt(v) << "," << fmt(err) << "\n";
    rows.push_back({{"x", x}, {"value", v}, {"abs_err_estimate", err}});
  }
  emit(common.format == "json" ? rows.dump(2) + "\n" : csv.str(), common.out);
  return 0;
}

int cmd_verify(const std::string& suite, const verify::Options& opts,
               const Common& common) {
  const auto reports = verify::run_suite(suite, opts);
  emit(common.format == "json" ? report::to_json(reports) + "\n"
                               : report::to_csv(reports),
       common.out);
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;
  return all_pass ? 0 : 1;
}

int cmd_mellin(const std::string& op_spec, const Common& common) {
  const auto op = parse_op_spec(op_spec);
  std::function<std::complex<double>(std::complex<double>, bool*)> m;
  if (op.name == "be-zero") {
    const auto mult = be::make_multiplier(parse_kind(str_or(op, "kind", "s0plus")),
                                          num(op, "nu"));
    m = [mult](std::complex<double> s, bool* in) {
      return mult.eval_continued(s, in);
    };
  } else if (op.name == "ib") {
    const double nu = num(op, "nu"), alpha = num(op, "alpha");
    m = [=](std::complex<double> s, bool* in) {
      if (in) *in = true;
      return bessel::ib_mellin_multiplier(nu, alpha, s);
    };
  } else if (op.name == "db") {
    const double nu = num(op, "nu"), alpha = num(op, "alpha");
    m = [=](std::complex<double> s, bool* in) {
      if (in) *in = true;
      return bessel::db_mellin_multiplier(nu, alpha, s);
    };
  } else {
    throw ConfigError("mellin: operator must be be-zero, ib or db");
  }
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream csv;
  csv << "t,abs_m\n";
  for (double t : mellin::default_t_grid()) {
    bool in = true;
    const double a = std::abs(m({0.5, t}, &in));
    csv << fmt(t) << "," << fmt(a) << "\n";
    rows.push_back({{"t", t}, {"abs_m", a}});
  }
  emit(common.format == "json" ? rows.dump(2) + "\n" : csv.str(), common.out);
  return 0;
}

int cmd_norms(std::vector<double> nus, const Common& common) {
  if (nus.empty()) nus = {-0.5, -0.2, 0.0, 0.3, 0.5, 1.0, 1.7, 2.0};
  const std::pair<be::ZeroOrderKind, const char*> kinds[] = {
      {be::ZeroOrderKind::S0plus, "s0plus"},
      {be::ZeroOrderKind::P0plus, "p0plus"},
      {be::ZeroOrderKind::Sminus, "sminus"},
      {be::ZeroOrderKind::Pminus, "pminus"}};
  const auto grid = mellin::default_t_grid();
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream csv;
  csv << "kind,nu,closed_form,plancherel,unbounded\n";
  for (double nu : nus) {
    for (const auto& [kind, name] : kinds) {
      const auto closed = be::be_norm(kind, nu);
      const auto mult = be::make_multiplier(kind, nu);
      const auto est = mellin::plancherel_norm(
          [&](double t, bool* in) {
            return mult.eval_continued({0.5, t}, in);
          },
          grid);
      const bool unbounded = closed.unbounded || est.unbounded;
      csv << name << "," << fmt(nu) << ","
          << (closed.unbounded ? "inf" : fmt(closed.value)) << ","
          << (est.unbounded ? "inf" : fmt(est.value)) << ","
          << (unbounded ? "true" : "false") << "\n";
      rows.push_back({{"kind", name},
                      {"nu", nu},
                      {"closed_form", closed.unbounded ? -1.0 : closed.value},
                      {"plancherel", est.unbounded ? -1.0 : est.value},
                      {"unbounded", unbounded}});
    }
  }
  emit(common.format == "json" ? rows.dump(2) + "\n" : csv.str(), common.out);
  return 0;
}

int cmd_table(const std::string& op_spec, double sigma, const Common& common) {
  const auto op = parse_op_spec(op_spec);
  std::function<std::complex<double>(std::complex<double>)> m;
  if (op.name == "be-zero") {
    const auto mult = be::make_multiplier(parse_kind(str_or(op, "kind", "s0plus")),
                                          num(op, "nu"));
    m = [mult](std::complex<double> s) { return mult.eval_continued(s); };
  } else if (op.name == "ib") {
    const double nu = num(op, "nu"), alpha = num(op, "alpha");
    m = [=](std::complex<double> s) {
      return bessel::ib_mellin_multiplier(nu, alpha, s);
    };
  } else if (op.name == "db") {
    const double nu = num(op, "nu"), alpha = num(op, "alpha");
    m = [=](std::complex<double> s) {
      return bessel::db_mellin_multiplier(nu, alpha, s);
    };
  } else {
    throw ConfigError("table: operator must be be-zero, ib or db");
  }
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream csv;
  csv << "t,re_m,im_m\n";
  for (double t : mellin::default_t_grid()) {
    const auto v = m({sigma, t});
    csv << fmt(t) << "," << fmt(v.real()) << "," << fmt(v.imag()) << "\n";
    rows.push_back({{"t", t}, {"re_m", v.real()}, {"im_m", v.imag()}});
  }
  emit(common.format == "json" ? rows.dump(2) + "\n" : csv.str(), common.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional operator toolkit"};
  app.require_subcommand(1);

  Common common;
  std::string config_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "plain key=value defaults file");
    sub->add_option("--format", common.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", common.out, "output path (default stdout)");
    sub->add_option("--rel-tol", common.rel_tol, "quadrature relative tolerance");
    sub->add_option("--abs-tol", common.abs_tol, "quadrature absolute tolerance");
  };

  std::string op_spec, fn_spec = "bump:c=2,r=1", grid_spec, suite;
  std::vector<double> points, nus, alphas;
  double sigma = 0.5;

  auto* eval = app.add_subcommand("eval", "evaluate an operator at points");
  eval->add_option("--op", op_spec, "operator spec, e.g. rl-left:a=0,alpha=0.5");
  eval->add_option("--fn", fn_spec, "function spec, e.g. bump:c=2,r=1");
  eval->add_option("--points", points, "evaluation points")->delimiter(',');
  eval->add_option("--grid", grid_spec, "uniform grid lo:hi:n");
  add_common(eval);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "suite name")->required();
  ver->add_option("--nu", nus, "nu override list")->delimiter(',');
  ver->add_option("--alpha", alphas, "alpha override list")->delimiter(',');
  add_common(ver);

  auto* mel = app.add_subcommand("mellin", "multiplier modulus on Re s = 1/2");
  mel->add_option("--op", op_spec, "be-zero:kind=...,nu=... | ib:... | db:...");
  add_common(mel);

  auto* nrm = app.add_subcommand("norms", "zero-order operator norm table");
  nrm->add_option("--nu", nus, "nu list")->delimiter(',');
  add_common(nrm);

  auto* tab = app.add_subcommand("table", "complex multiplier table");
  tab->add_option("--op", op_spec, "be-zero:kind=...,nu=... | ib:... | db:...");
  tab->add_option("--sigma", sigma, "real part of the Mellin line");
  add_common(tab);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    // config file fills in whatever was not given explicitly
    if (!config_path.empty()) {
      CLI::App* active = app.get_subcommands().front();
      auto given = [&](const std::string& name) {
        const CLI::Option* o = active->get_option_no_throw(name);
        return o != nullptr && o->count() > 0;
      };
      for (const auto& [key, value] : read_config_file(config_path)) {
        if (key == "format" && !given("--format")) {
          if (value != "csv" && value != "json")
            throw ConfigError("config: format must be csv or json");
          common.format = value;
        } else if (key == "out" && !given("--out")) {
          common.out = value;
        } else if (key == "rel-tol" && !given("--rel-tol")) {
          common.rel_tol = std::stod(value);
        } else if (key == "abs-tol" && !given("--abs-tol")) {
          common.abs_tol = std::stod(value);
        } else if (key == "op" && !given("--op")) {
          op_spec = value;
        } else if (key == "fn" && !given("--fn")) {
          fn_spec = value;
        } else if (key == "grid" && !given("--grid")) {
          grid_spec = value;
        } else if (key == "points" && !given("--points")) {
          points = parse_double_list(value);
        } else if (key == "nu" && !given("--nu")) {
          nus = parse_double_list(value);
        } else if (key == "alpha" && !given("--alpha")) {
          alphas = parse_double_list(value);
        } else if (key == "sigma" && !given("--sigma")) {
          sigma = std::stod(value);
        } else if (key == "format" || key == "out" || key == "rel-tol" ||
                   key == "abs-tol" || key == "op" || key == "fn" ||
                   key == "grid" || key == "points" || key == "nu" ||
                   key == "alpha" || key == "sigma") {
          // explicitly given on the command line wins
        } else {
          throw ConfigError("config: unknown key '" + key + "'");
        }
      }
    }
    // op may also come from the config file, so require it only now
    if ((eval->parsed() || mel->parsed() || tab->parsed()) && op_spec.empty())
      throw ConfigError("--op is required");
    if (eval->parsed()) return cmd_eval(op_spec, fn_spec, points, grid_spec, common);
    if (ver->parsed()) {
      verify::Options opts;
      opts.nu = nus;
      opts.alpha = alphas;
      return cmd_verify(suite, opts, common);
    }
    if (mel->parsed()) return cmd_mellin(op_spec, common);
    if (nrm->parsed()) return cmd_norms(nus, common);
    if (tab->parsed()) return cmd_table(op_spec, sigma, common);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const NumericsError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
