#include "lieweyl_cli/command.hpp"

#include <fmt/format.h>

#include <functional>
#include <map>
#include <sstream>

#include "lieweyl/acceptance.hpp"
#include "lieweyl/hausdorff.hpp"
#include "lieweyl/star.hpp"
#include "lieweyl_cli/expression.hpp"

namespace lieweyl::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n')
      out += "\\n";
    else
      out += c;
  }
  return out + "\"";
}

class Report {
 public:
  explicit Report(OutputFormat fmt) : fmt_(fmt) {}

  bool structured() const { return fmt_ == OutputFormat::Structured; }

  void line(const std::string& s) { out_ << s << '\n'; }

  // Emits a value in text mode as "label = text" and in structured mode as a record.
  void value(const std::string& kind, const std::vector<std::pair<std::string, std::string>>& fields,
             const std::string& label, const std::string& text) {
    if (structured()) {
      std::string rec = "value kind=" + kind;
      for (const auto& [k, v] : fields) rec += " " + k + "=" + v;
      line(rec + " expr=" + quote(text));
    } else {
      line(label + " = " + text);
    }
  }

  void check(const CheckReport& r) {
    if (!r.pass) failed_ = true;
    if (structured()) {
      line(fmt::format("check name={} status={}", quote(r.name), r.pass ? "pass" : "fail"));
      if (!r.pass)
        for (const auto& d : r.details) line(fmt::format("detail check={} text={}", quote(r.name), quote(d)));
    } else {
      line(fmt::format("{} {}", r.pass ? "PASS" : "FAIL", r.name));
      if (!r.pass)
        for (const auto& d : r.details) line("    " + d);
    }
  }

  CommandResult finish() {
    line(structured() ? fmt::format("result status={}", failed_ ? "fail" : "pass")
                      : fmt::format("result: {}", failed_ ? "fail" : "pass"));
    return {failed_ ? 1 : 0, out_.str()};
  }

  CommandResult finish_plain() { return {failed_ ? 1 : 0, out_.str()}; }

 private:
  OutputFormat fmt_;
  std::ostringstream out_;
  bool failed_ = false;
};

int bounded(const CommandConfig& cfg, std::optional<int> v, int fallback, int limit, const char* what) {
  int x = v.value_or(fallback);
  if (x < 0) throw InputError(fmt::format("{} must be nonnegative", what));
  if (!cfg.unbounded && x > limit)
    throw InputError(fmt::format("{} {} exceeds the default bound {} (pass --unbounded to lift it)", what, x, limit));
  return x;
}

LieAlgebra load(const CommandConfig& cfg) {
  LieAlgebra L = resolve_algebra(cfg.algebra);
  if (!cfg.unbounded && L.dim() > cfg.bounds.max_dim)
    throw InputError(fmt::format("dimension {} exceeds the default bound {} (pass --unbounded to lift it)", L.dim(),
                                 cfg.bounds.max_dim));
  return L;
}

int index_arg(int v, int n, const char* what) {
  if (v < 0 || v > n) throw InputError(fmt::format("{} must be in 1..{}", what, n));
  return v;
}

std::vector<Rational> parse_vector(const std::string& text, int n, const char* what) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (static_cast<int>(out.size()) != n) throw InputError(fmt::format("{} needs {} comma-separated rationals", what, n));
  return out;
}

std::string render_vector(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

CommandResult cmd_verify(const CommandConfig& cfg) {
  LieAlgebra L = load(cfg);
  int D = bounded(cfg, cfg.cutoff, 6, cfg.bounds.max_cutoff, "cutoff");
  int P = std::min(bounded(cfg, cfg.degree, 4, cfg.bounds.max_degree, "degree"), D);
  Report rep(cfg.format);
  rep.value("algebra", {{"name", quote(L.name())}, {"dim", std::to_string(L.dim())}}, "algebra", L.name());

  CheckReport jac;
  jac.name = fmt::format("Jacobi identity ({})", L.name());
  if (!verify_jacobi(L).pass) jac.fail("Jacobi identity violated");
  rep.check(jac);
  rep.check(verify_phi_equation(L, phi_symmetric(L, D)));
  rep.check(theta_xi_roundtrip(L, P));
  rep.check(transport_identity(L, P));
  rep.check(coderivation_property(L, 20, 7));
  rep.check(commuting_partials(L, P));
  if (D >= 1) rep.check(regular_realization(L, D));
  return rep.finish();
}

CommandResult cmd_coproduct(const CommandConfig& cfg) {
  LieAlgebra L = load(cfg);
  int n = L.dim();
  int P = bounded(cfg, cfg.degree, 4, cfg.bounds.max_degree, "degree");
  int mu = index_arg(cfg.mu, n, "--mu");
  Report rep(cfg.format);
  CoproductTable trees = coproduct_trees_table(L, P);
  CoproductTable adjoint = coproduct_adjoint_table(L, phi_symmetric(L, P), P);
  for (int m = 0; m < n; ++m) {
    if (mu && m != mu - 1) continue;
    const auto& t = trees[static_cast<std::size_t>(m)];
    if (rep.structured()) {
      for (const auto& s : t.structured()) rep.line("term " + s);
    } else {
      rep.line(fmt::format("Delta d{} = {}", m + 1, t.render()));
    }
  }
  CheckReport diff;
  diff.name = fmt::format("tree and adjoint coproducts agree through degree {} ({})", P, L.name());
  for (int m = 0; m < n; ++m)
    if (!(trees[static_cast<std::size_t>(m)] == adjoint[static_cast<std::size_t>(m)]))
      diff.fail(fmt::format("mu={}: trees {} adjoint {}", m + 1, trees[static_cast<std::size_t>(m)].render(),
                            adjoint[static_cast<std::size_t>(m)].render()));
  rep.check(diff);
  rep.check(counit_check(trees));
  rep.check(coassociativity_check(trees, P));
  return rep.finish();
}

CommandResult cmd_star(const CommandConfig& cfg) {
  LieAlgebra L = load(cfg);
  int n = L.dim();
  Report rep(cfg.format);
  const std::string& route = cfg.route;
  if (route != "pbw" && route != "coproduct" && route != "exp" && route != "all")
    throw InputError("--route must be pbw, coproduct, exp or all");

  if (route != "exp") {
    if (!cfg.f || !cfg.g) throw InputError("star needs --f and --g");
    Polynomial f = parse_polynomial(*cfg.f, n), g = parse_polynomial(*cfg.g, n);
    int P = f.degree() + g.degree();
    bounded(cfg, P, 0, cfg.bounds.max_degree, "deg f + deg g");
    SeriesMatrix phi = phi_symmetric(L, P);
    std::map<std::string, Polynomial> results;
    if (route == "pbw" || route == "all") results.emplace("pbw", star_pbw(L, phi, f, g));
    if (route == "coproduct" || route == "all") {
      results.emplace("coproduct", star_coproduct(L, phi, f, g));
      results.emplace("trees", CoproductStar(coproduct_trees_table(L, P)).star(f, g));
    }
    for (const auto& [name, p] : results)
      rep.value("star", {{"route", name}}, fmt::format("f * g [{}]", name), render_polynomial(p));
    if (results.size() > 1) {
      CheckReport agree;
      agree.name = fmt::format("star routes agree ({})", L.name());
      const Polynomial& ref = results.begin()->second;
      for (const auto& [name, p] : results)
        if (!(p == ref)) agree.fail(fmt::format("{} differs: {}", name, render_polynomial(p)));
      rep.check(agree);
    }
    if (cfg.h) {
      Polynomial h = parse_polynomial(*cfg.h, n);
      bounded(cfg, P + h.degree(), 0, cfg.bounds.max_degree + 1, "deg f + deg g + deg h");
      rep.check(star_associativity_check(L, f, g, h));
    }
  }
  if (route == "exp" || (route == "all" && cfg.k && cfg.q)) {
    int P = bounded(cfg, cfg.degree, 4, cfg.bounds.max_degree, "degree");
    std::vector<std::vector<Rational>> ks, qs;
    if (cfg.k || cfg.q) {
      if (!cfg.k || !cfg.q) throw InputError("--k and --q go together");
      ks.push_back(parse_vector(*cfg.k, n, "--k"));
      qs.push_back(parse_vector(*cfg.q, n, "--q"));
    } else {
      for (int i = 0; i < n; ++i) {
        std::vector<Rational> e(static_cast<std::size_t>(n), 0), e2(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        e2[static_cast<std::size_t>((i + 1) % n)] = Rational(1, 2);
        ks.push_back(e);
        qs.push_back(e2);
      }
    }
    for (const auto& k : ks)
      for (const auto& q : qs) {
        StarReport s = star_exponential(L, k, q, P);
        CheckReport c;
        c.name = fmt::format("exponential star k=({}) q=({}) P={} ({})", render_vector(k), render_vector(q), P, L.name());
        c.pass = s.pass;
        c.details = s.lines;
        rep.check(c);
      }
  }
  return rep.finish();
}

CommandResult cmd_trees(const CommandConfig& cfg) {
  Report rep(cfg.format);
  if (cfg.table) {
    int P = bounded(cfg, cfg.degree, 5, 8, "degree");
    if (rep.structured()) {
      for (int w = 0; w <= P; ++w)
        for (int b = 0; w + b <= P; ++b)
          if (w + b >= 1)
            rep.line(fmt::format("count w={} b={} ordered={} planar={}", w, b, count_ordered(w, b),
                                 enumerate_trees(w, b).size()));
    } else {
      std::string head = fmt::format("{:>4}", "w\\b");
      for (int b = 0; b <= P; ++b) head += fmt::format(" {:>10}", b);
      rep.line(head);
      for (int w = 0; w <= P; ++w) {
        std::string row = fmt::format("{:>4}", w);
        for (int b = 0; b <= P; ++b) row += w + b >= 1 && w + b <= P ? fmt::format(" {:>10}", count_ordered(w, b)) : fmt::format(" {:>10}", "");
        rep.line(row);
      }
    }
    return rep.finish_plain();
  }
  if (cfg.w < 0 || cfg.b < 0 || cfg.w + cfg.b < 1 || cfg.w + cfg.b > kMaxTreeSize)
    throw InputError(fmt::format("need w, b >= 0 with 1 <= w + b <= {}", kMaxTreeSize));
  if (cfg.planar || cfg.contributing) {
    std::vector<PlanarTree> ts = enumerate_trees(cfg.w, cfg.b);
    if (cfg.contributing) std::erase_if(ts, [](const PlanarTree& t) { return !contributing_filter(t); });
    if (cfg.list) {
      for (std::size_t i = 0; i < ts.size(); ++i) {
        if (rep.structured()) {
          rep.line(fmt::format("tree index={} canonical={} numerations={}", i + 1, quote(ts[i].canonical()),
                               numeration_count(ts[i])));
        } else {
          rep.line(ts[i].canonical());
          if (cfg.ascii) rep.line(ascii_art(ts[i]));
        }
      }
    }
    if (cfg.count || !cfg.list)
      rep.line(rep.structured() ? fmt::format("count w={} b={} kind={} value={}", cfg.w, cfg.b,
                                              cfg.contributing ? "contributing" : "planar", ts.size())
                                : std::to_string(ts.size()));
    return rep.finish_plain();
  }
  if (cfg.list) {
    auto ts = enumerate_ordered(cfg.w, cfg.b);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (rep.structured()) {
        rep.line(fmt::format("tree index={} canonical={}", i + 1, quote(ts[i].canonical())));
      } else {
        rep.line(ts[i].canonical());
        if (cfg.ascii) rep.line(ascii_art(ts[i]));
      }
    }
  }
  if (cfg.count || !cfg.list)
    rep.line(rep.structured() ? fmt::format("count w={} b={} kind=ordered value={}", cfg.w, cfg.b, count_ordered(cfg.w, cfg.b))
                              : std::to_string(count_ordered(cfg.w, cfg.b)));
  return rep.finish_plain();
}

CommandResult cmd_hausdorff(const CommandConfig& cfg) {
  LieAlgebra L = load(cfg);
  int n = L.dim();
  int P = bounded(cfg, cfg.degree, 4, cfg.bounds.max_degree + 1, "degree");
  Report rep(cfg.format);
  auto D = dynkin_D(L, P);
  for (int N = 1; N <= P; ++N)
    for (int mu = 0; mu < n; ++mu)
      rep.value("dynkin", {{"N", std::to_string(N)}, {"mu", std::to_string(mu + 1)}}, fmt::format("D_{}^{}", N, mu + 1),
                render_kq(D[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(mu)], n));
  for (const auto& [wb, v] : bigraded_H(L, P, HRoute::W))
    for (int mu = 0; mu < n; ++mu)
      rep.value("bigraded",
                {{"w", std::to_string(wb.first)}, {"b", std::to_string(wb.second)}, {"mu", std::to_string(mu + 1)}},
                fmt::format("H_{},{}^{}", wb.first, wb.second, mu + 1), render_kq(v[static_cast<std::size_t>(mu)], n));
  rep.check(hausdorff_cross_check(L, P));
  rep.check(hausdorff_symmetry_check(L, P));
  rep.check(linear_parts_check(L, P));
  rep.check(hausdorff_diagonal_check(L, P));
  return rep.finish();
}

CommandResult cmd_chi(const CommandConfig& cfg) {
  LieAlgebra L = load(cfg);
  int n = L.dim();
  int D = bounded(cfg, cfg.cutoff, 5, cfg.bounds.max_cutoff, "cutoff");
  int P = bounded(cfg, cfg.degree, 2, cfg.bounds.max_degree, "degree");
  int mu = index_arg(cfg.mu, n, "--mu"), nu = index_arg(cfg.nu, n, "--nu");
  Report rep(cfg.format);
  if (mu && nu) {
    auto chi = chi_series(L, mu - 1, nu - 1, D);
    for (int tau = 0; tau < n; ++tau)
      rep.value("chi", {{"tau", std::to_string(tau + 1)}, {"mu", std::to_string(mu)}, {"nu", std::to_string(nu)}},
                fmt::format("chi^{}_{}{}", tau + 1, mu, nu),
                render(chi[static_cast<std::size_t>(tau)], d_name, DegreeOrder::Ascending));
    CheckReport all;
    all.name = fmt::format("chi identity mu={} nu={} (f degree <= {}, cutoff {}, {})", mu, nu, P, D, L.name());
    for (int d = 0; d <= P; ++d)
      for (const auto& m : monomials_of_degree(n, d)) all.absorb(chi_check(L, mu - 1, nu - 1, x_monomial(n, m), D));
    rep.check(all);
  } else if (mu || nu) {
    throw InputError("--mu and --nu go together");
  } else {
    rep.check(chi_check_all(L, P, D));
  }
  return rep.finish();
}

CommandResult cmd_check_all(const CommandConfig& cfg) {
  Report rep(cfg.format);
  bool failed = false;
  for (const auto& c : acceptance_criteria()) {
    CriterionResult r = run_criterion(c);
    failed |= !r.pass;
    if (rep.structured()) {
      // Timings are left out so the dump stays byte-stable.
      rep.line(fmt::format("criterion id={} status={} limit={:.0f} title={}", r.id, r.pass ? "pass" : "fail",
                           r.time_limit_seconds, quote(r.title)));
      if (!r.pass)
        for (const auto& d : r.details) rep.line(fmt::format("detail criterion={} text={}", r.id, quote(d)));
    } else {
      rep.line(format_result_line(r));
      if (!r.pass)
        for (const auto& d : r.details) rep.line("    " + d);
    }
  }
  CommandResult res = rep.finish_plain();
  res.output += rep.structured() ? fmt::format("result status={}\n", failed ? "fail" : "pass")
                                 : fmt::format("result: {}\n", failed ? "fail" : "pass");
  res.exit_code = failed ? 1 : 0;
  return res;
}

const std::map<std::string, std::function<CommandResult(const CommandConfig&)>>& dispatch() {
  static const std::map<std::string, std::function<CommandResult(const CommandConfig&)>> table = {
      {"verify", cmd_verify}, {"coproduct", cmd_coproduct}, {"star", cmd_star},         {"trees", cmd_trees},
      {"hausdorff", cmd_hausdorff}, {"chi", cmd_chi},       {"check-all", cmd_check_all}};
  return table;
}

CommandResult error_result(const CommandConfig& cfg, const std::string& kind, const std::string& message,
                           const ParseError* pe = nullptr) {
  std::string out;
  if (cfg.format == OutputFormat::Structured) {
    out = fmt::format("error kind={}", kind);
    if (pe) out += fmt::format(" position={} expected={}", pe->position(), quote(pe->expected()));
    out += fmt::format(" message={}\n", quote(message));
  } else {
    out = fmt::format("error ({}): {}\n", kind, message);
  }
  return {2, out};
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : dispatch()) names.push_back(k);
  return names;
}

CommandResult run_command(const CommandConfig& cfg) {
  auto it = dispatch().find(cfg.command);
  if (it == dispatch().end()) return error_result(cfg, "usage", "unknown command '" + cfg.command + "'");
  try {
    return it->second(cfg);
  } catch (const ParseError& e) {
    return error_result(cfg, "parse", e.what(), &e);
  } catch (const AlgebraError& e) {
    return error_result(cfg, "algebra", e.what());
  } catch (const CutoffError& e) {
    return error_result(cfg, "cutoff", e.what());
  } catch (const InputError& e) {
    return error_result(cfg, "input", e.what());
  } catch (const std::invalid_argument& e) {
    return error_result(cfg, "input", e.what());
  }
}

}  // namespace lieweyl::cli
