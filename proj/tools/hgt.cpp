// hgt: command-line front end for the hypergroup toolkit.
//
// Subcommands: convolve, axioms, growth, leptin, folner, reiter, certificate,
// levelset, cache. Exit codes: 0 success, 1 failed mathematical check
// (axiom violation, rejected certificate, cache mismatch, missed target),
// 2 usage or input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hg/hg.hpp"

namespace {

using hg::Element;
using hg::ElementSet;
using hg::Rational;

// ---------------------------------------------------------------------------
// Output plumbing. Each command produces summary key/value pairs plus one
// homogeneous table. Formats: human (summary lines, then rows), csv (table
// only), jsonl (summary object, then one object per row). Timing goes to
// stderr so payload bytes stay deterministic; --no-timing silences it.

using KvPairs = std::vector<std::pair<std::string, std::string>>;

struct Output {
  KvPairs summary;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> human;  // built by each command

  void add(std::string key, std::string value) {
    summary.emplace_back(std::move(key), std::move(value));
  }
  void row(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }
  void line(std::string text) { human.push_back(std::move(text)); }
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void render(const Output& out, const std::string& format, std::ostream& os) {
  if (format == "human") {
    for (const auto& line : out.human) os << line << '\n';
    return;
  }
  if (format == "csv") {
    std::string header;
    for (std::size_t i = 0; i < out.columns.size(); ++i) {
      if (i) header += ',';
      header += csv_escape(out.columns[i]);
    }
    os << header << '\n';
    for (const auto& row : out.rows) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) line += ',';
        line += csv_escape(row[i]);
      }
      os << line << '\n';
    }
    return;
  }
  // jsonl
  if (!out.summary.empty()) {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : out.summary) j[k] = v;
    os << nlohmann::ordered_json{{"summary", j}}.dump() << '\n';
  }
  for (const auto& row : out.rows) {
    nlohmann::ordered_json j;
    for (std::size_t i = 0; i < out.columns.size() && i < row.size(); ++i)
      j[out.columns[i]] = row[i];
    os << j.dump() << '\n';
  }
}

// ---------------------------------------------------------------------------
// Input parsing shared by the subcommands.

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::int64_t parse_int(const std::string& text) {
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw hg::ParameterError("expected an integer, got '" + text + "'");
  }
}

Element parse_element(const hg::Hypergroup& H, const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw hg::ParameterError("empty element");
  Element::Coords coords;
  if (text.front() == '(') {
    if (text.back() != ')')
      throw hg::ParameterError("unbalanced parentheses in '" + text + "'");
    for (const auto& part : split_top_level(text.substr(1, text.size() - 2)))
      coords.push_back(parse_int(trim(part)));
  } else {
    coords.push_back(parse_int(text));
  }
  if (coords.size() != H.arity())
    throw hg::ParameterError("element '" + text + "' has arity " +
                             std::to_string(coords.size()) + ", " +
                             H.descriptor() + " expects " +
                             std::to_string(H.arity()));
  Element e(H.instance_id(), std::move(coords));
  H.require_member(e);
  return e;
}

// Set specs: comma-separated items, each a single element, a scalar range
// "a..b", "ball:n" (default generators) or "box:n".
ElementSet parse_set(const hg::Hypergroup& H, const std::string& spec) {
  ElementSet out;
  for (const auto& rawPart : split_top_level(spec)) {
    const std::string part = trim(rawPart);
    if (part.empty()) throw hg::ParameterError("empty item in set spec");
    if (part.rfind("ball:", 0) == 0) {
      const std::int64_t n = parse_int(part.substr(5));
      if (n < 0) throw hg::ParameterError("ball radius must be >= 0");
      const ElementSet ball = hg::generator_ball(
          H, H.default_generators(), static_cast<std::size_t>(n));
      out.insert(ball.begin(), ball.end());
      continue;
    }
    if (part.rfind("box:", 0) == 0) {
      const ElementSet box = H.box(parse_int(part.substr(4)));
      out.insert(box.begin(), box.end());
      continue;
    }
    const std::size_t dots = part.find("..");
    if (dots != std::string::npos && part.front() != '(') {
      if (H.arity() != 1)
        throw hg::ParameterError("ranges need scalar elements, " +
                                 H.descriptor() + " has arity " +
                                 std::to_string(H.arity()));
      const std::int64_t lo = parse_int(trim(part.substr(0, dots)));
      const std::int64_t hi = parse_int(trim(part.substr(dots + 2)));
      if (hi < lo)
        throw hg::ParameterError("descending range '" + part + "'");
      for (std::int64_t v = lo; v <= hi; ++v) {
        Element e = Element::scalar(H.instance_id(), v);
        H.require_member(e);
        out.insert(e);
      }
      continue;
    }
    out.insert(parse_element(H, part));
  }
  if (out.empty()) throw hg::ParameterError("set spec produced no elements");
  return out;
}

Rational parse_cli_rational(const std::string& raw) {
  const std::string text = trim(raw);
  try {
    const std::size_t slash = text.find('/');
    if (slash != std::string::npos)
      return hg::make_rational(hg::Integer(text.substr(0, slash)),
                               hg::Integer(text.substr(slash + 1)));
    const std::size_t dot = text.find('.');
    if (dot != std::string::npos) {
      const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      hg::Integer den(1);
      for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      return hg::make_rational(hg::Integer(digits), den);
    }
    return Rational(hg::Integer(text));
  } catch (const hg::Error&) {
    throw;
  } catch (const std::exception&) {
    throw hg::ParameterError("expected a rational number, got '" + text + "'");
  }
}

std::string measure_line(const hg::Measure& m) {
  std::string out;
  for (const auto& [x, v] : m.entries()) {
    if (!out.empty()) out += ", ";
    out += hg::element_string(x) + ": " + hg::rational_string(v);
  }
  return out.empty() ? "(zero measure)" : out;
}

// Common per-command state.
struct Common {
  std::string selector;
  std::string format = "human";
  int digits = 6;
  bool no_timing = false;
  std::string output_path;

  hg::HypergroupPtr H;

  void attach(CLI::App* cmd) {
    cmd->add_option("--hypergroup", selector,
                    "Hypergroup selector: su2dual | su3dual | chebyshev:<d> | "
                    "conjugacy:<spec.json> | product:<sel>,<sel>[,...]")
        ->required();
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"human", "csv", "jsonl"}))
        ->capture_default_str();
    cmd->add_option("--digits", digits, "Decimal digits for approximations")
        ->check(CLI::Range(1, 50))
        ->capture_default_str();
    cmd->add_flag("--no-timing", no_timing, "Suppress the stderr timing line");
    cmd->add_option("--output", output_path, "Write payload to a file");
  }

  const hg::Hypergroup& hypergroup() {
    if (!H) H = hg::parse_selector(selector);
    return *H;
  }

  std::string dec(const Rational& r) const { return hg::to_decimal(r, digits); }
};

int emit(const Common& c, const Output& out) {
  if (c.output_path.empty()) {
    render(out, c.format, std::cout);
    return 0;
  }
  std::ofstream file(c.output_path, std::ios::binary);
  if (!file)
    throw hg::ParameterError("cannot open output file '" + c.output_path + "'");
  render(out, c.format, file);
  return 0;
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the process exit code.

struct ConvolveArgs {
  Common common;
  std::string x, y;
};

int run_convolve(ConvolveArgs& a) {
  const auto& H = a.common.hypergroup();
  const Element x = parse_element(H, a.x);
  const Element y = parse_element(H, a.y);
  const hg::Measure& m = H.convolve(x, y);
  Output out;
  out.add("hypergroup", H.descriptor());
  out.add("x", hg::element_string(x));
  out.add("y", hg::element_string(y));
  out.columns = {"point", "mass"};
  for (const auto& [p, v] : m.entries())
    out.row({hg::element_string(p), hg::rational_string(v)});
  out.line(measure_line(m));
  emit(a.common, out);
  return 0;
}

struct AxiomsArgs {
  Common common;
  std::int64_t ball = -1;
  std::int64_t box = -1;
  std::string set_spec;
  int threads = 1;
  std::size_t triples = 512;
  std::size_t translations = 128;
};

int run_axioms(AxiomsArgs& a) {
  const auto& H = a.common.hypergroup();
  int given = (a.ball >= 0) + (a.box >= 0) + !a.set_spec.empty();
  if (given > 1)
    throw hg::ParameterError("pick at most one of --ball, --box, --set");
  ElementSet T;
  if (!a.set_spec.empty()) {
    T = parse_set(H, a.set_spec);
  } else if (a.box >= 0) {
    T = H.box(a.box);
  } else if (a.ball >= 0) {
    T = hg::generator_ball(H, H.default_generators(),
                           static_cast<std::size_t>(a.ball));
  } else if (dynamic_cast<const hg::ConjugacyHypergroup*>(&H)) {
    T = H.box(0);  // conjugacy truncations are always the full class set
  } else {
    T = hg::generator_ball(H, H.default_generators(), 4);
  }
  hg::AxiomOptions options;
  options.threads = a.threads;
  options.rational_triples = a.triples;
  options.haar_translations = a.translations;
  const hg::AxiomReport report = hg::verify_axioms(H, T, options);

  Output out;
  out.add("hypergroup", report.descriptor);
  out.add("truncation", std::to_string(report.truncation_size));
  out.add("result", report.all_passed() ? "pass" : "fail");
  out.columns = {"axiom", "status", "detail"};
  out.line("hypergroup: " + report.descriptor);
  out.line("truncation: " + std::to_string(report.truncation_size) +
           " elements");
  for (const auto& check : report.checks) {
    out.row({check.axiom, check.passed ? "pass" : "fail", check.detail});
    std::string line = check.axiom + ": " + (check.passed ? "pass" : "FAIL");
    if (!check.detail.empty()) line += "  [" + check.detail + "]";
    out.line(line);
  }
  out.line(std::string("result: ") +
           (report.all_passed() ? "pass" : "fail"));
  emit(a.common, out);
  return report.all_passed() ? 0 : 1;
}

struct GrowthArgs {
  Common common;
  std::string generators;
  std::size_t nmax = 10;
  unsigned norm_exp = 0;
};

int run_growth(GrowthArgs& a) {
  const auto& H = a.common.hypergroup();
  const ElementSet F = a.generators.empty() ? H.default_generators()
                                            : parse_set(H, a.generators);
  const hg::GrowthReport report =
      hg::growth_series(H, F, a.nmax, a.norm_exp);
  Output out;
  out.add("hypergroup", H.descriptor());
  out.add("generators", hg::set_string(F));
  out.columns = {"n", "ball_size", "haar", "haar_decimal"};
  if (a.norm_exp > 0) {
    out.columns.push_back("normalized");
    out.columns.push_back("normalized_decimal");
  }
  out.line("hypergroup: " + H.descriptor());
  out.line("generators: " + hg::set_string(F));
  for (const auto& row : report.rows) {
    std::vector<std::string> cells = {
        std::to_string(row.n), std::to_string(row.ball_size),
        hg::rational_string(row.haar), a.common.dec(row.haar)};
    std::string line = "n=" + std::to_string(row.n) +
                       " size=" + std::to_string(row.ball_size) +
                       " h=" + hg::rational_string(row.haar);
    if (a.norm_exp > 0) {
      if (row.normalized) {
        cells.push_back(hg::rational_string(*row.normalized));
        cells.push_back(a.common.dec(*row.normalized));
        line += " h/n^" + std::to_string(a.norm_exp) + "=" +
                hg::rational_string(*row.normalized) + " (" +
                a.common.dec(*row.normalized) + ")";
      } else {
        cells.push_back("");
        cells.push_back("");
      }
    }
    out.row(std::move(cells));
    out.line(std::move(line));
  }
  emit(a.common, out);
  return 0;
}

struct LeptinArgs {
  Common common;
  std::string K_spec;
  std::string V_spec;
  std::size_t budget = 0;
  std::string D_spec;
  std::string eps_spec;
};

int run_leptin(LeptinArgs& a) {
  const auto& H = a.common.hypergroup();
  const ElementSet K = parse_set(H, a.K_spec);
  if (!a.V_spec.empty() && a.budget > 0)
    throw hg::ParameterError("pick one of --V (single ratio) or --budget (search)");
  Output out;
  out.add("hypergroup", H.descriptor());
  out.add("K", hg::set_string(K));
  int code = 0;
  if (!a.V_spec.empty()) {
    const ElementSet V = parse_set(H, a.V_spec);
    const hg::RatioReport ratio = hg::leptin_ratio(H, K, V);
    out.add("V", hg::set_string(V));
    out.add("ratio", hg::rational_string(ratio.value));
    out.add("ratio_decimal", a.common.dec(ratio.value));
    out.line("leptin ratio h(K*V)/h(V) = " + hg::rational_string(ratio.value) +
             " (" + a.common.dec(ratio.value) + ")");
  } else {
    if (a.budget == 0)
      throw hg::ParameterError("need --V for a single ratio or --budget for a search");
    std::optional<Rational> D;
    if (!a.D_spec.empty()) D = parse_cli_rational(a.D_spec);
    Rational eps(0);
    if (!a.eps_spec.empty()) eps = parse_cli_rational(a.eps_spec);
    hg::BallScanner scanner(H, H.default_generators());
    const hg::LeptinSearchResult result = hg::leptin_search(
        H, K, [&scanner](std::size_t n) { return scanner.ball(n); },
        a.budget, D, eps);
    out.add("budget", std::to_string(a.budget));
    out.add("best_n", std::to_string(result.best_index));
    out.add("best_V_size", std::to_string(result.best_V.size()));
    out.add("ratio", hg::rational_string(result.best_ratio));
    out.add("ratio_decimal", a.common.dec(result.best_ratio));
    out.line("best candidate: ball(" + std::to_string(result.best_index) +
             "), " + std::to_string(result.best_V.size()) + " elements");
    out.line("leptin ratio h(K*V)/h(V) = " +
             hg::rational_string(result.best_ratio) + " (" +
             a.common.dec(result.best_ratio) + ")");
    if (D) {
      out.add("target", hg::rational_string(*D));
      out.add("certified", result.certified ? "yes" : "no");
      out.line(std::string("certified below ") + hg::rational_string(*D) +
               (eps != 0 ? " + " + hg::rational_string(eps) : "") + ": " +
               (result.certified ? "yes" : "no"));
      if (!result.certified) code = 1;
    }
  }
  emit(a.common, out);
  return code;
}

struct FolnerArgs {
  Common common;
  std::string x_spec;
  std::string K_spec;
  std::string V_spec;
};

int run_folner(FolnerArgs& a) {
  const auto& H = a.common.hypergroup();
  if (a.x_spec.empty() == a.K_spec.empty())
    throw hg::ParameterError("pick exactly one of --x (pointwise) or --K (strong)");
  const ElementSet V = parse_set(H, a.V_spec);
  Output out;
  out.add("hypergroup", H.descriptor());
  out.add("V", hg::set_string(V));
  if (!a.x_spec.empty()) {
    const Element x = parse_element(H, a.x_spec);
    const hg::RatioReport r = hg::folner_ratio(H, x, V);
    out.add("x", hg::element_string(x));
    out.add("ratio", hg::rational_string(r.value));
    out.add("ratio_decimal", a.common.dec(r.value));
    out.line("folner ratio h(x*V \\ V) + h(V \\ x*V) over h(V) = " +
             hg::rational_string(r.value) + " (" + a.common.dec(r.value) + ")");
  } else {
    const ElementSet K = parse_set(H, a.K_spec);
    const hg::RatioReport r = hg::strong_folner_ratio(H, K, V);
    const hg::SfImpliesLReport chain = hg::check_sf_implies_l(H, K, V);
    out.add("K", hg::set_string(K));
    out.add("ratio", hg::rational_string(r.value));
    out.add("ratio_decimal", a.common.dec(r.value));
    out.add("leptin_minus_one", hg::rational_string(chain.leptin_minus_one));
    out.add("dominates_leptin", chain.holds ? "yes" : "no");
    out.line("strong folner ratio = " + hg::rational_string(r.value) + " (" +
             a.common.dec(r.value) + ")");
    out.line("leptin ratio - 1 = " +
             hg::rational_string(chain.leptin_minus_one) +
             (chain.holds ? " <= strong folner ratio"
                          : " > strong folner ratio (violation)"));
    if (!chain.holds) {
      emit(a.common, out);
      return 1;
    }
  }
  emit(a.common, out);
  return 0;
}

struct ReiterArgs {
  Common common;
  std::string V_spec;
  std::string E_spec;
  int r = 1;
};

int run_reiter(ReiterArgs& a) {
  const auto& H = a.common.hypergroup();
  const ElementSet V = parse_set(H, a.V_spec);
  const ElementSet E = parse_set(H, a.E_spec);
  const hg::ReiterWitness witness = hg::folner_to_reiter(H, V, a.r);
  const hg::ReiterReport report = hg::reiter_deficiency(H, witness, E);
  Output out;
  out.add("hypergroup", H.descriptor());
  out.add("V", hg::set_string(V));
  out.add("E", hg::set_string(E));
  out.add("r", std::to_string(report.r));
  out.add(report.squared ? "deficiency_sq" : "deficiency",
          hg::rational_string(report.deficiency));
  out.add("deficiency_decimal", report.decimal(a.common.digits));
  if (report.squared) {
    out.line("deficiency^2 = " + hg::rational_string(report.deficiency));
    out.line("deficiency ~= " + report.decimal(a.common.digits));
  } else {
    out.line("deficiency = " + hg::rational_string(report.deficiency) + " (" +
             report.decimal(a.common.digits) + ")");
  }
  emit(a.common, out);
  return 0;
}

struct CertificateArgs {
  Common common;
  std::string K_spec;
  std::string V_spec;
};

int run_certificate(CertificateArgs& a) {
  const auto& H = a.common.hypergroup();
  const ElementSet K = parse_set(H, a.K_spec);
  const ElementSet V = parse_set(H, a.V_spec);
  const hg::BaiCertificate cert = hg::bai_certificate(H, K, V);
  Output out;
  out.add("hypergroup", H.descriptor());
  out.add("K", hg::set_string(K));
  out.add("V", hg::set_string(V));
  out.add("support", std::to_string(cert.u.entries().size()));
  out.add("bound_sq", hg::rational_string(cert.bound_sq));
  out.add("bound_decimal", cert.bound_decimal(a.common.digits));
  out.columns = {"point", "value"};
  out.line("certificate u = (1_{K*V} *_h 1~_V) / h(V) on " + H.descriptor());
  for (const auto& [p, v] : cert.u.entries()) {
    out.row({hg::element_string(p), hg::rational_string(v)});
    out.line("  u(" + hg::element_string(p) + ") = " + hg::rational_string(v));
  }
  out.line("norm bound^2 = h(K*V)/h(V) = " + hg::rational_string(cert.bound_sq) +
           ", bound ~= " + cert.bound_decimal(a.common.digits));
  emit(a.common, out);
  return 0;
}

struct LevelsetArgs {
  Common common;
  std::string M_spec;
  std::string set_spec;
  std::size_t stages = 4;
};

int run_levelset(LevelsetArgs& a) {
  const auto& H = a.common.hypergroup();
  const Rational M = parse_cli_rational(a.M_spec);
  const ElementSet T = parse_set(H, a.set_spec);
  const hg::LevelSetReport report =
      hg::haar_level_set(H, M, hg::prefix_stages(T, a.stages));
  Output out;
  out.add("hypergroup", H.descriptor());
  out.add("bound", hg::rational_string(M));
  out.add("final_count", std::to_string(report.stages.back().count));
  out.add("max_weight", hg::rational_string(report.max_weight));
  out.add("verdict", hg::level_set_verdict_name(report.verdict));
  out.columns = {"stage", "truncation_size", "count"};
  out.line("elements with h(x) <= " + hg::rational_string(M) + " in " +
           H.descriptor());
  for (std::size_t i = 0; i < report.stages.size(); ++i) {
    const auto& stage = report.stages[i];
    out.row({std::to_string(i + 1), std::to_string(stage.truncation_size),
             std::to_string(stage.count)});
    out.line("  stage " + std::to_string(i + 1) + ": " +
             std::to_string(stage.count) + " of " +
             std::to_string(stage.truncation_size) + " elements");
  }
  out.line("max h over truncation: " + hg::rational_string(report.max_weight));
  out.line(std::string("verdict: ") + hg::level_set_verdict_name(report.verdict));
  emit(a.common, out);
  return 0;
}

struct CacheArgs {
  Common common;
  std::string action;
  std::string path;
  std::string warm_spec;
};

int run_cache(CacheArgs& a) {
  const auto& H = a.common.hypergroup();
  Output out;
  out.add("hypergroup", H.descriptor());
  out.add("action", a.action);
  out.add("path", a.path);
  if (a.action == "store") {
    if (a.warm_spec.empty())
      throw hg::ParameterError("cache store needs --warm <set spec>");
    const ElementSet S = parse_set(H, a.warm_spec);
    for (auto i = S.begin(); i != S.end(); ++i)
      for (auto j = i; j != S.end(); ++j) H.convolve(*i, *j);
    hg::cache_store(H, a.path);
    out.add("records", std::to_string(H.cache_size()));
    out.line("stored " + std::to_string(H.cache_size()) + " records to " +
             a.path);
  } else {
    const std::size_t n = hg::cache_load(H, a.path);
    out.add("records", std::to_string(n));
    out.line("loaded " + std::to_string(n) + " records from " + a.path);
  }
  emit(a.common, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in discrete commutative hypergroups"};
  app.require_subcommand(1);

  ConvolveArgs convolve_args;
  auto* convolve = app.add_subcommand(
      "convolve", "Point convolution delta_x * delta_y as exact rationals");
  convolve_args.common.attach(convolve);
  convolve->add_option("x", convolve_args.x, "First point")->required();
  convolve->add_option("y", convolve_args.y, "Second point")->required();

  AxiomsArgs axioms_args;
  auto* axioms = app.add_subcommand(
      "axioms", "Verify the hypergroup axioms on a finite truncation");
  axioms_args.common.attach(axioms);
  axioms->add_option("--ball", axioms_args.ball,
                     "Truncate to the generator ball of this radius");
  axioms->add_option("--box", axioms_args.box,
                     "Truncate to coordinates in [0, bound]");
  axioms->add_option("--set", axioms_args.set_spec, "Explicit truncation set");
  axioms->add_option("--threads", axioms_args.threads,
                     "Worker threads for the associativity scan")
      ->check(CLI::Range(1, 64));
  axioms->add_option("--triples", axioms_args.triples,
                     "Budget for the rational-path associativity sample");
  axioms->add_option("--translations", axioms_args.translations,
                     "Budget for Haar translation-invariance checks");

  GrowthArgs growth_args;
  auto* growth = app.add_subcommand(
      "growth", "Generator-ball sizes and exact Haar masses");
  growth_args.common.attach(growth);
  growth->add_option("--generators", growth_args.generators,
                     "Generating set (default: canonical generators)");
  growth->add_option("--nmax", growth_args.nmax, "Largest radius")
      ->capture_default_str();
  growth->add_option("--norm-exp", growth_args.norm_exp,
                     "Also report h(ball(n))/n^d for this exponent d");

  LeptinArgs leptin_args;
  auto* leptin = app.add_subcommand(
      "leptin", "Leptin ratio h(K*V)/h(V), single V or ball search");
  leptin_args.common.attach(leptin);
  leptin->add_option("--K", leptin_args.K_spec, "Compact set K")->required();
  leptin->add_option("--V", leptin_args.V_spec, "Candidate set V");
  leptin->add_option("--budget", leptin_args.budget,
                     "Search the generator balls ball(1..budget)");
  leptin->add_option("--D", leptin_args.D_spec,
                     "Certification target: best ratio < D + eps");
  leptin->add_option("--eps", leptin_args.eps_spec, "Certification slack");

  FolnerArgs folner_args;
  auto* folner = app.add_subcommand(
      "folner", "Folner ratios: symmetric-difference mass over h(V)");
  folner_args.common.attach(folner);
  folner->add_option("--x", folner_args.x_spec, "Pointwise translating element");
  folner->add_option("--K", folner_args.K_spec, "Strong variant over a set K");
  folner->add_option("--V", folner_args.V_spec, "Candidate set V")->required();

  ReiterArgs reiter_args;
  auto* reiter = app.add_subcommand(
      "reiter", "Reiter deficiency of the normalized indicator of V");
  reiter_args.common.attach(reiter);
  reiter->add_option("--V", reiter_args.V_spec, "Folner set V")->required();
  reiter->add_option("--E", reiter_args.E_spec, "Translation test set")
      ->required();
  reiter->add_option("--r", reiter_args.r, "Norm exponent (1 or 2)")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();

  CertificateArgs cert_args;
  auto* certificate = app.add_subcommand(
      "certificate", "Bounded-approximate-identity certificate for (K, V)");
  cert_args.common.attach(certificate);
  certificate->add_option("--K", cert_args.K_spec, "Compact set K")->required();
  certificate->add_option("--V", cert_args.V_spec, "Folner set V")->required();

  LevelsetArgs levelset_args;
  auto* levelset = app.add_subcommand(
      "levelset", "Count {x in T : h(x) <= M} along nested stages");
  levelset_args.common.attach(levelset);
  levelset->add_option("--M", levelset_args.M_spec, "Weight bound M")
      ->required();
  levelset->add_option("--set", levelset_args.set_spec, "Truncation set T")
      ->required();
  levelset->add_option("--stages", levelset_args.stages,
                       "Number of nested prefix stages")
      ->capture_default_str();

  CacheArgs cache_args;
  auto* cache = app.add_subcommand(
      "cache", "Store or load the convolution cache as JSON");
  cache_args.common.attach(cache);
  cache->add_option("action", cache_args.action, "store or load")
      ->required()
      ->check(CLI::IsMember({"store", "load"}));
  cache->add_option("--path", cache_args.path, "Cache file path")->required();
  cache->add_option("--warm", cache_args.warm_spec,
                    "Set spec whose pairwise convolutions to precompute "
                    "(store only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int code = 0;
  bool timing = true;
  try {
    if (convolve->parsed()) {
      code = run_convolve(convolve_args);
      timing = !convolve_args.common.no_timing;
    } else if (axioms->parsed()) {
      code = run_axioms(axioms_args);
      timing = !axioms_args.common.no_timing;
    } else if (growth->parsed()) {
      code = run_growth(growth_args);
      timing = !growth_args.common.no_timing;
    } else if (leptin->parsed()) {
      code = run_leptin(leptin_args);
      timing = !leptin_args.common.no_timing;
    } else if (folner->parsed()) {
      code = run_folner(folner_args);
      timing = !folner_args.common.no_timing;
    } else if (reiter->parsed()) {
      code = run_reiter(reiter_args);
      timing = !reiter_args.common.no_timing;
    } else if (certificate->parsed()) {
      code = run_certificate(cert_args);
      timing = !cert_args.common.no_timing;
    } else if (levelset->parsed()) {
      code = run_levelset(levelset_args);
      timing = !levelset_args.common.no_timing;
    } else if (cache->parsed()) {
      code = run_cache(cache_args);
      timing = !cache_args.common.no_timing;
    }
  } catch (const hg::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const hg::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const hg::LoadError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const hg::Error& e) {
    // Validation, cache and certificate failures: checks that ran and failed.
    std::cerr << "check failed: " << e.what() << '\n';
    return 1;
  }
  if (timing) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed: " << elapsed.count() << " ms\n";
  }
  return code;
}
