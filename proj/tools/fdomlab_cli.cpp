// Command-line front end. Exit codes: 0 success, 1 failed check,
// 2 usage or input error, 3 cap or budget exceeded.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "fdomlab/bad_family.hpp"
#include "fdomlab/construct.hpp"
#include "fdomlab/domset.hpp"
#include "fdomlab/errors.hpp"
#include "fdomlab/fdom.hpp"
#include "fdomlab/generators.hpp"
#include "fdomlab/graph_io.hpp"
#include "fdomlab/json_io.hpp"
#include "fdomlab/reductions.hpp"

namespace fs = std::filesystem;
using namespace fdom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Caps {
  int enumeration = kDefaultEnumerationCap;
  int domatic = kDefaultDomaticCap;
  int chromatic = kDefaultChromaticCap;
  int coins = kDefaultCoinCap;
  int iterations = ColgenOptions{}.max_iterations;
  std::int64_t family = kDefaultFamilyCap;
};

struct Options {
  std::string in = "-";
  std::string out;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::vector<std::string> caps;
};

Caps parse_caps(const std::vector<std::string>& items) {
  Caps c;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("cap must be key=value: " + item);
    std::string key = item.substr(0, eq);
    long long value = 0;
    try {
      value = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw InvalidArgument("cap value must be an integer: " + item);
    }
    if (value <= 0) throw InvalidArgument("caps must be positive: " + item);
    if (key == "enumeration") {
      c.enumeration = static_cast<int>(value);
    } else if (key == "domatic") {
      c.domatic = static_cast<int>(value);
    } else if (key == "chromatic") {
      c.chromatic = static_cast<int>(value);
    } else if (key == "coins") {
      c.coins = static_cast<int>(value);
    } else if (key == "iterations") {
      c.iterations = static_cast<int>(value);
    } else if (key == "family") {
      c.family = value;
    } else {
      throw InvalidArgument("unknown cap: " + key);
    }
  }
  return c;
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool is_graph6_path(const std::string& path) { return fs::path(path).extension() == ".g6"; }

// Graph text format, or graph6 (first line) for *.g6 files.
Graph load_graph(const std::string& path) {
  std::string text = read_text(path);
  if (is_graph6_path(path)) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    return parse_graph6(line);
  }
  return parse_graph(text);
}

std::string set_text(const VertexSet& s) {
  std::string out;
  for (int v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

class Output {
 public:
  explicit Output(const Options& o) : json_(o.format == "json") {
    if (o.format != "json" && o.format != "text") throw InvalidArgument("format must be json or text");
    if (!o.out.empty()) {
      file_.open(o.out);
      if (!file_) throw InvalidArgument("cannot write " + o.out);
    }
  }
  bool json() const { return json_; }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void line(const std::string& s) { stream() << s << "\n"; }
  void emit(const Json& j) { stream() << j.dump() << "\n"; }

 private:
  bool json_;
  std::ofstream file_;
};

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write " + path);
  f << j.dump() << "\n";
}

FdomResult solve_fdom(const Graph& g, const std::string& method, const Caps& caps) {
  if (method == "exact" || (method == "auto" && g.order() <= caps.enumeration))
    return fdom_exact(g, caps.enumeration);
  if (method != "colgen" && method != "auto") throw InvalidArgument("method must be exact, colgen or auto");
  return fdom_colgen(g, ColgenOptions{caps.iterations});
}

int report_check(Output& out, const CheckResult& r, const std::string& what) {
  if (out.json()) {
    out.emit({{"check", what}, {"ok", r.ok}, {"message", r.message}});
  } else {
    out.line(r.ok ? "ok" : "FAIL: " + r.message);
  }
  return r.ok ? kExitOk : kExitFail;
}

// corpus-run: one result per file, in file name order.
struct FileResult {
  std::string file;
  std::int64_t graphs = 0;
  std::int64_t passed = 0;
  std::vector<std::string> failures;
};

bool run_check(const std::string& check, const Graph& g, const Caps& caps, std::string& why) {
  if (check == "bad-family") {
    auto r = fdom_exact(g, caps.enumeration);
    if (!verify_primal(g, r.primal).ok || !verify_dual(g, r.dual).ok) {
      why = "certificate does not verify";
      return false;
    }
    if (!(r.value < Rational(5, 2))) {
      why = "fdom = " + r.value.str();
      return false;
    }
    return true;
  }
  if (check == "construct52") {
    auto d = construct52(g, caps.coins);
    auto c = check_f_dominating(d, degree_demand(g), Rational(2, 5));
    if (!c.ok) {
      why = c.message;
      return false;
    }
    auto r = fdom_exact(g, caps.enumeration);
    if (r.value < Rational(5, 2)) {
      why = "fdom = " + r.value.str();
      return false;
    }
    return true;
  }
  if (check == "fdom") {
    auto r = solve_fdom(g, "auto", caps);
    auto p = verify_primal(g, r.primal), q = verify_dual(g, r.dual);
    if (!p.ok || !q.ok) {
      why = !p.ok ? p.message : q.message;
      return false;
    }
    return true;
  }
  throw InvalidArgument("unknown check: " + check);
}

FileResult run_file(const fs::path& path, const std::string& check, const Caps& caps) {
  FileResult res;
  res.file = path.filename().string();
  auto one = [&](const Graph& g, const std::string& label) {
    ++res.graphs;
    std::string why;
    try {
      if (run_check(check, g, caps, why)) {
        ++res.passed;
        return;
      }
    } catch (const InvalidArgument&) {
      throw;
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (res.failures.size() < 10) res.failures.push_back(label + ": " + why);
  };
  if (is_graph6_path(path.string())) {
    std::ifstream f(path);
    if (!f) throw InvalidArgument("cannot read " + path.string());
    std::string line;
    while (std::getline(f, line))
      if (!line.empty()) one(parse_graph6(line), line);
  } else {
    one(read_graph_file(path.string()), res.file);
  }
  return res;
}

Rational approximate(double x) { return Rational(std::llround(x * 1e6), 1000000); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional domatic number toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--in", opt.in, "Input graph (text format, or graph6 for *.g6; - for stdin)");
  app.add_option("--out", opt.out, "Output file (default stdout)");
  app.add_option("--format", opt.format, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "Random seed (default 0)");
  app.add_option("--caps", opt.caps, "Cap overrides key=value: enumeration, domatic, chromatic, coins, "
                                     "iterations, family");

  std::function<int()> handler;
  auto on = [&](CLI::App* sub, std::function<int()> fn) { sub->callback([&handler, fn] { handler = fn; }); };

  // fdom
  std::string method = "auto", primal_out, dual_out;
  auto* fdom_cmd = app.add_subcommand("fdom", "Fractional domatic number with primal and dual certificates");
  fdom_cmd->add_option("--method", method, "exact, colgen or auto")->check(CLI::IsMember({"exact", "colgen", "auto"}));
  fdom_cmd->add_option("--primal-out", primal_out, "Write the primal certificate here");
  fdom_cmd->add_option("--dual-out", dual_out, "Write the dual certificate here");
  on(fdom_cmd, [&] {
    Caps caps = parse_caps(opt.caps);
    Graph g = load_graph(opt.in);
    auto r = solve_fdom(g, method, caps);
    Output out(opt);
    Json cert{{"value", to_json(r.value)}, {"primal", to_json(r.primal)}, {"dual", to_json(r.dual)}};
    if (!out.json()) out.line(r.value.str());
    out.emit(cert);
    if (!primal_out.empty()) write_json_file(primal_out, to_json(r.primal));
    if (!dual_out.empty()) write_json_file(dual_out, to_json(r.dual));
    return kExitOk;
  });

  auto* gamma_cmd = app.add_subcommand("gamma", "Domination number with a minimum dominating set");
  on(gamma_cmd, [&] {
    Graph g = load_graph(opt.in);
    auto r = domination_number(g);
    Output out(opt);
    if (out.json()) {
      out.emit({{"gamma", r.size}, {"set", r.witness.to_vector()}});
    } else {
      out.line(std::to_string(r.size));
      out.line(set_text(r.witness));
    }
    return kExitOk;
  });

  auto* domatic_cmd = app.add_subcommand("domatic", "Domatic number with a partition");
  on(domatic_cmd, [&] {
    Caps caps = parse_caps(opt.caps);
    Graph g = load_graph(opt.in);
    auto r = domatic_number(g, caps.domatic);
    Output out(opt);
    if (out.json()) {
      Json classes = Json::array();
      for (const auto& c : r.classes) classes.push_back(c.to_vector());
      out.emit({{"domatic", r.number}, {"classes", classes}});
    } else {
      out.line(std::to_string(r.number));
      for (const auto& c : r.classes) out.line(set_text(c));
    }
    return kExitOk;
  });

  bool trace_flag = false;
  auto* c52_cmd = app.add_subcommand("construct52", "Random dominating set with membership 2/5");
  c52_cmd->add_flag("--trace", trace_flag, "Print reduction counts to stderr");
  on(c52_cmd, [&] {
    Caps caps = parse_caps(opt.caps);
    Graph g = load_graph(opt.in);
    ConstructTrace trace;
    auto d = construct52(g, caps.coins, &trace);
    Output out(opt);
    out.emit(to_json(d, Rational(2, 5)));
    if (trace_flag)
      for (int i = 0; i < kReductionKinds; ++i)
        std::cerr << reduction_name(static_cast<Reduction>(i)) << " " << trace.counts[i] << "\n";
    return kExitOk;
  });

  int planar_k = 2;
  auto* planar_cmd = app.add_subcommand("planar-construct", "Random dominating set for large girth, membership k/(3k-1)");
  planar_cmd->add_option("--k", planar_k, "k >= 2");
  on(planar_cmd, [&] {
    Graph g = load_graph(opt.in);
    auto d = planar_girth_construct(g, planar_k);
    Output out(opt);
    out.emit(to_json(d, Rational(planar_k, 3 * planar_k - 1)));
    return kExitOk;
  });

  std::string v_primal, v_dual, v_colouring, v_distribution, demand = "degree";
  bool v_proper = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate, colouring or distribution against a graph");
  auto* vo1 = verify_cmd->add_option("--primal", v_primal, "Primal certificate JSON");
  auto* vo2 = verify_cmd->add_option("--dual", v_dual, "Dual certificate or weight vector JSON");
  auto* vo3 = verify_cmd->add_option("--colouring", v_colouring, "Colouring JSON (dominating unless --proper)");
  auto* vo4 = verify_cmd->add_option("--distribution", v_distribution, "Distribution JSON");
  vo1->excludes(vo2)->excludes(vo3)->excludes(vo4);
  vo2->excludes(vo3)->excludes(vo4);
  vo3->excludes(vo4);
  verify_cmd->add_flag("--proper", v_proper, "Check a proper colouring instead of a dominating one");
  verify_cmd->add_option("--demand", demand, "Distribution demand: degree (4/5 on leaves, else 1) or one")
      ->check(CLI::IsMember({"degree", "one"}));
  on(verify_cmd, [&] {
    Graph g = load_graph(opt.in);
    Output out(opt);
    if (!v_primal.empty()) return report_check(out, verify_primal(g, primal_from_json(parse_json(read_text(v_primal)))), "primal");
    if (!v_dual.empty()) return report_check(out, verify_dual(g, dual_from_json(parse_json(read_text(v_dual)))), "dual");
    if (!v_colouring.empty()) {
      auto c = colouring_from_json(parse_json(read_text(v_colouring)));
      CheckResult r;
      try {
        check_shape(g, c);
        bool ok = v_proper ? is_proper_colouring(g, c) : is_dominating_colouring(g, c);
        if (!ok) r = {false, v_proper ? "colouring is not proper" : "a closed neighbourhood misses a colour"};
      } catch (const InvalidArgument& e) {
        r = {false, e.what()};
      }
      return report_check(out, r, "colouring");
    }
    if (!v_distribution.empty()) {
      auto host = share(g);
      auto [d, r] = distribution_from_json(parse_json(read_text(v_distribution)), host);
      auto f = demand == "one" ? constant_demand(g.order(), Rational(1)) : degree_demand(g);
      return report_check(out, check_f_dominating(d, f, r), "distribution");
    }
    throw InvalidArgument("verify needs one of --primal, --dual, --colouring, --distribution");
  });

  std::string gen_family;
  std::vector<int> gen_params;
  bool gen_g6 = false;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a named graph");
  gen_cmd->add_option("family", gen_family, "cycle, path, complete, complete-bipartite, kneser, hypercube, theta, "
                                            "incidence, girth6, coxeter, petersen, bad-family")
      ->required();
  gen_cmd->add_option("params", gen_params, "Integer parameters");
  gen_cmd->add_flag("--graph6", gen_g6, "Write graph6 instead of the text format");
  on(gen_cmd, [&] {
    Graph g = generate_named(gen_family, gen_params);
    Output out(opt);
    if (gen_g6) {
      out.line(to_graph6(g));
    } else {
      write_graph(out.stream(), g);
    }
    return kExitOk;
  });

  bool reduce_check = false;
  auto* reduce_cmd = app.add_subcommand("reduce-s", "Split graph of the hardness reduction");
  reduce_cmd->add_flag("--check", reduce_check, "Compare chi_f <= 3 with fdom of the split graph >= 3");
  on(reduce_cmd, [&] {
    Graph g = load_graph(opt.in);
    Output out(opt);
    if (!reduce_check) {
      write_graph(out.stream(), split_construction(g));
      return kExitOk;
    }
    auto r = check_reduction(g);
    Json j{{"chi_f", to_json(r.chi_f)},
           {"fdom_split", to_json(r.fdom_split)},
           {"chi_f_at_most_3", r.chi_side},
           {"fdom_split_at_least_3", r.fdom_side},
           {"extension_checked", r.extension_checked},
           {"extension_ok", r.extension_ok},
           {"restriction_checked", r.restriction_checked},
           {"restriction_ok", r.restriction_ok},
           {"ok", r.ok()}};
    if (out.json()) {
      out.emit(j);
    } else {
      out.line("chi_f " + r.chi_f.str());
      out.line("fdom(S) " + r.fdom_split.str());
      out.line(r.ok() ? "ok" : "FAIL");
    }
    return r.ok() ? kExitOk : kExitFail;
  });

  auto* chi_cmd = app.add_subcommand("chi", "Chromatic number (budget from FDOMLAB_TIME_BUDGET_MS)");
  on(chi_cmd, [&] {
    Caps caps = parse_caps(opt.caps);
    Graph g = load_graph(opt.in);
    auto r = chromatic_number(g, caps.chromatic);
    Output out(opt);
    if (out.json()) {
      out.emit({{"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact()}, {"colouring", r.colouring}});
    } else {
      out.line(r.exact() ? std::to_string(r.upper)
                         : "bounds " + std::to_string(r.lower) + " " + std::to_string(r.upper));
    }
    if (!r.exact()) std::cerr << "time budget exceeded\n";
    return r.exact() ? kExitOk : kExitCap;
  });

  auto* chif_cmd = app.add_subcommand("chif", "Fractional chromatic number with a proper colouring");
  on(chif_cmd, [&] {
    Graph g = load_graph(opt.in);
    auto r = fractional_chromatic(g);
    auto c = proper_colouring(g, r);
    WeightVector w = r.dual;
    Output out(opt);
    if (!out.json()) out.line(r.value.str());
    out.emit({{"value", to_json(r.value)}, {"colouring", to_json(c)}, {"dual", to_json(make_dual(w))}});
    return kExitOk;
  });

  bool full_direct = false;
  auto* full_cmd = app.add_subcommand("fullness", "Domatic and fractional domatic fullness of a regular graph");
  full_cmd->add_flag("--direct", full_direct, "Cross-check with the domatic number and the fractional LP");
  on(full_cmd, [&] {
    Graph g = load_graph(opt.in);
    FullnessOptions fo;
    fo.direct_dom = fo.direct_fdom = full_direct;
    auto r = fullness_check(g, fo);
    Json j{{"degree", r.degree},
           {"chi_square_lower", r.chi_square.lower},
           {"chi_square_upper", r.chi_square.upper},
           {"chi_f_square", to_json(r.chi_f_square)},
           {"fdom_full", r.fdom_full},
           {"consistent", r.consistent}};
    j["dom_full"] = r.dom_full ? Json(*r.dom_full) : Json(nullptr);
    if (r.dom_direct) j["dom"] = *r.dom_direct;
    if (r.fdom_direct) j["fdom"] = to_json(*r.fdom_direct);
    Output out(opt);
    if (out.json()) {
      out.emit(j);
    } else {
      out.line("dom-full " + std::string(!r.dom_full ? "unknown" : *r.dom_full ? "yes" : "no"));
      out.line("fdom-full " + std::string(r.fdom_full ? "yes" : "no"));
      out.line("chi(G^2) " + (r.chi_square.exact() ? std::to_string(r.chi_square.upper)
                                                    : std::to_string(r.chi_square.lower) + ".." +
                                                          std::to_string(r.chi_square.upper)));
      out.line("chi_f(G^2) " + r.chi_f_square.str());
    }
    return r.consistent ? kExitOk : kExitFail;
  });

  std::string lnp;
  std::int64_t trials = 100000;
  auto* sample_cmd = app.add_subcommand("sample-lnbound", "Sample the coin-flip dominating set");
  sample_cmd->add_option("--p", lnp, "Coin probability num/den (default ln(d+1)/(d+1), d the minimum degree)");
  sample_cmd->add_option("--trials", trials, "Number of samples");
  on(sample_cmd, [&] {
    Graph g = load_graph(opt.in);
    Rational p;
    if (lnp.empty()) {
      double d1 = g.min_degree() + 1.0;
      p = approximate(std::log(d1) / d1);
    } else {
      p = Rational::parse(lnp);
    }
    auto r = sample_lnbound(g, p, trials, opt.seed);
    bool ok = r.all_dominating && r.max_frequency <= r.bound + 0.01;
    Output out(opt);
    if (out.json()) {
      out.emit({{"p", to_json(p)},
                {"trials", r.trials},
                {"all_dominating", r.all_dominating},
                {"max_frequency", r.max_frequency},
                {"bound", r.bound},
                {"ok", ok}});
    } else {
      out.line("p " + p.str());
      out.line("max frequency " + std::to_string(r.max_frequency) + " bound " + std::to_string(r.bound));
      out.line(ok ? "ok" : "FAIL");
    }
    return ok ? kExitOk : kExitFail;
  });

  std::string fam;
  std::vector<int> fam_params;
  int fam_vertex = 0;
  auto* cert_cmd = app.add_subcommand("family-cert", "Closed-form certificates for named families");
  cert_cmd->add_option("family", fam, "kmn, hnd, girth6, coxeter, kneser, hammock, neighbourhood, uniform")->required();
  cert_cmd->add_option("params", fam_params, "Integer parameters");
  cert_cmd->add_option("--vertex", fam_vertex, "Vertex for the neighbourhood certificate");
  on(cert_cmd, [&] {
    auto want = [&](std::size_t k) {
      if (fam_params.size() != k) throw InvalidArgument(fam + " expects " + std::to_string(k) + " parameter(s)");
    };
    Graph g;
    std::optional<PrimalCertificate> primal;
    std::optional<DualCertificate> dual;
    if (fam == "kmn") {
      want(2);
      int m = std::max(fam_params[0], fam_params[1]), n = std::min(fam_params[0], fam_params[1]);
      g = complete_bipartite(m, n);
      primal = kmn_primal_certificate(m, n);
      dual = kmn_dual_certificate(m, n);
    } else if (fam == "hnd") {
      want(2);
      int d = fam_params[0], q = fam_params[1];
      g = gen_incidence(d * (q + 1), d);
      dual = hnd_certificate(d, q);
    } else if (fam == "girth6") {
      want(1);
      g = gen_girth6_family(fam_params[0]);
      dual = girth6_certificate(fam_params[0]);
    } else if (fam == "coxeter" || fam == "kneser") {
      std::vector<std::vector<int>> gens;
      if (fam == "coxeter") {
        want(0);
        g = coxeter_graph();
        gens = coxeter_automorphisms();
      } else {
        want(2);
        g = kneser_graph(fam_params[0], fam_params[1]);
        gens = kneser_automorphisms(fam_params[0], fam_params[1]);
      }
      primal = symmetric_certificate(g, gens, domination_number(g).witness);
      dual = neighbourhood_certificate(g, 0);
    } else if (fam == "hammock" || fam == "neighbourhood" || fam == "uniform") {
      want(0);
      g = load_graph(opt.in);
      if (fam == "hammock") {
        auto hs = hammocks(g);
        if (hs.empty()) throw InvalidArgument("graph has no hammock");
        dual = hammock_certificate(g, hs.front());
      } else if (fam == "neighbourhood") {
        dual = neighbourhood_certificate(g, fam_vertex);
      } else {
        dual = uniform_certificate(g);
      }
    } else {
      throw InvalidArgument("unknown certificate family: " + fam);
    }
    bool ok = true;
    Json j = Json::object();
    if (primal) {
      j["primal"] = to_json(*primal);
      j["primal_ok"] = verify_primal(g, *primal).ok;
      ok = ok && j["primal_ok"].get<bool>();
    }
    if (dual) {
      j["dual"] = to_json(*dual);
      j["dual_ok"] = verify_dual(g, *dual).ok;
      ok = ok && j["dual_ok"].get<bool>();
    }
    Output out(opt);
    if (!out.json()) {
      if (primal) out.line("primal " + primal->objective.str() + (j["primal_ok"].get<bool>() ? " ok" : " FAIL"));
      if (dual) out.line("dual " + dual->total.str() + (j["dual_ok"].get<bool>() ? " ok" : " FAIL"));
    }
    out.emit(j);
    return ok ? kExitOk : kExitFail;
  });

  int fam_a = 0, fam_b = 0;
  bool fam_sets = false;
  auto* inter_cmd = app.add_subcommand("intersecting-family", "Set family with the prescribed intersection sizes");
  inter_cmd->add_option("--a", fam_a, "Size of A")->required();
  inter_cmd->add_option("--b", fam_b, "Size of B")->required();
  inter_cmd->add_flag("--sets", fam_sets, "Include the sets in the JSON output");
  on(inter_cmd, [&] {
    Caps caps = parse_caps(opt.caps);
    auto f = intersecting_family(fam_a, fam_b, caps.family);
    Json j{{"a", f.a_size}, {"b", f.b_size}, {"t", f.t}, {"sizes_ok", f.sizes_ok},
           {"a_pairs_ok", f.a_pairs_ok}, {"b_pairs_ok", f.b_pairs_ok}, {"ok", f.ok()}};
    if (fam_sets) j["sets"] = f.sets;
    Output out(opt);
    if (out.json()) {
      out.emit(j);
    } else {
      out.line("t " + std::to_string(f.t));
      out.line(f.ok() ? "ok" : "FAIL");
    }
    return f.ok() ? kExitOk : kExitFail;
  });

  std::string corpus_dir, corpus_check;
  int jobs = 1;
  auto* corpus_cmd = app.add_subcommand("corpus-run", "Run a check over every graph file in a directory");
  corpus_cmd->add_option("dir", corpus_dir, "Directory of graph files (*.g6 files hold one graph per line)")
      ->required();
  corpus_cmd->add_option("--check", corpus_check, "bad-family, construct52 or fdom")
      ->required()
      ->check(CLI::IsMember({"bad-family", "construct52", "fdom"}));
  corpus_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  on(corpus_cmd, [&] {
    Caps caps = parse_caps(opt.caps);
    if (!fs::is_directory(corpus_dir)) throw InvalidArgument("not a directory: " + corpus_dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(corpus_dir))
      if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<FileResult> results(files.size());
    std::vector<std::string> errors(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next++) < files.size();) {
        try {
          results[i] = run_file(files[i], corpus_check, caps);
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < files.size(); ++i)
      if (!errors[i].empty()) throw InvalidArgument(files[i].string() + ": " + errors[i]);

    std::int64_t graphs = 0, passed = 0;
    Json rows = Json::array();
    for (const auto& r : results) {
      graphs += r.graphs;
      passed += r.passed;
      rows.push_back({{"file", r.file}, {"graphs", r.graphs}, {"passed", r.passed},
                      {"failed", r.graphs - r.passed}, {"failures", r.failures}});
    }
    Output out(opt);
    if (out.json()) {
      out.emit({{"check", corpus_check}, {"files", rows}, {"graphs", graphs}, {"passed", passed},
                {"failed", graphs - passed}});
    } else {
      for (const auto& r : results) {
        out.line(r.file + " " + std::to_string(r.passed) + "/" + std::to_string(r.graphs));
        for (const auto& f : r.failures) out.line("  " + f);
      }
      out.line("total " + std::to_string(passed) + "/" + std::to_string(graphs));
    }
    return passed == graphs ? kExitOk : kExitFail;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    parse_caps(opt.caps);
    return handler();
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const BadFamilyError& e) {
    std::cerr << e.what() << "\n";
    return kExitFail;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitFail;
  }
}
