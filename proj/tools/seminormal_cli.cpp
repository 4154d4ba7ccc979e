// Command-line surface: expansions, base-change and Gram matrices,
// verification suites, modular reports, and the complexity benchmark.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "seminormal/bench.hpp"
#include "seminormal/json_io.hpp"
#include "seminormal/verify.hpp"

using namespace seminormal;

namespace {

struct CommonOpts {
  std::string format = "json";
  std::string out;
  long max_dim = 5000;
  int jobs = 1;
  std::uint64_t seed = 20240601;
  int verbosity = 0;
};

void write_output(const CommonOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream os(opts.out);
    if (!os) throw std::runtime_error("cannot open output file " + opts.out);
    os << text;
  }
}

long dim_guard(const CommonOpts& opts) {
  if (const char* env = std::getenv("SEMINORMAL_MAX_DIM")) return std::atol(env);
  return opts.max_dim;
}

void check_guard(const CommonOpts& opts, const Partition& shape) {
  Int dim = standard_count(shape);
  if (dim > dim_guard(opts))
    throw std::runtime_error("dimension " + dim.get_str() + " exceeds the guard (" +
                             std::to_string(dim_guard(opts)) +
                             "); raise --max-dim or SEMINORMAL_MAX_DIM");
}

std::string describe_nonstandard(const Tableau& t) {
  for (size_t r = 0; r < t.rows.size(); ++r)
    for (size_t c = 1; c < t.rows[r].size(); ++c)
      if (t.rows[r][c - 1] > t.rows[r][c])
        return "row " + std::to_string(r + 1) + " decreases at column " + std::to_string(c + 1);
  for (size_t r = 1; r < t.rows.size(); ++r)
    for (size_t c = 0; c < t.rows[r].size(); ++c)
      if (t.rows[r - 1][c] > t.rows[r][c])
        return "column " + std::to_string(c + 1) + " decreases at row " + std::to_string(r + 1);
  return "";
}

std::string expansion_text(const ExpansionDocument& doc) {
  std::ostringstream os;
  os << "f[" << doc.tableau.str() << "]  (shape " << doc.shape.str() << ", method "
     << doc.method << ")\n";
  for (const auto& [t, c] : doc.vector.terms)
    os << "  " << t.str() << "  :  " << c.str() << "\n";
  if (!doc.term_count_trace.empty()) {
    os << "term counts:";
    for (auto v : doc.term_count_trace) os << " " << v;
    os << "\n";
  }
  return os.str();
}

int run_expand(const CommonOpts& opts, const std::string& shape_text,
               const std::string& tableau_text, const std::string& method_name_text) {
  Partition shape = parse_partition(shape_text);
  check_guard(opts, shape);
  Tableau t = parse_tableau(shape, tableau_text);
  if (!is_standard(t)) {
    std::cerr << "tableau " << tableau_text << " is not standard: " << describe_nonstandard(t)
              << "\n";
    return 2;
  }
  Method method = parse_method(method_name_text);
  SpechtModule module(shape);
  ExpansionDocument doc;
  doc.shape = shape;
  doc.tableau = t;
  doc.method = method_name_text;
  switch (method) {
    case Method::Fast: {
      GeneralFtResult r = general_ft(module, t);
      doc.vector = r.f;
      doc.p_factors = r.p_factors;
      break;
    }
    case Method::Stepwise: {
      StepwiseResult r = seminormal_stepwise(module, t);
      doc.vector = r.f;
      doc.term_count_trace = r.term_count_trace;
      break;
    }
    case Method::Projector:
      doc.vector = seminormal_projector(module, t);
      break;
    case Method::GramSchmidt: {
      BaseChange bc = base_change(module, Method::GramSchmidt);
      doc.vector = SpechtVector(shape);
      int row = module.index_of(t);
      for (int j = 0; j < module.dim(); ++j)
        doc.vector.add_term(module.tableau_at(j), bc.m[row][j]);
      break;
    }
  }
  // A James-Murphy tableau gets the predicted denominator product.
  std::vector<int> radials;
  for (const Node& node : removable_nodes(shape))
    if (t == james_murphy_tableau(shape, node)) {
      auto rem = removable_nodes(shape);
      for (const Node& below : rem)
        if (below.row > node.row) radials.push_back(content(node) - content(below));
      break;
    }
  doc.certificate = denominator_certificate(module, doc.vector, t, radials);
  if (opts.format == "text")
    write_output(opts, expansion_text(doc));
  else
    write_output(opts, expansion_to_json(doc).dump(2));
  return 0;
}

int run_basechange(const CommonOpts& opts, const std::string& shape_text,
                   const std::string& method_text) {
  Partition shape = parse_partition(shape_text);
  check_guard(opts, shape);
  SpechtModule module(shape);
  BaseChange bc = base_change(module, parse_method(method_text));
  write_output(opts, base_change_to_json(bc).dump(2));
  return 0;
}

int run_gram(const CommonOpts& opts, const std::string& shape_text) {
  Partition shape = parse_partition(shape_text);
  check_guard(opts, shape);
  SpechtModule module(shape);
  BaseChange bc = base_change(module, Method::Fast);
  write_output(opts, gram_to_json(shape, bc.order, gram_matrix(module, bc)).dump(2));
  return 0;
}

int run_verify(const CommonOpts& opts, int max_n, const std::string& suite) {
  if (max_n < 1 || max_n > 9)
    throw std::runtime_error("verify: --max-n must lie in 1..9 (factorial growth beyond)");
  auto results = run_suites(suite, max_n, opts.jobs, opts.seed);
  bool all_ok = true;
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed() ? "PASS" : "FAIL") << " " << r.name << ": " << r.checks << " checks, "
       << r.failures << " failures\n";
    if (!r.passed()) {
      all_ok = false;
      for (const auto& m : r.messages) os << "    " << m << "\n";
    }
  }
  write_output(opts, os.str());
  return all_ok ? 0 : 1;
}

int run_modular(const CommonOpts& opts, const std::string& shape_text,
                const std::string& node_text, long e, const std::string& tableau_text, int r) {
  Partition shape = parse_partition(shape_text);
  check_guard(opts, shape);
  Json reports = Json::array();
  if (!tableau_text.empty()) {
    Tableau t = parse_tableau(shape, tableau_text);
    reports.push_back(submodule_report_to_json(verify_submodule_tleq(shape, t, r, e)));
  } else if (!node_text.empty()) {
    auto comma = node_text.find(',');
    if (comma == std::string::npos) throw std::runtime_error("--node expects r,c");
    Node node{std::stoi(node_text.substr(0, comma)), std::stoi(node_text.substr(comma + 1))};
    auto rem = removable_nodes(shape);
    int node_index = 0;
    for (size_t k = 0; k < rem.size(); ++k)
      if (rem[k] == node) node_index = static_cast<int>(k) + 1;
    if (node_index == 0) throw std::runtime_error("--node is not a removable node");
    reports.push_back(submodule_report_to_json(verify_submodule_fn(shape, node_index, e)));
  } else {
    int count = static_cast<int>(removable_nodes(shape).size());
    for (int j = 1; j <= count; ++j)
      reports.push_back(submodule_report_to_json(verify_submodule_fn(shape, j, e)));
  }
  write_output(opts, reports.dump(2));
  return 0;
}

int run_bench(const CommonOpts& opts, const std::string& pairs_text, int reps) {
  std::vector<std::pair<int, int>> cases;
  std::istringstream is(pairs_text);
  std::string tok;
  while (std::getline(is, tok, ';')) {
    auto comma = tok.find(',');
    if (comma == std::string::npos) continue;
    cases.emplace_back(std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1)));
  }
  auto rows = fat_hook_bench(cases, reps);
  write_output(opts, bench_csv(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact seminormal bases of Specht modules for the type-A Hecke algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  CommonOpts opts;
  app.add_option("--format", opts.format, "json|text|csv")->capture_default_str();
  app.add_option("--out", opts.out, "output path (stdout when empty)");
  app.add_option("--max-dim", opts.max_dim, "guard on dim S^lambda")->capture_default_str();
  app.add_option("--jobs", opts.jobs, "parallelism degree")->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for randomized checks")->capture_default_str();
  app.add_flag("-v", opts.verbosity, "verbosity");

  std::string shape_text, tableau_text, method_text = "fast", suite = "all";
  std::string node_text, pairs_text = "2,2;2,3;3,2;3,3";
  int max_n = 6, restrict_r = 0, reps = 3;
  long e_order = 2;

  auto* expand = app.add_subcommand("expand", "expand f_t in the standard basis");
  expand->add_option("--shape", shape_text)->required();
  expand->add_option("--tableau", tableau_text)->required();
  expand->add_option("--method", method_text, "fast|stepwise|projector|gram-schmidt")
      ->capture_default_str();

  auto* basechange = app.add_subcommand("basechange", "write M, Minv and gamma norms");
  basechange->add_option("--shape", shape_text)->required();
  basechange->add_option("--method", method_text)->capture_default_str();

  auto* gram = app.add_subcommand("gram", "write the Gram matrix of the bilinear form");
  gram->add_option("--shape", shape_text)->required();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--max-n", max_n)->capture_default_str();
  verify->add_option("--suite", suite,
                     "all|agreement|eigen|orthogonality|denominators|representation|modular|ascent")
      ->capture_default_str();

  auto* modular = app.add_subcommand("modular", "submodule reports at a root of unity");
  modular->add_option("--shape", shape_text)->required();
  modular->add_option("--e", e_order, "order of the root of unity")->required();
  modular->add_option("--node", node_text, "removable node as r,c (default: all nodes)");
  modular->add_option("--tableau", tableau_text, "restricted-tableau mode");
  modular->add_option("--r", restrict_r, "restriction bound for --tableau mode");

  auto* bench = app.add_subcommand("bench", "stepwise vs fast on fat hooks, CSV output");
  bench->add_option("--pairs", pairs_text, "semicolon-separated lambda2,k2 pairs")
      ->capture_default_str();
  bench->add_option("--reps", reps)->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  try {
    if (expand->parsed()) return run_expand(opts, shape_text, tableau_text, method_text);
    if (basechange->parsed()) return run_basechange(opts, shape_text, method_text);
    if (gram->parsed()) return run_gram(opts, shape_text);
    if (verify->parsed()) return run_verify(opts, max_n, suite);
    if (modular->parsed())
      return run_modular(opts, shape_text, node_text, e_order, tableau_text, restrict_r);
    if (bench->parsed()) return run_bench(opts, pairs_text, reps);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
