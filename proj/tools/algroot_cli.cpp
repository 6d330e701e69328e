// algroot: isolate real roots of polynomials over Q(alpha), run benchmarks,
// print bounds, generate instances.
//
// Exit codes: 0 success, 1 solver disagreement or internal failure,
// 2 invalid input, 3 timeout.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "algroot/algroot.hpp"

using namespace algroot;

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "not an integer: " + item);
    }
  }
  if (out.empty()) throw Error(ErrorKind::InvalidInput, "empty list: " + s);
  return out;
}

std::vector<Method> parse_methods(const std::string& s) {
  if (s == "all") return {Method::Indirect, Method::Sturm, Method::Bitstream};
  std::vector<Method> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_method(item));
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Timeout: return 3;
    default: return 2;
  }
}

struct SolveArgs {
  std::string input, method = "all";
  bool trace = false, no_check = false;
  long refine = 0;
  double timeout = 0;
};

int run_solve(const SolveArgs& a) {
  AlgPoly B = read_instance(a.input);
  json out;
  out["params"] = to_json(params_of(B));
  out["results"] = json::array();
  long count = -1;
  bool agree = true;
  for (Method m : parse_methods(a.method)) {
    SolveOptions opt;
    opt.deadline = Deadline::after(a.timeout);
    opt.verify_square_free = !a.no_check;
    IsolationResult res;
    json extra;
    if (m == Method::Indirect) {
      auto [r, tr] = indirect_isolate(B, opt);
      res = std::move(r);
      if (a.trace) extra = to_json(tr);
    } else {
      res = isolate_roots(B, m, opt);
    }
    if (a.refine > 0)
      for (auto& r : res.roots) r = refine_root(B, r, a.refine, opt.deadline);
    json j = to_json(res);
    j["method"] = to_string(m);
    if (!extra.is_null()) j["trace"] = extra;
    out["results"].push_back(j);
    long c = static_cast<long>(res.roots.size());
    if (count >= 0 && c != count) agree = false;
    count = c;
  }
  std::cout << out.dump(2) << '\n';
  if (!agree) {
    std::cerr << "error: methods disagree on the number of roots\n";
    return 1;
  }
  return 0;
}

struct BenchArgs {
  std::string family = "random", ms = "2", ns = "10", methods = "all", out, timings;
  int bits = 10, reps = 10;
  std::uint64_t seed = 1;
  double timeout = 0;
};

int run_bench(const BenchArgs& a) {
  BenchSpec spec;
  spec.family = parse_family(a.family);
  spec.ms = parse_int_list(a.ms);
  spec.ns = parse_int_list(a.ns);
  spec.coeff_bits = a.bits;
  spec.repetitions = a.reps;
  spec.seed = a.seed;
  spec.methods = parse_methods(a.methods);
  spec.timeout_seconds = a.timeout;
  if (spec.coeff_bits < 1 || spec.coeff_bits > 60) throw Error(ErrorKind::InvalidInput, "--bits must be in 1..60");
  BenchResult r = run_benchmark(spec);
  const std::string csv = bench_csv(r), table = bench_timing_table(r);
  if (!a.out.empty()) write_text(a.out, csv);
  if (!a.timings.empty()) write_text(a.timings, table);
  if (a.out.empty() && a.timings.empty()) std::cout << csv << '\n' << table;
  if (r.disagreements > 0) {
    std::cerr << "error: " << r.disagreements << " root-count disagreements\n";
    return 1;
  }
  return 0;
}

struct BoundsArgs {
  std::string params, input;
};

int run_bounds(const BoundsArgs& a) {
  json out;
  if (!a.input.empty()) {
    AlgPoly B = read_instance(a.input);
    out["params"] = to_json(params_of(B));
    out["bounds"] = to_json(instance_bounds(B));
  } else {
    std::vector<int> v = parse_int_list(a.params);
    if (v.size() < 4 || v.size() > 5)
      throw Error(ErrorKind::InvalidInput, "--params expects m,n,tau,sigma[,ell]");
    InstanceParams p;
    p.m = v[0];
    p.n = v[1];
    p.tau = v[2];
    p.sigma = v[3];
    p.ell = v.size() == 5 ? v[4] : 1;
    p.eta = p.m - 1;  // worst case
    p.validate();
    out["params"] = to_json(p);
    if (p.ell == 1) {
      out["indirect"] = to_json(indirect_bounds(p));
      out["direct"] = to_json(direct_bounds(p));
      auto rs = resultant_size_bound(p.m, p.eta, p.n, p.sigma, p.tau);
      out["resultant"] = {{"degree", rs.degree}, {"bitsize", rs.bitsize.get_si()}};
    }
    out["multi_extension"] = to_json(multi_ext_bounds(p));
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

struct GenArgs {
  std::string family = "random", out;
  int m = 2, n = 10, bits = 10;
  std::uint64_t seed = 1;
};

int run_gen(const GenArgs& a) {
  AlgPoly B = generate(parse_family(a.family), a.m, a.n, a.bits, a.seed);
  write_text(a.out, to_json(B).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real root isolation over simple algebraic extensions"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Isolate the real roots of an instance");
  solve->add_option("--input,-i", sa.input, "Instance JSON")->required();
  solve->add_option("--method,-m", sa.method, "indirect, sturm, bitstream or all")
      ->check(CLI::IsMember({"indirect", "sturm", "bitstream", "all"}));
  solve->add_flag("--trace", sa.trace, "Include the resultant pipeline trace (indirect)");
  solve->add_option("--refine", sa.refine, "Refine every interval to width 2^-L")->check(CLI::NonNegativeNumber);
  solve->add_option("--timeout", sa.timeout, "Seconds per method, 0 for none")->check(CLI::NonNegativeNumber);
  solve->add_flag("--no-check", sa.no_check, "Skip the square-freeness check");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Compare the solvers on an instance family");
  bench->add_option("--family", ba.family)->check(CLI::IsMember({"random", "laguerre", "wilkinson", "mignotte"}));
  bench->add_option("--m", ba.ms, "Comma-separated extension degrees");
  bench->add_option("--n", ba.ns, "Comma-separated degrees in y");
  bench->add_option("--bits", ba.bits, "Coefficient bits (random family)");
  bench->add_option("--reps", ba.reps, "Instances per grid point")->check(CLI::PositiveNumber);
  bench->add_option("--seed", ba.seed);
  bench->add_option("--timeout", ba.timeout, "Seconds per run, 0 for none")->check(CLI::NonNegativeNumber);
  bench->add_option("--methods", ba.methods, "Comma-separated methods or all");
  bench->add_option("--out", ba.out, "CSV of counts and solver statistics");
  bench->add_option("--timings", ba.timings, "CSV of mean/median wall times, n by m");

  BoundsArgs bo;
  auto* bounds = app.add_subcommand("bounds", "Print root bounds");
  auto* po = bounds->add_option("--params", bo.params, "m,n,tau,sigma[,ell]");
  auto* io = bounds->add_option("--input,-i", bo.input, "Instance JSON");
  po->excludes(io);
  bounds->require_option(1);

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate a benchmark instance");
  gen->add_option("--family", ga.family)->check(CLI::IsMember({"random", "laguerre", "wilkinson", "mignotte"}));
  gen->add_option("--m", ga.m);
  gen->add_option("--n", ga.n);
  gen->add_option("--bits", ga.bits);
  gen->add_option("--seed", ga.seed);
  gen->add_option("--out,-o", ga.out, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*solve) return run_solve(sa);
    if (*bench) return run_bench(ba);
    if (*bounds) return run_bounds(bo);
    if (*gen) return run_gen(ga);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
