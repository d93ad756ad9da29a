// Command-line front end: run the identity verifiers, print per-report
// lines or JSON. Exit code 0 iff every report verified, 1 on any mismatch,
// 2 on usage or precondition errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "cyclo/derangements.hpp"
#include "cyclo/identities.hpp"

using namespace cyclo;
using nlohmann::json;

namespace {

struct Options {
  std::string identity;
  long n = 0;
  std::string n_range;
  std::string method = "det";
  std::string symbol = "sun1";
  long i = -1, j = -1;
  bool as_json = false;
  unsigned brute_limit = 11;
  unsigned workers = 1;
  std::string golden;
};

std::vector<unsigned> parse_n_values(const Options& opt) {
  std::vector<unsigned> values;
  if (!opt.n_range.empty()) {
    // A..B:STEP, STEP optional (default 1)
    const auto dots = opt.n_range.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("--n-range", "expected A..B[:STEP]");
    const auto colon = opt.n_range.find(':', dots);
    const long a = std::stol(opt.n_range.substr(0, dots));
    const long b = std::stol(opt.n_range.substr(
        dots + 2, colon == std::string::npos ? std::string::npos : colon - dots - 2));
    const long step = colon == std::string::npos ? 1 : std::stol(opt.n_range.substr(colon + 1));
    if (a < 2 || b < a || step < 1) throw CLI::ValidationError("--n-range", "bad range");
    for (long v = a; v <= b; v += step) values.push_back(static_cast<unsigned>(v));
  } else if (opt.n > 0) {
    values.push_back(static_cast<unsigned>(opt.n));
  }
  return values;
}

CirculantSymbol make_symbol(const CyclotomicContext& ctx, const std::string& spec) {
  if (spec == "sun1") return from_sun1(ctx);
  if (spec == "sun2") return from_sun2(ctx);
  if (spec.rfind("abc:", 0) == 0) {
    long a, b, c;
    char comma1, comma2;
    std::istringstream in(spec.substr(4));
    if (in >> a >> comma1 >> b >> comma2 >> c && comma1 == ',' && comma2 == ',')
      return from_abc(ctx, a, b, c);
  }
  throw std::invalid_argument("bad symbol spec '" + spec + "' (want sun1, sun2 or abc:a,b,c)");
}

Method parse_method(const std::string& m) {
  if (m == "brute") return Method::brute;
  if (m == "det") return Method::det;
  if (m == "spectrum") return Method::spectrum;
  if (m == "minor" || m == "minor_thm") return Method::minor_thm;
  throw std::invalid_argument("unknown method '" + m + "'");
}

json report_json(const VerificationReport& r, bool zero_elapsed) {
  return json{{"identity", to_string(r.identity)},
              {"n", r.n},
              {"method", to_string(r.method)},
              {"lhs", r.lhs.to_string()},
              {"rhs", r.rhs.to_string()},
              {"verified", r.verified},
              {"elapsed_ms", zero_elapsed ? 0 : r.elapsed_ms},
              {"details", r.details}};
}

void print_human(const VerificationReport& r) {
  std::cout << to_string(r.identity) << " n=" << r.n << " method=" << to_string(r.method)
            << " lhs=" << r.lhs.to_string() << " rhs=" << r.rhs.to_string() << " "
            << (r.verified ? "verified" : "MISMATCH") << " (" << r.elapsed_ms << " ms";
  if (!r.details.empty()) std::cout << "; " << r.details;
  std::cout << ")\n";
}

// runs the per-n report generators on a small pool; results keep the
// generation order regardless of completion order
std::vector<VerificationReport> run_tasks(
    const std::vector<std::function<std::vector<VerificationReport>()>>& tasks,
    unsigned workers) {
  std::vector<std::vector<VerificationReport>> slots(tasks.size());
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) slots[t] = tasks[t]();
  } else {
    std::size_t next = 0;
    std::mutex mtx;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t t;
          {
            std::lock_guard<std::mutex> lock(mtx);
            if (next == tasks.size()) return;
            t = next++;
          }
          slots[t] = tasks[t]();
        }
      });
    for (auto& th : pool) th.join();
  }
  std::vector<VerificationReport> all;
  for (auto& s : slots)
    for (auto& r : s) all.push_back(std::move(r));
  return all;
}

int emit(const std::vector<VerificationReport>& reports, const Options& opt) {
  const bool all_ok =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.verified; });
  if (opt.as_json || !opt.golden.empty()) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r, !opt.golden.empty()));
    const std::string text = arr.dump(2) + "\n";
    std::cout << text;
    if (!opt.golden.empty()) {
      std::ifstream in(opt.golden, std::ios::binary);
      if (!in) {
        std::cerr << "error: cannot open golden file " << opt.golden << "\n";
        return 2;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      if (buf.str() != text) {
        std::cerr << "golden mismatch against " << opt.golden << "\n";
        return 1;
      }
    }
  } else {
    for (const auto& r : reports) print_human(r);
  }
  return all_ok ? 0 : 1;
}

int run_verify(const Options& opt) {
  const std::vector<unsigned> n_values = parse_n_values(opt);
  if (n_values.empty()) throw std::invalid_argument("give --n or --n-range");

  const bool sun = opt.identity == "sun1" || opt.identity == "sun2";
  for (unsigned n : n_values) {
    if ((sun || opt.identity == "scaling") && (n % 2 == 0 || n <= 1))
      throw std::invalid_argument("n must be odd and > 1");
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (sun && parse_method(opt.method) == Method::brute && n > opt.brute_limit)
      throw std::invalid_argument("n=" + std::to_string(n) +
                                  " exceeds the brute-force limit (override with --brute-limit)");
  }

  std::vector<std::function<std::vector<VerificationReport>()>> tasks;
  for (unsigned n : n_values) {
    tasks.push_back([n, &opt]() -> std::vector<VerificationReport> {
      CyclotomicContext ctx(n);
      if (opt.identity == "sun1")
        return {verify_sun1(ctx, parse_method(opt.method), opt.workers)};
      if (opt.identity == "sun2")
        return {verify_sun2(ctx, parse_method(opt.method), opt.workers)};
      if (opt.identity == "theorem3") return verify_theorem3(make_symbol(ctx, opt.symbol));
      if (opt.identity == "lemma1") return {verify_lemma1(ctx)};
      if (opt.identity == "scaling") return {verify_scaling(ctx)};
      if (opt.identity == "eei") {
        const CirculantSymbol sym = make_symbol(ctx, opt.symbol);
        std::vector<VerificationReport> reports;
        for (unsigned i = 0; i < n; ++i) {
          if (opt.i >= 0 && static_cast<long>(i) != opt.i) continue;
          for (unsigned j = 1; j <= n; ++j) {
            if (opt.j >= 0 && static_cast<long>(j) != opt.j) continue;
            reports.push_back(verify_eei_report(sym, i, j));
          }
        }
        return reports;
      }
      throw std::invalid_argument("unknown identity '" + opt.identity + "'");
    });
  }
  return emit(run_tasks(tasks, opt.workers), opt);
}

int run_spectrum(const Options& opt) {
  const std::vector<unsigned> n_values = parse_n_values(opt);
  if (n_values.empty()) throw std::invalid_argument("give --n or --n-range");
  for (unsigned n : n_values) {
    CyclotomicContext ctx(n);
    const SpectrumResult s = dft_eigenvalues(make_symbol(ctx, opt.symbol));
    if (opt.as_json) {
      json out{{"n", n}, {"symbol", opt.symbol}};
      out["lambdas"] = json::array();
      for (const auto& l : s.lambdas) out["lambdas"].push_back(l.to_string());
      out["zero_indices"] = s.zero_indices;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "spectrum of " << opt.symbol << " at n=" << n << ":\n";
      for (unsigned i = 0; i < s.lambdas.size(); ++i)
        std::cout << "  lambda_" << i << " = " << s.lambdas[i].to_string() << "\n";
      std::cout << "  zero indices:";
      for (unsigned z : s.zero_indices) std::cout << " " << z;
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of root-of-unity determinant identities in Q(zeta_n)"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("identity", opt.identity, "sun1|sun2|theorem3|lemma1|scaling|eei")
      ->required();
  verify->add_option("--n", opt.n, "single n value");
  verify->add_option("--n-range", opt.n_range, "range A..B[:STEP]");
  verify->add_option("--method", opt.method, "brute|det|spectrum|minor (default det)");
  verify->add_option("--symbol", opt.symbol, "sun1|sun2|abc:a,b,c (default sun1)");
  verify->add_option("--i", opt.i, "eigenvalue index for eei (default: all)");
  verify->add_option("--j", opt.j, "deleted row/column for eei (default: all)");
  verify->add_flag("--json", opt.as_json, "emit a JSON report array");
  verify->add_option("--brute-limit", opt.brute_limit, "soft limit for the brute route");
  verify->add_option("--workers", opt.workers, "worker threads (default 1)");
  verify->add_option("--golden", opt.golden,
                     "compare JSON output byte-wise against FILE (elapsed_ms emitted as 0)");

  CLI::App* spectrum = app.add_subcommand("spectrum", "print exact DFT eigenvalues");
  spectrum->add_option("--n", opt.n, "single n value");
  spectrum->add_option("--n-range", opt.n_range, "range A..B[:STEP]");
  spectrum->add_option("--symbol", opt.symbol, "sun1|sun2|abc:a,b,c")->required();
  spectrum->add_flag("--json", opt.as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(opt);
    return run_spectrum(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
