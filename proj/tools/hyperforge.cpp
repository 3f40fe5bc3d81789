#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperforge/catalog.hpp"
#include "hyperforge/coefficient_cache.hpp"
#include "hyperforge/errors.hpp"
#include "hyperforge/hypergeometric.hpp"
#include "hyperforge/lseries.hpp"
#include "hyperforge/mahler.hpp"
#include "hyperforge/qseries.hpp"
#include "hyperforge/report.hpp"

namespace fs = std::filesystem;
using namespace hyperforge;

namespace {

constexpr int kConfigError = 2;

struct Config {
  unsigned bits = 128;
  std::vector<std::string> filters;
  bool all = false;
  std::string output;
  std::string format = "text";
  unsigned threads = 1;
  std::size_t lseries_n = 10'000'000;
  std::string cache_dir;
  bool controls = false;
};

fs::path resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("HYPERFORGE_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "hyperforge";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "hyperforge";
  return fs::current_path() / ".hyperforge-cache";
}

int cmd_verify(const Config& cfg) {
  RunOptions options;
  options.precision = cfg.bits;
  options.threads = cfg.threads;
  options.lseries_terms = cfg.lseries_n;
  options.cache_dir = resolve_cache_dir(cfg.cache_dir);
  options.include_controls = cfg.controls;
  const std::vector<std::string> filters = cfg.all ? std::vector<std::string>{} : cfg.filters;
  if (select_checks(filters, cfg.controls).empty()) {
    std::cerr << "no checks matched\n";
    return kConfigError;
  }
  const std::vector<CheckResult> results = run_all(filters, options);
  const std::string body = cfg.format == "json" ? render_json(results) : render_text(results);
  if (cfg.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << cfg.output << "\n";
      return kConfigError;
    }
    out << body;
    const std::string text = render_text(results);
    std::cerr << text.substr(text.rfind('\n', text.size() - 2) + 1);
  }
  return verify_exit_code(results);
}

void print_value(const AppValue& v, unsigned bits) {
  std::cout << decimal(v.value.re, bits);
  if (!v.value.im.is_zero()) {
    std::cout << (v.value.im.sign() < 0 ? " - " : " + ") << decimal(abs(v.value.im), bits) << "i";
  }
  std::cout << " +- " << decimal_err(v.err) << " (" << to_string(v.rigor) << ")\n";
}

Complex complex_arg(const std::string& s, Bits prec) {
  if (!s.empty() && s.back() == 'i') {
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size() - 1; i-- > 1;) {
      if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    const std::string body = s.substr(0, s.size() - 1);
    if (split == std::string::npos) return Complex(Real(0L, prec), ExactRational::parse(body).to_real(prec));
    std::string im = body.substr(split);
    if (im.front() == '+') im.erase(0, 1);
    return Complex(ExactRational::parse(body.substr(0, split)).to_real(prec), ExactRational::parse(im).to_real(prec));
  }
  return Complex(ExactRational::parse(s).to_real(prec));
}

std::vector<ExactRational> rational_list(const std::string& text) {
  std::vector<ExactRational> out;
  if (text == "-" || text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    out.push_back(ExactRational::parse(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

long integer_arg(const std::string& text) {
  std::size_t used = 0;
  const long v = std::stol(text, &used);
  if (used != text.size()) throw DomainError("expected an integer, got '" + text + "'");
  return v;
}

void need(const std::vector<std::string>& args, std::size_t n, const char* usage) {
  if (args.size() != n) throw DomainError(std::string("usage: eval ") + usage);
}

MahlerFamily family_of(const std::string& name) {
  if (name == "g1") return MahlerFamily::g1;
  if (name == "g2") return MahlerFamily::g2;
  if (name == "f2") return MahlerFamily::f2;
  if (name == "f3") return MahlerFamily::f3;
  if (name == "f4") return MahlerFamily::f4;
  throw DomainError("unknown Mahler family '" + name + "' (g1, g2, f2, f3, f4)");
}

int cmd_eval(const std::string& fn, const std::vector<std::string>& args, const Config& cfg,
             unsigned grid, bool modulus, bool heuristic) {
  const PrecisionContext ctx(cfg.bits);
  const Bits prec = ctx.compute_bits();
  const QPowerBranch branch = modulus ? QPowerBranch::modulus : QPowerBranch::principal;
  if (fn == "domb" || fn == "bseq") {
    need(args, 1, (fn + " n").c_str());
    const long n = integer_arg(args[0]);
    if (n < 0) throw DomainError("n must be nonnegative");
    const mpz_class v = fn == "domb" ? domb(static_cast<std::size_t>(n)) : sequence_b(static_cast<std::size_t>(n));
    std::cout << v.get_str() << "\n";
    return 0;
  }
  AppValue v;
  if (fn == "pfq") {
    need(args, 3, "pfq a1,a2,... b1,... x   (use - for an empty list)");
    v = pfq(HypergeometricSpec(rational_list(args[0]), rational_list(args[1]), complex_arg(args[2], prec)), ctx);
  } else if (fn == "G" || fn == "M") {
    need(args, 1, (fn + " q").c_str());
    const Complex q = complex_arg(args[0], prec);
    v = fn == "G" ? eisenstein_G(q, ctx) : eisenstein_M(q, ctx);
  } else if (fn == "nome") {
    need(args, 2, "nome j alpha");
    v = nome(static_cast<int>(integer_arg(args[0])), ExactRational::parse(args[1]).to_real(prec), ctx);
  } else if (fn == "s" || fn == "t") {
    need(args, 2, (fn + " j q").c_str());
    const int j = static_cast<int>(integer_arg(args[0]));
    const Complex q = complex_arg(args[1], prec);
    v = fn == "s" ? s_function(j, q, ctx, branch) : t_function(j, q, ctx, branch);
  } else if (fn == "f" || fn == "g") {
    need(args, 2, (fn + " j u").c_str());
    const int j = static_cast<int>(integer_arg(args[0]));
    const Complex u = complex_arg(args[1], prec);
    v = fn == "f" ? f_series(j, u, ctx) : g_series(j, u, ctx);
  } else if (fn == "mahler") {
    need(args, 2, "mahler family u   (family g1, g2, f2, f3, f4)");
    v = mahler_quadrature(family_of(args[0]), complex_arg(args[1], prec), grid, ctx);
  } else if (fn == "lvalue") {
    need(args, 2, "lvalue form s   (form f8, g12, f15)");
    const NamedForm& form = named_form(args[0]);
    const long s = integer_arg(args[1]);
    CoefficientSeries cs = cached_eta_coeffs(form.spec, cfg.lseries_n, resolve_cache_dir(cfg.cache_dir));
    v = lvalue_direct(cs, s, ctx, heuristic ? TailMode::heuristic : TailMode::rigorous, cfg.threads);
  } else {
    throw DomainError("unknown function '" + fn + "' (pfq, G, M, nome, s, t, f, g, mahler, domb, bseq, lvalue)");
  }
  print_value(v, cfg.bits);
  return 0;
}

int cmd_cache(const std::string& action, const Config& cfg) {
  const fs::path dir = resolve_cache_dir(cfg.cache_dir);
  CoefficientCache cache(dir);
  if (action == "clear") {
    std::size_t removed = 0;
    if (fs::exists(dir)) {
      for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("eta-", 0) == 0 && entry.path().extension() == ".bin") {
          fs::remove(entry.path());
          ++removed;
        }
      }
    }
    std::cout << "removed " << removed << " cache files from " << dir.string() << "\n";
    return 0;
  }
  int status = 0;
  for (const NamedForm& form : named_forms()) {
    const fs::path file = cache.file_for(form.spec);
    if (action == "build") {
      auto existing = fs::exists(file) ? cache.load(form.spec, cfg.lseries_n) : std::nullopt;
      if (!existing) cache.store(form.spec, eta_coeffs(form.spec, cfg.lseries_n).coeffs);
      std::cout << form.name << ": " << file.string() << (existing ? " (present)" : " (written)") << "\n";
    } else {
      if (!fs::exists(file)) {
        std::cout << form.name << ": missing " << file.string() << "\n";
        status = 1;
        continue;
      }
      try {
        cache.load(form.spec, 0);
        std::ifstream in(file, std::ios::binary);
        unsigned char header[12] = {};
        in.read(reinterpret_cast<char*>(header), sizeof header);
        const std::uint32_t n = header[8] | header[9] << 8 | header[10] << 16 | static_cast<std::uint32_t>(header[11]) << 24;
        std::cout << form.name << ": ok, N = " << n << "\n";
      } catch (const CacheError& e) {
        std::cout << form.name << ": " << e.what() << "\n";
        status = 1;
      }
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperforge: verification harness for Mahler measure, q-series and hypergeometric identities"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--bits", cfg.bits, "working precision in bits")->check(CLI::Range(64u, 100000u));
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("--lseries-n", cfg.lseries_n, "number of L-series coefficients")->check(CLI::Range(std::size_t{16}, std::size_t{200'000'000}));
    sub->add_option("--cache-dir", cfg.cache_dir, "coefficient cache directory (default $HYPERFORGE_CACHE_DIR)");
  };

  CLI::App* verify = app.add_subcommand("verify", "run identity checks");
  add_common(verify);
  verify->add_flag("--all", cfg.all, "run every check");
  verify->add_option("--filter", cfg.filters, "glob on check ids (repeatable)");
  verify->add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--output", cfg.output, "report path (default stdout)");
  verify->add_flag("--controls", cfg.controls, "include the perturbed negative controls");

  std::string function;
  std::vector<std::string> args;
  unsigned grid = 64;
  bool modulus = false, heuristic = false;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one function");
  add_common(eval);
  eval->add_option("function", function, "pfq, G, M, nome, s, t, f, g, mahler, domb, bseq, lvalue")->required();
  eval->add_option("args", args, "function arguments");
  eval->add_option("--grid", grid, "torus grid per variable for mahler")->check(CLI::Range(2u, 4096u));
  eval->add_flag("--modulus-branch", modulus, "take |q|^r for fractional leading powers");
  eval->add_flag("--heuristic-tail", heuristic, "heuristic tail for lvalue");

  std::string action;
  CLI::App* cache = app.add_subcommand("cache", "manage coefficient caches");
  add_common(cache);
  cache->add_option("action", action, "build, verify or clear")->required()->check(CLI::IsMember({"build", "verify", "clear"}));
  cache->add_option("--n", cfg.lseries_n, "number of coefficients")->check(CLI::Range(std::size_t{16}, std::size_t{200'000'000}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (*verify) return cmd_verify(cfg);
    if (*eval) return cmd_eval(function, args, cfg, grid, modulus, heuristic);
    if (*cache) return cmd_cache(action, cfg);
  } catch (const CacheError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}
