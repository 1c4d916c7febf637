// Command-line front end: catalog inspection, the claim runner and direct
// access to the torsion, counting and polynomial tools.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "cubtors/harness.hpp"

using namespace cubtors;
using namespace cubtors::harness;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitManifest = 65;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Fn>
auto lookup(Fn&& fn) {
  try {
    return fn();
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

// x^3 - x^2 + 1 rather than the generic "(1)*x^3 + (-1)*x^2 + (1)".
std::string pretty(const QPoly& f) {
  std::string out;
  for (long i = f.degree(); i >= 0; --i) {
    const Rational& c = f.coeff(i);
    if (c.is_zero()) continue;
    std::string mag = (c.sign() < 0 ? -c : c).to_string();
    if (out.empty())
      out = c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    if (i == 0 || mag != "1") out += mag;
    if (i > 0) out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

void print_torsion(const std::string& what, const auto& r) {
  std::cout << what << ": (" << r.n1 << "," << r.n2 << ") " << to_string(r.status) << "\n";
  std::cout << "  bound B = " << r.bound_B << " from primes";
  for (auto p : r.primes_used) std::cout << " " << p;
  std::cout << "\n";
  for (const auto& g : r.generators) std::cout << "  generator " << g.to_string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion of elliptic curves over cubic fields: catalog and claim checker"};
  app.require_subcommand(1);
  std::string manifest;
  long precision_bits = kDefaultPrecisionBits;
  std::string height_bound;
  app.add_option("--manifest", manifest, "Manifest JSON (default: the embedded catalog)");
  app.add_option("--precision-bits", precision_bits, "Target precision of numeric root searches")->check(CLI::Range(64L, 4096L));
  app.add_option("--height-bound", height_bound, "Denominator bound for reconstructed field elements");

  auto* fields = app.add_subcommand("fields", "Print the field table with recomputed discriminants");

  auto* claims = app.add_subcommand("claims", "List or run the claim registry");
  claims->require_subcommand(1);
  auto* list = claims->add_subcommand("list", "List claims with their paper quotes");
  auto* run = claims->add_subcommand("run", "Run claims and report");
  std::vector<std::string> ids;
  bool as_json = false, deterministic = false;
  double timeout_s = 120;
  int jobs = 1;
  run->add_option("--id", ids, "Claim ids (default: all)");
  run->add_flag("--json", as_json, "JSON report");
  run->add_option("--timeout-s", timeout_s, "Per-claim timeout in seconds")->check(CLI::PositiveNumber);
  run->add_option("--jobs", jobs, "Claims run concurrently")->check(CLI::Range(1, 256));
  run->add_flag("--deterministic", deterministic, "Zero the runtimes so reports are byte-identical");

  std::string curve, field;
  auto* torsion = app.add_subcommand("torsion", "Torsion subgroup of a catalog curve");
  torsion->add_option("--curve", curve, "Curve label")->required();
  torsion->add_option("--field", field, "Base-change field label");

  std::uint64_t prime = 0;
  int power = 1;
  auto* count = app.add_subcommand("count", "Point count of a reduction");
  count->add_option("--curve", curve, "Curve label (over Q)")->required();
  count->add_option("--prime", prime, "Prime p")->required();
  count->add_option("--power", power, "Count over F_{p^k}")->check(CLI::Range(1, 3));

  long n = 0;
  auto* divpoly = app.add_subcommand("divpoly", "Division polynomial in x and its degree certificate");
  divpoly->add_option("--curve", curve, "Curve label (over Q)")->required();
  divpoly->add_option("--n", n, "Index")->required()->check(CLI::Range(1L, 40L));

  std::string poly;
  auto* roots = app.add_subcommand("roots", "Roots of a rational polynomial in a cubic field");
  roots->add_option("--poly", poly, "Coefficients c0,c1,...,cn (low degree first)")->required();
  roots->add_option("--field", field, "Field label")->required();

  int primes = kDefaultDdfPrimes;
  auto* degrees = app.add_subcommand("degrees", "Possible factor degrees over Q from factorizations mod p");
  degrees->add_option("--poly", poly, "Coefficients c0,c1,...,cn (low degree first)")->required();
  degrees->add_option("--primes", primes, "Number of primes")->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  Catalog cat;
  try {
    cat = manifest.empty() ? load_default_manifest() : load_manifest_file(manifest);
  } catch (const Error& e) {
    std::cerr << "manifest error: " << e.what() << "\n";
    return kExitManifest;
  }

  RunConfig config;
  config.torsion.roots.precision_bits = precision_bits;
  if (!height_bound.empty() && config.torsion.roots.height_bound.set_str(height_bound, 10) != 0) {
    std::cerr << "--height-bound: not an integer\n";
    return kExitUsage;
  }

  try {
    if (*fields) {
      std::printf("%-6s %-26s %9s  %10s  %s\n", "label", "poly", "poly_disc", "field_disc", "galois");
      for (const auto& f : cat.fields) {
        std::printf("%-6s %-26s %9s  %10s  %s\n", f.label.c_str(), pretty(f.field->defining_poly()).c_str(),
                    cubic_disc(Integer(f.poly[0]), Integer(f.poly[1]), Integer(f.poly[2])).get_str().c_str(),
                    f.field->field_disc().get_str().c_str(), to_string(f.field->galois()).c_str());
      }
      return 0;
    }
    if (*list) {
      for (const auto& c : cat.claims) {
        std::cout << c.id << "  " << c.kind << "  inputs " << c.inputs.dump() << "  expected " << c.expected.dump() << "\n";
        std::cout << "    \"" << cat.quote(c.paper_ref) << "\"\n";
      }
      return 0;
    }
    if (*run) {
      config.ids = ids;
      config.timeout_s = timeout_s;
      config.jobs = jobs;
      config.deterministic = deterministic;
      RunResult result;
      try {
        result = run_claims(cat, config);
      } catch (const std::out_of_range& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
      }
      if (as_json)
        std::cout << reports_to_json(result.reports).dump(2) << "\n";
      else
        std::cout << reports_to_text(result.reports);
      int code = exit_code(result.reports);
      std::cout.flush();
      // Timed-out workers cannot be joined; leave without running destructors.
      if (result.abandoned_workers) std::_Exit(code);
      return code;
    }
    if (*torsion) {
      const auto& rec = lookup([&] { return cat.curve(curve); });
      TorsionConfig tc = config.torsion;
      if (rec.over_k) {
        if (!field.empty() && field != rec.base) throw UsageError(curve + " is defined over " + rec.base);
        print_torsion(curve + " over " + rec.base, torsion_subgroup(*rec.over_k, tc));
      } else if (!field.empty()) {
        const auto& f = lookup([&] { return cat.field(field); });
        print_torsion(curve + " over " + field, torsion_subgroup(base_change(*rec.over_q, f.field), tc));
      } else {
        print_torsion(curve + " over Q", torsion_subgroup(*rec.over_q, tc));
      }
      return 0;
    }
    if (*count) {
      const auto& rec = lookup([&] { return cat.curve(curve); });
      if (!rec.over_q) throw UsageError(curve + " is not defined over Q");
      if (!zp::is_prime(prime)) throw UsageError("--prime must be prime");
      auto ff = FiniteField::extension(prime, power);
      auto Ep = reduce_curve(*rec.over_q, ff);
      auto N = count_points(Ep);
      std::cout << "#E(F_" << ff->size() << ") = " << N << "\n";
      if (ff->size() <= 10000) {
        auto g = group_structure(Ep);
        std::cout << "structure (" << g.n1 << "," << g.n2 << ")\n";
      }
      return 0;
    }
    if (*divpoly) {
      const auto& rec = lookup([&] { return cat.curve(curve); });
      if (!rec.over_q) throw UsageError(curve + " is not defined over Q");
      auto d = division_poly(*rec.over_q, n);
      std::cout << (d.even ? "psi_n / psi_2" : "psi_n") << " = " << pretty(d.f) << "\n";
      auto cert = factor_degree_sets(d.f);
      std::cout << "degree " << d.f.degree() << ", no factor of degree <= " << cert.certified_no_factor_up_to
                << (cert.irreducible_certified ? ", irreducible" : "") << "\n";
      return 0;
    }
    if (*roots) {
      const auto& f = lookup([&] { return cat.field(field); });
      auto res = roots_in_field(parse_qpoly(poly), f.field, config.torsion.roots);
      for (const auto& r : res.roots) std::cout << r.to_string() << "\n";
      std::cout << res.roots.size() << " root(s) in " << field << (res.complete ? "" : " (search incomplete)") << "\n";
      return 0;
    }
    if (*degrees) {
      auto cert = factor_degree_sets(parse_qpoly(poly), primes);
      std::cout << "possible factor degrees:";
      for (int d : cert.possible_factor_degrees) std::cout << " " << d;
      std::cout << "\nno factor of degree <= " << cert.certified_no_factor_up_to
                << (cert.irreducible_certified ? " (irreducible)" : "") << "\nprimes:";
      for (auto p : cert.primes_used) std::cout << " " << p;
      std::cout << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
