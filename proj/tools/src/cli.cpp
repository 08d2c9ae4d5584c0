#include "gpfree/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "gpfree/errors.hpp"

namespace gpfree::cli {

namespace {

using Handler = std::function<Output(const Options&)>;

struct Flags {
  bool d = false;
  bool trunc_prime = false;
  bool nmax = false;
  bool norm_max = false;
  bool survey = false;
  bool lower = false;
  bool mode = false;
};

void add_flags(CLI::App& app, Options& o, const Flags& f) {
  if (f.d) app.add_option("--d", o.d, "squarefree d of Q(sqrt d)");
  if (f.trunc_prime) app.add_option("--trunc-prime", o.trunc_prime, "truncation prime of Euler products")->check(CLI::Range(100ULL, 50'000'000ULL));
  if (f.nmax) app.add_option("--nmax", o.nmax, "largest norm in the exclusion search")->capture_default_str();
  if (f.norm_max) app.add_option("--norm-max", o.norm_max, "norm bound for enumeration");
  if (f.mode) {
    app.add_option("--mode", o.mode, "greedy ratio semantics")
        ->check(CLI::IsMember({"field", "rational", "ideal"}))
        ->capture_default_str();
  }
  if (f.lower) {
    app.add_flag("--preset", o.preset, "use the built-in interval system for --d");
    app.add_option("--intervals", o.intervals, "file with one `a b` pair per line");
  }
  if (f.survey) {
    app.add_option("--dmin", o.dmin, "smallest |d|")->capture_default_str();
    app.add_option("--dmax", o.dmax, "largest |d|")->capture_default_str();
    app.add_option("--bins", o.bins, "histogram bin width")->capture_default_str();
    app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1U, 256U))->capture_default_str();
    app.add_flag("--by-discriminant", o.by_discriminant, "select fields by |discriminant|");
    app.add_option("--hist-out", o.hist_out, "write the histogram CSV here");
  }
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--out", o.out, "write output to a file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Densities and bounds for geometric-progression-free sets in quadratic fields", "gpfree"};
  app.require_subcommand(1, 1);
  app.failure_message(CLI::FailureMessage::help);
  Options o;
  std::vector<std::pair<CLI::App*, Handler>> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, const Flags& f, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, help);
    add_flags(*sub, o, f);
    leaves.emplace_back(sub, std::move(h));
  };

  leaf(&app, "field-info", "discriminant, splitting and small norms of a field", {.d = true}, field_info);
  leaf(&app, "survey", "ideal densities over a range of imaginary fields",
       {.trunc_prime = true, .survey = true}, survey);

  CLI::App* density = app.add_subcommand("density", "greedy-set densities");
  density->require_subcommand(1, 1);
  leaf(density, "rankin", "density of the greedy set of integers", {.trunc_prime = true}, density_rankin);
  leaf(density, "greedy", "density of the greedy set of elements of O_K", {.d = true, .trunc_prime = true},
       density_greedy);
  leaf(density, "ideals", "density of the greedy set of ideals", {.d = true, .trunc_prime = true}, density_ideals);
  leaf(density, "rational-ratio", "ideal density with rational-integer ratios", {.d = true, .trunc_prime = true},
       density_rational_ratio);

  CLI::App* bounds = app.add_subcommand("bounds", "upper and lower density bounds");
  bounds->require_subcommand(1, 1);
  leaf(bounds, "universal", "bounds valid for every quadratic field", {.trunc_prime = true}, bounds_universal);
  leaf(bounds, "riddell", "bound from the smallest non-unit norm", {.d = true}, bounds_riddell);
  leaf(bounds, "smooth", "exclusion profile and improved upper bound", {.d = true, .nmax = true}, bounds_smooth);
  leaf(bounds, "lower", "interval-union lower bound with certificate", {.d = true, .norm_max = true, .lower = true},
       bounds_lower);

  CLI::App* verify = app.add_subcommand("verify", "brute-force checks on small norm ranges");
  verify->require_subcommand(1, 1);
  leaf(verify, "greedy", "build a greedy set by definition", {.d = true, .norm_max = true, .mode = true},
       verify_greedy);
  leaf(verify, "characterization", "compare greedy sets with their exponent characterizations",
       {.d = true, .norm_max = true}, verify_characterization);
  leaf(verify, "gauss", "lattice point and primitive point counts", {.d = true, .norm_max = true}, verify_gauss);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsageError;
  }

  auto it = std::find_if(leaves.begin(), leaves.end(), [](const auto& l) { return l.first->parsed(); });
  if (it == leaves.end()) {
    err << app.help();
    return kUsageError;
  }
  try {
    const Output result = it->second(o);
    std::string text;
    if (o.format == "csv") {
      text = result.csv ? *result.csv : flatten_csv(result.envelope["results"]);
    } else {
      text = result.envelope.dump(2) + "\n";
    }
    emit(text, o.out, out);
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << "\n" << it->first->help();
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
}

}  // namespace gpfree::cli
