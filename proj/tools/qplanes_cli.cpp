#include "qplanes/commands.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

void add_common(CLI::App *app, qplanes::RunSpec &spec)
{
  app->add_option("--out", spec.out, "Output path (default: stdout)");
  app->add_option("--format", spec.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app->add_flag("--stable", spec.stable, "Write timings as 0 for byte-stable output");
}

void add_family(CLI::App *app, qplanes::RunSpec &spec)
{
  app->add_option("--family", spec.family,
                  "prism:m antiprism:m coset:n:c0 coset2:n:c0:parity nodal-roots:n cusp-ints:n "
                  "random:n:seed:bound, or a bare name completed by --n/--offset/--parity/--seed");
  app->add_option("--n", spec.n, "Size, range a..b, or comma list");
  app->add_option("--offset", spec.offset, "Coset offset c0");
  app->add_option("--parity", spec.parity, "Component parity target (0 or 1)");
  app->add_option("--bound", spec.bound, "Coordinate bound for random sets");
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Ordinary planes, space quartics and coplanar quadruples"};
  app.require_subcommand(1);
  qplanes::RunSpec spec;
  std::uint64_t seed = 0;
  const auto seed_option = [&](CLI::App *sub) {
    sub->add_option("--seed", seed, "Random seed");
  };

  auto *generate = app.add_subcommand("generate", "Write a configuration");
  add_family(generate, spec);
  seed_option(generate);
  add_common(generate, spec);
  generate->add_option("--in", spec.in, "Curve file for nodal-roots");

  auto *count = app.add_subcommand("count", "Count planes of a point set or model");
  add_family(count, spec);
  seed_option(count);
  add_common(count, spec);
  count->add_option("--in", spec.in, "Point-set file or model JSON");
  count->add_option("--epsilon", spec.epsilon, "Float coplanarity threshold");
  count->add_option("--jobs", spec.jobs, "Worker threads");
  count->add_option("--backend", spec.backend, "exact, model or float")
      ->check(CLI::IsMember({"exact", "model", "float"}));

  auto *classify = app.add_subcommand("classify", "Species of a curve p q r s");
  classify->add_option("--in", spec.in, "Curve file")->required();
  add_common(classify, spec);

  auto *decompose = app.add_subcommand("decompose", "Canonical form of the fundamental quartic");
  decompose->add_option("--in", spec.in, "Curve file")->required();
  add_common(decompose, spec);

  auto *verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", spec.suite,
                     "coplanar species minors sl2 identity group projection circles all");
  seed_option(verify);
  add_common(verify, spec);
  spec.format = "csv";

  auto *max4pt = app.add_subcommand("max4pt", "Formula vs search for the 4-point plane maximum");
  max4pt->add_option("--n", spec.n, "Range a..b or list (default 8..40)");
  add_common(max4pt, spec);

  auto *growth = app.add_subcommand("growth", "Counts over a family pattern with '*' for n");
  growth->add_option("--family", spec.family, "Pattern such as coset:*:0")->required();
  growth->add_option("--n", spec.n, "Range or list (default 32,64,128)");
  growth->add_option("--metric", spec.metric, "ordinary, four-point or quadruples")
      ->check(CLI::IsMember({"ordinary", "four-point", "quadruples"}));
  growth->add_option("--jobs", spec.jobs, "Worker threads");
  add_common(growth, spec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qplanes::kExitPrecondition;
  }

  CLI::App *chosen = app.get_subcommands().front();
  spec.command = chosen->get_name();
  if (chosen->get_option_no_throw("--seed") && chosen->count("--seed") > 0) {
    spec.seed = seed;
  }
  // Tabular commands default to CSV, reports to JSON.
  const bool tabular = spec.command == "verify" || spec.command == "max4pt" || spec.command == "growth";
  if (chosen->count("--format") == 0) {
    spec.format = tabular ? "csv" : "json";
  }
  return qplanes::run_command(spec, std::cout, std::cerr);
}
