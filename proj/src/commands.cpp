#include "qplanes/commands.hpp"

#include "qplanes/errors.hpp"
#include "qplanes/group_count.hpp"
#include "qplanes/report.hpp"
#include "qplanes/verify.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace qplanes {

namespace {

using ordered_json = nlohmann::ordered_json;

long parse_long(const std::string &text, const std::string &what)
{
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used == text.size()) {
      return v;
    }
  } catch (const std::exception &) {
  }
  throw PreconditionError("malformed " + what + " '" + text + "'");
}

// Writes to spec.out when set, otherwise to the command's stream.
void emit(const RunSpec &spec, std::ostream &out, const std::string &text)
{
  if (spec.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(spec.out);
  if (!file) {
    throw PreconditionError("cannot write " + spec.out);
  }
  file << text;
}

void write_file(const std::string &path, const std::string &text)
{
  std::ofstream file(path);
  if (!file) {
    throw PreconditionError("cannot write " + path);
  }
  file << text;
}

std::string read_file(const std::string &path)
{
  std::ifstream file(path);
  if (!file) {
    throw PreconditionError("cannot read " + path);
  }
  std::ostringstream os;
  os << file.rdbuf();
  return os.str();
}

// Adding 0.0 folds -0 into +0.
double rounded(double v) { return std::stod(format_double(v)) + 0.0; }

ordered_json complex_json(Complex z) { return ordered_json::array({rounded(z.real()), rounded(z.imag())}); }

ordered_json curve_json(const QuarticCurve &curve)
{
  ordered_json j;
  j["p"] = to_string(curve.p());
  j["q"] = to_string(curve.q());
  j["r"] = to_string(curve.r());
  j["s"] = to_string(curve.s());
  return j;
}

QuarticCurve curve_from_spec(const RunSpec &spec)
{
  if (spec.in.empty()) {
    throw PreconditionError("--in <curve file> is required");
  }
  return load_curve(spec.in);
}

std::string points_text(const std::vector<HPoint> &points, const std::string &family)
{
  std::ostringstream os;
  write_points(os, points, {"family " + family});
  return os.str();
}

bool is_model_family(const std::string &name)
{
  return name == "coset" || name == "coset2" || name == "nodal-roots" || name == "prism" ||
         name == "antiprism";
}

GroupConfig model_for(const FamilyDescriptor &fam)
{
  const auto &a = fam.args;
  if (fam.name == "coset") {
    return coset_cyclic(static_cast<int>(a[0]), static_cast<int>(a[1]));
  }
  if (fam.name == "coset2") {
    return coset_two_component(static_cast<int>(a[0]), static_cast<int>(a[1]),
                               static_cast<int>(a[2]));
  }
  if (fam.name == "nodal-roots") {
    return nodal_roots_config(nodal_reference_curve(), static_cast<int>(a[0])).model;
  }
  if (fam.name == "prism") {
    return prism(static_cast<int>(a[0])).model;
  }
  if (fam.name == "antiprism") {
    return antiprism(static_cast<int>(a[0])).model;
  }
  throw PreconditionError("family '" + fam.text + "' has no group model");
}

std::vector<HPoint> exact_points_for(const FamilyDescriptor &fam)
{
  const auto &a = fam.args;
  if (fam.name == "random") {
    if (a[2] < 1) {
      throw PreconditionError("random family needs a positive coordinate bound");
    }
    return random_rational_config(static_cast<int>(a[0]), static_cast<std::uint64_t>(a[1]), a[2])
        .exact;
  }
  if (fam.name == "cusp-ints") {
    const auto cfg = cuspidal_integers_config(static_cast<int>(a[0]));
    std::vector<HPoint> out;
    for (const auto &t : cfg.parameters) {
      out.push_back(point_at(cfg.curve, t));
    }
    return out;
  }
  throw PreconditionError("family '" + fam.text + "' has no exact coordinates");
}

// ---------------------------------------------------------------- generate

int cmd_generate(const RunSpec &spec, std::ostream &out, std::ostream &err)
{
  const FamilyDescriptor fam = resolve_family(spec);
  if (fam.name == "prism" || fam.name == "antiprism") {
    const TwinConfig twin =
        fam.name == "prism" ? prism(static_cast<int>(fam.args[0])) : antiprism(static_cast<int>(fam.args[0]));
    std::ostringstream os;
    write_float_points(os, twin.geometry.approx, {"family " + fam.text});
    emit(spec, out, os.str());
    if (!spec.out.empty()) {
      write_file(spec.out + ".model.json", model_to_json(twin.model).dump(2) + "\n");
      err << "wrote " << spec.out << " and " << spec.out << ".model.json\n";
    }
    return kExitOk;
  }
  if (fam.name == "nodal-roots") {
    const QuarticCurve curve = spec.in.empty() ? nodal_reference_curve() : load_curve(spec.in);
    const NodalRootsConfig cfg = nodal_roots_config(curve, static_cast<int>(fam.args[0]));
    ordered_json j = model_to_json(cfg.model);
    j["curve"] = curve_json(curve);
    ordered_json params = ordered_json::array();
    for (const auto &t : cfg.parameters) {
      params.push_back(complex_json(t));
    }
    j["parameters"] = params;
    emit(spec, out, j.dump(2) + "\n");
    return kExitOk;
  }
  if (fam.name == "coset" || fam.name == "coset2") {
    emit(spec, out, model_to_json(model_for(fam)).dump(2) + "\n");
    return kExitOk;
  }
  emit(spec, out, points_text(exact_points_for(fam), fam.text));
  return kExitOk;
}

// ---------------------------------------------------------------- count

struct CountOutcome {
  CountReport report;
  std::string histogram;
};

CountOutcome count_from_family(const RunSpec &spec)
{
  const FamilyDescriptor fam = resolve_family(spec);
  CountOutcome o;
  std::string *hist = spec.format == "csv" ? &o.histogram : nullptr;
  std::string backend = spec.backend;
  if (backend.empty()) {
    backend = is_model_family(fam.name) ? "model" : "exact";
  }
  if (backend == "model") {
    o.report = count_model(model_for(fam), hist);
  } else if (backend == "float") {
    if (fam.name != "prism" && fam.name != "antiprism") {
      throw PreconditionError("float backend is available for prism and antiprism only");
    }
    const TwinConfig twin = fam.name == "prism" ? prism(static_cast<int>(fam.args[0]))
                                                : antiprism(static_cast<int>(fam.args[0]));
    o.report = count_float(twin.geometry.approx, spec.epsilon, hist);
  } else if (backend == "exact") {
    const auto points = exact_points_for(fam);
    o.report = count_exact(points, spec.jobs, hist);
  } else {
    throw PreconditionError("unknown backend '" + backend + "'");
  }
  return o;
}

CountOutcome count_from_file(const RunSpec &spec)
{
  CountOutcome o;
  std::string *hist = spec.format == "csv" ? &o.histogram : nullptr;
  const std::string text = read_file(spec.in);
  if (spec.in.size() >= 5 && spec.in.substr(spec.in.size() - 5) == ".json") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
      throw PreconditionError(spec.in + ": " + e.what());
    }
    o.report = count_model(model_from_json(j), hist);
    return o;
  }
  std::istringstream probe(text);
  const auto records = read_records(probe);
  if (!records.empty() && records.front().size() == 3) {
    std::istringstream in(text);
    o.report = count_float(read_float_points(in), spec.epsilon, hist);
  } else {
    std::istringstream in(text);
    const auto points = read_points(in);
    o.report = count_exact(points, spec.jobs, hist);
  }
  return o;
}

int cmd_count(const RunSpec &spec, std::ostream &out, std::ostream &)
{
  if (spec.in.empty() == spec.family.empty()) {
    throw PreconditionError("count needs exactly one of --in and --family");
  }
  const CountOutcome o = spec.in.empty() ? count_from_family(spec) : count_from_file(spec);
  if (spec.format == "csv") {
    emit(spec, out, o.histogram);
  } else {
    emit(spec, out, to_json(o.report, spec.stable).dump(2) + "\n");
  }
  return kExitOk;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const RunSpec &spec, std::ostream &out, std::ostream &)
{
  const QuarticCurve curve = curve_from_spec(spec);
  const SpeciesReport report = classify_species(curve);
  ordered_json j;
  j["curve"] = curve_json(curve);
  j["species"] = report.species == Species::First ? "first" : "second";
  j["catalecticant"] = to_string(report.catalecticant);
  j["nullity"] = report.nullity;
  ordered_json basis = ordered_json::array();
  for (const auto &a : report.pencil_basis) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < 4; ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t k = 0; k < 4; ++k) {
        row.push_back(to_string(a(i, k)));
      }
      rows.push_back(row);
    }
    basis.push_back(rows);
  }
  j["pencil_basis"] = basis;
  emit(spec, out, j.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------- decompose

std::string kind_name(CanonicalKind kind)
{
  switch (kind) {
  case CanonicalKind::FourthPower:
    return "fourth-power";
  case CanonicalKind::PowerSum:
    return "power-sum";
  case CanonicalKind::LinearTimesCube:
    return "linear-times-cube";
  }
  return {};
}

int cmd_decompose(const RunSpec &spec, std::ostream &out, std::ostream &)
{
  const QuarticCurve curve = curve_from_spec(spec);
  const BinaryQuartic g = fundamental_quartic(curve);
  const CanonicalForm form = sylvester_decompose(g);
  ordered_json j;
  j["curve"] = curve_json(curve);
  ordered_json coeffs = ordered_json::array();
  for (const auto &c : g.c) {
    coeffs.push_back(to_string(c));
  }
  j["fundamental_quartic"] = coeffs;
  j["kind"] = kind_name(form.kind);
  ordered_json forms = ordered_json::array();
  for (const auto &l : form.forms) {
    ordered_json f;
    f["a"] = complex_json(l.a);
    f["b"] = complex_json(l.b);
    forms.push_back(f);
  }
  j["forms"] = forms;
  j["residual"] = spec.stable ? 0.0 : rounded(form.residual);
  if (form.kind == CanonicalKind::FourthPower) {
    j["group"] = nullptr;
  } else {
    const GroupModelQuartic model = group_parametrization(curve);
    ordered_json gj;
    if (model.kind == GroupKind::NodalProduct) {
      gj["kind"] = "nodal-product";
      ordered_json m = ordered_json::array();
      for (const auto &z : model.moebius) {
        m.push_back(complex_json(z));
      }
      gj["moebius"] = m;
    } else {
      gj["kind"] = "cuspidal-sum";
      ordered_json m = ordered_json::array();
      for (const auto &z : model.s_map) {
        m.push_back(complex_json(z));
      }
      gj["s_map"] = m;
      gj["c"] = complex_json(model.c);
      gj["d"] = complex_json(model.d);
    }
    j["group"] = gj;
  }
  emit(spec, out, j.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunSpec &spec, std::ostream &out, std::ostream &)
{
  const auto results = run_suite(spec.suite, spec.seed.value_or(1));
  bool all_ok = true;
  std::ostringstream os;
  if (spec.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto &r : results) {
      ordered_json j;
      j["suite"] = r.name;
      j["passed"] = r.passed;
      j["total"] = r.total;
      j["required"] = r.required;
      j["status"] = r.ok() ? "pass" : "fail";
      j["seconds"] = spec.stable ? 0.0 : rounded(r.seconds);
      j["first_failure"] = r.detail;
      arr.push_back(j);
      all_ok = all_ok && r.ok();
    }
    os << arr.dump(2) << "\n";
  } else {
    os << "suite,passed,total,required,status\n";
    for (const auto &r : results) {
      os << r.name << ',' << r.passed << ',' << r.total << ',' << r.required << ','
         << (r.ok() ? "pass" : "fail") << '\n';
      all_ok = all_ok && r.ok();
    }
  }
  emit(spec, out, os.str());
  return all_ok ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------- max4pt

int cmd_max4pt(const RunSpec &spec, std::ostream &out, std::ostream &)
{
  const auto ns = parse_n_list(spec.n.empty() ? "8..40" : spec.n);
  std::ostringstream os;
  ordered_json arr = ordered_json::array();
  os << "n,formula,search,witness,agree\n";
  for (const long n : ns) {
    const std::uint64_t formula = formula_max_4pt(n);
    const Max4ptResult search = max_4pt_search(static_cast<int>(n));
    const bool agree = formula == search.count;
    os << n << ',' << formula << ',' << search.count << ',' << search.witness.descriptor() << ','
       << (agree ? "yes" : "no") << '\n';
    ordered_json j;
    j["n"] = n;
    j["formula"] = formula;
    j["search"] = search.count;
    j["witness"] = search.witness.descriptor();
    j["agree"] = agree;
    arr.push_back(j);
  }
  emit(spec, out, spec.format == "json" ? arr.dump(2) + "\n" : os.str());
  return kExitOk;
}

// ---------------------------------------------------------------- growth

std::uint64_t growth_count(const FamilyDescriptor &fam, const std::string &metric, unsigned jobs)
{
  if (is_model_family(fam.name)) {
    const GroupConfig model = model_for(fam);
    if (metric == "ordinary") {
      return group_ordinary_count(model);
    }
    if (metric == "quadruples") {
      return group_four_sum_count(model);
    }
    return plane_counts(model_plane_members(model)).four_point_planes;
  }
  if (fam.name == "cusp-ints" && metric == "quadruples") {
    const auto cfg = cuspidal_integers_config(static_cast<int>(fam.args[0]));
    return curve_coplanar_quadruples(cfg.curve, cfg.parameters);
  }
  const PlaneCounts counts = plane_counts(plane_histogram(exact_points_for(fam), jobs));
  if (metric == "ordinary") {
    return counts.ordinary_planes;
  }
  if (metric == "quadruples") {
    return counts.coplanar_quadruples;
  }
  return counts.four_point_planes;
}

int cmd_growth(const RunSpec &spec, std::ostream &out, std::ostream &)
{
  if (spec.family.find('*') == std::string::npos) {
    throw PreconditionError("growth needs a family pattern with '*' for n, e.g. coset:*:0");
  }
  const auto ns = parse_n_list(spec.n.empty() ? "32,64,128" : spec.n);
  const std::string name = spec.family.substr(0, spec.family.find(':'));
  std::string metric = spec.metric;
  if (metric.empty()) {
    metric = name == "nodal-roots" || name == "cusp-ints" ? "quadruples" : "ordinary";
  }
  if (metric != "ordinary" && metric != "four-point" && metric != "quadruples") {
    throw PreconditionError("unknown metric '" + metric + "'");
  }
  std::ostringstream os;
  ordered_json arr = ordered_json::array();
  os << "n,count,count/n^2,count/n^3\n";
  for (const long n : ns) {
    std::string text = spec.family;
    text.replace(text.find('*'), 1, std::to_string(n));
    const std::uint64_t count = growth_count(parse_family(text), metric, spec.jobs);
    const double x = static_cast<double>(n);
    const double c = static_cast<double>(count);
    os << n << ',' << count << ',' << format_double(c / (x * x)) << ','
       << format_double(c / (x * x * x)) << '\n';
    ordered_json j;
    j["n"] = n;
    j["count"] = count;
    j["count/n^2"] = rounded(c / (x * x));
    j["count/n^3"] = rounded(c / (x * x * x));
    arr.push_back(j);
  }
  emit(spec, out, spec.format == "json" ? arr.dump(2) + "\n" : os.str());
  return kExitOk;
}

}  // namespace

std::vector<long> parse_n_list(const std::string &text)
{
  std::vector<long> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const long lo = parse_long(text.substr(0, dots), "n range");
    const long hi = parse_long(text.substr(dots + 2), "n range");
    if (lo > hi) {
      throw PreconditionError("empty n range '" + text + "'");
    }
    for (long n = lo; n <= hi; ++n) {
      out.push_back(n);
    }
    return out;
  }
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    out.push_back(parse_long(part, "n"));
  }
  if (out.empty()) {
    throw PreconditionError("no n values given");
  }
  return out;
}

FamilyDescriptor resolve_family(const RunSpec &spec)
{
  if (spec.family.empty()) {
    throw PreconditionError("--family is required");
  }
  if (spec.family.find(':') != std::string::npos) {
    const FamilyDescriptor fam = parse_family(spec.family);
    return fam;
  }
  const std::string &name = spec.family;
  if (spec.n.empty()) {
    throw PreconditionError("family '" + name + "' needs --n");
  }
  std::string text = name + ":" + std::to_string(parse_long(spec.n, "n"));
  if (name == "coset") {
    text += ":" + std::to_string(spec.offset.value_or(0));
  } else if (name == "coset2") {
    text += ":" + std::to_string(spec.offset.value_or(0)) + ":" +
            std::to_string(spec.parity.value_or(0));
  } else if (name == "random") {
    if (!spec.seed) {
      throw PreconditionError("random family needs --seed");
    }
    text += ":" + std::to_string(*spec.seed) + ":" + std::to_string(spec.bound.value_or(1000));
  }
  return parse_family(text);
}

QuarticCurve nodal_reference_curve() { return QuarticCurve(1, 0, 0, 0); }

nlohmann::ordered_json model_to_json(const GroupConfig &config)
{
  ordered_json j;
  switch (config.kind()) {
  case ModelKind::Cyclic:
    j["kind"] = "cyclic";
    break;
  case ModelKind::TwoComponent:
    j["kind"] = "two-component";
    break;
  case ModelKind::CirclePair:
    j["kind"] = config.alignment() == CircleAlignment::Aligned ? "prism" : "antiprism";
    break;
  }
  j["n"] = config.order();
  j["offset"] = config.offset();
  j["parity"] = config.parity();
  std::vector<int> removed;
  for (int i = 0; i < config.order(); ++i) {
    if (!config.is_member(i)) {
      removed.push_back(i);
    }
  }
  if (!removed.empty()) {
    j["removed"] = removed;
  }
  return j;
}

GroupConfig model_from_json(const nlohmann::json &j)
{
  try {
    const std::string kind = j.at("kind").get<std::string>();
    const int n = j.at("n").get<int>();
    const int offset = j.value("offset", 0);
    const int parity = j.value("parity", 0);
    std::optional<GroupConfig> config;
    if (kind == "cyclic") {
      config = GroupConfig::cyclic(n, offset);
    } else if (kind == "two-component") {
      config = GroupConfig::two_component(n, offset, parity);
    } else if (kind == "prism" || kind == "antiprism") {
      if (n % 2 != 0) {
        throw PreconditionError("circle-pair model needs even n");
      }
      config = GroupConfig::circle_pair(
          n / 2, kind == "prism" ? CircleAlignment::Aligned : CircleAlignment::Offset);
    } else {
      throw PreconditionError("unknown model kind '" + kind + "'");
    }
    if (j.contains("removed")) {
      for (const int i : j.at("removed").get<std::vector<int>>()) {
        config->remove_member(i);
      }
    }
    return *config;
  } catch (const nlohmann::json::exception &e) {
    throw PreconditionError(std::string("malformed model file: ") + e.what());
  }
}

int run_command(const RunSpec &spec, std::ostream &out, std::ostream &err)
{
  try {
    if (spec.format != "json" && spec.format != "csv") {
      throw PreconditionError("--format must be json or csv");
    }
    if (spec.jobs == 0) {
      throw PreconditionError("--jobs must be positive");
    }
    if (spec.command == "generate") {
      return cmd_generate(spec, out, err);
    }
    if (spec.command == "count") {
      return cmd_count(spec, out, err);
    }
    if (spec.command == "classify") {
      return cmd_classify(spec, out, err);
    }
    if (spec.command == "decompose") {
      return cmd_decompose(spec, out, err);
    }
    if (spec.command == "verify") {
      return cmd_verify(spec, out, err);
    }
    if (spec.command == "max4pt") {
      return cmd_max4pt(spec, out, err);
    }
    if (spec.command == "growth") {
      return cmd_growth(spec, out, err);
    }
    throw PreconditionError("unknown command '" + spec.command + "'");
  } catch (const PreconditionError &e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const VerificationError &e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace qplanes
