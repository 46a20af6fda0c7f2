#include "kac/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "kac/cohomology.hpp"
#include "kac/errors.hpp"
#include "kac/serialize.hpp"

namespace kac::cli {

namespace {

struct Options {
  std::string preset;
  std::string spec_file;
  std::string q;
  std::string z;
  std::string type;
  std::string format = "text";
  Int n = 2;
  std::size_t max_rank = 6;
  Int max_n = 3;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GroupSpec load_spec(const Options& o, std::ostream& err) {
  if (o.preset.empty() == o.spec_file.empty()) throw UsageError("give exactly one of --preset or --spec");
  GroupSpec spec;
  if (!o.preset.empty()) {
    spec = preset(o.preset);
  } else {
    std::ifstream in(o.spec_file);
    if (!in) throw SpecError("cannot read spec file '" + o.spec_file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    spec = parse_spec_json(buffer.str());
  }
  for (const auto& t : spec.components)
    if (t.is_alias()) err << "warning: " << t.name() << " duplicates " << (t.family == Family::B ? "C2" : "A3") << '\n';
  return spec;
}

CentralElement parse_z(const std::string& text, const GroupSpec& spec) {
  if (text.empty() || text == "trivial") return CentralElement{RatVec(spec.generators.size(), Rational(0))};
  CentralElement z;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      z.values.push_back(frac(parse_rational(item)));
    } catch (const std::invalid_argument&) {
      throw SpecError("bad central value '" + item + "'");
    }
  }
  check_central(spec, z);
  return z;
}

std::string vec_text(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string group_text(const GroupSpec& spec) {
  const SemisimpleGroup g(spec);
  std::string s;
  for (const auto& t : g.spec().components) s += (s.empty() ? "" : " x ") + t.name();
  s += "; X/Q order " + std::to_string(g.xq_elements().size());
  for (const auto& c : g.spec().generators) s += ", generator " + vec_text(c);
  return s + "; X^vee/Q^vee " + g.dual_group().structure;
}

void print_orbits(std::ostream& out, const ExtendedDiagram& d, const std::vector<LabelingOrbit>& classes,
                  const std::vector<RatVec>* witnesses, const std::vector<TorusPoint>* points,
                  std::optional<std::size_t> neutral) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& o = classes[i];
    out << "  [" << i << "]" << (neutral == i ? "*" : " ") << ' ' << format_labeling(d, o.representative);
    if (o.members.size() > 1) {
      out << "  ~";
      for (const auto& m : o.members)
        if (m != o.representative) out << ' ' << format_labeling(d, m);
    }
    if (witnesses) out << "  u = " << vec_text((*witnesses)[i]);
    if (points) out << "  t = " << vec_text((*points)[i].coords);
    out << '\n';
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int labelings(const Options& o, std::ostream& out, std::ostream& err) {
  const SemisimpleGroup g(load_spec(o, err));
  const ExtendedDiagram& d = g.diagram();
  auto list = enumerate_labelings(d, o.n);
  std::string filter = "none";
  if (!o.q.empty()) {
    const KacLabeling q = parse_labeling(d, o.q, o.n);
    list = filter_matching_q(list, g.spec(), q);
    filter = "matching " + format_labeling(d, q);
  } else if (!o.z.empty()) {
    const CentralElement z = parse_z(o.z, g.spec());
    list = filter_for_central(list, g.spec(), z);
    filter = "z = " + vec_text(z.values);
  }
  if (o.format == "json") {
    Json items = Json::array();
    for (const auto& p : list) items.push_back(to_json(d, p));
    emit(out, Json{{"command", "labelings"}, {"group", to_json(g.spec())}, {"n", o.n}, {"filter", filter},
                   {"count", list.size()}, {"labelings", items}});
    return ok;
  }
  out << "group: " << group_text(g.spec()) << '\n';
  out << "Kac " << o.n << "-labelings, filter " << filter << ": " << list.size() << '\n';
  for (const auto& p : list) out << "  " << format_labeling(d, p) << "  " << format_labeling_flat(p) << '\n';
  return ok;
}

void print_h1(std::ostream& out, const H1Result& r) {
  const ExtendedDiagram d = build_extended_diagram(r.group_spec.components);
  out << "group: " << group_text(r.group_spec) << '\n';
  out << "twist q: " << format_labeling(d, r.twist) << '\n';
  out << "H^1 classes: " << r.classes.size() << " (* marks the class of q)\n";
  print_orbits(out, d, r.classes, &r.witnesses, nullptr, r.neutral_index);
}

int h1(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.q.empty()) throw UsageError("h1 needs --q");
  const GroupSpec spec = load_spec(o, err);
  const KacLabeling q = parse_labeling(build_extended_diagram(spec.components), o.q, 2);
  const H1Result r = h1_inner_form(spec, q);
  if (o.format == "json") {
    Json j{{"command", "h1"}};
    j.update(to_json(r));
    emit(out, j);
  } else {
    print_h1(out, r);
  }
  return ok;
}

int adjoint_h1(const Options& o, std::ostream& out, std::ostream& err) {
  const GroupSpec spec = load_spec(o, err);
  const H1Result r = h1_adjoint(spec.components);
  if (o.format == "json") {
    Json j{{"command", "adjoint-h1"}};
    j.update(to_json(r));
    emit(out, j);
  } else {
    print_h1(out, r);
  }
  return ok;
}

int roots(const Options& o, std::ostream& out, std::ostream& err) {
  const GroupSpec spec = validate_spec(load_spec(o, err));
  const RootsResult r = nth_root_classes(spec, parse_z(o.z, spec), o.n);
  if (o.format == "json") {
    Json j{{"command", "roots"}};
    j.update(to_json(r));
    emit(out, j);
    return ok;
  }
  const ExtendedDiagram d = build_extended_diagram(r.group_spec.components);
  out << "group: " << group_text(r.group_spec) << '\n';
  out << "z = " << vec_text(r.z.values) << ", n = " << r.n << ": " << r.classes.size() << " classes of roots\n";
  print_orbits(out, d, r.classes, nullptr, &r.torus_points, std::nullopt);
  return ok;
}

int forms(const Options& o, std::ostream& out, std::ostream& err) {
  SimpleType type;
  if (!o.type.empty()) {
    type = SimpleType::parse(o.type);
  } else {
    const GroupSpec spec = load_spec(o, err);
    if (spec.components.size() != 1) throw SpecError("forms works on a single simple type");
    type = spec.components.front();
  }
  const auto rows = real_form_table(type);
  if (o.format == "json") {
    Json j{{"command", "forms"}};
    j.update(to_json(rows, type));
    emit(out, j);
    return ok;
  }
  const ExtendedDiagram d = build_extended_diagram({type});
  out << "adjoint classes of " << type.name() << ": " << rows.size() << '\n';
  for (const auto& row : rows) {
    out << "  " << row.name << (row.label.empty() ? "" : " (" + row.label + ")") << ": ";
    for (std::size_t i = 0; i < row.orbit.members.size(); ++i)
      out << (i ? " ~ " : "") << format_labeling(d, row.orbit.members[i]);
    out << '\n';
  }
  return ok;
}

std::vector<SimpleType> sweep_types(std::size_t max_rank) {
  std::vector<SimpleType> out;
  for (int l = 1; l <= static_cast<int>(max_rank); ++l) {
    out.push_back({Family::A, l});
    if (l >= 3) out.push_back({Family::B, l});
    if (l >= 2) out.push_back({Family::C, l});
    if (l >= 4) out.push_back({Family::D, l});
    if (l >= 6 && l <= 8) out.push_back({Family::E, l});
    if (l == 4) out.push_back({Family::F, 4});
    if (l == 2) out.push_back({Family::G, 2});
  }
  return out;
}

int oracle_check(const Options& o, std::ostream& out, std::ostream& err) {
  const OracleBudget budget = OracleBudget::from_env();
  std::vector<std::pair<GroupSpec, std::vector<Int>>> jobs;
  if (!o.preset.empty() || !o.spec_file.empty()) {
    jobs.push_back({load_spec(o, err), {o.n}});
  } else {
    std::vector<Int> ns;
    for (Int n = 1; n <= o.max_n; ++n) ns.push_back(n);
    for (const auto& t : sweep_types(o.max_rank))
      for (const auto& spec : intermediate_lattices({t})) jobs.push_back({spec, ns});
  }

  std::vector<CrossCheckReport> reports;
  for (const auto& [spec, ns] : jobs) {
    const GroupSpec s = validate_spec(spec);
    std::vector<CentralElement> zs;
    if (!o.z.empty() && jobs.size() == 1) {
      zs.push_back(parse_z(o.z, s));
    } else {
      zs = enumerate_center(s);
    }
    for (const auto& z : zs)
      for (Int n : ns) reports.push_back(cross_check(s, z, n, budget));
  }

  std::size_t failures = 0;
  for (const auto& r : reports) failures += !r.bijective;
  if (o.format == "json") {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    emit(out, Json{{"command", "oracle-check"}, {"jobs", reports.size()}, {"failures", failures}, {"reports", list}});
  } else {
    for (const auto& r : reports) {
      out << group_text(r.spec) << "; z = " << vec_text(r.z.values) << "; n = " << r.n << ": labeling classes "
          << r.labeling_classes << ", torus classes " << r.torus_classes << ", "
          << (r.bijective ? "bijective" : "MISMATCH: " + r.failure) << '\n';
    }
    out << reports.size() << " jobs, " << failures << " failures\n";
  }
  return failures == 0 ? ok : consistency_error;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galois cohomology of compact semisimple groups via Kac labelings", "kac_h1"};
  app.require_subcommand(1);
  Options o;

  auto add_spec = [&](CLI::App* c) {
    c->add_option("--preset", o.preset, "sc:T, ad:T, halfspin:D2k or so:T; components joined by 'x'");
    c->add_option("--spec", o.spec_file, "JSON file with components and generators of X/Q");
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* lab = app.add_subcommand("labelings", "list Kac n-labelings, optionally filtered");
  add_spec(lab);
  lab->add_option("--n", o.n, "target weighted sum")->check(CLI::PositiveNumber);
  lab->add_option("--z", o.z, "keep labelings of this central element (comma-separated rationals or 'trivial')");
  lab->add_option("--q", o.q, "keep labelings matching this twist");
  add_format(lab);

  auto* h = app.add_subcommand("h1", "H^1(R, qG) for an inner twist q");
  add_spec(h);
  h->add_option("--q", o.q, "Kac 2-labeling, e.g. 000/00/002 or [0,0,0,0,0,0,0,2]");
  add_format(h);

  auto* adj = app.add_subcommand("adjoint-h1", "H^1(R, G^ad) for the components of a spec");
  add_spec(adj);
  add_format(adj);

  auto* rt = app.add_subcommand("roots", "conjugacy classes of n-th roots of a central element");
  add_spec(rt);
  rt->add_option("--n", o.n, "order of the roots")->check(CLI::PositiveNumber);
  rt->add_option("--z", o.z, "central element (comma-separated rationals or 'trivial')");
  add_format(rt);

  auto* fm = app.add_subcommand("forms", "adjoint classes of a simple type with their twists");
  add_spec(fm);
  fm->add_option("--type", o.type, "simple type such as E7");
  add_format(fm);

  auto* oc = app.add_subcommand("oracle-check", "compare labeling orbits with torus W-orbits");
  add_spec(oc);
  oc->add_option("--n", o.n, "order of the roots for a single spec")->check(CLI::PositiveNumber);
  oc->add_option("--z", o.z, "central element for a single spec (default: all)");
  oc->add_option("--max-rank", o.max_rank, "sweep all types up to this rank (no spec given)");
  oc->add_option("--max-n", o.max_n, "sweep n = 1..max-n (no spec given)")->check(CLI::PositiveNumber);
  add_format(oc);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return usage_error;
  }

  try {
    if (lab->parsed()) return labelings(o, out, err);
    if (h->parsed()) return h1(o, out, err);
    if (adj->parsed()) return adjoint_h1(o, out, err);
    if (rt->parsed()) return roots(o, out, err);
    if (fm->parsed()) return forms(o, out, err);
    return oracle_check(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_error;
  } catch (const SpecError& e) {
    err << "spec error: " << e.what() << '\n';
    return spec_error;
  } catch (const LabelingError& e) {
    err << "labeling error: " << e.what() << '\n';
    return labeling_error;
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return budget_refused;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return consistency_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return internal_error;
  }
}

}  // namespace kac::cli
