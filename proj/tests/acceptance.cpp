// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
// Usage: acceptance <path-to-kac_h1>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "kac/cli.hpp"
#include "kac/cohomology.hpp"
#include "kac/errors.hpp"
#include "support.hpp"

using namespace kac;

namespace {

// Wall-clock limits in seconds, fixed here so a slow regression fails loudly.
constexpr double k_e7_enumeration_limit = 1.0;
constexpr double k_halfspin_limit = 5.0;
constexpr double k_sigma_limit = 10.0;
constexpr double k_oracle_limit = 30.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::set<KacLabeling> as_set(const std::vector<KacLabeling>& v) { return {v.begin(), v.end()}; }

std::string count_text(std::size_t got, std::size_t want) {
  return "got " + std::to_string(got) + ", want " + std::to_string(want);
}

KacLabeling d_labeling(int l, std::initializer_list<std::pair<int, Int>> labels) {
  KacLabeling p{IntVec(static_cast<std::size_t>(l) + 1, 0), 2};
  for (auto [v, x] : labels) p.labels[v == 0 ? static_cast<std::size_t>(l) : static_cast<std::size_t>(v) - 1] = x;
  return p;
}

Outcome e7_enumeration() {
  Outcome o;
  const auto start = Clock::now();
  const auto k = enumerate_labelings(build_extended_diagram({SimpleType::parse("E7")}), 2);
  const double t = seconds_since(start);
  o.require(as_set(k) == as_set(testing::e7_q) && k.size() == 6, "K_2(E7) differs from q1..q6");
  o.require(t < k_e7_enumeration_limit, "took " + std::to_string(t) + " s");
  return o;
}

Outcome e7_adjoint_orbits() {
  Outcome o;
  const auto& q = testing::e7_q;
  const auto r = h1_adjoint({SimpleType::parse("E7")});
  std::set<std::set<KacLabeling>> got;
  for (const auto& c : r.classes) got.insert(as_set(c.members));
  const std::set<std::set<KacLabeling>> want{{q[0], q[1]}, {q[2]}, {q[3], q[4]}, {q[5]}};
  o.require(got == want, "orbit partition differs, " + count_text(r.classes.size(), 4));
  return o;
}

Outcome e7_simply_connected() {
  Outcome o;
  const auto& q = testing::e7_q;
  const auto sc = preset("sc:E7");
  const auto k = enumerate_labelings(build_extended_diagram(sc.components), 2);
  const std::set<KacLabeling> even{q[0], q[1], q[3], q[4]};
  const std::set<KacLabeling> odd{q[2], q[5]};
  for (std::size_t i : {0u, 3u}) {
    o.require(as_set(filter_matching_q(k, sc, q[i])) == even, "even twist q" + std::to_string(i + 1));
    o.require(h1_inner_form(sc, q[i]).classes.size() == 4, "H^1 count for q" + std::to_string(i + 1));
  }
  for (std::size_t i : {5u, 2u}) {
    o.require(as_set(filter_matching_q(k, sc, q[i])) == odd, "odd twist q" + std::to_string(i + 1));
    o.require(h1_inner_form(sc, q[i]).classes.size() == 2, "H^1 count for q" + std::to_string(i + 1));
  }
  return o;
}

Outcome halfspin_counts() {
  Outcome o;
  const auto start = Clock::now();
  for (int k = 2; k <= 10; ++k) {
    const int l = 2 * k;
    const auto spec = preset("halfspin:D" + std::to_string(l));
    const std::size_t even = h1_inner_form(spec, d_labeling(l, {{0, 2}})).classes.size();
    const std::size_t odd = h1_inner_form(spec, d_labeling(l, {{0, 1}, {1, 1}})).classes.size();
    const auto want_even = static_cast<std::size_t>(k / 2 + 4);
    const auto want_odd = static_cast<std::size_t>((k + 1) / 2 + 1);
    o.require(even == want_even, "D" + std::to_string(l) + " even: " + count_text(even, want_even));
    o.require(odd == want_odd, "D" + std::to_string(l) + " odd: " + count_text(odd, want_odd));
  }
  const auto d6 = preset("halfspin:D6");
  for (const auto* reps : {&testing::d6_even, &testing::d6_odd}) {
    const auto r = h1_inner_form(d6, reps->front());
    o.require(r.classes.size() == reps->size(), "D6 class count");
    for (const auto& c : r.classes) {
      std::size_t hits = 0;
      for (const auto& p : *reps) hits += std::binary_search(c.members.begin(), c.members.end(), p);
      o.require(hits == 1, "D6 class of " + format_labeling_flat(c.representative) + " holds " +
                               std::to_string(hits) + " listed representatives");
    }
  }
  const double t = seconds_since(start);
  o.require(t < k_halfspin_limit, "took " + std::to_string(t) + " s");
  return o;
}

Outcome so_compact() {
  Outcome o;
  for (int l = 4; l <= 8; ++l) {
    const auto got = h1_inner_form(preset("so:D" + std::to_string(l)), d_labeling(l, {{0, 2}})).classes.size();
    o.require(got == static_cast<std::size_t>(l) + 1, "D" + std::to_string(l) + ": " + count_text(got, l + 1));
  }
  return o;
}

Outcome sigma_agreement() {
  Outcome o;
  const auto start = Clock::now();
  auto types = testing::simple_types(8);
  types.push_back({Family::B, 2});
  types.push_back({Family::D, 3});
  std::size_t checked = 0;
  for (const auto& t : types) {
    const CartanData d = cartan_data(t);
    for (int j = 1; j <= t.rank; ++j) {
      if (d.mark(j) != 1) continue;
      const auto table = sigma_table(t, j);
      o.require(table && *table == sigma_geometric(d, j), t.name() + " j=" + std::to_string(j));
      ++checked;
    }
  }
  o.require(checked > 0, "nothing checked");
  const double t = seconds_since(start);
  o.require(t < k_sigma_limit, "took " + std::to_string(t) + " s");
  return o;
}

Outcome oracle_sweep() {
  Outcome o;
  const auto start = Clock::now();
  const OracleBudget budget;  // defaults, independent of the environment
  std::size_t jobs = 0;
  auto run = [&](const GroupSpec& spec, const CentralElement& z, Int n) {
    const auto r = cross_check(spec, z, n, budget);
    ++jobs;
    o.require(r.bijective, SemisimpleGroup(spec).name() + " n=" + std::to_string(n) + ": " + r.failure);
  };
  for (const auto& t : testing::simple_types(6))
    for (const auto& spec : intermediate_lattices({t}))
      for (const auto& z : enumerate_center(spec))
        for (Int n = 1; n <= 3; ++n) run(spec, z, n);
  for (const char* name : {"sc:E7", "ad:E7"}) {
    const auto spec = preset(name);
    for (const auto& z : enumerate_center(spec)) run(spec, z, 2);
  }
  const double t = seconds_since(start);
  o.require(t < k_oracle_limit, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(jobs) + " jobs";
  return o;
}

Outcome invariance() {
  Outcome o;
  for (const auto& t : testing::simple_types(8)) {
    const ExtendedDiagram single = build_extended_diagram({t});
    const auto k1 = orbit_decompose(enumerate_labelings(single, 1), fundamental_group(single));
    o.require(k1.size() == 1, t.name() + ": K_1 splits into " + std::to_string(k1.size()) + " orbits");

    for (const auto& spec : intermediate_lattices({t})) {
      const SemisimpleGroup g(spec);
      const std::string name = g.name();
      o.require(g.xq_elements().size() * g.dual_group().order() == g.pq_order(), name + ": index product");
      for (Int n = 1; n <= 4; ++n) {
        const auto k = enumerate_labelings(g.diagram(), n);
        for (const auto& z : enumerate_center(spec)) {
          try {
            orbit_decompose(filter_for_central(k, g.spec(), z), g.dual_group());
          } catch (const ConsistencyError& e) {
            o.require(false, name + " n=" + std::to_string(n) + ": " + e.what());
          }
        }
      }
      for (const auto& q : enumerate_labelings(g.diagram(), 2)) {
        try {
          const auto r = h1_inner_form(spec, q);
          o.require(is_zero(r.witnesses[r.neutral_index]), name + ": nonzero witness for the twist class");
        } catch (const ConsistencyError& e) {
          o.require(false, name + " q=" + format_labeling_flat(q) + ": " + e.what());
        }
      }
    }
  }
  return o;
}

std::string run_tool(const std::string& tool, const std::string& args, int& status) {
  const std::string command = "\"" + tool + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  status = pclose(pipe);
  return out;
}

Outcome determinism(const std::string& tool) {
  Outcome o;
  const std::string commands[] = {
      "labelings --preset sc:E7 --n 3 --format json",
      "h1 --preset sc:E7 --q 000/00/002 --format json",
      "h1 --preset halfspin:D12 --q [0,0,0,0,0,0,0,0,0,0,0,0,2] --format json",
      "adjoint-h1 --preset ad:A1xA3 --format json",
      "roots --preset sc:E6 --n 3 --z 1/3 --format json",
      "forms --type E7 --format json",
      "oracle-check --preset halfspin:D6 --n 2 --format json",
  };
  for (const auto& c : commands) {
    int s1 = 0, s2 = 0;
    const std::string a = run_tool(tool, c, s1);
    const std::string b = run_tool(tool, c, s2);
    o.require(s1 == 0 && s2 == 0, "'" + c + "' exited with a failure");
    o.require(!a.empty() && a == b, "'" + c + "' differs between runs");
    std::ostringstream in_process, ignored;
    std::vector<std::string> args;
    std::istringstream words(c);
    for (std::string w; words >> w;) args.push_back(w);
    cli::run(args, in_process, ignored);
    o.require(in_process.str() == a, "'" + c + "' differs between the binary and the library");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path-to-kac_h1>\n";
    return 2;
  }
  const std::string tool = argv[1];
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 E7 Kac 2-labelings are exactly q1..q6", e7_enumeration},
      {"2 adjoint E7 orbits {q1,q2} {q3} {q4,q5} {q6}", e7_adjoint_orbits},
      {"3 simply connected E7 even/odd twists", e7_simply_connected},
      {"4 half-spin D_2k class counts, k = 2..10, and D6 classes", halfspin_counts},
      {"5 compact so(2l) has l+1 classes, l = 4..8", so_compact},
      {"6 table sigma_j equals geometric sigma_j, rank <= 8", sigma_agreement},
      {"7 oracle bijection, rank <= 6 all lattices, all z, n <= 3, plus E7", oracle_sweep},
      {"8 invariance, neutrality, K_1 transitivity, index product", invariance},
      {"9 repeated CLI runs are byte-identical", [&] { return determinism(tool); }},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.3f s", seconds_since(start));
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << "  [" << elapsed << "]"
              << (o.detail.empty() ? "" : "  " + o.detail) << '\n';
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
