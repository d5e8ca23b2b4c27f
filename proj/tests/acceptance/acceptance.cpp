#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qk/classify.hpp"
#include "qk/decompose.hpp"
#include "qk/generators.hpp"
#include "qk/ideals.hpp"
#include "qk/io.hpp"
#include "qk/report.hpp"
#include "qk/verify.hpp"

namespace fs = std::filesystem;
using namespace qk;

namespace {

// Wall-clock budgets in seconds.
constexpr double kAxiomBudget = 5;
constexpr double kOracleBudget = 30;
constexpr double kCoverageBudget = 60;

struct Outcome {
  bool pass = true;
  std::string details;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fixed(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

FiniteQuantale data(const std::string& name) { return load_quant((fs::path(QK_DATA_DIR) / name).string()); }

Ideal down(const FiniteQuantale& q, const std::string& label) { return principal(q, q.at(label)); }

// powerset k <= 4, lower sets of every poset on <= 4 points, opens of every
// topology on <= 3 points, lukasiewicz n <= 8.
std::vector<FiniteQuantale> generator_bases() {
  std::vector<FiniteQuantale> out;
  for (unsigned k = 0; k <= 4; ++k) out.push_back(powerset(k));
  for (unsigned p = 0; p <= 4; ++p)
    for (const auto& poset : all_posets(p)) out.push_back(lower_sets(poset));
  for (unsigned p = 0; p <= 3; ++p)
    for (const auto& t : all_topologies(p)) out.push_back(opens(t));
  for (unsigned n = 1; n <= 8; ++n) out.push_back(lukasiewicz(n));
  return out;
}

// Generator bases, their ideal quantales, the bundled files and the other
// built-in shapes.
std::vector<FiniteQuantale> corpus() {
  auto out = generator_bases();
  const std::size_t bases = out.size();
  for (std::size_t k = 0; k < bases; ++k) out.push_back(ideal_quantale(out[k]).quantale);
  for (const char* f : {"q4.quant", "l3.quant", "m3.quant", "c2.quant", "gap4.quant"}) out.push_back(data(f));
  out.push_back(m3_quantale());
  out.push_back(trivial_quantale());
  for (unsigned n = 1; n <= 12; ++n) out.push_back(chain_frame(n));
  return out;
}

Outcome criterion1() {
  Stopwatch clock;
  std::size_t checked = 0;
  Outcome o;
  auto check = [&](const FiniteQuantale& q, const std::string& what) {
    ++checked;
    const auto r = check_axioms(q);
    if (!r.all_ok() && o.pass) {
      o.pass = false;
      o.details = what + " fails " + (r.counterexamples.empty() ? "?" : r.counterexamples.front().axiom) + "; ";
    }
  };
  for (const auto& q : generator_bases()) {
    check(q, q.name());
    check(ideal_quantale(q).quantale, "ideal_quantale(" + q.name() + ")");
  }
  const double t = clock.seconds();
  if (t >= kAxiomBudget) o.pass = false;
  o.details += std::to_string(checked) + " instances, all axiom flags true: " + (o.pass ? "yes" : "no") + ", " +
               fixed(t) + " (budget " + fixed(kAxiomBudget) + ")";
  return o;
}

Outcome criterion2() {
  Stopwatch clock;
  std::size_t checked = 0, ideals = 0;
  std::vector<std::string> failures;
  for (const auto& q : corpus()) {
    if (q.size() > 12) continue;
    ++checked;
    const auto r = cross_oracle(q);
    ideals += r.ideal_count;
    if (!r.all_ok()) {
      std::string what = q.name() + ":";
      if (!r.ideals_match) what += " ideals";
      if (!r.radicals_agree) what += " radicals";
      if (!r.product_matches) what += " product";
      if (!r.isomorphism) what += " isomorphism";
      failures.push_back(what);
    }
  }
  const double t = clock.seconds();
  Outcome o;
  o.pass = failures.empty() && t < kOracleBudget;
  o.details = std::to_string(checked) + " instances with n <= 12, " + std::to_string(ideals) + " ideals, " +
              std::to_string(failures.size()) + " mismatches";
  if (!failures.empty()) o.details += " (first " + failures.front() + ")";
  o.details += ", " + fixed(t) + " (budget " + fixed(kOracleBudget) + ")";
  return o;
}

std::vector<std::string> required_laws() {
  std::vector<std::string> out;
  for (int k = 1; k <= 20; ++k) out.push_back((k < 10 ? "bpi.0" : "bpi.") + std::to_string(k));
  for (int k = 1; k <= 5; ++k) out.push_back("bip." + std::to_string(k));
  for (int k = 1; k <= 3; ++k) out.push_back("ann." + std::to_string(k));
  for (const char* c : {"cep.1", "cep.2", "cep.3a", "cep.3b", "cep.3c", "cep.3d", "cep.4", "cep.5a", "cep.5b", "cep.5c",
                        "cep.6a", "cep.6b", "cep.6c"})
    out.push_back(c);
  for (int k = 1; k <= 8; ++k) out.push_back("rad." + std::to_string(k));
  for (const char* c : {"avoid.lemma", "spkr.equivalence", "sat.closure", "sat.least", "sat.primes", "pqx",
                        "primary.piqp", "primary.plpd", "irr.strong", "irr.elementwise", "irr.prime", "irr.lir",
                        "irr.representation", "irr.finite", "irr.prira", "irr.minimal", "irr.total"})
    out.push_back(c);
  return out;
}

Outcome criterion3() {
  Stopwatch clock;
  const std::vector<FiniteQuantale> instances{data("q4.quant"), data("l3.quant"), powerset(3),
                                              lower_sets({3, {{1, 2}, {2, 3}}}), lukasiewicz(5), data("m3.quant")};
  const auto required = required_laws();
  Outcome o;
  std::vector<std::string> problems;
  std::size_t laws = 0;
  for (const auto& q : instances) {
    const auto homs = canonical_homs(q);
    const auto nontrivial =
        std::count_if(homs.begin(), homs.end(), [](const QuantaleHom& h) { return !h.name().starts_with("id_"); });
    if (nontrivial < 2) problems.push_back(q.name() + ": only " + std::to_string(nontrivial) + " nontrivial homs");
    const auto r = run_suite(q, Suite::All, homs);
    laws += r.laws.size();
    for (const auto& l : r.laws)
      if (l.status != LawStatus::Pass) problems.push_back(q.name() + ": " + l.law + " " + std::string(to_string(l.status)));
    for (const auto& name : required) {
      const auto it = std::find_if(r.laws.begin(), r.laws.end(), [&](const LawResult& l) { return l.law == name; });
      if (it == r.laws.end() || it->checked == 0) problems.push_back(q.name() + ": " + name + " not exercised");
    }
  }
  const double t = clock.seconds();
  o.pass = problems.empty() && t < kCoverageBudget;
  o.details = std::to_string(instances.size()) + " instances, " + std::to_string(laws) + " law results, " +
              std::to_string(required.size()) + " required laws each, " + std::to_string(problems.size()) + " problems";
  if (!problems.empty()) o.details += " (first " + problems.front() + ")";
  o.details += ", " + fixed(t) + " (budget " + fixed(kCoverageBudget) + ")";
  return o;
}

Outcome criterion4() {
  std::size_t instances = 0, decomposable = 0, skipped = 0, decompositions = 0;
  std::vector<std::string> failures;
  for (const auto& q : corpus()) {
    if (q.size() > 10) continue;
    ++instances;
    for (const auto& i : enumerate_ideals(q)) {
      if (!i.is_proper()) continue;
      try {
        const auto r = uniqueness_report(i);
        ++decomposable;
        decompositions += r.decompositions_enumerated;
        if (!(r.associated_equals_colon && r.isolated_are_minimal_primes && r.isolated_components_match &&
              r.isolated_components_characterized))
          failures.push_back(q.name() + " at " + ideal_name(i));
      } catch (const NotDecomposableError&) {
        ++skipped;
      }
    }
  }
  Outcome o;
  o.pass = failures.empty() && decomposable > 0;
  o.details = std::to_string(decomposable) + " decomposable proper ideals over " + std::to_string(instances) +
              " instances with n <= 10 (" + std::to_string(decompositions) + " minimal decompositions, " +
              std::to_string(skipped) + " ideals not decomposable), " + std::to_string(failures.size()) + " failures";
  if (!failures.empty()) o.details += " (first " + failures.front() + ")";
  return o;
}

Outcome criterion5() {
  std::vector<std::string> wrong;
  auto expect = [&](bool ok, const std::string& fact) {
    if (!ok) wrong.push_back(fact);
  };
  const auto q4 = data("q4.quant");
  const auto l3 = data("l3.quant");
  const auto m3 = data("m3.quant");

  expect(spectrum(q4) == std::vector<Ideal>{down(q4, "a"), down(q4, "b")}, "spectrum(q4)");
  for (auto a : {RadicalAlgorithm::Powers, RadicalAlgorithm::Primes, RadicalAlgorithm::Mcsets})
    expect(radical(down(l3, "0"), a) == down(l3, "1"), "radical(l3, down 0)");
  const auto c = classify(down(l3, "0"));
  expect(c.primary && !c.prime, "down 0 in l3 primary and not prime");
  expect(c.radical == down(l3, "1"), "radical of down 0 in l3");
  expect(is_arithmetic(q4), "q4 arithmetic");
  expect(!is_arithmetic(m3), "m3 not arithmetic");
  for (const auto& q : {q4, l3, m3, data("c2.quant"), data("gap4.quant")}) {
    const auto r = arithmetic_equivalence_check(q);
    expect((r.irreducible != r.strongly_irreducible) == !is_arithmetic(q), q.name() + " irreducible sets");
  }
  expect(structurally_equal(m3, m3_quantale()), "m3.quant is the built-in m3");

  Outcome o;
  o.pass = wrong.empty();
  o.details = wrong.empty() ? "all golden facts hold" : std::to_string(wrong.size()) + " facts wrong, first: " + wrong.front();
  return o;
}

Outcome criterion6() {
  std::vector<std::string> unflagged;
  std::size_t mutations = 0;
  for (const auto& q : {data("q4.quant"), data("l3.quant")}) {
    const std::size_t n = q.size();
    const std::vector<Element> base(q.mul_table().begin(), q.mul_table().end());
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element v = 0; v < n; ++v) {
          if (v == base[a * n + b]) continue;
          ++mutations;
          auto mul = base;
          mul[a * n + b] = v;
          bool flagged = false;
          try {
            flagged = !run_suite(replace_mul(q, mul), Suite::All).all_pass();
          } catch (const Error&) {
            flagged = true;
          }
          if (!flagged)
            unflagged.push_back(q.name() + " (" + q.label(a) + "," + q.label(b) + ") " + q.label(base[a * n + b]) +
                                "->" + q.label(v));
        }
  }
  Outcome o;
  o.pass = unflagged.empty();
  o.details = std::to_string(mutations) + " single-cell mutations, " + std::to_string(unflagged.size()) + " unflagged";
  for (const auto& u : unflagged) o.details += "; " + u;
  if (!unflagged.empty()) o.details += " (each unflagged table is itself a commutative quantale)";
  return o;
}

struct Run {
  int exit = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string r = "'";
  for (char ch : s) r += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return r + "'";
}

Run run_cli(const std::string& args) {
  const std::string cmd = "cd " + quote(QK_DATA_DIR) + " && " + quote(QK_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome criterion7() {
  std::vector<std::string> problems;
  std::set<int> exits;
  std::set<std::string> commands;
  std::size_t cases = 0;

  std::ifstream manifest(fs::path(QK_GOLDEN_DIR) / "cases.txt");
  std::string line;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string name, exit, args;
    std::getline(fields, name, '\t');
    std::getline(fields, exit, '\t');
    std::getline(fields, args);
    ++cases;
    const auto r = run_cli(args);
    exits.insert(r.exit);
    commands.insert(args.substr(0, args.find(' ')));
    if (r.exit != std::stoi(exit)) problems.push_back(name + " exited " + std::to_string(r.exit));
    std::ifstream want_file(fs::path(QK_GOLDEN_DIR) / (name + ".out"), std::ios::binary);
    const std::string want{std::istreambuf_iterator<char>(want_file), std::istreambuf_iterator<char>()};
    if (r.out != want) problems.push_back(name + " output differs");
  }
  for (const char* c : {"check", "ideals", "classify", "spectrum", "radical", "decompose", "verify", "gen", "hom"})
    if (!commands.contains(c)) problems.push_back(std::string("no case for ") + c);
  if (exits != std::set<int>{0, 1, 2}) problems.push_back("exit codes 0, 1 and 2 not all exercised");

  std::size_t round_trips = 0;
  for (const auto& entry : fs::directory_iterator(QK_DATA_DIR)) {
    const auto text = read_text(entry.path().string());
    if (entry.path().extension() == ".quant") {
      ++round_trips;
      if (write_quant(parse_quant(text)) != text) problems.push_back(entry.path().filename().string() + " not stable");
    } else if (entry.path().extension() == ".hom") {
      const auto src = parse_hom_source(text);
      const auto from = data(src.source + ".quant");
      const auto to = data(src.target + ".quant");
      if (!check_hom(from, to, resolve_hom_map(src, from, to)).ok) continue;
      ++round_trips;
      if (write_hom(build_hom(src, from, to)) != text) problems.push_back(entry.path().filename().string() + " not stable");
    }
  }
  for (const char* spec : {"powerset:3", "lukasiewicz:6", "chain:5", "m3", "trivial", "lowersets:3:1<2", "opens:2:1",
                           "ideal_quantale:l3.quant"}) {
    ++round_trips;
    const auto first = run_cli("gen " + quote(spec));
    if (first.exit != 0 || write_quant(parse_quant(first.out)) != first.out)
      problems.push_back(std::string("gen ") + spec + " not stable");
  }

  Outcome o;
  o.pass = problems.empty();
  o.details = std::to_string(cases) + " golden cases, " + std::to_string(round_trips) + " round trips, " +
              std::to_string(problems.size()) + " problems";
  if (!problems.empty()) o.details += " (first " + problems.front() + ")";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria", "qk_acceptance"};
  int criterion = 0;
  app.add_option("--criterion", criterion, "Criterion number (1-7)")->required()->check(CLI::Range(1, 7));
  CLI11_PARSE(app, argc, argv);

  const std::map<int, std::function<Outcome()>> criteria{{1, criterion1}, {2, criterion2}, {3, criterion3},
                                                          {4, criterion4}, {5, criterion5}, {6, criterion6},
                                                          {7, criterion7}};
  Outcome o;
  try {
    o = criteria.at(criterion)();
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  std::cout << "criterion " << criterion << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.details << "\n";
  return o.pass ? 0 : 1;
}
