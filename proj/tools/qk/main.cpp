#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
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

namespace {

// Anything wrong with the command line or its input files: exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto input(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const qk::Error& e) {
    throw InputError(e.what());
  }
}

qk::FiniteQuantale load(const std::string& path) {
  return input([&] { return qk::load_quant(path); });
}

// SRC and DST of a hom file: a sibling file, the same with `.quant`
// appended, or a generator spec.
qk::FiniteQuantale resolve_carrier(const fs::path& dir, const std::string& name) {
  for (const fs::path& p : {dir / name, dir / (name + ".quant")})
    if (fs::is_regular_file(p)) return load(p.string());
  return input([&] {
    return qk::generate(qk::parse_generator_spec(name, [](const std::string& f) { return qk::load_quant(f); }));
  });
}

struct LoadedHom {
  qk::HomSource source;
  qk::FiniteQuantale from;
  qk::FiniteQuantale to;
};

LoadedHom load_hom(const std::string& path) {
  auto src = input([&] { return qk::parse_hom_source(qk::read_text(path)); });
  const fs::path dir = fs::path(path).parent_path();
  auto from = resolve_carrier(dir, src.source);
  auto to = resolve_carrier(dir, src.target);
  return {std::move(src), std::move(from), std::move(to)};
}

qk::Ideal select_ideal(const qk::FiniteQuantale& q, const std::string& below, const std::string& list) {
  return input([&] {
    if (!below.empty()) return qk::principal(q, q.at(below));
    qk::ElementSet s(q.size());
    std::size_t start = 0;
    while (start <= list.size()) {
      std::size_t comma = list.find(',', start);
      if (comma == std::string::npos) comma = list.size();
      const std::string label = list.substr(start, comma - start);
      if (!label.empty()) s.insert(q.at(label));
      start = comma + 1;
    }
    return qk::make_ideal(q, s);
  });
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("QK_SEED");
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(raw, &used, 0);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("QK_SEED is not an unsigned integer: '") + raw + "'");
  }
}

bool usage_kind(qk::ErrorKind k) {
  using qk::ErrorKind;
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UndeclaredLabel:
    case ErrorKind::DuplicateLabel:
    case ErrorKind::RowArity:
    case ErrorKind::InvalidArgument:
    case ErrorKind::HomRequired:
    case ErrorKind::Io:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideal theory of finite commutative quantales", "qk"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "records";
  app.add_option("--format", format_name, "Output layout")
      ->check(CLI::IsMember({"records", "table"}))
      ->capture_default_str();

  std::string file, below, ideal_list, algorithm = "all", kind = "primary", suite = "all", hom_file, out_file;
  bool timing = false;

  auto* check = app.add_subcommand("check", "Check the quantale axioms");
  check->add_option("FILE", file, ".quant file")->required();

  auto* ideals = app.add_subcommand("ideals", "List all ideals");
  ideals->add_option("FILE", file, ".quant file")->required();

  auto* classify = app.add_subcommand("classify", "Classify one ideal");
  classify->add_option("FILE", file, ".quant file")->required();
  auto* below_opt = classify->add_option("--below", below, "Ideal given by its apex");
  classify->add_option("--ideal", ideal_list, "Ideal given by its members, comma separated")->excludes(below_opt);

  auto* spectrum = app.add_subcommand("spectrum", "List the prime ideals");
  spectrum->add_option("FILE", file, ".quant file")->required();

  auto* radical = app.add_subcommand("radical", "Radical of an ideal");
  radical->add_option("FILE", file, ".quant file")->required();
  radical->add_option("--below", below, "Ideal given by its apex")->required();
  radical->add_option("--algorithm", algorithm, "powers, primes, mcsets or all")
      ->check(CLI::IsMember({"powers", "primes", "mcsets", "all"}))
      ->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "Decompose an ideal");
  decompose->add_option("FILE", file, ".quant file")->required();
  decompose->add_option("--below", below, "Ideal given by its apex")->required();
  decompose->add_option("--kind", kind, "primary or irreducible")
      ->check(CLI::IsMember({"primary", "irreducible"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the law suites");
  verify->add_option("FILE", file, ".quant file")->required();
  verify->add_option("--suite", suite, "Suite name or all")->capture_default_str();
  verify->add_option("--hom", hom_file, "Homomorphism file for the cep suite");
  verify->add_flag("--timing", timing, "Report time per suite");

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("KIND", file, "powerset:K, lukasiewicz:N, chain:N, m3, trivial, lowersets:P[:a<b,...], "
                                "opens:P[:S,...], ideal_quantale:FILE")
      ->required();
  gen->add_option("-o,--output", out_file, "Write to a file instead of standard output");

  auto* hom = app.add_subcommand("hom", "Homomorphism files");
  hom->require_subcommand(1);
  auto* hom_check = hom->add_subcommand("check", "Check a homomorphism file");
  hom_check->add_option("HOMFILE", hom_file, ".hom file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto format = qk::parse_output_format(format_name);
  auto emit = [&](const qk::Records& r) { std::cout << qk::render(r, format); };

  try {
    if (*check) {
      const auto q = load(file);
      const auto r = qk::check_axioms(q);
      emit(qk::axiom_records(q, r));
      return r.all_ok() ? 0 : 1;
    }
    if (*ideals) {
      const auto q = load(file);
      emit(qk::ideal_records(q, qk::enumerate_ideals(q)));
      return 0;
    }
    if (*classify) {
      if (below.empty() && ideal_list.empty()) throw InputError("classify needs --below or --ideal");
      const auto q = load(file);
      qk::require_commutative(q);
      emit(qk::classification_records(qk::classify(select_ideal(q, below, ideal_list))));
      return 0;
    }
    if (*spectrum) {
      const auto q = load(file);
      qk::Record r;
      for (const auto& p : qk::spectrum(q)) r.add("prime", qk::ideal_name(p));
      emit(r.fields.empty() ? qk::Records{} : qk::Records{r});
      return 0;
    }
    if (*radical) {
      const auto q = load(file);
      qk::require_commutative(q);
      const auto i = select_ideal(q, below, "");
      qk::Record r;
      r.add("ideal below", below);
      const std::pair<const char*, qk::RadicalAlgorithm> algos[] = {{"powers", qk::RadicalAlgorithm::Powers},
                                                                     {"primes", qk::RadicalAlgorithm::Primes},
                                                                     {"mcsets", qk::RadicalAlgorithm::Mcsets}};
      std::vector<std::pair<std::string, qk::Ideal>> results;
      for (const auto& [name, a] : algos)
        if (algorithm == "all" || algorithm == name) results.emplace_back(name, qk::radical(i, a));
      const auto& first = results.front().second;
      r.add("radical below", q.label(first.apex()));
      r.add("members", qk::format_members(first));
      bool agree = true;
      for (const auto& [name, rad] : results) {
        r.add("algorithm " + name, q.label(rad.apex()));
        agree = agree && rad == first;
      }
      if (results.size() > 1) r.add("agreement", agree ? "all algorithms agree" : "algorithms disagree");
      emit({r});
      return agree ? 0 : 1;
    }
    if (*decompose) {
      const auto q = load(file);
      qk::require_commutative(q);
      const auto i = select_ideal(q, below, "");
      try {
        emit(qk::decomposition_records(kind == "primary" ? qk::primary_decomposition(i)
                                                         : qk::irreducible_decomposition(i)));
      } catch (const qk::NotDecomposableError& e) {
        std::cerr << "qk: " << e.what() << "\n";
        return 1;
      }
      return 0;
    }
    if (*verify) {
      const auto q = load(file);
      const auto s = input([&] { return qk::parse_suite(suite); });
      std::vector<qk::QuantaleHom> homs;
      if (!hom_file.empty()) {
        auto h = load_hom(hom_file);
        if (!qk::structurally_equal(h.from, q))
          throw InputError("hom source '" + h.source.source + "' is not the instance in " + file);
        homs.push_back(input([&] { return qk::build_hom(h.source, q, h.to); }));
      }
      qk::VerifyOptions opts;
      opts.seed = seed_from_env(opts.seed);
      const auto rep = qk::run_suite(q, s, homs, opts);
      emit(qk::verification_records(rep, timing));
      return rep.all_pass() ? 0 : 1;
    }
    if (*gen) {
      const auto spec = input([&] {
        return qk::parse_generator_spec(file, [](const std::string& f) { return qk::load_quant(f); });
      });
      const auto text = qk::write_quant(qk::generate(spec));
      if (out_file.empty())
        std::cout << text;
      else
        qk::write_text(out_file, text);
      return 0;
    }
    if (*hom_check) {
      const auto h = load_hom(hom_file);
      const auto map = input([&] { return qk::resolve_hom_map(h.source, h.from, h.to); });
      const auto verdict = qk::check_hom(h.from, h.to, map);
      emit(qk::hom_check_records(h.source.name, h.from, h.to, verdict));
      return verdict.ok ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "qk: " << e.what() << "\n";
    return 2;
  } catch (const qk::Error& e) {
    std::cerr << "qk: " << e.what() << "\n";
    return usage_kind(e.kind()) ? 2 : 1;
  }
  return 2;
}
