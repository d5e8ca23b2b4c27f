#include "qk/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace qk {

namespace {

std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::ranges::count_if(s, [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string join_labels(const FiniteQuantale& q, const std::vector<Element>& xs) {
  std::string out;
  for (Element x : xs) {
    if (!out.empty()) out += ' ';
    out += q.label(x);
  }
  return out;
}

std::string join_words(const std::vector<std::string>& ws) {
  std::string out;
  for (const auto& w : ws) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "records") return OutputFormat::Records;
  if (name == "table") return OutputFormat::Table;
  throw Error(ErrorKind::InvalidArgument, "unknown format '" + std::string(name) + "' (records, table)");
}

std::string render(const Records& records, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::Records) {
    bool first = true;
    for (const auto& r : records) {
      if (!first) out << '\n';
      first = false;
      for (const auto& [k, v] : r.fields) out << k << '\t' << v << '\n';
    }
    return out.str();
  }

  std::vector<std::string> keys;
  for (const auto& r : records)
    for (const auto& f : r.fields)
      if (std::ranges::find(keys, f.first) == keys.end()) keys.push_back(f.first);
  std::vector<std::vector<std::string>> rows;
  rows.push_back(keys);
  for (const auto& r : records) {
    std::vector<std::string> row(keys.size(), "-");
    for (const auto& [k, v] : r.fields) {
      auto& cell = row[static_cast<std::size_t>(std::ranges::find(keys, k) - keys.begin())];
      cell = cell == "-" ? v : cell + "; " + v;
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(keys.size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], display_width(row[c]));
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - display_width(row[c]) + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

std::string ideal_name(const Ideal& i) { return "↓" + i.carrier().label(i.apex()); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Records axiom_records(const FiniteQuantale& q, const AxiomReport& r) {
  Record head;
  head.add("instance", q.name()).add("elements", std::to_string(q.size()));
  const std::pair<const char*, bool> flags[] = {{"lattice", r.lattice_ok},
                                                {"associativity", r.assoc_ok},
                                                {"commutativity", r.comm_ok},
                                                {"distributivity", r.distrib_ok},
                                                {"identity", r.identity_ok}};
  for (const auto& [tag, ok] : flags) {
    std::string value = ok ? "ok" : "fail";
    for (const auto& cx : r.counterexamples)
      if (cx.axiom == tag) value += " " + join_labels(q, cx.elements);
    head.add(tag, value);
  }
  head.add("status", r.all_ok() ? "valid" : "invalid");
  return {head};
}

Records ideal_records(const FiniteQuantale& q, const std::vector<Ideal>& ideals) {
  Records out;
  out.push_back(Record{}.add("instance", q.name()).add("ideals", std::to_string(ideals.size())));
  for (const auto& i : ideals)
    out.push_back(Record{}.add("ideal", ideal_name(i)).add("members", format_members(i)).add("size", std::to_string(i.size())));
  return out;
}

Records classification_records(const Classification& c) {
  const auto& q = c.ideal.carrier();
  Record r;
  r.add("ideal", ideal_name(c.ideal))
      .add("members", format_members(c.ideal))
      .add("proper", yes_no(c.proper))
      .add("maximal", yes_no(c.maximal))
      .add("minimal", yes_no(c.minimal_ideal))
      .add("minimal_prime", yes_no(c.minimal_prime))
      .add("prime", yes_no(c.prime))
      .add("semiprime", yes_no(c.semiprime))
      .add("primary", yes_no(c.primary))
      .add("radical_ideal", yes_no(c.radical_ideal))
      .add("irreducible", yes_no(c.irreducible))
      .add("strongly_irreducible", yes_no(c.strongly_irreducible))
      .add("radical", ideal_name(c.radical));
  for (const auto& [flag, w] : c.witnesses) r.add("witness " + flag, join_labels(q, w));
  return {r};
}

Records decomposition_records(const Decomposition& d) {
  Records out;
  const bool primary = d.kind == DecompositionKind::Primary;
  out.push_back(Record{}
                    .add("ideal", ideal_name(d.target))
                    .add("kind", primary ? "primary" : "irreducible")
                    .add("components", std::to_string(d.components.size()))
                    .add("minimal", yes_no(d.minimal)));
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    Record r;
    r.add("component", ideal_name(d.components[k])).add("members", format_members(d.components[k]));
    if (primary && k < d.radicals.size()) {
      const auto& p = d.radicals[k];
      const bool isolated = std::ranges::none_of(d.radicals, [&](const Ideal& o) { return o != p && o.is_subset_of(p); });
      r.add("radical", ideal_name(p)).add("prime", isolated ? "isolated" : "embedded");
    }
    out.push_back(std::move(r));
  }
  return out;
}

Records verification_records(const VerificationReport& rep, bool timing) {
  Records out;
  out.push_back(Record{}
                    .add("instance", rep.instance)
                    .add("laws", std::to_string(rep.laws.size()))
                    .add("pass", std::to_string(rep.count(LawStatus::Pass)))
                    .add("fail", std::to_string(rep.count(LawStatus::Fail)))
                    .add("skipped", std::to_string(rep.count(LawStatus::Skipped)))
                    .add("result", rep.all_pass() ? "pass" : "fail"));
  for (const auto& l : rep.laws) {
    Record r;
    r.add("law", l.suite + "/" + l.law).add("status", std::string(to_string(l.status)));
    r.add("checked", std::to_string(l.checked) + (l.sampled ? " sampled" : ""));
    if (!l.witness.empty()) r.add("witness", join_words(l.witness));
    if (!l.note.empty()) r.add("note", l.note);
    r.add("statement", l.statement);
    out.push_back(std::move(r));
  }
  if (timing)
    for (const auto& t : rep.timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", t.seconds);
      out.push_back(Record{}.add("timing", t.suite).add("seconds", buf));
    }
  return out;
}

Records hom_check_records(const std::string& name, const FiniteQuantale& source, const FiniteQuantale& target,
                          const HomCheck& check) {
  Record r;
  r.add("hom", name).add("source", source.name()).add("target", target.name()).add("status", check.ok ? "ok" : "fail");
  if (!check.ok)
    r.add("condition", check.condition)
        .add("witness", source.label(check.witness.first) + " " + source.label(check.witness.second));
  return {r};
}

}  // namespace qk
