#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qk/decompose.hpp"
#include "qk/verify.hpp"

namespace qk {

/// One block of `key<TAB>value` lines.
struct Record {
  std::vector<std::pair<std::string, std::string>> fields;

  Record& add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

using Records = std::vector<Record>;

enum class OutputFormat { Records, Table };

/// Throws InvalidArgument.
OutputFormat parse_output_format(std::string_view name);

/// Records: blocks separated by blank lines. Table: one header row of the
/// keys in first-seen order, one row per record, `-` for absent keys.
std::string render(const Records& records, OutputFormat format);

/// `↓a` for the ideal with apex a.
std::string ideal_name(const Ideal& i);
std::string yes_no(bool b);

Records axiom_records(const FiniteQuantale& q, const AxiomReport& r);
Records ideal_records(const FiniteQuantale& q, const std::vector<Ideal>& ideals);
Records classification_records(const Classification& c);
Records decomposition_records(const Decomposition& d);
/// Laws with their outcomes. Timings are included only when asked.
Records verification_records(const VerificationReport& r, bool timing);
Records hom_check_records(const std::string& name, const FiniteQuantale& source, const FiniteQuantale& target,
                          const HomCheck& check);

}  // namespace qk
