#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fri/benchmark.hpp"
#include "fri/kh.hpp"

namespace fri::io {

inline constexpr std::string_view kFormatVersion = "1.0";

/// A set as read from a document: canonical 4-point form plus the number of
/// values it was written with (1 = singleton, 3 = triangle, 4 = trapezoid).
struct SetEntry {
  TrapezoidSet set;
  int arity = 4;

  friend bool operator==(const SetEntry&, const SetEntry&) = default;
};

struct RuleEntry {
  std::vector<SetEntry> antecedents;
  SetEntry consequent;

  friend bool operator==(const RuleEntry&, const RuleEntry&) = default;
};

struct RuleBaseDocument {
  std::string format_version{kFormatVersion};
  int dimension = 1;
  std::vector<RuleEntry> rules;
  std::optional<std::vector<SetEntry>> observation;
  std::optional<std::string> name;
  std::optional<std::string> notes;

  /// Throws what RuleBase throws (incomparable antecedents).
  RuleBase rule_base() const;
  std::optional<Observation> observation_sets() const;

  friend bool operator==(const RuleBaseDocument&, const RuleBaseDocument&) = default;
};

/// Throws ParseError (with line/column) or ValidationError. Never returns a
/// partially filled document.
RuleBaseDocument load_document(std::string_view text);
std::string save_document(const RuleBaseDocument& doc);

RuleBaseDocument load_file(const std::filesystem::path& path);
void save_file(const RuleBaseDocument& doc, const std::filesystem::path& path);

/// Two-rule document with the case's observation and name.
RuleBaseDocument case_document(const bench::BenchmarkCase& c);

}  // namespace fri::io
