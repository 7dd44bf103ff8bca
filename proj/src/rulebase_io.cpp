#include "fri/rulebase_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fri/errors.hpp"

namespace fri::io {

namespace {

using json = nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

SetEntry read_set(const json& node, const std::string& where) {
  const json* values = &node;
  std::optional<int> declared_arity;
  if (node.is_object()) {
    for (const auto& [key, _] : node.items()) {
      if (key != "points" && key != "arity") invalid(where, "unknown key '" + key + "'");
    }
    if (!node.contains("points")) invalid(where, "missing 'points'");
    values = &node.at("points");
    if (node.contains("arity")) {
      if (!node.at("arity").is_number_integer()) invalid(where, "'arity' must be an integer");
      declared_arity = node.at("arity").get<int>();
      if (*declared_arity != 1 && *declared_arity != 3 && *declared_arity != 4) {
        invalid(where, "'arity' must be 1, 3 or 4");
      }
    }
  }
  if (!values->is_array()) invalid(where, "a fuzzy set must be an array of 1, 3 or 4 numbers");

  std::vector<double> v;
  for (const auto& x : *values) {
    if (!x.is_number()) invalid(where, "set values must be numbers");
    v.push_back(x.get<double>());
  }
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < v[i - 1]) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "values must be non-decreasing (position " << i << ": " << v[i - 1] << " > " << v[i] << ")";
      invalid(where, msg.str());
    }
  }

  SetEntry entry{TrapezoidSet::singleton(0.0), static_cast<int>(v.size())};
  switch (v.size()) {
    case 1:
      entry.set = TrapezoidSet::singleton(v[0]);
      break;
    case 3:
      entry.set = TrapezoidSet::triangle(v[0], v[1], v[2]);
      break;
    case 4:
      entry.set = TrapezoidSet(v[0], v[1], v[2], v[3]);
      break;
    default:
      invalid(where, "a fuzzy set must have 1, 3 or 4 values, got " + std::to_string(v.size()));
  }
  if (declared_arity) {
    if (v.size() != 4) invalid(where, "'points' of an object set must hold 4 values");
    entry.arity = *declared_arity;
    if (entry.arity == 3 && !entry.set.is_triangle()) invalid(where, "arity 3 requires a2 == a3");
    if (entry.arity == 1 && !entry.set.is_singleton()) invalid(where, "arity 1 requires equal values");
  }
  return entry;
}

std::vector<SetEntry> read_sets(const json& node, const std::string& where) {
  if (!node.is_array()) invalid(where, "expected an array of fuzzy sets");
  std::vector<SetEntry> out;
  for (std::size_t i = 0; i < node.size(); ++i) out.push_back(read_set(node[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

nlohmann::ordered_json write_set(const SetEntry& e) {
  const auto& p = e.set.points();
  auto values = nlohmann::ordered_json::array({p[0], p[1], p[2], p[3]});
  if (e.arity == 4) return values;
  nlohmann::ordered_json node;
  node["points"] = std::move(values);
  node["arity"] = e.arity;
  return node;
}

SetEntry entry_of(const TrapezoidSet& s) { return {s, 4}; }

}  // namespace

RuleBase RuleBaseDocument::rule_base() const {
  std::vector<Rule> out;
  out.reserve(rules.size());
  for (const auto& r : rules) {
    std::vector<TrapezoidSet> antecedents;
    for (const auto& a : r.antecedents) antecedents.push_back(a.set);
    out.emplace_back(std::move(antecedents), r.consequent.set);
  }
  return RuleBase(std::move(out));
}

std::optional<Observation> RuleBaseDocument::observation_sets() const {
  if (!observation) return std::nullopt;
  Observation obs;
  for (const auto& s : *observation) obs.sets.push_back(s.set);
  return obs;
}

RuleBaseDocument load_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the offending token.
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string message = e.what();
    if (const auto pos = message.find("syntax error"); pos != std::string::npos) message = message.substr(pos);
    throw ParseError(message, line, column);
  }

  if (!root.is_object()) invalid("document", "top level must be an object");
  for (const auto& [key, _] : root.items()) {
    if (key != "version" && key != "dimension" && key != "rules" && key != "observation" && key != "metadata") {
      invalid("document", "unknown key '" + key + "'");
    }
  }

  RuleBaseDocument doc;
  if (!root.contains("version") || !root.at("version").is_string()) invalid("version", "missing or not a string");
  doc.format_version = root.at("version").get<std::string>();
  if (doc.format_version != kFormatVersion) {
    invalid("version", "unsupported format version '" + doc.format_version + "'");
  }

  if (!root.contains("dimension") || !root.at("dimension").is_number_integer()) {
    invalid("dimension", "missing or not an integer");
  }
  doc.dimension = root.at("dimension").get<int>();
  if (doc.dimension < 1) invalid("dimension", "must be at least 1");
  const auto k = static_cast<std::size_t>(doc.dimension);

  if (!root.contains("rules") || !root.at("rules").is_array() || root.at("rules").empty()) {
    invalid("rules", "missing or empty");
  }
  const json& rules = root.at("rules");
  for (std::size_t r = 0; r < rules.size(); ++r) {
    const std::string where = "rules[" + std::to_string(r) + "]";
    const json& node = rules[r];
    if (!node.is_object()) invalid(where, "a rule must be an object");
    for (const auto& [key, _] : node.items()) {
      if (key != "antecedents" && key != "consequent") invalid(where, "unknown key '" + key + "'");
    }
    if (!node.contains("antecedents") || !node.contains("consequent")) {
      invalid(where, "needs 'antecedents' and 'consequent'");
    }
    RuleEntry entry{read_sets(node.at("antecedents"), where + ".antecedents"),
                    read_set(node.at("consequent"), where + ".consequent")};
    if (entry.antecedents.size() != k) {
      invalid(where, "dimension mismatch: " + std::to_string(entry.antecedents.size()) + " antecedents, document dimension " +
                         std::to_string(k));
    }
    doc.rules.push_back(std::move(entry));
  }

  if (root.contains("observation")) {
    auto obs = read_sets(root.at("observation"), "observation");
    if (obs.size() != k) {
      invalid("observation", "dimension mismatch: " + std::to_string(obs.size()) + " sets, document dimension " +
                                 std::to_string(k));
    }
    doc.observation = std::move(obs);
  }

  if (root.contains("metadata")) {
    const json& meta = root.at("metadata");
    if (!meta.is_object()) invalid("metadata", "must be an object");
    for (const auto& [key, value] : meta.items()) {
      if (key != "name" && key != "notes") invalid("metadata", "unknown key '" + key + "'");
      if (!value.is_string()) invalid("metadata." + key, "must be a string");
    }
    if (meta.contains("name")) doc.name = meta.at("name").get<std::string>();
    if (meta.contains("notes")) doc.notes = meta.at("notes").get<std::string>();
  }
  return doc;
}

std::string save_document(const RuleBaseDocument& doc) {
  // nlohmann::ordered_json keeps the documented key order in the output.
  nlohmann::ordered_json root;
  root["version"] = doc.format_version;
  root["dimension"] = doc.dimension;
  auto rules = nlohmann::ordered_json::array();
  for (const auto& r : doc.rules) {
    nlohmann::ordered_json node;
    auto antecedents = nlohmann::ordered_json::array();
    for (const auto& a : r.antecedents) antecedents.push_back(write_set(a));
    node["antecedents"] = std::move(antecedents);
    node["consequent"] = write_set(r.consequent);
    rules.push_back(std::move(node));
  }
  root["rules"] = std::move(rules);
  if (doc.observation) {
    auto obs = nlohmann::ordered_json::array();
    for (const auto& s : *doc.observation) obs.push_back(write_set(s));
    root["observation"] = std::move(obs);
  }
  if (doc.name || doc.notes) {
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    if (doc.name) meta["name"] = *doc.name;
    if (doc.notes) meta["notes"] = *doc.notes;
    root["metadata"] = std::move(meta);
  }
  return root.dump(2) + "\n";
}

RuleBaseDocument load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_document(buf.str());
}

void save_file(const RuleBaseDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << save_document(doc);
  if (!out) throw Error("write failed for " + path.string());
}

RuleBaseDocument case_document(const bench::BenchmarkCase& c) {
  RuleBaseDocument doc;
  doc.dimension = 1;
  for (const Rule* r : {&c.lower, &c.upper}) {
    doc.rules.push_back({{entry_of(r->antecedent(0))}, entry_of(r->consequent())});
  }
  doc.observation = std::vector<SetEntry>{entry_of(c.observation[0])};
  doc.name = "Example " + std::to_string(c.id) + ": " + c.name;
  doc.notes = c.provenance_note;
  return doc;
}

}  // namespace fri::io
