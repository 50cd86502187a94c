#include "io.hpp"

#include "homzero/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace homzero::cli {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

Integer to_integer(const json& v) {
  if (v.is_number_integer()) return Integer(v.get<long long>());
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InvalidInput("expected an integer, got " + v.dump());
}

IntMatrix to_matrix(const json& rows, std::size_t rank, const std::string& name) {
  if (!rows.is_array() || rows.size() != rank) throw InvalidInput("action of " + name + " must have " + std::to_string(rank) + " rows");
  IntMatrix m(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (!rows[i].is_array() || rows[i].size() != rank)
      throw InvalidInput("action of " + name + " must have " + std::to_string(rank) + " columns");
    for (std::size_t j = 0; j < rank; ++j) m(i, j) = to_integer(rows[i][j]);
  }
  return m;
}

IntMatrix fallback_matrix(const ModuleDocument& doc) {
  const std::size_t k = doc.base.rank();
  return doc.fallback == ModuleDocument::Fallback::identity ? IntMatrix::identity(k) : IntMatrix::zero(k, k);
}

void check_names(const ModuleDocument& doc, const std::vector<std::string>& names) {
  for (const auto& [name, m] : doc.actions)
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw InvalidInput("module names an unknown element '" + name + "'");
}

}  // namespace

FiniteZeroSemigroup SemigroupDocument::zero_semigroup() const {
  if (!has_zero) throw InvalidInput("semigroup document declares no zero");
  return FiniteZeroSemigroup::from_table(table, names);
}

FiniteSemigroup SemigroupDocument::plain_semigroup() const { return FiniteSemigroup::from_table(table, names); }

SemigroupDocument parse_semigroup_json(std::string_view text) {
  const json j = parse_json(text, "semigroup");
  if (!j.is_object() || !j.contains("table")) throw InvalidInput("semigroup: missing \"table\"");
  SemigroupDocument doc;
  if (j.contains("zero")) doc.has_zero = j.at("zero").get<bool>();
  const json& t = j.at("table");
  if (!t.is_array() || t.empty()) throw InvalidInput("semigroup: \"table\" must be a nonempty array of rows");
  const std::size_t n = t.size();
  if (j.contains("names")) {
    doc.names = j.at("names").get<std::vector<std::string>>();
    if (doc.names.size() != n) throw InvalidInput("semigroup: names and table sizes differ");
  } else {
    for (std::size_t i = 0; i < n; ++i) doc.names.push_back(doc.has_zero && i == 0 ? "0" : "s" + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!t[i].is_array() || t[i].size() != n) throw InvalidInput("semigroup: row " + std::to_string(i) + " has the wrong length");
    std::vector<Element> row;
    for (const auto& cell : t[i]) {
      if (cell.is_number_integer()) {
        const long long v = cell.get<long long>();
        if (v < 0 || static_cast<std::size_t>(v) >= n) throw InvalidInput("semigroup: entry " + cell.dump() + " out of range");
        row.push_back(static_cast<Element>(v));
      } else if (cell.is_string()) {
        auto it = std::find(doc.names.begin(), doc.names.end(), cell.get<std::string>());
        if (it == doc.names.end()) throw InvalidInput("semigroup: unknown element " + cell.dump());
        row.push_back(static_cast<Element>(it - doc.names.begin()));
      } else {
        throw InvalidInput("semigroup: table cells are indices or names");
      }
    }
    doc.table.push_back(std::move(row));
  }
  return doc;
}

ModuleDocument parse_module_json(std::string_view text) {
  const json j = parse_json(text, "module");
  if (!j.is_object()) throw InvalidInput("module: expected an object");
  ModuleDocument doc;
  std::size_t rank = 0;
  if (j.contains("rank")) rank = j.at("rank").get<std::size_t>();
  if (j.contains("moduli")) {
    for (const auto& m : j.at("moduli")) doc.base.moduli.push_back(to_integer(m));
    if (j.contains("rank") && doc.base.moduli.size() != rank) throw InvalidInput("module: rank and moduli disagree");
  } else {
    doc.base = FGAbelianGroup::free(rank);
  }
  if (doc.base.rank() == 0) throw InvalidInput("module: rank must be positive");
  doc.base.validate();
  if (j.contains("default")) {
    const auto d = j.at("default").get<std::string>();
    if (d == "identity") {
      doc.fallback = ModuleDocument::Fallback::identity;
    } else if (d == "zero") {
      doc.fallback = ModuleDocument::Fallback::zero;
    } else {
      throw InvalidInput("module: default must be \"identity\" or \"zero\"");
    }
  }
  if (j.contains("actions")) {
    for (const auto& [name, rows] : j.at("actions").items())
      doc.actions.emplace(name, to_matrix(rows, doc.base.rank(), name));
  }
  return doc;
}

ZeroModuleAction build_module(const ModuleDocument& doc, const FiniteZeroSemigroup& s) {
  check_names(doc, s.names());
  if (doc.actions.count(s.name(0))) throw InvalidInput("module: the zero element has no action");
  ZeroModuleAction m{doc.base, {IntMatrix::zero(doc.base.rank(), doc.base.rank())}};
  for (Element e = 1; e < s.size(); ++e) {
    auto it = doc.actions.find(s.name(e));
    m.act.push_back(it == doc.actions.end() ? fallback_matrix(doc) : it->second);
  }
  require_valid(validate_action(s, m), s.names());
  return m;
}

ModuleAction build_module(const ModuleDocument& doc, const FiniteSemigroup& s) {
  check_names(doc, s.names());
  ModuleAction m{doc.base, {}};
  for (Element e = 0; e < s.size(); ++e) {
    auto it = doc.actions.find(s.name(e));
    m.act.push_back(it == doc.actions.end() ? fallback_matrix(doc) : it->second);
  }
  require_valid(validate_action(s, m), s.names());
  return m;
}

ZeroModuleAction build_quotient_module(const ModuleDocument& doc, const FiniteQuotient& q, const Presentation& p) {
  std::vector<std::string> known = p.generators;
  known.insert(known.end(), q.semigroup.names().begin(), q.semigroup.names().end());
  check_names(doc, known);
  std::vector<IntMatrix> gens;
  for (const auto& g : p.generators) {
    auto it = doc.actions.find(g);
    gens.push_back(it == doc.actions.end() ? fallback_matrix(doc) : it->second);
  }
  const std::size_t k = doc.base.rank();
  ZeroModuleAction m{doc.base, {IntMatrix::zero(k, k)}};
  for (Element e = 1; e < q.semigroup.size(); ++e) {
    auto it = doc.actions.find(q.semigroup.name(e));
    if (it != doc.actions.end()) {
      m.act.push_back(it->second);
      continue;
    }
    IntMatrix acc = IntMatrix::identity(k);
    for (Generator g : q.representatives[e]) acc = gens[g] * acc;
    m.act.push_back(std::move(acc));
  }
  require_valid(validate_action(q.semigroup, m), q.semigroup.names());
  return m;
}

void require_valid(const ActionVerdict& v, const std::vector<std::string>& names) {
  if (v.valid()) return;
  std::string msg = "module: " + v.detail;
  if (v.kind == ActionVerdict::Kind::composition && v.pair)
    msg += " (witness s=" + names[v.pair->first] + ", t=" + names[v.pair->second] + ")";
  throw InvalidInput(msg);
}

std::vector<Element> parse_sequence(const FiniteSemigroup& s, std::string_view text) {
  std::vector<Element> out;
  std::stringstream ss{std::string(text)};
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto b = token.find_first_not_of(' ');
    const auto e = token.find_last_not_of(' ');
    if (b == std::string::npos) throw InvalidInput("empty entry in sequence '" + std::string(text) + "'");
    token = token.substr(b, e - b + 1);
    auto it = std::find(s.names().begin(), s.names().end(), token);
    if (it == s.names().end()) throw InvalidInput("unknown element '" + token + "'");
    out.push_back(static_cast<Element>(it - s.names().begin()));
  }
  if (out.empty()) throw InvalidInput("empty sequence");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string digest(const std::vector<std::string>& contents) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& c : contents)
    for (unsigned char ch : c) {
      h ^= ch;
      h *= 1099511628211ull;
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace homzero::cli
