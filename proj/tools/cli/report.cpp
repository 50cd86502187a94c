#include "report.hpp"

#include "commands.hpp"

#include "homzero/errors.hpp"

#include <json.hpp>

#include <ostream>

namespace homzero::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json integer_json(const Integer& x) {
  if (x <= Integer(std::numeric_limits<long long>::max())) return static_cast<long long>(x);
  return x.str();
}

Integer json_integer(const json& v) {
  if (v.is_number_integer()) return Integer(v.get<long long>());
  if (v.is_string()) return Integer(v.get<std::string>());
  throw InvalidInput("report: torsion entries are integers");
}

}  // namespace

std::string report_to_json(const Report& r) {
  ordered_json j;
  j["command"] = r.command;
  j["input_digest"] = r.input_digest;
  j["subject"] = r.subject;
  j["homology"] = ordered_json::array();
  for (const auto& h : r.homology) {
    ordered_json t = ordered_json::array();
    for (const auto& d : h.group.torsion) t.push_back(integer_json(d));
    j["homology"].push_back(
        {{"dim", h.dim}, {"free_rank", h.group.free_rank}, {"torsion", t}, {"text", h.group.to_string()}});
  }
  j["verdicts"] = ordered_json::array();
  for (const auto& v : r.verdicts)
    j["verdicts"].push_back({{"name", v.name}, {"value", v.value}, {"verified", v.verified}, {"detail", v.detail}});
  j["notes"] = ordered_json::array();
  for (const auto& n : r.notes) j["notes"].push_back({{"text", n.text}, {"verified", n.verified}});
  j["warnings"] = r.warnings;
  return j.dump(2);
}

Report report_from_json(const std::string& text) {
  Report r;
  try {
    const json j = json::parse(text);
    r.command = j.at("command").get<std::string>();
    r.input_digest = j.at("input_digest").get<std::string>();
    r.subject = j.value("subject", "");
    for (const auto& h : j.at("homology")) {
      HomologyEntry e;
      e.dim = h.at("dim").get<std::size_t>();
      e.group.free_rank = h.at("free_rank").get<std::size_t>();
      for (const auto& d : h.at("torsion")) e.group.torsion.push_back(json_integer(d));
      if (AbelianGroupClass::from_cyclic_orders(e.group.free_rank, e.group.torsion) != e.group)
        throw InvalidInput("report: homology entry is not in invariant-factor form");
      if (h.at("text").get<std::string>() != e.group.to_string())
        throw InvalidInput("report: homology text does not match the group");
      r.homology.push_back(std::move(e));
    }
    for (const auto& v : j.at("verdicts"))
      r.verdicts.push_back({v.at("name").get<std::string>(), v.at("value").get<std::string>(),
                            v.at("verified").get<bool>(), v.value("detail", "")});
    for (const auto& n : j.at("notes")) r.notes.push_back({n.at("text").get<std::string>(), n.at("verified").get<bool>()});
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("report: ") + e.what());
  }
  return r;
}

std::string error_to_json(const Outcome& o) {
  ordered_json j;
  j["error"] = {{"exit_code", o.exit_code}, {"message", o.error}};
  return j.dump(2);
}

void print_report(std::ostream& os, const Report& r) {
  os << "input " << r.input_digest << '\n';
  if (!r.homology.empty()) os << r.subject << '\n';
  for (const auto& h : r.homology) os << "  n = " << h.dim << ":  " << h.group.to_string() << '\n';
  for (const auto& v : r.verdicts) {
    os << v.name << ": " << v.value;
    if (!v.detail.empty()) os << "  (" << v.detail << ')';
    if (!v.verified) os << "  [not verified]";
    os << '\n';
  }
  for (const auto& n : r.notes) os << "note: " << n.text << (n.verified ? "" : "  [not verified]") << '\n';
  for (const auto& w : r.warnings) os << "warning: " << w << '\n';
}

}  // namespace homzero::cli
