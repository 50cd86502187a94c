#pragma once

#include "homzero/abelian.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace homzero::cli {

struct HomologyEntry {
  std::size_t dim = 0;
  AbelianGroupClass group;
  friend bool operator==(const HomologyEntry&, const HomologyEntry&) = default;
};

struct Verdict {
  std::string name;
  std::string value;
  bool verified = true;
  std::string detail;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Note {
  std::string text;
  bool verified = false;
  friend bool operator==(const Note&, const Note&) = default;
};

struct Report {
  std::string command;
  std::string input_digest;
  std::string subject;  // what the homology groups are groups of, e.g. "H0_n(S,A)"
  std::vector<HomologyEntry> homology;
  std::vector<Verdict> verdicts;
  std::vector<Note> notes;
  std::vector<std::string> warnings;
  friend bool operator==(const Report&, const Report&) = default;
};

std::string report_to_json(const Report& r);
/// Inverse of report_to_json; throws InvalidInput on schema violations.
Report report_from_json(const std::string& text);
void print_report(std::ostream& os, const Report& r);

struct Outcome;
/// {"error": {"exit_code": c, "message": m}} for failed commands.
std::string error_to_json(const Outcome& o);

}  // namespace homzero::cli
