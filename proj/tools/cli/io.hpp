#pragma once

#include "homzero/presentation.hpp"
#include "homzero/semigroup.hpp"
#include "homzero/zmodule.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace homzero::cli {

/// {"names": [...], "table": [[...]], "zero": true}. Table cells are element
/// indices or names. With "zero" (the default) element 0 is the zero.
struct SemigroupDocument {
  std::vector<std::string> names;
  std::vector<std::vector<Element>> table;
  bool has_zero = true;

  FiniteZeroSemigroup zero_semigroup() const;
  FiniteSemigroup plain_semigroup() const;
};

SemigroupDocument parse_semigroup_json(std::string_view text);

/// {"rank": k, "moduli": [...], "actions": {"name": [[...]]}, "default": "identity"}.
struct ModuleDocument {
  enum class Fallback { identity, zero };

  FGAbelianGroup base;
  std::map<std::string, IntMatrix> actions;
  Fallback fallback = Fallback::identity;
};

ModuleDocument parse_module_json(std::string_view text);

/// Actions keyed by element name; unnamed elements use the fallback.
ZeroModuleAction build_module(const ModuleDocument& doc, const FiniteZeroSemigroup& s);
ModuleAction build_module(const ModuleDocument& doc, const FiniteSemigroup& s);

/// Actions keyed by generator name. A product element acts through its
/// representative word unless it is named explicitly.
ZeroModuleAction build_quotient_module(const ModuleDocument& doc, const FiniteQuotient& q, const Presentation& p);

/// Throws InvalidInput with the witness when the action is not a module.
void require_valid(const ActionVerdict& v, const std::vector<std::string>& names);

/// Comma-separated element names.
std::vector<Element> parse_sequence(const FiniteSemigroup& s, std::string_view text);

std::string read_file(const std::string& path);
/// 64-bit FNV-1a of the concatenated inputs, as 16 hex digits.
std::string digest(const std::vector<std::string>& contents);

}  // namespace homzero::cli
