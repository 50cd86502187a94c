#include "homzero/semigroup.hpp"

#include <algorithm>
#include <set>

namespace homzero {

namespace {

std::string triple(Element a, Element b, Element c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

std::vector<std::string> default_names(std::size_t n, bool with_zero) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i)
    names[i] = (with_zero && i == 0) ? "0" : "s" + std::to_string(i);
  return names;
}

}  // namespace

void FiniteSemigroup::assign(std::vector<std::vector<Element>> table,
                             std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw TableViolation(TableViolation::Kind::shape, {}, "empty multiplication table");
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      throw TableViolation(TableViolation::Kind::shape, {r},
                           "row " + std::to_string(r) + " has " + std::to_string(table[r].size()) +
                               " entries, expected " + std::to_string(n));
    for (Element v : table[r]) {
      if (v >= n)
        throw TableViolation(TableViolation::Kind::shape, {r, v},
                             "entry " + std::to_string(v) + " in row " + std::to_string(r) +
                                 " is out of range");
      flat.push_back(v);
    }
  }
  if (!names.empty() && names.size() != n)
    throw InvalidInput("expected " + std::to_string(n) + " element names, got " +
                       std::to_string(names.size()));
  if (!names.empty()) {
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size()) throw InvalidInput("element names must be distinct");
  }
  n_ = n;
  table_ = std::move(flat);
  names_ = std::move(names);

  for (Element s = 0; s < n_; ++s)
    for (Element t = 0; t < n_; ++t)
      for (Element u = 0; u < n_; ++u)
        if (multiply(multiply(s, t), u) != multiply(s, multiply(t, u)))
          throw TableViolation(TableViolation::Kind::non_associative, {s, t, u},
                               "not associative at " + triple(s, t, u));
}

FiniteSemigroup FiniteSemigroup::from_table(std::vector<std::vector<Element>> table,
                                            std::vector<std::string> names) {
  FiniteSemigroup s;
  if (names.empty()) names = default_names(table.size(), false);
  s.assign(std::move(table), std::move(names));
  return s;
}

Element FiniteSemigroup::product(std::span<const Element> seq) const {
  Element acc = seq.front();
  for (std::size_t i = 1; i < seq.size(); ++i) acc = multiply(acc, seq[i]);
  return acc;
}

std::vector<std::vector<Element>> FiniteSemigroup::rows() const {
  std::vector<std::vector<Element>> out(n_);
  for (std::size_t r = 0; r < n_; ++r) out[r].assign(table_.begin() + r * n_, table_.begin() + (r + 1) * n_);
  return out;
}

FiniteZeroSemigroup FiniteZeroSemigroup::from_table(std::vector<std::vector<Element>> table,
                                                    std::vector<std::string> names) {
  FiniteZeroSemigroup s;
  if (names.empty()) names = default_names(table.size(), true);
  // Absorption is checked before associativity so a broken zero is reported as such.
  const std::size_t n = table.size();
  for (Element x = 0; x < n; ++x) {
    if (table[0].size() != n || table[x].empty()) break;
    if (table[0][x] != kZero || table[x][0] != kZero)
      throw TableViolation(TableViolation::Kind::zero_not_absorbing, {x},
                           "element 0 is not absorbing against " + std::to_string(x));
  }
  s.assign(std::move(table), std::move(names));
  s.factorizations_.assign(s.n_, {});
  for (Element t = 1; t < s.n_; ++t)
    for (Element u = 1; u < s.n_; ++u) {
      Element v = s.multiply(t, u);
      if (v != kZero) s.factorizations_[v].emplace_back(t, u);
    }
  return s;
}

FiniteZeroSemigroup FiniteZeroSemigroup::trivial() { return from_table({{0}}, {"0"}); }

FiniteZeroSemigroup FiniteZeroSemigroup::null_semigroup(std::size_t nonzero) {
  std::vector<std::vector<Element>> table(nonzero + 1, std::vector<Element>(nonzero + 1, 0));
  return from_table(std::move(table));
}

std::optional<Element> FiniteZeroSemigroup::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

CategoricityVerdict is_categorical_at_zero(const FiniteZeroSemigroup& s) {
  const std::size_t n = s.size();
  for (Element x = 1; x < n; ++x)
    for (Element y = 1; y < n; ++y) {
      const Element xy = s.multiply(x, y);
      if (xy == 0) continue;
      for (Element z = 1; z < n; ++z) {
        if (s.multiply(y, z) != 0 && s.multiply(xy, z) == 0) return {false, {{x, y, z}}};
      }
    }
  return {};
}

std::optional<std::size_t> nilpotency_degree(const FiniteZeroSemigroup& s) {
  // level holds the nonzero elements of S^k.
  std::vector<char> level(s.size(), 0);
  for (Element x = 1; x < s.size(); ++x) level[x] = 1;
  for (std::size_t k = 1; k <= s.size() + 1; ++k) {
    if (std::none_of(level.begin(), level.end(), [](char c) { return c != 0; })) return k;
    std::vector<char> next(s.size(), 0);
    for (Element x = 1; x < s.size(); ++x) {
      if (!level[x]) continue;
      for (Element y = 1; y < s.size(); ++y) next[s.multiply(x, y)] = 1;
    }
    next[0] = 0;
    if (next == level) return std::nullopt;
    level = std::move(next);
  }
  return std::nullopt;
}

ZeroDirectUnion zero_direct_union(std::span<const FiniteZeroSemigroup> parts) {
  if (parts.empty()) throw InvalidInput("0-direct union of an empty family");
  ZeroDirectUnion out;
  std::size_t size = 1;
  for (const auto& p : parts) size += p.nonzero_count();

  std::vector<std::vector<Element>> table(size, std::vector<Element>(size, 0));
  std::vector<std::string> names{"0"};
  std::set<std::string> used{"0"};
  for (std::size_t pi = 0; pi < parts.size(); ++pi) {
    const auto& p = parts[pi];
    std::vector<Element> emb(p.size(), 0);
    for (Element e = 1; e < p.size(); ++e) {
      emb[e] = names.size();
      std::string name = p.name(e);
      if (used.count(name)) name += "_" + std::to_string(pi + 1);
      used.insert(name);
      names.push_back(std::move(name));
    }
    for (Element x = 1; x < p.size(); ++x)
      for (Element y = 1; y < p.size(); ++y) table[emb[x]][emb[y]] = emb[p.multiply(x, y)];
    out.embeddings.push_back(std::move(emb));
    out.parts.push_back(p);
  }
  out.semigroup = FiniteZeroSemigroup::from_table(std::move(table), std::move(names));
  return out;
}

FiniteZeroSemigroup adjoin_zero(const FiniteSemigroup& s) {
  const std::size_t n = s.size() + 1;
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n, 0));
  for (Element x = 0; x < s.size(); ++x)
    for (Element y = 0; y < s.size(); ++y) table[x + 1][y + 1] = s.multiply(x, y) + 1;
  std::vector<std::string> names{"0"};
  for (const auto& nm : s.names()) names.push_back(nm == "0" ? "0'" : nm);
  return FiniteZeroSemigroup::from_table(std::move(table), std::move(names));
}

namespace {

FiniteZeroSemigroup collapse(const FiniteSemigroup& s, const std::vector<char>& in_ideal,
                             std::string zero_name) {
  std::vector<Element> map(s.size(), 0);
  std::vector<std::string> names{std::move(zero_name)};
  for (Element x = 0; x < s.size(); ++x) {
    if (in_ideal[x]) continue;
    map[x] = names.size();
    names.push_back(s.name(x));
  }
  const std::size_t n = names.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n, 0));
  for (Element x = 0; x < s.size(); ++x)
    for (Element y = 0; y < s.size(); ++y)
      if (!in_ideal[x] && !in_ideal[y]) table[map[x]][map[y]] = map[s.multiply(x, y)];
  return FiniteZeroSemigroup::from_table(std::move(table), std::move(names));
}

std::vector<char> ideal_mask(const FiniteSemigroup& s, std::span<const Element> ideal) {
  std::vector<char> mask(s.size(), 0);
  for (Element x : ideal) {
    if (x >= s.size()) throw InvalidInput("ideal element " + std::to_string(x) + " out of range");
    mask[x] = 1;
  }
  for (Element x = 0; x < s.size(); ++x) {
    if (!mask[x]) continue;
    for (Element y = 0; y < s.size(); ++y) {
      if (!mask[s.multiply(x, y)] || !mask[s.multiply(y, x)])
        throw NotAnIdeal(x, y,
                         "not an ideal: element " + std::to_string(x) + " times " +
                             std::to_string(y) + " leaves the set");
    }
  }
  return mask;
}

}  // namespace

FiniteZeroSemigroup rees_quotient(const FiniteSemigroup& s, std::span<const Element> ideal) {
  if (ideal.empty()) throw InvalidInput("Rees quotient by an empty set");
  auto mask = ideal_mask(s, ideal);
  return collapse(s, mask, "0");
}

FiniteZeroSemigroup rees_quotient(const FiniteZeroSemigroup& s, std::span<const Element> ideal) {
  std::vector<Element> with_zero(ideal.begin(), ideal.end());
  with_zero.push_back(FiniteZeroSemigroup::kZero);
  auto mask = ideal_mask(s, with_zero);
  return collapse(s, mask, s.name(FiniteZeroSemigroup::kZero));
}

}  // namespace homzero
