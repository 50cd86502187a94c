#include "homzero/presentation.hpp"

#include "homzero/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace homzero {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_names(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool contains_factor(const Word& w, const Word& f) {
  return !f.empty() && std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

std::size_t longest_side(const Presentation& p) {
  std::size_t m = 1;
  for (const auto& r : p.relations) {
    m = std::max(m, r.lhs.size());
    if (r.rhs) m = std::max(m, r.rhs->size());
  }
  return m;
}

}  // namespace

void Presentation::validate() const {
  if (generators.empty()) throw InvalidInput("presentation has no generators");
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty() || g == "0") throw InvalidInput("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw InvalidInput("duplicate generator '" + g + "'");
  }
  auto check_word = [&](const Word& w) {
    if (w.empty()) throw InvalidInput("relation with an empty word");
    for (Generator g : w)
      if (g >= generators.size()) throw InvalidInput("letter out of range in relation");
  };
  for (const auto& r : relations) {
    check_word(r.lhs);
    if (r.rhs) check_word(*r.rhs);
  }
  for (const auto& [a, b] : gamma)
    if (a >= generators.size() || b >= generators.size()) throw InvalidInput("gamma pair out of range");
}

std::vector<std::pair<Word, Word>> Presentation::nonzero_relations() const {
  std::vector<std::pair<Word, Word>> out;
  for (const auto& r : relations)
    if (r.rhs) out.emplace_back(r.lhs, *r.rhs);
  return out;
}

bool Presentation::has_zero_relations() const {
  return std::any_of(relations.begin(), relations.end(), [](const Relation& r) { return r.is_zero(); });
}

std::string Presentation::render(const Word& w) const {
  const bool single = std::all_of(generators.begin(), generators.end(),
                                  [](const std::string& g) { return g.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !single) out += '.';
    out += generators[w[i]];
  }
  return out;
}

Presentation normalize(Presentation p) {
  std::vector<Relation> kept;
  for (auto& r : p.relations) {
    if (r.is_zero() && r.lhs.size() == 2) {
      p.gamma.emplace(r.lhs[0], r.lhs[1]);
      continue;
    }
    if (r.rhs && r.lhs.size() < r.rhs->size()) std::swap(r.lhs, *r.rhs);
    kept.push_back(std::move(r));
  }
  p.relations = std::move(kept);
  return p;
}

GammaSets gamma_sets(const Presentation& p, Generator g) {
  if (g >= p.generator_count()) throw InvalidInput("generator index out of range");
  GammaSets s;
  for (const auto& [a, b] : p.gamma) {
    if (b == g) s.left.insert(a);
    if (a == g) s.right.insert(b);
  }
  return s;
}

CriterionVerdict check_cat0_criterion(const Presentation& p) {
  p.validate();
  CriterionVerdict v;
  for (std::size_t k = 0; k < p.relations.size(); ++k) {
    const auto& r = p.relations[k];
    if (r.is_zero()) {
      if (r.lhs.size() == 2) continue;
      throw InvalidInput("criterion needs zero relations of the form a_i a_j = 0 only");
    }
    Word a = r.lhs;
    Word b = *r.rhs;
    if (a.size() < b.size()) std::swap(a, b);
    if (gamma_sets(p, a.front()).left != gamma_sets(p, b.front()).left) {
      return {false, k, CriterionVerdict::Failure::left};
    }
    if (gamma_sets(p, a.back()).right != gamma_sets(p, b.back()).right) {
      return {false, k, CriterionVerdict::Failure::right};
    }
  }
  return v;
}

DeltaGraph delta_graph(std::size_t generators, const std::vector<std::pair<Word, Word>>& relations) {
  DeltaGraph g;
  g.vertices = generators;
  auto scan = [&](const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) g.edges.emplace(w[i], w[i + 1]);
  };
  for (const auto& [a, b] : relations) {
    scan(a);
    scan(b);
  }
  g.entrance.assign(generators, true);
  g.exit.assign(generators, true);
  for (const auto& [a, b] : g.edges) {
    g.exit[a] = false;
    g.entrance[b] = false;
  }
  return g;
}

EntranceExitVerdict entrance_exit_check(const Presentation& p) {
  p.validate();
  const auto rels = p.nonzero_relations();
  const DeltaGraph g = delta_graph(p.generator_count(), rels);
  for (std::size_t k = 0; k < rels.size(); ++k) {
    for (const Word* w : {&rels[k].first, &rels[k].second}) {
      if (!g.entrance[w->front()])
        return {false, k, w->front(),
                "first letter " + p.generators[w->front()] + " of " + p.render(*w) + " is not an entrance"};
      if (!g.exit[w->back()])
        return {false, k, w->back(),
                "last letter " + p.generators[w->back()] + " of " + p.render(*w) + " is not an exit"};
    }
  }
  return {};
}

LongestPath longest_path(const DeltaGraph& g) {
  const std::size_t n = g.vertices;
  std::vector<std::vector<Generator>> out(n);
  for (const auto& [a, b] : g.edges) out[a].push_back(b);

  enum Color : char { white, grey, black };
  std::vector<Color> color(n, white);
  std::vector<std::size_t> depth(n, 0);  // longest path (edges) starting at v
  std::vector<Generator> stack;
  LongestPath result;

  std::function<bool(Generator)> visit = [&](Generator v) -> bool {
    color[v] = grey;
    stack.push_back(v);
    for (Generator w : out[v]) {
      if (color[w] == grey) {
        auto it = std::find(stack.begin(), stack.end(), w);
        result.cycle.assign(it, stack.end());
        result.cycle.push_back(w);
        return false;
      }
      if (color[w] == white && !visit(w)) return false;
      depth[v] = std::max(depth[v], depth[w] + 1);
    }
    stack.pop_back();
    color[v] = black;
    return true;
  };

  std::size_t best = 0;
  for (Generator v = 0; v < n; ++v) {
    if (color[v] == white && !visit(v)) return result;
    best = std::max(best, depth[v]);
  }
  result.length = best;
  return result;
}

Presentation cat0_from_graph(const Presentation& p) {
  p.validate();
  if (p.has_zero_relations()) throw InvalidInput("graph construction expects a presentation without zero relations");
  const auto check = entrance_exit_check(p);
  if (!check.applicable) throw HypothesisFailure("entrance/exit condition", check.detail);
  const DeltaGraph g = delta_graph(p.generator_count(), p.nonzero_relations());
  Presentation out;
  out.generators = p.generators;
  out.relations = p.relations;
  for (Generator a = 0; a < p.generator_count(); ++a)
    for (Generator b = 0; b < p.generator_count(); ++b)
      if (!g.has_edge(a, b)) out.gamma.emplace(a, b);
  return out;
}

// ---------------------------------------------------------------------------
// Congruence closure

CongruenceClosure::CongruenceClosure(const Presentation& p, RewriteBounds bounds, std::size_t min_length) {
  p.validate();
  generators_ = p.generator_count();
  gamma_.assign(generators_, std::vector<bool>(generators_, false));
  for (const auto& [a, b] : p.gamma) gamma_[a][b] = true;
  for (const auto& r : p.relations) {
    if (r.is_zero()) {
      if (r.lhs.size() == 2) {
        gamma_[r.lhs[0]][r.lhs[1]] = true;
      } else {
        zero_patterns_.push_back(r.lhs);
      }
    } else {
      moves_.emplace_back(r.lhs, *r.rhs);
      moves_.emplace_back(*r.rhs, r.lhs);
    }
  }
  const std::size_t wanted = bounds.max_length ? bounds.max_length : 2 * longest_side(p) + 2;

  // Breadth-first by length keeps ids in shortlex order.
  std::vector<Word> level;
  for (Generator g = 0; g < generators_; ++g) {
    Word w{g};
    if (!contains_zero_pattern(w)) level.push_back(std::move(w));
  }
  std::size_t length = 0;
  while (!level.empty() && length < wanted) {
    if (words_.size() + level.size() > bounds.budget) break;
    ++length;
    for (auto& w : level) {
      index_.emplace(w, words_.size());
      words_.push_back(w);
    }
    std::vector<Word> next;
    if (length < wanted) {
      for (const auto& w : level) {
        for (Generator g = 0; g < generators_; ++g) {
          if (gamma_[w.back()][g]) continue;
          Word x = w;
          x.push_back(g);
          bool bad = false;
          for (const auto& z : zero_patterns_)
            if (z.size() <= x.size() && std::equal(z.rbegin(), z.rend(), x.rbegin())) bad = true;
          if (!bad) next.push_back(std::move(x));
        }
      }
    }
    level = std::move(next);
  }
  // Pattern-free words stop before the requested length: every longer word vanishes.
  max_length_ = level.empty() ? wanted : length;
  if (max_length_ < min_length)
    throw Undecided("rewriting budget of " + std::to_string(bounds.budget) +
                    " words only covers length " + std::to_string(max_length_) + ", need " +
                    std::to_string(min_length));

  zero_node_ = words_.size();
  parent_.resize(words_.size() + 1);
  for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = i;
  tainted_.assign(words_.size() + 1, 0);

  apply_moves();
  while (propagate_zero()) {
  }
  std::vector<char> class_taint(parent_.size(), 0);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (tainted_[i]) class_taint[find(i)] = 1;
  tainted_ = std::move(class_taint);
}

std::size_t CongruenceClosure::find(std::size_t x) const {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void CongruenceClosure::unite(std::size_t a, std::size_t b) {
  std::size_t ra = find(a);
  std::size_t rb = find(b);
  if (ra == rb) return;
  std::size_t root = (ra == zero_node_ || rb == zero_node_) ? zero_node_ : std::min(ra, rb);
  parent_[ra] = root;
  parent_[rb] = root;
}

std::optional<std::size_t> CongruenceClosure::lookup(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool CongruenceClosure::contains_zero_pattern(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (gamma_[w[i]][w[i + 1]]) return true;
  for (const auto& z : zero_patterns_)
    if (contains_factor(w, z)) return true;
  return false;
}

void CongruenceClosure::apply_moves() {
  for (std::size_t id = 0; id < words_.size(); ++id) {
    const Word& w = words_[id];
    for (const auto& [from, to] : moves_) {
      if (from.size() > w.size()) continue;
      for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
        if (!std::equal(from.begin(), from.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
        Word moved(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        moved.insert(moved.end(), to.begin(), to.end());
        moved.insert(moved.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + from.size()), w.end());
        if (contains_zero_pattern(moved)) {
          unite(id, zero_node_);
        } else if (auto other = lookup(moved)) {
          unite(id, *other);
        } else {
          tainted_[id] = 1;
        }
      }
    }
  }
}

bool CongruenceClosure::propagate_zero() {
  bool changed = false;
  for (std::size_t id = 0; id < words_.size(); ++id) {
    const Word& w = words_[id];
    if (w.size() < 2 || find(id) == zero_node_) continue;
    Word prefix(w.begin(), w.end() - 1);
    Word suffix(w.begin() + 1, w.end());
    auto a = lookup(prefix);
    auto b = lookup(suffix);
    if ((a && find(*a) == zero_node_) || (b && find(*b) == zero_node_)) {
      unite(id, zero_node_);
      changed = true;
    }
  }
  return changed;
}

CongruenceClosure::Query CongruenceClosure::classify(const Word& w) const {
  Query q;
  if (contains_zero_pattern(w)) {
    q.zero = true;
    q.exact = true;
    return q;
  }
  auto id = lookup(w);
  if (!id) return q;
  const std::size_t r = find(*id);
  if (r == zero_node_) {
    q.zero = true;
    q.exact = true;
    return q;
  }
  q.id = r;
  q.exact = !tainted_[r];
  return q;
}

const Word& CongruenceClosure::representative(std::size_t class_id) const { return words_.at(class_id); }

std::vector<Word> CongruenceClosure::members(std::size_t class_id) const {
  std::vector<Word> out;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (find(i) == class_id) out.push_back(words_[i]);
  return out;
}

bool CongruenceClosure::is_exact(std::size_t class_id) const { return !tainted_.at(class_id); }

std::optional<std::size_t> rewrite_class(const Presentation& p, const Word& w, RewriteBounds bounds) {
  CongruenceClosure closure(p, bounds);
  auto q = closure.classify(w);
  if (q.zero) return closure.word_count();
  if (!q.id || !q.exact) return std::nullopt;
  return q.id;
}

// ---------------------------------------------------------------------------
// Finite quotients

namespace {

FiniteQuotient build_quotient(const Presentation& p, const CongruenceClosure& closure,
                              const std::vector<std::size_t>& classes) {
  std::map<std::size_t, Element> element_of;
  FiniteQuotient q;
  q.representatives.push_back({});
  std::vector<std::string> names{"0"};
  for (std::size_t c : classes) {
    element_of[c] = q.representatives.size();
    q.representatives.push_back(closure.representative(c));
    names.push_back(p.render(closure.representative(c)));
  }
  auto value = [&](const Word& w) -> Element {
    auto cls = closure.classify(w);
    if (cls.zero || !cls.id) return 0;
    auto it = element_of.find(*cls.id);
    return it == element_of.end() ? 0 : it->second;
  };
  const std::size_t n = q.representatives.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n, 0));
  for (Element x = 1; x < n; ++x)
    for (Element y = 1; y < n; ++y) {
      Word w = q.representatives[x];
      w.insert(w.end(), q.representatives[y].begin(), q.representatives[y].end());
      table[x][y] = value(w);
    }
  q.semigroup = FiniteZeroSemigroup::from_table(std::move(table), std::move(names));
  for (Generator g = 0; g < p.generator_count(); ++g) q.generator_elements.push_back(value(Word{g}));
  return q;
}

}  // namespace

FiniteQuotient ideal_quotient(const Presentation& p, RewriteBounds bounds) {
  p.validate();
  if (!p.gamma.empty() || p.has_zero_relations())
    throw InvalidInput("ideal quotient expects a presentation without zero relations or gamma");
  if (p.relations.empty())
    throw HypothesisFailure("I(P) contains no generator", "there are no relations, so every element lies in I(P)");

  const std::size_t side = longest_side(p);
  CongruenceClosure closure(p, bounds, 2 * side);

  auto exact_class = [&](const Word& w) -> std::size_t {
    auto q = closure.classify(w);
    if (!q.id || !q.exact)
      throw Undecided("class of " + p.render(w) + " is not closed within word length " +
                      std::to_string(closure.max_length()));
    return *q.id;
  };

  std::set<std::size_t> outside;  // classes not in I(P)
  std::size_t longest_member = 0;
  for (const auto& r : p.relations) {
    for (const Word& w : closure.members(exact_class(r.lhs))) {
      longest_member = std::max(longest_member, w.size());
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j <= w.size(); ++j)
          outside.insert(exact_class(Word(w.begin() + static_cast<std::ptrdiff_t>(i),
                                          w.begin() + static_cast<std::ptrdiff_t>(j))));
    }
  }
  for (Generator g = 0; g < p.generator_count(); ++g) {
    auto q = closure.classify(Word{g});
    if (!q.id || !outside.count(*q.id))
      throw HypothesisFailure("I(P) contains no generator",
                              "generator " + p.generators[g] + " is not a factor of any relation word");
  }
  // Words longer than every member of the (exact, finite) outside classes lie
  // in I(P), so the ideal is nonempty.
  (void)longest_member;
  return build_quotient(p, closure, std::vector<std::size_t>(outside.begin(), outside.end()));
}

FiniteQuotient nilpotent_quotient(const Presentation& p, RewriteBounds bounds) {
  p.validate();
  const std::size_t n = p.generator_count();
  DeltaGraph allowed;
  allowed.vertices = n;
  std::vector<bool> dead(n, false);
  for (const auto& r : p.relations)
    if (r.is_zero() && r.lhs.size() == 1) dead[r.lhs[0]] = true;
  std::set<std::pair<Generator, Generator>> gamma = p.gamma;
  for (const auto& r : p.relations)
    if (r.is_zero() && r.lhs.size() == 2) gamma.emplace(r.lhs[0], r.lhs[1]);
  for (Generator a = 0; a < n; ++a)
    for (Generator b = 0; b < n; ++b)
      if (!dead[a] && !dead[b] && !gamma.count({a, b})) allowed.edges.emplace(a, b);
  const LongestPath path = longest_path(allowed);
  if (!path.length) {
    std::string cyc;
    for (Generator g : path.cycle) cyc += (cyc.empty() ? "" : " -> ") + p.generators[g];
    throw HypothesisFailure("finite nilpotent quotient", "allowed products contain the circuit " + cyc);
  }
  bounds.max_length = *path.length + 1;
  CongruenceClosure closure(p, bounds, bounds.max_length);

  std::set<std::size_t> classes;
  for (std::size_t id = 0; id < closure.word_count(); ++id) {
    auto q = closure.classify(closure.representative(id));
    if (q.zero) continue;
    if (!q.exact) throw Undecided("nilpotent quotient: class of " + p.render(closure.representative(id)) + " not closed");
    classes.insert(*q.id);
  }
  return build_quotient(p, closure, std::vector<std::size_t>(classes.begin(), classes.end()));
}

void verify_gamma_form(const Presentation& p, const FiniteQuotient& q) {
  const auto& s = q.semigroup;
  auto value = [&](const Word& w) {
    Element acc = q.generator_elements[w.front()];
    for (std::size_t i = 1; i < w.size(); ++i) acc = s.multiply(acc, q.generator_elements[w[i]]);
    return acc;
  };
  for (Generator g = 0; g < p.generator_count(); ++g)
    if (q.generator_elements[g] == 0) throw HypothesisFailure("gamma form", "generator " + p.generators[g] + " is zero");
  for (const auto& [a, b] : p.nonzero_relations()) {
    if (value(a) == 0 || value(b) == 0)
      throw HypothesisFailure("gamma form", "relation " + p.render(a) + " = " + p.render(b) + " is a zero relation");
  }
  std::set<std::pair<Generator, Generator>> gamma = p.gamma;
  for (const auto& r : p.relations)
    if (r.is_zero() && r.lhs.size() == 2) gamma.emplace(r.lhs[0], r.lhs[1]);
  for (Generator a = 0; a < p.generator_count(); ++a)
    for (Generator b = 0; b < p.generator_count(); ++b) {
      const bool zero = value(Word{a, b}) == 0;
      if (zero != static_cast<bool>(gamma.count({a, b})))
        throw HypothesisFailure("gamma form", "product " + p.render(Word{a, b}) +
                                                  (zero ? " vanishes but is not in gamma" : " is in gamma but nonzero"));
    }
}

// ---------------------------------------------------------------------------
// Text format

Word parse_word(const Presentation& p, std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) throw InvalidInput("empty word");
  const bool single = std::all_of(p.generators.begin(), p.generators.end(),
                                  [](const std::string& g) { return g.size() == 1; });
  auto index_of = [&](const std::string& name) -> std::optional<Generator> {
    auto it = std::find(p.generators.begin(), p.generators.end(), name);
    if (it == p.generators.end()) return std::nullopt;
    return static_cast<Generator>(it - p.generators.begin());
  };
  Word w;
  std::stringstream ss(t);
  std::string token;
  while (std::getline(ss, token, '.')) {
    token = trim(token);
    if (token.empty()) throw InvalidInput("empty letter in word '" + t + "'");
    if (auto g = index_of(token)) {
      w.push_back(*g);
    } else if (single) {
      for (char ch : token) {
        auto g1 = index_of(std::string(1, ch));
        if (!g1) throw InvalidInput("unknown generator '" + std::string(1, ch) + "' in '" + t + "'");
        w.push_back(*g1);
      }
    } else {
      throw InvalidInput("unknown generator '" + token + "' in '" + t + "'");
    }
  }
  return w;
}

ParsedPresentation parse_presentation(std::string_view text) {
  ParsedPresentation out;
  Presentation& p = out.presentation;
  bool have_generators = false;
  std::stringstream ss{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(ss, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    auto where = [&] { return " (line " + std::to_string(line_no) + ")"; };

    auto sep = line.find('=');
    auto colon = line.find(':');
    std::string key;
    std::string value;
    if (colon != std::string::npos && (sep == std::string::npos || colon < sep)) {
      key = trim(line.substr(0, colon));
      value = trim(line.substr(colon + 1));
    } else if (sep != std::string::npos) {
      key = trim(line.substr(0, sep));
      value = trim(line.substr(sep + 1));
    } else {
      throw InvalidInput("expected 'key = value' or a relation" + where());
    }

    if (key == "generators") {
      p.generators = split_names(value);
      have_generators = true;
      continue;
    }
    if (!have_generators) throw InvalidInput("generators must be declared first" + where());
    if (key == "gamma") {
      if (value == "complement-of-delta") {
        out.gamma_is_complement_of_delta = true;
        continue;
      }
      std::string v = value;
      std::size_t pos = 0;
      while ((pos = v.find('(', pos)) != std::string::npos) {
        auto close = v.find(')', pos);
        if (close == std::string::npos) throw InvalidInput("unbalanced gamma pair" + where());
        auto pair = split_names(v.substr(pos + 1, close - pos - 1));
        if (pair.size() != 2) throw InvalidInput("gamma pairs need two generators" + where());
        Word a = parse_word(p, pair[0]);
        Word b = parse_word(p, pair[1]);
        if (a.size() != 1 || b.size() != 1) throw InvalidInput("gamma pairs are single generators" + where());
        p.gamma.emplace(a[0], b[0]);
        pos = close + 1;
      }
      continue;
    }
    if (sep == std::string::npos) throw InvalidInput("relation needs '='" + where());
    Relation r;
    r.lhs = parse_word(p, line.substr(0, sep));
    const std::string rhs = trim(line.substr(sep + 1));
    if (rhs != "0") r.rhs = parse_word(p, rhs);
    p.relations.push_back(std::move(r));
  }
  if (!have_generators) throw InvalidInput("presentation declares no generators");
  p.validate();
  return out;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "generators = ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) out += (i ? ", " : "") + p.generators[i];
  out += '\n';
  if (!p.gamma.empty()) {
    out += "gamma = ";
    bool first = true;
    for (const auto& [a, b] : p.gamma) {
      out += (first ? "(" : ", (") + p.generators[a] + "," + p.generators[b] + ")";
      first = false;
    }
    out += '\n';
  }
  auto dotted = [&](const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "." : "") + p.generators[w[i]];
    return s;
  };
  for (const auto& r : p.relations) out += dotted(r.lhs) + " = " + (r.rhs ? dotted(*r.rhs) : "0") + '\n';
  return out;
}

}  // namespace homzero
