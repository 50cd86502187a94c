#include "generators.hpp"

#include "fixtures.hpp"
#include "homzero/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <numeric>

namespace gen {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

namespace {

using Map = std::vector<std::size_t>;

Map compose(const Map& s, const Map& t) {
  Map out(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) out[x] = t[s[x]];
  return out;
}

ZeroModuleAction permutation_module(const std::vector<Map>& maps, const FGAbelianGroup& base,
                                    const std::vector<Element>& elements) {
  // elements[e] is the transformation index acting as semigroup element e >= 1.
  const std::size_t k = base.rank();
  ZeroModuleAction m{base, {IntMatrix::zero(k, k)}};
  for (std::size_t e = 1; e < elements.size(); ++e) {
    IntMatrix mat(k, k);
    for (std::size_t x = 0; x < k; ++x) mat(maps[elements[e]][x], x) = 1;
    m.act.push_back(mat);
  }
  return m;
}

std::vector<Generator> random_path(Rng& rng, const std::vector<std::vector<bool>>& allowed, std::size_t length) {
  const std::size_t n = allowed.size();
  std::vector<Generator> w{uniform(rng, 0, n - 1)};
  while (w.size() < length) {
    std::vector<Generator> next;
    for (Generator g = 0; g < n; ++g)
      if (allowed[w.back()][g]) next.push_back(g);
    if (next.empty()) break;
    w.push_back(next[uniform(rng, 0, next.size() - 1)]);
  }
  return w;
}

}  // namespace

std::optional<TransformationSemigroup> random_transformation_semigroup(Rng& rng, std::size_t max_size,
                                                                      bool with_identity) {
  const std::size_t points = uniform(rng, 2, 3);
  std::vector<Map> maps;
  if (with_identity) {
    Map id(points);
    std::iota(id.begin(), id.end(), 0);
    maps.push_back(id);
  }
  const std::size_t gens = uniform(rng, 1, 2);
  for (std::size_t g = 0; g < gens; ++g) {
    Map m(points);
    for (auto& x : m) x = uniform(rng, 0, points - 1);
    if (std::find(maps.begin(), maps.end(), m) == maps.end()) maps.push_back(m);
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (const Map& c : {compose(maps[i], maps[j]), compose(maps[j], maps[i])}) {
        if (std::find(maps.begin(), maps.end(), c) == maps.end()) {
          maps.push_back(c);
          if (maps.size() > max_size) return std::nullopt;
        }
      }
    }
  }
  const std::size_t n = maps.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i][j] = static_cast<Element>(std::find(maps.begin(), maps.end(), compose(maps[i], maps[j])) - maps.begin());
  return TransformationSemigroup{FiniteSemigroup::from_table(std::move(table)), maps};
}

Presentation random_gamma_presentation(Rng& rng, std::size_t generators, std::size_t relations) {
  Presentation p;
  for (std::size_t g = 0; g < generators; ++g) p.generators.push_back(std::string(1, static_cast<char>('a' + g)));
  std::vector<std::size_t> order(generators);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<bool>> allowed(generators, std::vector<bool>(generators, false));
  for (std::size_t i = 0; i < generators; ++i)
    for (std::size_t j = i + 1; j < generators; ++j)
      if (uniform(rng, 0, 2) != 0) allowed[order[i]][order[j]] = true;
  for (Generator a = 0; a < generators; ++a)
    for (Generator b = 0; b < generators; ++b)
      if (!allowed[a][b]) p.gamma.emplace(a, b);
  for (std::size_t k = 0; k < relations; ++k) {
    Word lhs = random_path(rng, allowed, uniform(rng, 1, 3));
    Word rhs = random_path(rng, allowed, uniform(rng, 1, lhs.size()));
    if (lhs == rhs || (lhs.size() == 1 && rhs.size() == 1)) continue;
    p.relations.push_back(Relation{lhs, rhs});
  }
  return p;
}

Presentation random_zero_relation_presentation(Rng& rng, std::size_t generators) {
  Presentation p = random_gamma_presentation(rng, generators, 0);
  for (const auto& [a, b] : p.gamma) p.relations.push_back(Relation{Word{a, b}, std::nullopt});
  p.gamma.clear();
  return p;
}

FGAbelianGroup random_base(Rng& rng, std::size_t max_rank) {
  const std::size_t rank = uniform(rng, 1, max_rank);
  static const int choices[] = {0, 0, 2, 3, 4, 6};
  FGAbelianGroup g;
  switch (uniform(rng, 0, 2)) {
    case 0:
      g = FGAbelianGroup::free(rank);
      break;
    case 1: {
      const int m = choices[uniform(rng, 2, 5)];
      g.moduli.assign(rank, Integer(m));
      break;
    }
    default:
      for (std::size_t i = 0; i < rank; ++i) g.moduli.push_back(Integer(choices[uniform(rng, 0, 5)]));
  }
  return g;
}

IntMatrix random_compatible_matrix(Rng& rng, const FGAbelianGroup& base, int spread) {
  const std::size_t k = base.rank();
  IntMatrix m(k, k);
  std::uniform_int_distribution<int> entry(-spread, spread);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Integer& mi = base.moduli[i];
      const Integer& mj = base.moduli[j];
      Integer x = entry(rng);
      if (mj != 0) {
        if (mi == 0) {
          x = 0;
        } else {
          x *= mi / homzero::gcd(mi, mj);
        }
      }
      m(i, j) = x;
    }
  return m;
}

std::optional<ZeroModuleAction> random_generator_module(Rng& rng, const FiniteQuotient& q, const FGAbelianGroup& base) {
  std::vector<IntMatrix> gens;
  for (std::size_t g = 0; g < q.generator_elements.size(); ++g) gens.push_back(random_compatible_matrix(rng, base, 1));
  ZeroModuleAction m = fixtures::module_from_generators(q, base, gens);
  if (!validate_action(q.semigroup, m).valid()) return std::nullopt;
  return m;
}

Instance random_instance(Rng& rng, std::size_t max_size, std::size_t max_rank) {
  for (;;) {
    const FGAbelianGroup base = random_base(rng, max_rank);
    const std::size_t kind = uniform(rng, 0, 3);
    if (kind == 0) {
      // Nilpotent Gamma quotient with random generator matrices.
      Presentation p = random_gamma_presentation(rng, uniform(rng, 2, 4), uniform(rng, 0, 2));
      try {
        FiniteQuotient q = nilpotent_quotient(p);
        if (q.semigroup.size() > max_size) continue;
        for (int attempt = 0; attempt < 4; ++attempt)
          if (auto m = random_generator_module(rng, q, base)) return {q.semigroup, *m, "gamma " + format_presentation(p)};
        return {q.semigroup, trivial_module(q.semigroup, base), "gamma/trivial " + format_presentation(p)};
      } catch (const homzero::Undecided&) {
        continue;
      }
    }
    if (kind == 1 || kind == 2) {
      // Transformation semigroup with adjoined zero, optionally with its
      // minimal-rank ideal collapsed.
      auto t = random_transformation_semigroup(rng, max_size - 1);
      if (!t) continue;
      const std::size_t points = t->maps.front().size();
      FGAbelianGroup perm_base = base;
      perm_base.moduli.assign(points, base.moduli.front());
      std::vector<Element> elements{0};
      FiniteZeroSemigroup s;
      if (kind == 1) {
        s = adjoin_zero(t->s);
        for (std::size_t i = 0; i < t->maps.size(); ++i) elements.push_back(i);
      } else {
        auto image_size = [&](const Map& m) { return std::set<std::size_t>(m.begin(), m.end()).size(); };
        std::size_t low = points;
        for (const auto& m : t->maps) low = std::min(low, image_size(m));
        std::vector<Element> ideal;
        for (std::size_t i = 0; i < t->maps.size(); ++i)
          if (image_size(t->maps[i]) == low) ideal.push_back(i);
        s = rees_quotient(t->s, ideal);
        for (std::size_t i = 0; i < t->maps.size(); ++i)
          if (image_size(t->maps[i]) != low) elements.push_back(i);
        if (s.size() < 2) continue;
      }
      if (uniform(rng, 0, 1) == 0) return {s, trivial_module(s, base), "transformation/trivial"};
      return {s, permutation_module(t->maps, perm_base, elements), "transformation/permutation"};
    }
    const std::size_t k = uniform(rng, 1, max_size - 1);
    FiniteZeroSemigroup s = FiniteZeroSemigroup::null_semigroup(k);
    return {s, uniform(rng, 0, 1) ? zero_action_module(s, base) : trivial_module(s, base), "null"};
  }
}

std::vector<Element> random_sequence(Rng& rng, const FiniteZeroSemigroup& s, std::size_t max_length) {
  if (s.size() < 2) return {};
  const std::size_t length = uniform(rng, 1, max_length);
  std::vector<Element> seq{uniform(rng, 1, s.size() - 1)};
  while (seq.size() < length) {
    std::vector<Element> next;
    for (Element e = 1; e < s.size(); ++e)
      if (s.multiply(seq.back(), e) == 0) next.push_back(e);
    if (next.empty()) break;
    seq.push_back(next[uniform(rng, 0, next.size() - 1)]);
  }
  return seq;
}

}  // namespace gen
