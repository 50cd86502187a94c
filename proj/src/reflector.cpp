#include "homzero/reflector.hpp"

#include "homzero/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

namespace homzero {

namespace {

struct SequenceHash {
  std::size_t operator()(const Sequence& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Element e : v) h = (h ^ (e + 1)) * 1099511628211ull;
    return h;
  }
};

void reduce_rows(IntMatrix& m, const FGAbelianGroup& base) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Integer& mod = base.moduli[i];
    if (mod == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = reduce_mod(m(i, j), mod);
  }
}

}  // namespace

bool is_valid_sequence(const FiniteZeroSemigroup& s, const Sequence& seq) {
  if (seq.empty()) return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == 0 || seq[i] >= s.size()) return false;
    if (i + 1 < seq.size() && s.multiply(seq[i], seq[i + 1]) != 0) return false;
  }
  return true;
}

ReflectorElement make_reflector_element(const FiniteZeroSemigroup& s, Sequence seq) {
  if (seq.empty()) throw InvalidInput("empty reflector sequence");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == 0 || seq[i] >= s.size())
      throw InvalidInput("reflector sequence entry " + std::to_string(i) + " is zero or out of range");
    if (i + 1 < seq.size() && s.multiply(seq[i], seq[i + 1]) != 0)
      throw InvalidInput("reflector sequence entries " + std::to_string(i) + " and " + std::to_string(i + 1) +
                         " have a nonzero product");
  }
  return ReflectorElement{std::move(seq)};
}

ReflectorElement multiply(const FiniteZeroSemigroup& s, const ReflectorElement& x, const ReflectorElement& y) {
  ReflectorElement out{x.seq};
  const Element meet = s.multiply(x.last(), y.first());
  if (meet != 0) {
    out.seq.back() = meet;
    out.seq.insert(out.seq.end(), y.seq.begin() + 1, y.seq.end());
  } else {
    out.seq.insert(out.seq.end(), y.seq.begin(), y.seq.end());
  }
  // A merge keeps consecutive products zero by associativity; checked anyway.
  if (!is_valid_sequence(s, out.seq))
    throw std::logic_error("reflector product broke the zero-product invariant");
  return out;
}

std::vector<Sequence> nu_step(const FiniteZeroSemigroup& s, const Sequence& seq) {
  std::set<Sequence> out;
  const std::size_t m = seq.size();
  auto emit = [&](Sequence t) {
    if (t != seq && is_valid_sequence(s, t)) out.insert(std::move(t));
  };
  // Same length: s_i = t_i u and t_{i+1} = u s_{i+1}, read in both directions.
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (const auto& [t, u] : s.factorizations(seq[i])) {
      Sequence r = seq;
      r[i] = t;
      r[i + 1] = s.multiply(u, seq[i + 1]);
      emit(std::move(r));
    }
    for (const auto& [u, v] : s.factorizations(seq[i + 1])) {
      Sequence r = seq;
      r[i] = s.multiply(seq[i], u);
      r[i + 1] = v;
      emit(std::move(r));
    }
  }
  // Shrinking: s_c = u v absorbed into both neighbours.
  for (std::size_t c = 1; c + 1 < m; ++c) {
    for (const auto& [u, v] : s.factorizations(seq[c])) {
      Sequence r(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(c - 1));
      r.push_back(s.multiply(seq[c - 1], u));
      r.push_back(s.multiply(v, seq[c + 1]));
      r.insert(r.end(), seq.begin() + static_cast<std::ptrdiff_t>(c + 2), seq.end());
      emit(std::move(r));
    }
  }
  // Growing: t_{c-1} = p u and t_c = v q split into p, uv, q.
  for (std::size_t c = 1; c < m; ++c) {
    for (const auto& [p, u] : s.factorizations(seq[c - 1])) {
      for (const auto& [v, q] : s.factorizations(seq[c])) {
        const Element mid = s.multiply(u, v);
        if (mid == 0) continue;
        Sequence r(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(c - 1));
        r.push_back(p);
        r.push_back(mid);
        r.push_back(q);
        r.insert(r.end(), seq.begin() + static_cast<std::ptrdiff_t>(c + 1), seq.end());
        emit(std::move(r));
      }
    }
  }
  return {out.begin(), out.end()};
}

NuVerdict nu_equivalent(const FiniteZeroSemigroup& s, const ReflectorElement& x, const ReflectorElement& y,
                        NuBounds bounds) {
  if (!is_valid_sequence(s, x.seq) || !is_valid_sequence(s, y.seq))
    throw InvalidInput("nu_equivalent needs valid reflector sequences");
  if (x.seq == y.seq) return NuVerdict::equal;
  // Fixed side order keeps budgeted verdicts symmetric.
  const Sequence& from = std::min(x.seq, y.seq);
  const Sequence& to = std::max(x.seq, y.seq);

  // side[q] = 0 or 1 marks which frontier reached q first.
  std::unordered_map<Sequence, int, SequenceHash> side;
  std::deque<Sequence> frontier[2];
  bool truncated[2] = {false, false};
  side.emplace(from, 0);
  side.emplace(to, 1);
  frontier[0].push_back(from);
  frontier[1].push_back(to);

  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int k = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    Sequence cur = std::move(frontier[k].front());
    frontier[k].pop_front();
    if (cur.size() > bounds.max_length) {
      truncated[k] = true;
      continue;
    }
    for (auto& next : nu_step(s, cur)) {
      auto [it, fresh] = side.emplace(next, k);
      if (!fresh) {
        if (it->second != k) return NuVerdict::equal;
        continue;
      }
      if (side.size() > bounds.budget) return NuVerdict::unknown;
      frontier[k].push_back(std::move(next));
    }
  }
  for (int k = 0; k < 2; ++k)
    if (frontier[k].empty() && !truncated[k]) return NuVerdict::distinct;
  return NuVerdict::unknown;
}

const char* to_string(NuVerdict v) noexcept {
  switch (v) {
    case NuVerdict::equal: return "equal";
    case NuVerdict::distinct: return "distinct";
    case NuVerdict::unknown: return "unknown";
  }
  return "unknown";
}

IntMatrix reflector_action(const ZeroModuleAction& a, const ReflectorElement& x) {
  IntMatrix m = IntMatrix::identity(a.rank());
  for (Element e : x.seq) {
    if (e == 0 || e >= a.act.size()) throw InvalidInput("reflector entry outside the module's semigroup");
    m = a.matrix(e) * m;
    reduce_rows(m, a.base);
  }
  return m;
}

Presentation reflector_presentation(const Presentation& p) {
  Presentation out = p;
  out.relations.clear();
  out.gamma.clear();
  for (const auto& r : p.relations)
    if (!r.is_zero()) out.relations.push_back(r);
  return out;
}

}  // namespace homzero
