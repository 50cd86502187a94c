#include "homzero/zmodule.hpp"

#include <string>

namespace homzero {

bool congruent_maps(const IntMatrix& a, const IntMatrix& b, const FGAbelianGroup& base) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (reduce_mod(a(i, j) - b(i, j), base.moduli[i]) != 0) return false;
  return true;
}

namespace {

template <typename Action>
ActionVerdict check_matrices(std::size_t size, Element first, const Action& m) {
  ActionVerdict v;
  const std::size_t k = m.rank();
  if (m.act.size() != size) {
    v.kind = ActionVerdict::Kind::shape;
    v.detail = "expected " + std::to_string(size) + " action slots, got " + std::to_string(m.act.size());
    return v;
  }
  for (Element s = first; s < size; ++s) {
    const IntMatrix& a = m.act[s];
    if (a.rows() != k || a.cols() != k) {
      v.kind = ActionVerdict::Kind::shape;
      v.pair = {{s, s}};
      v.detail = "matrix of element " + std::to_string(s) + " is not " + std::to_string(k) + "x" +
                 std::to_string(k);
      return v;
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (m.base.moduli[j] == 0) continue;
        if (reduce_mod(a(i, j) * m.base.moduli[j], m.base.moduli[i]) != 0) {
          v.kind = ActionVerdict::Kind::ill_defined;
          v.pair = {{s, s}};
          v.coordinates = {{i, j}};
          v.detail = "matrix of element " + std::to_string(s) + " is not well defined at (" +
                     std::to_string(i) + ", " + std::to_string(j) + ")";
          return v;
        }
      }
  }
  return v;
}

template <typename Semigroup, typename Action>
ActionVerdict check_composition(const Semigroup& sg, Element first, bool skip_zero_products,
                                const Action& m) {
  for (Element s = first; s < sg.size(); ++s)
    for (Element t = first; t < sg.size(); ++t) {
      const Element st = sg.multiply(s, t);
      if (skip_zero_products && st == 0) continue;
      if (!congruent_maps(m.act[t] * m.act[s], m.act[st], m.base)) {
        ActionVerdict v;
        v.kind = ActionVerdict::Kind::composition;
        v.pair = {{s, t}};
        v.detail = "M(t)M(s) != M(st) for (s, t) = (" + sg.name(s) + ", " + sg.name(t) + ")";
        return v;
      }
    }
  return {};
}

}  // namespace

ActionVerdict validate_action(const FiniteZeroSemigroup& s, const ZeroModuleAction& m) {
  auto v = check_matrices(s.size(), 1, m);
  if (!v.valid()) return v;
  return check_composition(s, 1, true, m);
}

ActionVerdict validate_action(const FiniteSemigroup& s, const ModuleAction& m) {
  auto v = check_matrices(s.size(), 0, m);
  if (!v.valid()) return v;
  return check_composition(s, 0, false, m);
}

ZeroModuleAction trivial_module(const FiniteZeroSemigroup& s, const FGAbelianGroup& base) {
  ZeroModuleAction m{base, std::vector<IntMatrix>(s.size(), IntMatrix::identity(base.rank()))};
  m.act[0] = IntMatrix::zero(base.rank(), base.rank());
  return m;
}

ZeroModuleAction zero_action_module(const FiniteZeroSemigroup& s, const FGAbelianGroup& base) {
  return {base, std::vector<IntMatrix>(s.size(), IntMatrix::zero(base.rank(), base.rank()))};
}

ModuleAction trivial_module(const FiniteSemigroup& s, const FGAbelianGroup& base) {
  return {base, std::vector<IntMatrix>(s.size(), IntMatrix::identity(base.rank()))};
}

ZeroModuleAction restrict_to_part(const ZeroModuleAction& m, const ZeroDirectUnion& u, std::size_t part) {
  if (part >= u.embeddings.size())
    throw InvalidInput("part index " + std::to_string(part) + " out of range");
  const auto& emb = u.embeddings[part];
  ZeroModuleAction r{m.base, {}};
  r.act.reserve(emb.size());
  r.act.push_back(IntMatrix::zero(m.rank(), m.rank()));
  for (std::size_t e = 1; e < emb.size(); ++e) {
    if (emb[e] >= m.act.size()) throw InvalidInput("part element outside the module's semigroup");
    r.act.push_back(m.act[emb[e]]);
  }
  return r;
}

ZeroModuleAction adjoin_zero(const ModuleAction& m) {
  ZeroModuleAction z{m.base, {IntMatrix::zero(m.rank(), m.rank())}};
  z.act.insert(z.act.end(), m.act.begin(), m.act.end());
  return z;
}

}  // namespace homzero
