#include "homzero/homology.hpp"

#include "homzero/errors.hpp"

#include <algorithm>

namespace homzero {

std::optional<std::size_t> TupleBasis::index_of(const Sequence& t) const {
  auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
  if (it == tuples.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - tuples.begin());
}

namespace {

void check_cap(std::size_t count, std::size_t cap, std::size_t n) {
  if (count > cap)
    throw InvalidInput("degree " + std::to_string(n) + " basis exceeds " + std::to_string(cap) + " tuples");
}

// Boundary of degree n >= 1 for a bar-type complex. `mul` multiplies two
// basis letters (never returning a letter outside the lower basis), `act(s)`
// is the action matrix of letter s.
template <typename Mul, typename Act>
SparseMatrix assemble_boundary(const TupleBasis& upper, const TupleBasis& lower, std::size_t rank, Mul mul,
                               Act act, Execution exec) {
  SparseMatrix d(lower.size() * rank, upper.size() * rank);
  const std::size_t n = upper.n;
  for_each_index(exec, static_cast<std::ptrdiff_t>(upper.size()), [&](std::ptrdiff_t jj) {
    const auto j = static_cast<std::size_t>(jj);
    const Sequence& t = upper.tuples[j];
    std::vector<std::size_t> blocks;   // target block per face
    blocks.reserve(n + 1);
    auto block = [&](const Sequence& face) {
      auto idx = lower.index_of(face);
      if (!idx) throw std::logic_error("boundary face outside the lower basis");
      return *idx;
    };
    blocks.push_back(block(Sequence(t.begin() + 1, t.end())));
    for (std::size_t i = 1; i < n; ++i) {
      Sequence face(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i - 1));
      face.push_back(mul(t[i - 1], t[i]));
      face.insert(face.end(), t.begin() + static_cast<std::ptrdiff_t>(i + 1), t.end());
      blocks.push_back(block(face));
    }
    if (n >= 2) blocks.push_back(block(Sequence(t.begin(), t.end() - 1)));

    const IntMatrix& m = act(t[0]);
    for (std::size_t c = 0; c < rank; ++c) {
      std::vector<SparseMatrix::Entry> col;
      for (std::size_t r = 0; r < rank; ++r)
        if (m(r, c) != 0) col.emplace_back(blocks[0] * rank + r, m(r, c));
      if (n == 1) {
        col.emplace_back(c, Integer(-1));
      } else {
        for (std::size_t i = 1; i <= n; ++i) col.emplace_back(blocks[i] * rank + c, Integer(i % 2 ? -1 : 1));
      }
      d.set_column(j * rank + c, std::move(col));
    }
  });
  return d;
}

template <typename Basis, typename Mul, typename Act>
ChainComplexFG assemble_complex(const FGAbelianGroup& base, std::size_t maxdim, Basis basis, Mul mul, Act act,
                                Execution exec) {
  ChainComplexFG c;
  std::vector<TupleBasis> bases;
  bases.push_back(TupleBasis{0, {Sequence{}}});
  for (std::size_t n = 1; n <= maxdim; ++n) bases.push_back(basis(n));
  for (std::size_t n = 0; n <= maxdim; ++n) c.groups.push_back(FGAbelianGroup::power(base, bases[n].size()));
  c.boundaries.emplace_back();
  for (std::size_t n = 1; n <= maxdim; ++n)
    c.boundaries.push_back(assemble_boundary(bases[n], bases[n - 1], base.rank(), mul, act, exec));
  return c;
}

void check_module(const FiniteZeroSemigroup& s, const ZeroModuleAction& a) {
  if (a.act.size() != s.size()) throw InvalidInput("module and semigroup sizes differ");
  for (Element e = 1; e < s.size(); ++e)
    if (a.act[e].rows() != a.rank() || a.act[e].cols() != a.rank())
      throw InvalidInput("action matrix of " + s.name(e) + " has the wrong shape");
}

}  // namespace

TupleBasis enumerate_dn(const FiniteZeroSemigroup& s, std::size_t n, std::size_t cap) {
  if (n == 0) return TupleBasis{0, {Sequence{}}};
  std::vector<std::pair<Sequence, Element>> level;
  for (Element e = 1; e < s.size(); ++e) level.push_back({Sequence{e}, e});
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<std::pair<Sequence, Element>> next;
    for (const auto& [t, prod] : level) {
      for (Element e = 1; e < s.size(); ++e) {
        const Element p = s.multiply(prod, e);
        if (p == 0) continue;
        Sequence u = t;
        u.push_back(e);
        next.emplace_back(std::move(u), p);
        check_cap(next.size(), cap, n);
      }
    }
    level = std::move(next);
  }
  TupleBasis b{n, {}};
  b.tuples.reserve(level.size());
  for (auto& [t, prod] : level) b.tuples.push_back(std::move(t));
  return b;
}

TupleBasis enumerate_all_tuples(const FiniteSemigroup& s, std::size_t n, std::size_t cap) {
  TupleBasis b{n, {Sequence{}}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Sequence> next;
    check_cap(b.tuples.size() * s.size(), cap, n);
    next.reserve(b.tuples.size() * s.size());
    for (const auto& t : b.tuples)
      for (Element e = 0; e < s.size(); ++e) {
        Sequence u = t;
        u.push_back(e);
        next.push_back(std::move(u));
      }
    b.tuples = std::move(next);
  }
  return b;
}

ChainComplexFG zero_chain_complex(const FiniteZeroSemigroup& s, const ZeroModuleAction& a, std::size_t maxdim,
                                  Execution exec, std::size_t cap) {
  check_module(s, a);
  return assemble_complex(
      a.base, maxdim, [&](std::size_t n) { return enumerate_dn(s, n, cap); },
      [&](Element x, Element y) { return s.multiply(x, y); },
      [&](Element e) -> const IntMatrix& { return a.matrix(e); }, exec);
}

ChainComplexFG bar_chain_complex(const FiniteSemigroup& s, const ModuleAction& a, std::size_t maxdim,
                                 Execution exec, std::size_t cap) {
  if (a.act.size() != s.size()) throw InvalidInput("module and semigroup sizes differ");
  return assemble_complex(
      a.base, maxdim, [&](std::size_t n) { return enumerate_all_tuples(s, n, cap); },
      [&](Element x, Element y) { return s.multiply(x, y); },
      [&](Element e) -> const IntMatrix& { return a.matrix(e); }, exec);
}

AbelianGroupClass h0_zeroth(const FiniteZeroSemigroup& s, const ZeroModuleAction& a) {
  check_module(s, a);
  const std::size_t k = a.rank();
  const IntMatrix torsion = a.base.torsion_relations();
  IntMatrix rel(k, (s.size() - 1) * k + torsion.cols());
  const IntMatrix id = IntMatrix::identity(k);
  for (Element e = 1; e < s.size(); ++e) {
    const IntMatrix diff = a.matrix(e) - id;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) rel(r, (e - 1) * k + c) = diff(r, c);
  }
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < torsion.cols(); ++c) rel(r, (s.size() - 1) * k + c) = torsion(r, c);
  const auto inv = smith_invariants(rel);
  return AbelianGroupClass::from_cyclic_orders(k - inv.size(), inv);
}

AbelianGroupClass zero_homology(const FiniteZeroSemigroup& s, const ZeroModuleAction& a, std::size_t n,
                                Execution exec) {
  if (n == 0) return h0_zeroth(s, a);
  return homology_of_complex(zero_chain_complex(s, a, n + 1, exec), n, exec);
}

std::vector<AbelianGroupClass> zero_homology_range(const FiniteZeroSemigroup& s, const ZeroModuleAction& a,
                                                   std::size_t maxdim, Execution exec) {
  const ChainComplexFG c = zero_chain_complex(s, a, maxdim + 1, exec);
  std::vector<AbelianGroupClass> out{h0_zeroth(s, a)};
  for (std::size_t n = 1; n <= maxdim; ++n) out.push_back(homology_of_complex(c, n, exec));
  return out;
}

AbelianGroupClass bar_homology(const FiniteSemigroup& s, const ModuleAction& a, std::size_t n, Execution exec,
                               std::size_t cap) {
  return homology_of_complex(bar_chain_complex(s, a, n + 1, exec, cap), n, exec);
}

namespace {

std::vector<Integer> act_on(const FGAbelianGroup& base, const IntMatrix& m, const std::vector<Integer>& v) {
  std::vector<Integer> out = m * std::span<const Integer>(v);
  base.reduce(out);
  return out;
}

}  // namespace

ZeroChain zero_boundary(const FiniteZeroSemigroup& s, const ZeroModuleAction& a, const ZeroChain& c) {
  check_module(s, a);
  ZeroChain out;
  out.dim = c.dim == 0 ? 0 : c.dim - 1;
  if (c.dim == 0) return out;
  for (const auto& [t, coeff] : c.terms) {
    const std::size_t n = t.size();
    out.add(a.base, Sequence(t.begin() + 1, t.end()), act_on(a.base, a.matrix(t[0]), coeff));
    for (std::size_t i = 1; i < n; ++i) {
      Sequence face(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i - 1));
      face.push_back(s.multiply(t[i - 1], t[i]));
      face.insert(face.end(), t.begin() + static_cast<std::ptrdiff_t>(i + 1), t.end());
      out.add(a.base, face, coeff, i % 2 ? -1 : 1);
    }
    out.add(a.base, Sequence(t.begin(), t.end() - 1), coeff, n % 2 ? -1 : 1);
  }
  return out;
}

ReflectorChain reflector_boundary(const FiniteZeroSemigroup& s, const ZeroModuleAction& a, const ReflectorChain& c) {
  check_module(s, a);
  ReflectorChain out;
  out.dim = c.dim == 0 ? 0 : c.dim - 1;
  if (c.dim == 0) return out;
  using Tuple = std::vector<ReflectorElement>;
  for (const auto& [t, coeff] : c.terms) {
    const std::size_t n = t.size();
    out.add(a.base, Tuple(t.begin() + 1, t.end()), act_on(a.base, reflector_action(a, t[0]), coeff));
    for (std::size_t i = 1; i < n; ++i) {
      Tuple face(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i - 1));
      face.push_back(multiply(s, t[i - 1], t[i]));
      face.insert(face.end(), t.begin() + static_cast<std::ptrdiff_t>(i + 1), t.end());
      out.add(a.base, face, coeff, i % 2 ? -1 : 1);
    }
    out.add(a.base, Tuple(t.begin(), t.end() - 1), coeff, n % 2 ? -1 : 1);
  }
  return out;
}

ReflectorChain epsilon_map(const ZeroChain& c) {
  ReflectorChain out;
  out.dim = c.dim;
  for (const auto& [t, coeff] : c.terms) {
    std::vector<ReflectorElement> key;
    for (Element e : t) key.push_back(ReflectorElement{{e}});
    out.terms.emplace(std::move(key), coeff);
  }
  return out;
}

ZeroChain beta_map(const FiniteZeroSemigroup& s, const ZeroModuleAction& a, const ReflectorChain& c) {
  check_module(s, a);
  ZeroChain out;
  out.dim = c.dim;
  for (const auto& [t, coeff] : c.terms) {
    const std::size_t n = t.size();
    for (const auto& x : t)
      if (!is_valid_sequence(s, x.seq)) throw InvalidInput("malformed reflector element in chain");
    if (n == 0) {
      out.add(a.base, Sequence{}, coeff);
    } else if (n == 1) {
      std::vector<Integer> v = coeff;
      for (Element z : t[0].seq) {
        out.add(a.base, Sequence{z}, v);
        v = act_on(a.base, a.matrix(z), v);
      }
    } else {
      bool single = true;
      for (std::size_t i = 1; i + 1 < n; ++i) single = single && t[i].length() == 1;
      if (!single) continue;
      Sequence letters{t[0].last()};
      for (std::size_t i = 1; i + 1 < n; ++i) letters.push_back(t[i].first());
      letters.push_back(t[n - 1].first());
      if (s.product(letters) == 0) continue;
      std::vector<Integer> v = coeff;
      for (std::size_t i = 0; i + 1 < t[0].length(); ++i) v = act_on(a.base, a.matrix(t[0].seq[i]), v);
      out.add(a.base, letters, v);
    }
  }
  return out;
}

}  // namespace homzero
