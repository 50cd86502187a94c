#include "homzero/abelian.hpp"

#include "homzero/errors.hpp"

#include <algorithm>
#include <optional>

namespace homzero {

namespace {

// In-place Smith reduction. U collects the row operations and V the column
// operations when tracking is requested.
class SmithReducer {
 public:
  SmithReducer(IntMatrix a, bool track, Execution exec)
      : a_(std::move(a)), track_(track), exec_(exec) {
    if (track_) {
      u_ = IntMatrix::identity(a_.rows());
      v_ = IntMatrix::identity(a_.cols());
    }
  }

  // Works modulo `modulus`: entries are kept in (-m/2, m/2]. Only the module
  // Z^rows / (image + m Z^rows) is preserved, so transforms are not tracked.
  SmithReducer(IntMatrix a, Integer modulus, Execution exec)
      : a_(std::move(a)), track_(false), exec_(exec), modulus_(std::move(modulus)) {
    for (std::size_t i = 0; i < a_.rows(); ++i)
      for (auto& x : a_.row(i)) wrap(x);
  }

  std::size_t run() {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
      if (!reduce_pivot(t)) break;
      if (a_(t, t) < 0) negate_row(t);
    }
    return t;
  }

  IntMatrix& matrix() { return a_; }
  IntMatrix& left() { return u_; }
  IntMatrix& right() { return v_; }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> min_entry(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const Integer& x = a_(i, j);
        if (x == 0) continue;
        Integer ax = abs_value(x);
        if (!best || ax < best_abs) {
          best = {i, j};
          best_abs = std::move(ax);
          if (best_abs == 1) return best;
        }
      }
    }
    return best;
  }

  // Drives row t and column t to zero off the diagonal and enforces that the
  // pivot divides the rest of the trailing block. Returns false when the
  // trailing block is already zero.
  bool reduce_pivot(std::size_t t) {
    for (;;) {
      auto pos = min_entry(t);
      if (!pos) return false;
      swap_rows(t, pos->first);
      swap_cols(t, pos->second);

      bool clean = eliminate_column(t);
      clean = eliminate_row(t) && clean;
      if (!clean) continue;

      if (abs_value(a_(t, t)) == 1) return true;
      auto bad = non_divisible(t);
      if (!bad) return true;
      add_row(t, *bad);
    }
  }

  bool eliminate_column(std::size_t t) {
    const Integer pivot = a_(t, t);
    std::vector<std::size_t> targets;
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      if (a_(i, t) != 0) targets.push_back(i);
    if (targets.empty()) return true;

    std::vector<std::size_t> support;
    for (std::size_t j = t; j < a_.cols(); ++j)
      if (a_(t, j) != 0) support.push_back(j);

    std::vector<char> leftover(targets.size(), 0);
    for_each_index(exec_, static_cast<std::ptrdiff_t>(targets.size()), [&](std::ptrdiff_t k) {
      const std::size_t i = targets[static_cast<std::size_t>(k)];
      const Integer q = a_(i, t) / pivot;
      for (std::size_t j : support) wrap(a_(i, j) -= q * a_(t, j));
      if (track_) {
        for (std::size_t j = 0; j < u_.cols(); ++j)
          if (u_(t, j) != 0) u_(i, j) -= q * u_(t, j);
      }
      leftover[static_cast<std::size_t>(k)] = a_(i, t) != 0;
    });
    return std::none_of(leftover.begin(), leftover.end(), [](char c) { return c != 0; });
  }

  bool eliminate_row(std::size_t t) {
    const Integer pivot = a_(t, t);
    std::vector<std::size_t> targets;
    for (std::size_t j = t + 1; j < a_.cols(); ++j)
      if (a_(t, j) != 0) targets.push_back(j);
    if (targets.empty()) return true;

    std::vector<std::size_t> support;
    for (std::size_t i = t; i < a_.rows(); ++i)
      if (a_(i, t) != 0) support.push_back(i);

    std::vector<char> leftover(targets.size(), 0);
    for_each_index(exec_, static_cast<std::ptrdiff_t>(targets.size()), [&](std::ptrdiff_t k) {
      const std::size_t j = targets[static_cast<std::size_t>(k)];
      const Integer q = a_(t, j) / pivot;
      for (std::size_t i : support) wrap(a_(i, j) -= q * a_(i, t));
      if (track_) {
        for (std::size_t i = 0; i < v_.rows(); ++i)
          if (v_(i, t) != 0) v_(i, j) -= q * v_(i, t);
      }
      leftover[static_cast<std::size_t>(k)] = a_(t, j) != 0;
    });
    return std::none_of(leftover.begin(), leftover.end(), [](char c) { return c != 0; });
  }

  std::optional<std::size_t> non_divisible(std::size_t t) const {
    const Integer& pivot = a_(t, t);
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      for (std::size_t j = t + 1; j < a_.cols(); ++j)
        if (a_(i, j) % pivot != 0) return i;
    return std::nullopt;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    a_.swap_rows(a, b);
    if (track_) u_.swap_rows(a, b);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    a_.swap_cols(a, b);
    if (track_) v_.swap_cols(a, b);
  }

  void add_row(std::size_t dst, std::size_t src) {
    for (std::size_t j = 0; j < a_.cols(); ++j) wrap(a_(dst, j) += a_(src, j));
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(dst, j) += u_(src, j);
  }

  void negate_row(std::size_t r) {
    for (auto& x : a_.row(r)) x = -x;
    if (track_)
      for (auto& x : u_.row(r)) x = -x;
  }

  void wrap(Integer& x) const {
    if (modulus_ == 0) return;
    x %= modulus_;
    if (2 * x > modulus_) {
      x -= modulus_;
    } else if (2 * x <= -modulus_) {
      x += modulus_;
    }
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
  bool track_;
  Execution exec_;
  Integer modulus_ = 0;
};

// Rank and the absolute value of one nonvanishing minor of that size, by
// fraction-free elimination. Every intermediate entry is a minor of `a`.
std::pair<std::size_t, Integer> rank_and_minor(IntMatrix a, Execution exec) {
  const std::size_t m = a.rows(), n = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c) == 0) ++p;
    if (p == m) continue;
    a.swap_rows(r, p);
    for_each_index(exec, static_cast<std::ptrdiff_t>(m - r - 1), [&](std::ptrdiff_t k) {
      const std::size_t i = r + 1 + static_cast<std::size_t>(k);
      for (std::size_t j = c + 1; j < n; ++j) a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    });
    prev = a(r, c);
    ++r;
  }
  return {r, abs_value(prev)};
}

// Below this size the direct reduction is cheaper than the extra elimination.
constexpr std::size_t kModularThreshold = 6;

// Coordinates of a lattice vector with respect to the image basis of a Smith
// form: the image of P is spanned by d_i * (column i of U^-1), so U*b has
// entries divisible by d_i for i < rank and zero beyond.
std::vector<Integer> image_coordinates(const SmithForm& snf, std::span<const Integer> b) {
  std::vector<Integer> w = snf.U * b;
  std::vector<Integer> coords(snf.rank);
  for (std::size_t i = 0; i < snf.rank; ++i) {
    const Integer& d = snf.D(i, i);
    if (w[i] % d != 0) throw InvalidInput("homology: boundary image escapes the cycle lattice");
    coords[i] = w[i] / d;
  }
  for (std::size_t i = snf.rank; i < w.size(); ++i)
    if (w[i] != 0) throw InvalidInput("homology: boundary image escapes the cycle lattice");
  return coords;
}

}  // namespace

AbelianGroupClass AbelianGroupClass::from_cyclic_orders(std::size_t free_rank,
                                                        std::vector<Integer> orders) {
  std::vector<Integer> finite;
  for (auto& d : orders) {
    Integer ad = abs_value(d);
    if (ad == 0) {
      ++free_rank;
    } else if (ad != 1) {
      finite.push_back(std::move(ad));
    }
  }
  AbelianGroupClass out;
  out.free_rank = free_rank;
  if (finite.empty()) return out;
  for (auto& d : smith_invariants(IntMatrix::diagonal(finite)))
    if (d != 1) out.torsion.push_back(d);
  return out;
}

std::string AbelianGroupClass::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  if (free_rank == 1) {
    s = "Z";
  } else if (free_rank > 1) {
    s = "Z^" + std::to_string(free_rank);
  }
  for (const auto& d : torsion) {
    if (!s.empty()) s += " (+) ";
    s += "Z/" + d.str();
  }
  return s;
}

AbelianGroupClass direct_sum(const AbelianGroupClass& a, const AbelianGroupClass& b) {
  std::vector<Integer> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  return AbelianGroupClass::from_cyclic_orders(a.free_rank + b.free_rank, std::move(orders));
}

FGAbelianGroup FGAbelianGroup::from_relations(const IntMatrix& relations) {
  auto d = smith_invariants(relations);
  FGAbelianGroup g;
  for (const auto& x : d)
    if (x != 1) g.moduli.push_back(x);
  for (std::size_t i = d.size(); i < relations.rows(); ++i) g.moduli.push_back(0);
  return g;
}

FGAbelianGroup FGAbelianGroup::power(const FGAbelianGroup& base, std::size_t copies) {
  FGAbelianGroup g;
  g.moduli.reserve(base.rank() * copies);
  for (std::size_t c = 0; c < copies; ++c)
    g.moduli.insert(g.moduli.end(), base.moduli.begin(), base.moduli.end());
  return g;
}

bool FGAbelianGroup::is_free() const {
  return std::all_of(moduli.begin(), moduli.end(), [](const Integer& m) { return m == 0; });
}

void FGAbelianGroup::validate() const {
  for (const auto& m : moduli)
    if (m < 0 || m == 1) throw InvalidInput("coordinate modulus must be 0 or at least 2, got " + m.str());
}

IntMatrix FGAbelianGroup::torsion_relations() const {
  std::size_t t = 0;
  for (const auto& m : moduli) t += m != 0;
  IntMatrix r(rank(), t);
  std::size_t c = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    if (moduli[i] != 0) r(i, c++) = moduli[i];
  return r;
}

AbelianGroupClass FGAbelianGroup::group_class() const {
  return AbelianGroupClass::from_cyclic_orders(0, moduli);
}

void FGAbelianGroup::reduce(std::span<Integer> v) const {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = reduce_mod(v[i], moduli[i]);
}

bool vanishes_modulo(const SparseMatrix& m, const FGAbelianGroup& target) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c))
      if (reduce_mod(v, target.moduli[r]) != 0) return false;
  return true;
}

void ChainComplexFG::validate() const {
  if (boundaries.size() != groups.size())
    throw InvalidInput("chain complex: need one boundary slot per degree");
  for (const auto& g : groups) g.validate();
  for (std::size_t n = 1; n < groups.size(); ++n) {
    const auto& d = boundaries[n];
    if (d.rows() != groups[n - 1].rank() || d.cols() != groups[n].rank())
      throw InvalidInput("chain complex: boundary " + std::to_string(n) + " has the wrong shape");
    // Well-definedness on the quotient: the image of a torsion relation of
    // degree n must vanish in degree n-1.
    for (std::size_t c = 0; c < d.cols(); ++c) {
      const Integer& m = groups[n].moduli[c];
      if (m == 0) continue;
      for (const auto& [r, v] : d.column(c))
        if (reduce_mod(v * m, groups[n - 1].moduli[r]) != 0)
          throw InvalidInput("chain complex: boundary " + std::to_string(n) +
                             " is not well defined on the quotient group");
    }
    if (n >= 2 && !vanishes_modulo(boundaries[n - 1] * d, groups[n - 2]))
      throw InvalidInput("chain complex: boundary composite at degree " + std::to_string(n) +
                         " does not vanish");
  }
}

SmithForm smith_normal_form(const IntMatrix& m, Execution exec) {
  SmithReducer reducer(m, true, exec);
  SmithForm out;
  out.rank = reducer.run();
  out.D = std::move(reducer.matrix());
  out.U = std::move(reducer.left());
  out.V = std::move(reducer.right());
  return out;
}

std::vector<Integer> smith_invariants(const IntMatrix& m, Execution exec) {
  if (std::min(m.rows(), m.cols()) >= kModularThreshold) {
    // With D a nonzero maximal minor, every invariant factor divides D and
    // Z^rows / (image + D Z^rows) has invariants d_1 .. d_r, D, .., D.
    auto [rank, minor] = rank_and_minor(m, exec);
    if (rank == 0) return {};
    if (minor != 1) {
      // A second maximal minor from reversed rows and columns usually shares
      // only a small factor with the first.
      IntMatrix flipped(m.rows(), m.cols());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) flipped(i, j) = m(m.rows() - 1 - i, m.cols() - 1 - j);
      minor = gcd(minor, rank_and_minor(std::move(flipped), exec).second);
    }
    if (minor == 1) return std::vector<Integer>(rank, Integer(1));
    SmithReducer reducer(m, minor, exec);
    const std::size_t k = reducer.run();
    std::vector<Integer> d(rank, minor);
    for (std::size_t i = 0; i < std::min(k, rank); ++i) d[i] = gcd(reducer.matrix()(i, i), minor);
    return d;
  }
  SmithReducer reducer(m, false, exec);
  const std::size_t rank = reducer.run();
  std::vector<Integer> d(rank);
  for (std::size_t i = 0; i < rank; ++i) d[i] = reducer.matrix()(i, i);
  return d;
}

namespace {

// Free complexes: rank-nullity plus the Smith invariants of the incoming map.
AbelianGroupClass free_homology(const ChainComplexFG& c, std::size_t n, Execution exec) {
  const std::size_t dim = c.groups[n].rank();
  std::size_t out_rank = 0;
  if (n >= 1 && c.boundaries[n].nonzeros() > 0)
    out_rank = smith_invariants(c.boundaries[n].to_dense(), exec).size();
  std::vector<Integer> in;
  if (n + 1 <= c.top_degree() && c.boundaries[n + 1].nonzeros() > 0)
    in = smith_invariants(c.boundaries[n + 1].to_dense(), exec);
  std::vector<Integer> torsion;
  for (auto& d : in)
    if (d != 1) torsion.push_back(d);
  AbelianGroupClass h;
  h.free_rank = dim - out_rank - in.size();
  h.torsion = std::move(torsion);
  return h;
}

}  // namespace

AbelianGroupClass homology_of_complex(const ChainComplexFG& c, std::size_t n, Execution exec) {
  if (c.groups.empty() || n > c.top_degree())
    throw InvalidInput("homology: degree " + std::to_string(n) + " out of range");
  const bool has_next = n + 1 <= c.top_degree();
  const bool free_here = c.groups[n].is_free() && (n == 0 || c.groups[n - 1].is_free());
  if (free_here) return free_homology(c, n, exec);

  const std::size_t k = c.groups[n].rank();
  if (k == 0) return {};

  // Cycle lattice in Z^k: projections of the kernel of [d_n | T_{n-1}].
  IntMatrix cycles;
  if (n == 0) {
    cycles = IntMatrix::identity(k);
  } else {
    IntMatrix augmented = c.boundaries[n].to_dense().hconcat(c.groups[n - 1].torsion_relations());
    SmithForm s = smith_normal_form(augmented, exec);
    const std::size_t nullity = augmented.cols() - s.rank;
    cycles = IntMatrix(k, nullity);
    for (std::size_t j = 0; j < nullity; ++j)
      for (std::size_t i = 0; i < k; ++i) cycles(i, j) = s.V(i, s.rank + j);
  }
  SmithForm basis = smith_normal_form(cycles, exec);

  // Boundaries: image of d_{n+1} plus the torsion relations of degree n.
  IntMatrix gens = c.groups[n].torsion_relations();
  if (has_next) gens = c.boundaries[n + 1].to_dense().hconcat(gens);

  IntMatrix coords(basis.rank, gens.cols());
  std::vector<Integer> column(k);
  for (std::size_t j = 0; j < gens.cols(); ++j) {
    for (std::size_t i = 0; i < k; ++i) column[i] = gens(i, j);
    auto x = image_coordinates(basis, column);
    for (std::size_t i = 0; i < basis.rank; ++i) coords(i, j) = std::move(x[i]);
  }
  auto inv = smith_invariants(coords, exec);
  std::vector<Integer> torsion;
  for (auto& d : inv)
    if (d != 1) torsion.push_back(d);
  AbelianGroupClass h;
  h.free_rank = basis.rank - inv.size();
  h.torsion = std::move(torsion);
  return h;
}

}  // namespace homzero
