#pragma once

// Integer cohomology of finite groups with trivial coefficients: closed
// forms for cyclic groups, the normalized bar complex for arbitrary small
// groups, cup products with a 2-cocycle, Schur multipliers, and the five-term
// sequence for the Brauer group of a Hopf manifold.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "brauer/abgroup.hpp"
#include "brauer/errors.hpp"
#include "brauer/exactla.hpp"
#include "brauer/group_types.hpp"

namespace brauer::groupcohom {

using exactla::IntMatrix;
using exactla::SparseRow;
using exactla::SparseSmith;

/// Largest group order for bar_cohomology and schur_multiplier.
inline constexpr std::size_t kBarMaxOrder = 12;
/// Largest group order for cup products (degree p + 2 <= 4 complexes).
inline constexpr std::size_t kCupMaxOrder = 8;
inline constexpr std::size_t kBarMaxDegree = 4;

/// Finite group given by its multiplication table on indices 0..n-1.
class GroupTable {
 public:
  /// Validates the group law; the identity is located from the table.
  explicit GroupTable(std::vector<std::vector<std::size_t>> mul) : mul_(std::move(mul)) {
    const std::size_t n = mul_.size();
    if (n == 0) throw ValidationError("group table must be nonempty");
    for (const auto& row : mul_) {
      if (row.size() != n) throw ValidationError("group table must be square");
      for (std::size_t x : row)
        if (x >= n) throw ValidationError("group table entry out of range");
    }
    std::optional<std::size_t> e;
    for (std::size_t a = 0; a < n && !e; ++a) {
      bool ok = true;
      for (std::size_t g = 0; g < n && ok; ++g) ok = mul_[a][g] == g && mul_[g][a] == g;
      if (ok) e = a;
    }
    if (!e) throw ValidationError("group table has no identity element");
    identity_ = *e;
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b)
        if (mul_[a][b] == identity_ && mul_[b][a] == identity_) inverse_[a] = b;
      if (inverse_[a] == n) throw ValidationError("group table: element without inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
            throw ValidationError("group table is not associative");
  }

  std::size_t order() const { return mul_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return mul_; }

  std::size_t element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity_; x = mul_[x][a]) ++k;
    return k;
  }

  /// An element generating the whole group, if the group is cyclic.
  std::optional<std::size_t> cyclic_generator() const {
    for (std::size_t a = 0; a < order(); ++a)
      if (element_order(a) == order()) return a;
    return std::nullopt;
  }

  bool is_cyclic() const { return cyclic_generator().has_value(); }

  friend bool operator==(const GroupTable& a, const GroupTable& b) { return a.mul_ == b.mul_; }

  static GroupTable cyclic(std::size_t n) {
    if (n == 0) throw DomainError("cyclic group order must be positive");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return GroupTable(std::move(t));
  }

  static GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
    const std::size_t n = g.order(), m = h.order();
    std::vector<std::vector<std::size_t>> t(n * m, std::vector<std::size_t>(n * m));
    for (std::size_t a = 0; a < n * m; ++a)
      for (std::size_t b = 0; b < n * m; ++b)
        t[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
    return GroupTable(std::move(t));
  }

  static GroupTable klein_four() { return direct_product(cyclic(2), cyclic(2)); }

  /// Dihedral group of order 2m: r^i s^j encoded as i + m*j.
  static GroupTable dihedral(std::size_t m) {
    if (m == 0) throw DomainError("dihedral parameter must be positive");
    const std::size_t n = 2 * m;
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t i = a % m, j = a / m, k = b % m, l = b / m;
        // r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j + l)
        const std::size_t rot = j == 0 ? (i + k) % m : (i + m - k) % m;
        t[a][b] = rot + m * ((j + l) % 2);
      }
    return GroupTable(std::move(t));
  }

  /// Quaternion group {±1, ±i, ±j, ±k}.
  static GroupTable quaternion() {
    // unit index u in {0:1, 1:i, 2:j, 3:k}; element = u + 4*sign
    static constexpr int unit_mul[4][4][2] = {
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
        {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
        {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
        {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
    };
    std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
    for (std::size_t a = 0; a < 8; ++a)
      for (std::size_t b = 0; b < 8; ++b) {
        const auto& p = unit_mul[a % 4][b % 4];
        const std::size_t sign = (a / 4 + b / 4 + static_cast<std::size_t>(p[1])) % 2;
        t[a][b] = static_cast<std::size_t>(p[0]) + 4 * sign;
      }
    return GroupTable(std::move(t));
  }

  /// Alternating group A4 as even permutations of {0,1,2,3}.
  static GroupTable alternating4() {
    std::vector<std::array<int, 4>> perms;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
      int inv = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) inv += p[i] > p[j];
      if (inv % 2 == 0) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t n = perms.size();
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::array<int, 4> c{};
        for (int i = 0; i < 4; ++i) c[i] = perms[a][perms[b][i]];
        t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
    return GroupTable(std::move(t));
  }

 private:
  std::vector<std::vector<std::size_t>> mul_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// Normalized 2-cocycle c : G x G -> Z with trivial action.
class CocycleTable {
 public:
  CocycleTable(GroupTable group, IntMatrix values) : group_(std::move(group)), values_(std::move(values)) {
    const std::size_t n = group_.order();
    if (values_.rows() != n || values_.cols() != n) throw ValidationError("cocycle table must be n x n");
    const std::size_t e = group_.identity();
    for (std::size_t g = 0; g < n; ++g)
      if (values_(e, g) != 0 || values_(g, e) != 0) throw ValidationError("cocycle is not normalized");
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h)
        for (std::size_t k = 0; k < n; ++k) {
          const std::size_t gh = group_.mul(g, h), hk = group_.mul(h, k);
          if (values_(g, h) + values_(gh, k) != values_(h, k) + values_(g, hk))
            throw ValidationError("cocycle identity fails");
        }
  }

  /// residue * (carry cocycle) for a cyclic group, written via a generator
  /// g0: c(g0^i, g0^j) = residue if i + j >= n else 0. The carry cocycle is
  /// the class of 0 -> Z -> Z -> Z/n -> 0 and generates H^2(Z/n, Z).
  static CocycleTable from_cyclic_residue(const GroupTable& group, const BigInt& residue) {
    const auto gen = group.cyclic_generator();
    if (!gen) throw ValidationError("a residue extension class requires a cyclic group");
    const std::size_t n = group.order();
    std::vector<std::size_t> exponent(n);
    std::size_t x = group.identity();
    for (std::size_t i = 0; i < n; ++i, x = group.mul(x, *gen)) exponent[x] = i;
    IntMatrix v(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (exponent[a] + exponent[b] >= n) v(a, b) = residue;
    return CocycleTable(group, std::move(v));
  }

  static CocycleTable zero(const GroupTable& group) {
    return CocycleTable(group, IntMatrix(group.order(), group.order()));
  }

  const GroupTable& group() const { return group_; }
  const IntMatrix& values() const { return values_; }
  const BigInt& operator()(std::size_t g, std::size_t h) const { return values_(g, h); }

  CocycleTable negated() const {
    IntMatrix v = values_;
    for (std::size_t i = 0; i < v.rows(); ++i) v.negate_row(i);
    return CocycleTable(group_, std::move(v));
  }

 private:
  GroupTable group_;
  IntMatrix values_;
};

/// H^p(G, Z) in canonical form. basis_cocycles[i] is a normalized cocycle
/// in C^p (indexed as BarComplex does) representing the i-th generator:
/// free generators first, then one per invariant factor.
struct CohomologyGroup {
  std::size_t degree = 0;
  FgAbGroup group;
  std::vector<std::vector<BigInt>> basis_cocycles;
};

// ---------------------------------------------------------------------------
// Normalized bar complex C^p = functions (G \ {e})^p -> Z.
//
//   (df)(g1..g_{p+1}) = f(g2..g_{p+1})
//                     + sum_{i=1..p} (-1)^i f(g1..g_i g_{i+1}..g_{p+1})
//                     + (-1)^{p+1} f(g1..gp)
//
// Tuples of non-identity labels are encoded in base (n-1), g1 most
// significant. Terms with an identity argument vanish.
// ---------------------------------------------------------------------------
class BarComplex {
 public:
  explicit BarComplex(const GroupTable& g) : group_(g), label_(g.order(), kNone) {
    for (std::size_t a = 0; a < g.order(); ++a)
      if (a != g.identity()) {
        label_[a] = element_.size();
        element_.push_back(a);
      }
  }

  const GroupTable& group() const { return group_; }
  std::size_t base() const { return element_.size(); }

  std::size_t dim(std::size_t p) const {
    std::size_t d = 1;
    for (std::size_t i = 0; i < p; ++i) d *= base();
    return d;
  }

  std::vector<std::size_t> decode(std::size_t idx, std::size_t p) const {
    std::vector<std::size_t> t(p);
    for (std::size_t i = p; i-- > 0;) {
      t[i] = idx % base();
      idx /= base();
    }
    return t;
  }

  std::size_t encode(std::span<const std::size_t> t) const {
    std::size_t idx = 0;
    for (std::size_t x : t) idx = idx * base() + x;
    return idx;
  }

  /// Group element index of a label.
  std::size_t element(std::size_t label) const { return element_[label]; }
  /// Label of a group element, or nullopt for the identity.
  std::optional<std::size_t> label(std::size_t elem) const {
    return label_[elem] == kNone ? std::nullopt : std::optional<std::size_t>(label_[elem]);
  }

  /// Row of d^p : C^p -> C^{p+1} at the (p+1)-tuple `idx`.
  SparseRow differential_row(std::size_t p, std::size_t idx) const {
    const auto t = decode(idx, p + 1);
    std::vector<std::pair<std::size_t, int>> terms;
    std::vector<std::size_t> face(p);
    // front face
    std::copy(t.begin() + 1, t.end(), face.begin());
    terms.emplace_back(encode(face), 1);
    for (std::size_t i = 1; i <= p; ++i) {
      const auto prod = label(group_.mul(element_[t[i - 1]], element_[t[i]]));
      if (!prod) continue;
      std::size_t k = 0;
      for (std::size_t j = 0; j < p + 1; ++j) {
        if (j == i - 1) face[k++] = *prod;
        else if (j != i) face[k++] = t[j];
      }
      terms.emplace_back(encode(face), i % 2 ? -1 : 1);
    }
    std::copy(t.begin(), t.end() - 1, face.begin());
    terms.emplace_back(encode(face), (p + 1) % 2 ? -1 : 1);

    std::sort(terms.begin(), terms.end());
    SparseRow row;
    for (std::size_t i = 0; i < terms.size();) {
      int v = 0;
      std::size_t j = i;
      for (; j < terms.size() && terms[j].first == terms[i].first; ++j) v += terms[j].second;
      if (v != 0) row.push_back({terms[i].first, BigInt(v)});
      i = j;
    }
    return row;
  }

  std::vector<SparseRow> differential(std::size_t p) const {
    std::vector<SparseRow> rows(dim(p + 1));
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = differential_row(p, i);
    return rows;
  }

  std::vector<BigInt> apply_differential(std::size_t p, std::span<const BigInt> f) const {
    if (f.size() != dim(p)) throw DimensionError("cochain has wrong length");
    std::vector<BigInt> out(dim(p + 1));
    for (std::size_t i = 0; i < out.size(); ++i)
      for (const auto& e : differential_row(p, i)) out[i] += e.value * f[e.col];
    return out;
  }

  /// Checks N d + d N = |G| id on C^p (p >= 1), where
  /// (N f)(g1..g_q) = sum_{g != e} f(g, g1..g_q).
  /// This identity forces every cocycle to be a rational coboundary, so
  /// H^p(G, Z) is torsion and rank d^p = dim C^p - rank d^{p-1}.
  bool verify_rational_contraction(std::size_t p) const {
    if (p == 0) return false;
    const std::size_t n = group_.order();
    const std::size_t dp = dim(p), dpm1 = dim(p - 1);
    std::vector<long long> acc(dp, 0);
    std::vector<std::size_t> mark(dp, dp);
    std::vector<std::size_t> touched;
    for (std::size_t tau = 0; tau < dp; ++tau) {
      touched.clear();
      auto add = [&](std::size_t col, long long v) {
        if (mark[col] != tau) {
          mark[col] = tau;
          touched.push_back(col);
        }
        acc[col] += v;
      };
      for (std::size_t g = 0; g < base(); ++g)
        for (const auto& e : differential_row(p, g * dp + tau)) add(e.col, static_cast<long long>(e.value));
      for (const auto& e : differential_row(p - 1, tau))
        for (std::size_t g = 0; g < base(); ++g) add(g * dpm1 + e.col, static_cast<long long>(e.value));
      bool ok = true;
      for (std::size_t col : touched) {
        const long long want = col == tau ? static_cast<long long>(n) : 0;
        if (acc[col] != want) ok = false;
        acc[col] = 0;
      }
      if (!ok || mark[tau] != tau) return false;
    }
    return true;
  }

  /// (x cup c)(g1..g_{p+2}) = x(g1..gp) c(g_{p+1}, g_{p+2}).
  std::vector<BigInt> cup_with(std::span<const BigInt> x, std::size_t p, const CocycleTable& c) const {
    if (x.size() != dim(p)) throw DimensionError("cochain has wrong length");
    const std::size_t b2 = dim(2);
    std::vector<BigInt> out(dim(p + 2));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < b2; ++j) {
        const BigInt& cv = c(element_[j / base()], element_[j % base()]);
        if (cv != 0) out[i * b2 + j] = x[i] * cv;
      }
    }
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  GroupTable group_;
  std::vector<std::size_t> element_;
  std::vector<std::size_t> label_;
};

/// H^p(Z/n, Z): Z in degree 0, 0 in odd degrees, Z/n in positive even degrees.
inline FgAbGroup cyclic_cohomology(std::size_t n, std::size_t p) {
  if (n == 0) throw DomainError("cyclic group order must be positive");
  if (p == 0) return FgAbGroup::free(1);
  if (p % 2 == 1 || n == 1) return FgAbGroup::trivial();
  return FgAbGroup{0, {BigInt(n)}};
}

namespace detail {

// H^p together with the reducer of d^{p-1} (absent for p = 0) that reads
// coordinates of cocycles in the chosen generators.
struct DegreeData {
  CohomologyGroup cohomology;
  std::optional<SparseSmith> reducer;
};

inline void check_bar_caps(const GroupTable& g, std::size_t p, std::size_t max_order) {
  if (p > kBarMaxDegree) throw DomainError("bar cohomology is computed for degrees <= 4");
  if (g.order() > max_order)
    throw ResourceError("group order " + std::to_string(g.order()) + " exceeds the cap of " +
                        std::to_string(max_order) + " for this computation");
}

inline DegreeData compute_degree(const BarComplex& bar, std::size_t p) {
  DegreeData out;
  out.cohomology.degree = p;
  if (p == 0) {
    // d^0 is identically zero for trivial coefficients; verify rather than assume.
    SparseSmith d0(1, bar.differential(0));
    if (d0.rank() == 0) {
      out.cohomology.group = FgAbGroup::free(1);
      out.cohomology.basis_cocycles.push_back({BigInt(1)});
    }
    return out;
  }
  SparseSmith reducer(bar.dim(p - 1), bar.differential(p - 1));
  if (!bar.verify_rational_contraction(p))
    throw std::logic_error("bar complex failed the rational contraction identity");
  out.cohomology.group = FgAbGroup{0, reducer.torsion_factors()};
  for (std::size_t t = 0; t < reducer.torsion_factors().size(); ++t)
    out.cohomology.basis_cocycles.push_back(reducer.torsion_generator(t));
  out.reducer.emplace(std::move(reducer));
  return out;
}

}  // namespace detail

/// H^p(G, Z) from the normalized bar complex, |G| <= 12 and p <= 4.
inline CohomologyGroup bar_cohomology(const GroupTable& g, std::size_t p) {
  detail::check_bar_caps(g, p, kBarMaxOrder);
  return detail::compute_degree(BarComplex(g), p).cohomology;
}

/// H^2(G, C^x), identified with H^3(G, Z): the exponential sequence
/// 0 -> Z -> C -> C^x -> 0 and H^i(G, C) = 0 for i > 0 (C is divisible with
/// |G| invertible) give H^2(G, C^x) = H^3(G, Z).
inline FgAbGroup schur_multiplier(const GroupTable& g) {
  detail::check_bar_caps(g, 3, kBarMaxOrder);
  return detail::compute_degree(BarComplex(g), 3).cohomology.group;
}

/// The map H^p(G, Z) -> H^{p+2}(G, Z), x -> x cup c, in the chosen generators.
struct CohomologyMap {
  CohomologyGroup source;
  CohomologyGroup target;
  IntMatrix matrix;  // target.generator_count() x source.generator_count()

  FgAbGroup kernel() const { return abgroup::hom_kernel(source.group, target.group, matrix); }
  FgAbGroup cokernel() const { return abgroup::hom_cokernel(source.group, target.group, matrix); }
  bool is_zero() const { return matrix.is_zero(); }
};

inline CohomologyMap cup_with_class(const CocycleTable& c, std::size_t p) {
  if (p != 1 && p != 2) throw DomainError("cup_with_class: source degree must be 1 or 2");
  detail::check_bar_caps(c.group(), p + 2, kCupMaxOrder);
  const BarComplex bar(c.group());
  auto src = detail::compute_degree(bar, p);
  auto dst = detail::compute_degree(bar, p + 2);
  if (!src.cohomology.group.is_finite() || !dst.cohomology.group.is_finite())
    throw std::logic_error("cup_with_class: positive-degree cohomology must be torsion");
  const auto& gens = src.cohomology.basis_cocycles;
  IntMatrix m(dst.cohomology.group.generator_count(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const auto product = bar.cup_with(gens[j], p, c);
    const auto coords = dst.reducer->coordinates(product);
    for (const auto& f : coords.free)
      if (f != 0) throw std::logic_error("cup product is not a torsion class");
    for (std::size_t i = 0; i < coords.torsion.size(); ++i) m(i, j) = coords.torsion[i];
  }
  return CohomologyMap{std::move(src.cohomology), std::move(dst.cohomology), std::move(m)};
}

/// Br(X) when the five-term sequence only pins it down up to an extension
///   0 -> coker(H^1 -> H^3) -> Br(X) -> ker(H^2 -> H^4) -> 0
/// with both ends nonzero.
struct ConstraintReport {
  FgAbGroup h3_cokernel;
  FgAbGroup h2_kernel;
  BigInt order;
};

using HopfOutcome = std::variant<BrGroup, ConstraintReport>;

/// Hopf manifold with pi_1 a central extension of G by Z with class c.
/// The analytic part vanishes, so Br sits between coker(c on H^1) and
/// ker(c on H^2). Whenever one end is zero the answer is exact.
inline HopfOutcome hopf_brauer(const CocycleTable& c) {
  const auto low = cup_with_class(c, 1);
  const auto high = cup_with_class(c, 2);
  FgAbGroup sub = low.cokernel();
  FgAbGroup quotient = high.kernel();
  if (sub.is_trivial()) return BrGroup{0, std::move(quotient)};
  if (quotient.is_trivial()) return BrGroup{0, std::move(sub)};
  BigInt order = *sub.order() * *quotient.order();
  return ConstraintReport{std::move(sub), std::move(quotient), std::move(order)};
}

/// Cyclic G = Z/n with class residue * generator. H^1 = H^3 = 0 and the cup
/// map Z/n = H^2 -> H^4 = Z/n is multiplication by the residue, so
/// Br(X) = Z/gcd(n, residue).
inline BrGroup hopf_brauer_cyclic(std::size_t n, const BigInt& residue) {
  const FgAbGroup h2 = cyclic_cohomology(n, 2);
  const FgAbGroup h4 = cyclic_cohomology(n, 4);
  IntMatrix cup(h4.generator_count(), h2.generator_count());
  if (n > 1) {
    BigInt r = residue % n;
    if (r < 0) r += n;
    cup(0, 0) = r;
  }
  return BrGroup{0, abgroup::hom_kernel(h2, h4, cup)};
}

// ---------------------------------------------------------------------------
// Plain-text tables: first line n, then n lines of n whitespace-separated
// entries (0-based element indices for groups, integers for cocycles).
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::vector<std::string>> read_square(std::istream& in, const char* what) {
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    long long v = 0;
    if (ls >> v) {
      std::string junk;
      if (v <= 0 || (ls >> junk)) throw ParseError(std::string(what) + ": bad size line");
      n = static_cast<std::size_t>(v);
      break;
    }
  }
  if (n == 0) throw ParseError(std::string(what) + ": missing size line");
  std::vector<std::vector<std::string>> rows;
  while (rows.size() < n && std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> row;
    for (std::string tok; ls >> tok;) row.push_back(tok);
    if (row.empty()) continue;
    if (row.size() != n) throw ParseError(std::string(what) + ": row " + std::to_string(rows.size()) + " has wrong length");
    rows.push_back(std::move(row));
  }
  if (rows.size() != n) throw ParseError(std::string(what) + ": expected " + std::to_string(n) + " rows");
  return rows;
}

inline BigInt parse_integer(const std::string& tok, const char* what) {
  const bool neg = !tok.empty() && tok[0] == '-';
  const std::size_t start = (neg || (!tok.empty() && tok[0] == '+')) ? 1 : 0;
  if (start >= tok.size() || tok.find_first_not_of("0123456789", start) != std::string::npos)
    throw ParseError(std::string(what) + ": not an integer: " + tok);
  BigInt v(tok.substr(start));
  return neg ? BigInt(-v) : v;
}

}  // namespace detail

inline GroupTable parse_group_table(std::istream& in) {
  const auto rows = detail::read_square(in, "group table");
  std::vector<std::vector<std::size_t>> t(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& tok : rows[i]) {
      const BigInt v = detail::parse_integer(tok, "group table");
      if (v < 0 || v >= rows.size()) throw ParseError("group table: entry out of range: " + tok);
      t[i].push_back(static_cast<std::size_t>(v));
    }
  return GroupTable(std::move(t));
}

inline IntMatrix parse_cocycle_values(std::istream& in) {
  const auto rows = detail::read_square(in, "cocycle table");
  IntMatrix v(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) v(i, j) = detail::parse_integer(rows[i][j], "cocycle table");
  return v;
}

inline CocycleTable parse_cocycle_table(std::istream& in, const GroupTable& g) {
  return CocycleTable(g, parse_cocycle_values(in));
}

}  // namespace brauer::groupcohom
