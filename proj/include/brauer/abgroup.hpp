#pragma once

// Finitely generated abelian groups and groups of shape (Q/Z)^q + T.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "brauer/exactla.hpp"
#include "brauer/group_types.hpp"

namespace brauer::abgroup {

using exactla::IntMatrix;

/// Z^free_rank + Z/a1 + ... + Z/ak for arbitrary a_i >= 0, canonicalized
/// through Smith normal form of the relation diagonal. a_i = 0 adds a free
/// summand; a_i = 1 contributes nothing.
inline FgAbGroup from_cyclic_orders(std::size_t free_rank, std::span<const BigInt> orders) {
  for (const auto& a : orders)
    if (a < 0) throw DomainError("cyclic orders must be nonnegative");
  if (orders.empty()) return FgAbGroup::free(free_rank);
  const IntMatrix relations = IntMatrix::diagonal(orders);
  const FgAbGroup g = exactla::cokernel(relations);
  return FgAbGroup{free_rank + g.free_rank(), g.invariant_factors()};
}

inline FgAbGroup from_cyclic_orders(std::size_t free_rank, std::initializer_list<BigInt> orders) {
  return from_cyclic_orders(free_rank, std::span<const BigInt>(orders.begin(), orders.size()));
}

/// G (x) Q/Z. Torsion dies since Z/d (x) Q/Z = 0; each Z becomes Q/Z.
inline BrGroup tensor_QZ(const FgAbGroup& g) { return BrGroup{g.free_rank(), FgAbGroup::trivial()}; }

/// Tor_1(G, Q/Z), the torsion subgroup of G.
inline FgAbGroup tor1_QZ(const FgAbGroup& g) { return g.torsion(); }

/// (Q/Z)^transcendental_rank + T: the split form of
/// 0 -> A (x) Q/Z -> Br' -> T -> 0, split because A (x) Q/Z is divisible.
inline BrGroup assemble_brauer(std::size_t transcendental_rank, const FgAbGroup& t) {
  if (!t.is_finite()) throw DomainError("assemble_brauer: topological part must be finite");
  return BrGroup{transcendental_rank, t};
}

/// n-torsion subgroup: (Z/n)^q + sum_i Z/gcd(n, d_i).
inline FgAbGroup n_torsion(const BrGroup& b, const BigInt& n) {
  if (n < 1) throw DomainError("n_torsion: n must be positive");
  std::vector<BigInt> orders(b.divisible_rank(), n);
  for (const auto& d : b.torsion().invariant_factors()) orders.push_back(gcd(n, d));
  return from_cyclic_orders(0, orders);
}

namespace detail {

inline void append_torsion(std::string& out, const std::vector<BigInt>& factors) {
  for (const auto& d : factors) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.str();
  }
}

inline void append_power(std::string& out, const char* base, std::size_t r) {
  if (r == 0) return;
  if (!out.empty()) out += " + ";
  out += base;
  if (r > 1) out += "^" + std::to_string(r);
}

}  // namespace detail

/// Canonical text: "Z^r + (Q/Z)^q + Z/d1 + Z/d2 ...", "0" for the trivial group.
inline std::string to_string(const FgAbGroup& g) {
  std::string out;
  detail::append_power(out, "Z", g.free_rank());
  detail::append_torsion(out, g.invariant_factors());
  return out.empty() ? "0" : out;
}

inline std::string to_string(const BrGroup& b) {
  std::string out;
  detail::append_power(out, "(Q/Z)", b.divisible_rank());
  detail::append_torsion(out, b.torsion().invariant_factors());
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Homomorphisms between finitely generated abelian groups.
//
// A canonical group G is presented as Z^k / diag(a) with generators ordered
// free first (a_i = 0) then torsion (a_i = d_i). A homomorphism G -> H is an
// integer matrix of shape H.generator_count() x G.generator_count().
// ---------------------------------------------------------------------------

inline std::vector<BigInt> relation_orders(const FgAbGroup& g) {
  std::vector<BigInt> a(g.free_rank(), BigInt(0));
  a.insert(a.end(), g.invariant_factors().begin(), g.invariant_factors().end());
  return a;
}

namespace detail {

inline void check_hom_shape(const FgAbGroup& src, const FgAbGroup& dst, const IntMatrix& phi) {
  if (phi.rows() != dst.generator_count() || phi.cols() != src.generator_count())
    throw DimensionError("homomorphism matrix shape does not match its groups");
}

// [phi | diag(b)] : Z^(k+l) -> Z^l
inline IntMatrix augmented(const IntMatrix& phi, std::span<const BigInt> b) {
  IntMatrix m(phi.rows(), phi.cols() + phi.rows());
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    for (std::size_t j = 0; j < phi.cols(); ++j) m(i, j) = phi(i, j);
    m(i, phi.cols() + i) = b[i];
  }
  return m;
}

}  // namespace detail

/// Checks that phi respects the relations of src.
inline void validate_hom(const FgAbGroup& src, const FgAbGroup& dst, const IntMatrix& phi) {
  detail::check_hom_shape(src, dst, phi);
  const auto a = relation_orders(src);
  const auto b = relation_orders(dst);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const BigInt v = a[j] * phi(i, j);
      if (b[i] == 0 ? v != 0 : v % b[i] != 0)
        throw DomainError("matrix does not define a homomorphism of the given groups");
    }
  }
}

inline FgAbGroup hom_cokernel(const FgAbGroup& src, const FgAbGroup& dst, const IntMatrix& phi) {
  validate_hom(src, dst, phi);
  if (dst.generator_count() == 0) return FgAbGroup::trivial();
  const auto b = relation_orders(dst);
  return exactla::cokernel(detail::augmented(phi, b));
}

inline FgAbGroup hom_kernel(const FgAbGroup& src, const FgAbGroup& dst, const IntMatrix& phi) {
  validate_hom(src, dst, phi);
  const std::size_t k = src.generator_count();
  if (k == 0) return FgAbGroup::trivial();
  if (dst.generator_count() == 0) return src;
  const auto a = relation_orders(src);
  const auto b = relation_orders(dst);

  // P = {x in Z^k : phi x in diag(b) Z^l}, generated by the projection of
  // ker [phi | diag(b)] onto the first k coordinates.
  const IntMatrix full = exactla::kernel_basis(detail::augmented(phi, b));
  if (full.cols() == 0) return FgAbGroup::trivial();
  IntMatrix gens(k, full.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < full.cols(); ++j) gens(i, j) = full(i, j);
  if (gens.is_zero()) return FgAbGroup::trivial();

  // Basis of P from U * gens * V = D: the vectors d_i * U^{-1} e_i. A relation
  // vector r has coordinates (U r)_i / d_i in that basis.
  const auto s = exactla::snf(gens);
  const std::size_t t = s.rank();
  std::vector<std::size_t> rel_cols;
  for (std::size_t j = 0; j < k; ++j)
    if (a[j] != 0) rel_cols.push_back(j);
  if (rel_cols.empty()) return FgAbGroup::free(t);
  IntMatrix coords(t, rel_cols.size());
  for (std::size_t c = 0; c < rel_cols.size(); ++c) {
    const std::size_t j = rel_cols[c];
    for (std::size_t i = 0; i < k; ++i) {
      const BigInt ur = s.U(i, j) * a[j];
      if (i < t) {
        if (ur % s.D(i, i) != 0) throw DomainError("hom_kernel: relation outside the preimage lattice");
        coords(i, c) = ur / s.D(i, i);
      } else if (ur != 0) {
        throw DomainError("hom_kernel: relation outside the preimage lattice");
      }
    }
  }
  if (t == 0) return FgAbGroup::trivial();
  return exactla::cokernel(coords);
}

}  // namespace brauer::abgroup
