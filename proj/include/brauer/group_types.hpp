#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "brauer/errors.hpp"

namespace brauer {

using BigInt = boost::multiprecision::cpp_int;

/// Finitely generated abelian group Z^freeRank + Z/d1 + ... + Z/dk in
/// invariant-factor form: every d_i >= 2 and d_i | d_{i+1}.
///
/// The constructor only accepts canonical data; arbitrary presentations are
/// canonicalized by abgroup::from_cyclic_orders or exactla::cokernel.
class FgAbGroup {
 public:
  FgAbGroup() = default;

  explicit FgAbGroup(std::size_t free_rank, std::vector<BigInt> invariant_factors = {})
      : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] < 2) {
        throw DomainError("invariant factors must be >= 2");
      }
      if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
        throw DomainError("invariant factors must form a divisibility chain");
      }
    }
  }

  static FgAbGroup trivial() { return FgAbGroup{}; }
  static FgAbGroup free(std::size_t rank) { return FgAbGroup{rank}; }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<BigInt>& invariant_factors() const { return factors_; }

  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }

  /// Number of generators of the canonical presentation.
  std::size_t generator_count() const { return free_rank_ + factors_.size(); }

  /// Order of a finite group; nullopt when the free rank is positive.
  std::optional<BigInt> order() const {
    if (free_rank_ != 0) return std::nullopt;
    BigInt n = 1;
    for (const auto& d : factors_) n *= d;
    return n;
  }

  FgAbGroup torsion() const { return FgAbGroup{0, factors_}; }

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<BigInt> factors_;
};

/// (Q/Z)^divisibleRank + T with T finite. The divisible part is symbolic.
class BrGroup {
 public:
  BrGroup() = default;

  BrGroup(std::size_t divisible_rank, FgAbGroup torsion)
      : divisible_rank_(divisible_rank), torsion_(std::move(torsion)) {
    if (!torsion_.is_finite()) {
      throw DomainError("torsion part of a BrGroup must be finite");
    }
  }

  std::size_t divisible_rank() const { return divisible_rank_; }
  const FgAbGroup& torsion() const { return torsion_; }

  bool is_trivial() const { return divisible_rank_ == 0 && torsion_.is_trivial(); }

  /// Order when finite (no divisible part).
  std::optional<BigInt> order() const {
    if (divisible_rank_ != 0) return std::nullopt;
    return torsion_.order();
  }

  friend bool operator==(const BrGroup&, const BrGroup&) = default;

 private:
  std::size_t divisible_rank_ = 0;
  FgAbGroup torsion_;
};

}  // namespace brauer
