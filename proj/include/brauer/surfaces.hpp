#pragma once

// Brauer groups of the classified complex-analytic surfaces and manifolds:
// compact surfaces from (b2, rho, T), Hopf manifolds, Inoue surfaces S_M,
// complex tori, class VII, GSS, Stein, holomorphically convex and
// noncompact surfaces.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "brauer/abgroup.hpp"
#include "brauer/errors.hpp"
#include "brauer/exactla.hpp"
#include "brauer/group_types.hpp"
#include "brauer/groupcohom.hpp"

namespace brauer::surfaces {

using exactla::IntMatrix;

struct CompactGeneric {
  std::uint64_t b2 = 0;
  std::uint64_t picardNumber = 0;
  FgAbGroup torsionH3;
};

/// G is either a cyclic order or an explicit table; the extension class is
/// either a residue (cyclic G only) or raw cocycle values.
struct Hopf {
  std::variant<std::uint64_t, groupcohom::GroupTable> G;
  std::variant<BigInt, IntMatrix> extensionClass;
};

struct InoueSM {
  /// Either the 3x3 matrix M or the coefficients (a0, a1, a2) of
  /// p(T) = T^3 + a2 T^2 + a1 T + a0, expanded to its companion matrix.
  std::variant<IntMatrix, std::array<BigInt, 3>> M;
  bool allowNonSL3 = false;
};

struct Torus {
  std::uint64_t complexDim = 0;
  std::uint64_t picardNumber = 0;
};

struct ClassVII {
  FgAbGroup torsionH3;
};

struct GlobalSphericalShell {};
struct Stein2D {};
struct HolomorphicallyConvex2D {};

struct NoncompactSmooth {
  FgAbGroup torsionH3;
};

using SurfaceDescriptor = std::variant<CompactGeneric, Hopf, InoueSM, Torus, ClassVII, GlobalSphericalShell,
                                       Stein2D, HolomorphicallyConvex2D, NoncompactSmooth>;

inline const char* class_name(const SurfaceDescriptor& d) {
  static constexpr const char* names[] = {"CompactGeneric", "Hopf",    "InoueSM",
                                          "Torus",          "ClassVII", "GlobalSphericalShell",
                                          "Stein2D",        "HolomorphicallyConvex2D", "NoncompactSmooth"};
  return names[d.index()];
}

// ---------------------------------------------------------------------------
// Inoue surfaces S_M
// ---------------------------------------------------------------------------

struct InoueValidationReport {
  std::array<BigInt, 3> charPoly;  // (a0, a1, a2) of det(T - M) = T^3 + a2 T^2 + a1 T + a0
  BigInt discriminant;
  BigInt pAtOne;
  BigInt detM;
  bool eigenvalueConditionHolds = false;
  bool inSL3 = false;
};

class InoueRejected : public ValidationError {
 public:
  InoueRejected(const std::string& what, InoueValidationReport report)
      : ValidationError(what), report_(std::move(report)) {}
  const InoueValidationReport& report() const { return report_; }

 private:
  InoueValidationReport report_;
};

/// Companion matrix with det(T - M) = T^3 + a2 T^2 + a1 T + a0.
inline IntMatrix companion_matrix(const std::array<BigInt, 3>& a) {
  return IntMatrix{{0, 0, -a[0]}, {1, 0, -a[1]}, {0, 1, -a[2]}};
}

inline IntMatrix inoue_matrix(const InoueSM& d) {
  if (const auto* m = std::get_if<IntMatrix>(&d.M)) return *m;
  return companion_matrix(std::get<std::array<BigInt, 3>>(d.M));
}

/// Discriminant of the monic cubic T^3 + b T^2 + c T + d.
inline BigInt cubic_discriminant(const BigInt& b, const BigInt& c, const BigInt& d) {
  return 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c - 27 * d * d;
}

/// Exact check of the S_M conditions. A monic cubic with negative
/// discriminant has exactly one real root, and that root exceeds 1 iff
/// p(1) < 0; the boundary cases disc = 0 or p(1) = 0 fail.
inline InoueValidationReport inoue_validate(const IntMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw DimensionError("Inoue matrix must be 3x3");
  const BigInt trace = m(0, 0) + m(1, 1) + m(2, 2);
  const BigInt minors = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) + (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
                        (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
  const BigInt det = exactla::determinant(m);
  InoueValidationReport r;
  r.charPoly = {-det, minors, -trace};
  r.discriminant = cubic_discriminant(r.charPoly[2], r.charPoly[1], r.charPoly[0]);
  r.pAtOne = 1 + r.charPoly[0] + r.charPoly[1] + r.charPoly[2];
  r.detM = det;
  r.eigenvalueConditionHolds = r.discriminant < 0 && r.pAtOne < 0;
  r.inSL3 = det == 1;
  return r;
}

inline InoueValidationReport inoue_validate(const InoueSM& d) { return inoue_validate(inoue_matrix(d)); }

/// Br(S_M) = Br'(S_M) = coker(M - id), finite since det(M - id) = -p(1) != 0.
inline BrGroup inoue_brauer(const InoueSM& d, bool allow_non_sl3 = false) {
  const IntMatrix m = inoue_matrix(d);
  auto report = inoue_validate(m);
  if (!report.eigenvalueConditionHolds)
    throw InoueRejected("Inoue matrix needs one real eigenvalue > 1 and two nonreal eigenvalues", report);
  if (!report.inSL3 && !(d.allowNonSL3 || allow_non_sl3))
    throw InoueRejected("Inoue matrix has det " + report.detM.str() + ", not in SL3(Z)", report);
  const FgAbGroup coker = exactla::cokernel(m - IntMatrix::identity(3));
  if (!coker.is_finite()) throw std::logic_error("coker(M - id) must be finite when p(1) != 0");
  if (const auto* a = std::get_if<std::array<BigInt, 3>>(&d.M)) {
    const BigInt closed_form = abs(1 + (*a)[0] + (*a)[1] + (*a)[2]);
    if (*coker.order() != closed_form || coker.invariant_factors().size() > 1)
      throw std::logic_error("coker(M - id) disagrees with the companion closed form");
  }
  return BrGroup{0, coker};
}

// ---------------------------------------------------------------------------
// Complex tori C^n / Lambda: H^i(X, Z) = Hom(Lambda^i Lambda, Z), free.
// ---------------------------------------------------------------------------

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline BigInt torus_cohomology_rank(std::uint64_t complex_dim, std::uint64_t degree) {
  if (degree > 2 * complex_dim) throw DomainError("torus cohomology degree out of range");
  return binomial(2 * complex_dim, degree);
}

// ---------------------------------------------------------------------------
// Dispatcher
// ---------------------------------------------------------------------------

enum class Certification {
  BrEqualsBrPrime,   // Br = Br' established for this class
  Conditional,       // Br = Br' holds if the GSS conjecture does
  FullH2,            // the value is H^2(S, O^x) (noncompact classes)
};

struct BrauerResult {
  std::variant<BrGroup, groupcohom::ConstraintReport> value;
  Certification certification = Certification::BrEqualsBrPrime;
  std::string provenance;
  std::optional<InoueValidationReport> inoue;
  std::vector<std::string> warnings;

  bool exact() const { return std::holds_alternative<BrGroup>(value); }
  const BrGroup& group() const { return std::get<BrGroup>(value); }
};

struct ComputeOptions {
  bool allowNonSL3 = false;
};

inline void require_finite(const FgAbGroup& t, const char* field) {
  if (!t.is_finite()) throw DomainError(std::string(field) + " must be a finite group");
}

namespace detail {

inline groupcohom::HopfOutcome hopf_outcome(const Hopf& h) {
  if (const auto* n = std::get_if<std::uint64_t>(&h.G)) {
    if (*n == 0) throw DomainError("Hopf: cyclic order must be positive");
    if (const auto* r = std::get_if<BigInt>(&h.extensionClass)) return groupcohom::hopf_brauer_cyclic(*n, *r);
    const auto table = groupcohom::GroupTable::cyclic(*n);
    return groupcohom::hopf_brauer(groupcohom::CocycleTable(table, std::get<IntMatrix>(h.extensionClass)));
  }
  const auto& table = std::get<groupcohom::GroupTable>(h.G);
  if (const auto* r = std::get_if<BigInt>(&h.extensionClass)) {
    if (!table.is_cyclic()) throw ValidationError("Hopf: a residue extension class requires a cyclic group");
    return groupcohom::hopf_brauer_cyclic(table.order(), *r);
  }
  return groupcohom::hopf_brauer(groupcohom::CocycleTable(table, std::get<IntMatrix>(h.extensionClass)));
}

}  // namespace detail

inline BrauerResult compute_brauer(const SurfaceDescriptor& d, const ComputeOptions& opts = {}) {
  BrauerResult out;
  const auto exact = [&](BrGroup g, Certification c, std::string label) {
    out.value = std::move(g);
    out.certification = c;
    out.provenance = std::move(label);
  };
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CompactGeneric>) {
          require_finite(s.torsionH3, "torsionH3");
          if (s.picardNumber > s.b2) throw DomainError("picardNumber exceeds b2");
          exact(abgroup::assemble_brauer(s.b2 - s.picardNumber, s.torsionH3), Certification::BrEqualsBrPrime,
                "Br=Br' (compact surface, (Q/Z)^(b2-rho) + T)");
        } else if constexpr (std::is_same_v<T, Hopf>) {
          auto outcome = detail::hopf_outcome(s);
          if (auto* g = std::get_if<BrGroup>(&outcome)) {
            exact(std::move(*g), Certification::BrEqualsBrPrime, "Br=Br' (Hopf manifold)");
          } else {
            out.value = std::get<groupcohom::ConstraintReport>(std::move(outcome));
            out.provenance = "Br=Br' (Hopf manifold); determined up to extension";
          }
        } else if constexpr (std::is_same_v<T, InoueSM>) {
          const auto report = inoue_validate(s);
          auto g = inoue_brauer(s, opts.allowNonSL3);
          if (!report.inSL3)
            out.warnings.push_back("det M = " + report.detM.str() + ", M is not in SL3(Z); computed coker(M - id) anyway");
          out.inoue = report;
          exact(std::move(g), Certification::BrEqualsBrPrime, "Br=Br' (Inoue surface S_M, coker(M-id))");
        } else if constexpr (std::is_same_v<T, Torus>) {
          if (s.complexDim == 0) throw DomainError("torus complexDim must be positive");
          const BigInt b2 = torus_cohomology_rank(s.complexDim, 2);
          if (BigInt(s.picardNumber) > b2) throw DomainError("picardNumber exceeds b2 = C(2n, 2)");
          exact(abgroup::assemble_brauer(static_cast<std::size_t>(b2 - s.picardNumber), FgAbGroup::trivial()),
                Certification::BrEqualsBrPrime, "Br=Br' (complex torus)");
        } else if constexpr (std::is_same_v<T, ClassVII>) {
          require_finite(s.torsionH3, "torsionH3");
          exact(BrGroup{0, s.torsionH3}, Certification::Conditional,
                "Br'=T (class VII); Br=Br' conditional (GSS-conjecture)");
        } else if constexpr (std::is_same_v<T, GlobalSphericalShell>) {
          exact(BrGroup{}, Certification::BrEqualsBrPrime, "Br=Br' (global spherical shell)");
        } else if constexpr (std::is_same_v<T, Stein2D>) {
          exact(BrGroup{}, Certification::FullH2, "H2(S,O^x)=0 (Stein surface)");
        } else if constexpr (std::is_same_v<T, HolomorphicallyConvex2D>) {
          exact(BrGroup{}, Certification::FullH2, "H2(S,O^x)=0 (holomorphically convex, 2-dim Stein reduction)");
        } else if constexpr (std::is_same_v<T, NoncompactSmooth>) {
          require_finite(s.torsionH3, "torsionH3");
          exact(BrGroup{0, s.torsionH3}, Certification::FullH2,
                "Br'=T (noncompact surface, H2(S,O^x)=H3(S,Z))");
        }
      },
      d);
  return out;
}

/// n-torsion of Br': the image of H^2(X, mu_n) under the Kummer sequence.
inline FgAbGroup kummer_torsion(const SurfaceDescriptor& d, const BigInt& n, const ComputeOptions& opts = {}) {
  if (n < 1) throw DomainError("kummer_torsion: n must be positive");
  const auto r = compute_brauer(d, opts);
  if (!r.exact()) throw DomainError("kummer_torsion: Brauer group is only determined up to extension");
  return abgroup::n_torsion(r.group(), n);
}

}  // namespace brauer::surfaces
