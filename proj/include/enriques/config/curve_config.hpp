#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "enriques/derivations/derivation.hpp"

namespace enriques::config {

using IntMatrix = std::vector<std::vector<long>>;
using derivations::DivisorCombination;

/// Named curve classes with their intersection (Gram) matrix.
class CurveConfig {
public:
    CurveConfig() = default;
    /// Throws InvalidParameter unless gram is square, symmetric and matches names.
    CurveConfig(std::vector<std::string> names, IntMatrix gram, std::vector<std::string> tags = {});

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<std::string>& tags() const noexcept { return tags_; }
    const IntMatrix& gram() const noexcept { return gram_; }

    /// Throws UnknownCurveName.
    std::size_t index_of(const std::string& name) const;
    bool contains(const std::string& name) const noexcept { return index_.count(name) != 0; }
    long pairing(const std::string& a, const std::string& b) const { return gram_[index_of(a)][index_of(b)]; }

    /// Sub-configuration on the listed curves, in the given order.
    CurveConfig restricted(const std::vector<std::string>& names) const;

    friend bool operator==(const CurveConfig& a, const CurveConfig& b) {
        return a.names_ == b.names_ && a.gram_ == b.gram_;
    }

private:
    std::vector<std::string> names_;
    IntMatrix gram_;
    std::vector<std::string> tags_;
    std::map<std::string, std::size_t> index_;
};

/// The 34 curves on the K3 cover: the two I_10 decagons (F1, E1_1..E1_9 and
/// Finf, Einf_1..Einf_9), the two I_2 fibers (Fw, Ew and Fw2, Ew2) and the
/// ten sections s0..s4, m0..m4.
CurveConfig build_Y_config();

/// Bilinear extension of the Gram matrix. Throws UnknownCurveName.
long divisor_pairing(const CurveConfig& cfg, const DivisorCombination& d1, const DivisorCombination& d2);

/// The full fiber class at a place of the Y configuration: "1", "inf", "w", "w2".
DivisorCombination fiber_class(const std::string& place);

/// Images of all non-integral curves (primed names) under the inseparable
/// quotient followed by contracting the images of the integral curves:
///   <C', D'> = 2 <C, D> + sum_e <C, e><D, e>.
/// Throws IntegralSetInvalid unless the integral curves are pairwise
/// disjoint (-2)-curves, and UnknownCurveName.
CurveConfig quotient_images(const CurveConfig& cfg, const std::vector<std::string>& integral_set);

/// quotient_images restricted to the images that are (-2)-curves.
CurveConfig quotient_blowdown_gram(const CurveConfig& cfg, const std::vector<std::string>& integral_set);

/// The twelve integral curves (the support of the divisorial part of D).
std::vector<std::string> integral_set_D();

struct LatticeInvariants {
    int rank;
    int n_plus;
    int n_minus;
    int n_zero;
    /// Determinant of the form on Z^n / radical: (-1)^n_minus times the
    /// product of the nonzero Smith invariants of the Gram matrix. 1 for the
    /// zero lattice.
    std::string determinant;
    /// Nonzero Smith invariants d1 | d2 | ... .
    std::vector<std::string> smith_invariants;
};

LatticeInvariants lattice_invariants(const IntMatrix& gram);
inline LatticeInvariants lattice_invariants(const CurveConfig& cfg) { return lattice_invariants(cfg.gram()); }

/// Inertia by exact symmetric elimination over the rationals: {n+, n-, n0}.
std::array<int, 3> signature(const IntMatrix& gram);

/// Figure-style E10 graph: a path E1 - ... - E9 with E10 attached to E3.
CurveConfig build_e10_config();

/// "Y34", "X20", "E10". Throws UnknownBuiltin.
CurveConfig builtin_config(const std::string& name);

}  // namespace enriques::config
