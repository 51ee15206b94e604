#pragma once

#include <optional>
#include <vector>

#include "gvt/numeric.hpp"

namespace gvt {

/// One linear constraint  coeffs . x  (rel)  rhs.
struct LinConstraint {
    enum Rel { LE, LT, EQ };
    RatVV coeffs;
    Rat rhs;
    Rel rel = LE;
};

/// Exact feasibility and sample-point extraction for small systems of
/// linear constraints over the rationals, by Fourier-Motzkin elimination.
class LinearSystem {
  public:
    explicit LinearSystem(int num_vars) : num_vars_(num_vars) {}

    int num_vars() const { return num_vars_; }
    void add(RatVV coeffs, Rat rhs, LinConstraint::Rel rel);
    void add_le(RatVV coeffs, Rat rhs) { add(std::move(coeffs), std::move(rhs), LinConstraint::LE); }
    void add_lt(RatVV coeffs, Rat rhs) { add(std::move(coeffs), std::move(rhs), LinConstraint::LT); }
    void add_eq(RatVV coeffs, Rat rhs) { add(std::move(coeffs), std::move(rhs), LinConstraint::EQ); }

    bool feasible() const;

    /// A feasible point, if any (bounded coordinates picked mid-interval).
    std::optional<RatVV> find_point() const;

  private:
    int num_vars_;
    std::vector<LinConstraint> rows_;
};

}  // namespace gvt
