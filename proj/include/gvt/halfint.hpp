#pragma once

#include "gvt/errors.hpp"
#include "gvt/graph.hpp"
#include "gvt/numeric.hpp"

namespace gvt {

/// Half-integer values per reference-oriented edge, stored as doubled
/// integers so that parity distinguishes integer from strictly-half levels.
class LevelVector {
  public:
    LevelVector() = default;
    explicit LevelVector(IntEV twice) : twice_(std::move(twice)) {}

    /// Embeds an integer edge vector (doubles it).
    static LevelVector from_integers(const IntEV& v) { return LevelVector(IntEV(2 * v)); }

    int size() const { return static_cast<int>(twice_.size()); }
    Int twice(int e) const { return twice_[e]; }
    Int twice(OrientedEdge oe) const { return oe.fwd ? twice_[oe.edge] : -twice_[oe.edge]; }
    bool integral(int e) const { return twice_[e] % 2 == 0; }

    Int int_level(int e) const {
        if (!integral(e)) throw ValidationError("level is not integral on edge " + std::to_string(e));
        return twice_[e] / 2;
    }
    /// Largest integer <= the level.
    Int floor_level(int e) const { return floor_div(twice_[e], 2); }
    Rat value(int e) const { return Rat(twice_[e], 2); }
    Rat value(OrientedEdge oe) const { return Rat(twice(oe), 2); }

    const IntEV& raw_twice() const { return twice_; }

    bool operator==(const LevelVector& o) const { return twice_ == o.twice_; }
    bool operator!=(const LevelVector& o) const { return !(*this == o); }

  private:
    IntEV twice_;
};

/// d* of a half-integer cochain, landing in H_{0,Q}.
inline RatVV level_d_star(const Graph& g, const LevelVector& lv) {
    RatVV out = RatVV::Zero(g.num_vertices());
    for (int e = 0; e < g.num_edges(); ++e) {
        Rat val(lv.twice(e), 2);
        out[g.head(e)] += val;
        out[g.tail(e)] -= val;
    }
    return out;
}

}  // namespace gvt
