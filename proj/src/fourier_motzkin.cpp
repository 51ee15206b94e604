#include "gvt/fourier_motzkin.hpp"

#include <algorithm>

namespace gvt {

namespace {

struct Row {
    RatVV c;
    Rat rhs;
    bool strict;
};

// Positive scaling so the first nonzero coefficient is +-1; keeps the
// relation direction and makes duplicates detectable.
void normalize(Row& r) {
    for (Eigen::Index j = 0; j < r.c.size(); ++j)
        if (r.c[j] != 0) {
            Rat s = abs(r.c[j]);
            r.c /= s;
            r.rhs /= s;
            return;
        }
    if (r.rhs != 0) {
        Rat s = abs(r.rhs);
        r.rhs /= s;
    }
}

std::vector<Row> dedupe(std::vector<Row> rows) {
    auto key = [](const Row& r) {
        std::vector<std::pair<std::string, std::string>> k;
        for (Eigen::Index j = 0; j < r.c.size(); ++j)
            k.emplace_back(numerator(r.c[j]).str(), denominator(r.c[j]).str());
        k.emplace_back(rat_str(r.rhs), r.strict ? "<" : "<=");
        return k;
    };
    std::sort(rows.begin(), rows.end(),
              [&](const Row& a, const Row& b) { return key(a) < key(b); });
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [&](const Row& a, const Row& b) { return key(a) == key(b); }),
               rows.end());
    return rows;
}

// Eliminates variable `var` from `rows` (all constraints < / <=).
std::vector<Row> eliminate(const std::vector<Row>& rows, int var) {
    std::vector<const Row*> uppers, lowers;
    std::vector<Row> out;
    for (const Row& r : rows) {
        if (r.c[var] > 0)
            uppers.push_back(&r);
        else if (r.c[var] < 0)
            lowers.push_back(&r);
        else
            out.push_back(r);
    }
    for (const Row* up : uppers)
        for (const Row* lo : lowers) {
            // up: a x_var + ... <= b   (a > 0);  lo: -a' x_var + ... <= b' (a' > 0)
            Rat a = up->c[var], ap = -lo->c[var];
            Row combined;
            combined.c = ap * up->c + a * lo->c;
            combined.rhs = ap * up->rhs + a * lo->rhs;
            combined.strict = up->strict || lo->strict;
            normalize(combined);
            out.push_back(std::move(combined));
        }
    return dedupe(std::move(out));
}

bool trivially_consistent(const Row& r) {
    return r.strict ? (r.rhs > 0) : (r.rhs >= 0);
}

}  // namespace

void LinearSystem::add(RatVV coeffs, Rat rhs, LinConstraint::Rel rel) {
    rows_.push_back({std::move(coeffs), std::move(rhs), rel});
}

bool LinearSystem::feasible() const { return find_point().has_value(); }

std::optional<RatVV> LinearSystem::find_point() const {
    std::vector<Row> rows;
    for (const LinConstraint& lc : rows_) {
        Row r{lc.coeffs, lc.rhs, lc.rel == LinConstraint::LT};
        normalize(r);
        rows.push_back(r);
        if (lc.rel == LinConstraint::EQ) {
            Row nr{-lc.coeffs, -lc.rhs, false};
            normalize(nr);
            rows.push_back(nr);
        }
    }
    rows = dedupe(std::move(rows));

    // stages[k] holds the system before eliminating variable k.
    std::vector<std::vector<Row>> stages;
    stages.push_back(rows);
    for (int var = 0; var < num_vars_; ++var)
        stages.push_back(eliminate(stages.back(), var));

    for (const Row& r : stages.back())
        if (!trivially_consistent(r)) return std::nullopt;

    RatVV x = RatVV::Zero(num_vars_);
    for (int var = num_vars_ - 1; var >= 0; --var) {
        bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
        Rat lo, hi;
        for (const Row& r : stages[var]) {
            if (r.c[var] == 0) continue;
            Rat rest = r.rhs;
            for (int j = var + 1; j < num_vars_; ++j) rest -= r.c[j] * x[j];
            Rat bound = rest / r.c[var];
            if (r.c[var] > 0) {  // x_var <= bound
                if (!has_hi || bound < hi) {
                    hi = bound;
                    hi_strict = r.strict;
                } else if (bound == hi) {
                    hi_strict = hi_strict || r.strict;
                }
                has_hi = true;
            } else {  // x_var >= bound
                if (!has_lo || bound > lo) {
                    lo = bound;
                    lo_strict = r.strict;
                } else if (bound == lo) {
                    lo_strict = lo_strict || r.strict;
                }
                has_lo = true;
            }
        }
        if (has_lo && has_hi) {
            if (lo == hi) {
                if (lo_strict || hi_strict) return std::nullopt;
                x[var] = lo;
            } else if (lo < hi) {
                x[var] = (lo + hi) / 2;
            } else {
                return std::nullopt;
            }
        } else if (has_lo) {
            x[var] = lo_strict ? lo + 1 : lo;
        } else if (has_hi) {
            x[var] = hi_strict ? hi - 1 : hi;
        } else {
            x[var] = 0;
        }
    }

    // FM guarantees feasibility of the eliminated system; the chosen point
    // must satisfy the original rows exactly.
    for (const LinConstraint& lc : rows_) {
        Rat lhs = 0;
        for (int j = 0; j < num_vars_; ++j) lhs += lc.coeffs[j] * x[j];
        bool ok = lc.rel == LinConstraint::LE   ? lhs <= lc.rhs
                  : lc.rel == LinConstraint::LT ? lhs < lc.rhs
                                                : lhs == lc.rhs;
        if (!ok) return std::nullopt;
    }
    return x;
}

}  // namespace gvt
