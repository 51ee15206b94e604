#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "gvt/errors.hpp"

namespace gvt {

using Int = long long;
using BigInt = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Vertex-indexed column vector: an element of C^0(G, S).
template <class S>
using VertexVec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Edge-indexed column vector: an element of C^1(G, S) stored on the
/// reference orientations; the value on a reversed edge is the negation.
template <class S>
using EdgeVec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using IntVV = VertexVec<Int>;
using IntEV = EdgeVec<Int>;
using RatVV = VertexVec<Rat>;
using RatEV = EdgeVec<Rat>;
using RatMat = Mat<Rat>;
using BigMat = Mat<BigInt>;

/// Floor division for b > 0.
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Parses "p", "-p" or "p/q" into an exact rational.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ValidationError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw ValidationError("zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw ValidationError("bad rational literal '" + s + "'");
    }
}

/// Canonical "p/q" form (denominator always printed).
inline std::string rat_str(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

template <class S>
VertexVec<S> to_scalar_vv(const IntVV& v) {
    VertexVec<S> out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = S(v[i]);
    return out;
}

template <class S>
EdgeVec<S> to_scalar_ev(const IntEV& v) {
    EdgeVec<S> out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = S(v[i]);
    return out;
}

inline RatVV to_rat(const IntVV& v) { return to_scalar_vv<Rat>(v); }
inline RatEV to_rat_ev(const IntEV& v) { return to_scalar_ev<Rat>(v); }

}  // namespace gvt
