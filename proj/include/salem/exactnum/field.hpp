// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <type_traits>

#include "salem/exactnum/ball.hpp"
#include "salem/exactnum/integer.hpp"
#include "salem/exactnum/quadext.hpp"

/// Uniform element operations for Int, Rat and QuadExt so that Poly<T> and Matrix<T>
/// can stay generic.
namespace salem::elem {

template <class T>
inline constexpr bool is_field_v = std::is_same_v<T, Rat> || std::is_same_v<T, QuadExt>;

inline long field_tag(const Int&) { return 0; }
inline long field_tag(const Rat&) { return 0; }
inline long field_tag(const QuadExt& x) { return x.d(); }

inline bool is_zero(const Int& x) { return x == 0; }
inline bool is_zero(const Rat& x) { return x == 0; }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

inline int sign(const Int& x) { return sgn(x); }
inline int sign(const Rat& x) { return sgn(x); }
inline int sign(const QuadExt& x) { return x.sign(); }

inline Int conj(const Int& x) { return x; }
inline Rat conj(const Rat& x) { return x; }
inline QuadExt conj(const QuadExt& x) { return x.conj(); }

inline bool is_integral(const Int&) { return true; }
inline bool is_integral(const Rat& x) { return is_integer(x); }
inline bool is_integral(const QuadExt& x) { return x.is_integral(); }

inline Int ok_denominator(const Int&) { return 1; }
inline Int ok_denominator(const Rat& x) { return x.get_den(); }
inline Int ok_denominator(const QuadExt& x) { return x.denominator_in_ok(); }

inline RealBall to_ball(const Int& x, long prec, bool = false) { return RealBall::from_rat(Rat(x), prec); }
inline RealBall to_ball(const Rat& x, long prec, bool = false) { return RealBall::from_rat(x, prec); }
inline RealBall to_ball(const QuadExt& x, long prec, bool conjugate = false) { return x.to_ball(prec, conjugate); }

inline std::string str(const Int& x) { return x.get_str(); }
inline std::string str(const Rat& x) { return x.get_str(); }
inline std::string str(const QuadExt& x) { return x.to_string(); }

/// Zero/one carrying the same field tag as `like`.
template <class T>
T zero_like(const T&) { return T(0); }
template <class T>
T one_like(const T&) { return T(1); }
template <>
inline QuadExt zero_like(const QuadExt& like) { return QuadExt(0).in_field(like.d()); }
template <>
inline QuadExt one_like(const QuadExt& like) { return QuadExt(1).in_field(like.d()); }

inline Rat to_rat(const Int& x) { return Rat(x); }
inline Rat to_rat(const Rat& x) { return x; }
inline Rat to_rat(const QuadExt& x) {
    if (!x.is_rational())
        throw DomainError("value " + x.to_string() + " is not rational");
    return x.a();
}

inline Int to_int(const Rat& x) {
    if (!is_integer(x))
        throw DomainError("value " + x.get_str() + " is not an integer");
    return x.get_num();
}
inline Int to_int(const Int& x) { return x; }
inline Int to_int(const QuadExt& x) { return to_int(to_rat(x)); }

} // namespace salem::elem
