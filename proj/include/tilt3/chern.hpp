#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tilt3/rational.hpp"

namespace tilt3 {

// Chern character in the normalized basis {1, l, l^2/2, l^3/6} of a
// principally polarized abelian threefold with NS = Z.l and l^3 = 6:
// ch = (a0, a1*l, a2*l^2/2, a3*l^3/6), written (a0, a1, a2, a3).
//
// Entries are rationals even though honest objects have integer entries:
// B-field twists produce half/quarter-integers and must live in the same
// type.  Integrality is a predicate, not a type constraint.
struct ChernVector {
  Rational a0, a1, a2, a3;

  ChernVector() : a0(0), a1(0), a2(0), a3(0) {}
  ChernVector(Rational v0, Rational v1, Rational v2, Rational v3)
      : a0(std::move(v0)), a1(std::move(v1)), a2(std::move(v2)), a3(std::move(v3)) {}

  static ChernVector of_ints(long v0, long v1, long v2, long v3) {
    return ChernVector(make_rational(v0), make_rational(v1), make_rational(v2),
                       make_rational(v3));
  }

  bool is_zero() const {
    return sgn(a0) == 0 && sgn(a1) == 0 && sgn(a2) == 0 && sgn(a3) == 0;
  }
  bool is_integral() const {
    return is_integer(a0) && is_integer(a1) && is_integer(a2) && is_integer(a3);
  }

  const Rational& component(int i) const {
    switch (i) {
      case 0: return a0;
      case 1: return a1;
      case 2: return a2;
      default: return a3;
    }
  }

  friend bool operator==(const ChernVector& x, const ChernVector& y) {
    return x.a0 == y.a0 && x.a1 == y.a1 && x.a2 == y.a2 && x.a3 == y.a3;
  }
  friend bool operator!=(const ChernVector& x, const ChernVector& y) {
    return !(x == y);
  }
  friend ChernVector operator+(const ChernVector& x, const ChernVector& y) {
    return ChernVector(x.a0 + y.a0, x.a1 + y.a1, x.a2 + y.a2, x.a3 + y.a3);
  }
  friend ChernVector operator-(const ChernVector& x, const ChernVector& y) {
    return ChernVector(x.a0 - y.a0, x.a1 - y.a1, x.a2 - y.a2, x.a3 - y.a3);
  }
  ChernVector operator-() const { return ChernVector(-a0, -a1, -a2, -a3); }
  friend ChernVector operator*(const Rational& c, const ChernVector& v) {
    return ChernVector(c * v.a0, c * v.a1, c * v.a2, c * v.a3);
  }
};

// The transform with Poincare-bundle kernel acts on characters as the linear
// map (a0, a1, a2, a3) -> (a3, -a2, a1, -a0); applying it twice gives -id.
inline ChernVector fmt_phi(const ChernVector& v) {
  return ChernVector(v.a3, -v.a2, v.a1, -v.a0);
}

// Cup product with e^{t*l} in the normalized basis.
inline ChernVector exp_twist(const ChernVector& v, const Rational& t) {
  return ChernVector(v.a0,
                     v.a1 + t * v.a0,
                     v.a2 + 2 * t * v.a1 + t * t * v.a0,
                     v.a3 + 3 * t * v.a2 + 3 * t * t * v.a1 + t * t * t * v.a0);
}

// Tensoring by the k-th power of the polarization.
inline ChernVector tensor_L(const ChernVector& v, long k) {
  return exp_twist(v, make_rational(k));
}

// Homological shift [n]: multiplies the character by (-1)^n.
inline ChernVector shift(const ChernVector& v, long n) {
  return (n % 2 == 0) ? v : -v;
}

// Derived dual RHom(-, O)[3]: the dual negates odd components, the odd
// shift then negates everything, leaving (-a0, a1, -a2, a3).
inline ChernVector derived_dual(const ChernVector& v) {
  return ChernVector(-v.a0, v.a1, -v.a2, v.a3);
}

// Functor pipelines are data so the CLI can serialize them.  Psi and PsiHat
// are the composites L.Phi and Phi.L^{-1}[1].
//
// Pullback by the inversion of the group law is the identity on this
// lattice: every class here is a power of l in even cohomology, which
// inversion fixes.  Composites that formally carry an inversion therefore
// act through their shift alone.
struct FunctorTag {
  enum class Kind { Phi, TensorL, Shift, Psi, PsiHat, DerivedDual };

  Kind kind;
  long arg = 0;

  static FunctorTag phi() { return {Kind::Phi, 0}; }
  static FunctorTag tensor(long k) { return {Kind::TensorL, k}; }
  static FunctorTag shift_by(long n) { return {Kind::Shift, n}; }
  static FunctorTag psi() { return {Kind::Psi, 0}; }
  static FunctorTag psi_hat() { return {Kind::PsiHat, 0}; }
  static FunctorTag dual() { return {Kind::DerivedDual, 0}; }

  friend bool operator==(const FunctorTag& a, const FunctorTag& b) {
    return a.kind == b.kind && a.arg == b.arg;
  }
};

inline ChernVector apply_one(const FunctorTag& tag, const ChernVector& v) {
  switch (tag.kind) {
    case FunctorTag::Kind::Phi: return fmt_phi(v);
    case FunctorTag::Kind::TensorL: return tensor_L(v, tag.arg);
    case FunctorTag::Kind::Shift: return shift(v, tag.arg);
    case FunctorTag::Kind::Psi: return tensor_L(fmt_phi(v), 1);
    case FunctorTag::Kind::PsiHat: return shift(fmt_phi(tensor_L(v, -1)), 1);
    case FunctorTag::Kind::DerivedDual: return derived_dual(v);
  }
  return v;
}

// Folds the tag list over v with the rightmost tag acting first, matching
// functor composition order.
inline ChernVector apply(std::span<const FunctorTag> tags, ChernVector v) {
  for (auto it = tags.rbegin(); it != tags.rend(); ++it) v = apply_one(*it, v);
  return v;
}

inline ChernVector apply(std::initializer_list<FunctorTag> tags, const ChernVector& v) {
  return apply(std::span<const FunctorTag>(tags.begin(), tags.size()), v);
}

// Text form "a0,a1,a2,a3" with each entry "p" or "p/q".
inline std::string to_string(const ChernVector& v) {
  return to_string(v.a0) + "," + to_string(v.a1) + "," + to_string(v.a2) + "," +
         to_string(v.a3);
}

inline ChernVector parse_chern(std::string_view text) {
  std::size_t pos = 0;
  Rational parts[4];
  for (int i = 0; i < 4; ++i) {
    parts[i] = detail::parse_rational_at(text, pos);
    if (i < 3) {
      if (pos >= text.size() || text[pos] != ',')
        throw ParseError("expected ',' in character '" + std::string(text) + "'");
      ++pos;
    }
  }
  if (pos != text.size())
    throw ParseError("trailing characters in character '" + std::string(text) +
                     "'");
  return ChernVector(parts[0], parts[1], parts[2], parts[3]);
}

// Pipeline syntax: comma list of phi | dual | psi | psihat | shift:N |
// tensor:K, rightmost acting first, e.g. "shift:1,phi,tensor:-1".
inline std::vector<FunctorTag> parse_functor_tags(std::string_view text) {
  std::vector<FunctorTag> tags;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    std::string_view name = item;
    long arg = 0;
    bool has_arg = false;
    if (std::size_t colon = item.find(':'); colon != std::string_view::npos) {
      name = item.substr(0, colon);
      std::string_view arg_text = item.substr(colon + 1);
      std::size_t pos = 0;
      Rational r = detail::parse_rational_at(arg_text, pos);
      if (pos != arg_text.size() || !is_integer(r))
        throw ParseError("functor argument must be an integer in '" +
                         std::string(item) + "'");
      arg = r.get_num().get_si();
      has_arg = true;
    }
    if (name == "phi" && !has_arg) tags.push_back(FunctorTag::phi());
    else if (name == "dual" && !has_arg) tags.push_back(FunctorTag::dual());
    else if (name == "psi" && !has_arg) tags.push_back(FunctorTag::psi());
    else if (name == "psihat" && !has_arg) tags.push_back(FunctorTag::psi_hat());
    else if (name == "shift" && has_arg) tags.push_back(FunctorTag::shift_by(arg));
    else if (name == "tensor" && has_arg) tags.push_back(FunctorTag::tensor(arg));
    else
      throw ParseError("unknown functor '" + std::string(item) + "'");
    if (end == text.size()) break;
    start = end + 1;
  }
  if (tags.empty()) throw ParseError("empty functor pipeline");
  return tags;
}

}  // namespace tilt3
