#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "phipoly/numeric.hpp"

namespace phipoly {

// An element of the divisible closure of a value group: a vector of exact
// rationals, ordered lexicographically. Rank 1 is the ordinary rational line
// (the p-adic case); rank r models Z^r with the lexicographic order.
class ValueVec {
 public:
  ValueVec() : comps_(1, Rat(0)) {}
  explicit ValueVec(Rat r) : comps_{std::move(r)} {}
  explicit ValueVec(long v) : comps_{Rat(v)} {}
  explicit ValueVec(std::vector<Rat> comps);

  static ValueVec zero(int rank);

  int rank() const { return static_cast<int>(comps_.size()); }
  const Rat& operator[](std::size_t i) const { return comps_[i]; }
  const std::vector<Rat>& components() const { return comps_; }

  bool is_zero() const;
  bool is_integral() const;
  // Lexicographic sign: sign of the first nonzero component, 0 if zero.
  int sign() const;

  ValueVec operator+(const ValueVec& o) const;
  ValueVec operator-(const ValueVec& o) const;
  ValueVec operator-() const;
  ValueVec scaled(const Rat& f) const;

  // Lexicographic order. Translation-invariant, as a totally ordered
  // abelian group must be.
  friend int cmp(const ValueVec& a, const ValueVec& b);
  friend bool operator==(const ValueVec& a, const ValueVec& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const ValueVec& a, const ValueVec& b) { return cmp(a, b) != 0; }
  friend bool operator<(const ValueVec& a, const ValueVec& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const ValueVec& a, const ValueVec& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const ValueVec& a, const ValueVec& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const ValueVec& a, const ValueVec& b) { return cmp(a, b) >= 0; }

  // "5/4" at rank 1, "(1/2, 0)" at higher rank.
  std::string to_string() const;

 private:
  std::vector<Rat> comps_;
};

// A value group extended with +infinity, the valuation of 0. INFINITY is a
// distinct tagged case, never a sentinel number: it absorbs addition and
// exceeds every finite value.
class ExtendedValue {
 public:
  static ExtendedValue infinity() { return ExtendedValue(std::nullopt); }
  static ExtendedValue finite(ValueVec v) { return ExtendedValue(std::move(v)); }
  static ExtendedValue finite(long v) { return finite(ValueVec(v)); }
  static ExtendedValue finite(Rat v) { return finite(ValueVec(std::move(v))); }

  bool is_infinite() const { return !v_.has_value(); }
  bool is_finite() const { return v_.has_value(); }
  bool is_zero() const { return v_.has_value() && v_->is_zero(); }
  const ValueVec& value() const;

  ExtendedValue operator+(const ExtendedValue& o) const;

  friend int cmp(const ExtendedValue& a, const ExtendedValue& b);
  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const ExtendedValue& a, const ExtendedValue& b) { return cmp(a, b) != 0; }
  friend bool operator<(const ExtendedValue& a, const ExtendedValue& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const ExtendedValue& a, const ExtendedValue& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const ExtendedValue& a, const ExtendedValue& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const ExtendedValue& a, const ExtendedValue& b) { return cmp(a, b) >= 0; }

  std::string to_string() const;  // "inf" or the finite value

 private:
  explicit ExtendedValue(std::optional<ValueVec> v) : v_(std::move(v)) {}
  std::optional<ValueVec> v_;
};

// The value group itself: Z, or Z^r under the lexicographic order. ZrLex
// groups exist only for valuation-vector input; there is no field arithmetic
// behind them.
class ValueGroup {
 public:
  enum class Kind { integers, lex_vectors };

  static ValueGroup integers() { return ValueGroup(Kind::integers, 1); }
  static ValueGroup lex_vectors(int rank);

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  bool contains(const ValueVec& v) const;
  std::string name() const;  // "z" or "zlex:R"

  friend bool operator==(const ValueGroup& a, const ValueGroup& b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_;
  }

 private:
  ValueGroup(Kind k, int r) : kind_(k), rank_(r) {}
  Kind kind_;
  int rank_;
};

// The smallest positive integer d with d*slope in the group, together with
// the slope it certifies. The invariant (d*slope integral, e*slope not
// integral for 0 < e < d) is checked on construction.
struct DenominatorWitness {
  ValueVec slope;
  Int d;
};

DenominatorWitness smallest_denominator(const ValueVec& slope, const ValueGroup& group);

}  // namespace phipoly
