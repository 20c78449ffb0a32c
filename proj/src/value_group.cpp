#include "phipoly/value_group.hpp"

#include <stdexcept>

#include "phipoly/error.hpp"

namespace phipoly {

ValueVec::ValueVec(std::vector<Rat> comps) : comps_(std::move(comps)) {
  if (comps_.empty()) throw domain_error("ValueVec: empty component list");
}

ValueVec ValueVec::zero(int rank) {
  if (rank < 1) throw domain_error("ValueVec: rank must be positive");
  return ValueVec(std::vector<Rat>(static_cast<std::size_t>(rank), Rat(0)));
}

bool ValueVec::is_zero() const {
  for (const Rat& c : comps_)
    if (c != 0) return false;
  return true;
}

bool ValueVec::is_integral() const {
  for (const Rat& c : comps_)
    if (!rat_is_integral(c)) return false;
  return true;
}

int ValueVec::sign() const {
  for (const Rat& c : comps_) {
    int s = sgn(c);
    if (s != 0) return s;
  }
  return 0;
}

namespace {
void require_same_rank(const ValueVec& a, const ValueVec& b) {
  if (a.rank() != b.rank()) throw domain_error("ValueVec: rank mismatch");
}
}  // namespace

ValueVec ValueVec::operator+(const ValueVec& o) const {
  require_same_rank(*this, o);
  std::vector<Rat> out(comps_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.comps_[i];
  return ValueVec(std::move(out));
}

ValueVec ValueVec::operator-(const ValueVec& o) const {
  require_same_rank(*this, o);
  std::vector<Rat> out(comps_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= o.comps_[i];
  return ValueVec(std::move(out));
}

ValueVec ValueVec::operator-() const {
  std::vector<Rat> out(comps_);
  for (Rat& c : out) c = -c;
  return ValueVec(std::move(out));
}

ValueVec ValueVec::scaled(const Rat& f) const {
  std::vector<Rat> out(comps_);
  for (Rat& c : out) {
    c *= f;
    c.canonicalize();
  }
  return ValueVec(std::move(out));
}

int cmp(const ValueVec& a, const ValueVec& b) {
  require_same_rank(a, b);
  for (std::size_t i = 0; i < a.comps_.size(); ++i) {
    int c = ::cmp(a.comps_[i], b.comps_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string ValueVec::to_string() const {
  if (rank() == 1) return rat_to_string(comps_[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) out += ", ";
    out += rat_to_string(comps_[i]);
  }
  out += ")";
  return out;
}

const ValueVec& ExtendedValue::value() const {
  if (!v_) throw std::logic_error("ExtendedValue: value() on infinity");
  return *v_;
}

ExtendedValue ExtendedValue::operator+(const ExtendedValue& o) const {
  if (is_infinite() || o.is_infinite()) return infinity();
  return finite(*v_ + *o.v_);
}

int cmp(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_infinite() && b.is_infinite()) return 0;
  if (a.is_infinite()) return 1;
  if (b.is_infinite()) return -1;
  return cmp(*a.v_, *b.v_);
}

std::string ExtendedValue::to_string() const {
  return is_infinite() ? "inf" : v_->to_string();
}

ValueGroup ValueGroup::lex_vectors(int rank) {
  if (rank < 1) throw domain_error("ValueGroup: rank must be positive");
  return ValueGroup(Kind::lex_vectors, rank);
}

bool ValueGroup::contains(const ValueVec& v) const {
  return v.rank() == rank_ && v.is_integral();
}

std::string ValueGroup::name() const {
  if (kind_ == Kind::integers) return "z";
  return "zlex:" + std::to_string(rank_);
}

DenominatorWitness smallest_denominator(const ValueVec& slope, const ValueGroup& group) {
  if (slope.rank() != group.rank())
    throw domain_error("smallest_denominator: slope rank does not match value group");
  if (slope.sign() <= 0)
    throw domain_error("smallest_denominator: slope must be positive");
  // d*slope is integral iff every component denominator divides d, so the
  // smallest witness is the lcm of the (canonical) denominators.
  Int d(1);
  for (const Rat& c : slope.components()) d = int_lcm(d, c.get_den());
  return DenominatorWitness{slope, d};
}

}  // namespace phipoly
