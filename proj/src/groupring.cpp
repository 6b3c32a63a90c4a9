#include "weilcomb/groupring.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace weilcomb {

namespace {

void check_rank(unsigned rank) {
  if (rank > kHardRankLimit) {
    throw std::invalid_argument("group rank " + std::to_string(rank) +
                                " exceeds the hard limit " + std::to_string(kHardRankLimit));
  }
}

}  // namespace

void require_rank_within(unsigned rank, unsigned cap) {
  check_rank(rank);
  if (rank > cap) {
    throw std::invalid_argument("group rank " + std::to_string(rank) +
                                " exceeds the configured cap " + std::to_string(cap));
  }
}

std::string to_string(GroupElement g, unsigned rank) {
  check_rank(rank);
  if (g.index >= (1u << rank)) {
    throw std::invalid_argument("group element index " + std::to_string(g.index) +
                                " out of range for rank " + std::to_string(rank));
  }
  if (g.is_identity()) return "1";
  std::string out;
  for (unsigned i = 0; i < rank; ++i) {
    if (g.index & (1u << i)) {
      if (!out.empty()) out += "*";
      out += "s" + std::to_string(i + 1);
    }
  }
  return out;
}

GroupRingElt::GroupRingElt(unsigned rank) : rank_(rank) {
  check_rank(rank);
  coeffs_.assign(std::size_t{1} << rank, 0);
}

GroupRingElt::GroupRingElt(unsigned rank, std::vector<Coeff> coeffs)
    : rank_(rank), coeffs_(std::move(coeffs)) {
  check_rank(rank);
  if (coeffs_.size() != (std::size_t{1} << rank)) {
    throw std::invalid_argument("coefficient vector has length " +
                                std::to_string(coeffs_.size()) + "; rank " +
                                std::to_string(rank) + " requires " +
                                std::to_string(std::size_t{1} << rank));
  }
}

GroupRingElt GroupRingElt::unit(unsigned rank) { return basis(rank, identity_element); }

GroupRingElt GroupRingElt::basis(unsigned rank, GroupElement g) {
  GroupRingElt x(rank);
  if (g.index >= x.group_order()) {
    throw std::invalid_argument("basis element index " + std::to_string(g.index) +
                                " out of range for rank " + std::to_string(rank));
  }
  x.coeffs_[g.index] = 1;
  return x;
}

GroupRingElt GroupRingElt::constant(unsigned rank, Coeff t) {
  GroupRingElt x(rank);
  std::fill(x.coeffs_.begin(), x.coeffs_.end(), t);
  return x;
}

bool GroupRingElt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c == 0; });
}

bool GroupRingElt::is_constant(Coeff* value) const {
  const Coeff t = coeffs_.front();
  if (!std::all_of(coeffs_.begin(), coeffs_.end(), [t](Coeff c) { return c == t; })) {
    return false;
  }
  if (value != nullptr) *value = t;
  return true;
}

Coeff GroupRingElt::min_coeff() const { return *std::min_element(coeffs_.begin(), coeffs_.end()); }

Coeff GroupRingElt::max_coeff() const { return *std::max_element(coeffs_.begin(), coeffs_.end()); }

Coeff GroupRingElt::augmentation() const {
  Coeff total = 0;
  for (Coeff c : coeffs_) total = checked::add(total, c);
  return total;
}

std::vector<GroupElement> GroupRingElt::support() const {
  std::vector<GroupElement> out;
  for (unsigned i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.push_back(GroupElement{i});
  }
  return out;
}

bool GroupRingElt::dominates(const GroupRingElt& other) const {
  if (rank_ != other.rank_) {
    throw std::invalid_argument("rank mismatch in dominates()");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] < other.coeffs_[i]) return false;
  }
  return true;
}

GroupRingElt& GroupRingElt::operator+=(const GroupRingElt& rhs) {
  if (rank_ != rhs.rank_) throw std::invalid_argument("rank mismatch in group ring addition");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = checked::add(coeffs_[i], rhs.coeffs_[i]);
  }
  return *this;
}

GroupRingElt& GroupRingElt::operator-=(const GroupRingElt& rhs) {
  if (rank_ != rhs.rank_) throw std::invalid_argument("rank mismatch in group ring subtraction");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = checked::sub(coeffs_[i], rhs.coeffs_[i]);
  }
  return *this;
}

GroupRingElt& GroupRingElt::operator*=(Coeff scalar) {
  for (Coeff& c : coeffs_) c = checked::mul(c, scalar);
  return *this;
}

GroupRingElt operator*(const GroupRingElt& lhs, const GroupRingElt& rhs) {
  if (lhs.rank_ != rhs.rank_) {
    throw std::invalid_argument("rank mismatch in group ring multiplication");
  }
  GroupRingElt out(lhs.rank_);
  // (x*y)[h] = sum_g x[g] * y[g^h]; accumulate in 128 bits, then narrow with a
  // range check so overflow in intermediate sums is caught too.
  const std::size_t n = out.coeffs_.size();
  for (std::size_t h = 0; h < n; ++h) {
    __int128 acc = 0;
    for (std::size_t g = 0; g < n; ++g) {
      if (lhs.coeffs_[g] == 0) continue;
      acc += static_cast<__int128>(lhs.coeffs_[g]) * rhs.coeffs_[g ^ h];
    }
    if (acc > std::numeric_limits<Coeff>::max() || acc < std::numeric_limits<Coeff>::min()) {
      throw std::overflow_error("integer overflow in group ring multiplication");
    }
    out.coeffs_[h] = static_cast<Coeff>(acc);
  }
  return out;
}

std::string GroupRingElt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < coeffs_.size(); ++i) {
    const Coeff c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const Coeff mag = c < 0 ? checked::neg(c) : c;
    const GroupElement g{i};
    if (g.is_identity()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << weilcomb::to_string(g, rank_);
    }
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GroupRingElt& x) { return os << x.to_string(); }

GroupRingElt norm_element(unsigned rank) { return GroupRingElt::constant(rank, 1); }

GroupRingElt translate(GroupElement g, const GroupRingElt& x) {
  if (g.index >= x.group_order()) {
    throw std::invalid_argument("translate: group element out of range for rank " +
                                std::to_string(x.rank()));
  }
  std::vector<Coeff> out(x.group_order());
  for (unsigned h = 0; h < out.size(); ++h) {
    out[h] = x.coeffs()[g.index ^ h];
  }
  return GroupRingElt(x.rank(), std::move(out));
}

std::vector<GroupElement> defect(const GroupRingElt& x, const GroupRingElt& target) {
  if (x.rank() != target.rank()) throw std::invalid_argument("rank mismatch in defect()");
  std::vector<GroupElement> out;
  for (unsigned i = 0; i < x.group_order(); ++i) {
    const GroupElement g{i};
    if (x[g] < target[g]) out.push_back(g);
  }
  return out;
}

std::vector<GroupElement> stabilizer(const GroupRingElt& x) {
  std::vector<GroupElement> out;
  for (unsigned i = 0; i < x.group_order(); ++i) {
    const GroupElement g{i};
    if (translate(g, x) == x) out.push_back(g);
  }
  return out;
}

}  // namespace weilcomb
