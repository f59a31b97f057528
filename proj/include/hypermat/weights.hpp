#pragma once

// Integer weight vectors for GL(A) x GL(B) x GL(C) acting on 2 x 2 x n
// hypermatrices, together with the dotted-Weyl-action normalization that
// rewrites an arbitrary weight as a signed dominant one (or zero).  Weights
// carry their rank explicitly: trailing zeros are significant, since padding
// changes the meaning of a weight under the Borel-Weil-Bott bookkeeping.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypermat {

class Weight {
public:
  Weight() = default;
  explicit Weight(std::vector<int> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw std::invalid_argument("weight: rank must be >= 1");
  }
  Weight(std::initializer_list<int> entries) : Weight(std::vector<int>(entries)) {}

  static Weight zeros(int rank) { return Weight(std::vector<int>(rank, 0)); }
  static Weight constant(int rank, int value) { return Weight(std::vector<int>(rank, value)); }

  int rank() const { return static_cast<int>(e_.size()); }
  const std::vector<int>& entries() const { return e_; }
  int operator[](int i) const { return e_.at(i); }

  long long degree() const {
    long long s = 0;
    for (int x : e_) s += x;
    return s;
  }

  bool dominant() const {
    for (size_t i = 0; i + 1 < e_.size(); ++i)
      if (e_[i] < e_[i + 1]) return false;
    return true;
  }

  bool is_partition() const { return dominant() && e_.back() >= 0; }

  int max_abs() const {
    int m = 0;
    for (int x : e_) m = std::max(m, x < 0 ? -x : x);
    return m;
  }

  // (-last, ..., -first): the weight of the dual representation.
  Weight dual() const {
    std::vector<int> d(e_.rbegin(), e_.rend());
    for (int& x : d) x = -x;
    return Weight(std::move(d));
  }

  Weight shifted(int k) const {
    std::vector<int> d = e_;
    for (int& x : d) x += k;
    return Weight(std::move(d));
  }

  Weight padded(int rank) const {
    if (rank < this->rank()) throw std::invalid_argument("weight: cannot pad to smaller rank");
    std::vector<int> d = e_;
    d.resize(rank, 0);
    return Weight(std::move(d));
  }

  Weight prefix(int rank) const {
    if (rank > this->rank()) throw std::invalid_argument("weight: prefix longer than rank");
    return Weight(std::vector<int>(e_.begin(), e_.begin() + rank));
  }

  Weight plus(const Weight& o) const {
    if (o.rank() != rank()) throw std::invalid_argument("weight: rank mismatch in sum");
    std::vector<int> d = e_;
    for (size_t i = 0; i < d.size(); ++i) d[i] += o.e_[i];
    return Weight(std::move(d));
  }

  Weight scaled(int k) const {
    std::vector<int> d = e_;
    for (int& x : d) x *= k;
    return Weight(std::move(d));
  }

  std::string str() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;

private:
  std::vector<int> e_;
};

// rho = (rank-1, ..., 1, 0)
Weight rho(int rank);

// Signed dominant weight; sign == 0 means the class vanishes.
struct SignedWeight {
  int sign = 0;
  Weight weight;
  bool zero() const { return sign == 0; }
};

// Data of the normalization: sign, dominant representative, and the length
// (inversion count) of the sorting permutation applied to lambda + rho.
struct BottData {
  int sign = 0;
  int length = 0;
  Weight weight;
  bool zero() const { return sign == 0; }
};

BottData bott_data(const Weight& lambda);
SignedWeight bott_normalize(const Weight& lambda);

struct TripleWeight {
  Weight a, b, c;

  TripleWeight() = default;
  TripleWeight(Weight a_, Weight b_, Weight c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a.rank() != 2 || b.rank() != 2 || c.rank() < 2)
      throw std::invalid_argument("triple weight: ranks must be (2, 2, n) with n >= 2");
  }

  int n() const { return c.rank(); }
  bool dominant() const { return a.dominant() && b.dominant() && c.dominant(); }
  long long degree_a() const { return a.degree(); }
  bool degrees_match() const { return a.degree() == b.degree() && b.degree() == c.degree(); }

  TripleWeight plus(const TripleWeight& o) const { return {a.plus(o.a), b.plus(o.b), c.plus(o.c)}; }
  TripleWeight scaled(int k) const { return {a.scaled(k), b.scaled(k), c.scaled(k)}; }
  TripleWeight swapped_ab() const { return {b, a, c}; }

  std::string str() const;

  friend auto operator<=>(const TripleWeight&, const TripleWeight&) = default;
};

struct SignedTriple {
  int sign = 0;
  TripleWeight weight;
  bool zero() const { return sign == 0; }
};

// Factor-wise normalization; zero as soon as one factor degenerates.
SignedTriple triple_normalize(const TripleWeight& t);

// Weight of the character image under the twisted Fourier transform:
// dual twisted by det(A ox B ox C)^{-1} = (-2n,-2n) x (-2n,-2n) x (-4^n).
TripleWeight fourier_weight(const TripleWeight& t);

} // namespace hypermat
