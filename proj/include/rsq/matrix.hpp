#ifndef RSQ_MATRIX_HPP
#define RSQ_MATRIX_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsq/scalar.hpp"

namespace rsq {

// Sparse matrix over Scalar. Indices are 0-based; rows keep their entries
// sorted by column with no stored zeros.
class SMat {
 public:
  using Entry = std::pair<int, Scalar>;

  SMat() = default;
  SMat(RingPtr ring, int rows, int cols);

  static SMat identity(const RingPtr& ring, int n);
  // c * E_{ij}, 1-based as in the matrix-unit notation.
  static SMat unit(const RingPtr& ring, int n, int i, int j, const Scalar& c);
  static SMat unit(const RingPtr& ring, int n, int i, int j) { return unit(ring, n, i, j, Scalar(ring, 1)); }
  static SMat diagonal(const std::vector<Scalar>& d);

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Entry>& row(int i) const { return data_[i]; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }
  bool is_diagonal() const;

  Scalar get(int i, int j) const;
  void set(int i, int j, const Scalar& v);
  void add_to(int i, int j, const Scalar& v);

  friend SMat operator+(const SMat& a, const SMat& b);
  friend SMat operator-(const SMat& a, const SMat& b);
  friend SMat operator*(const SMat& a, const SMat& b);
  friend SMat operator*(const Scalar& c, const SMat& a);
  SMat operator-() const;
  SMat& operator+=(const SMat& b) { return *this = *this + b; }
  SMat& operator-=(const SMat& b) { return *this = *this - b; }

  friend bool operator==(const SMat& a, const SMat& b);
  friend bool operator!=(const SMat& a, const SMat& b) { return !(a == b); }

  SMat transpose() const;
  SMat map(const std::function<Scalar(const Scalar&)>& f, const RingPtr& target) const;
  SMat map(const std::function<Scalar(const Scalar&)>& f) const { return map(f, ring_); }
  SMat convert(const RingPtr& target) const;
  SMat substitute(const std::map<std::string, Scalar>& b, const RingPtr& target) const;
  SMat substitute(const std::map<std::string, Scalar>& b) const { return substitute(b, ring_); }

  // Inverse of a diagonal matrix with nonzero diagonal.
  SMat diagonal_inverse() const;
  SMat pow(int k) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<std::vector<Entry>> data_;
};

SMat kron(const SMat& a, const SMat& b);
// Flip v_i (x) v_j -> v_j (x) v_i on an n*n dimensional tensor square.
SMat flip(const RingPtr& ring, int n);
SMat commutator(const SMat& a, const SMat& b);

struct Mismatch {
  int row = 0, col = 0;
  Scalar lhs, rhs;
  std::string describe() const;
};
// First entry (row-major) where the matrices differ.
std::optional<Mismatch> first_mismatch(const SMat& a, const SMat& b);

}  // namespace rsq

#endif
