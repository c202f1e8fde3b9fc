#pragma once

// Exact rational dense linear algebra: kernels, images, subspace
// intersection, simultaneous fixed spaces, linear solves.  All arithmetic
// is over Q (GMP rationals); there is no floating point anywhere.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace fib {

using Rat = mpq_class;
using Vec = std::vector<Rat>;

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& v);
Rat vec_dot(const Vec& a, const Vec& b);
Vec vec_unit(int dim, int index);

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix(int rows, int cols);
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  Vec row(int r) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix transposed() const;
  bool operator==(const Matrix& rhs) const;
  bool is_identity() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

Matrix vstack(const Matrix& top, const Matrix& bottom);

/// Reduced row echelon form in place; returns the rank.
int rref_in_place(Matrix& m);
int rank(Matrix m);

/// A linear subspace of Q^n held in canonical form: the basis is the
/// reduced row echelon basis of the row space, so subspaces with equal
/// span compare equal entry by entry.
class Subspace {
 public:
  Subspace() : ambient_(0) {}  // zero subspace of the zero space
  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);
  static Subspace span(int ambient_dim, const std::vector<Vec>& generators);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Reduce v against the echelon basis; the residue is zero iff v lies
  /// in the subspace.
  Vec reduce(const Vec& v) const;
  bool operator==(const Subspace& other) const;

 private:
  Subspace(int ambient, std::vector<Vec> basis)
      : ambient_(ambient), basis_(std::move(basis)) {}
  int ambient_;
  std::vector<Vec> basis_;  // RREF rows, pivots left to right
};

/// Null space {v : Mv = 0}.
Subspace kernel(const Matrix& m);

/// Exact intersection; throws std::invalid_argument on ambient mismatch.
Subspace intersect(const Subspace& u, const Subspace& v);

/// Span of the union of the two bases.
Subspace subspace_sum(const Subspace& u, const Subspace& v);

/// Simultaneous fixed space of a family of square matrices,
/// i.e. the intersection of ker(M - I).  An empty family fixes everything.
Subspace fixed_space(const std::vector<Matrix>& actions, int ambient_dim);

/// Some x with Ax = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

}  // namespace fib
