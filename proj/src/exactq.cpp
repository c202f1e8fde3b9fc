#include "fibcert/exactq.hpp"

#include <stdexcept>

namespace fib {

Rat rat_from_string(const std::string& s) {
  Rat q;
  try {
    q = Rat(s, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

bool vec_is_zero(const Vec& v) {
  for (const Rat& x : v) {
    if (x != 0) return false;
  }
  return true;
}

static void check_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("vector size mismatch");
  }
}

Vec vec_add(const Vec& a, const Vec& b) {
  check_same_size(a, b);
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  check_same_size(a, b);
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_scale(const Rat& c, const Vec& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Rat vec_dot(const Vec& a, const Vec& b) {
  check_same_size(a, b);
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec vec_unit(int dim, int index) {
  Vec v(dim, Rat(0));
  v[index] = 1;
  return v;
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
  a_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) throw std::invalid_argument("from_rows: no rows");
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols()) {
      throw std::invalid_argument("from_rows: ragged rows");
    }
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(int r) const {
  Vec out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw std::invalid_argument("apply: dimension mismatch");
  }
  Vec out(rows_, Rat(0));
  for (int r = 0; r < rows_; ++r) {
    Rat s = 0;
    for (int c = 0; c < cols_; ++c) {
      if (at(r, c) != 0 && v[c] != 0) s += at(r, c) * v[c];
    }
    out[r] = s;
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw std::invalid_argument("matrix product: dimension mismatch");
  }
  Matrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        if (rhs.at(k, j) != 0) out.at(i, j) += x * rhs.at(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("matrix sum: dimension mismatch");
  }
  Matrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) + rhs.at(i, j);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("matrix difference: dimension mismatch");
  }
  Matrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) - rhs.at(i, j);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  return a_ == rhs.a_;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw std::invalid_argument("vstack: column mismatch");
  }
  Matrix out(top.rows() + bottom.rows(), top.cols());
  for (int i = 0; i < top.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j) out.at(i, j) = top.at(i, j);
  for (int i = 0; i < bottom.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j)
      out.at(top.rows() + i, j) = bottom.at(i, j);
  return out;
}

int rref_in_place(Matrix& m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    }
    Rat inv = 1 / m.at(rank, col);
    for (int c = col; c < m.cols(); ++c) m.at(rank, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

int rank(Matrix m) { return rref_in_place(m); }

Subspace Subspace::zero(int ambient_dim) {
  if (ambient_dim < 0) throw std::invalid_argument("negative ambient dimension");
  return Subspace(ambient_dim, {});
}

Subspace Subspace::full(int ambient_dim) {
  std::vector<Vec> rows;
  rows.reserve(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) rows.push_back(vec_unit(ambient_dim, i));
  return Subspace(ambient_dim, std::move(rows));
}

Subspace Subspace::span(int ambient_dim, const std::vector<Vec>& generators) {
  std::vector<Vec> nonzero;
  for (const Vec& g : generators) {
    if (static_cast<int>(g.size()) != ambient_dim) {
      throw std::invalid_argument("span: generator dimension mismatch");
    }
    if (!vec_is_zero(g)) nonzero.push_back(g);
  }
  if (nonzero.empty()) return zero(ambient_dim);
  Matrix m = Matrix::from_rows(nonzero);
  int r = rref_in_place(m);
  std::vector<Vec> basis;
  basis.reserve(r);
  for (int i = 0; i < r; ++i) basis.push_back(m.row(i));
  return Subspace(ambient_dim, std::move(basis));
}

Vec Subspace::reduce(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) {
    throw std::invalid_argument("reduce: dimension mismatch");
  }
  Vec r = v;
  for (const Vec& b : basis_) {
    int p = 0;
    while (p < ambient_ && b[p] == 0) ++p;
    if (p < ambient_ && r[p] != 0) {
      Rat f = r[p];  // pivot entries are 1 in RREF
      for (int c = p; c < ambient_; ++c) r[c] -= f * b[c];
    }
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) {
    throw std::invalid_argument("contains: ambient mismatch");
  }
  for (const Vec& b : other.basis_) {
    if (!contains(b)) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && basis_ == other.basis_;
}

Subspace kernel(const Matrix& m) {
  Matrix r = m;
  rref_in_place(r);
  // pivot columns of the reduced form
  std::vector<int> pivot_of_row;
  std::vector<bool> is_pivot(m.cols(), false);
  for (int row = 0; row < r.rows(); ++row) {
    int p = -1;
    for (int c = 0; c < r.cols(); ++c) {
      if (r.at(row, c) != 0) {
        p = c;
        break;
      }
    }
    if (p < 0) break;
    pivot_of_row.push_back(p);
    is_pivot[p] = true;
  }
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), Rat(0));
    v[f] = 1;
    for (size_t row = 0; row < pivot_of_row.size(); ++row) {
      v[pivot_of_row[row]] = -r.at(static_cast<int>(row), f);
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), basis);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  }
  if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(u.ambient_dim());
  // Columns are the two bases; a kernel vector (alpha | beta) encodes
  // sum(alpha_i u_i) = -sum(beta_j v_j), an element of the intersection.
  Matrix a(u.ambient_dim(), u.dim() + v.dim());
  for (int j = 0; j < u.dim(); ++j)
    for (int i = 0; i < u.ambient_dim(); ++i) a.at(i, j) = u.basis()[j][i];
  for (int j = 0; j < v.dim(); ++j)
    for (int i = 0; i < u.ambient_dim(); ++i)
      a.at(i, u.dim() + j) = v.basis()[j][i];
  Subspace null = kernel(a);
  std::vector<Vec> gens;
  for (const Vec& w : null.basis()) {
    Vec x(u.ambient_dim(), Rat(0));
    for (int j = 0; j < u.dim(); ++j) {
      if (w[j] != 0) x = vec_add(x, vec_scale(w[j], u.basis()[j]));
    }
    gens.push_back(std::move(x));
  }
  return Subspace::span(u.ambient_dim(), gens);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
  }
  std::vector<Vec> gens = u.basis();
  gens.insert(gens.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.ambient_dim(), gens);
}

Subspace fixed_space(const std::vector<Matrix>& actions, int ambient_dim) {
  if (actions.empty()) return Subspace::full(ambient_dim);
  std::optional<Matrix> stacked;
  for (const Matrix& m : actions) {
    if (m.rows() != m.cols() || m.rows() != ambient_dim) {
      throw std::invalid_argument("fixed_space: size mismatch");
    }
    Matrix d = m - Matrix::identity(ambient_dim);
    stacked = stacked ? vstack(*stacked, d) : d;
  }
  return kernel(*stacked);
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows()) {
    throw std::invalid_argument("solve: dimension mismatch");
  }
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  rref_in_place(aug);
  std::vector<int> pivot_of_row;
  for (int row = 0; row < aug.rows(); ++row) {
    int p = -1;
    for (int c = 0; c < aug.cols(); ++c) {
      if (aug.at(row, c) != 0) {
        p = c;
        break;
      }
    }
    if (p < 0) break;
    if (p == a.cols()) return std::nullopt;  // 0 = 1: inconsistent
    pivot_of_row.push_back(p);
  }
  Vec x(a.cols(), Rat(0));
  for (size_t row = 0; row < pivot_of_row.size(); ++row) {
    x[pivot_of_row[row]] = aug.at(static_cast<int>(row), a.cols());
  }
  return x;
}

}  // namespace fib
