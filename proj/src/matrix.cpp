#include "tconj/matrix.hpp"

namespace tconj {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("IntMatrix: shape mismatch in product");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      std::int64_t v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("IntMatrix: shape mismatch in sum");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

IntMatrix IntMatrix::scaled(std::int64_t k) const {
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * k;
  return r;
}

bool IntMatrix::is_zero() const {
  for (std::int64_t v : a_)
    if (v != 0) return false;
  return true;
}

IntMatrix IntMatrix::divided_exact(std::int64_t k) const {
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] % k != 0) {
      throw Error("IntMatrix: entry " + std::to_string(a_[i]) + " not divisible by " + std::to_string(k));
    }
    r.a_[i] = a_[i] / k;
  }
  return r;
}

ModMatrix ModMatrix::identity(int n, std::int64_t p) {
  ModMatrix m(n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

ModMatrix ModMatrix::reduce(const IntMatrix& m, std::int64_t p) {
  if (m.rows() != m.cols()) throw InvalidArgument("ModMatrix: reduction needs a square matrix");
  ModMatrix r(m.rows(), p);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = mod_reduce(m.at(i, j), p);
  return r;
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  if (n_ != o.n_ || p_ != o.p_) throw InvalidArgument("ModMatrix: incompatible product operands");
  ModMatrix r(n_, p_);
  // Entries are < p <= a few hundred at desk scale, so row sums fit in
  // int64 comfortably and a single reduction per output entry suffices.
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      std::int64_t v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) += v * o.at(k, j);
    }
    for (int j = 0; j < n_; ++j) r.at(i, j) %= p_;
  }
  return r;
}

ModMatrix ModMatrix::operator+(const ModMatrix& o) const {
  if (n_ != o.n_ || p_ != o.p_) throw InvalidArgument("ModMatrix: incompatible sum operands");
  ModMatrix r(n_, p_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = mod_reduce(a_[i] + o.a_[i], p_);
  return r;
}

ModMatrix ModMatrix::scaled(std::int64_t k) const {
  ModMatrix r(n_, p_);
  k = mod_reduce(k, p_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = mod_reduce(a_[i] * k, p_);
  return r;
}

ModMatrix ModMatrix::inverse() const {
  ModMatrix a = *this;
  ModMatrix inv = identity(n_, p_);
  PrimeField f(p_);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw InvalidArgument("ModMatrix: singular matrix has no inverse");
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    std::int64_t s = tconj::inv(f.make(a.at(col, col))).v;
    for (int j = 0; j < n_; ++j) {
      a.at(col, j) = mod_reduce(a.at(col, j) * s, p_);
      inv.at(col, j) = mod_reduce(inv.at(col, j) * s, p_);
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col) continue;
      std::int64_t factor = a.at(r, col);
      if (factor == 0) continue;
      for (int j = 0; j < n_; ++j) {
        a.at(r, j) = mod_reduce(a.at(r, j) - factor * a.at(col, j), p_);
        inv.at(r, j) = mod_reduce(inv.at(r, j) - factor * inv.at(col, j), p_);
      }
    }
  }
  return inv;
}

bool ModMatrix::invertible() const {
  try {
    (void)inverse();
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

bool ModMatrix::is_identity() const { return *this == identity(n_, p_); }

std::string encode_matrix(const ModMatrix& m) {
  if (m.modulus() > 255) throw InvalidArgument("encode_matrix: modulus exceeds one-byte encoding range");
  std::string enc;
  enc.reserve(static_cast<std::size_t>(m.dim()) * m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) enc.push_back(static_cast<char>(static_cast<unsigned char>(m.at(i, j))));
  return enc;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

GroupElement GroupElement::make(ModMatrix m) {
  GroupElement g;
  g.enc = encode_matrix(m);
  g.hash = fnv1a64(g.enc);
  g.m = std::move(m);
  return g;
}

}  // namespace tconj
