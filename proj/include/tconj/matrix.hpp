#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tconj/scalars.hpp"

namespace tconj {

// Dense matrix over the integers, used for exact Lie-algebra computations
// (ad matrices, divided powers, signed basis permutations) before any
// reduction mod p happens.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix scaled(std::int64_t k) const;

  bool is_zero() const;

  // Entrywise exact division; throws Error if any entry is not divisible.
  IntMatrix divided_exact(std::int64_t k) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> a_;
};

// Square matrix over GF(p) with entries stored as residues in [0, p).
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(int n, std::int64_t p) : n_(n), p_(p), a_(static_cast<std::size_t>(n) * n, 0) {}

  static ModMatrix identity(int n, std::int64_t p);
  static ModMatrix reduce(const IntMatrix& m, std::int64_t p);

  int dim() const { return n_; }
  std::int64_t modulus() const { return p_; }

  std::int64_t& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  std::int64_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

  void set(int r, int c, std::int64_t value) { at(r, c) = mod_reduce(value, p_); }

  ModMatrix operator*(const ModMatrix& o) const;
  ModMatrix operator+(const ModMatrix& o) const;
  ModMatrix scaled(std::int64_t k) const;

  // Gauss-Jordan inverse; throws InvalidArgument if singular.
  ModMatrix inverse() const;
  bool invertible() const;

  bool is_identity() const;

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  int n_ = 0;
  std::int64_t p_ = 0;
  std::vector<std::int64_t> a_;
};

// A group element is a finalized invertible matrix over GF(p) together with
// its canonical byte encoding (row-major residues) and a 64-bit hash of that
// encoding. The encoding is injective for fixed dimension and modulus, and
// its lexicographic order is the canonical element order used everywhere
// determinism matters (class representatives, report ordering).
struct GroupElement {
  ModMatrix m;
  std::string enc;
  std::uint64_t hash = 0;

  static GroupElement make(ModMatrix m);

  bool operator==(const GroupElement& o) const { return enc == o.enc; }
  bool operator<(const GroupElement& o) const { return enc < o.enc; }
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return static_cast<std::size_t>(g.hash); }
};

std::string encode_matrix(const ModMatrix& m);
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace tconj
