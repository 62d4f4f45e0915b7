#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hochbv/scalar.hpp"

namespace hochbv {

// index -> nonzero value
struct SparseVector {
  std::map<int, Scalar> entries;
  void add(int i, const Scalar& v) {
    auto it = entries.find(i);
    if (it == entries.end()) {
      if (!v.is_zero()) entries.emplace(i, v);
      return;
    }
    it->second += v;
    if (it->second.is_zero()) entries.erase(it);
  }
  bool is_zero() const { return entries.empty(); }
  bool operator==(const SparseVector& o) const { return entries == o.entries; }
};

class SparseMatrix {
 public:
  SparseMatrix(int rows, int cols, Field f) : rows_(rows), cols_(cols), f_(f), row_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return f_; }
  int nnz() const;

  void set(int r, int c, const Scalar& v);
  void add(int r, int c, const Scalar& v);
  Scalar get(int r, int c) const;
  const std::map<int, Scalar>& row(int r) const { return row_[r]; }

  SparseVector apply(const SparseVector& x) const;  // M x
  SparseMatrix multiply(const SparseMatrix& o) const;
  SparseMatrix transpose() const;
  bool is_zero() const;

  // Coordinate text format: header "rows cols nnz field", then one line
  // "row col value" per entry in row-major order. Exact values, no floats.
  std::string export_text() const;
  static SparseMatrix import_text(const std::string& text);

 private:
  void check_index(int r, int c) const;
  int rows_, cols_;
  Field f_;
  std::vector<std::map<int, Scalar>> row_;
};

struct RankKernel {
  int rank = 0;
  std::vector<SparseVector> kernel;  // basis of ker M, one vector per free column
};

// Exact Gaussian elimination; pivot = first nonzero in column order (deterministic).
RankKernel rank_kernel(const SparseMatrix& M);

// Solves M x = b exactly; nullopt means "inconsistent" (a value, not a fault).
std::optional<SparseVector> solve(const SparseMatrix& M, const SparseVector& b);

struct ComplexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// dim ker(D_out) - rank(D_in) for the middle term of D_in, D_out.
// Rejects inputs with D_out∘D_in != 0 (broken complex upstream).
int homology_dims(const SparseMatrix& D_in, const SparseMatrix& D_out);

}  // namespace hochbv
