#include "hochbv/exactlinalg.hpp"

#include <cassert>
#include <sstream>

namespace hochbv {

int SparseMatrix::nnz() const {
  int n = 0;
  for (const auto& r : row_) n += static_cast<int>(r.size());
  return n;
}

void SparseMatrix::check_index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
  check_index(r, c);
  if (v.is_zero())
    row_[r].erase(c);
  else
    row_[r][c] = v;
}

void SparseMatrix::add(int r, int c, const Scalar& v) {
  check_index(r, c);
  auto it = row_[r].find(c);
  if (it == row_[r].end()) {
    if (!v.is_zero()) row_[r].emplace(c, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) row_[r].erase(it);
}

Scalar SparseMatrix::get(int r, int c) const {
  check_index(r, c);
  auto it = row_[r].find(c);
  return it == row_[r].end() ? Scalar::zero(f_) : it->second;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  SparseVector y;
  for (int r = 0; r < rows_; ++r) {
    Scalar acc = Scalar::zero(f_);
    for (const auto& [c, v] : row_[r]) {
      auto it = x.entries.find(c);
      if (it != x.entries.end()) acc += v * it->second;
    }
    if (!acc.is_zero()) y.entries.emplace(r, acc);
  }
  return y;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch in multiply");
  SparseMatrix out(rows_, o.cols_, f_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [k, v] : row_[r])
      for (const auto& [c, w] : o.row_[k]) out.add(r, c, v * w);
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix out(cols_, rows_, f_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : row_[r]) out.set(c, r, v);
  return out;
}

bool SparseMatrix::is_zero() const {
  for (const auto& r : row_)
    if (!r.empty()) return false;
  return true;
}

std::string SparseMatrix::export_text() const {
  std::ostringstream os;
  os << rows_ << " " << cols_ << " " << nnz() << " " << f_.str() << "\n";
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : row_[r]) os << r << " " << c << " " << v.str() << "\n";
  return os.str();
}

SparseMatrix SparseMatrix::import_text(const std::string& text) {
  std::istringstream is(text);
  int rows, cols, nnz;
  std::string field;
  if (!(is >> rows >> cols >> nnz >> field))
    throw std::invalid_argument("bad matrix header");
  Field f = Field::parse(field);
  SparseMatrix M(rows, cols, f);
  for (int k = 0; k < nnz; ++k) {
    int r, c;
    std::string val;
    if (!(is >> r >> c >> val)) throw std::invalid_argument("truncated matrix payload");
    M.set(r, c, Scalar::parse(val, f));
  }
  return M;
}

namespace {

// Row-echelon working form. Rows are sparse maps; pivot selection scans columns
// in order and picks the lowest-index unreduced row (deterministic).
struct Echelon {
  std::vector<std::map<int, Scalar>> rows;
  std::vector<int> pivot_col_of_row;   // parallel to rows, -1 while unreduced
  std::vector<int> pivot_row_of_col;   // cols -> row index or -1
  int rank = 0;
};

Echelon eliminate(const SparseMatrix& M) {
  Echelon e;
  e.rows.resize(M.rows());
  for (int r = 0; r < M.rows(); ++r) e.rows[r] = M.row(r);
  e.pivot_col_of_row.assign(M.rows(), -1);
  e.pivot_row_of_col.assign(M.cols(), -1);

  for (int c = 0; c < M.cols(); ++c) {
    int pr = -1;
    for (int r = 0; r < M.rows(); ++r) {
      if (e.pivot_col_of_row[r] != -1) continue;
      auto it = e.rows[r].find(c);
      if (it != e.rows[r].end()) {
        pr = r;
        break;
      }
    }
    if (pr == -1) continue;
    // normalize pivot row
    Scalar inv = Scalar::one(M.field()) / e.rows[pr].at(c);
    for (auto& [cc, v] : e.rows[pr]) v *= inv;
    // clear column c from every other row
    for (int r = 0; r < M.rows(); ++r) {
      if (r == pr) continue;
      auto it = e.rows[r].find(c);
      if (it == e.rows[r].end()) continue;
      Scalar factor = it->second;
      for (const auto& [cc, v] : e.rows[pr]) {
        auto jt = e.rows[r].find(cc);
        if (jt == e.rows[r].end()) {
          Scalar nv = -(factor * v);
          if (!nv.is_zero()) e.rows[r].emplace(cc, nv);
        } else {
          jt->second -= factor * v;
          if (jt->second.is_zero()) e.rows[r].erase(jt);
        }
      }
    }
    e.pivot_col_of_row[pr] = c;
    e.pivot_row_of_col[c] = pr;
    ++e.rank;
  }
  return e;
}

}  // namespace

RankKernel rank_kernel(const SparseMatrix& M) {
  Echelon e = eliminate(M);
  RankKernel out;
  out.rank = e.rank;
  for (int c = 0; c < M.cols(); ++c) {
    if (e.pivot_row_of_col[c] != -1) continue;
    // free column c: x_c = 1, pivot vars read off the reduced rows
    SparseVector v;
    v.entries.emplace(c, Scalar::one(M.field()));
    for (int r = 0; r < M.rows(); ++r) {
      int pc = e.pivot_col_of_row[r];
      if (pc == -1) continue;
      auto it = e.rows[r].find(c);
      if (it != e.rows[r].end()) v.entries.emplace(pc, -it->second);
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::optional<SparseVector> solve(const SparseMatrix& M, const SparseVector& b) {
  // eliminate the augmented matrix [M | b]
  SparseMatrix aug(M.rows(), M.cols() + 1, M.field());
  for (int r = 0; r < M.rows(); ++r)
    for (const auto& [c, v] : M.row(r)) aug.set(r, c, v);
  for (const auto& [r, v] : b.entries) {
    if (r < 0 || r >= M.rows()) throw std::out_of_range("rhs index out of range");
    aug.set(r, M.cols(), v);
  }
  Echelon e = eliminate(aug);
  // inconsistent iff some row reduces to (0 ... 0 | nonzero), i.e. pivot in the b column
  if (e.pivot_row_of_col[M.cols()] != -1) return std::nullopt;
  SparseVector x;
  for (int r = 0; r < M.rows(); ++r) {
    int pc = e.pivot_col_of_row[r];
    if (pc == -1 || pc == M.cols()) continue;
    auto it = e.rows[r].find(M.cols());
    if (it != e.rows[r].end()) x.entries.emplace(pc, it->second);
  }
  return x;
}

int homology_dims(const SparseMatrix& D_in, const SparseMatrix& D_out) {
  if (D_in.rows() != D_out.cols())
    throw ComplexError("middle dimension mismatch between D_in and D_out");
  if (!D_out.multiply(D_in).is_zero())
    throw ComplexError("D_out ∘ D_in != 0: broken complex upstream");
  int kernel_dim = D_out.cols() - rank_kernel(D_out).rank;
  int image_dim = rank_kernel(D_in).rank;
  return kernel_dim - image_dim;
}

}  // namespace hochbv
