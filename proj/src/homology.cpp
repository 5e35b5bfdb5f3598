#include "artin/homology.hpp"

#include <stdexcept>
#include <utility>

namespace artin {

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

std::string IntMatrix::to_grid() const {
  std::string out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c > 0) out += ' ';
      out += at(r, c).str();
    }
    out += '\n';
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix dimensions do not match");
  IntMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = 0; k < a.cols(); ++k) {
      const Int& av = a.at(r, k);
      if (av == 0) continue;
      for (int c = 0; c < b.cols(); ++c) out.at(r, c) += av * b.at(k, c);
    }
  }
  return out;
}

IntMatrix operator*(const IntMatrix& m, const std::vector<Int>& v_as_col) {
  if (m.cols() != static_cast<int>(v_as_col.size()))
    throw std::invalid_argument("matrix dimensions do not match");
  IntMatrix out(m.rows(), 1);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      out.at(r, 0) += m.at(r, c) * v_as_col[static_cast<size_t>(c)];
  return out;
}

SkewForm intersection_form(CoxType typ) {
  int dim = typ.rank;
  IntMatrix j(dim, dim);
  for (int i = 0; i + 1 < (typ.family == Family::A ? dim : dim - 1); ++i) {
    j.at(i, i + 1) = 1;
    j.at(i + 1, i) = -1;
  }
  if (typ.family == Family::D) {
    j.at(dim - 3, dim - 1) = 1;
    j.at(dim - 1, dim - 3) = -1;
  }
  return SkewForm{dim, std::move(j)};
}

namespace {

IntMatrix transvection_with_sign(const SkewForm& form, int idx, int sign) {
  if (idx < 1 || idx > form.dim)
    throw std::invalid_argument("basis index out of range");
  int k = idx - 1;
  IntMatrix m = IntMatrix::identity(form.dim);
  for (int j = 0; j < form.dim; ++j) m.at(k, j) += sign * form.J.at(j, k);
  return m;
}

}  // namespace

IntMatrix transvection_matrix(const SkewForm& form, int idx) {
  return transvection_with_sign(form, idx, 1);
}

IntMatrix transvection_matrix_inverse(const SkewForm& form, int idx) {
  return transvection_with_sign(form, idx, -1);
}

TransvectionRep transvection_rep_from_form(CoxType typ, SkewForm form) {
  TransvectionRep rep{typ, form.dim, std::move(form), {}};
  for (int s = 1; s <= typ.rank; ++s)
    rep.gen_matrices.push_back(transvection_matrix(rep.form, s));
  return rep;
}

TransvectionRep transvection_rep(CoxType typ) {
  return transvection_rep_from_form(typ, intersection_form(typ));
}

IntMatrix rep_apply(const TransvectionRep& rep, const ArtinWord& w) {
  if (w.typ != rep.typ)
    throw std::invalid_argument("word is over the wrong group");
  IntMatrix acc = IntMatrix::identity(rep.dim);
  for (const Letter& l : w.letters) {
    acc = acc * (l.sign > 0
                     ? rep.gen_matrices[static_cast<size_t>(l.index - 1)]
                     : transvection_matrix_inverse(rep.form, l.index));
  }
  return acc;
}

IntMatrix theta_star(int n) {
  if (n < 4) throw std::invalid_argument("rank must be at least 4");
  IntMatrix m(n - 1, n);
  for (int i = 0; i < n - 1; ++i) m.at(i, i) = 1;
  m.at(n - 2, n - 1) = 1;
  return m;
}

bool commuting_square_holds(const TransvectionRep& rep_d,
                            const TransvectionRep& rep_a) {
  if (rep_d.typ.family != Family::D || rep_a.typ.family != Family::A ||
      rep_a.typ.rank != rep_d.typ.rank - 1)
    throw std::invalid_argument("expected D_n and A_{n-1} representations");
  int n = rep_d.typ.rank;
  IntMatrix theta = theta_star(n);
  for (int i = 1; i <= n; ++i) {
    int folded = i <= n - 1 ? i : n - 1;
    IntMatrix lhs = theta * rep_d.gen_matrices[static_cast<size_t>(i - 1)];
    IntMatrix rhs =
        rep_a.gen_matrices[static_cast<size_t>(folded - 1)] * theta;
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool check_commuting_square(int n) {
  return commuting_square_holds(transvection_rep(CoxType::D(n)),
                                transvection_rep(CoxType::A(n - 1)));
}

bool preserves_form(const SkewForm& form, const IntMatrix& m) {
  return m.transpose() * form.J * m == form.J;
}

namespace {

// Fraction-free elimination step; every division is exact because each
// intermediate entry is a minor of the original matrix.
int bareiss(IntMatrix& m, Int* det_out) {
  int rows = m.rows(), cols = m.cols();
  Int prev = 1;
  int sign = 1;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int r = row; r < rows; ++r) {
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) {
      for (int c = 0; c < cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
      sign = -sign;
    }
    for (int r = row + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        m.at(r, c) =
            (m.at(row, col) * m.at(r, c) - m.at(r, col) * m.at(row, c)) / prev;
      }
      m.at(r, col) = 0;
    }
    prev = m.at(row, col);
    ++row;
  }
  if (det_out) {
    if (rows != cols)
      throw std::invalid_argument("determinant needs a square matrix");
    *det_out = row < rows ? Int(0) : Int(sign) * m.at(rows - 1, cols - 1);
  }
  return row;
}

}  // namespace

int matrix_rank(IntMatrix m) { return bareiss(m, nullptr); }

Int matrix_det(IntMatrix m) {
  Int det;
  bareiss(m, &det);
  return det;
}

}  // namespace artin
