#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "artin/word.hpp"

namespace artin {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major. Entries grow unboundedly with word
// length, so arbitrary precision is required.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}
  static IntMatrix identity(int dim);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) {
    return data_[static_cast<size_t>(r) * static_cast<size_t>(cols_) +
                 static_cast<size_t>(c)];
  }
  const Int& at(int r, int c) const {
    return data_[static_cast<size_t>(r) * static_cast<size_t>(cols_) +
                 static_cast<size_t>(c)];
  }

  IntMatrix transpose() const;
  bool operator==(const IntMatrix&) const = default;

  // Row-major grid: entries space-separated, rows newline-terminated.
  std::string to_grid() const;

 private:
  int rows_;
  int cols_;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& m, const std::vector<Int>& v_as_col);

// Skew-symmetric pairing of curve classes; the basis is abstract lattice
// generators indexed like the standard generators.
struct SkewForm {
  int dim;
  IntMatrix J;
};

// Chain-adjacent classes pair to +1; the type D fork adds the pair
// (n-2, n). Antisymmetric completion, zero diagonal.
SkewForm intersection_form(CoxType typ);

// x -> x + <x, e_idx> e_idx with <u, v> = u^T J v; idx is 1-based.
IntMatrix transvection_matrix(const SkewForm& form, int idx);
IntMatrix transvection_matrix_inverse(const SkewForm& form, int idx);

struct TransvectionRep {
  CoxType typ;
  int dim;
  SkewForm form;
  std::vector<IntMatrix> gen_matrices;
};

TransvectionRep transvection_rep(CoxType typ);
// Same generator recipe over a caller-supplied pairing; used to pin sign
// conventions by exhibiting how inconsistent ones fail downstream.
TransvectionRep transvection_rep_from_form(CoxType typ, SkewForm form);

// Product of generator matrices along the word, in word order.
IntMatrix rep_apply(const TransvectionRep& rep, const ArtinWord& w);

// The forgetful quotient on classes: e_i -> e_i for i < n, e_n -> e_{n-1};
// an (n-1) x n matrix whose kernel is spanned by e_n - e_{n-1}.
IntMatrix theta_star(int n);

bool commuting_square_holds(const TransvectionRep& rep_d,
                            const TransvectionRep& rep_a);
// theta_star o rep_D(t_i) = rep_A(fold of t_i) o theta_star for every i.
bool check_commuting_square(int n);

bool preserves_form(const SkewForm& form, const IntMatrix& m);

// Fraction-free elimination; exact over Int.
int matrix_rank(IntMatrix m);
Int matrix_det(IntMatrix m);

}  // namespace artin
