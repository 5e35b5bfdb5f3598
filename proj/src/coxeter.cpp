#include "artin/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace artin {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

void check_generator_index(CoxType t, int s) {
  if (s < 1 || s > t.rank) {
    fail("generator index " + std::to_string(s) + " out of range for " +
         t.name());
  }
}

// Positional flip used to relate the fork-at-the-end generator model to the
// classical signed-permutation length formula.
inline int flip_symbol(int x, int n) {
  return x > 0 ? n + 1 - x : -(n + 1 + x);
}

}  // namespace

CoxType CoxType::A(int rank) {
  if (rank < 1) fail("type A requires rank >= 1");
  return CoxType{Family::A, rank};
}

CoxType CoxType::D(int rank) {
  if (rank < 4) fail("type D requires rank >= 4");
  return CoxType{Family::D, rank};
}

std::string CoxType::name() const {
  return std::string(1, family == Family::A ? 'A' : 'D') +
         std::to_string(rank);
}

CoxType parse_cox_type(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'A' && text[0] != 'D')) {
    fail("bad group designator '" + text + "' (expected A<rank> or D<rank>)");
  }
  for (size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      fail("bad group designator '" + text + "' (rank must be a number)");
    }
  }
  int rank = std::atoi(text.c_str() + 1);
  return text[0] == 'A' ? CoxType::A(rank) : CoxType::D(rank);
}

int coxeter_m(CoxType t, int a, int b) {
  check_generator_index(t, a);
  check_generator_index(t, b);
  if (a == b) return 1;
  int lo = std::min(a, b), hi = std::max(a, b);
  if (t.family == Family::A) return hi - lo == 1 ? 3 : 2;
  // Type D: the chain is 1..rank-1, the fork generator rank hangs off rank-2.
  if (hi < t.rank) return hi - lo == 1 ? 3 : 2;
  return lo == t.rank - 2 ? 3 : 2;
}

int diagram_automorphism(CoxType t, int s) {
  check_generator_index(t, s);
  if (t.family == Family::A) return t.rank + 1 - s;
  if (t.rank % 2 == 0) return s;
  if (s == t.rank - 1) return t.rank;
  if (s == t.rank) return t.rank - 1;
  return s;
}

CoxElement CoxElement::identity(CoxType t) {
  std::vector<int> w(static_cast<size_t>(t.n()));
  for (int i = 0; i < t.n(); ++i) w[static_cast<size_t>(i)] = i + 1;
  return CoxElement(t, std::move(w));
}

CoxElement CoxElement::generator(CoxType t, int s) {
  check_generator_index(t, s);
  CoxElement e = identity(t);
  e.right_mul_generator(s);
  return e;
}

CoxElement CoxElement::from_window(CoxType t, std::vector<int> window) {
  const int n = t.n();
  if (static_cast<int>(window.size()) != n) {
    fail("window size does not match " + t.name());
  }
  std::vector<char> seen(static_cast<size_t>(n), 0);
  int negatives = 0;
  for (int v : window) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[static_cast<size_t>(a - 1)]) {
      fail("window is not a permutation of 1..n");
    }
    seen[static_cast<size_t>(a - 1)] = 1;
    if (v < 0) ++negatives;
  }
  if (t.family == Family::A && negatives > 0) {
    fail("type A window must be positive");
  }
  if (t.family == Family::D && negatives % 2 != 0) {
    fail("type D window needs an even number of sign changes");
  }
  return CoxElement(t, std::move(window));
}

int CoxElement::image(int i) const {
  int a = std::abs(i);
  int v = window_[static_cast<size_t>(a - 1)];
  return i > 0 ? v : -v;
}

bool CoxElement::is_identity() const {
  for (int i = 0; i < typ_.n(); ++i) {
    if (window_[static_cast<size_t>(i)] != i + 1) return false;
  }
  return true;
}

CoxElement CoxElement::inverse() const {
  std::vector<int> inv(window_.size());
  for (int p = 1; p <= typ_.n(); ++p) {
    int v = window_[static_cast<size_t>(p - 1)];
    if (v > 0) {
      inv[static_cast<size_t>(v - 1)] = p;
    } else {
      inv[static_cast<size_t>(-v - 1)] = -p;
    }
  }
  return CoxElement(typ_, std::move(inv));
}

void CoxElement::right_mul_generator(int s) {
  check_generator_index(typ_, s);
  const int n = typ_.n();
  if (typ_.family == Family::D && s == typ_.rank) {
    int a = window_[static_cast<size_t>(n - 2)];
    int b = window_[static_cast<size_t>(n - 1)];
    window_[static_cast<size_t>(n - 2)] = -b;
    window_[static_cast<size_t>(n - 1)] = -a;
    return;
  }
  std::swap(window_[static_cast<size_t>(s - 1)], window_[static_cast<size_t>(s)]);
}

void CoxElement::left_mul_generator(int s) {
  check_generator_index(typ_, s);
  const int n = typ_.n();
  if (typ_.family == Family::D && s == typ_.rank) {
    // Values n-1 and n trade magnitudes and both flip sign.
    for (int& v : window_) {
      int a = std::abs(v);
      if (a == n - 1) {
        v = v > 0 ? -n : n;
      } else if (a == n) {
        v = v > 0 ? -(n - 1) : n - 1;
      }
    }
    return;
  }
  for (int& v : window_) {
    int a = std::abs(v);
    if (a == s) {
      v = v > 0 ? s + 1 : -(s + 1);
    } else if (a == s + 1) {
      v = v > 0 ? s : -s;
    }
  }
}

bool CoxElement::has_right_descent(int s) const {
  check_generator_index(typ_, s);
  if (typ_.family == Family::D && s == typ_.rank) {
    int a = window_[static_cast<size_t>(typ_.n() - 2)];
    int b = window_[static_cast<size_t>(typ_.n() - 1)];
    if (a < 0 && b < 0) return true;
    return ((a < 0) != (b < 0)) && a + b > 0;
  }
  int a = window_[static_cast<size_t>(s - 1)];
  int b = window_[static_cast<size_t>(s)];
  if ((a < 0) == (b < 0)) return a > b;
  return a < 0;
}

CoxElement operator*(const CoxElement& u, const CoxElement& v) {
  if (!(u.typ() == v.typ())) {
    throw std::invalid_argument("type mismatch in Coxeter multiplication");
  }
  const int n = u.typ().n();
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    w[static_cast<size_t>(i - 1)] = u.image(v.image(i));
  }
  return CoxElement::from_window(u.typ(), std::move(w));
}

int length(const CoxElement& w) {
  const int n = w.typ().n();
  const auto& win = w.window();
  if (w.typ().family == Family::A) {
    int inv = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (win[static_cast<size_t>(i)] > win[static_cast<size_t>(j)]) ++inv;
      }
    }
    return inv;
  }
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<size_t>(i)] = flip_symbol(win[static_cast<size_t>(n - 1 - i)], n);
  }
  int total = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int a = v[static_cast<size_t>(i)], b = v[static_cast<size_t>(j)];
      if (a > b) ++total;
      if (a + b < 0) ++total;
    }
  }
  return total;
}

std::vector<int> right_descents(const CoxElement& w) {
  std::vector<int> out;
  for (int s = 1; s <= w.typ().rank; ++s) {
    if (w.has_right_descent(s)) out.push_back(s);
  }
  return out;
}

std::vector<int> left_descents(const CoxElement& w) {
  return right_descents(w.inverse());
}

bool has_left_descent(const CoxElement& w, int s) {
  return w.inverse().has_right_descent(s);
}

std::vector<int> reduced_word(const CoxElement& w) {
  std::vector<int> word;
  CoxElement cur = w;
  CoxElement inv = w.inverse();
  for (;;) {
    int s = 0;
    for (int c = 1; c <= cur.typ().rank; ++c) {
      if (inv.has_right_descent(c)) {
        s = c;
        break;
      }
    }
    if (s == 0) break;
    word.push_back(s);
    cur.left_mul_generator(s);
    inv.right_mul_generator(s);
  }
  return word;
}

CoxElement longest_element(CoxType t) {
  const int n = t.n();
  std::vector<int> w(static_cast<size_t>(n));
  if (t.family == Family::A) {
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n - i;
  } else if (t.rank % 2 == 0) {
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = -(i + 1);
  } else {
    for (int i = 0; i < n - 1; ++i) w[static_cast<size_t>(i)] = -(i + 1);
    w[static_cast<size_t>(n - 1)] = n;
  }
  return CoxElement::from_window(t, std::move(w));
}

CoxElement longest_parabolic(CoxType t, const std::vector<int>& X) {
  if (X.empty()) throw std::invalid_argument("empty generating set");
  for (int s : X) check_generator_index(t, s);
  CoxElement w = CoxElement::identity(t);
  // Greedy ascent inside the parabolic subgroup: every non-maximal element
  // has some ascent in X; length grows each step, so this terminates at the
  // parabolic longest element.
  for (;;) {
    bool advanced = false;
    for (int s : X) {
      if (!w.has_right_descent(s)) {
        w.right_mul_generator(s);
        advanced = true;
        break;
      }
    }
    if (!advanced) return w;
  }
}

CoxElement conj_by_longest(const CoxElement& w) {
  CoxElement ws = longest_element(w.typ());
  return ws * w * ws;
}

}  // namespace artin
