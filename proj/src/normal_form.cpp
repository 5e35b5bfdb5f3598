#include "artin/normal_form.hpp"

#include <stdexcept>
#include <utility>

namespace artin {

namespace {

// Conjugation by Delta permutes the generators, so it acts on simple
// elements; it is the identity precisely for rank-1 A and even-rank D.
bool delta_conj_nontrivial(CoxType t) {
  if (t.family == Family::A) return t.rank >= 2;
  return t.rank % 2 != 0;
}

// Letter transfer until every left descent of v is a right descent of u.
// Each transfer moves one generator: u grows, v shrinks, the product in the
// Artin monoid is unchanged. Returns whether anything moved.
bool make_left_weighted(CoxElement& u, CoxElement& v) {
  const int rank = u.typ().rank;
  CoxElement vinv = v.inverse();
  bool changed = false;
  for (;;) {
    int s = 0;
    for (int c = 1; c <= rank; ++c) {
      if (vinv.has_right_descent(c) && !u.has_right_descent(c)) {
        s = c;
        break;
      }
    }
    if (s == 0) return changed;
    u.right_mul_generator(s);
    v.left_mul_generator(s);
    vinv.right_mul_generator(s);
    changed = true;
  }
}

}  // namespace

void NormalForm::mul_delta_power(long long m) {
  delta_ += m;
  if (m % 2 != 0 && delta_conj_nontrivial(typ_)) {
    CoxElement ws = longest_element(typ_);
    for (auto& f : factors_) f = ws * f * ws;
  }
}

void NormalForm::mul_simple(const CoxElement& x) {
  if (!(x.typ() == typ_)) {
    throw std::invalid_argument("type mismatch in normal form multiplication");
  }
  if (x.is_identity()) return;
  if (x == longest_element(typ_)) {
    mul_delta_power(1);
    return;
  }
  factors_.push_back(x);
  reweight_from(static_cast<int>(factors_.size()) - 2);
}

void NormalForm::mul_letter(const Letter& l) {
  if (l.sign > 0) {
    mul_simple(CoxElement::generator(typ_, l.index));
    return;
  }
  // t^{-1} = Delta^{-1} tau(w_S t); the complement has length l(w_S) - 1.
  mul_delta_power(-1);
  CoxElement f = longest_element(typ_);
  f.right_mul_generator(l.index);
  mul_simple(f);
}

void NormalForm::reweight_from(int pair) {
  const int pairs = static_cast<int>(factors_.size()) - 1;
  if (pairs > 0 && pair >= 0) {
    std::vector<int> stack;
    std::vector<char> queued(static_cast<size_t>(pairs), 0);
    auto push = [&](int i) {
      if (i >= 0 && i < pairs && !queued[static_cast<size_t>(i)]) {
        queued[static_cast<size_t>(i)] = 1;
        stack.push_back(i);
      }
    };
    push(pair);
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      queued[static_cast<size_t>(i)] = 0;
      if (make_left_weighted(factors_[static_cast<size_t>(i)],
                             factors_[static_cast<size_t>(i + 1)])) {
        push(i - 1);
        push(i + 1);
      }
    }
  }
  cleanup();
}

void NormalForm::cleanup() {
  // At the fixpoint, longest-element factors can only sit at the head and
  // identity factors only at the tail.
  CoxElement ws = longest_element(typ_);
  size_t head = 0;
  while (head < factors_.size() && factors_[head] == ws) ++head;
  if (head > 0) {
    delta_ += static_cast<long long>(head);
    factors_.erase(factors_.begin(),
                   factors_.begin() + static_cast<long long>(head));
  }
  while (!factors_.empty() && factors_.back().is_identity()) {
    factors_.pop_back();
  }
}

NormalForm normalize(const ArtinWord& w) {
  NormalForm r(w.typ);
  for (const Letter& l : w.letters) r.mul_letter(l);
  return r;
}

NormalForm multiply(const NormalForm& u, const NormalForm& v) {
  if (!(u.typ() == v.typ())) {
    throw std::invalid_argument("type mismatch in normal form multiplication");
  }
  NormalForm r = u;
  r.mul_delta_power(v.delta());
  for (const auto& f : v.factors()) r.mul_simple(f);
  return r;
}

NormalForm inverse(const NormalForm& u) {
  NormalForm r(u.typ());
  CoxElement ws = longest_element(u.typ());
  const auto& fs = u.factors();
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    // tau(x)^{-1} = Delta^{-1} tau(w_S x^{-1}).
    r.mul_delta_power(-1);
    r.mul_simple(ws * it->inverse());
  }
  r.mul_delta_power(-u.delta());
  return r;
}

NormalForm power(const NormalForm& u, long long e) {
  if (e < 0) return power(inverse(u), -e);
  NormalForm acc(u.typ());
  NormalForm base = u;
  for (;;) {
    if (e & 1) acc = multiply(acc, base);
    e >>= 1;
    if (e == 0) return acc;
    base = multiply(base, base);
  }
}

bool equal(const ArtinWord& u, const ArtinWord& v) {
  if (!(u.typ == v.typ)) {
    throw std::invalid_argument("type mismatch in word comparison");
  }
  return normalize(u) == normalize(v);
}

long long exponent_sum(const ArtinWord& w) {
  long long z = 0;
  for (const Letter& l : w.letters) z += l.sign;
  return z;
}

long long exponent_sum(const NormalForm& u) {
  long long z = u.delta() * length(longest_element(u.typ()));
  for (const auto& f : u.factors()) z += length(f);
  return z;
}

NormalForm tau(const CoxElement& w) {
  NormalForm r(w.typ());
  r.mul_simple(w);
  return r;
}

NormalForm garside_element(CoxType t) { return NormalForm(t, 1); }

ArtinWord delta_word(CoxType t) {
  ArtinWord w = empty_word(t);
  if (t.family == Family::A) {
    for (int j = 1; j <= t.rank; ++j) {
      for (int s = t.rank; s >= j; --s) w.letters.push_back(Letter{s, 1});
    }
    return w;
  }
  const int n = t.rank;
  for (int j = 1; j <= n - 2; ++j) {
    for (int s = j; s <= n - 2; ++s) w.letters.push_back(Letter{s, 1});
    w.letters.push_back(Letter{n - 1, 1});
    w.letters.push_back(Letter{n, 1});
    for (int s = n - 2; s >= j; --s) w.letters.push_back(Letter{s, 1});
  }
  w.letters.push_back(Letter{n - 1, 1});
  w.letters.push_back(Letter{n, 1});
  return w;
}

ArtinWord delta_square_word(CoxType t) {
  if (t.family != Family::A) {
    throw std::invalid_argument("delta_square_word is a type A spelling");
  }
  ArtinWord w = empty_word(t);
  for (int i = 1; i <= t.rank; ++i) {
    for (int s = i; s < t.rank; ++s) w.letters.push_back(Letter{s, 1});
    w.letters.push_back(Letter{t.rank, 1});
    w.letters.push_back(Letter{t.rank, 1});
    for (int s = t.rank - 1; s >= i; --s) w.letters.push_back(Letter{s, 1});
  }
  return w;
}

ArtinWord parabolic_delta_word(CoxType t, const std::vector<int>& X) {
  return word_from_indices(t, reduced_word(longest_parabolic(t, X)));
}

ArtinWord word_of(const NormalForm& u) {
  ArtinWord out = empty_word(u.typ());
  ArtinWord ws_word =
      word_from_indices(u.typ(), reduced_word(longest_element(u.typ())));
  out = concat(out, repeat_word(ws_word, u.delta()));
  for (const auto& f : u.factors()) {
    out = concat(out, word_from_indices(u.typ(), reduced_word(f)));
  }
  return out;
}

std::string render(const NormalForm& u) {
  std::string out = "D^" + std::to_string(u.delta()) + " | ";
  bool first = true;
  for (const auto& f : u.factors()) {
    if (!first) out += '.';
    first = false;
    const auto word = reduced_word(f);
    for (size_t i = 0; i < word.size(); ++i) {
      if (i) out += ' ';
      out += u.typ().letter();
      out += std::to_string(word[i]);
    }
  }
  return out;
}

int kappa(CoxType t) {
  if (t.family == Family::A) return 2;
  return t.rank % 2 == 0 ? 1 : 2;
}

CentralData central_data(CoxType t) {
  return CentralData{kappa(t), NormalForm(t, kappa(t))};
}

std::optional<long long> center_membership(const NormalForm& u) {
  if (!u.factors().empty()) return std::nullopt;
  const int k = kappa(u.typ());
  if (u.delta() % k != 0) return std::nullopt;
  return u.delta() / k;
}

bool equal_mod_center(const ArtinWord& u, const ArtinWord& v) {
  if (u.typ.family != Family::D || v.typ.family != Family::D ||
      !(u.typ == v.typ)) {
    throw std::invalid_argument("equal_mod_center needs one type D group");
  }
  NormalForm diff = multiply(normalize(u), inverse(normalize(v)));
  return center_membership(diff).has_value();
}

}  // namespace artin
