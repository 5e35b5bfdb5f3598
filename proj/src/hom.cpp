#include "artin/hom.hpp"

#include <stdexcept>

#include "json.hpp"

namespace artin {

namespace {

void check_rank_d(int n) {
  if (n < 4) throw std::invalid_argument("rank must be at least 4");
}

}  // namespace

HomSpec make_identity_assignment(CoxType t) {
  HomSpec h{t, t, {}, "id"};
  for (int s = 1; s <= t.rank; ++s) h.images.push_back(generator_word(t, s));
  return h;
}

HomSpec make_pi(int n) {
  check_rank_d(n);
  CoxType src = CoxType::D(n), tgt = CoxType::A(n - 1);
  HomSpec h{src, tgt, {}, "pi"};
  for (int i = 1; i <= n - 1; ++i) h.images.push_back(generator_word(tgt, i));
  h.images.push_back(generator_word(tgt, n - 1));
  return h;
}

HomSpec make_iota(int n) {
  check_rank_d(n);
  CoxType src = CoxType::A(n - 1), tgt = CoxType::D(n);
  HomSpec h{src, tgt, {}, "iota"};
  for (int i = 1; i <= n - 1; ++i) h.images.push_back(generator_word(tgt, i));
  return h;
}

HomSpec make_alpha(int n, long long p) {
  check_rank_d(n);
  HomSpec h = make_pi(n);
  ArtinWord tail = repeat_word(delta_word(h.target), 2 * p);
  for (auto& w : h.images) w = concat(w, tail);
  h.label = "alpha(" + std::to_string(p) + ")";
  return h;
}

HomSpec make_beta(int n, long long p, long long q) {
  check_rank_d(n);
  HomSpec h = make_iota(n);
  std::vector<int> chain;
  for (int s = 1; s <= n - 1; ++s) chain.push_back(s);
  ArtinWord tail =
      concat(repeat_word(parabolic_delta_word(h.target, chain), 2 * p),
             repeat_word(delta_word(h.target), kappa(h.target) * q));
  for (auto& w : h.images) w = concat(w, tail);
  h.label = "beta(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return h;
}

HomSpec make_gamma(int n, long long p) {
  check_rank_d(n);
  CoxType t = CoxType::D(n);
  HomSpec h = make_identity_assignment(t);
  ArtinWord tail = repeat_word(delta_word(t), kappa(t) * p);
  for (auto& w : h.images) w = concat(w, tail);
  h.label = "gamma(" + std::to_string(p) + ")";
  return h;
}

HomSpec make_bar_gamma(int n, long long p) {
  check_rank_d(n);
  CoxType t = CoxType::A(n - 1);
  HomSpec h = make_identity_assignment(t);
  ArtinWord tail = repeat_word(delta_word(t), 2 * p);
  for (auto& w : h.images) w = concat(w, tail);
  h.label = "bar_gamma(" + std::to_string(p) + ")";
  return h;
}

HomSpec make_zeta(int n) {
  check_rank_d(n);
  CoxType t = CoxType::D(n);
  HomSpec h = make_identity_assignment(t);
  std::swap(h.images[n - 2], h.images[n - 1]);
  h.label = "zeta";
  return h;
}

HomSpec make_chi(int n) {
  check_rank_d(n);
  CoxType t = CoxType::D(n);
  HomSpec h{t, t, {}, "chi"};
  for (int s = 1; s <= n; ++s) h.images.push_back(generator_word(t, s, -1));
  return h;
}

HomSpec make_bar_chi(int n) {
  check_rank_d(n);
  CoxType t = CoxType::A(n - 1);
  HomSpec h{t, t, {}, "bar_chi"};
  for (int s = 1; s <= t.rank; ++s)
    h.images.push_back(generator_word(t, s, -1));
  return h;
}

HomSpec make_inner(const ArtinWord& g) {
  CoxType t = g.typ;
  HomSpec h{t, t, {}, "inner(" + word_to_string(g) + ")"};
  for (int s = 1; s <= t.rank; ++s)
    h.images.push_back(
        concat(concat(g, generator_word(t, s)), inverse_word(g)));
  return h;
}

HomSpec make_cyclic(CoxType source, const ArtinWord& g) {
  HomSpec h{source, g.typ, {}, "cyclic(" + word_to_string(g) + ")"};
  for (int s = 1; s <= source.rank; ++s) h.images.push_back(g);
  return h;
}

ArtinWord apply(const HomSpec& h, const ArtinWord& w) {
  if (w.typ != h.source)
    throw std::invalid_argument("word is over the wrong group");
  ArtinWord out = empty_word(h.target);
  for (const Letter& l : w.letters) {
    const ArtinWord& img = h.images.at(static_cast<size_t>(l.index - 1));
    if (l.sign > 0) {
      out.letters.insert(out.letters.end(), img.letters.begin(),
                         img.letters.end());
    } else {
      ArtinWord inv = inverse_word(img);
      out.letters.insert(out.letters.end(), inv.letters.begin(),
                         inv.letters.end());
    }
  }
  return out;
}

HomTable::HomTable(const HomSpec& h) : source_(h.source), target_(h.target) {
  if (static_cast<int>(h.images.size()) != h.source.rank)
    throw std::invalid_argument("image list does not match source rank");
  for (const ArtinWord& w : h.images) {
    pos_.push_back(normalize(w));
    neg_.push_back(inverse(pos_.back()));
  }
}

const NormalForm& HomTable::image(int gen, int sign) const {
  if (gen < 1 || gen > source_.rank)
    throw std::invalid_argument("generator index out of range");
  return sign > 0 ? pos_[static_cast<size_t>(gen - 1)]
                  : neg_[static_cast<size_t>(gen - 1)];
}

NormalForm HomTable::apply_word(const ArtinWord& w) const {
  if (w.typ != source_)
    throw std::invalid_argument("word is over the wrong group");
  NormalForm acc(target_);
  for (const Letter& l : w.letters) acc = multiply(acc, image(l.index, l.sign));
  return acc;
}

NormalForm apply_nf(const HomSpec& h, const ArtinWord& w) {
  return HomTable(h).apply_word(w);
}

HomSpec compose(const HomSpec& g, const HomSpec& h) {
  if (h.target != g.source)
    throw std::invalid_argument("composition types do not match");
  HomSpec out{h.source, g.target, {}, g.label + " o " + h.label};
  for (const ArtinWord& w : h.images) out.images.push_back(apply(g, w));
  return out;
}

std::optional<std::pair<int, int>> find_failing_relation(const HomSpec& h) {
  HomTable table(h);
  for (int a = 1; a <= h.source.rank; ++a) {
    for (int b = a + 1; b <= h.source.rank; ++b) {
      int m = coxeter_m(h.source, a, b);
      NormalForm lhs(h.target), rhs(h.target);
      for (int i = 0; i < m; ++i) {
        lhs = multiply(lhs, table.image(i % 2 == 0 ? a : b, 1));
        rhs = multiply(rhs, table.image(i % 2 == 0 ? b : a, 1));
      }
      if (!(lhs == rhs)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

bool verify_hom(const HomSpec& h) { return !find_failing_relation(h); }

bool pinch_test(const HomSpec& h) {
  if (h.source.family != Family::D)
    throw std::invalid_argument("pinch test needs a type D source");
  int n = h.source.rank;
  return equal(h.images[static_cast<size_t>(n - 2)],
               h.images[static_cast<size_t>(n - 1)]);
}

bool is_conjugate_by(const HomSpec& h1, const HomSpec& h2,
                     const ArtinWord& g) {
  if (h1.source != h2.source || h1.target != h2.target)
    throw std::invalid_argument("homomorphism types do not match");
  if (g.typ != h1.target)
    throw std::invalid_argument("conjugator is over the wrong group");
  NormalForm conj = normalize(g);
  NormalForm conj_inv = inverse(conj);
  for (size_t i = 0; i < h1.images.size(); ++i) {
    NormalForm lhs = normalize(h2.images[i]);
    NormalForm rhs =
        multiply(multiply(conj, normalize(h1.images[i])), conj_inv);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool images_equal(const HomSpec& h1, const HomSpec& h2) {
  if (h1.source != h2.source || h1.target != h2.target)
    throw std::invalid_argument("homomorphism types do not match");
  for (size_t i = 0; i < h1.images.size(); ++i) {
    if (!equal(h1.images[i], h2.images[i])) return false;
  }
  return true;
}

std::string hom_to_json(const HomSpec& h) {
  nlohmann::json j;
  j["source"] = h.source.name();
  j["target"] = h.target.name();
  std::vector<std::string> words;
  for (const ArtinWord& w : h.images) words.push_back(word_to_string(w));
  j["images"] = words;
  j["label"] = h.label;
  return j.dump(2) + "\n";
}

HomSpec hom_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad hom spec: ") + e.what());
  }
  if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
      !j.contains("images"))
    throw std::invalid_argument(
        "bad hom spec: need fields source, target, images");
  HomSpec h{parse_cox_type(j["source"].get<std::string>()),
            parse_cox_type(j["target"].get<std::string>()),
            {},
            j.value("label", "")};
  if (!j["images"].is_array())
    throw std::invalid_argument("bad hom spec: images must be a list");
  for (const auto& entry : j["images"])
    h.images.push_back(parse_word(h.target, entry.get<std::string>()));
  if (static_cast<int>(h.images.size()) != h.source.rank)
    throw std::invalid_argument(
        "bad hom spec: expected one image per source generator");
  return h;
}

}  // namespace artin
