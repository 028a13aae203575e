#ifndef IBS_SHUFFLE_HPP
#define IBS_SHUFFLE_HPP

// Exact shuffle algebra on words of iterated-integral letters. Words are
// immutable sequences; combinations carry exact rational coefficients.

#include "ibs/real.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace ibs {

/// Customisation point for letter types: zero test and a strict weak order.
template <class L>
struct letter_traits {
  static bool is_zero(const L& a) { return a == L{}; }
  static bool less(const L& a, const L& b) { return a < b; }
};

template <class L>
using Word = std::vector<L>;

template <class L>
bool word_less(const Word<L>& a, const Word<L>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (letter_traits<L>::less(a[i], b[i])) return true;
    if (letter_traits<L>::less(b[i], a[i])) return false;
  }
  return false;
}

template <class L>
std::size_t trailing_zeros(const Word<L>& w) {
  std::size_t r = 0;
  while (r < w.size() && letter_traits<L>::is_zero(w[w.size() - 1 - r])) ++r;
  return r;
}

template <class L>
bool all_zero(const Word<L>& w) {
  return trailing_zeros(w) == w.size();
}

/// A word paired with the power of a scalar prefactor. For trailing-zero
/// removal the prefactor is log(z); for the contour integrand it is the
/// constant-offset letter.
template <class L>
struct Term {
  Word<L> word;
  unsigned power = 0;
};

template <class L>
struct TermLess {
  bool operator()(const Term<L>& a, const Term<L>& b) const {
    if (a.power != b.power) return a.power < b.power;
    return word_less(a.word, b.word);
  }
};

/// Finitely supported Q-linear combination  sum c * G(word) * prefactor^power.
template <class L>
class WordCombination {
 public:
  using Map = std::map<Term<L>, Rational, TermLess<L>>;

  WordCombination() = default;
  static WordCombination of(Word<L> w, Rational c = 1, unsigned power = 0) {
    WordCombination r;
    r.add(Term<L>{std::move(w), power}, c);
    return r;
  }

  void add(const Term<L>& t, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      terms_.emplace(t, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  WordCombination& operator+=(const WordCombination& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  WordCombination& operator-=(const WordCombination& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  WordCombination& operator*=(const Rational& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [t, c] : terms_) c *= k;
    return *this;
  }
  /// Multiplies every term by prefactor^k.
  WordCombination raised(unsigned k) const {
    WordCombination r;
    for (const auto& [t, c] : terms_) r.add(Term<L>{t.word, t.power + k}, c);
    return r;
  }

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  Rational coefficient(const Word<L>& w, unsigned power = 0) const {
    auto it = terms_.find(Term<L>{w, power});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const WordCombination& a, const WordCombination& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    for (; i != a.terms_.end(); ++i, ++j) {
      if (TermLess<L>{}(i->first, j->first) || TermLess<L>{}(j->first, i->first)) return false;
      if (i->second != j->second) return false;
    }
    return true;
  }

 private:
  Map terms_;
};

namespace detail {
template <class L>
void shuffle_into(const Word<L>& u, std::size_t i, const Word<L>& v, std::size_t j, Word<L>& prefix,
                  const Rational& c, unsigned power, WordCombination<L>& out) {
  if (i == u.size() && j == v.size()) {
    out.add(Term<L>{prefix, power}, c);
    return;
  }
  if (i < u.size()) {
    prefix.push_back(u[i]);
    shuffle_into(u, i + 1, v, j, prefix, c, power, out);
    prefix.pop_back();
  }
  if (j < v.size()) {
    prefix.push_back(v[j]);
    shuffle_into(u, i, v, j + 1, prefix, c, power, out);
    prefix.pop_back();
  }
}
}  // namespace detail

/// All order-preserving interleavings of u and v, with multiplicity.
template <class L>
WordCombination<L> shuffle(const Word<L>& u, const Word<L>& v) {
  WordCombination<L> out;
  Word<L> prefix;
  prefix.reserve(u.size() + v.size());
  detail::shuffle_into(u, 0, v, 0, prefix, Rational(1), 0, out);
  return out;
}

/// Bilinear extension of the shuffle product; prefactor powers add.
template <class L>
WordCombination<L> shuffle(const WordCombination<L>& a, const WordCombination<L>& b) {
  WordCombination<L> out;
  for (const auto& [ta, ca] : a.terms()) {
    for (const auto& [tb, cb] : b.terms()) {
      Word<L> prefix;
      detail::shuffle_into(ta.word, 0, tb.word, 0, prefix, Rational(ca * cb), ta.power + tb.power, out);
    }
  }
  return out;
}

/// Rewrites G(w; z), w ending in zeros, as sum c * G(w'; z) * log^m(z) with
/// every w' ending in a nonzero letter. Uses
///   G(0) G(v) = r G(v 0) + (insertions of 0 before the trailing block of v),
/// where v 0 ends in r zeros.
template <class L>
WordCombination<L> remove_trailing_zeros(const Word<L>& w) {
  if (all_zero(w)) fail(ErrorKind::domain, "remove_trailing_zeros: all-zero word");
  const std::size_t r = trailing_zeros(w);
  if (r == 0) return WordCombination<L>::of(w);
  Word<L> shorter(w.begin(), w.end() - 1);
  const Word<L> zero_word{w.back()};
  WordCombination<L> result = remove_trailing_zeros(shorter).raised(1);
  const WordCombination<L> product = shuffle(zero_word, shorter);
  for (const auto& [t, c] : product.terms()) {
    if (!word_less(t.word, w) && !word_less(w, t.word)) continue;
    WordCombination<L> part = remove_trailing_zeros(t.word);
    part *= c;
    result -= part;
  }
  result *= Rational(1, static_cast<long>(r));
  return result;
}

/// Expansion of  L^(k-2) * G(0; t),  L = s + G(0; t) - G(1; t) - G(-1; t),
/// over the alphabet {-1, 0, 1}; the term power counts factors of the scalar
/// letter s. With G(1; t) = log(1 - t) and G(-1; t) = log(1 + t), L equals
/// log(sign * c * t / (1 - t^2)) whenever s is log(sign * c) and no branch
/// cut is crossed; `sign` only selects that scalar value and leaves the
/// word structure unchanged.
inline WordCombination<int> integrand_word_expansion(int k, int sign) {
  if (k < 2 || k > 6) fail(ErrorKind::domain, "integrand_word_expansion needs 2 <= k <= 6");
  if (sign != 1 && sign != -1) fail(ErrorKind::domain, "sign must be +1 or -1");
  WordCombination<int> log_factor;
  log_factor.add(Term<int>{{}, 1}, 1);
  log_factor.add(Term<int>{{0}, 0}, 1);
  log_factor.add(Term<int>{{1}, 0}, -1);
  log_factor.add(Term<int>{{-1}, 0}, -1);
  WordCombination<int> result = WordCombination<int>::of({0});
  for (int i = 0; i < k - 2; ++i) result = shuffle(log_factor, result);
  return result;
}

}  // namespace ibs

#endif  // IBS_SHUFFLE_HPP
