// SPDX-License-Identifier: Apache-2.0
#include "cubefarey/contfrac.hpp"

#include <sstream>

#include "cubefarey/error.hpp"

namespace cubefarey {

std::string CFWord::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (k > 0) os << ' ';
    if (period_start && *period_start == k) os << "| ";
    os << digits[k].a << '/' << digits[k].b;
  }
  if (period_start && *period_start == digits.size()) os << (digits.empty() ? "|" : " |");
  return os.str();
}

CFWord CFWord::parse(std::string_view text) {
  CFWord w;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok == "|") {
      if (w.period_start) throw Error(Errc::InvalidInput, "more than one period marker");
      w.period_start = w.digits.size();
      continue;
    }
    const auto slash = tok.find('/');
    if (slash == std::string::npos) throw Error(Errc::InvalidInput, "digit must look like a/b: " + tok);
    try {
      std::size_t used = 0;
      const std::string sa = tok.substr(0, slash);
      const std::string sb = tok.substr(slash + 1);
      const long a = std::stol(sa, &used);
      if (used != sa.size()) throw std::invalid_argument(sa);
      const long b = std::stol(sb, &used);
      if (used != sb.size()) throw std::invalid_argument(sb);
      if (a < 0 || b < 0) throw Error(Errc::InvalidInput, "digits must be nonnegative: " + tok);
      w.digits.push_back({a, b});
    } catch (const std::logic_error&) {
      throw Error(Errc::InvalidInput, "bad digit " + tok);
    }
  }
  if (w.period_start && *w.period_start == w.digits.size())
    throw Error(Errc::InvalidInput, "empty period");
  return w;
}

IntMatrix3 cf_matrix(const CFDigit& d) { return {{0, 0, 1}, {1, 0, d.a}, {0, 1, d.b}}; }

const std::array<CFDigit, 3>& digit_word(IndexPair eps) {
  static const std::array<std::array<CFDigit, 3>, 6> words{{
      {CFDigit{0, 0}, CFDigit{0, 0}, CFDigit{0, 1}},  // (1,2)
      {CFDigit{0, 0}, CFDigit{1, 0}, CFDigit{0, 0}},  // (2,1)
      {CFDigit{0, 0}, CFDigit{0, 1}, CFDigit{0, 0}},  // (0,1)
      {CFDigit{1, 0}, CFDigit{0, 0}, CFDigit{0, 0}},  // (1,0)
      {CFDigit{0, 0}, CFDigit{0, 0}, CFDigit{1, 0}},  // (0,2)
      {CFDigit{0, 1}, CFDigit{0, 0}, CFDigit{0, 0}},  // (2,0)
  }};
  return words[static_cast<std::size_t>(eps.ordinal())];
}

CFWord digits_to_cfword(const std::vector<IndexPair>& digits) {
  CFWord w;
  w.digits.reserve(3 * digits.size());
  for (const auto& e : digits)
    for (const auto& d : digit_word(e)) w.digits.push_back(d);
  return w;
}

CFWord digits_to_cfword(const std::vector<IndexPair>& digits, std::size_t preperiod) {
  if (preperiod >= digits.size()) throw Error(Errc::InvalidInput, "periodic word needs a nonempty period");
  CFWord w = digits_to_cfword(digits);
  w.period_start = 3 * preperiod;
  return w;
}

namespace {

struct Tracked {
  CFDigit d;
  std::size_t origin;
};

std::vector<Tracked> reduce_tracked(const std::vector<CFDigit>& in) {
  std::vector<Tracked> st;
  st.reserve(in.size());
  for (std::size_t k = 0; k < in.size(); ++k) {
    st.push_back({in[k], k});
    while (st.size() >= 4 && st[st.size() - 2].d.is_zero() && st[st.size() - 3].d.is_zero()) {
      const CFDigit right = st.back().d;
      st.resize(st.size() - 3);
      st.back().d = st.back().d + right;
    }
  }
  return st;
}

std::optional<CFWord> periodic_form(const CFWord& word, std::size_t copies) {
  const std::size_t pre = *word.period_start;
  const std::size_t per = word.digits.size() - pre;
  std::vector<CFDigit> unfolded(word.digits.begin(), word.digits.begin() + static_cast<long>(pre));
  for (std::size_t c = 0; c < copies; ++c)
    unfolded.insert(unfolded.end(), word.digits.begin() + static_cast<long>(pre), word.digits.end());
  auto st = reduce_tracked(unfolded);
  const std::size_t cut = pre + (copies - 1) * per;
  while (!st.empty() && st.back().origin >= cut) st.pop_back();
  std::size_t b = 0;
  while (b < st.size() && st[b].origin < pre + per) ++b;
  const std::size_t len = st.size();
  for (std::size_t L = 1; b + 2 * L <= len; ++L) {
    bool ok = true;
    for (std::size_t i = b; i + L < len && ok; ++i) ok = st[i].d == st[i + L].d;
    if (!ok) continue;
    std::size_t s = b;
    while (s > 0 && st[s - 1].d == st[s - 1 + L].d) --s;
    CFWord out;
    for (std::size_t i = 0; i < s + L; ++i) out.digits.push_back(st[i].d);
    out.period_start = s;
    return out;
  }
  return std::nullopt;
}

}  // namespace

CFWord reduce_cfword(const CFWord& word) {
  if (!word.periodic()) {
    CFWord out;
    for (const auto& t : reduce_tracked(word.digits)) out.digits.push_back(t.d);
    return out;
  }
  if (*word.period_start >= word.digits.size()) throw Error(Errc::InvalidInput, "empty period");
  std::optional<CFWord> prev;
  constexpr std::size_t kMaxCopies = 24;
  for (std::size_t copies = 3; copies <= kMaxCopies; ++copies) {
    auto cur = periodic_form(word, copies);
    if (cur && prev && *cur == *prev) return *cur;
    if (cur) prev = std::move(cur);
  }
  if (prev) return *prev;
  throw Error(Errc::InvalidInput, "periodic reduction did not stabilize");
}

IntMatrix3 cf_product(const std::vector<CFDigit>& digits) {
  IntMatrix3 p = IntMatrix3::identity();
  for (const auto& d : digits) p = p * cf_matrix(d);
  return p;
}

std::pair<Rational, Rational> evaluate_cf(const CFWord& word) {
  if (word.digits.empty()) throw Error(Errc::InvalidInput, "cannot evaluate the empty word");
  if (word.periodic()) throw Error(Errc::InvalidInput, "only finite words can be evaluated");
  const IntMatrix3 p = cf_product(word.digits);
  if (p(0, 2) == 0) throw Error(Errc::ZeroDenominator, "p0 vanishes for " + word.to_string());
  Rational x(p(1, 2), p(0, 2));
  Rational y(p(2, 2), p(0, 2));
  x.canonicalize();
  y.canonicalize();
  return {x, y};
}

std::pair<FieldElement, FieldElement> evaluate_cf(const CubicField& field, const CFWord& word,
                                                  const FieldElement& x, const FieldElement& y) {
  return frac_apply(field, cf_product(word.digits), x, y);
}

std::vector<IdentityCheck> verify_decompositions() {
  std::vector<IdentityCheck> out;
  for (const auto& e : IndexPair::all()) {
    const IntMatrix3 lhs = matrix_S_inverse() * matrix_A(e) * matrix_S();
    out.push_back({"S^-1 A" + e.to_string() + " S = M" + e.to_string(), lhs == matrix_M(e)});
  }
  const IntMatrix3 R = cf_matrix({0, 0});
  const IntMatrix3 U = cf_matrix({1, 0});
  const IntMatrix3 V = cf_matrix({0, 1});
  const std::array<std::pair<IndexPair, std::pair<std::string, IntMatrix3>>, 6> rows{{
      {{1, 2}, {"R R V", R * R * V}},
      {{0, 1}, {"R V R", R * V * R}},
      {{0, 2}, {"R R U", R * R * U}},
      {{2, 1}, {"R U R", R * U * R}},
      {{1, 0}, {"U R R", U * R * R}},
      {{2, 0}, {"V R R", V * R * R}},
  }};
  for (const auto& [e, rhs] : rows)
    out.push_back({"M" + e.to_string() + " = " + rhs.first, matrix_M(e) == rhs.second});
  return out;
}

}  // namespace cubefarey
