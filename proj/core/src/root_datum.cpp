#include "iwahori/root_datum.hpp"

#include "iwahori/matrix.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace iwahori {

GroupType parse_group(std::string_view name) {
  if (name == "sl2") return GroupType::SL2;
  if (name == "sl3") return GroupType::SL3;
  if (name == "sp4") return GroupType::Sp4;
  throw std::invalid_argument("unsupported group '" + std::string(name) + "' (expected sl2, sl3 or sp4)");
}

std::string group_name(GroupType type) {
  switch (type) {
    case GroupType::SL2: return "sl2";
    case GroupType::SL3: return "sl3";
    case GroupType::Sp4: return "sp4";
  }
  return {};
}

int pairing(const IntVec& x, const IntVec& y) {
  return std::inner_product(x.begin(), x.end(), y.begin(), 0);
}

Rational pairing(const RatVec& x, const IntVec& y) {
  Rational s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
  return s;
}

RatVec to_rational(const IntVec& v) { return RatVec(v.begin(), v.end()); }

IntVec WeylElement::act(const IntVec& x) const {
  IntVec out(matrix.size(), 0);
  for (std::size_t i = 0; i < matrix.size(); ++i) out[i] = pairing(matrix[i], x);
  return out;
}

RatVec WeylElement::act(const RatVec& x) const {
  RatVec out(matrix.size(), Rational(0));
  for (std::size_t i = 0; i < matrix.size(); ++i) out[i] = pairing(x, matrix[i]);
  return out;
}

std::string WeylElement::word_string() const {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

namespace {

using IntMatrix = std::vector<IntVec>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.size(), IntVec(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

IntVec negate(IntVec v) {
  for (auto& x : v) x = -x;
  return v;
}

IntVec coroot_of(const IntVec& a) {
  // α∨ = 2α/(α,α) for the dot product on ε-coordinates.
  int norm = pairing(a, a);
  IntVec out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if ((2 * a[k]) % norm != 0) throw std::logic_error("non-integral coroot");
    out[k] = 2 * a[k] / norm;
  }
  return out;
}

std::vector<WeylElement> enumerate_weyl(const std::vector<IntVec>& simple) {
  const std::size_t n = simple[0].size();
  std::vector<IntMatrix> gens;
  for (const auto& a : simple) {
    IntVec c = coroot_of(a);
    IntMatrix s(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s[i][j] = (i == j ? 1 : 0) - a[i] * c[j];
    gens.push_back(std::move(s));
  }
  IntMatrix id(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  std::vector<WeylElement> out{WeylElement{0, id, {}}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      IntMatrix m = multiply(gens[g], out[cur].matrix);
      auto seen = std::find_if(out.begin(), out.end(), [&](const WeylElement& w) { return w.matrix == m; });
      if (seen != out.end()) continue;
      std::vector<int> word{static_cast<int>(g) + 1};
      word.insert(word.end(), out[cur].word.begin(), out[cur].word.end());
      out.push_back(WeylElement{out.size(), std::move(m), std::move(word)});
      queue.push_back(out.size() - 1);
    }
  }
  return out;
}

}  // namespace

RootDatum RootDatum::make(GroupType type) {
  RootDatum d;
  d.type_ = type;
  std::vector<IntVec> positive;
  if (type == GroupType::SL2 || type == GroupType::SL3) {
    const int n = type == GroupType::SL2 ? 2 : 3;
    d.ambient_ = n;
    for (int k = 0; k < n; ++k) {
      IntVec e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(k)] = 1;
      d.weights_.push_back(e);
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        IntVec r(static_cast<std::size_t>(n), 0);
        r[static_cast<std::size_t>(i)] = 1;
        r[static_cast<std::size_t>(j)] = -1;
        positive.push_back(r);
      }
    for (int i = 0; i + 1 < n; ++i) {
      IntVec s = d.weights_[static_cast<std::size_t>(i)];
      s[static_cast<std::size_t>(i) + 1] = -1;
      d.base_simple_.push_back(s);
    }
    d.base_names_ = n == 2 ? std::vector<std::string>{"alpha"} : std::vector<std::string>{"alpha1", "alpha2"};
  } else {
    d.ambient_ = 2;
    d.weights_ = {{1, 0}, {0, 1}, {0, -1}, {-1, 0}};
    positive = {{1, -1}, {0, 2}, {1, 1}, {2, 0}};
    d.base_simple_ = {{1, -1}, {0, 2}};
    d.base_names_ = {"alpha", "beta"};
  }
  for (auto& v : positive) d.positive_.push_back(Root{v, {}, {}, 0, {}});
  for (const auto& s : d.base_simple_) {
    auto it = std::find_if(d.positive_.begin(), d.positive_.end(), [&](const Root& r) { return r.vec == s; });
    d.simple_.push_back(static_cast<std::size_t>(it - d.positive_.begin()));
  }
  d.weyl_ = std::make_shared<const std::vector<WeylElement>>(enumerate_weyl(d.base_simple_));
  d.finish();
  return d;
}

RootDatum RootDatum::opposite() const {
  RootDatum d = *this;
  d.borel_ = !borel_;
  for (auto& r : d.positive_) r = Root{negate(r.vec), {}, {}, 0, {}};
  d.finish();
  return d;
}

void RootDatum::finish() {
  const std::size_t r = simple_.size();
  // Simple coefficients by exact solve against the simple roots of this system.
  RationalMatrix basis(static_cast<std::size_t>(ambient_), r, Rational(0));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < static_cast<std::size_t>(ambient_); ++i) basis(i, j) = positive_[simple_[j]].vec[i];
  height_.clear();
  for (auto& root : positive_) {
    auto c = solve_unique(basis, to_rational(root.vec));
    if (!c) throw std::logic_error("root outside the simple-root span");
    root.simple_coeffs.clear();
    root.height = 0;
    for (const auto& x : *c) {
      root.simple_coeffs.push_back(static_cast<int>(numerator(x)));
      root.height += static_cast<int>(numerator(x));
    }
    root.coroot = coroot_of(root.vec);
    root.label = label(root.vec);
    height_[root.vec] = root.height;
    height_[negate(root.vec)] = -root.height;
  }
  // Simple roots keep their positions; the rest sort by height then ε-coordinates.
  std::vector<IntVec> simple_vecs;
  for (auto i : simple_) simple_vecs.push_back(positive_[i].vec);
  std::stable_sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    return a.height != b.height ? a.height < b.height : a.vec > b.vec;
  });
  for (std::size_t j = 0; j < r; ++j) {
    auto it = std::find_if(positive_.begin(), positive_.end(), [&](const Root& x) { return x.vec == simple_vecs[j]; });
    simple_[j] = static_cast<std::size_t>(it - positive_.begin());
  }
  delta_.assign(static_cast<std::size_t>(ambient_), Rational(0));
  for (const auto& root : positive_)
    for (std::size_t k = 0; k < delta_.size(); ++k) delta_[k] += Rational(root.vec[k], 2);
  // μ₀: ⟨α, μ₀⟩ = 1 on simple roots, coordinates summing to zero for SL_n.
  const bool special_linear = type_ != GroupType::Sp4;
  RationalMatrix sys(r + (special_linear ? 1 : 0), static_cast<std::size_t>(ambient_), Rational(0));
  RationalVector rhs(sys.rows(), Rational(0));
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < static_cast<std::size_t>(ambient_); ++k) sys(j, k) = positive_[simple_[j]].vec[k];
    rhs[j] = 1;
  }
  if (special_linear)
    for (std::size_t k = 0; k < static_cast<std::size_t>(ambient_); ++k) sys(r, k) = 1;
  mu0_ = *solve_unique(sys, rhs);
  Integer scale = 1;
  for (const auto& x : mu0_) scale = lcm(scale, denominator(x));
  mu_scale_ = static_cast<int>(scale);
}

std::vector<IntVec> RootDatum::roots() const {
  std::vector<IntVec> out;
  for (const auto& r : positive_) out.push_back(r.vec);
  for (const auto& r : positive_) out.push_back(negate(r.vec));
  return out;
}

bool RootDatum::is_root(const IntVec& v) const { return height_.count(v) > 0; }

bool RootDatum::is_positive(const IntVec& v) const { return height(v) > 0; }

int RootDatum::height(const IntVec& root) const {
  auto it = height_.find(root);
  if (it == height_.end()) throw std::invalid_argument("not a root");
  return it->second;
}

IntVec RootDatum::coroot(const IntVec& root) const {
  if (!is_root(root)) throw std::invalid_argument("not a root");
  return coroot_of(root);
}

std::string RootDatum::label(const IntVec& root) const {
  RationalMatrix basis(static_cast<std::size_t>(ambient_), base_simple_.size(), Rational(0));
  for (std::size_t j = 0; j < base_simple_.size(); ++j)
    for (std::size_t i = 0; i < static_cast<std::size_t>(ambient_); ++i) basis(i, j) = base_simple_[j][i];
  auto c = solve_unique(basis, to_rational(root));
  if (!c) throw std::invalid_argument("not in the root lattice");
  std::string out;
  for (std::size_t j = 0; j < c->size(); ++j) {
    const Rational& x = (*c)[j];
    if (x == 0) continue;
    if (x < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    Rational a = abs(x);
    if (a != 1) out += to_string(a);
    out += base_names_[j];
  }
  return out.empty() ? "0" : out;
}

const Root& RootDatum::highest_root() const {
  return *std::max_element(positive_.begin(), positive_.end(),
                           [](const Root& a, const Root& b) { return a.height < b.height; });
}

const WeylElement& RootDatum::simple_reflection(int i) const {
  if (i < 1 || i > rank()) throw std::invalid_argument("simple reflection index out of range: " + std::to_string(i));
  return weyl_group()[static_cast<std::size_t>(i)];
}

const WeylElement& RootDatum::compose(const WeylElement& a, const WeylElement& b) const {
  auto m = multiply(a.matrix, b.matrix);
  for (const auto& w : weyl_group())
    if (w.matrix == m) return w;
  throw std::logic_error("Weyl group not closed under composition");
}

const WeylElement& RootDatum::inverse(const WeylElement& w) const {
  for (const auto& x : weyl_group())
    if (compose(x, w) == identity()) return x;
  throw std::logic_error("Weyl element without inverse");
}

const WeylElement& RootDatum::longest() const {
  return *std::max_element(weyl_group().begin(), weyl_group().end(),
                           [this](const WeylElement& a, const WeylElement& b) { return length(a) < length(b); });
}

const WeylElement& RootDatum::parse_word(std::string_view word) const {
  std::vector<int> letters;
  std::string s(word);
  if (s != "e" && !s.empty()) {
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) letters.push_back(std::stoi(cur));
      cur.clear();
    };
    const bool separated = s.find(',') != std::string::npos || s.find('s') != std::string::npos;
    for (char ch : s) {
      if (ch == ',' || ch == 's') {
        flush();
      } else if (ch >= '0' && ch <= '9') {
        cur += ch;
        if (!separated) flush();
      } else {
        throw std::invalid_argument("bad Weyl word '" + s + "'");
      }
    }
    flush();
  }
  const WeylElement* w = &identity();
  for (int i : letters) w = &compose(*w, simple_reflection(i));
  return *w;
}

int RootDatum::length(const WeylElement& w) const {
  const auto& inv = inverse(w);
  int n = 0;
  for (const auto& r : positive_)
    if (!is_positive(inv.act(r.vec))) ++n;
  return n;
}

std::optional<IntVec> RootDatum::intersection_witness(const WeylElement& w, const WeylElement& w2) const {
  const auto& inv2 = inverse(w2);
  for (const auto& r : positive_) {
    IntVec g = w.act(r.vec);
    if (!is_positive(inv2.act(g))) return g;
  }
  return std::nullopt;
}

std::vector<int> RootDatum::position_permutation(const WeylElement& w) const {
  std::vector<int> sigma;
  for (const auto& d : weights_) {
    IntVec img = w.act(d);
    auto it = std::find(weights_.begin(), weights_.end(), img);
    if (it == weights_.end()) throw std::logic_error("Weyl element does not permute the diagonal weights");
    sigma.push_back(static_cast<int>(it - weights_.begin()));
  }
  return sigma;
}

IntVec RootDatum::adapted_cocharacter(const WeylElement& w) const {
  IntVec mu;
  for (const auto& x : mu0_) mu.push_back(static_cast<int>(numerator(Rational(x * mu_scale_))));
  return w.act(mu);
}

RatVec RootDatum::normalize_character(const RatVec& chi) const {
  if (type_ == GroupType::Sp4) return chi;
  Rational mean = 0;
  for (const auto& x : chi) mean += x;
  mean /= static_cast<int>(chi.size());
  RatVec out = chi;
  for (auto& x : out) x -= mean;
  return out;
}

bool RootDatum::in_cocharacter_lattice(const IntVec& y) const {
  if (type_ == GroupType::Sp4) return true;
  return std::accumulate(y.begin(), y.end(), 0) == 0;
}

}  // namespace iwahori
