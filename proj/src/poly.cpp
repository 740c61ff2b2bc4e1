#include "arcv/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "arcv/errors.hpp"

namespace arcv {

// ---- Variable ----

namespace {

constexpr std::uint32_t kOuterBits = 12;
constexpr std::uint32_t kInnerBits = 16;
constexpr std::uint32_t kOuterMax = (1u << kOuterBits) - 1;
constexpr std::uint32_t kInnerMax = (1u << kInnerBits) - 1;

void require_range(int v, int lo, std::uint32_t hi, const char* what) {
  if (v < lo || static_cast<std::uint32_t>(v) > hi)
    throw UsageError(std::string("Variable: ") + what + " out of range");
}

}  // namespace

Variable Variable::x(int j, int i) {
  require_range(j, 0, kOuterMax, "x index j");
  require_range(i, 0, kInnerMax, "x jet index i");
  return {Family::X, j, i};
}
Variable Variable::u(int slot) {
  require_range(slot, 1, kOuterMax, "u slot");
  return {Family::U, slot, 0};
}
Variable Variable::z(int slot) {
  require_range(slot, 1, kOuterMax, "z slot");
  return {Family::Z, slot, 0};
}
Variable Variable::a(int i) {
  require_range(i, 0, kInnerMax, "a index");
  return {Family::A, 0, i};
}
Variable Variable::b(int i) {
  require_range(i, 0, kInnerMax, "b index");
  return {Family::B, 0, i};
}
Variable Variable::p(int i) {
  require_range(i, 1, kOuterMax, "power-sum index");
  return {Family::P, i, 0};
}

std::uint32_t Variable::key() const {
  return (static_cast<std::uint32_t>(family) << (kOuterBits + kInnerBits)) |
         (static_cast<std::uint32_t>(outer) << kInnerBits) | static_cast<std::uint32_t>(inner);
}

Variable Variable::from_key(std::uint32_t key) {
  return {static_cast<Family>(key >> (kOuterBits + kInnerBits)),
          static_cast<int>((key >> kInnerBits) & kOuterMax), static_cast<int>(key & kInnerMax)};
}

std::string Variable::name() const {
  switch (family) {
    case Family::X: return "x" + std::to_string(outer) + "_" + std::to_string(inner);
    case Family::U: return "u" + std::to_string(outer);
    case Family::Z: return "z" + std::to_string(outer);
    case Family::A: return "a" + std::to_string(inner);
    case Family::B: return "b" + std::to_string(inner);
    case Family::P: return "p" + std::to_string(outer);
  }
  return "?";
}

// ---- Monomial ----

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (auto& f : factors) {
    if (f.second == 0) continue;
    if (!factors_.empty() && factors_.back().first == f.first)
      factors_.back().second += f.second;
    else
      factors_.push_back(f);
  }
}

Monomial Monomial::of(const Variable& v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v.key(), exponent);
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::exponent(const Variable& v) const {
  const auto key = v.key();
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{key, 0});
  return (it != factors_.end() && it->first == key) ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() ||
        (i < a.factors_.size() && a.factors_[i].first < b.factors_[j].first)) {
      out.factors_.push_back(a.factors_[i++]);
    } else if (i == a.factors_.size() || b.factors_[j].first < a.factors_[i].first) {
      out.factors_.push_back(b.factors_[j++]);
    } else {
      out.factors_.emplace_back(a.factors_[i].first, a.factors_[i].second + b.factors_[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& [k, e] : factors_) {
    h ^= (static_cast<std::size_t>(k) * 0x100000001b3ull + e) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [k, e] : factors_) {
    if (!out.empty()) out += "*";
    out += Variable::from_key(k).name();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = fa.size(), j = fb.size();
  while (i > 0 && j > 0) {
    const auto& x = fa[i - 1];
    const auto& y = fb[j - 1];
    if (x.first > y.first) return false;  // b has exponent 0 at a's last variable
    if (y.first > x.first) return true;
    if (x.second != y.second) return x.second < y.second;
    --i;
    --j;
  }
  // Equal degrees force both lists to run out together.
  return false;
}

bool NilpotentMask::kills(const Monomial& m) const {
  for (const auto& [k, e] : m.factors())
    if (Variable::from_key(k).family == family && e > max_exponent) return true;
  return false;
}

// ---- SparsePoly ----

SparsePoly::SparsePoly(long c) : SparsePoly(Rational(c)) {}

SparsePoly::SparsePoly(const Rational& c) {
  if (c != 0) terms_.emplace_back(Monomial(), c);
}

SparsePoly::SparsePoly(const Variable& v) { terms_.emplace_back(Monomial::of(v), Rational(1)); }

SparsePoly::SparsePoly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace_back(m, c);
}

SparsePoly SparsePoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  SparsePoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().second == 0) p.terms_.pop_back();
  }
  return p;
}

Rational SparsePoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first < key; });
  return (it != terms_.end() && it->first == m) ? it->second : Rational(0);
}

std::vector<Term> SparsePoly::sorted_terms() const {
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(),
            [](const Term& x, const Term& y) { return grevlex_greater(x.first, y.first); });
  return out;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : Rational(-b[j].second));
      ++j;
    } else {
      Rational c = a[i].second;
      if (sign > 0) c += b[j].second; else c -= b[j].second;
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

SparsePoly multiply(const SparsePoly& a, const SparsePoly& b, const NilpotentMask* mask) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms_[0].first.is_one()) return b * a.terms_[0].second;
  if (b.size() == 1 && b.terms_[0].first.is_one()) return a * b.terms_[0].second;
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma * mb;
      if (mask && mask->kills(m)) continue;
      auto [it, inserted] = acc.try_emplace(std::move(m), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& kv : acc)
    if (kv.second != 0) terms.emplace_back(kv.first, std::move(kv.second));
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  SparsePoly out;
  out.terms_ = std::move(terms);
  return out;
}

SparsePoly SparsePoly::times(const Monomial& m, const NilpotentMask* mask) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [mono, c] : terms_) {
    Monomial prod = mono * m;
    if (mask && mask->kills(prod)) continue;
    out.emplace_back(std::move(prod), c);
  }
  return from_terms(std::move(out));
}

SparsePoly SparsePoly::pow(unsigned e, const NilpotentMask* mask) const {
  SparsePoly result(1);
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1u) result = multiply(result, base, mask);
    e >>= 1;
    if (e > 0) base = multiply(base, base, mask);
  }
  return result;
}

SparsePoly SparsePoly::masked(const NilpotentMask& mask) const {
  SparsePoly out;
  for (const auto& t : terms_)
    if (!mask.kills(t.first)) out.terms_.push_back(t);
  return out;
}

SparsePoly SparsePoly::derivative(const Variable& v) const {
  const auto key = v.key();
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> f = m.factors();
    auto it = std::find_if(f.begin(), f.end(), [&](const auto& x) { return x.first == key; });
    if (it == f.end()) continue;
    Rational coeff = c * it->second;
    --it->second;
    out.emplace_back(Monomial(std::move(f)), std::move(coeff));
  }
  return from_terms(std::move(out));
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (m.is_one()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << m.to_string();
    }
  }
  return os.str();
}

// ---- TSeries ----

TSeries::TSeries(std::vector<SparsePoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw UsageError("TSeries: need at least the t^0 coefficient");
}

TSeries TSeries::constant(const SparsePoly& c, int tmax) {
  std::vector<SparsePoly> v(static_cast<std::size_t>(tmax) + 1);
  v[0] = c;
  return TSeries(std::move(v));
}

namespace {

TSeries generic_series(int tmax, const std::function<Variable(int)>& var) {
  if (tmax < 0) throw UsageError("TSeries: negative bound");
  std::vector<SparsePoly> v;
  v.reserve(static_cast<std::size_t>(tmax) + 1);
  for (int i = 0; i <= tmax; ++i) v.emplace_back(var(i));
  return TSeries(std::move(v));
}

}  // namespace

TSeries x_series(int j, int tmax) {
  return generic_series(tmax, [j](int i) { return Variable::x(j, i); });
}
TSeries a_series(int tmax) { return generic_series(tmax, Variable::a); }
TSeries b_series(int tmax) { return generic_series(tmax, Variable::b); }

TSeries tseries_mul(const TSeries& f, const TSeries& g) {
  const int bound = std::min(f.tmax(), g.tmax());
  std::vector<SparsePoly> out(static_cast<std::size_t>(bound) + 1);
  for (int i = 0; i <= bound; ++i) {
    if (f[i].is_zero()) continue;
    for (int j = 0; i + j <= bound; ++j)
      if (!g[j].is_zero()) out[i + j] += f[i] * g[j];
  }
  return TSeries(std::move(out));
}

TSeries tseries_add(const TSeries& f, const TSeries& g) {
  const int bound = std::min(f.tmax(), g.tmax());
  std::vector<SparsePoly> out(static_cast<std::size_t>(bound) + 1);
  for (int k = 0; k <= bound; ++k) out[k] = f[k] + g[k];
  return TSeries(std::move(out));
}

TSeries tseries_scale(const TSeries& f, const Rational& c) {
  std::vector<SparsePoly> out = f.coeffs();
  for (auto& p : out) p *= c;
  return TSeries(std::move(out));
}

TSeries tseries_derivative(const TSeries& f, int w) {
  if (w < 0) throw UsageError("tseries_derivative: negative order");
  if (w > f.tmax())
    throw UsageError("tseries_derivative: order " + std::to_string(w) + " exceeds bound " +
                     std::to_string(f.tmax()));
  if (w == 0) return f;
  const int bound = f.tmax() - w;
  std::vector<SparsePoly> out(static_cast<std::size_t>(bound) + 1);
  for (int k = 0; k <= bound; ++k) {
    Integer falling = 1;  // (k+1)(k+2)...(k+w)
    for (int m = 1; m <= w; ++m) falling *= k + m;
    out[k] = f[k + w] * Rational(falling);
  }
  return TSeries(std::move(out));
}

// ---- substitution ----

SparsePoly substitute(const SparsePoly& p, const Substitution& sigma, const NilpotentMask* mask) {
  std::unordered_map<std::uint64_t, SparsePoly> power_cache;
  auto image_power = [&](std::uint32_t key, std::uint32_t e) -> const SparsePoly& {
    const std::uint64_t ck = (static_cast<std::uint64_t>(key) << 32) | e;
    auto it = power_cache.find(ck);
    if (it != power_cache.end()) return it->second;
    const Variable v = Variable::from_key(key);
    auto img = sigma(v);
    if (!img) throw UsageError("substitute: no image for variable " + v.name());
    return power_cache.emplace(ck, img->pow(e, mask)).first->second;
  };
  SparsePoly out;
  for (const auto& [m, c] : p.terms()) {
    SparsePoly term(c);
    for (const auto& [key, e] : m.factors()) {
      term = multiply(term, image_power(key, e), mask);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

// ---- gradings ----

MultiDegree monomial_degree(const Monomial& m, int l) {
  MultiDegree d;
  d.deg_by_var.assign(static_cast<std::size_t>(std::max(l, 0)) + 1, 0);
  for (const auto& [key, e] : m.factors()) {
    const Variable v = Variable::from_key(key);
    const int ex = static_cast<int>(e);
    switch (v.family) {
      case Family::X:
        d.deg1 += ex;
        d.deg2 += v.inner * ex;
        d.deg3 += (2 * v.outer - l) * ex;
        d.deg_prime += v.outer * v.outer * ex;
        if (v.outer <= l) d.deg_by_var[v.outer] += ex;
        break;
      case Family::U:
        d.deg1 += ex;
        d.deg3 -= 2 * ex;
        break;
      case Family::Z:
        d.deg2 += ex;
        break;
      case Family::A:
        d.deg1 += ex;
        d.deg2 += v.inner * ex;
        d.deg3 -= ex;
        break;
      case Family::B:
        d.deg1 += ex;
        d.deg2 += v.inner * ex;
        d.deg3 += ex;
        break;
      case Family::P:
        d.deg2 += v.outer * ex;
        break;
    }
  }
  return d;
}

std::optional<MultiDegree> multidegree(const SparsePoly& p, int l) {
  if (p.is_zero()) return monomial_degree(Monomial(), l);
  std::optional<MultiDegree> common;
  for (const auto& t : p.terms()) {
    MultiDegree d = monomial_degree(t.first, l);
    if (!common)
      common = std::move(d);
    else if (!common->same_grading(d))
      return std::nullopt;
  }
  return common;
}

}  // namespace arcv
