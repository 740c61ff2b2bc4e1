#include "arcv/character.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "arcv/errors.hpp"

namespace arcv {

LaurentCharacter LaurentCharacter::unit(int qmax) {
  LaurentCharacter c(qmax);
  c.add(0, QSeries::one(qmax));
  return c;
}

QSeries LaurentCharacter::at(int weight) const {
  auto it = terms_.find(weight);
  return it == terms_.end() ? QSeries::zero(qmax_) : it->second;
}

Rational LaurentCharacter::coefficient(int weight, int qdeg) const {
  auto it = terms_.find(weight);
  if (it == terms_.end() || qdeg < 0 || qdeg > qmax_) return 0;
  return it->second[qdeg];
}

void LaurentCharacter::add(int weight, const QSeries& s) {
  if (s.qmax() != qmax_) throw UsageError("LaurentCharacter: qmax mismatch");
  auto [it, inserted] = terms_.try_emplace(weight, s);
  if (!inserted) it->second += s;
  if (it->second.is_zero()) terms_.erase(it);
}

void LaurentCharacter::add(int weight, int qdeg, const Rational& c) {
  if (qdeg > qmax_ || c == 0) return;
  add(weight, QSeries::monomial(qmax_, qdeg, c));
}

LaurentCharacter& LaurentCharacter::operator+=(const LaurentCharacter& o) {
  for (const auto& [w, s] : o.terms_) add(w, s);
  return *this;
}

LaurentCharacter& LaurentCharacter::operator*=(const QSeries& s) {
  if (s.qmax() != qmax_) throw UsageError("LaurentCharacter: qmax mismatch");
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

bool operator==(const LaurentCharacter& a, const LaurentCharacter& b) {
  if (a.qmax_ != b.qmax_) return false;
  std::set<int> ws;
  for (const auto& kv : a.terms_) ws.insert(kv.first);
  for (const auto& kv : b.terms_) ws.insert(kv.first);
  for (int w : ws)
    if (!(a.at(w) == b.at(w))) return false;
  return true;
}

bool dominated_by(const LaurentCharacter& a, const LaurentCharacter& b) {
  if (a.qmax_ != b.qmax_) throw UsageError("dominated_by: qmax mismatch");
  std::set<int> ws;
  for (const auto& kv : a.terms_) ws.insert(kv.first);
  for (const auto& kv : b.terms_) ws.insert(kv.first);
  for (int w : ws)
    for (int k = 0; k <= a.qmax_; ++k)
      if (a.coefficient(w, k) > b.coefficient(w, k)) return false;
  return true;
}

std::vector<int> LaurentCharacter::support() const {
  std::vector<int> out;
  for (const auto& [w, s] : terms_)
    if (!s.is_zero()) out.push_back(w);
  return out;
}

Rational LaurentCharacter::total_at_one() const {
  Rational t = 0;
  for (const auto& kv : terms_) t += kv.second.at_one();
  return t;
}

int LaurentCharacter::top_degree() const {
  int top = -1;
  for (const auto& kv : terms_) top = std::max(top, kv.second.top_degree());
  return top;
}

std::string LaurentCharacter::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << "\n";
    first = false;
    os << "e^(" << it->first << "w): " << it->second.to_string();
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace arcv
