#include "qpsi/algebra/monomial.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "qpsi/errors.hpp"

namespace qpsi::algebra {

namespace {

Monomial::Exponent checked(int v) {
  if (v > std::numeric_limits<Monomial::Exponent>::max() || v < std::numeric_limits<Monomial::Exponent>::min()) {
    throw Error("monomial exponent overflow");
  }
  return static_cast<Monomial::Exponent>(v);
}

}  // namespace

Monomial Monomial::variable(std::size_t index, int power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int value) {
  if (i >= kMaxSymbols) throw SymbolMismatch("symbol index out of range");
  e_[i] = checked(value);
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) r.e_[i] = checked(int{e_[i]} + int{o.e_[i]});
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) r.e_[i] = checked(-int{e_[i]});
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) r.e_[i] = checked(int{e_[i]} * k);
  return r;
}

Monomial Monomial::without(std::size_t i) const {
  Monomial r = *this;
  r.e_.at(i) = 0;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (Exponent x : e_) {
    h ^= static_cast<std::uint16_t>(x);
    h *= 1099511628211ULL;
  }
  return h;
}

SymbolTable::SymbolTable(std::initializer_list<std::string> names) : SymbolTable(std::vector<std::string>(names)) {}

SymbolTable::SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxSymbols) throw SymbolMismatch("too many symbols (max " + std::to_string(kMaxSymbols) + ")");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw SymbolMismatch("duplicate symbol name");
}

std::size_t SymbolTable::index(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw SymbolMismatch("unknown symbol '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

bool SymbolTable::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::string SymbolTable::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    int e = m[i];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += names_[i];
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

}  // namespace qpsi::algebra
