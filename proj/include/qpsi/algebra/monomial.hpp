#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qpsi::algebra {

inline constexpr std::size_t kMaxSymbols = 12;

// Exponent vector of a Laurent monomial, one slot per symbol of the owning
// SymbolTable. Unused slots stay zero, so monomials from the same table
// compare and hash consistently.
class Monomial {
 public:
  using Exponent = std::int16_t;

  Monomial() = default;

  static Monomial variable(std::size_t index, int power = 1);

  Exponent operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int value);

  bool is_one() const;
  int degree_in(std::size_t i) const { return e_[i]; }

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(int k) const;

  // Same monomial with slot i cleared.
  Monomial without(std::size_t i) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxSymbols> e_{};
};

// Ordered symbol names. Index assignment is fixed once the table is built.
class SymbolTable {
 public:
  SymbolTable() = default;
  SymbolTable(std::initializer_list<std::string> names);
  explicit SymbolTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t index(std::string_view name) const;
  bool contains(std::string_view name) const;

  Monomial var(std::string_view name, int power = 1) const { return Monomial::variable(index(name), power); }

  std::string format(const Monomial& m) const;

  friend bool operator==(const SymbolTable&, const SymbolTable&) = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace qpsi::algebra
