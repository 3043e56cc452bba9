#ifndef LEXFST_SYMBOLS_HPP
#define LEXFST_SYMBOLS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace lexfst {

using Symbol = uint32_t;
using StateId = uint32_t;

// A sequence of output-alphabet symbol ids. Empty means epsilon.
using OutputString = std::vector<Symbol>;

inline constexpr Symbol kEpsilon = 0;
inline constexpr const char* kEpsilonName = "<eps>";

// Bijection between external UTF-8 symbol strings and dense ids.
// Id 0 is always "<eps>".
class SymbolTable {
public:
  SymbolTable() { intern(kEpsilonName); }

  Symbol intern(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    Symbol id = static_cast<Symbol>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, id);
    return id;
  }

  std::optional<Symbol> find(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& name(Symbol id) const { return names_.at(id); }
  size_t size() const { return names_.size(); }

  bool operator==(const SymbolTable& o) const { return names_ == o.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Symbol> ids_;
};

// Splits a UTF-8 string into one token per code point.
std::vector<std::string> split_utf8(const std::string& s);

// Splits on ASCII whitespace runs.
std::vector<std::string> split_space(const std::string& s);

}  // namespace lexfst

#endif  // LEXFST_SYMBOLS_HPP
