#include "qnve/symbols.hpp"

#include <array>
#include <charconv>

namespace qnve {

namespace {

constexpr std::array<std::string_view, 13> kFixedNames = {
    "x", "x1", "y1", "b", "c", "d", "e", "a", "K1", "K2", "K3", "x2", "t"};

constexpr std::array<std::string_view, 4> kJetPrefix = {"alpha", "phi", "a_", "y_"};

std::optional<unsigned> parse_order(std::string_view digits) {
  if (digits.empty() || digits.size() > 6) return std::nullopt;
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  if (digits.size() > 1 && digits.front() == '0') return std::nullopt;
  return value;
}

}  // namespace

Var jet(JetFamily family, unsigned order) {
  if (order > kMaxJetOrder) throw SymbolError("jet order out of range: " + std::to_string(order));
  return static_cast<Var>(kFirstJet + 4 * order + static_cast<unsigned>(family));
}

bool is_jet(Var v) { return v >= kFirstJet && v < kFirstJet + 4 * (kMaxJetOrder + 1); }

std::pair<JetFamily, unsigned> jet_info(Var v) {
  if (!is_jet(v)) throw SymbolError("not a jet symbol: id " + std::to_string(v));
  const unsigned offset = v - kFirstJet;
  return {static_cast<JetFamily>(offset % 4), offset / 4};
}

bool is_valid_var(Var v) { return v < kFixedNames.size() || is_jet(v); }

std::string var_name(Var v) {
  if (v < kFixedNames.size()) return std::string(kFixedNames[v]);
  if (!is_jet(v)) throw SymbolError("unknown symbol id " + std::to_string(v));
  auto [family, order] = jet_info(v);
  return std::string(kJetPrefix[static_cast<unsigned>(family)]) + std::to_string(order);
}

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFixedNames.size(); ++i)
    if (kFixedNames[i] == name) return static_cast<Var>(i);
  for (std::size_t f = 0; f < kJetPrefix.size(); ++f) {
    const auto prefix = kJetPrefix[f];
    if (name.size() > prefix.size() && name.substr(0, prefix.size()) == prefix) {
      if (auto order = parse_order(name.substr(prefix.size())); order && *order <= kMaxJetOrder)
        return jet(static_cast<JetFamily>(f), *order);
    }
  }
  return std::nullopt;
}

Var var_named(std::string_view name) {
  if (auto v = var_from_name(name)) return *v;
  throw SymbolError("unknown symbol '" + std::string(name) + "'");
}

}  // namespace qnve
