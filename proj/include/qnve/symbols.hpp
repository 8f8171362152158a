#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace qnve {

/// Symbol identifier. Smaller ids are more significant in the lexicographic
/// term order, so the numeric order of the ids *is* the canonical variable
/// order shared by every module.
using Var = std::uint16_t;

namespace sym {
inline constexpr Var x = 0;
inline constexpr Var x1 = 1;
inline constexpr Var y1 = 2;
inline constexpr Var b = 3;
inline constexpr Var c = 4;
inline constexpr Var d = 5;
inline constexpr Var e = 6;
inline constexpr Var a = 7;
inline constexpr Var K1 = 8;
inline constexpr Var K2 = 9;
inline constexpr Var K3 = 10;
inline constexpr Var x2 = 11;
inline constexpr Var t = 12;
}  // namespace sym

/// Jet families. Jet symbols are interleaved by order after the fixed block.
enum class JetFamily : std::uint8_t {
  Alpha = 0,      // alpha<r>  : r-th x1-derivative of alpha
  Phi = 1,        // phi<s>    : s-th x1-derivative of phi
  NveCoeff = 2,   // a_<k>     : k-th t-derivative of the NVE coefficient a(t)
  Unknown = 3,    // y_<k>     : k-th derivative of the unknown of an ODE
};

inline constexpr Var kFirstJet = 16;
inline constexpr unsigned kMaxJetOrder = 4000;

class SymbolError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Var jet(JetFamily family, unsigned order);
bool is_jet(Var v);
std::pair<JetFamily, unsigned> jet_info(Var v);

/// True for ids that name a symbol (fixed block or jet range).
bool is_valid_var(Var v);

std::string var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// Throws SymbolError for unknown names.
Var var_named(std::string_view name);

}  // namespace qnve
