#ifndef MEASRW_SEMANTICS_HPP
#define MEASRW_SEMANTICS_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "measrw/expr.hpp"
#include "measrw/syntax.hpp"

namespace measrw {

/// Hidden-value world: one exact value per observation token. Lookup is
/// total; tokens without a binding read as 0.
class TokenEnv {
public:
  TokenEnv() = default;
  explicit TokenEnv(std::map<Token, Rational> bindings) : bindings_(std::move(bindings)) {}

  Rational operator()(const Token& t) const {
    auto it = bindings_.find(t);
    return it == bindings_.end() ? Rational() : it->second;
  }

  void bind(Token t, Rational v) { bindings_[std::move(t)] = std::move(v); }
  const std::map<Token, Rational>& bindings() const { return bindings_; }

  friend bool operator==(const TokenEnv&, const TokenEnv&) = default;

private:
  std::map<Token, Rational> bindings_;
};

/// Structural evaluation; division is total with x / 0 = 0.
Rational eval(const TokenEnv& sigma, const Expr& e);

/// Every measured leaf's interval contains sigma at its token.
bool token_consistent(const TokenEnv& sigma, const Expr& e);

/// Value of an expression without measured leaves; nullopt otherwise.
std::optional<Rational> exact_value(const Expr& e);

/// Environment file: one `token = rational` binding per line, `#` comments.
/// Throws ParseError (position is a byte offset) on malformed lines or a
/// token bound twice.
TokenEnv parse_env(std::string_view text);

std::string print_env(const TokenEnv& sigma);

}  // namespace measrw

#endif  // MEASRW_SEMANTICS_HPP
