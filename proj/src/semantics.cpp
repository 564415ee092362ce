#include "measrw/semantics.hpp"

#include <cctype>

namespace measrw {

Rational eval(const TokenEnv& sigma, const Expr& e) {
  const auto& v = e.node().v;
  if (auto* x = std::get_if<ExactLeaf>(&v)) return x->value;
  if (auto* m = std::get_if<MeasLeaf>(&v)) return sigma(m->token);
  if (auto* n = std::get_if<NegNode>(&v)) return -eval(sigma, n->operand);
  const auto& b = std::get<BinaryNode>(v);
  Rational l = eval(sigma, b.lhs);
  Rational r = eval(sigma, b.rhs);
  switch (b.op) {
    case BinaryOp::Add: return l + r;
    case BinaryOp::Sub: return l - r;
    case BinaryOp::Mul: return l * r;
    case BinaryOp::Div: return l / r;
  }
  return {};
}

bool token_consistent(const TokenEnv& sigma, const Expr& e) {
  const auto& v = e.node().v;
  if (std::holds_alternative<ExactLeaf>(v)) return true;
  if (auto* m = std::get_if<MeasLeaf>(&v)) return m->interval.contains(sigma(m->token));
  if (auto* n = std::get_if<NegNode>(&v)) return token_consistent(sigma, n->operand);
  const auto& b = std::get<BinaryNode>(v);
  return token_consistent(sigma, b.lhs) && token_consistent(sigma, b.rhs);
}

std::optional<Rational> exact_value(const Expr& e) {
  if (!is_exact(e)) return std::nullopt;
  return eval(TokenEnv{}, e);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_ident(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

TokenEnv parse_env(std::string_view text) {
  TokenEnv env;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    if (!trim(line).empty()) {
      auto eq = line.find('=');
      if (eq == std::string_view::npos)
        throw ParseError(ParseError::Kind::Syntax, offset, "expected 'token = rational'");
      std::string_view name = trim(line.substr(0, eq));
      std::string_view value = trim(line.substr(eq + 1));
      if (!valid_ident(name))
        throw ParseError(ParseError::Kind::Syntax, offset, "invalid token name '" + std::string(name) + "'");
      Token tok{std::string(name)};
      if (env.bindings().count(tok))
        throw ParseError(ParseError::Kind::Syntax, offset, "token '" + tok.name + "' bound twice");
      try {
        env.bind(std::move(tok), Rational::parse(value));
      } catch (const std::invalid_argument& ex) {
        throw ParseError(ParseError::Kind::Syntax, offset + eq + 1, ex.what());
      }
    }
    offset = end + 1;
  }
  return env;
}

std::string print_env(const TokenEnv& sigma) {
  std::string out;
  for (const auto& [t, v] : sigma.bindings()) out += t.name + " = " + v.str() + "\n";
  return out;
}

}  // namespace measrw
