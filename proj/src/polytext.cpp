#include "ctseq/polytext.hpp"

#include <algorithm>
#include <cctype>

namespace ctseq {

  namespace {

    enum class Tok { number, variable, plus, minus, star, slash, caret, lparen, rparen, end };

    struct Token {
      Tok kind;
      std::size_t pos;
      std::uint64_t value = 0;  // number value or variable index (0-based)
    };

    struct Lexed {
      std::vector<Token> tokens;
      std::size_t variables = 1;
    };

    Lexed lex(std::string_view s)
    {
      Lexed out;
      bool named = false, indexed = false;
      std::size_t named_pos = 0, indexed_pos = 0;
      std::size_t max_index = 0;
      for (std::size_t i = 0; i < s.size();) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
          continue;
        }
        Token t{Tok::end, i};
        if (std::isdigit(static_cast<unsigned char>(c))) {
          std::uint64_t v = 0;
          std::size_t j = i;
          for (; j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])); ++j) {
            if (v > (static_cast<std::uint64_t>(INT64_MAX) - (s[j] - '0')) / 10)
              throw ParseError("integer literal too large", i);
            v = v * 10 + static_cast<std::uint64_t>(s[j] - '0');
          }
          t.kind = Tok::number;
          t.value = v;
          i = j;
        } else if (c == 'x' || c == 'y' || c == 'z') {
          std::size_t j = i + 1;
          if (c == 'x' && j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
            std::uint64_t v = 0;
            for (; j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])); ++j) {
              v = v * 10 + static_cast<std::uint64_t>(s[j] - '0');
              if (v > 4096)
                throw ParseError("variable index too large", i);
            }
            if (v == 0)
              throw ParseError("variable indices start at x1", i);
            t.value = v - 1;
            if (!indexed)
              indexed_pos = i;
            indexed = true;
          } else {
            t.value = c == 'x' ? 0 : c == 'y' ? 1 : 2;
            if (!named)
              named_pos = i;
            named = true;
          }
          if (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j])))
            throw ParseError("unknown identifier", i);
          t.kind = Tok::variable;
          max_index = std::max<std::size_t>(max_index, t.value);
          i = j;
        } else {
          switch (c) {
            case '+': t.kind = Tok::plus; break;
            case '-': t.kind = Tok::minus; break;
            case '*': t.kind = Tok::star; break;
            case '/': t.kind = Tok::slash; break;
            case '^': t.kind = Tok::caret; break;
            case '(': t.kind = Tok::lparen; break;
            case ')': t.kind = Tok::rparen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
          }
          ++i;
        }
        out.tokens.push_back(t);
      }
      if (named && indexed)
        throw ParseError("cannot mix x, y, z with indexed variables", std::max(named_pos, indexed_pos));
      out.tokens.push_back(Token{Tok::end, s.size()});
      out.variables = max_index + 1;
      return out;
    }

    class Parser {
    public:
      Parser(std::vector<Token> tokens, std::size_t vars)
        : toks_(std::move(tokens)), vars_(vars) {}

      LaurentPoly parse()
      {
        LaurentPoly p = poly();
        if (peek().kind != Tok::end)
          throw ParseError("unexpected token", peek().pos);
        return p;
      }

    private:
      const Token& peek() const { return toks_[i_]; }
      const Token& take() { return toks_[i_++]; }
      bool accept(Tok k)
      {
        if (peek().kind != k)
          return false;
        ++i_;
        return true;
      }

      LaurentPoly poly()
      {
        LaurentPoly acc = term();
        while (true) {
          if (accept(Tok::plus))
            acc = add(acc, term());
          else if (accept(Tok::minus))
            acc = sub(acc, term());
          else
            return acc;
        }
      }

      LaurentPoly term()
      {
        bool negate = false;
        if (accept(Tok::minus))
          negate = true;
        else
          accept(Tok::plus);
        LaurentPoly acc = factor();
        while (true) {
          if (accept(Tok::star)) {
            acc = mul(acc, factor());
          } else if (peek().kind == Tok::slash) {
            const std::size_t pos = take().pos;
            acc = mul(acc, inverse_monomial(factor(), pos));
          } else {
            break;
          }
        }
        return negate ? acc.scaled(-1) : acc;
      }

      LaurentPoly inverse_monomial(const LaurentPoly& d, std::size_t pos)
      {
        if (d.term_count() != 1)
          throw ParseError("division by a non-monomial", pos);
        const Scalar c = d.coefficient(0);
        if (c != 1 && c != -1)
          throw ParseError("division by a monomial whose coefficient is not +-1", pos);
        ExponentVector e(d.exponent(0));
        for (std::size_t k = 0; k < e.size(); ++k)
          e[k] = -e[k];
        return LaurentPoly::monomial(e, c);
      }

      std::int64_t signed_integer()
      {
        bool neg = false;
        if (accept(Tok::minus))
          neg = true;
        else
          accept(Tok::plus);
        const Token& t = peek();
        if (t.kind != Tok::number)
          throw ParseError("expected an integer exponent", t.pos);
        take();
        if (t.value > (1u << 30))
          throw ParseError("exponent too large", t.pos);
        const auto v = static_cast<std::int64_t>(t.value);
        return neg ? -v : v;
      }

      LaurentPoly factor()
      {
        const Token& t = peek();
        switch (t.kind) {
          case Tok::number:
            take();
            return LaurentPoly::constant(vars_, static_cast<Scalar>(t.value));
          case Tok::variable: {
            take();
            ExponentVector e(vars_);
            std::int64_t power = 1;
            if (accept(Tok::caret))
              power = signed_integer();
            e[static_cast<std::size_t>(t.value)] = static_cast<Exponent>(power);
            return LaurentPoly::monomial(e, 1);
          }
          case Tok::lparen: {
            take();
            LaurentPoly inner = poly();
            if (!accept(Tok::rparen))
              throw ParseError("expected ')'", peek().pos);
            if (accept(Tok::caret)) {
              const std::size_t pos = peek().pos;
              const std::int64_t n = signed_integer();
              if (n < 0)
                throw ParseError("negative power of a parenthesized expression", pos);
              inner = pow(inner, static_cast<std::uint64_t>(n));
            }
            return inner;
          }
          default:
            throw ParseError("expected a number, variable or '('", t.pos);
        }
      }

      std::vector<Token> toks_;
      std::size_t i_ = 0;
      std::size_t vars_;
    };

  } // namespace

  LaurentPoly parse_poly(std::string_view text, std::size_t min_variables)
  {
    Lexed lexed = lex(text);
    const std::size_t vars = std::max<std::size_t>({lexed.variables, min_variables, 1});
    return Parser(std::move(lexed.tokens), vars).parse();
  }

  std::string format_poly(const LaurentPoly& a)
  {
    if (a.is_zero())
      return "0";
    const std::size_t r = a.variable_count();
    auto name = [r](std::size_t d) {
      if (r <= 3)
        return std::string(1, "xyz"[d]);
      return "x" + std::to_string(d + 1);
    };
    std::string out;
    for (std::size_t t = 0; t < a.term_count(); ++t) {
      std::string mono;
      auto e = a.exponent(t);
      for (std::size_t d = 0; d < r; ++d) {
        if (e[d] == 0)
          continue;
        if (!mono.empty())
          mono += '*';
        mono += name(d);
        if (e[d] != 1)
          mono += '^' + std::to_string(e[d]);
      }
      const Scalar c = a.coefficient(t);
      const bool negative = c < 0;
      const std::uint64_t mag = negative ? static_cast<std::uint64_t>(-(c + 1)) + 1
                                         : static_cast<std::uint64_t>(c);
      std::string body;
      if (mono.empty())
        body = std::to_string(mag);
      else if (mag == 1)
        body = mono;
      else
        body = std::to_string(mag) + '*' + mono;
      if (t == 0)
        out += negative ? "-" + body : body;
      else
        out += (negative ? " - " : " + ") + body;
    }
    return out;
  }

  const std::vector<Preset>& presets()
  {
    static const std::vector<Preset> table = {
      {"pascal", "x^-1 + x", "1"},
      {"catalan", "x^-1 + 2 + x", "1 - x"},
      {"motzkin", "x^-1 + 1 + x", "1 - x^2"},
      {"trinomial", "x^-1 + 1 + x", "1"},
      {"apery", "(1+x)*(1+y)*(1+z)*(1+y+z+y*z+x*y*z)/(x*y*z)", "1"},
    };
    return table;
  }

  std::optional<Preset> find_preset(std::string_view name)
  {
    for (const auto& p : presets()) {
      if (p.name == name)
        return p;
    }
    return std::nullopt;
  }

} // namespace ctseq
