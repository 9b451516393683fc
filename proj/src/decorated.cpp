#include "lexspec/decorated.hpp"

#include "lexspec/errors.hpp"

namespace lexspec {

DecReal DecReal::normalize(Kind kind, const Rat& value, Decor decor) {
  switch (kind) {
    case Kind::neg_inf:
      if (decor == Decor::minus) throw UndefinedSymbolError("-inf^- is not defined");
      return neg_inf(); // -inf^+ = -inf
    case Kind::pos_inf:
      if (decor == Decor::plus) throw UndefinedSymbolError("inf^+ is not defined");
      return pos_inf(); // inf^- = inf
    case Kind::finite:
      return decor == Decor::plus ? after(value) : at(value); // r^- = r
  }
  throw UndefinedSymbolError("unknown decorated symbol");
}

std::string DecReal::str() const {
  switch (kind_) {
    case Kind::neg_inf: return "-inf";
    case Kind::pos_inf: return "inf";
    case Kind::finite: return plus_ ? value_.str() + "+" : value_.str();
  }
  return "?";
}

DecReal DecReal::parse(std::string_view text) {
  Decor decor = Decor::plain;
  if (!text.empty() && (text.back() == '+' || text.back() == '-') && text.size() > 1 &&
      text != "-inf") {
    // A trailing sign after at least one digit is a decoration.
    char last = text.back();
    char prev = text[text.size() - 2];
    if (prev >= '0' && prev <= '9') {
      decor = last == '+' ? Decor::plus : Decor::minus;
      text.remove_suffix(1);
    } else if (text.substr(0, text.size() - 1) == "-inf" || text.substr(0, text.size() - 1) == "inf") {
      decor = last == '+' ? Decor::plus : Decor::minus;
      text.remove_suffix(1);
    }
  }
  if (text == "-inf") return normalize(Kind::neg_inf, Rat(0), decor);
  if (text == "inf" || text == "+inf") return normalize(Kind::pos_inf, Rat(0), decor);
  return normalize(Kind::finite, Rat::parse(text), decor);
}

} // namespace lexspec
