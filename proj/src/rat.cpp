#include "lexspec/rat.hpp"

#include <cctype>
#include <ostream>

#include "lexspec/errors.hpp"

namespace lexspec {

Rat::Rat(long n, long d) {
  if (d == 0) throw ParseError("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  // Keep the accepted grammar strict: digits, one optional leading '-',
  // one optional '/'. mpq_class would also accept whitespace and bases.
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t i = 0;
  if (text[i] == '-') ++i;
  bool digits = false, slash = false, denom_digits = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      if (slash || !digits) throw ParseError("malformed rational: " + std::string(text));
      slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? denom_digits : digits) = true;
    } else {
      throw ParseError("malformed rational: " + std::string(text));
    }
  }
  if (!digits || (slash && !denom_digits))
    throw ParseError("malformed rational: " + std::string(text));
  mpq_class v(std::string(text), 10);
  if (v.get_den() == 0) throw ParseError("rational with zero denominator: " + std::string(text));
  v.canonicalize();
  return Rat(std::move(v));
}

std::string Rat::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_.get_str(); }

} // namespace lexspec
