#include "lexspec/lexgroup.hpp"

#include <algorithm>
#include <sstream>

#include "lexspec/errors.hpp"

namespace lexspec {

namespace {
void check_dim(const GVec& a, const GVec& b) {
  if (a.size() != b.size()) {
    throw DimensionError("GVec dimension mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}
} // namespace

Cmp compare(const GVec& a, const GVec& b) {
  check_dim(a, b);
  bool all_le = true, all_ge = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = a[i] <=> b[i];
    if (c > 0) all_le = false;
    if (c < 0) all_ge = false;
  }
  if (all_le && all_ge) return Cmp::equal;
  if (all_le) return Cmp::less;
  if (all_ge) return Cmp::greater;
  return Cmp::incomparable;
}

GVec sup(const GVec& a, const GVec& b) {
  check_dim(a, b);
  std::vector<Rat> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return GVec(std::move(r));
}

GVec inf(const GVec& a, const GVec& b) {
  check_dim(a, b);
  std::vector<Rat> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return GVec(std::move(r));
}

GVec operator+(const GVec& a, const GVec& b) {
  check_dim(a, b);
  std::vector<Rat> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return GVec(std::move(r));
}

GVec operator-(const GVec& a, const GVec& b) {
  check_dim(a, b);
  std::vector<Rat> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return GVec(std::move(r));
}

GVec operator-(const GVec& a) {
  std::vector<Rat> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return GVec(std::move(r));
}

std::string LexElem::str() const {
  std::ostringstream os;
  os << "(" << h << ",[";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) os << ",";
    os << g[i];
  }
  os << "])";
  return os.str();
}

Cmp compare(const LexElem& a, const LexElem& b) {
  if (a.h < b.h) {
    check_dim(a.g, b.g);
    return Cmp::less;
  }
  if (a.h > b.h) {
    check_dim(a.g, b.g);
    return Cmp::greater;
  }
  return compare(a.g, b.g);
}

LexElem sup(const LexElem& a, const LexElem& b) {
  if (a.h != b.h) {
    check_dim(a.g, b.g);
    return a.h > b.h ? a : b;
  }
  return LexElem(a.h, sup(a.g, b.g));
}

LexElem inf(const LexElem& a, const LexElem& b) {
  if (a.h != b.h) {
    check_dim(a.g, b.g);
    return a.h < b.h ? a : b;
  }
  return LexElem(a.h, inf(a.g, b.g));
}

LexElem operator+(const LexElem& a, const LexElem& b) { return LexElem(a.h + b.h, a.g + b.g); }
LexElem operator-(const LexElem& a, const LexElem& b) { return LexElem(a.h - b.h, a.g - b.g); }
LexElem operator-(const LexElem& a) { return LexElem(-a.h, -a.g); }

} // namespace lexspec
