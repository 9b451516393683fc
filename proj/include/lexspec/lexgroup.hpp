#ifndef LEXSPEC_LEXGROUP_HPP
#define LEXSPEC_LEXGROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lexspec/rat.hpp"

namespace lexspec {

/** Outcome of comparing two elements of a partially ordered set. */
enum class Cmp { less, equal, greater, incomparable };

/** Element of the direct power Q^m with the pointwise order, m >= 1. */
class GVec {
public:
  GVec() = default;
  explicit GVec(std::vector<Rat> entries) : e_(std::move(entries)) {}
  static GVec zeros(std::size_t m) { return GVec(std::vector<Rat>(m, Rat(0))); }

  std::size_t size() const { return e_.size(); }
  const Rat& operator[](std::size_t i) const { return e_[i]; }
  Rat& operator[](std::size_t i) { return e_[i]; }
  const std::vector<Rat>& entries() const { return e_; }

  bool operator==(const GVec& o) const { return e_ == o.e_; }

private:
  std::vector<Rat> e_;
};

/** Pointwise comparison in Q^m; incomparable when coordinates disagree in
    direction. Throws DimensionError on length mismatch. */
Cmp compare(const GVec& a, const GVec& b);
GVec sup(const GVec& a, const GVec& b);
GVec inf(const GVec& a, const GVec& b);
GVec operator+(const GVec& a, const GVec& b);
GVec operator-(const GVec& a, const GVec& b);
GVec operator-(const GVec& a);

/** Element (h, g) of the lexicographic product Z lex Q^m. The first
    coordinate decides the order; ties fall through to the pointwise order
    on the second. The result is a lattice order because Z is a chain. */
struct LexElem {
  std::int64_t h = 0;
  GVec g;

  LexElem() = default;
  LexElem(std::int64_t h_, GVec g_) : h(h_), g(std::move(g_)) {}
  static LexElem zero(std::size_t m) { return LexElem(0, GVec::zeros(m)); }

  std::size_t dim() const { return g.size(); }
  bool operator==(const LexElem& o) const { return h == o.h && g == o.g; }
  std::string str() const;
};

Cmp compare(const LexElem& a, const LexElem& b);
LexElem sup(const LexElem& a, const LexElem& b);
LexElem inf(const LexElem& a, const LexElem& b);
LexElem operator+(const LexElem& a, const LexElem& b);
LexElem operator-(const LexElem& a, const LexElem& b);
LexElem operator-(const LexElem& a);

inline bool leq(const LexElem& a, const LexElem& b) {
  Cmp c = compare(a, b);
  return c == Cmp::less || c == Cmp::equal;
}
inline bool geq(const LexElem& a, const LexElem& b) { return leq(b, a); }

} // namespace lexspec

#endif
