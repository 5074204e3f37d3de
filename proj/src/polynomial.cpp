#include "perfcol/polynomial.hpp"

namespace perfcol {

SturmSequence::SturmSequence(const Polynomial<BigRational>& p) {
  if (p.is_zero()) throw InternalError("Sturm sequence of the zero polynomial");
  const auto g = monic_gcd(p, p.derivative());
  Polynomial<BigRational> sf = g.degree() > 0 ? divmod(p, g).first : p;
  chain_.push_back(sf);
  if (sf.degree() < 1) return;
  chain_.push_back(sf.derivative());
  while (chain_.back().degree() > 0) {
    auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

int SturmSequence::variations(const BigRational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

namespace {

void bisect(const SturmSequence& sturm, const Polynomial<BigInt>& p, const BigInt& lo, const BigInt& hi,
            std::vector<BigInt>& out) {
  // Invariant: looking for integer roots in (lo, hi].
  if (sturm.count_roots(BigRational(lo), BigRational(hi)) == 0) return;
  if (hi - lo == 1) {
    if (p(hi) == 0) out.push_back(hi);
    return;
  }
  BigInt mid = lo + (hi - lo) / 2;
  bisect(sturm, p, lo, mid, out);
  bisect(sturm, p, mid, hi, out);
}

}  // namespace

std::vector<BigInt> integer_roots_in(const Polynomial<BigInt>& p, const BigInt& lo, const BigInt& hi) {
  std::vector<BigInt> roots;
  if (p.degree() < 1 || hi < lo) return roots;
  SturmSequence sturm(p.cast<BigRational>());
  bisect(sturm, p, lo - 1, hi, roots);
  return roots;
}

}  // namespace perfcol
